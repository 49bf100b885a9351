#pragma once

// Arithmetic in R = Q[t, t^-1, u | u^2 = t^2 + 4t], its derivation algebra
// Der(R) = R*D with D = (t+2) d/du + u d/dt, the Witt basis
// d_n = t^n u D, d1_n = t^n D, and the companion ring S = Q[s, s^-1, (s-1)^-1].

#include "threepv/rational.hpp"
#include "threepv/sparse.hpp"

#include <compare>
#include <string>
#include <vector>

namespace threepv::ring {

struct RMonomial {
  int tpow = 0;
  int upow = 0;  // 0 or 1 in R; any nonnegative value in the free ring
  auto operator<=>(const RMonomial&) const = default;
};

std::string monomial_name(const RMonomial& m);

/// Element of R in canonical form: u-powers are 0 or 1.
class RRingElem {
 public:
  RRingElem() = default;
  static RRingElem constant(const Rational& c);
  static RRingElem monomial(int tpow, int upow, const Rational& c = 1);
  static RRingElem t_pow(int k) { return monomial(k, 0); }
  static RRingElem u_t_pow(int k) { return monomial(k, 1); }
  /// P(t) = t^2 + 4t.
  static RRingElem P();

  const SparseVector<RMonomial>& vec() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  Rational coeff(int tpow, int upow) const { return v_.coeff({tpow, upow}); }

  /// Pure-t part (coefficients of t^k) and u-part (coefficients of t^k u).
  RRingElem t_part() const;
  RRingElem u_part() const;

  RRingElem& operator+=(const RRingElem& o);
  RRingElem& operator-=(const RRingElem& o);
  RRingElem& operator*=(const Rational& c);
  friend RRingElem operator+(RRingElem a, const RRingElem& b) { return a += b; }
  friend RRingElem operator-(RRingElem a, const RRingElem& b) { return a -= b; }
  friend RRingElem operator-(RRingElem a) { return a *= Rational(-1); }
  friend RRingElem operator*(const Rational& c, RRingElem a) { return a *= c; }
  friend RRingElem operator*(const RRingElem& a, const RRingElem& b);
  friend bool operator==(const RRingElem&, const RRingElem&) = default;

  std::string to_string() const;

 private:
  void add_term(int tpow, int upow, const Rational& c);
  SparseVector<RMonomial> v_;
};

RRingElem r_mul(const RRingElem& a, const RRingElem& b);

/// D = (t+2) d/du + u d/dt.
RRingElem apply_D(const RRingElem& f);

/// coeff * D.
struct RDerivation {
  RRingElem coeff;
  friend bool operator==(const RDerivation&, const RDerivation&) = default;
};

/// [A, B] = (c_A D(c_B) - c_B D(c_A)) D.
RDerivation der_commutator(const RDerivation& a, const RDerivation& b);

enum class WittKind { D, D1 };

struct WittBasis {
  WittKind kind = WittKind::D;
  int mode = 0;
  auto operator<=>(const WittBasis&) const = default;
};

std::string witt_name(const WittBasis& b);

using WittVector = SparseVector<WittBasis>;

/// Basis derivation: d_n = t^n u D, d1_n = t^n D.
RDerivation basis_derivation(const WittBasis& b);
RDerivation der_compose(const WittVector& w);
WittVector der_decompose(const RDerivation& a);

/// der_decompose(der_commutator(basis_i, basis_j)).
WittVector witt_bracket_geometric(const WittBasis& i, const WittBasis& j);

// ---------------------------------------------------------------------------
// Superelliptic derivations in the free ring Q[t, t^-1, u].

/// Laurent in t, polynomial in u, no relation imposed.
class FreeRingElem {
 public:
  FreeRingElem() = default;
  static FreeRingElem monomial(int tpow, int upow, const Rational& c = 1);
  /// Embeds a polynomial in t given by coefficients of t^0, t^1, ...
  static FreeRingElem from_t_poly(const std::vector<Rational>& coeffs);

  const SparseVector<RMonomial>& vec() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  FreeRingElem d_dt() const;
  FreeRingElem d_du() const;

  FreeRingElem& operator+=(const FreeRingElem& o);
  FreeRingElem& operator-=(const FreeRingElem& o);
  friend FreeRingElem operator+(FreeRingElem a, const FreeRingElem& b) { return a += b; }
  friend FreeRingElem operator-(FreeRingElem a, const FreeRingElem& b) { return a -= b; }
  friend FreeRingElem operator*(const FreeRingElem& a, const FreeRingElem& b);
  friend FreeRingElem operator*(const Rational& c, FreeRingElem a);
  friend bool operator==(const FreeRingElem&, const FreeRingElem&) = default;

  std::string to_string() const;

 private:
  SparseVector<RMonomial> v_;
};

struct SuperellipticResult {
  bool pass = false;
  /// D1(u^m - P), expected 0.
  FreeRingElem d1_image;
  /// D2(u^m - P) - P'(u^m - P), expected 0.
  FreeRingElem d2_remainder;
};

/// Checks D1(u^m - P) = 0 and D2(u^m - P) = P'(u^m - P) for
/// D1 = (P'/m) d/du + u^(m-1) d/dt, D2 = (u P'/m) d/du + P d/dt.
/// Throws std::invalid_argument for m < 2 or P = 0.
SuperellipticResult superelliptic_check(int m, const std::vector<Rational>& p_coeffs);

// ---------------------------------------------------------------------------
// S = Q[s, s^-1, (s-1)^-1] and the isomorphism with R.

/// num(s) / (s^a (s-1)^b), with common factors of s and (s-1) divided out.
class SRingElem {
 public:
  SRingElem() = default;
  SRingElem(std::vector<Rational> num, int a, int b);
  static SRingElem constant(const Rational& c);
  static SRingElem s();
  static SRingElem s_inv();
  static SRingElem s_minus_one_inv();

  const std::vector<Rational>& num() const { return num_; }
  int a() const { return a_; }
  int b() const { return b_; }
  bool is_zero() const { return num_.empty(); }

  friend SRingElem operator+(const SRingElem& x, const SRingElem& y);
  friend SRingElem operator-(const SRingElem& x, const SRingElem& y);
  friend SRingElem operator*(const SRingElem& x, const SRingElem& y);
  friend bool operator==(const SRingElem&, const SRingElem&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> num_;  // ascending powers of s, no trailing zeros
  int a_ = 0;
  int b_ = 0;
};

/// f(t) = s^-1 (s-1)^2.
SRingElem iso_image_t();
/// f(u) = s - s^-1.
SRingElem iso_image_u();
/// phi: S -> R with phi(s) = (t+2+u)/2, phi(s^-1) = (t+2-u)/2, phi((s-1)^-1) = (t^-1 u - 1)/2.
RRingElem iso_inverse(const SRingElem& x);

struct IsoCheckResult {
  bool pass = false;
  std::vector<std::string> failures;
};

IsoCheckResult iso_check();

}  // namespace threepv::ring

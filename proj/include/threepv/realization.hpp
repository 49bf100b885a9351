#pragma once

// Operator realizations on the Fock space: tau of the affine algebra, pi of the
// Witt generators, pi of the Virasoro generators, and the translation of
// lambda-brackets into families of mode commutators.
//
// Field convention: a field F(z) = sum_n F_(n) z^(-n-1); FieldExpr::mode(n)
// returns F_(n). Fields of weight 0 (alpha*, alpha1*) are sums a*_n z^(-n),
// so their mode n is still a*_n but derivatives pick up the shifted weight.

#include "threepv/fock.hpp"
#include "threepv/liealg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace threepv::realization {

using fock::Family;
using fock::FockState;
using fock::ModeOperator;
using fock::RepParams;

using Poly = std::map<int, Rational>;  // Laurent polynomial in z: power -> coefficient

Poly P_poly();       // z^2 + 4z
Poly dP_poly();      // 2z + 4
Poly d2P_poly();     // 2
Poly poly_mul(const Poly& a, const Poly& b);

ModeOperator op_sum(const ModeOperator& a, const ModeOperator& b);
ModeOperator op_scale(const ModeOperator& a, const Rational& c);
ModeOperator op_identity(const Rational& c);

class FieldExpr {
 public:
  using ModeFn = std::function<ModeOperator(int)>;
  FieldExpr() = default;
  FieldExpr(ModeFn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}

  ModeOperator mode(int n) const;
  const std::string& label() const { return label_; }
  bool empty() const { return !fn_; }

  /// A multiple of the identity: (Q)_(n) = q_(-n-1).
  static FieldExpr constant(const Poly& q, std::string label = "const");

  struct Factor {
    Family family;
    int derivatives = 0;
  };
  /// :d^k1 F1 ... d^kr Fr: for oscillator fields (weights: a, a1, b, b1 are 1; a*, a1* are 0).
  static FieldExpr normal_product(const std::vector<Factor>& factors, std::string label = "");

  friend FieldExpr operator+(const FieldExpr& a, const FieldExpr& b);
  friend FieldExpr operator*(const Rational& c, const FieldExpr& a);
  friend FieldExpr operator*(const Poly& q, const FieldExpr& a);
  /// Field derivative: (dF)_(n) = -n F_(n-1).
  FieldExpr derivative() const;

 private:
  ModeFn fn_;
  std::string label_;
};

struct VirParams {
  Rational nu, zeta, gamma1, mu, gamma2, gammaP;
  /// nu = 1/(2 kappa0), zeta = mu = gamma2 = 0, gamma1 = gammaP = -1/(4 kappa0).
  static VirParams standard(const Rational& kappa0);
};

/// chi0 = kappa0 + 4 delta_{r,0}.
Rational chi0(const RepParams& p);

/// Mode m of tau(gen)(z); gen is one of e, f, h, e1, f1, h1.
ModeOperator tau_mode(liealg::Symbol gen, int m, const RepParams& p);
FieldExpr tau_field(liealg::Symbol gen, const RepParams& p);

/// Explicit double-sum mode formulas for pi(d_m), pi(d1_m).
ModeOperator pi_witt_mode(liealg::WittKind kind, int m);
/// pi(d)(z), pi(d1)(z) assembled from normal-ordered field products.
FieldExpr pi_witt_field(liealg::WittKind kind);
/// Field with modes n -> pi_witt_mode(kind, n).
FieldExpr pi_witt_modes_field(liealg::WittKind kind);

/// pi(dbar)(z), pi(dbar1)(z) as fields in the z^(-n-1) convention.
FieldExpr pi_vir_bar_field(liealg::WittKind kind, const VirParams& vp);
/// Weight-2 mode: pi(dbar)_m is the coefficient of z^(-m-2).
ModeOperator pi_vir_bar_mode(liealg::WittKind kind, int m, const VirParams& vp);
/// Realized Virasoro generator: bold d_n = -dbar_(n-1).
ModeOperator pi_vir_mode(liealg::WittKind kind, int n, const VirParams& vp);

/// pi(cbar) = -(delta_{r,0}/3 + (2/3) nu^2 kappa0^2 - 2 zeta^2 kappa0).
Rational central_charge(int r, const VirParams& vp, const Rational& kappa0);
Rational central_charge(int r);

/// [a_lambda b] = sum_j lambda^j c_j, with c_j given as fields.
struct LambdaBracket {
  FieldExpr a, b;
  std::vector<std::pair<int, FieldExpr>> coeffs;
  std::string label;
};

/// Generalized binomial m(m-1)...(m-j+1)/j!.
Rational binom(int m, int j);

/// [A_(m), B_(n)] = sum_j binom(m, j) j! (c_j)_(m+n-j), returned as the right-hand side.
ModeOperator lambda_to_modes(const LambdaBracket& lb, int m, int n);

struct ModeCheck {
  bool pass = false;
  FockState lhs, rhs;
  FockState residual() const { return lhs - rhs; }
};

/// Compares [a_(m), b_(n)] s with the translated right-hand side.
ModeCheck check_lambda(const LambdaBracket& lb, int m, int n, const FockState& s, const RepParams& p);

/// Central substitution for the Virasoro suite.
struct VirCentral {
  Rational c1, c2;
};

/// Maps a LieVector of the given algebra to its realized operator, with
/// central symbols replaced by scalars.
ModeOperator realize_affine(const liealg::LieVector& v, const RepParams& p);
ModeOperator realize_vir(const liealg::LieVector& v, const VirParams& vp, const VirCentral& central);

/// Named operator handle, resolved against parameters by build_operator.
enum class OpFamily { TauE, TauF, TauH, TauE1, TauF1, TauH1, PiD, PiD1, PiVirD, PiVirD1, RawOsc, RawHeis };

struct OperatorId {
  OpFamily family = OpFamily::TauE;
  int mode = 0;
  Family raw = Family::A;  // for RawOsc / RawHeis
};

std::string operator_name(const OperatorId& id);
/// PiVir families throw std::invalid_argument when kappa0 = 0.
ModeOperator build_operator(const OperatorId& id, const RepParams& p);

/// Brackets of Prop. on the Witt realization in lambda form (incl. the delta_{r,0} terms).
LambdaBracket witt_lambda(liealg::WittKind a, liealg::WittKind b, int r);

/// Lemma items (1), (3), (10), (14) with 1_0 acting as kappa0.
LambdaBracket pairs_item(int item, const Rational& kappa0);

}  // namespace threepv::realization

#include "threepv/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace threepv::ring {

std::string monomial_name(const RMonomial& m) {
  std::string out;
  if (m.tpow != 0) out += "t^" + std::to_string(m.tpow);
  if (m.upow == 1) out += out.empty() ? "u" : "*u";
  if (m.upow > 1) out += (out.empty() ? "u^" : "*u^") + std::to_string(m.upow);
  return out;
}

// ---------------------------------------------------------------------------
// RRingElem

RRingElem RRingElem::constant(const Rational& c) { return monomial(0, 0, c); }

RRingElem RRingElem::monomial(int tpow, int upow, const Rational& c) {
  RRingElem r;
  r.add_term(tpow, upow, c);
  return r;
}

RRingElem RRingElem::P() { return t_pow(2) + Rational(4) * t_pow(1); }

void RRingElem::add_term(int tpow, int upow, const Rational& c) {
  if (upow < 0) throw std::invalid_argument("negative u-power");
  // u^2 = t^2 + 4t
  if (upow >= 2) {
    add_term(tpow + 2, upow - 2, c);
    add_term(tpow + 1, upow - 2, 4 * c);
    return;
  }
  v_.add({tpow, upow}, c);
}

RRingElem RRingElem::t_part() const {
  RRingElem r;
  for (const auto& [m, c] : v_.terms())
    if (m.upow == 0) r.v_.add(m, c);
  return r;
}

RRingElem RRingElem::u_part() const {
  RRingElem r;
  for (const auto& [m, c] : v_.terms())
    if (m.upow == 1) r.v_.add(m, c);
  return r;
}

RRingElem& RRingElem::operator+=(const RRingElem& o) {
  v_ += o.v_;
  return *this;
}
RRingElem& RRingElem::operator-=(const RRingElem& o) {
  v_ -= o.v_;
  return *this;
}
RRingElem& RRingElem::operator*=(const Rational& c) {
  v_ *= c;
  return *this;
}

RRingElem operator*(const RRingElem& a, const RRingElem& b) {
  RRingElem r;
  for (const auto& [ma, ca] : a.v_.terms())
    for (const auto& [mb, cb] : b.v_.terms()) r.add_term(ma.tpow + mb.tpow, ma.upow + mb.upow, ca * cb);
  return r;
}

std::string RRingElem::to_string() const { return v_.format(monomial_name); }

RRingElem r_mul(const RRingElem& a, const RRingElem& b) { return a * b; }

RRingElem apply_D(const RRingElem& f) {
  RRingElem r;
  for (const auto& [m, c] : f.vec().terms()) {
    const int k = m.tpow;
    if (m.upow == 0) {
      // D(t^k) = k t^(k-1) u
      r += RRingElem::monomial(k - 1, 1, c * k);
    } else {
      // D(t^k u) = k t^(k-1) u^2 + (t+2) t^k = (k+1) t^(k+1) + (4k+2) t^k
      r += RRingElem::monomial(k + 1, 0, c * (k + 1));
      r += RRingElem::monomial(k, 0, c * (4 * k + 2));
    }
  }
  return r;
}

RDerivation der_commutator(const RDerivation& a, const RDerivation& b) {
  return {a.coeff * apply_D(b.coeff) - b.coeff * apply_D(a.coeff)};
}

std::string witt_name(const WittBasis& b) {
  return (b.kind == WittKind::D ? "d_" : "d1_") + std::to_string(b.mode);
}

RDerivation basis_derivation(const WittBasis& b) {
  return {RRingElem::monomial(b.mode, b.kind == WittKind::D ? 1 : 0)};
}

RDerivation der_compose(const WittVector& w) {
  RDerivation out;
  for (const auto& [b, c] : w.terms()) out.coeff += c * basis_derivation(b).coeff;
  return out;
}

WittVector der_decompose(const RDerivation& a) {
  WittVector w;
  for (const auto& [m, c] : a.coeff.vec().terms())
    w.add({m.upow == 1 ? WittKind::D : WittKind::D1, m.tpow}, c);
  return w;
}

WittVector witt_bracket_geometric(const WittBasis& i, const WittBasis& j) {
  return der_decompose(der_commutator(basis_derivation(i), basis_derivation(j)));
}

// ---------------------------------------------------------------------------
// FreeRingElem

FreeRingElem FreeRingElem::monomial(int tpow, int upow, const Rational& c) {
  if (upow < 0) throw std::invalid_argument("negative u-power");
  FreeRingElem r;
  r.v_.add({tpow, upow}, c);
  return r;
}

FreeRingElem FreeRingElem::from_t_poly(const std::vector<Rational>& coeffs) {
  FreeRingElem r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) r.v_.add({static_cast<int>(k), 0}, coeffs[k]);
  return r;
}

FreeRingElem FreeRingElem::d_dt() const {
  FreeRingElem r;
  for (const auto& [m, c] : v_.terms()) r.v_.add({m.tpow - 1, m.upow}, c * m.tpow);
  return r;
}

FreeRingElem FreeRingElem::d_du() const {
  FreeRingElem r;
  for (const auto& [m, c] : v_.terms())
    if (m.upow > 0) r.v_.add({m.tpow, m.upow - 1}, c * m.upow);
  return r;
}

FreeRingElem& FreeRingElem::operator+=(const FreeRingElem& o) {
  v_ += o.v_;
  return *this;
}
FreeRingElem& FreeRingElem::operator-=(const FreeRingElem& o) {
  v_ -= o.v_;
  return *this;
}

FreeRingElem operator*(const FreeRingElem& a, const FreeRingElem& b) {
  FreeRingElem r;
  for (const auto& [ma, ca] : a.v_.terms())
    for (const auto& [mb, cb] : b.v_.terms()) r.v_.add({ma.tpow + mb.tpow, ma.upow + mb.upow}, ca * cb);
  return r;
}

FreeRingElem operator*(const Rational& c, FreeRingElem a) {
  a.v_ *= c;
  return a;
}

std::string FreeRingElem::to_string() const { return v_.format(monomial_name); }

SuperellipticResult superelliptic_check(int m, const std::vector<Rational>& p_coeffs) {
  if (m < 2) throw std::invalid_argument("superelliptic exponent must be >= 2");
  const FreeRingElem P = FreeRingElem::from_t_poly(p_coeffs);
  if (P.is_zero()) throw std::invalid_argument("P must be nonzero");
  const FreeRingElem dP = P.d_dt();
  const FreeRingElem u = FreeRingElem::monomial(0, 1);
  const FreeRingElem u_m1 = FreeRingElem::monomial(0, m - 1);
  const Rational inv_m = Rational(1, m);

  auto D1 = [&](const FreeRingElem& f) { return inv_m * (dP * f.d_du()) + u_m1 * f.d_dt(); };
  auto D2 = [&](const FreeRingElem& f) { return inv_m * (u * dP * f.d_du()) + P * f.d_dt(); };

  const FreeRingElem g = FreeRingElem::monomial(0, m) - P;
  SuperellipticResult res;
  res.d1_image = D1(g);
  res.d2_remainder = D2(g) - dP * g;
  res.pass = res.d1_image.is_zero() && res.d2_remainder.is_zero();
  return res;
}

// ---------------------------------------------------------------------------
// SRingElem

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_add(const Poly& a, const Poly& b, const Rational& sb) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sb * b[i];
  trim(r);
  return r;
}

Poly shift_up(const Poly& a, int k) {
  if (a.empty()) return {};
  Poly r(k, Rational(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Poly times_s_minus_one_pow(Poly a, int k) {
  const Poly lin{Rational(-1), Rational(1)};
  for (int i = 0; i < k; ++i) a = poly_mul(a, lin);
  return a;
}

Rational eval_at_one(const Poly& p) {
  Rational r = 0;
  for (const auto& c : p) r += c;
  return r;
}

// Exact division by (s - 1); caller guarantees p(1) = 0.
Poly divide_s_minus_one(const Poly& p) {
  Poly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size() - 1; i >= 1; --i) {
    carry += p[i];
    q[i - 1] = carry;
  }
  trim(q);
  return q;
}

}  // namespace

SRingElem::SRingElem(std::vector<Rational> num, int a, int b) : num_(std::move(num)), a_(a), b_(b) {
  if (a < 0 || b < 0) throw std::invalid_argument("SRingElem denominator exponents must be >= 0");
  normalize();
}

SRingElem SRingElem::constant(const Rational& c) { return SRingElem({c}, 0, 0); }
SRingElem SRingElem::s() { return SRingElem({0, 1}, 0, 0); }
SRingElem SRingElem::s_inv() { return SRingElem({1}, 1, 0); }
SRingElem SRingElem::s_minus_one_inv() { return SRingElem({1}, 0, 1); }

void SRingElem::normalize() {
  trim(num_);
  if (num_.empty()) {
    a_ = b_ = 0;
    return;
  }
  while (a_ > 0 && num_.front() == 0) {
    num_.erase(num_.begin());
    --a_;
  }
  while (b_ > 0 && eval_at_one(num_) == 0) {
    num_ = divide_s_minus_one(num_);
    --b_;
  }
}

SRingElem operator+(const SRingElem& x, const SRingElem& y) {
  const int A = std::max(x.a_, y.a_);
  const int B = std::max(x.b_, y.b_);
  Poly xn = times_s_minus_one_pow(shift_up(x.num_, A - x.a_), B - x.b_);
  Poly yn = times_s_minus_one_pow(shift_up(y.num_, A - y.a_), B - y.b_);
  return SRingElem(poly_add(xn, yn, 1), A, B);
}

SRingElem operator-(const SRingElem& x, const SRingElem& y) {
  return x + SRingElem::constant(-1) * y;
}

SRingElem operator*(const SRingElem& x, const SRingElem& y) {
  return SRingElem(poly_mul(x.num_, y.num_), x.a_ + y.a_, x.b_ + y.b_);
}

std::string SRingElem::to_string() const {
  if (num_.empty()) return "0";
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += threepv::to_string(num_[i]);
    if (i > 0) out += "*s^" + std::to_string(i);
  }
  out += ")";
  if (a_ > 0) out += " / s^" + std::to_string(a_);
  if (b_ > 0) out += " / (s-1)^" + std::to_string(b_);
  return out;
}

SRingElem iso_image_t() { return SRingElem({1, -2, 1}, 1, 0); }
SRingElem iso_image_u() { return SRingElem({-1, 0, 1}, 1, 0); }

RRingElem iso_inverse(const SRingElem& x) {
  const Rational half(1, 2);
  const RRingElem phi_s = half * (RRingElem::t_pow(1) + RRingElem::constant(2) + RRingElem::u_t_pow(0));
  const RRingElem phi_s_inv = half * (RRingElem::t_pow(1) + RRingElem::constant(2) - RRingElem::u_t_pow(0));
  const RRingElem phi_sm1_inv = half * (RRingElem::u_t_pow(-1) - RRingElem::constant(1));

  RRingElem num;
  RRingElem power = RRingElem::constant(1);
  for (const auto& c : x.num()) {
    num += c * power;
    power = power * phi_s;
  }
  for (int i = 0; i < x.a(); ++i) num = num * phi_s_inv;
  for (int i = 0; i < x.b(); ++i) num = num * phi_sm1_inv;
  return num;
}

IsoCheckResult iso_check() {
  IsoCheckResult res;
  const SRingElem ft = iso_image_t();
  const SRingElem fu = iso_image_u();
  const SRingElem rel = fu * fu - ft * ft - SRingElem::constant(4) * ft;
  if (!rel.is_zero()) res.failures.push_back("f(u)^2 - f(t)^2 - 4f(t) = " + rel.to_string());

  const RRingElem back_t = iso_inverse(ft);
  if (!(back_t == RRingElem::t_pow(1))) res.failures.push_back("phi(f(t)) - t = " + (back_t - RRingElem::t_pow(1)).to_string());
  const RRingElem back_u = iso_inverse(fu);
  if (!(back_u == RRingElem::u_t_pow(0))) res.failures.push_back("phi(f(u)) - u = " + (back_u - RRingElem::u_t_pow(0)).to_string());

  for (const auto& [name, inv_pair] :
       {std::pair{"s", std::pair{SRingElem::s(), SRingElem::s_inv()}},
        std::pair{"s-1", std::pair{SRingElem({-1, 1}, 0, 0), SRingElem::s_minus_one_inv()}}}) {
    const RRingElem prod = iso_inverse(inv_pair.first) * iso_inverse(inv_pair.second);
    if (!(prod == RRingElem::constant(1)))
      res.failures.push_back(std::string("phi(") + name + ")*phi(" + name + "^-1) - 1 = " +
                             (prod - RRingElem::constant(1)).to_string());
  }
  res.pass = res.failures.empty();
  return res;
}

}  // namespace threepv::ring

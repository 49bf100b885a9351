#include "threepv/realization.hpp"

#include <stdexcept>

namespace threepv::realization {

using liealg::Symbol;
using liealg::WittKind;

Poly P_poly() { return {{2, Rational(1)}, {1, Rational(4)}}; }
Poly dP_poly() { return {{1, Rational(2)}, {0, Rational(4)}}; }
Poly d2P_poly() { return {{0, Rational(2)}}; }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

Poly scaled(Poly q, const Rational& c) {
  for (auto& [k, v] : q) v *= c;
  return q;
}

// x (x-1) ... (x-d+1)
Rational falling(long x, int d) {
  Rational out = 1;
  for (int i = 0; i < d; ++i) out *= Rational(x - i);
  return out;
}

int weight(Family f) { return (f == Family::AS || f == Family::A1S) ? 0 : 1; }

}  // namespace

ModeOperator op_sum(const ModeOperator& a, const ModeOperator& b) {
  ModeOperator out = a;
  out.products.insert(out.products.end(), b.products.begin(), b.products.end());
  out.identity += b.identity;
  out.label = a.label.empty() ? b.label : (b.label.empty() ? a.label : a.label + " + " + b.label);
  return out;
}

ModeOperator op_scale(const ModeOperator& a, const Rational& c) {
  ModeOperator out;
  out.label = a.label;
  if (c == 0) return out;
  out.identity = a.identity * c;
  for (const auto& p : a.products) {
    fock::ModeProduct q = p;
    if (c != 1) q.coeff = [f = p.coeff, c](const std::vector<int>& t) -> Rational { return c * f(t); };
    out.products.push_back(std::move(q));
  }
  return out;
}

ModeOperator op_identity(const Rational& c) {
  ModeOperator out;
  out.identity = c;
  out.label = to_string(c);
  return out;
}

ModeOperator FieldExpr::mode(int n) const {
  if (!fn_) throw std::logic_error("empty field expression");
  return fn_(n);
}

FieldExpr FieldExpr::constant(const Poly& q, std::string label) {
  return FieldExpr(
      [q](int n) {
        const auto it = q.find(-n - 1);
        return op_identity(it == q.end() ? Rational(0) : it->second);
      },
      std::move(label));
}

FieldExpr FieldExpr::normal_product(const std::vector<Factor>& factors, std::string label) {
  if (factors.empty()) throw std::invalid_argument("normal product needs a factor");
  int shift = 0;
  std::vector<Family> fams;
  for (const auto& f : factors) {
    if (f.derivatives < 0) throw std::invalid_argument("negative derivative order");
    shift += weight(f.family) + f.derivatives;
    fams.push_back(f.family);
  }
  if (label.empty()) {
    label = ":";
    for (const auto& f : factors) label += std::string(f.derivatives, 'D') + fock::family_name(f.family);
    label += ":";
  }
  const std::string name = label;
  return FieldExpr(
      [factors, fams, shift, label](int n) {
        ModeOperator op;
        op.label = label + "_(" + std::to_string(n) + ")";
        op.products.push_back({fams, n + 1 - shift,
                               [factors](const std::vector<int>& idx) {
                                 Rational c = 1;
                                 for (std::size_t i = 0; i < factors.size(); ++i)
                                   if (factors[i].derivatives > 0)
                                     c *= falling(-static_cast<long>(idx[i]) - weight(factors[i].family),
                                                  factors[i].derivatives);
                                 return c;
                               },
                               op.label});
        return op;
      },
      name);
}

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr([a, b](int n) { return op_sum(a.mode(n), b.mode(n)); }, a.label() + " + " + b.label());
}

FieldExpr operator*(const Rational& c, const FieldExpr& a) {
  return FieldExpr([a, c](int n) { return op_scale(a.mode(n), c); }, to_string(c) + "*" + a.label());
}

FieldExpr operator*(const Poly& q, const FieldExpr& a) {
  return FieldExpr(
      [a, q](int n) {
        ModeOperator out;
        for (const auto& [p, c] : q) out = op_sum(out, op_scale(a.mode(n + p), c));
        return out;
      },
      "poly*" + a.label());
}

FieldExpr FieldExpr::derivative() const {
  const FieldExpr self = *this;
  return FieldExpr([self](int n) { return op_scale(self.mode(n - 1), Rational(-n)); }, "D(" + label_ + ")");
}

VirParams VirParams::standard(const Rational& kappa0) {
  if (kappa0 == 0) throw std::invalid_argument("kappa0 must be nonzero");
  VirParams v;
  v.nu = 1 / (2 * kappa0);
  v.nu.canonicalize();
  v.gamma1 = -1 / (4 * kappa0);
  v.gamma1.canonicalize();
  v.gammaP = v.gamma1;
  v.zeta = v.mu = v.gamma2 = 0;
  return v;
}

Rational chi0(const RepParams& p) { return p.kappa0 + (p.r == 0 ? 4 : 0); }

namespace {

using F = FieldExpr;
using Fa = FieldExpr::Factor;

F np(std::initializer_list<Fa> fs) { return F::normal_product(std::vector<Fa>(fs)); }

}  // namespace

FieldExpr tau_field(Symbol gen, const RepParams& p) {
  const Rational x0 = chi0(p);
  const Poly P = P_poly();
  switch (gen) {
    case Symbol::f:
      return Rational(-1) * np({{Family::A}});
    case Symbol::f1:
      return Rational(-1) * np({{Family::A1}});
    case Symbol::h:
      return Rational(2) * np({{Family::A}, {Family::AS}}) + Rational(2) * np({{Family::A1}, {Family::A1S}}) +
             np({{Family::B}});
    case Symbol::h1:
      return Rational(2) * np({{Family::A1}, {Family::AS}}) + P * (Rational(2) * np({{Family::A}, {Family::A1S}})) +
             np({{Family::B1}});
    case Symbol::e:
      return np({{Family::A}, {Family::AS}, {Family::AS}}) + P * np({{Family::A}, {Family::A1S}, {Family::A1S}}) +
             Rational(2) * np({{Family::A1}, {Family::AS}, {Family::A1S}}) + np({{Family::B}, {Family::AS}}) +
             np({{Family::B1}, {Family::A1S}}) + x0 * np({{Family::AS, 1}});
    case Symbol::e1:
      return np({{Family::A1}, {Family::AS}, {Family::AS}}) +
             P * (np({{Family::A1}, {Family::A1S}, {Family::A1S}}) +
                  Rational(2) * np({{Family::A}, {Family::AS}, {Family::A1S}})) +
             np({{Family::B1}, {Family::AS}}) + P * np({{Family::B}, {Family::A1S}}) +
             x0 * (P * np({{Family::A1S, 1}}) + Poly{{1, Rational(1)}, {0, Rational(2)}} * np({{Family::A1S}}));
    default:
      throw std::invalid_argument("tau is defined on e, f, h, e1, f1, h1");
  }
}

ModeOperator tau_mode(Symbol gen, int m, const RepParams& p) {
  ModeOperator op = tau_field(gen, p).mode(m);
  op.label = "tau(" + liealg::gen_name({liealg::Algebra::Affine, gen, m}) + ")";
  return op;
}

ModeOperator pi_witt_mode(WittKind kind, int m) {
  ModeOperator op;
  auto add = [&](Family a, Family b, int total, std::function<Rational(const std::vector<int>&)> c) {
    op.products.push_back({{a, b}, total, std::move(c), ""});
  };
  if (kind == WittKind::d) {
    add(Family::A, Family::AS, m + 1, [m](const std::vector<int>& t) { return Rational(t[0] - 1 - m); });
    add(Family::A, Family::AS, m, [m](const std::vector<int>& t) { return Rational(4 * (t[0] - m)); });
    add(Family::A1, Family::A1S, m + 1, [m](const std::vector<int>& t) { return Rational(t[0] - m); });
    add(Family::A1, Family::A1S, m, [m](const std::vector<int>& t) { return Rational(4 * t[0] - 4 * m + 2); });
    op.label = "pi(d_" + std::to_string(m) + ")";
  } else {
    add(Family::A1, Family::AS, m - 1, [m](const std::vector<int>& t) { return Rational(t[0] + 1 - m); });
    add(Family::A, Family::A1S, m + 1, [m](const std::vector<int>& t) { return Rational(t[0] - m); });
    add(Family::A, Family::A1S, m, [m](const std::vector<int>& t) { return Rational(4 * t[0] - 4 * m + 2); });
    op.label = "pi(d1_" + std::to_string(m) + ")";
  }
  for (auto& pr : op.products) pr.label = op.label;
  return op;
}

FieldExpr pi_witt_field(WittKind kind) {
  const Poly P = P_poly();
  if (kind == WittKind::d)
    return P * (np({{Family::A}, {Family::AS, 1}}) + np({{Family::A1}, {Family::A1S, 1}})) +
           scaled(dP_poly(), frac(1, 2)) * np({{Family::A1}, {Family::A1S}});
  return np({{Family::A1}, {Family::AS, 1}}) + P * np({{Family::A}, {Family::A1S, 1}}) +
         scaled(dP_poly(), frac(1, 2)) * np({{Family::A}, {Family::A1S}});
}

FieldExpr pi_witt_modes_field(WittKind kind) {
  return FieldExpr([kind](int n) { return pi_witt_mode(kind, n); }, kind == WittKind::d ? "pi(d)" : "pi(d1)");
}

FieldExpr pi_vir_bar_field(WittKind kind, const VirParams& vp) {
  const Poly P = P_poly();
  const F bb = np({{Family::B}, {Family::B}});
  const F b1b1 = np({{Family::B1}, {Family::B1}});
  if (kind == WittKind::d) {
    F out = pi_witt_modes_field(kind);
    if (vp.gammaP != 0) out = out + P * (vp.gammaP * bb);
    if (vp.mu != 0) out = out + vp.mu * np({{Family::B, 1}});
    if (vp.gamma1 != 0) out = out + vp.gamma1 * b1b1;
    if (vp.gamma2 != 0) out = out + vp.gamma2 * np({{Family::B}});
    return out;
  }
  F out = pi_witt_modes_field(kind);
  if (vp.nu != 0) out = out + vp.nu * np({{Family::B}, {Family::B1}});
  if (vp.zeta != 0) out = out + vp.zeta * np({{Family::B1, 1}});
  return out;
}

ModeOperator pi_vir_bar_mode(WittKind kind, int m, const VirParams& vp) {
  // coefficient of z^(-m-2) is mode m+1 in the z^(-n-1) convention
  return pi_vir_bar_field(kind, vp).mode(m + 1);
}

ModeOperator pi_vir_mode(WittKind kind, int n, const VirParams& vp) {
  ModeOperator op = op_scale(pi_vir_bar_mode(kind, n - 1, vp), Rational(-1));
  op.label = std::string(kind == WittKind::d ? "pi(D_" : "pi(D1_") + std::to_string(n) + ")";
  return op;
}

Rational central_charge(int r, const VirParams& vp, const Rational& kappa0) {
  Rational c = Rational(r == 0 ? 1 : 0) / 3 + Rational(2, 3) * vp.nu * vp.nu * kappa0 * kappa0 -
               2 * vp.zeta * vp.zeta * kappa0;
  c.canonicalize();
  return -c;
}

Rational central_charge(int r) {
  if (r != 0 && r != 1) throw std::invalid_argument("r must be 0 or 1");
  return central_charge(r, VirParams::standard(1), 1);
}

Rational binom(int m, int j) {
  if (j < 0) return 0;
  Rational out = 1;
  for (int i = 0; i < j; ++i) out = out * Rational(m - i) / Rational(i + 1);
  out.canonicalize();
  return out;
}

ModeOperator lambda_to_modes(const LambdaBracket& lb, int m, int n) {
  ModeOperator out;
  for (const auto& [j, c] : lb.coeffs) {
    Rational w = binom(m, j);
    for (int i = 2; i <= j; ++i) w *= i;
    if (w != 0) out = op_sum(out, op_scale(c.mode(m + n - j), w));
  }
  out.label = lb.label;
  return out;
}

ModeCheck check_lambda(const LambdaBracket& lb, int m, int n, const FockState& s, const RepParams& p) {
  const ModeOperator A = lb.a.mode(m), B = lb.b.mode(n);
  ModeCheck out;
  out.lhs = fock::apply(A, fock::apply(B, s, p), p) - fock::apply(B, fock::apply(A, s, p), p);
  out.rhs = fock::apply(lambda_to_modes(lb, m, n), s, p);
  out.pass = (out.lhs == out.rhs);
  return out;
}

ModeOperator realize_affine(const liealg::LieVector& v, const RepParams& p) {
  ModeOperator out;
  for (const auto& [g, c] : v.terms()) {
    if (g.algebra != liealg::Algebra::Affine) throw std::invalid_argument("realize_affine takes affine vectors");
    if (g.symbol == Symbol::w0)
      out.identity += c * chi0(p);
    else if (g.symbol == Symbol::w1)
      continue;  // omega1 acts as chi1 = 0
    else
      out = op_sum(out, op_scale(tau_mode(g.symbol, g.mode, p), c));
  }
  return out;
}

ModeOperator realize_vir(const liealg::LieVector& v, const VirParams& vp, const VirCentral& central) {
  ModeOperator out;
  for (const auto& [g, c] : v.terms()) {
    switch (g.symbol) {
      case Symbol::D: out = op_sum(out, op_scale(pi_vir_mode(WittKind::d, g.mode, vp), c)); break;
      case Symbol::D1: out = op_sum(out, op_scale(pi_vir_mode(WittKind::d1, g.mode, vp), c)); break;
      case Symbol::c1: out.identity += c * central.c1; break;
      case Symbol::c2: out.identity += c * central.c2; break;
      default: throw std::invalid_argument("realize_vir takes Virasoro vectors");
    }
  }
  return out;
}

std::string operator_name(const OperatorId& id) {
  static const char* names[] = {"tau(e)", "tau(f)", "tau(h)", "tau(e1)", "tau(f1)", "tau(h1)",
                                "pi(d)",  "pi(d1)", "pi(D)",  "pi(D1)",  "",        ""};
  const auto i = static_cast<std::size_t>(id.family);
  const std::string base = names[i][0] ? names[i] : fock::family_name(id.raw);
  return base + "_" + std::to_string(id.mode);
}

ModeOperator build_operator(const OperatorId& id, const RepParams& p) {
  auto vir = [&] {
    if (p.kappa0 == 0) throw std::invalid_argument("Virasoro operators need kappa0 != 0");
    return VirParams::standard(p.kappa0);
  };
  switch (id.family) {
    case OpFamily::TauE: return tau_mode(Symbol::e, id.mode, p);
    case OpFamily::TauF: return tau_mode(Symbol::f, id.mode, p);
    case OpFamily::TauH: return tau_mode(Symbol::h, id.mode, p);
    case OpFamily::TauE1: return tau_mode(Symbol::e1, id.mode, p);
    case OpFamily::TauF1: return tau_mode(Symbol::f1, id.mode, p);
    case OpFamily::TauH1: return tau_mode(Symbol::h1, id.mode, p);
    case OpFamily::PiD: return pi_witt_mode(WittKind::d, id.mode);
    case OpFamily::PiD1: return pi_witt_mode(WittKind::d1, id.mode);
    case OpFamily::PiVirD: return pi_vir_mode(WittKind::d, id.mode, vir());
    case OpFamily::PiVirD1: return pi_vir_mode(WittKind::d1, id.mode, vir());
    case OpFamily::RawOsc:
      if (id.raw == Family::B || id.raw == Family::B1) throw std::invalid_argument("RawOsc takes a, a*, a1, a1*");
      return fock::single_mode(id.raw, id.mode);
    case OpFamily::RawHeis:
      if (id.raw != Family::B && id.raw != Family::B1) throw std::invalid_argument("RawHeis takes b, b1");
      return fock::single_mode(id.raw, id.mode);
  }
  throw std::invalid_argument("unknown operator family");
}

LambdaBracket witt_lambda(WittKind a, WittKind b, int r) {
  if (r != 0 && r != 1) throw std::invalid_argument("r must be 0 or 1");
  const Poly P = P_poly(), dP = dP_poly(), d2P = d2P_poly();
  const Rational dr = r == 0 ? 1 : 0;
  LambdaBracket lb;
  lb.a = pi_witt_modes_field(a);
  lb.b = pi_witt_modes_field(b);
  if (a == WittKind::d && b == WittKind::d) {
    const F pd = pi_witt_modes_field(WittKind::d);
    lb.coeffs.push_back({0, P * pd.derivative() + dP * pd});
    lb.coeffs.push_back({1, P * (Rational(2) * pd)});
    if (dr != 0) {
      Poly c1 = scaled(poly_mul(P, d2P), frac(1, 2));
      for (const auto& [k, v] : scaled(poly_mul(dP, dP), frac(1, 4))) c1[k] += v;
      lb.coeffs.push_back({1, F::constant(c1)});
      lb.coeffs.push_back({2, F::constant(poly_mul(P, dP))});
      lb.coeffs.push_back({3, F::constant(scaled(poly_mul(P, P), frac(1, 3)))});
    }
    lb.label = "[pi(d)_l pi(d)]";
  } else if (a == WittKind::d1 && b == WittKind::d1) {
    const F pd = pi_witt_modes_field(WittKind::d);
    lb.coeffs.push_back({0, pd.derivative()});
    lb.coeffs.push_back({1, Rational(2) * pd});
    if (dr != 0) {
      lb.coeffs.push_back({2, F::constant(scaled(dP, frac(1, 2)))});
      lb.coeffs.push_back({3, F::constant(scaled(P, frac(1, 3)))});
    }
    lb.label = "[pi(d1)_l pi(d1)]";
  } else if (a == WittKind::d && b == WittKind::d1) {
    const F pd1 = pi_witt_modes_field(WittKind::d1);
    lb.coeffs.push_back({0, P * pd1.derivative() + scaled(dP, frac(3, 2)) * pd1});
    lb.coeffs.push_back({1, P * (Rational(2) * pd1)});
    lb.label = "[pi(d)_l pi(d1)]";
  } else {
    throw std::invalid_argument("witt_lambda covers (d,d), (d1,d1), (d,d1)");
  }
  return lb;
}

LambdaBracket pairs_item(int item, const Rational& kappa0) {
  const Poly P = P_poly(), dP = dP_poly(), d2P = d2P_poly();
  const Rational k = kappa0;
  LambdaBracket lb;
  switch (item) {
    case 1:
      lb.a = lb.b = np({{Family::B}});
      lb.coeffs.push_back({1, F::constant({{0, -2 * k}})});
      lb.label = "[b_l b]";
      break;
    case 3:
      lb.a = lb.b = np({{Family::B1}});
      lb.coeffs.push_back({1, F::constant(scaled(P, -2 * k))});
      lb.coeffs.push_back({0, F::constant(scaled(dP, -k))});
      lb.label = "[b1_l b1]";
      break;
    case 10: {
      lb.a = lb.b = P * np({{Family::B, 1}});
      lb.coeffs.push_back({3, F::constant(scaled(poly_mul(P, P), 2 * k))});
      lb.coeffs.push_back({2, F::constant(scaled(poly_mul(dP, P), 6 * k))});
      lb.coeffs.push_back({1, F::constant(scaled(poly_mul(d2P, P), 6 * k))});
      lb.label = "[P Db_l P Db]";
      break;
    }
    case 14: {
      const F q = np({{Family::B1}, {Family::B1}});
      const F dq = np({{Family::B1, 1}, {Family::B1}});
      lb.a = lb.b = q;
      lb.coeffs.push_back({0, dP * (-4 * k * q) + P * (-8 * k * dq)});
      lb.coeffs.push_back({1, P * (-8 * k * q) + F::constant(scaled(poly_mul(dP, dP), 2 * k * k))});
      lb.coeffs.push_back({2, F::constant(scaled(poly_mul(P, dP), 4 * k * k))});
      lb.coeffs.push_back({3, F::constant(scaled(poly_mul(P, P), Rational(4, 3) * k * k))});
      lb.label = "[:b1 b1:_l :b1 b1:]";
      break;
    }
    default:
      throw std::invalid_argument("pairs items available: 1, 3, 10, 14");
  }
  return lb;
}

}  // namespace threepv::realization

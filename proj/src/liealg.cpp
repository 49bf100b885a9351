#include "threepv/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace threepv::liealg {

namespace {

Algebra algebra_of(Symbol s) {
  switch (s) {
    case Symbol::e: case Symbol::f: case Symbol::h:
    case Symbol::e1: case Symbol::f1: case Symbol::h1:
    case Symbol::w0: case Symbol::w1:
      return Algebra::Affine;
    case Symbol::b: case Symbol::b1: case Symbol::one0: case Symbol::one1:
      return Algebra::Heisenberg;
    case Symbol::d: case Symbol::d1:
      return Algebra::Witt;
    default:
      return Algebra::Virasoro;
  }
}

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::e: return "e";
    case Symbol::f: return "f";
    case Symbol::h: return "h";
    case Symbol::e1: return "e1";
    case Symbol::f1: return "f1";
    case Symbol::h1: return "h1";
    case Symbol::w0: return "omega0";
    case Symbol::w1: return "omega1";
    case Symbol::b: return "b";
    case Symbol::b1: return "b1";
    case Symbol::one0: return "one0";
    case Symbol::one1: return "one1";
    case Symbol::d: return "d";
    case Symbol::d1: return "d1";
    case Symbol::D: return "D";
    case Symbol::D1: return "D1";
    case Symbol::c1: return "c1";
    case Symbol::c2: return "c2";
  }
  return "?";
}

GenId G(Algebra a, Symbol s, int mode = 0) { return GenId{a, s, mode}; }

LieVector single(const GenId& g, const Rational& c = 1) { return LieVector(g, c); }

// sl2 part of an affine symbol and whether it carries the factor u.
Symbol sl2_base(Symbol s) {
  switch (s) {
    case Symbol::e1: return Symbol::e;
    case Symbol::f1: return Symbol::f;
    case Symbol::h1: return Symbol::h;
    default: return s;
  }
}
bool has_u(Symbol s) { return s == Symbol::e1 || s == Symbol::f1 || s == Symbol::h1; }
Symbol with_level(Symbol base, bool u) {
  if (!u) return base;
  switch (base) {
    case Symbol::e: return Symbol::e1;
    case Symbol::f: return Symbol::f1;
    default: return Symbol::h1;
  }
}

Rational pow2(int k) {
  Rational r = 1;
  if (k >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
    r = p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-k));
    r = Rational(1) / Rational(p);
  }
  return r;
}

Rational factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational mu(int m, int n) { return mu_closed_form(m, n).value; }

// Verbatim affine table on the ordered pairs it lists; nullopt otherwise.
std::optional<LieVector> affine_table(const GenId& a, const GenId& b) {
  const Symbol X = sl2_base(a.symbol), Y = sl2_base(b.symbol);
  const bool ua = has_u(a.symbol), ub = has_u(b.symbol);
  const int m = a.mode, n = b.mode;
  const auto A = Algebra::Affine;
  LieVector r;
  if ((X == Symbol::e && Y == Symbol::e) || (X == Symbol::f && Y == Symbol::f)) return r;
  if (X == Symbol::h && Y == Symbol::h) {
    if (!ua && !ub) r.add(G(A, Symbol::w0), Rational(n - m) * delta(m + n, 0));
    if (ua && ub) r.add(G(A, Symbol::w0), Rational(n - m) * (delta(m + n, -2) + 4 * delta(m + n, -1)));
    if (!ua && ub) r.add(G(A, Symbol::w1), -2 * mu(m, n));
    if (ua && !ub) return std::nullopt;
    return r;
  }
  if (X == Symbol::e && Y == Symbol::f) {
    if (!ua && !ub) {
      r.add(G(A, Symbol::h, m + n), 1);
      r.add(G(A, Symbol::w0), -m * delta(m, -n));
    } else if (ua && ub) {
      r.add(G(A, Symbol::h, m + n + 2), 1);
      r.add(G(A, Symbol::h, m + n + 1), 4);
      r.add(G(A, Symbol::w0), frac(n - m, 2) * (delta(m + n, -2) + 4 * delta(m + n, -1)));
    } else {
      r.add(G(A, Symbol::h1, m + n), 1);
      r.add(G(A, Symbol::w1), -m * mu(m, n));
    }
    return r;
  }
  if (X == Symbol::h && (Y == Symbol::e || Y == Symbol::f)) {
    const int s = Y == Symbol::e ? 2 : -2;
    if (ua && ub) {
      r.add(G(A, Y, m + n + 2), s);
      r.add(G(A, Y, m + n + 1), 4 * s);
    } else {
      r.add(G(A, with_level(Y, ua || ub), m + n), s);
    }
    return r;
  }
  return std::nullopt;
}

// (x, y) with (e,f) = (f,e) = 1, (h,h) = 2.
Rational sl2_form(Symbol x, Symbol y) {
  if ((x == Symbol::e && y == Symbol::f) || (x == Symbol::f && y == Symbol::e)) return 1;
  if (x == Symbol::h && y == Symbol::h) return 2;
  return 0;
}

// [x, y] in sl2 as (symbol, coefficient), or nullopt for 0.
std::optional<std::pair<Symbol, int>> sl2_bracket(Symbol x, Symbol y) {
  if (x == y) return std::nullopt;
  if (x == Symbol::h && y == Symbol::e) return std::pair{Symbol::e, 2};
  if (x == Symbol::e && y == Symbol::h) return std::pair{Symbol::e, -2};
  if (x == Symbol::h && y == Symbol::f) return std::pair{Symbol::f, -2};
  if (x == Symbol::f && y == Symbol::h) return std::pair{Symbol::f, 2};
  if (x == Symbol::e && y == Symbol::f) return std::pair{Symbol::h, 1};
  return std::pair{Symbol::h, -1};  // [f, e]
}

ring::RRingElem ring_part(const GenId& g) { return ring::RRingElem::monomial(g.mode, has_u(g.symbol) ? 1 : 0); }

LieVector central_from_pairing(const GenId& a, const GenId& b) {
  LieVector r;
  const Rational form = sl2_form(sl2_base(a.symbol), sl2_base(b.symbol));
  if (form == 0) return r;
  const kaehler::CohomClass c = kaehler::pairing(ring_part(a), ring_part(b));
  r.add(G(Algebra::Affine, Symbol::w0), form * c.q0);
  r.add(G(Algebra::Affine, Symbol::w1), form * c.q1);
  return r;
}

LieVector drop_central(const LieVector& v) {
  LieVector r;
  for (const auto& [g, c] : v.terms())
    if (!is_central(g.symbol)) r.add(g, c);
  return r;
}

void require(const GenId& g, Algebra a) {
  if (g.algebra != a) throw std::invalid_argument("generator " + gen_name(g) + " not in " + algebra_name(a));
}

Rational phi1_mixed(int k, int l) {
  // phi1(d1_k, d_l)
  const int s = k + l;
  if (s <= -2) return 0;
  return 6 * sign(s) * pow2(s) * Rational((k - 1) * k * l) * double_factorial(2 * s - 3) / factorial(s + 1);
}

WittKind kind_of(const GenId& g) {
  return (g.symbol == Symbol::d || g.symbol == Symbol::D) ? WittKind::d : WittKind::d1;
}

Rational phi_apply(const Cocycle& phi, const LieVector& v, const GenId& c) {
  Rational r = 0;
  for (const auto& [g, x] : v.terms()) r += x * phi(kind_of(g), g.mode, kind_of(c), c.mode);
  return r;
}

}  // namespace

bool is_central(Symbol s) {
  switch (s) {
    case Symbol::w0: case Symbol::w1: case Symbol::one0: case Symbol::one1:
    case Symbol::c1: case Symbol::c2:
      return true;
    default:
      return false;
  }
}

GenId make_gen(Algebra a, Symbol s, int mode) {
  if (algebra_of(s) != a)
    throw std::invalid_argument(std::string("symbol ") + symbol_name(s) + " not in " + algebra_name(a));
  if (is_central(s) && mode != 0) throw std::invalid_argument("central generators carry mode 0");
  return {a, s, mode};
}

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Affine: return "affine";
    case Algebra::Heisenberg: return "heisenberg";
    case Algebra::Witt: return "witt";
    case Algebra::Virasoro: return "virasoro";
  }
  return "?";
}

std::string gen_name(const GenId& g) {
  if (is_central(g.symbol)) return symbol_name(g.symbol);
  return std::string(symbol_name(g.symbol)) + "_" + std::to_string(g.mode);
}

std::string to_string(const LieVector& v) { return v.format(gen_name); }

LieVector affine_bracket(const GenId& a, const GenId& b, CentralSource src) {
  require(a, Algebra::Affine);
  require(b, Algebra::Affine);
  if (is_central(a.symbol) || is_central(b.symbol)) return {};
  LieVector r;
  if (auto t = affine_table(a, b)) {
    r = *t;
  } else if (auto t2 = affine_table(b, a)) {
    r = -*t2;
  } else {
    throw std::logic_error("affine table has no entry for " + gen_name(a) + ", " + gen_name(b));
  }
  if (src == CentralSource::KaehlerOracle) r = drop_central(r) + central_from_pairing(a, b);
  return r;
}

LieVector affine_bracket_kassel(const GenId& a, const GenId& b) {
  require(a, Algebra::Affine);
  require(b, Algebra::Affine);
  if (is_central(a.symbol) || is_central(b.symbol)) throw std::invalid_argument("Kassel bracket takes non-central generators");
  LieVector r;
  if (auto xy = sl2_bracket(sl2_base(a.symbol), sl2_base(b.symbol))) {
    const ring::RRingElem fg = ring_part(a) * ring_part(b);
    for (const auto& [mono, c] : fg.vec().terms())
      r.add(G(Algebra::Affine, with_level(xy->first, mono.upow == 1), mono.tpow), c * xy->second);
  }
  return r + central_from_pairing(a, b);
}

LieVector heis_bracket(const GenId& a, const GenId& b) {
  require(a, Algebra::Heisenberg);
  require(b, Algebra::Heisenberg);
  LieVector r;
  if (is_central(a.symbol) || is_central(b.symbol)) return r;
  const int m = a.mode, n = b.mode;
  const auto H = Algebra::Heisenberg;
  if (a.symbol == Symbol::b && b.symbol == Symbol::b) {
    r.add(G(H, Symbol::one0), Rational(n - m) * delta(m + n, 0));
  } else if (a.symbol == Symbol::b1 && b.symbol == Symbol::b1) {
    r.add(G(H, Symbol::one0), Rational(n - m) * (delta(m + n, -2) + 4 * delta(m + n, -1)));
  } else if (a.symbol == Symbol::b1) {
    r.add(G(H, Symbol::one1), 2 * mu(m, n));
  } else {
    r.add(G(H, Symbol::one1), -2 * mu(n, m));
  }
  return r;
}

namespace {

LieVector witt_table(const GenId& a, const GenId& b, Symbol sd, Symbol sd1, Algebra alg) {
  const int m = a.mode, n = b.mode;
  const bool ad = kind_of(a) == WittKind::d, bd = kind_of(b) == WittKind::d;
  LieVector r;
  if (ad && bd) {
    r.add(G(alg, sd, m + n + 1), n - m);
    r.add(G(alg, sd, m + n), 4 * (n - m));
  } else if (!ad && !bd) {
    r.add(G(alg, sd, m + n - 1), n - m);
  } else if (ad && !bd) {
    r.add(G(alg, sd1, m + n + 1), n - m - 1);
    r.add(G(alg, sd1, m + n), 4 * n - 4 * m - 2);
  } else {
    // [d1_m, d_n] = -[d_n, d1_m]
    r.add(G(alg, sd1, m + n + 1), -(m - n - 1));
    r.add(G(alg, sd1, m + n), -(4 * m - 4 * n - 2));
  }
  return r;
}

}  // namespace

LieVector witt_bracket(const GenId& a, const GenId& b) {
  require(a, Algebra::Witt);
  require(b, Algebra::Witt);
  return witt_table(a, b, Symbol::d, Symbol::d1, Algebra::Witt);
}

LieVector vir_bracket(const GenId& a, const GenId& b) {
  require(a, Algebra::Virasoro);
  require(b, Algebra::Virasoro);
  if (is_central(a.symbol) || is_central(b.symbol)) return {};
  LieVector r = witt_table(a, b, Symbol::D, Symbol::D1, Algebra::Virasoro);
  r.add(G(Algebra::Virasoro, Symbol::c1), phi1(kind_of(a), a.mode, kind_of(b), b.mode));
  r.add(G(Algebra::Virasoro, Symbol::c2), phi2(kind_of(a), a.mode, kind_of(b), b.mode));
  return r;
}

LieVector bracket(const GenId& a, const GenId& b, CentralSource src) {
  if (a.algebra != b.algebra) throw std::invalid_argument("bracket across algebras");
  switch (a.algebra) {
    case Algebra::Affine: return affine_bracket(a, b, src);
    case Algebra::Heisenberg: return heis_bracket(a, b);
    case Algebra::Witt: return witt_bracket(a, b);
    case Algebra::Virasoro: return vir_bracket(a, b);
  }
  return {};
}

LieVector bracket(const LieVector& a, const LieVector& b, CentralSource src) {
  LieVector r;
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms()) r.add_scaled(bracket(ga, gb, src), ca * cb);
  return r;
}

Rational double_factorial(int n) {
  if (n % 2 == 0) throw std::invalid_argument("double_factorial takes odd arguments");
  if (n > 0) {
    mpz_class r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return Rational(r);
  }
  const int j = (-n - 1) / 2;  // n = -2j - 1
  if (j == 0) return 1;
  return sign(j) / double_factorial(2 * j - 1);
}

MuValue mu_closed_form(int m, int n) {
  const int s = m + n;
  if (s <= -2) return {Rational(0), MuConvention::NegativeFactorial};
  MuValue v;
  v.value = m * sign(s + 1) * pow2(s) * double_factorial(2 * s - 1) / factorial(s + 1);
  v.convention = s <= 0 ? MuConvention::NegativeDoubleFactorial : MuConvention::None;
  return v;
}

Rational phi1(WittKind ka, int k, WittKind kb, int l) {
  if (ka == WittKind::d1 && kb == WittKind::d1)
    return 2 * Rational((l * l - l) * (2 * l - 1)) * delta(k + l, 1) + Rational(l * l * l - l) * delta(k + l, 0);
  if (ka == WittKind::d && kb == WittKind::d)
    return Rational(l * (l + 1) * (l + 2)) * delta(k + l, -2) + 4 * Rational(l * (2 * l + 1) * (l + 1)) * delta(k + l, -1) +
           4 * Rational(l * (2 * l - 1) * (2 * l + 1)) * delta(k + l, 0);
  if (ka == WittKind::d1) return phi1_mixed(k, l);
  return -phi1_mixed(l, k);
}

Rational phi2(WittKind ka, int k, WittKind kb, int l) {
  if (ka != kb) return 0;
  return -2 * phi1(ka, k, kb, l);
}

// ---------------------------------------------------------------------------

std::vector<GenId> generators(Algebra a, int window, bool include_central) {
  std::vector<Symbol> modal, central;
  switch (a) {
    case Algebra::Affine:
      modal = {Symbol::e, Symbol::f, Symbol::h, Symbol::e1, Symbol::f1, Symbol::h1};
      central = {Symbol::w0, Symbol::w1};
      break;
    case Algebra::Heisenberg:
      modal = {Symbol::b, Symbol::b1};
      central = {Symbol::one0, Symbol::one1};
      break;
    case Algebra::Witt:
      modal = {Symbol::d, Symbol::d1};
      break;
    case Algebra::Virasoro:
      modal = {Symbol::D, Symbol::D1};
      central = {Symbol::c1, Symbol::c2};
      break;
  }
  std::vector<GenId> out;
  for (Symbol s : modal)
    for (int m = -window; m <= window; ++m) out.push_back({a, s, m});
  if (include_central)
    for (Symbol s : central) out.push_back({a, s, 0});
  return out;
}

CheckSummary check_antisymmetry(Algebra a, int window, CentralSource src) {
  CheckSummary out;
  const auto gens = generators(a, window, true);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      ++out.checked;
      const LieVector res = bracket(gens[i], gens[j], src) + bracket(gens[j], gens[i], src);
      if (!res.is_zero())
        out.violations.push_back({"[" + gen_name(gens[i]) + "," + gen_name(gens[j]) + "] + [" + gen_name(gens[j]) + "," +
                                      gen_name(gens[i]) + "]",
                                  to_string(res)});
    }
  return out;
}

CheckSummary check_jacobi(Algebra a, int window, CentralSource src, unsigned threads) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  const auto gens = generators(a, window, false);
  const std::size_t N = gens.size();
  std::vector<CheckSummary> per_i(N);

  auto work = [&](std::size_t i) {
    CheckSummary& s = per_i[i];
    const LieVector A = single(gens[i]);
    for (std::size_t j = i; j < N; ++j) {
      const LieVector B = single(gens[j]);
      const LieVector ab = bracket(gens[i], gens[j], src);
      for (std::size_t k = j; k < N; ++k) {
        const LieVector C = single(gens[k]);
        const LieVector res = bracket(A, bracket(gens[j], gens[k], src), src) +
                              bracket(B, bracket(gens[k], gens[i], src), src) + bracket(C, ab, src);
        ++s.checked;
        if (!res.is_zero())
          s.violations.push_back({"J(" + gen_name(gens[i]) + "," + gen_name(gens[j]) + "," + gen_name(gens[k]) + ")",
                                  to_string(res)});
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < N; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < N; i += threads) work(i);
      });
    for (auto& th : pool) th.join();
  }

  CheckSummary out;
  for (auto& s : per_i) {
    out.checked += s.checked;
    for (auto& v : s.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

CheckSummary check_cocycle_identity(const Cocycle& phi, int window) {
  CheckSummary out;
  const auto gens = generators(Algebra::Witt, window, false);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      for (std::size_t k = j; k < gens.size(); ++k) {
        const GenId &a = gens[i], &b = gens[j], &c = gens[k];
        const Rational res = phi_apply(phi, witt_bracket(a, b), c) + phi_apply(phi, witt_bracket(b, c), a) +
                             phi_apply(phi, witt_bracket(c, a), b);
        ++out.checked;
        if (res != 0)
          out.violations.push_back({"phi([" + gen_name(a) + "," + gen_name(b) + "]," + gen_name(c) + ") + cyclic",
                                    threepv::to_string(res)});
      }
  return out;
}

CoboundaryResult coboundary_window_test(const Cocycle& phi, int window) {
  if (window < 2) throw std::invalid_argument("coboundary window must be >= 2");
  CoboundaryResult res;
  res.window = window;
  const auto gens = generators(Algebra::Witt, window, false);

  std::vector<LieVector> lhs;
  std::vector<Rational> rhs;
  std::set<GenId> unknown_set;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      LieVector row = witt_bracket(gens[i], gens[j]);
      for (const auto& [g, c] : row.terms()) unknown_set.insert(g);
      lhs.push_back(std::move(row));
      rhs.push_back(phi(kind_of(gens[i]), gens[i].mode, kind_of(gens[j]), gens[j].mode));
      res.equation_pairs.emplace_back(gens[i], gens[j]);
    }
  const std::vector<GenId> unknowns(unknown_set.begin(), unknown_set.end());
  std::map<GenId, int> column;
  for (std::size_t c = 0; c < unknowns.size(); ++c) column[unknowns[c]] = static_cast<int>(c);
  res.equations = lhs.size();
  res.unknowns = unknowns.size();

  struct Pivot {
    SparseVector<int> row;
    Rational rhs;
    SparseVector<int> combo;
  };
  std::map<int, Pivot> pivots;
  bool have_certificate = false;

  for (std::size_t e = 0; e < lhs.size(); ++e) {
    SparseVector<int> row;
    for (const auto& [g, c] : lhs[e].terms()) row.add(column.at(g), c);
    Rational b = rhs[e];
    SparseVector<int> combo(static_cast<int>(e), 1);
    while (!row.is_zero()) {
      const auto& [lead, lc] = *row.terms().begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      const Rational factor = lc;
      row.add_scaled(it->second.row, -factor);
      b -= factor * it->second.rhs;
      combo.add_scaled(it->second.combo, -factor);
    }
    if (row.is_zero()) {
      if (b != 0 && !have_certificate) {
        have_certificate = true;
        res.certificate = combo;
      }
      continue;
    }
    const int lead = row.terms().begin()->first;
    const Rational inv = Rational(1) / row.terms().begin()->second;
    row *= inv;
    combo *= inv;
    pivots.emplace(lead, Pivot{std::move(row), b * inv, std::move(combo)});
  }
  res.rank = pivots.size();
  res.infeasible = have_certificate;

  if (!res.infeasible) {
    std::map<int, Rational> value;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational v = it->second.rhs;
      for (const auto& [c, x] : it->second.row.terms())
        if (c != it->first) {
          auto f = value.find(c);
          if (f != value.end()) v -= x * f->second;
        }
      value[it->first] = v;
    }
    for (const auto& [c, v] : value) res.witness.add(unknowns[c], v);
  }
  return res;
}

bool verify_certificate(const Cocycle& phi, const CoboundaryResult& res) {
  if (!res.infeasible || res.certificate.is_zero()) return false;
  LieVector combined;
  Rational b = 0;
  for (const auto& [e, y] : res.certificate.terms()) {
    const auto& [x, z] = res.equation_pairs.at(static_cast<std::size_t>(e));
    combined.add_scaled(witt_bracket(x, z), y);
    b += y * phi(kind_of(x), x.mode, kind_of(z), z.mode);
  }
  return combined.is_zero() && b != 0;
}

}  // namespace threepv::liealg

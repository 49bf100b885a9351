#include "threepv/fock.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

namespace threepv::fock {

std::string var_name(const Var& v) {
  static const char* names[] = {"x", "x1", "y", "y1"};
  return std::string(names[static_cast<int>(v.kind)]) + "_" + std::to_string(v.index);
}

int FockMonomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps) d += e;
  return d;
}

std::string monomial_name(const FockMonomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exps) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out + (m.vpart == 0 ? "|v0>" : "|v1>");
}

FockState vacuum(int vpart) { return FockState(FockMonomial{{}, vpart}, 1); }

FockState monomial_state(const std::vector<Var>& vars, int vpart, const Rational& c) {
  FockMonomial m{{}, vpart};
  for (const auto& v : vars) {
    if ((v.kind == VarKind::Y || v.kind == VarKind::Y1) && v.index >= 0)
      throw std::invalid_argument("Heisenberg variables carry negative indices");
    ++m.exps[v];
  }
  return FockState(m, c);
}

std::string to_string(const FockState& s) { return s.format(monomial_name); }

void RepParams::validate(bool require_kappa0) const {
  if (r != 0 && r != 1) throw std::invalid_argument("r must be 0 or 1");
  if (B1[0][0] != B1[1][1]) throw std::invalid_argument("B1 must have equal diagonal entries");
  if (chi1 != 0) throw std::invalid_argument("chi1 must act as zero");
  if (require_kappa0 && kappa0 == 0) throw std::invalid_argument("kappa0 must be nonzero");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::AS: return "a*";
    case Family::A1: return "a1";
    case Family::A1S: return "a1*";
    case Family::B: return "b";
    case Family::B1: return "b1";
  }
  return "?";
}

bool is_annihilator(Family f, int mode, int r) {
  switch (f) {
    case Family::A:
    case Family::A1:
      return r == 0 && mode >= 0;
    case Family::AS:
    case Family::A1S:
      return r == 1 || mode >= 1;
    case Family::B:
    case Family::B1:
      return mode >= 0;
  }
  return false;
}

namespace {

FockState mul_var(const FockState& s, const Var& v, const Rational& c = 1) {
  FockState out;
  if (c == 0) return out;
  for (const auto& [m, x] : s.terms()) {
    FockMonomial n = m;
    ++n.exps[v];
    out.add(n, x * c);
  }
  return out;
}

FockState d_var(const FockState& s, const Var& v, const Rational& c = 1) {
  FockState out;
  if (c == 0) return out;
  for (const auto& [m, x] : s.terms()) {
    auto it = m.exps.find(v);
    if (it == m.exps.end()) continue;
    FockMonomial n = m;
    const int e = it->second;
    if (e == 1) {
      n.exps.erase(v);
    } else {
      n.exps[v] = e - 1;
    }
    out.add(n, x * e);
  }
  out *= c;
  return out;
}

VarKind osc_var(Family f) { return (f == Family::A || f == Family::AS) ? VarKind::X : VarKind::X1; }

// Creation region of a family: all indices <= upper, or all of Z, or empty.
struct CreatorRegion {
  bool empty = false;
  bool unbounded = false;
  int upper = 0;
  bool contains(int i) const { return !empty && (unbounded || i <= upper); }
};

CreatorRegion creator_region(Family f, int r) {
  switch (f) {
    case Family::A:
    case Family::A1:
      return r == 0 ? CreatorRegion{false, false, -1} : CreatorRegion{false, true, 0};
    case Family::AS:
    case Family::A1S:
      return r == 0 ? CreatorRegion{false, false, 0} : CreatorRegion{true, false, 0};
    default:
      return {false, false, -1};
  }
}

// Annihilation-region indices that can act nontrivially on the monomial.
std::vector<int> annihilator_candidates(Family f, const FockMonomial& m, int r) {
  std::vector<int> out;
  switch (f) {
    case Family::A:
    case Family::A1:
      if (r == 0)
        for (const auto& [v, e] : m.exps)
          if (v.kind == osc_var(f) && v.index >= 0) out.push_back(v.index);
      break;
    case Family::AS:
    case Family::A1S:
      for (const auto& [v, e] : m.exps)
        if (v.kind == osc_var(f) && (r == 1 || -v.index >= 1)) out.push_back(-v.index);
      break;
    case Family::B:
      out.push_back(0);
      for (const auto& [v, e] : m.exps)
        if (v.kind == VarKind::Y) out.push_back(-v.index);
      break;
    case Family::B1: {
      std::vector<int> c{0};
      for (const auto& [v, e] : m.exps)
        if (v.kind == VarKind::Y1) {
          // y1_j is hit by b1_n for j = -2-n and j = -1-n
          c.push_back(-2 - v.index);
          c.push_back(-1 - v.index);
        }
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (int n : c)
        if (n >= 0) out.push_back(n);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

FockState apply_mode(Family f, int m, const FockState& s, const RepParams& p) {
  switch (f) {
    case Family::A:
    case Family::A1: {
      const Var v{osc_var(f), m};
      return (p.r == 0 && m >= 0) ? d_var(s, v) : mul_var(s, v);
    }
    case Family::AS:
    case Family::A1S: {
      const Var v{osc_var(f), -m};
      return (p.r == 0 && m <= 0) ? mul_var(s, v) : d_var(s, v, -1);
    }
    case Family::B: {
      if (m < 0) return mul_var(s, {VarKind::Y, m});
      if (m > 0) return d_var(s, {VarKind::Y, -m}, -2 * m * p.kappa0);
      FockState out = s;
      out *= p.B0;
      return out;
    }
    case Family::B1: {
      if (m < 0) return mul_var(s, {VarKind::Y1, m});
      FockState out = d_var(s, {VarKind::Y1, -2 - m}, -(2 + 2 * m) * p.kappa0);
      out += d_var(s, {VarKind::Y1, -1 - m}, -4 * (1 + 2 * m) * p.kappa0);
      if (m == 0) {
        for (const auto& [mono, c] : s.terms()) {
          FockMonomial n0 = mono, n1 = mono;
          n0.vpart = 0;
          n1.vpart = 1;
          out.add(n0, c * p.B1[mono.vpart][0]);
          out.add(n1, c * p.B1[mono.vpart][1]);
        }
      }
      return out;
    }
  }
  return {};
}

FockState osc_apply(Family which, int m, const FockState& s, int r) {
  if (which == Family::B || which == Family::B1) throw std::invalid_argument("osc_apply takes a, a*, a1, a1*");
  RepParams p;
  p.r = r;
  return apply_mode(which, m, s, p);
}

FockState heis_apply(Family which, int n, const FockState& s, const RepParams& p) {
  if (which != Family::B && which != Family::B1) throw std::invalid_argument("heis_apply takes b, b1");
  return apply_mode(which, n, s, p);
}

ModeOperator single_mode(Family f, int m, const Rational& c) {
  ModeOperator op;
  op.products.push_back({{f}, m, [c](const std::vector<int>&) { return c; }, family_name(f) + "_" + std::to_string(m)});
  op.label = op.products.back().label;
  return op;
}

FockState apply_normal_ordered(const std::vector<Family>& factors, const std::vector<int>& idx, const FockState& s,
                               const RepParams& p) {
  FockState cur = s;
  for (std::size_t i = factors.size(); i-- > 0;)
    if (is_annihilator(factors[i], idx[i], p.r)) cur = apply_mode(factors[i], idx[i], cur, p);
  for (std::size_t i = factors.size(); i-- > 0;)
    if (!is_annihilator(factors[i], idx[i], p.r)) cur = apply_mode(factors[i], idx[i], cur, p);
  return cur;
}

FockState no_sum_apply(const ModeProduct& prod, const FockState& s, const RepParams& p) {
  const std::size_t k = prod.factors.size();
  if (k == 0) throw std::invalid_argument("empty mode product");
  std::vector<CreatorRegion> regions;
  for (Family f : prod.factors) regions.push_back(creator_region(f, p.r));

  FockState out;
  for (const auto& [mono, coeff] : s.terms()) {
    const FockState base(mono, coeff);
    std::vector<std::vector<int>> cands;
    for (Family f : prod.factors) cands.push_back(annihilator_candidates(f, mono, p.r));

    // choice[i] = index for an annihilator position, nullopt for a creator position
    std::vector<std::optional<int>> choice(k);
    std::vector<int> idx(k);

    std::function<void(std::size_t)> choose = [&](std::size_t pos) {
      if (pos < k) {
        for (int c : cands[pos]) {
          choice[pos] = c;
          choose(pos + 1);
        }
        if (!regions[pos].empty) {
          choice[pos].reset();
          choose(pos + 1);
        }
        return;
      }
      int rest = prod.total;
      std::vector<std::size_t> creators;
      FockState annihilated = base;
      for (std::size_t i = k; i-- > 0;) {
        if (choice[i]) {
          idx[i] = *choice[i];
          rest -= idx[i];
          annihilated = apply_mode(prod.factors[i], idx[i], annihilated, p);
        }
      }
      if (annihilated.is_zero()) return;
      for (std::size_t i = 0; i < k; ++i)
        if (!choice[i]) creators.push_back(i);

      auto emit = [&] {
        const Rational c = prod.coeff(idx);
        if (c == 0) return;
        FockState cur = annihilated;
        for (std::size_t i = creators.size(); i-- > 0;) cur = apply_mode(prod.factors[creators[i]], idx[creators[i]], cur, p);
        out.add_scaled(cur, c);
      };

      if (creators.empty()) {
        if (rest == 0) emit();
        return;
      }
      if (creators.size() == 1) {
        if (regions[creators[0]].contains(rest)) {
          idx[creators[0]] = rest;
          emit();
        }
        return;
      }
      for (std::size_t c : creators)
        if (regions[c].unbounded)
          throw std::domain_error("mode product " + prod.label + " is not locally finite under this ordering");
      // suffix sums of upper bounds give the lower bound of each free index
      std::vector<long> suffix(creators.size() + 1, 0);
      for (std::size_t i = creators.size(); i-- > 0;) suffix[i] = suffix[i + 1] + regions[creators[i]].upper;
      std::function<void(std::size_t, long)> fill = [&](std::size_t j, long remaining) {
        const std::size_t pos = creators[j];
        if (j + 1 == creators.size()) {
          if (remaining <= regions[pos].upper) {
            idx[pos] = static_cast<int>(remaining);
            emit();
          }
          return;
        }
        const long lo = remaining - suffix[j + 1];
        for (long v = lo; v <= regions[pos].upper; ++v) {
          idx[pos] = static_cast<int>(v);
          fill(j + 1, remaining - v);
        }
      };
      fill(0, rest);
    };
    choose(0);
  }
  return out;
}

FockState apply(const ModeOperator& op, const FockState& s, const RepParams& p) {
  FockState out = s;
  out *= op.identity;
  for (const auto& prod : op.products) out += no_sum_apply(prod, s, p);
  return out;
}

FockState commutator_apply(const StateOp& A, const StateOp& B, const FockState& s) { return A(B(s)) - B(A(s)); }

Rational contraction_check(Family a, Family b, int m, int n, int r) {
  if (a == Family::B || a == Family::B1 || b == Family::B || b == Family::B1)
    throw std::invalid_argument("contraction_check takes beta-gamma families");
  if (!is_annihilator(a, m, r)) return 0;
  if ((a == Family::A && b == Family::AS) || (a == Family::A1 && b == Family::A1S)) return delta(m + n, 0);
  if ((a == Family::AS && b == Family::A) || (a == Family::A1S && b == Family::A1)) return -delta(m + n, 0);
  return 0;
}

std::vector<FockState> random_states(std::size_t count, int degree, int window, std::uint64_t seed) {
  if (window < 1) throw std::invalid_argument("state window must be >= 1");
  std::mt19937_64 rng(seed);
  const std::array<Rational, 6> coeffs{Rational(1), Rational(-1), Rational(2), Rational(-2), frac(1, 2), frac(-1, 2)};
  auto pick = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };
  std::vector<FockState> out;
  for (std::size_t s = 0; s < count; ++s) {
    FockState st;
    const int nmono = 1 + pick(2);
    for (int t = 0; t < nmono; ++t) {
      FockMonomial m{{}, pick(2)};
      const int deg = pick(static_cast<std::uint64_t>(degree) + 1);
      for (int d = 0; d < deg; ++d) {
        const auto kind = static_cast<VarKind>(pick(4));
        const int idx = (kind == VarKind::X || kind == VarKind::X1) ? pick(2 * window + 1) - window : -1 - pick(window);
        ++m.exps[{kind, idx}];
      }
      st.add(m, coeffs[pick(coeffs.size())]);
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace threepv::fock

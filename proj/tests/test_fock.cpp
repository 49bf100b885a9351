#include "threepv/fock.hpp"
#include "threepv/liealg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace threepv;
using namespace threepv::fock;

namespace {

RepParams params(int r, Rational kappa0 = 1) {
  RepParams p;
  p.r = r;
  p.kappa0 = kappa0;
  p.B0 = frac(1, 3);
  p.B1 = {{{2, 5}, {-1, 2}}};
  return p;
}

FockState x(int n, int vpart = 0) { return monomial_state({{VarKind::X, n}}, vpart); }

int support_bound(const FockState& s) {
  int b = 0;
  for (const auto& [m, c] : s.terms())
    for (const auto& [v, e] : m.exps) b = std::max(b, std::abs(v.index));
  return b;
}

// Reference evaluation: every index tuple in a box large enough to hold all contributions.
FockState brute_force(const ModeProduct& prod, const FockState& s, const RepParams& p) {
  const int B = support_bound(s) + std::abs(prod.total) + 10;
  const std::size_t k = prod.factors.size();
  std::vector<int> idx(k);
  FockState out;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i + 1 == k) {
      idx[i] = prod.total - sum;
      if (std::abs(idx[i]) > B) return;
      const Rational c = prod.coeff(idx);
      if (c != 0) out.add_scaled(apply_normal_ordered(prod.factors, idx, s, p), c);
      return;
    }
    for (int v = -B; v <= B; ++v) {
      idx[i] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

const auto one = [](const std::vector<int>&) { return Rational(1); };

}  // namespace

TEST_CASE("oscillator action examples") {
  CHECK(osc_apply(Family::A, 2, x(2), 0) == vacuum());
  CHECK(osc_apply(Family::AS, 1, x(-1), 0) == -vacuum());
  CHECK(osc_apply(Family::AS, 0, vacuum(), 1).is_zero());
  CHECK(osc_apply(Family::A, -3, vacuum(), 0) == x(-3));
  CHECK(osc_apply(Family::A, 3, vacuum(), 1) == x(3));
  for (int m = -3; m <= 3; ++m) CHECK(osc_apply(Family::A1S, m, vacuum(), 1).is_zero());
  CHECK_THROWS_AS(osc_apply(Family::B, 1, vacuum(), 0), std::invalid_argument);
}

TEST_CASE("Heisenberg action examples") {
  RepParams p = params(0, 3);
  CHECK(heis_apply(Family::B, -2, vacuum(), p) == monomial_state({{VarKind::Y, -2}}));
  CHECK(heis_apply(Family::B, 1, monomial_state({{VarKind::Y, -1}}), p) == Rational(-6) * vacuum());
  FockState e;
  e.add({{}, 0}, 2);
  e.add({{}, 1}, 5);
  CHECK(heis_apply(Family::B1, 0, vacuum(0), p) == e);
  CHECK(heis_apply(Family::B, 0, vacuum(1), p) == frac(1, 3) * vacuum(1));
}

TEST_CASE("parameter validation") {
  RepParams p = params(0);
  CHECK_NOTHROW(p.validate(true));
  p.B1[1][1] = 3;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = params(0);
  p.chi1 = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = params(2);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = params(1, 0);
  CHECK_NOTHROW(p.validate(false));
  CHECK_THROWS_AS(p.validate(true), std::invalid_argument);
  CHECK_THROWS_AS(monomial_state({{VarKind::Y, 2}}), std::invalid_argument);
}

TEST_CASE("oscillator relations on seeded states") {
  const auto states = random_states(50, 3, 4, 7);
  const std::vector<Family> fams{Family::A, Family::AS, Family::A1, Family::A1S};
  for (int r : {0, 1}) {
    const RepParams p = params(r);
    std::size_t bad = 0;
    for (const auto& s : states)
      for (Family f : fams)
        for (Family g : fams)
          for (int m = -4; m <= 4; ++m)
            for (int n = -4; n <= 4; ++n) {
              const FockState c = commutator_apply([&](const FockState& t) { return apply_mode(f, m, t, p); },
                                                   [&](const FockState& t) { return apply_mode(g, n, t, p); }, s);
              Rational expect = 0;
              if ((f == Family::A && g == Family::AS) || (f == Family::A1 && g == Family::A1S)) expect = delta(m + n, 0);
              if ((f == Family::AS && g == Family::A) || (f == Family::A1S && g == Family::A1)) expect = -delta(m + n, 0);
              FockState e = s;
              e *= expect;
              if (!(c == e)) ++bad;
            }
    CHECK(bad == 0);
  }
}

TEST_CASE("Heisenberg representation reproduces the table") {
  const auto states = random_states(20, 3, 4, 8);
  for (Rational kappa : {Rational(1), Rational(2)}) {
    const RepParams p = params(0, kappa);
    std::size_t bad = 0;
    for (const auto& s : states)
      for (Family f : {Family::B, Family::B1})
        for (Family g : {Family::B, Family::B1})
          for (int m = -4; m <= 4; ++m)
            for (int n = -4; n <= 4; ++n) {
              const auto sym = [](Family fam) { return fam == Family::B ? liealg::Symbol::b : liealg::Symbol::b1; };
              const liealg::LieVector br = liealg::heis_bracket(liealg::make_gen(liealg::Algebra::Heisenberg, sym(f), m),
                                                                liealg::make_gen(liealg::Algebra::Heisenberg, sym(g), n));
              FockState e = s;
              e *= br.coeff(liealg::make_gen(liealg::Algebra::Heisenberg, liealg::Symbol::one0)) * kappa;
              const FockState c = commutator_apply([&](const FockState& t) { return apply_mode(f, m, t, p); },
                                                   [&](const FockState& t) { return apply_mode(g, n, t, p); }, s);
              if (!(c == e)) ++bad;
            }
    CHECK(bad == 0);
  }
}

TEST_CASE("contractions") {
  CHECK(contraction_check(Family::A, Family::AS, 2, -2, 0) == 1);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) CHECK(contraction_check(Family::A, Family::AS, m, n, 1) == 0);
  CHECK(contraction_check(Family::AS, Family::A, 3, -3, 1) == -1);
  CHECK(contraction_check(Family::AS, Family::A, 0, 0, 0) == 0);
  // the two contractions add up to the full commutator in either ordering
  for (int r : {0, 1})
    for (auto [f, g] : {std::pair{Family::A, Family::AS}, std::pair{Family::A1, Family::A1S}})
      for (int m = -5; m <= 5; ++m)
        for (int n = -5; n <= 5; ++n)
          CHECK(contraction_check(f, g, m, n, r) - contraction_check(g, f, n, m, r) == delta(m + n, 0));
}

TEST_CASE("normal-ordered sums on simple states") {
  for (int r : {0, 1}) {
    const RepParams p = params(r);
    ModeProduct q{{Family::A, Family::AS}, 0, one, "a a*"};
    CHECK(no_sum_apply(q, vacuum(), p).is_zero());
    CHECK(no_sum_apply(q, FockState(), p).is_zero());
  }
  const RepParams p0 = params(0);
  ModeProduct q{{Family::A, Family::AS}, -1, one, "a a*"};
  CHECK(no_sum_apply(q, x(-1), p0) == brute_force(q, x(-1), p0));
}

TEST_CASE("pinned enumeration agrees with brute force") {
  const auto states = random_states(12, 3, 3, 9);
  const auto weight = [](const std::vector<int>& i) {
    Rational c = 1;
    for (std::size_t k = 0; k < i.size(); ++k) c *= (i[k] + 2 * static_cast<int>(k) + 1);
    return c;
  };
  const std::vector<std::vector<Family>> shapes{
      {Family::A, Family::AS},           {Family::A1, Family::A1S},         {Family::A1, Family::AS},
      {Family::A, Family::A1S},          {Family::B, Family::B},            {Family::B1, Family::B1},
      {Family::B, Family::B1},           {Family::B, Family::AS},           {Family::B1, Family::A1S},
      {Family::A, Family::AS, Family::AS}, {Family::A, Family::A1S, Family::A1S}, {Family::A1, Family::AS, Family::A1S}};
  for (int r : {0, 1}) {
    const RepParams p = params(r, 2);
    std::size_t bad = 0;
    for (const auto& shape : shapes)
      for (int N = -2; N <= 2; ++N) {
        const ModeProduct prod{shape, N, weight, "shape"};
        for (const auto& s : states)
          if (!(no_sum_apply(prod, s, p) == brute_force(prod, s, p))) ++bad;
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("unbounded creator ranges are rejected") {
  const RepParams p = params(1);
  ModeProduct q{{Family::A, Family::A}, 0, one, "a a"};
  CHECK_THROWS_AS(no_sum_apply(q, vacuum(), p), std::domain_error);
}

TEST_CASE("seeded states are deterministic") {
  const auto a = random_states(10, 3, 3, 42), b = random_states(10, 3, 3, 42), c = random_states(10, 3, 3, 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& s : a)
    for (const auto& [m, coeff] : s.terms()) {
      CHECK(m.degree() <= 3);
      for (const auto& [v, e] : m.exps)
        if (v.kind == VarKind::Y || v.kind == VarKind::Y1) CHECK(v.index < 0);
    }
}

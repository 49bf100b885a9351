#include "threepv/realization.hpp"

#include <doctest.h>

using namespace threepv;
using namespace threepv::fock;
using namespace threepv::realization;
using liealg::Algebra;
using liealg::Symbol;
using liealg::WittKind;

namespace {

RepParams params(int r, Rational kappa0 = 1) {
  RepParams p;
  p.r = r;
  p.kappa0 = kappa0;
  p.B0 = frac(1, 3);
  p.B1 = {{{2, 5}, {-1, 2}}};
  return p;
}

std::vector<FockState> states(int r) {
  auto out = random_states(4, 2, 2, 100 + r);
  out.insert(out.begin(), vacuum(0));
  out.push_back(vacuum(1));
  return out;
}

FockState comm(const ModeOperator& A, const ModeOperator& B, const FockState& s, const RepParams& p) {
  return apply(A, apply(B, s, p), p) - apply(B, apply(A, s, p), p);
}

const Symbol kAffine[] = {Symbol::e, Symbol::f, Symbol::h, Symbol::e1, Symbol::f1, Symbol::h1};

}  // namespace

TEST_CASE("binomials and central charge") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-2, 2) == 3);
  CHECK(binom(3, 0) == 1);
  CHECK(central_charge(0) == frac(-1, 2));
  CHECK(central_charge(1) == frac(-1, 6));
  for (long k : {1, 2, 5}) CHECK(central_charge(0, VirParams::standard(k), k) == frac(-1, 2));
}

TEST_CASE("normal products follow the field convention") {
  const RepParams p = params(1);
  // (d b)_(n) = -n b_(n-1)
  const FieldExpr db = FieldExpr::normal_product({{Family::B, 1}});
  const FockState s = monomial_state({{VarKind::Y, -3}});
  for (int n = -3; n <= 3; ++n) {
    FockState expect = apply(single_mode(Family::B, n - 1), s, p);
    expect *= Rational(-n);
    CHECK(apply(db.mode(n), s, p) == expect);
  }
  // alpha* has weight 0: (d a*)_(n) = -n a*_n
  const FieldExpr das = FieldExpr::normal_product({{Family::AS, 1}});
  const FockState t = monomial_state({{VarKind::X, 2}});
  for (int n = -2; n <= 2; ++n) {
    FockState expect = apply(single_mode(Family::AS, n), t, p);
    expect *= Rational(-n);
    CHECK(apply(das.mode(n), t, p) == expect);
  }
}

TEST_CASE("tau example on the vacuum") {
  for (int r : {0, 1}) {
    const RepParams p = params(r, 2);
    const FockState v = vacuum();
    const FockState lhs = comm(tau_mode(Symbol::e, 1, p), tau_mode(Symbol::f, -1, p), v, p);
    FockState rhs = apply(tau_mode(Symbol::h, 0, p), v, p);
    rhs.add_scaled(v, -chi0(p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tau respects the affine brackets, |m|,|n| <= 2") {
  for (int r : {0, 1}) {
    const RepParams p = params(r, 2);
    const auto sts = states(r);
    std::size_t bad = 0, checked = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j)
        for (int m = -2; m <= 2; ++m)
          for (int n = -2; n <= 2; ++n) {
            const liealg::GenId a{Algebra::Affine, kAffine[i], m}, b{Algebra::Affine, kAffine[j], n};
            const ModeOperator A = tau_mode(a.symbol, m, p), B = tau_mode(b.symbol, n, p);
            const ModeOperator R = realize_affine(liealg::affine_bracket(a, b), p);
            for (const auto& s : sts) {
              ++checked;
              if (comm(A, B, s, p) != apply(R, s, p)) ++bad;
            }
          }
    CHECK(checked == 21 * 25 * sts.size());
    CHECK(bad == 0);
  }
}

TEST_CASE("pi(d) field forms agree with the mode sums") {
  const RepParams p = params(0);
  for (auto k : {WittKind::d, WittKind::d1}) {
    const FieldExpr fld = pi_witt_field(k);
    for (int m = -3; m <= 3; ++m)
      for (const auto& s : states(0)) CHECK(apply(fld.mode(m), s, p) == apply(pi_witt_mode(k, m), s, p));
  }
}

TEST_CASE("Witt realization satisfies the lambda brackets with the delta_{r,0} terms") {
  const std::pair<WittKind, WittKind> fams[] = {
      {WittKind::d, WittKind::d}, {WittKind::d1, WittKind::d1}, {WittKind::d, WittKind::d1}};
  for (int r : {0, 1}) {
    const RepParams p = params(r);
    for (const auto& [a, b] : fams) {
      const LambdaBracket lb = witt_lambda(a, b, r);
      std::size_t bad = 0;
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
          for (const auto& s : states(r))
            if (!check_lambda(lb, m, n, s, p).pass) ++bad;
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("r = 1 Witt realization is an anti-homomorphism without anomaly") {
  const RepParams p = params(1);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      const auto w = liealg::witt_bracket({Algebra::Witt, Symbol::d, m}, {Algebra::Witt, Symbol::d, n});
      for (const auto& s : states(1)) {
        FockState rhs;
        for (const auto& [g, c] : w.terms()) rhs.add_scaled(apply(pi_witt_mode(WittKind::d, g.mode), s, p), -c);
        CHECK(comm(pi_witt_mode(WittKind::d, m), pi_witt_mode(WittKind::d, n), s, p) == rhs);
      }
    }
}

TEST_CASE("r = 0 Witt realization has a central anomaly") {
  const RepParams p = params(0);
  // [pi(d1)_2, pi(d1)_-2] picks up a scalar on the vacuum
  const FockState v = vacuum();
  const FockState lhs = comm(pi_witt_mode(WittKind::d1, 2), pi_witt_mode(WittKind::d1, -2), v, p);
  const FockState rhs = apply(lambda_to_modes(witt_lambda(WittKind::d1, WittKind::d1, 0), 2, -2), v, p);
  CHECK(lhs == rhs);
  const FockState no_anomaly = apply(lambda_to_modes(witt_lambda(WittKind::d1, WittKind::d1, 1), 2, -2), v, p);
  CHECK(lhs != no_anomaly);
}

TEST_CASE("lemma items on the Heisenberg fields") {
  for (long k : {1, 3}) {
    const RepParams p = params(0, k);
    for (int item : {1, 3, 10, 14}) {
      const LambdaBracket lb = pairs_item(item, k);
      std::size_t bad = 0;
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
          for (const auto& s : states(0))
            if (!check_lambda(lb, m, n, s, p).pass) ++bad;
      CHECK_MESSAGE(bad == 0, "item " << item);
    }
  }
  CHECK_THROWS_AS(pairs_item(2, 1), std::invalid_argument);
}

TEST_CASE("Virasoro realization: like-kind families close with c1 = cbar") {
  for (int r : {0, 1}) {
    const RepParams p = params(r, 2);
    const VirParams vp = VirParams::standard(2);
    const VirCentral spec{central_charge(r), 0};
    for (auto k : {WittKind::d, WittKind::d1}) {
      const Symbol sym = k == WittKind::d ? Symbol::D : Symbol::D1;
      std::size_t bad = 0;
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          const auto rhs = realize_vir(liealg::vir_bracket({Algebra::Virasoro, sym, m}, {Algebra::Virasoro, sym, n}),
                                       vp, spec);
          for (const auto& s : states(r))
            if (comm(pi_vir_mode(k, m, vp), pi_vir_mode(k, n, vp), s, p) != apply(rhs, s, p)) ++bad;
        }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("Virasoro realization: the mixed family has no central term") {
  const int r = 0;
  const RepParams p = params(r, 1);
  const VirParams vp = VirParams::standard(1);
  const VirCentral spec{central_charge(r), 0}, alt{0, -central_charge(r) / 2};
  std::size_t spec_bad = 0, alt_bad = 0;
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      const auto br = liealg::vir_bracket({Algebra::Virasoro, Symbol::D, m}, {Algebra::Virasoro, Symbol::D1, n});
      const FockState lhs = comm(pi_vir_mode(WittKind::d, m, vp), pi_vir_mode(WittKind::d1, n, vp), vacuum(), p);
      if (lhs != apply(realize_vir(br, vp, spec), vacuum(), p)) ++spec_bad;
      if (lhs != apply(realize_vir(br, vp, alt), vacuum(), p)) ++alt_bad;
    }
  CHECK(spec_bad > 0);
  CHECK(alt_bad == 0);
}

TEST_CASE("operator handles") {
  RepParams p = params(0, 2);
  const FockState s = random_states(1, 2, 2, 5).front();
  CHECK(apply(build_operator({OpFamily::TauF, 2}, p), s, p) == apply(tau_mode(Symbol::f, 2, p), s, p));
  CHECK(apply(build_operator({OpFamily::PiVirD1, -1}, p), s, p) ==
        apply(pi_vir_mode(WittKind::d1, -1, VirParams::standard(2)), s, p));
  CHECK(operator_name({OpFamily::RawHeis, -3, Family::B1}) == "b1_-3");
  CHECK_THROWS_AS(build_operator({OpFamily::RawOsc, 0, Family::B}, p), std::invalid_argument);
  p.kappa0 = 0;
  CHECK_THROWS_AS(build_operator({OpFamily::PiVirD, 0}, p), std::invalid_argument);
  CHECK_THROWS_AS(tau_mode(Symbol::w0, 0, p), std::invalid_argument);
}

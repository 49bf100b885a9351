#include "threepv/density.hpp"

#include <stdexcept>

namespace threepv::density {

using liealg::GenId;
using liealg::Symbol;

std::string ubasis_name(const UBasis& b) { return (b.sym == USym::a ? "a_" : "abar_") + std::to_string(b.k); }

UAlphaVec density_act(const GenId& g, const UAlphaVec& v) {
  if (g.algebra != liealg::Algebra::Witt) throw std::invalid_argument("U_alpha is a Witt module");
  const Rational& al = v.alpha;
  const int n = g.mode;
  UAlphaVec out{al, {}};
  auto& o = out.terms;
  for (const auto& [b, c] : v.terms.terms()) {
    const int i = b.k;
    if (g.symbol == Symbol::d && b.sym == USym::a) {
      o.add({USym::a, i + n + 1}, c * (al + i));
      o.add({USym::a, i + n}, c * 4 * (al + i));
    } else if (g.symbol == Symbol::d) {
      o.add({USym::abar, n + i + 1}, c * (al + i + 1));
      o.add({USym::abar, n + i}, c * (4 * al + 4 * i + 2));
    } else if (b.sym == USym::a) {
      o.add({USym::abar, n + i - 1}, c * (al + i));
    } else {
      o.add({USym::a, n + i + 1}, c * (al + i + 1));
      o.add({USym::a, n + i}, c * 2 * (2 * al + 2 * i + 1));
    }
  }
  return out;
}

UAlphaVec density_act(const liealg::LieVector& x, const UAlphaVec& v) {
  UAlphaVec out{v.alpha, {}};
  for (const auto& [g, c] : x.terms()) out.terms.add_scaled(density_act(g, v).terms, c);
  return out;
}

liealg::CheckSummary density_module_check(const std::vector<Rational>& alphas, int window) {
  liealg::CheckSummary out;
  const auto gens = liealg::generators(liealg::Algebra::Witt, window, false);
  for (const Rational& al : alphas)
    for (USym s : {USym::a, USym::abar})
      for (int k = -window; k <= window; ++k) {
        const UAlphaVec v{al, SparseVector<UBasis>({s, k}, 1)};
        for (const auto& x : gens)
          for (const auto& y : gens) {
            const UAlphaVec lhs = density_act(liealg::witt_bracket(x, y), v);
            const UAlphaVec xy = density_act(x, density_act(y, v));
            const UAlphaVec yx = density_act(y, density_act(x, v));
            const SparseVector<UBasis> res = lhs.terms - (xy.terms - yx.terms);
            ++out.checked;
            if (!res.is_zero())
              out.violations.push_back({"alpha=" + to_string(al) + " [" + liealg::gen_name(x) + "," + liealg::gen_name(y) +
                                            "]." + ubasis_name({s, k}),
                                        res.format(ubasis_name)});
          }
      }
  return out;
}

}  // namespace threepv::density

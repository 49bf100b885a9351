#pragma once

// The modules U_alpha of the 3-point Witt algebra: basis a_k, abar_k
// (formal powers t^(alpha+k) and t^(alpha+k) u).

#include "threepv/liealg.hpp"

#include <compare>
#include <vector>

namespace threepv::density {

enum class USym { a, abar };

struct UBasis {
  USym sym = USym::a;
  int k = 0;
  auto operator<=>(const UBasis&) const = default;
};

std::string ubasis_name(const UBasis& b);

struct UAlphaVec {
  Rational alpha = 0;
  SparseVector<UBasis> terms;
  friend bool operator==(const UAlphaVec&, const UAlphaVec&) = default;
};

/// Action of d_n or d1_n (a Witt-tagged generator).
UAlphaVec density_act(const liealg::GenId& g, const UAlphaVec& v);
/// Linear extension over a Witt vector.
UAlphaVec density_act(const liealg::LieVector& x, const UAlphaVec& v);

/// act([x,y], v) = x(y v) - y(x v) for Witt basis x, y and basis vectors v, all |modes| <= W.
liealg::CheckSummary density_module_check(const std::vector<Rational>& alphas, int window);

}  // namespace threepv::density

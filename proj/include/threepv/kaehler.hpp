#pragma once

// 1-forms on R modulo exact differentials, in the basis
// w0 = class of t^-1 dt and w1 = class of t^-1 u dt.

#include "threepv/ring.hpp"

namespace threepv::kaehler {

using ring::RRingElem;

/// dt_coeff * dt + du_coeff * du.
struct OneForm {
  RRingElem dt_coeff;
  RRingElem du_coeff;
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// q0 * w0 + q1 * w1.
struct CohomClass {
  Rational q0 = 0;
  Rational q1 = 0;
  friend bool operator==(const CohomClass&, const CohomClass&) = default;
  CohomClass& operator+=(const CohomClass& o) {
    q0 += o.q0;
    q1 += o.q1;
    return *this;
  }
  friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
};

OneForm differential(const RRingElem& f);
CohomClass reduce_mod_dR(const OneForm& w);

/// Class of f dg.
CohomClass pairing(const RRingElem& f, const RRingElem& g);

/// Class of t^j u dt is lambda_coeff(j) * w1.
Rational lambda_coeff(int j);

/// pairing(t^m, t^n u).q1. Throws std::logic_error if the w0 part is nonzero.
Rational mu_oracle(int m, int n);

}  // namespace threepv::kaehler

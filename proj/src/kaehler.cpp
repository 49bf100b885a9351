#include "threepv/kaehler.hpp"

#include <stdexcept>

namespace threepv::kaehler {

OneForm differential(const RRingElem& f) {
  OneForm w;
  for (const auto& [m, c] : f.vec().terms()) {
    w.dt_coeff += RRingElem::monomial(m.tpow - 1, m.upow, c * m.tpow);
    if (m.upow == 1) w.du_coeff += RRingElem::monomial(m.tpow, 0, c);
  }
  return w;
}

Rational lambda_coeff(int j) {
  // (k+3) t^(k+1) u dt = -(4k+6) t^k u dt mod dR, anchored at lambda_{-1} = 1.
  Rational lam = 1;
  if (j >= -1) {
    for (int k = -1; k < j; ++k) lam *= frac(-(4 * k + 6), k + 3);
  } else {
    for (int k = -2; k >= j; --k) lam *= frac(-(k + 3), 4 * k + 6);
  }
  return lam;
}

CohomClass reduce_mod_dR(const OneForm& w) {
  // Trade du for dt: u du = (t+2) dt in the module, t^k du = -k t^(k-1) u dt mod dR.
  RRingElem dt = w.dt_coeff;
  for (const auto& [m, c] : w.du_coeff.vec().terms()) {
    if (m.upow == 1) {
      dt += RRingElem::monomial(m.tpow + 1, 0, c);
      dt += RRingElem::monomial(m.tpow, 0, 2 * c);
    } else {
      dt += RRingElem::monomial(m.tpow - 1, 1, -c * m.tpow);
    }
  }
  CohomClass out;
  for (const auto& [m, c] : dt.vec().terms()) {
    if (m.upow == 0) {
      if (m.tpow == -1) out.q0 += c;
    } else {
      out.q1 += c * lambda_coeff(m.tpow);
    }
  }
  return out;
}

CohomClass pairing(const RRingElem& f, const RRingElem& g) {
  const OneForm dg = differential(g);
  return reduce_mod_dR({f * dg.dt_coeff, f * dg.du_coeff});
}

Rational mu_oracle(int m, int n) {
  const CohomClass c = pairing(RRingElem::t_pow(m), RRingElem::u_t_pow(n));
  if (c.q0 != 0) throw std::logic_error("mu_oracle: nonzero w0 part");
  return c.q1;
}

}  // namespace threepv::kaehler

#pragma once

// Fock space C[x] (x) C[y] (x) V for the beta-gamma system a, a*, a1, a1* and
// the 3-point Heisenberg algebra b, b1, with exact evaluation of normal-ordered
// mode sums on polynomial states.

#include "threepv/rational.hpp"
#include "threepv/sparse.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace threepv::fock {

enum class VarKind { X, X1, Y, Y1 };

struct Var {
  VarKind kind = VarKind::X;
  int index = 0;
  auto operator<=>(const Var&) const = default;
};

std::string var_name(const Var& v);

/// Product of variables times v0 or v1.
struct FockMonomial {
  std::map<Var, int> exps;
  int vpart = 0;
  auto operator<=>(const FockMonomial&) const = default;
  int degree() const;
};

std::string monomial_name(const FockMonomial& m);

using FockState = SparseVector<FockMonomial>;

/// |0> (x) v0.
FockState vacuum(int vpart = 0);
FockState monomial_state(const std::vector<Var>& vars, int vpart = 0, const Rational& c = 1);
std::string to_string(const FockState& s);

struct RepParams {
  int r = 0;
  Rational kappa0 = 1;
  Rational B0 = 0;
  std::array<std::array<Rational, 2>, 2> B1{};
  Rational chi1 = 0;
  /// Throws std::invalid_argument unless r in {0,1}, B1 diagonal equal, chi1 = 0,
  /// and (when required) kappa0 != 0.
  void validate(bool require_kappa0 = false) const;
};

/// a, a*, a1, a1*, b, b1 mode families.
enum class Family { A, AS, A1, A1S, B, B1 };

std::string family_name(Family f);

/// Whether the mode sits in the annihilation part under the ordering for r.
bool is_annihilator(Family f, int mode, int r);

FockState apply_mode(Family f, int mode, const FockState& s, const RepParams& p);
FockState osc_apply(Family which, int m, const FockState& s, int r);
FockState heis_apply(Family which, int n, const FockState& s, const RepParams& p);

/// sum over i_1 + ... + i_k = total of coeff(i) :F_1(i_1) ... F_k(i_k):
struct ModeProduct {
  std::vector<Family> factors;
  int total = 0;
  std::function<Rational(const std::vector<int>&)> coeff;
  std::string label;
};

/// Finite sum of normal-ordered mode products plus a multiple of the identity.
struct ModeOperator {
  std::vector<ModeProduct> products;
  Rational identity = 0;
  std::string label;
};

/// Single mode F_m as a ModeOperator.
ModeOperator single_mode(Family f, int m, const Rational& c = 1);

/// Applies a normal-ordered product with fixed indices: annihilators first, then creators.
FockState apply_normal_ordered(const std::vector<Family>& factors, const std::vector<int>& idx, const FockState& s,
                               const RepParams& p);

/// Locally finite evaluation; throws std::domain_error if the creator part of
/// a product leaves an unbounded index range.
FockState no_sum_apply(const ModeProduct& prod, const FockState& s, const RepParams& p);
FockState apply(const ModeOperator& op, const FockState& s, const RepParams& p);

using StateOp = std::function<FockState(const FockState&)>;

/// A(B(s)) - B(A(s)).
FockState commutator_apply(const StateOp& A, const StateOp& B, const FockState& s);

/// [A_m^(-), B_n] for A, B in the beta-gamma system under ordering r.
Rational contraction_check(Family a, Family b, int m, int n, int r);

/// Deterministic seeded states: variable indices in [-W, W] (Heisenberg
/// variables negative), total degree <= degree, coefficients in {+-1, +-2, +-1/2}.
std::vector<FockState> random_states(std::size_t count, int degree, int window, std::uint64_t seed);

}  // namespace threepv::fock

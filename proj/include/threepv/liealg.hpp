#pragma once

// Structure constants of the 3-point affine, Heisenberg, Witt and Virasoro
// algebras, the 2-cocycles phi1/phi2, and algebraic consistency checkers.

#include "threepv/kaehler.hpp"
#include "threepv/rational.hpp"
#include "threepv/sparse.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace threepv::liealg {

enum class Algebra { Affine, Heisenberg, Witt, Virasoro };

enum class Symbol {
  // affine
  e, f, h, e1, f1, h1, w0, w1,
  // Heisenberg
  b, b1, one0, one1,
  // Witt
  d, d1,
  // Virasoro: D, D1 are the bold d, d1
  D, D1, c1, c2,
};

struct GenId {
  Algebra algebra = Algebra::Affine;
  Symbol symbol = Symbol::e;
  int mode = 0;
  auto operator<=>(const GenId&) const = default;
};

bool is_central(Symbol s);
/// Validates algebra/symbol pairing and mode 0 on central symbols.
GenId make_gen(Algebra a, Symbol s, int mode = 0);
std::string gen_name(const GenId& g);
std::string algebra_name(Algebra a);

using LieVector = SparseVector<GenId>;
std::string to_string(const LieVector& v);

enum class CentralSource { ClosedForm, KaehlerOracle };

/// Verbatim table of the affine algebra (ClosedForm), or the same table with
/// every central term replaced by (x,y) * pairing(f, g) (KaehlerOracle).
LieVector affine_bracket(const GenId& a, const GenId& b, CentralSource src = CentralSource::ClosedForm);
/// [x(t^.), y(t^.)] = [x,y] fg + (x,y) class(f dg), with (e,f)=(f,e)=1, (h,h)=2.
LieVector affine_bracket_kassel(const GenId& a, const GenId& b);
LieVector heis_bracket(const GenId& a, const GenId& b);
LieVector witt_bracket(const GenId& a, const GenId& b);
LieVector vir_bracket(const GenId& a, const GenId& b);

/// Dispatches on the algebra tag of a (both must share it).
LieVector bracket(const GenId& a, const GenId& b, CentralSource src = CentralSource::ClosedForm);
/// Bilinear extension.
LieVector bracket(const LieVector& a, const LieVector& b, CentralSource src = CentralSource::ClosedForm);

/// n!! for odd n, extended to negative odd n by (-2j-1)!! = (-1)^j / (2j-1)!!.
Rational double_factorial(int n);

enum class MuConvention {
  None,
  /// (2(m+n)-1)!! taken at a negative argument.
  NegativeDoubleFactorial,
  /// (m+n+1)! at a negative argument; value defined as 0.
  NegativeFactorial,
};

struct MuValue {
  Rational value;
  MuConvention convention = MuConvention::None;
};

MuValue mu_closed_form(int m, int n);

enum class WittKind { d, d1 };

Rational phi1(WittKind ka, int k, WittKind kb, int l);
Rational phi2(WittKind ka, int k, WittKind kb, int l);

using Cocycle = std::function<Rational(WittKind, int, WittKind, int)>;

// ---------------------------------------------------------------------------
// Checkers

struct Violation {
  std::string lhs;
  std::string residual;
};

struct CheckSummary {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// Every generator of the algebra with |mode| <= W, central ones optional.
std::vector<GenId> generators(Algebra a, int window, bool include_central);

CheckSummary check_antisymmetry(Algebra a, int window, CentralSource src = CentralSource::ClosedForm);
/// Unordered triples of non-central generators with |mode| <= W.
CheckSummary check_jacobi(Algebra a, int window, CentralSource src = CentralSource::ClosedForm,
                          unsigned threads = 1);
/// phi([a,b],c) + phi([b,c],a) + phi([c,a],b) over Witt basis triples.
CheckSummary check_cocycle_identity(const Cocycle& phi, int window);

struct CoboundaryResult {
  bool infeasible = false;
  int window = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  /// Equations (i, j) paired as ordered generator pairs; y with y^T A = 0, y^T b != 0.
  std::vector<std::pair<GenId, GenId>> equation_pairs;
  SparseVector<int> certificate;
  /// When feasible: a functional f on the unknowns solving the system.
  LieVector witness;
};

/// Looks for f with f([x, y]) = phi(x, y) for Witt basis x, y with |mode| <= W.
CoboundaryResult coboundary_window_test(const Cocycle& phi, int window);

/// Re-checks a certificate independently: y^T A = 0 and y^T b != 0.
bool verify_certificate(const Cocycle& phi, const CoboundaryResult& res);

}  // namespace threepv::liealg

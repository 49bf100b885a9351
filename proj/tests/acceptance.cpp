// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [N]   (N restricts the run to criterion N)

#include "threepv/harness.hpp"
#include "threepv/kaehler.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace threepv;
using namespace threepv::harness;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

SuiteConfig config(const std::string& suite, int window) {
  SuiteConfig c;
  c.suite = suite;
  c.window = window;
  c.seed = 20240917;
  return c;
}

// nontrivial zero-mode data so b_0 and b1_0 act
SuiteConfig with_fock_data(SuiteConfig c, int r, long kappa0) {
  c.r = r;
  c.kappa0 = kappa0;
  c.B0 = frac(1, 3);
  c.B1 = {{{2, 5}, {-1, 2}}};
  c.states = parse_state_spec("random:20:3");
  return c;
}

std::string counts(const CheckReport& rep) {
  return std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed";
}

Outcome single(const SuiteConfig& c) {
  const CheckReport rep = run_suite(c);
  return {rep.ok() && rep.passed > 0, c.suite + ": " + counts(rep)};
}

Outcome sweep(const std::vector<SuiteConfig>& cfgs, std::string* findings = nullptr) {
  Outcome o{true, ""};
  for (const auto& c : cfgs) {
    const CheckReport rep = run_suite(c);
    o.pass = o.pass && rep.ok() && rep.passed > 0;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += "r=" + std::to_string(c.r) + " kappa0=" + to_string(c.kappa0) + (c.B0 == 0 ? " B=0" : "") + ": " +
                counts(rep);
    if (findings)
      for (const auto& f : rep.findings)
        if (findings->find("    " + f + "\n") == std::string::npos) *findings += "    " + f + "\n";
  }
  return o;
}

Outcome c2_kaehler() {
  const CheckReport rep = run_suite(config("kaehler-basis", 20));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> nterms(1, 5), tp(-10, 10), up(0, 1), cf(-9, 9);
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    ring::RRingElem f;
    const int n = nterms(rng);
    for (int j = 0; j < n; ++j) f += ring::RRingElem::monomial(tp(rng), up(rng), cf(rng));
    if (!(kaehler::reduce_mod_dR(kaehler::differential(f)) == kaehler::CohomClass{})) ++bad;
  }
  return {rep.ok() && rep.passed == 41 && bad == 0,
          "basis: " + counts(rep) + "; exactness: " + std::to_string(200 - bad) + "/200 differentials reduce to 0"};
}

Outcome c9_mu() {
  const CheckReport mu = run_suite(config("mu-compare", 6));
  const CheckReport jac = run_suite(config("affine-jacobi", 5));
  const bool produced = mu.tables.contains("mu") && mu.tables["mu"].size() == 13 * 13;
  std::string d = "mu table produced with " + std::to_string(mu.tables["mu"].size()) + " entries, " +
                  std::to_string(mu.failed) + " disagreements; oracle-backed Jacobi " + counts(jac);
  return {produced && jac.ok(), d};
}

Outcome c12_determinism() {
  std::vector<SuiteConfig> cfgs;
  for (const auto& s : suite_names()) {
    SuiteConfig c = config(s, std::min(default_window(s), 2));
    c.states = parse_state_spec("random:4:3");
    c.B0 = frac(1, 3);
    c.B1 = {{{2, 5}, {-1, 2}}};
    cfgs.push_back(c);
  }
  std::size_t same = 0;
  for (const auto& c : cfgs) {
    const std::string a = emit_report(run_suite(c), "json"), b = emit_report(run_suite(c), "json");
    if (a == b) ++same;
  }
  return {same == cfgs.size(), std::to_string(same) + "/" + std::to_string(cfgs.size()) + " suites byte-identical"};
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  std::string vir_findings;
  const std::vector<Criterion> criteria{
      {1, "Witt bracket table equals geometric commutators, |modes| <= 12", 5,
       [] { return single(config("ring-witt", 12)); }},
      {2, "Kaehler basis and exactness, |k| <= 20, 200 seeded f", 5, c2_kaehler},
      {3, "phi1, phi2 cocycle identity, |modes| <= 8", 30, [] { return single(config("cocycle-identity", 8)); }},
      {4, "phi1, phi2 not coboundaries on window 6 (escalating to 10)", 10,
       [] { return single(config("coboundary-window", 6)); }},
      {5, "Jacobi: affine (oracle central terms), Heisenberg, Witt, Virasoro, |modes| <= 5", 60,
       [] { return single(config("affine-jacobi", 5)); }},
      {6, "Heisenberg representation, kappa0 in {1,2}, |m|,|n| <= 4", 30,
       [] {
         return sweep({with_fock_data(config("heisenberg-rep", 4), 0, 1),
                       with_fock_data(config("heisenberg-rep", 4), 0, 2)});
       }},
      {7, "affine realization tau, r in {0,1}, kappa0 in {1,2}, |m|,|n| <= 3", 600,
       [] {
         std::vector<SuiteConfig> c;
         for (int r : {0, 1})
           for (long k : {1, 2}) c.push_back(with_fock_data(config("affine-rep", 3), r, k));
         return sweep(c);
       }},
      {8, "Virasoro realization, c1 -> pi(cbar), c2 -> 0, both r, |m|,|n| <= 3", 600,
       [&] {
         std::vector<SuiteConfig> c;
         for (int r : {0, 1})
           for (long k : {1, 2}) c.push_back(with_fock_data(config("virasoro-rep", 3), r, k));
         // zero modes off, so [pi(D1_m), pi(D1_n)]|0> can be purely central
         for (int r : {0, 1}) {
           SuiteConfig z = with_fock_data(config("virasoro-rep", 3), r, 1);
           z.B0 = 0;
           z.B1 = {};
           c.push_back(z);
         }
         return sweep(c, &vir_findings);
       }},
      {9, "mu closed form vs Kaehler oracle report, oracle-backed Jacobi", 60, c9_mu},
      {10, "density modules, alpha in {0, 1/2, -3/4, 2}, window 6", 10,
       [] { return single(config("density-module", 6)); }},
      {11, "pairs items (1), (3), (10), (14), |m|,|n| <= 3, both r", 120,
       [] {
         std::vector<SuiteConfig> c;
         for (int r : {0, 1})
           for (long k : {1, 2}) c.push_back(with_fock_data(config("pairs-subset", 3), r, k));
         return sweep(c);
       }},
      {12, "determinism: identical config and seed give byte-identical JSON", 300, c12_determinism},
  };

  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail << "; "
         << secs << " s of " << c.budget_s << " s" << (in_time ? "" : ", over budget") << "]";
    std::cout << line.str() << std::endl;
    if (c.id == 8 && !vir_findings.empty()) std::cout << vir_findings << std::flush;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

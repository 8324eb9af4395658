#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msuper/symmetrizer.hpp"

namespace msuper {

/// Outcome of one curated verification suite.  Exit-code contract:
/// failures empty <=> success.
struct VerifyReport {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  int n_max = 5;
  int deg_max = 3;
  uint64_t seed = 1;
};

VerifyReport suite_hecke(const VerifyOptions& opt);
VerifyReport suite_module(const VerifyOptions& opt);
VerifyReport suite_eigen(const VerifyOptions& opt);
VerifyReport suite_eval0(const VerifyOptions& opt);
VerifyReport suite_eval1(const VerifyOptions& opt);
VerifyReport suite_hooks(const VerifyOptions& opt);
VerifyReport suite_symmetrize(const VerifyOptions& opt);
VerifyReport suite_singular(const VerifyOptions& opt);

/// Runs one named suite, or every suite for "all".  Unknown names throw.
std::vector<VerifyReport> run_suites(const std::string& name, const VerifyOptions& opt);

std::string format_report(const VerifyReport& r);

/// Singularity probe at q = t^e.
struct SingularProbe {
  std::vector<int> specialized_texp;   // t-exponents of the specialized spectral vector
  bool content_condition = false;      // matches the content vector of some RSYT
  bool pole = false;                   // specialization of M hit a pole
  bool eigen_confirmed = false;        // xi_i M = omega_i M for all i after specialization
};

SingularProbe singular_probe(const Composition& alpha, const ModuleLabel& label, int e,
                             MCache* cache = nullptr);

/// The four printed singular fixtures; each entry holds the byte-compared
/// canonical renderings.
struct SingularFixtureResult {
  std::string name;
  std::string got;
  std::string expected;
  bool ok() const { return got == expected; }
};

std::vector<SingularFixtureResult> singular_fixtures(MCache* cache = nullptr);

}  // namespace msuper

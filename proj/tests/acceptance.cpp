// Acceptance suite: runs every criterion at its pinned scale and prints one
// PASS/FAIL line per criterion.  Exit code 0 only when all criteria pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <vector>

#include "msuper/json_io.hpp"
#include "msuper/verify.hpp"

using namespace msuper;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

bool report(int number, const std::string& text, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (c.failures == 0 ? "PASS" : "FAIL") << " criterion " << number << ": " << text
            << " (" << c.cases << " cases, " << secs << " s)\n";
  for (const std::string& n : c.notes) std::cout << "       " << n << "\n";
  std::cout.flush();
  return c.failures == 0;
}

void from_suite(Criterion& c, const VerifyReport& r) {
  c.cases += r.cases;
  c.failures += static_cast<long>(r.failures.size());
  for (size_t i = 0; i < r.failures.size() && c.notes.size() < 8; ++i)
    c.notes.push_back(r.failures[i]);
}

std::vector<Composition> compositions_up_to(int n, int deg_max) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  auto rec = [&](auto&& self, int slot, int rest) -> void {
    if (slot == n - 1) {
      cur[slot] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[slot] = v;
      self(self, slot + 1, rest - v);
    }
  };
  for (int d = 0; d <= deg_max; ++d) rec(rec, 0, d);
  return out;
}

std::vector<Composition> window_partitions(int window, int deg_max, int n) {
  std::vector<Composition> out;
  Composition parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    Composition lam(n, 0);
    std::copy(parts.begin(), parts.end(), lam.begin());
    out.push_back(std::move(lam));
    if (static_cast<int>(parts.size()) == window) return;
    for (int v = 1; v <= std::min(remaining, cap); ++v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  rec(deg_max, deg_max);
  return out;
}

std::string comp_str(const Composition& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string label_str(const ModuleLabel& l) {
  std::string s = (l.kind == LabelKind::type0 ? "E={" : "F={");
  bool first = true;
  for (int i : l.members()) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "}@N" + std::to_string(l.N);
}

// Shared across criteria 3-6 so criterion 10 can sweep everything built.
MCache g_cache;
std::map<std::pair<int, uint64_t>, FermionPoly> g_tau0, g_tau1;

const FermionPoly& tau_of(const ModuleLabel& l) {
  auto& store = l.kind == LabelKind::type0 ? g_tau0 : g_tau1;
  auto [it, fresh] = store.try_emplace({l.N, l.set});
  if (fresh) it->second = tau_general(l);
  return it->second;
}

void check_eigen(Criterion& c, const ModuleLabel& label, const Composition& alpha) {
  const SuperPoly m = build_M(alpha, label, &g_cache);
  const SpectralVector zeta = spectral_vector(alpha, label);
  for (int i = 1; i <= label.N; ++i) {
    const bool ok = equals_scaled(cherednik_xi(i, m), m,
                                  RatQT::qt_pow(zeta[i - 1].qexp, zeta[i - 1].texp));
    c.check(ok, "xi_" + std::to_string(i) + " M != zeta M for " + label_str(label) + " alpha=" +
                    comp_str(alpha));
  }
}

void check_value(Criterion& c, const ModuleLabel& label, const Composition& alpha,
                 bool with_hook) {
  const bool type0 = label.kind == LabelKind::type0;
  const RatQT v = type0 ? V0(alpha, label) : V1(alpha, label);
  if (with_hook) {
    const RatQT vh = type0 ? V0_hook(alpha, label) : V1_hook(alpha, label);
    c.check(v == vh,
            "product vs hook form differ for " + label_str(label) + " " + comp_str(alpha));
  }
  const PointSpec pt = type0 ? PointSpec::x0(label.N) : PointSpec::x1(label.N);
  const SuperPoly direct = substitute_x(build_M(alpha, label, &g_cache), pt);
  c.check(equals_scaled(direct, SuperPoly::lift(tau_of(label)), v),
          "substitution != V * tau for " + label_str(label) + " " + comp_str(alpha));
}

}  // namespace

int main() {
  bool ok = true;

  ok &= report(1, "Hecke relations (braid, commuting, quadratic) on the full basis, N <= 6",
               [](Criterion& c) { from_suite(c, suite_hecke({6, 3, 1})); });

  ok &= report(2, "module structure: MD+DM = [N]_t, D^2 = M^2 = 0, tau eigenvectors, N <= 6",
               [](Criterion& c) { from_suite(c, suite_module({6, 3, 1})); });

  ok &= report(3, "Cherednik eigenfunctions: special labels N <= 5 (|alpha| <= 3) plus the "
                  "N = 6 general-label fixtures",
               [](Criterion& c) {
                 for (int n = 3; n <= 5; ++n) {
                   std::vector<ModuleLabel> labels;
                   for (int m = 0; m <= std::min(2, n - 1); ++m)
                     labels.push_back(ModuleLabel::type0_special(n, m));
                   for (int m = 1; m <= std::min(2, n - 1); ++m)
                     labels.push_back(ModuleLabel::type1_special(n, m));
                   const auto alphas = compositions_up_to(n, 3);
                   for (const ModuleLabel& label : labels)
                     for (const Composition& alpha : alphas) check_eigen(c, label, alpha);
                 }
                 const Composition a110{1, 1, 0, 0, 0, 0};
                 check_eigen(c, ModuleLabel::type0_label(6, (1u << 4) | (1u << 5)), a110);
                 check_eigen(c, ModuleLabel::type0_label(6, (1u << 3) | (1u << 5)), a110);
                 check_eigen(c, ModuleLabel::type0_label(6, (1u << 2) | (1u << 5)), a110);
                 check_eigen(c, ModuleLabel::type1_special(6, 3), {2, 1, 0, 0, 0, 0});
               });

  ok &= report(4, "type-0 evaluation: substitution at x^(0) = V0 = hook form, N <= 6, m <= 2, "
                  "|lambda| <= 4",
               [](Criterion& c) {
                 for (int n = 3; n <= 6; ++n)
                   for (int m = 0; m <= std::min(2, n - 2); ++m) {
                     const ModuleLabel label = ModuleLabel::type0_special(n, m);
                     for (const Composition& lam : window_partitions(n - m - 1, 4, n))
                       check_value(c, label, lam, /*with_hook=*/true);
                   }
               });

  ok &= report(5, "type-1 evaluation: substitution at x^(1) = V1 = hook form, same scale",
               [](Criterion& c) {
                 for (int n = 3; n <= 6; ++n)
                   for (int m = 1; m <= std::min(2, n - 1); ++m) {
                     const ModuleLabel label = ModuleLabel::type1_special(n, m);
                     for (const Composition& lam : window_partitions(m, 4, n))
                       check_value(c, label, lam, /*with_hook=*/true);
                   }
               });

  ok &= report(6, "composition evaluations via the R-product recursions, every rearrangement, "
                  "|lambda| <= 3, N <= 5",
               [](Criterion& c) {
                 for (int n = 3; n <= 5; ++n) {
                   for (int m = 0; m <= std::min(2, n - 2); ++m) {
                     const ModuleLabel label = ModuleLabel::type0_special(n, m);
                     for (const Composition& lam : window_partitions(n - m - 1, 3, n))
                       for (const Composition& alpha : window_rearrangements(lam, label))
                         check_value(c, label, alpha, /*with_hook=*/false);
                   }
                   for (int m = 1; m <= std::min(2, n - 1); ++m) {
                     const ModuleLabel label = ModuleLabel::type1_special(n, m);
                     for (const Composition& lam : window_partitions(m, 3, n))
                       for (const Composition& alpha : window_rearrangements(lam, label))
                         check_value(c, label, alpha, /*with_hook=*/false);
                   }
                 }
               });

  ok &= report(7, "hook identity and leg-length step relation, 200 random instances each",
               [](Criterion& c) { from_suite(c, suite_hooks({6, 4, 1})); });

  ok &= report(8, "symmetrization: annihilations, t-multinomial sum, closed special values, "
                  "N <= 5, |lambda| <= 3",
               [](Criterion& c) { from_suite(c, suite_symmetrize({5, 3, 1})); });

  ok &= report(9, "singular fixtures at q = t^-3 and q = t^2, byte-exact",
               [](Criterion& c) { from_suite(c, suite_singular({6, 3, 1})); });

  ok &= report(10, "leading terms of every polynomial built in criteria 3-6", [](Criterion& c) {
    for (const auto& [alpha, label] : g_cache.keys()) {
      const auto m = g_cache.find(alpha, label);
      c.check(leading_term_check(alpha, label, *m),
              "leading term fails for " + label_str(label) + " alpha=" + comp_str(alpha));
    }
  });

  return ok ? 0 : 1;
}

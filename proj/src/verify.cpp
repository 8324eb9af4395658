#include "msuper/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "msuper/json_io.hpp"

namespace msuper {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  VerifyReport report;
  Clock::time_point start = Clock::now();

  explicit Checker(std::string suite) { report.suite = std::move(suite); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report.cases;
    if (!ok) report.failures.push_back(describe());
  }

  VerifyReport done() {
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  }
};

std::string comp_str(const Composition& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string label_str(const ModuleLabel& l) {
  std::string s = l.kind == LabelKind::type0 ? "E={" : "F={";
  bool first = true;
  for (int i : l.members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "} N=" + std::to_string(l.N);
}

std::string brief_diff(const SuperPoly& a, const SuperPoly& b) {
  const SuperPoly d = a - b;
  if (d.is_zero()) return "equal";
  const auto& [k, c] = *d.terms.begin();
  return "first diff at x^" + comp_str(k.alpha) + " theta mask " + std::to_string(k.theta) +
         ": " + render(c);
}

std::string brief_diff(const FermionPoly& a, const FermionPoly& b) {
  const FermionPoly d = a - b;
  if (d.is_zero()) return "equal";
  const auto& [m, c] = *d.terms.begin();
  return "first diff at theta mask " + std::to_string(m) + ": " + render(c);
}

void all_compositions_rec(int slots, int degree, Composition& cur,
                          std::vector<Composition>& out) {
  if (slots == 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= degree; ++v) {
    cur.push_back(v);
    all_compositions_rec(slots - 1, degree - v, cur, out);
    cur.pop_back();
  }
}

std::vector<Composition> compositions_up_to(int n, int deg_max) {
  std::vector<Composition> out;
  Composition cur;
  for (int d = 0; d <= deg_max; ++d) all_compositions_rec(n, d, cur, out);
  return out;
}

// Partitions of total <= deg_max with at most `window` parts, padded to N.
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

std::vector<ModuleLabel> special_labels(int n, int m_cap) {
  std::vector<ModuleLabel> out;
  for (int m = 0; m <= std::min(m_cap, n - 1); ++m) out.push_back(ModuleLabel::type0_special(n, m));
  for (int m = 1; m <= std::min(m_cap, n - 1); ++m) out.push_back(ModuleLabel::type1_special(n, m));
  return out;
}

RatQT random_ratqt(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 3), nterms(1, 3);
  auto rand_poly = [&](bool nonzero) {
    PolyQT p;
    do {
      std::vector<std::pair<MonoQT, Int>> raw;
      const int k = nterms(gen);
      for (int i = 0; i < k; ++i)
        raw.push_back({MonoQT{expo(gen), expo(gen)}, Int(coeff(gen))});
      p = PolyQT::from_terms(std::move(raw));
    } while (nonzero && p.is_zero());
    return p;
  };
  return RatQT(rand_poly(false), rand_poly(true));
}

FermionPoly random_fermion(std::mt19937_64& gen, int n, int degree) {
  std::uniform_int_distribution<int> nterms(1, 3);
  FermionPoly p(n);
  const int k = nterms(gen);
  for (int i = 0; i < k; ++i) {
    uint64_t mask = 0;
    std::vector<int> idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j + 1;
    std::shuffle(idx.begin(), idx.end(), gen);
    for (int j = 0; j < degree; ++j) mask |= uint64_t(1) << (idx[j] - 1);
    p.add_term(mask, random_ratqt(gen));
  }
  return p;
}

SuperPoly random_super(std::mt19937_64& gen, int n, int deg_max, int fdeg) {
  std::uniform_int_distribution<int> nterms(1, 4), deg(0, deg_max);
  SuperPoly p(n);
  const int k = nterms(gen);
  for (int i = 0; i < k; ++i) {
    Composition alpha(n, 0);
    {
      const int d = deg(gen);
      std::uniform_int_distribution<int> slot(0, n - 1);
      for (int j = 0; j < d; ++j) ++alpha[slot(gen)];
    }
    uint64_t mask = 0;
    std::vector<int> idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j + 1;
    std::shuffle(idx.begin(), idx.end(), gen);
    for (int j = 0; j < fdeg; ++j) mask |= uint64_t(1) << (idx[j] - 1);
    p.add_term(SKey{alpha, mask}, random_ratqt(gen));
  }
  return p;
}

SuperPoly tensor(const SuperPoly& xpart, const FermionPoly& fpart) {
  SuperPoly out(xpart.N);
  for (const auto& [k, c] : xpart.terms)
    for (const auto& [m, d] : fpart.terms) out.add_term(SKey{k.alpha, m}, c * d);
  return out;
}

// Product of x-only superpolynomials (theta part empty).
SuperPoly x_product(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly out(a.N);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      Composition alpha = ka.alpha;
      for (int i = 0; i < a.N; ++i) alpha[i] += kb.alpha[i];
      out.add_term(SKey{std::move(alpha), 0}, ca * cb);
    }
  return out;
}

SuperPoly x_linear(int n, int i, const RatQT& c0, int j, const RatQT& cj) {
  // c0 * x_i + cj * x_j (x_0 meaning the constant 1).
  SuperPoly out(n);
  Composition a(n, 0);
  if (i > 0) a[i - 1] = 1;
  out.add_term(SKey{a, 0}, c0);
  Composition b(n, 0);
  if (j > 0) b[j - 1] = 1;
  out.add_term(SKey{b, 0}, cj);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// hecke: braid, commuting, quadratic, modified braid; fermionic and full
// ---------------------------------------------------------------------------

VerifyReport suite_hecke(const VerifyOptions& opt) {
  Checker ck("hecke");
  const int n_hi = std::min(opt.n_max, 6);
  for (int n = 3; n <= n_hi; ++n) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      const FermionPoly phi = FermionPoly::phi(n, mask);
      for (int i = 1; i < n; ++i) {
        const FermionPoly ti = hecke_T(i, phi);
        // (T_i - t)(T_i + 1) = 0
        const FermionPoly quad =
            hecke_T(i, ti) - ti.scaled(RatQT::t() - RatQT::one()) - phi.scaled(RatQT::t());
        ck.check(quad.is_zero(), [&] {
          return "quadratic fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                 " mask=" + std::to_string(mask);
        });
        if (i + 1 < n) {
          const FermionPoly lhs = hecke_T(i, hecke_T(i + 1, ti));
          const FermionPoly rhs = hecke_T(i + 1, hecke_T(i, hecke_T(i + 1, phi)));
          ck.check(lhs == rhs, [&] {
            return "braid fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                   " mask=" + std::to_string(mask) + " " + brief_diff(lhs, rhs);
          });
        }
        for (int j = i + 2; j < n; ++j) {
          const FermionPoly lhs = hecke_T(j, ti);
          const FermionPoly rhs = hecke_T(i, hecke_T(j, phi));
          ck.check(lhs == rhs, [&] {
            return "commuting fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                   " j=" + std::to_string(j) + " mask=" + std::to_string(mask);
          });
        }
      }
    }
  }
  // Modified braid relation with kappa shifts on the full basis.
  for (int n = 3; n <= std::min(n_hi, 6); ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      for (int j = -3; j <= 3; ++j) {
        for (int l = -3; l <= 3; ++l) {
          if (j == 0 || l == 0 || j + l == 0) continue;
          const RatQT kj = kappa(j), kl = kappa(l), kjl = kappa(j + l);
          for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            const FermionPoly phi = FermionPoly::phi(n, mask);
            auto shifted = [](int idx, const FermionPoly& p, const RatQT& s) {
              return hecke_T(idx, p) - p.scaled(s);
            };
            const FermionPoly lhs =
                shifted(i, shifted(i + 1, shifted(i, phi, kl), kjl), kj);
            const FermionPoly rhs =
                shifted(i + 1, shifted(i, shifted(i + 1, phi, kj), kjl), kl);
            ck.check(lhs == rhs, [&] {
              return "modified braid fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " l=" + std::to_string(l) +
                     " mask=" + std::to_string(mask);
            });
          }
        }
      }
    }
  }
  // Full (divided-difference) action on random superpolynomials.
  std::mt19937_64 gen(opt.seed);
  for (int n = 3; n <= std::min(opt.n_max, 5); ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const SuperPoly p = random_super(gen, n, std::min(opt.deg_max, 3), rep % (n + 1));
      for (int i = 1; i < n; ++i) {
        const SuperPoly ti = hecke_T_full(i, p);
        const SuperPoly quad =
            hecke_T_full(i, ti) - ti.scaled(RatQT::t() - RatQT::one()) - p.scaled(RatQT::t());
        ck.check(quad.is_zero(), [&] {
          return "full quadratic fails: N=" + std::to_string(n) + " i=" + std::to_string(i);
        });
        const SuperPoly round = hecke_T_full(i, ti, /*inverse=*/true);
        ck.check(round == p, [&] {
          return "full inverse fails: N=" + std::to_string(n) + " i=" + std::to_string(i) + " " +
                 brief_diff(round, p);
        });
        if (i + 1 < n) {
          const SuperPoly lhs = hecke_T_full(i, hecke_T_full(i + 1, ti));
          const SuperPoly rhs =
              hecke_T_full(i + 1, hecke_T_full(i, hecke_T_full(i + 1, p)));
          ck.check(lhs == rhs, [&] {
            return "full braid fails: N=" + std::to_string(n) + " i=" + std::to_string(i) + " " +
                   brief_diff(lhs, rhs);
          });
        }
      }
    }
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// module: M, D, Jucys-Murphy structure and tau
// ---------------------------------------------------------------------------

VerifyReport suite_module(const VerifyOptions& opt) {
  Checker ck("module");
  const int n_hi = std::min(opt.n_max, 6);
  for (int n = 2; n <= n_hi; ++n) {
    const RatQT bracket = t_bracket(n);
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      const FermionPoly phi = FermionPoly::phi(n, mask);
      const FermionPoly md = op_M(op_D(phi)) + op_D(op_M(phi));
      ck.check(md == phi.scaled(bracket), [&] {
        return "MD+DM fails: N=" + std::to_string(n) + " mask=" + std::to_string(mask);
      });
      ck.check(op_D(op_D(phi)).is_zero() && op_M(op_M(phi)).is_zero(), [&] {
        return "D^2 or M^2 fails: N=" + std::to_string(n) + " mask=" + std::to_string(mask);
      });
      for (int i = 1; i < n; ++i) {
        ck.check(op_D(hecke_T(i, phi)) == hecke_T(i, op_D(phi)) &&
                     op_M(hecke_T(i, phi)) == hecke_T(i, op_M(phi)),
                 [&] {
                   return "[T_i, M/D] fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                          " mask=" + std::to_string(mask);
                 });
      }
    }
  }
  // tau: kernel membership, eigenvalues, and the special-set shortcut.
  for (int n = 3; n <= std::min(n_hi, 5); ++n) {
    std::vector<ModuleLabel> labels;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      const uint64_t nbit = uint64_t(1) << (n - 1);
      if ((mask & nbit) && __builtin_popcountll(mask) <= 3)
        labels.push_back(ModuleLabel::type0_label(n, mask));
      if (!(mask & nbit) && __builtin_popcountll(mask) <= 2)
        labels.push_back(ModuleLabel::type1_label(n, mask));
    }
    for (const ModuleLabel& label : labels) {
      const FermionPoly tau = tau_general(label);
      const FermionPoly killed = label.kind == LabelKind::type0 ? op_D(tau) : op_M(tau);
      ck.check(killed.is_zero(), [&] { return "tau kernel fails: " + label_str(label); });
      const std::vector<int> c = content_vector(label);
      for (int i = 1; i <= n; ++i) {
        const FermionPoly lhs = jucys_murphy(i, tau);
        const FermionPoly rhs = tau.scaled(RatQT::t_pow(c[i - 1]));
        ck.check(lhs == rhs, [&] {
          return "tau eigenvalue fails: " + label_str(label) + " i=" + std::to_string(i);
        });
      }
      if (label.is_special()) {
        ck.check(tau == tau_special(label),
                 [&] { return "tau_special mismatch: " + label_str(label); });
      }
    }
    // Jucys-Murphy commutativity on a few random polynomials.
    std::mt19937_64 gen(opt.seed + n);
    for (int rep = 0; rep < 3; ++rep) {
      const FermionPoly p = random_fermion(gen, n, rep % (n + 1));
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const FermionPoly lhs = jucys_murphy(i, jucys_murphy(j, p));
          const FermionPoly rhs = jucys_murphy(j, jucys_murphy(i, p));
          ck.check(lhs == rhs, [&] {
            return "omega commutativity fails: N=" + std::to_string(n) +
                   " i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
    }
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// eigen: Cherednik eigenfunctions along the Yang-Baxter graph
// ---------------------------------------------------------------------------

namespace {

void eigen_cases(Checker& ck, const ModuleLabel& label, const std::vector<Composition>& alphas,
                 MCache* cache) {
  for (const Composition& alpha : alphas) {
    const SuperPoly m = build_M(alpha, label, cache);
    const SpectralVector zeta = spectral_vector(alpha, label);
    for (int i = 1; i <= label.N; ++i) {
      const SuperPoly lhs = cherednik_xi(i, m);
      const RatQT eig = RatQT::qt_pow(zeta[i - 1].qexp, zeta[i - 1].texp);
      ck.check(equals_scaled(lhs, m, eig), [&] {
        return "eigenfunction fails: " + label_str(label) + " alpha=" + comp_str(alpha) +
               " i=" + std::to_string(i) + " " + brief_diff(lhs, m.scaled(eig));
      });
    }
    ck.check(leading_term_check(alpha, label, m), [&] {
      return "leading term fails: " + label_str(label) + " alpha=" + comp_str(alpha);
    });
    // Key annihilation relations where the spectral ratio is t or 1/t.
    for (int i = 1; i < label.N; ++i) {
      const RatQT ratio = spectral_ratio(zeta, i + 1, i);
      if (ratio == RatQT::t()) {
        const SuperPoly z = hecke_T_full(i, m) + m;
        ck.check(z.is_zero(), [&] {
          return "(T_i+1) annihilation fails: " + label_str(label) + " alpha=" + comp_str(alpha) +
                 " i=" + std::to_string(i);
        });
      } else if (ratio == RatQT::t().inverse()) {
        const SuperPoly z = hecke_T_full(i, m) - m.scaled(RatQT::t());
        ck.check(z.is_zero(), [&] {
          return "(T_i-t) annihilation fails: " + label_str(label) + " alpha=" + comp_str(alpha) +
                 " i=" + std::to_string(i);
        });
      }
    }
  }
}

}  // namespace

VerifyReport suite_eigen(const VerifyOptions& opt) {
  Checker ck("eigen");
  MCache cache;
  for (int n = 3; n <= std::min(opt.n_max, 5); ++n) {
    const auto alphas = compositions_up_to(n, std::min(opt.deg_max, 3));
    for (const ModuleLabel& label : special_labels(n, 2)) eigen_cases(ck, label, alphas, &cache);
  }
  // General labels at N = 6 with the fixture compositions.
  if (opt.n_max >= 6) {
    const Composition a110{1, 1, 0, 0, 0, 0};
    eigen_cases(ck, ModuleLabel::type0_label(6, (1u << 3) | (1u << 5)), {a110}, &cache);
    eigen_cases(ck, ModuleLabel::type0_label(6, (1u << 2) | (1u << 5)), {a110}, &cache);
    eigen_cases(ck, ModuleLabel::type1_special(6, 3), {{2, 1, 0, 0, 0, 0}}, &cache);
  }
  // Pairwise commutativity of the Cherednik operators on random samples.
  std::mt19937_64 gen(opt.seed);
  for (int n = 3; n <= std::min(opt.n_max, 5); ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      const SuperPoly p = random_super(gen, n, std::min(opt.deg_max, 2), rep + 1);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const SuperPoly lhs = cherednik_xi(i, cherednik_xi(j, p));
          const SuperPoly rhs = cherednik_xi(j, cherednik_xi(i, p));
          ck.check(lhs == rhs, [&] {
            return "xi commutativity fails: N=" + std::to_string(n) + " i=" + std::to_string(i) +
                   " j=" + std::to_string(j);
          });
        }
    }
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// eval0 / eval1: special-point values against the closed forms
// ---------------------------------------------------------------------------

namespace {

// Decomposes the substituted value as c * tau, exactly.
bool equals_scaled_tau(const SuperPoly& value, const FermionPoly& tau, const RatQT& c) {
  return equals_scaled(value, SuperPoly::lift(tau), c);
}

void eval_cases(Checker& ck, const ModuleLabel& label, int deg_max, int comp_deg_max,
                MCache* cache) {
  const bool type0 = label.kind == LabelKind::type0;
  const int n = label.N, m = label.window_m();
  const int window = type0 ? n - m - 1 : m;
  const PointSpec point = type0 ? PointSpec::x0(n) : PointSpec::x1(n);
  const FermionPoly tau = tau_general(label);
  // b(x; i) is the constant t at x^(0) and -1 at x^(1).
  for (int i = 1; i < n; ++i) {
    const RatQT expected = type0 ? RatQT::t() : -RatQT::one();
    ck.check(b_factor(point, i) == expected,
             [&] { return "b factor fails: " + label_str(label) + " i=" + std::to_string(i); });
  }
  for (const Composition& lam : window_partitions(window, deg_max, n)) {
    const RatQT v = type0 ? V0(lam, label) : V1(lam, label);
    const RatQT vh = type0 ? V0_hook(lam, label) : V1_hook(lam, label);
    ck.check(v == vh, [&] {
      return "product vs hook form fails: " + label_str(label) + " lambda=" + comp_str(lam) +
             " product=" + render(v) + " hook=" + render(vh);
    });
    const SuperPoly direct = substitute_x(build_M(lam, label, cache), point);
    ck.check(equals_scaled_tau(direct, tau, v), [&] {
      return "evaluation theorem fails: " + label_str(label) + " lambda=" + comp_str(lam) +
             " V=" + render(v);
    });
    // x^lambda at the special point is t^{+-n(lambda)}.
    const int nl = n_exponent(lam);
    const SuperPoly xs = substitute_x(
        SuperPoly::monomial(n, lam, 0, RatQT::one()), point);
    ck.check(xs == SuperPoly::monomial(n, Composition(n, 0), 0, RatQT::t_pow(type0 ? nl : -nl)),
             [&] { return "x^lambda value fails: " + comp_str(lam); });
    // Rearrangements via the R-product recursions.
    if (comp_degree(lam) <= comp_deg_max) {
      for (const Composition& alpha : window_rearrangements(lam, label)) {
        if (alpha == lam) continue;
        const RatQT va = type0 ? V0(alpha, label) : V1(alpha, label);
        const SuperPoly da = substitute_x(build_M(alpha, label, cache), point);
        ck.check(equals_scaled_tau(da, tau, va), [&] {
          return "composition evaluation fails: " + label_str(label) +
                 " alpha=" + comp_str(alpha) + " V=" + render(va);
        });
        // Step consistency across one ascent.
        for (int i = 1; i < n; ++i) {
          if (alpha[i - 1] >= alpha[i]) continue;
          Composition sw = alpha;
          std::swap(sw[i - 1], sw[i]);
          const SpectralVector zeta = spectral_vector(alpha, label);
          const RatQT z = spectral_ratio(zeta, i + 1, i);
          const RatQT lhs = (type0 ? V0(sw, label) : V1(sw, label)) / va;
          const RatQT rhs = type0 ? u1(z) : -u0(z);
          ck.check(lhs == rhs, [&] {
            return "step consistency fails: " + label_str(label) + " alpha=" + comp_str(alpha) +
                   " i=" + std::to_string(i);
          });
          break;
        }
      }
    }
  }
}

}  // namespace

VerifyReport suite_eval0(const VerifyOptions& opt) {
  Checker ck("eval0");
  MCache cache;
  for (int n = 3; n <= std::min(opt.n_max, 6); ++n) {
    // Rearrangement recursions are sampled at n <= 5; partitions run at
    // every n, with the product and hook forms cross-checked throughout.
    const int comp_deg = n <= 5 ? std::min(opt.deg_max, 3) : -1;
    for (int m = 0; m <= std::min(2, n - 2); ++m)
      eval_cases(ck, ModuleLabel::type0_special(n, m), opt.deg_max, comp_deg, &cache);
  }
  return ck.done();
}

VerifyReport suite_eval1(const VerifyOptions& opt) {
  Checker ck("eval1");
  MCache cache;
  for (int n = 3; n <= std::min(opt.n_max, 6); ++n) {
    const int comp_deg = n <= 5 ? std::min(opt.deg_max, 3) : -1;
    for (int m = 1; m <= std::min(2, n - 1); ++m)
      eval_cases(ck, ModuleLabel::type1_special(n, m), opt.deg_max, comp_deg, &cache);
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// hooks: hook-product identities
// ---------------------------------------------------------------------------

VerifyReport suite_hooks(const VerifyOptions& opt) {
  Checker ck("hooks");
  std::mt19937_64 gen(opt.seed);
  std::uniform_int_distribution<int> lsize(1, 6), part(0, 4);
  const RatQT qt = RatQT::qt_pow(1, 1);
  for (int rep = 0; rep < 200; ++rep) {
    const int L = lsize(gen);
    Composition lam(L, 0);
    for (int i = 0; i < L; ++i) lam[i] = part(gen);
    std::sort(lam.rbegin(), lam.rend());
    RatQT lhs = RatQT::one();
    for (int i = 1; i <= L; ++i)
      for (int j = i + 1; j <= L; ++j) {
        const int d = lam[i - 1] - lam[j - 1];
        lhs *= pochhammer(RatQT::qt_pow(1, j - i), d) / pochhammer(RatQT::qt_pow(1, j - i + 1), d);
      }
    RatQT rhs = hook_product(qt, lam, TDir::t);
    for (int i = 1; i <= L; ++i) rhs /= pochhammer(RatQT::qt_pow(1, L - i + 1), lam[i - 1]);
    ck.check(lhs == rhs, [&] {
      return "hook identity fails: lambda=" + comp_str(lam) + " L=" + std::to_string(L) +
             " lhs=" + render(lhs) + " rhs=" + render(rhs);
    });
  }
  // Step relation for the composition leg-length.
  std::uniform_int_distribution<int> nsize(3, 6), cpart(0, 3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = nsize(gen);
    Composition alpha(n, 0);
    for (int i = 0; i < n; ++i) alpha[i] = cpart(gen);
    std::vector<int> ascents;
    for (int i = 1; i < n; ++i)
      if (alpha[i - 1] < alpha[i]) ascents.push_back(i);
    if (ascents.empty()) continue;
    const int i = ascents[gen() % ascents.size()];
    Composition sw = alpha;
    std::swap(sw[i - 1], sw[i]);
    const std::vector<int> r = rank_function(alpha);
    const int d = alpha[i] - alpha[i - 1];
    const int rr = r[i - 1] - r[i];
    const RatQT lhs = hook_product(qt, sw, TDir::t) / hook_product(qt, alpha, TDir::t);
    const RatQT rhs =
        (RatQT::one() - RatQT::qt_pow(d, rr)) / (RatQT::one() - RatQT::t() * RatQT::qt_pow(d, rr));
    ck.check(lhs == rhs, [&] {
      return "leg-length step fails: alpha=" + comp_str(alpha) + " i=" + std::to_string(i) +
             " lhs=" + render(lhs) + " rhs=" + render(rhs);
    });
  }
  // u1-form of the same relation through a type-0 spectral vector.
  for (int rep = 0; rep < 50; ++rep) {
    const int n = nsize(gen);
    const int m = static_cast<int>(gen() % std::max(1, n - 2));
    const ModuleLabel label = ModuleLabel::type0_special(n, m);
    const int window = n - m - 1;
    if (window < 2) continue;
    Composition alpha(n, 0);
    for (int i = 0; i < window; ++i) alpha[i] = cpart(gen);
    std::vector<int> ascents;
    for (int i = 1; i < window; ++i)
      if (alpha[i - 1] < alpha[i]) ascents.push_back(i);
    if (ascents.empty()) continue;
    const int i = ascents[gen() % ascents.size()];
    Composition sw = alpha;
    std::swap(sw[i - 1], sw[i]);
    const SpectralVector zeta = spectral_vector(alpha, label);
    const RatQT lhs = hook_product(qt, sw, TDir::t) / hook_product(qt, alpha, TDir::t);
    const RatQT rhs = u1(spectral_ratio(zeta, i + 1, i)).inverse();
    ck.check(lhs == rhs, [&] {
      return "u1 form of leg-length step fails: alpha=" + comp_str(alpha) +
             " i=" + std::to_string(i);
    });
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// symmetrize
// ---------------------------------------------------------------------------

VerifyReport suite_symmetrize(const VerifyOptions& opt) {
  Checker ck("symmetrize");
  MCache cache;
  std::mt19937_64 gen(opt.seed);
  const int deg = std::min(opt.deg_max, 3);
  for (int n = 3; n <= std::min(opt.n_max, 5); ++n) {
    for (int m = 1; m <= std::min(2, n - 2); ++m) {
      // type 0 / kind s
      {
        const ModuleLabel label = ModuleLabel::type0_special(n, m);
        const int window = n - m - 1;
        const FermionPoly tau = tau_general(label);
        for (const Composition& lam : window_partitions(window, deg, n)) {
          const SuperPoly ps = build_symmetrized(lam, label, SymKind::s, &cache);
          for (int i = 1; i < window; ++i) {
            const SuperPoly z = hecke_T_full(i, ps) - ps.scaled(RatQT::t());
            ck.check(z.is_zero(), [&] {
              return "(T_i-t) p^s fails: " + label_str(label) + " lambda=" + comp_str(lam) +
                     " i=" + std::to_string(i);
            });
          }
          const RatQT closed = closed_eval_symmetrized(lam, label, SymKind::s);
          const SuperPoly direct = substitute_x(ps, PointSpec::x0(n));
          ck.check(direct == SuperPoly::lift(tau.scaled(closed)), [&] {
            return "p^s closed value fails: " + label_str(label) + " lambda=" + comp_str(lam) +
                   " closed=" + render(closed);
          });
          // The t-multinomial sum over rearrangements.
          const RatQT lhs = rr_sum(lam, label);
          const RatQT rhs = t_multinomial(lam, window) /
                            R_product(1, window_reversal(lam, label), label);
          ck.check(lhs == rhs, [&] {
            return "RR sum fails: " + label_str(label) + " lambda=" + comp_str(lam) +
                   " lhs=" + render(lhs) + " rhs=" + render(rhs);
          });
          // Partial-point symmetry: permuting the symbolic window slots of
          // a concrete point leaves the substituted value unchanged.
          if (window >= 2) {
            std::vector<int> exps(n);
            for (int i = 0; i < n; ++i) exps[i] = (i < window) ? 7 + 2 * i : i;
            PointSpec pt = PointSpec::t_powers(exps);
            const SuperPoly base = substitute_x(ps, pt);
            const int i = 1 + static_cast<int>(gen() % (window - 1));
            const SuperPoly permuted = substitute_x(ps, pt.swapped(i));
            ck.check(base == permuted, [&] {
              return "partial-point symmetry fails: " + label_str(label) +
                     " lambda=" + comp_str(lam) + " swap=" + std::to_string(i);
            });
          }
        }
      }
      // type 1 / kind a
      {
        const ModuleLabel label = ModuleLabel::type1_special(n, m);
        const FermionPoly tau = tau_general(label);
        for (const Composition& lam : window_partitions(m, deg, n)) {
          const SuperPoly pa = build_symmetrized(lam, label, SymKind::a, &cache);
          for (int i = 1; i < m; ++i) {
            const SuperPoly z = hecke_T_full(i, pa) + pa;
            ck.check(z.is_zero(), [&] {
              return "(T_i+1) p^a fails: " + label_str(label) + " lambda=" + comp_str(lam) +
                     " i=" + std::to_string(i);
            });
          }
          const RatQT closed = closed_eval_symmetrized(lam, label, SymKind::a);
          const SuperPoly direct = substitute_x(pa, PointSpec::x1(n));
          ck.check(direct == SuperPoly::lift(tau.scaled(closed)), [&] {
            return "p^a closed value fails: " + label_str(label) + " lambda=" + comp_str(lam) +
                   " closed=" + render(closed);
          });
          // inv of the reversed block as a multiplicity statistic.
          const Composition rev = window_reversal(lam, label);
          const std::vector<int> prof = multiplicity_profile(lam, m);
          int sum_sq = 0, sum = 0;
          for (int nj : prof) {
            sum_sq += nj * nj;
            sum += nj;
          }
          ck.check(sum == m && 2 * inversions(rev) == m * m - sum_sq, [&] {
            return "inv(R1 lambda) identity fails: lambda=" + comp_str(lam);
          });
        }
      }
    }
  }
  return ck.done();
}

// ---------------------------------------------------------------------------
// singular
// ---------------------------------------------------------------------------

SingularProbe singular_probe(const Composition& alpha, const ModuleLabel& label, int e,
                             MCache* cache) {
  SingularProbe probe;
  const SpectralVector zeta = spectral_vector(alpha, label);
  for (const SpectralEntry& z : zeta) probe.specialized_texp.push_back(e * z.qexp + z.texp);
  probe.content_condition = is_rsyt_content_vector(probe.specialized_texp);
  try {
    const SuperPoly m = specialize_q(build_M(alpha, label, cache), e);
    probe.eigen_confirmed = true;
    for (int i = 1; i <= label.N && probe.eigen_confirmed; ++i) {
      const SuperPoly lhs = cherednik_xi(i, m, QSpec{e});
      const SuperPoly rhs = jucys_full(i, m);
      if (!(lhs == rhs)) probe.eigen_confirmed = false;
    }
  } catch (const pole_error&) {
    probe.pole = true;
    probe.eigen_confirmed = false;
  }
  return probe;
}

std::vector<SingularFixtureResult> singular_fixtures(MCache* cache) {
  std::vector<SingularFixtureResult> out;
  const int n = 6;
  const RatQT one = RatQT::one();

  auto fixture = [&](const std::string& name, const ModuleLabel& label, const Composition& alpha,
                     int e, const std::vector<int>& texps, const SuperPoly& xpart,
                     const FermionPoly& tau_expected) {
    PointSpec pt;
    for (int i = 0; i < n; ++i)
      pt.coords.push_back(i < 2 ? PointCoord{true, 0} : PointCoord{false, texps[i - 2]});
    const SuperPoly got = substitute_x(specialize_q(build_M(alpha, label, cache), e), pt);
    const SuperPoly expected = tensor(xpart, tau_expected);
    out.push_back({name, to_json(got), to_json(expected)});
  };

  // x-parts: (x1 - 1)(x2 - 1) and (x1 - t x2)(x1 - 1)(x2 - 1).
  const SuperPoly x11 = x_product(x_linear(n, 1, one, 0, -one), x_linear(n, 2, one, 0, -one));
  const SuperPoly x3 = x_product(x_linear(n, 1, one, 2, -RatQT::t()), x11);

  const Composition a110{1, 1, 0, 0, 0, 0};
  {
    FermionPoly tau(n);
    tau.add_term(uint64_t(1) << 5, RatQT::t_pow(4 + 16));
    tau.add_term(uint64_t(1) << 4, -RatQT::t_pow(5 + 16));
    fixture("E={5,6} q=t^-3", ModuleLabel::type0_label(n, (1u << 4) | (1u << 5)), a110, -3,
            {2, 1, -1, 0}, x11, tau);
  }
  {
    FermionPoly tau(n);
    tau.add_term(uint64_t(1) << 3, -RatQT::t_pow(6 + 16));
    const RatQT c = RatQT::t_pow(5 + 16) / (RatQT::one() + RatQT::t());
    tau.add_term(uint64_t(1) << 4, c);
    tau.add_term(uint64_t(1) << 5, c);
    fixture("E={4,6} q=t^-3", ModuleLabel::type0_label(n, (1u << 3) | (1u << 5)), a110, -3,
            {2, -1, 1, 0}, x11, tau);
  }
  {
    FermionPoly tau(n);
    tau.add_term(uint64_t(1) << 2, -RatQT::t_pow(7 + 16));
    const RatQT c = RatQT::t_pow(6 + 16) /
                    (RatQT::one() + RatQT::t() + RatQT::t_pow(2));
    tau.add_term(uint64_t(1) << 3, c);
    tau.add_term(uint64_t(1) << 4, c);
    tau.add_term(uint64_t(1) << 5, c);
    fixture("E={3,6} q=t^-3", ModuleLabel::type0_label(n, (1u << 2) | (1u << 5)), a110, -3,
            {-1, 2, 1, 0}, x11, tau);
  }
  {
    // tau_F = -theta1 theta2 theta3 (theta4 + theta5 + theta6), scaled t^8.
    FermionPoly tau(n);
    const uint64_t base = 0b000111;
    tau.add_term(base | (uint64_t(1) << 3), -RatQT::t_pow(8));
    tau.add_term(base | (uint64_t(1) << 4), -RatQT::t_pow(8));
    tau.add_term(base | (uint64_t(1) << 5), -RatQT::t_pow(8));
    fixture("F={1,2,3} q=t^2", ModuleLabel::type1_special(n, 3), {2, 1, 0, 0, 0, 0}, 2,
            {-1, 2, 1, 0}, x3, tau);
  }
  return out;
}

VerifyReport suite_singular(const VerifyOptions& opt) {
  Checker ck("singular");
  MCache cache;
  for (const SingularFixtureResult& f : singular_fixtures(&cache)) {
    ck.check(f.ok(), [&] {
      return "singular fixture fails: " + f.name + " got " + f.got + " expected " + f.expected;
    });
  }
  // Content-vector necessary condition and eigenoperator confirmation.
  const ModuleLabel f123 = ModuleLabel::type1_special(6, 3);
  {
    const SingularProbe p = singular_probe({2, 1, 0, 0, 0, 0}, f123, 2, &cache);
    ck.check(p.specialized_texp == std::vector<int>({1, 0, -1, 2, 1, 0}) && p.content_condition &&
                 !p.pole && p.eigen_confirmed,
             [&] { return "probe beta=(2,1,0^4) q=t^2 should confirm singular"; });
  }
  {
    const SingularProbe p = singular_probe({1, 2, 0, 0, 0, 0}, f123, 2, &cache);
    ck.check(p.specialized_texp == std::vector<int>({0, 1, -1, 2, 1, 0}) && !p.content_condition,
             [&] { return "probe gamma=(1,2,0^4) q=t^2 should fail the content condition"; });
  }
  {
    const ModuleLabel e56 = ModuleLabel::type0_label(6, (1u << 4) | (1u << 5));
    const SingularProbe p = singular_probe({1, 1, 0, 0, 0, 0}, e56, -3, &cache);
    ck.check(p.content_condition && !p.pole && p.eigen_confirmed,
             [&] { return "probe alpha=(1,1,0^4) E={5,6} q=t^-3 should confirm singular"; });
  }
  {
    // Generic exponent: spectral exponents miss every content vector.
    const ModuleLabel e56 = ModuleLabel::type0_label(6, (1u << 4) | (1u << 5));
    const SingularProbe p = singular_probe({1, 1, 0, 0, 0, 0}, e56, 7, &cache);
    ck.check(!p.content_condition, [&] { return "probe with generic exponent should not pass"; });
  }
  (void)opt;
  return ck.done();
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

std::vector<VerifyReport> run_suites(const std::string& name, const VerifyOptions& opt) {
  if (name == "hecke") return {suite_hecke(opt)};
  if (name == "module") return {suite_module(opt)};
  if (name == "eigen") return {suite_eigen(opt)};
  if (name == "eval0") return {suite_eval0(opt)};
  if (name == "eval1") return {suite_eval1(opt)};
  if (name == "hooks") return {suite_hooks(opt)};
  if (name == "symmetrize") return {suite_symmetrize(opt)};
  if (name == "singular") return {suite_singular(opt)};
  if (name == "all") {
    std::vector<VerifyReport> out;
    for (const char* s :
         {"hecke", "module", "eigen", "eval0", "eval1", "hooks", "symmetrize", "singular"}) {
      auto r = run_suites(s, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream os;
  os << (r.ok() ? "PASS" : "FAIL") << " suite " << r.suite << ": " << r.cases << " cases, "
     << r.failures.size() << " failures, " << r.seconds << " s";
  for (const std::string& f : r.failures) os << "\n  " << f;
  return os.str();
}

}  // namespace msuper

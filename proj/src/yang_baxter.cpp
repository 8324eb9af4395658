#include "msuper/yang_baxter.hpp"

#include <algorithm>
#include <stdexcept>

namespace msuper {

std::vector<int> rank_function(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) {
    int rank = 0;
    for (int j = 0; j < n; ++j)
      if (alpha[j] > alpha[i]) ++rank;
    for (int j = 0; j <= i; ++j)
      if (alpha[j] == alpha[i]) ++rank;
    r[i] = rank;
  }
  return r;
}

int inversions(const Composition& alpha) {
  int inv = 0;
  const int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (alpha[i] < alpha[j]) ++inv;
  return inv;
}

Composition sorted_partition(const Composition& alpha) {
  Composition s = alpha;
  std::sort(s.rbegin(), s.rend());
  return s;
}

SpectralVector spectral_vector(const Composition& alpha, const ModuleLabel& label) {
  if (static_cast<int>(alpha.size()) != label.N)
    throw std::invalid_argument("spectral_vector: composition length mismatch");
  const std::vector<int> c = content_vector(label);
  const std::vector<int> r = rank_function(alpha);
  SpectralVector zeta(label.N);
  for (int i = 0; i < label.N; ++i) zeta[i] = {alpha[i], c[r[i] - 1]};
  return zeta;
}

RatQT spectral_ratio(const SpectralVector& zeta, int j, int i) {
  return RatQT::qt_pow(zeta[j - 1].qexp - zeta[i - 1].qexp, zeta[j - 1].texp - zeta[i - 1].texp);
}

bool dominated_or_equal(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  if (comp_degree(beta) != comp_degree(alpha)) return false;
  auto dominates_weak = [](const Composition& lo, const Composition& hi) {
    int plo = 0, phi = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
      plo += lo[i];
      phi += hi[i];
      if (plo > phi) return false;
    }
    return true;
  };
  const Composition bp = sorted_partition(beta), ap = sorted_partition(alpha);
  if (bp == ap) return dominates_weak(beta, alpha);
  return dominates_weak(bp, ap);
}

std::vector<int> reduced_word(const std::vector<int>& perm) {
  // Bubble-sort the one-line form to the identity; if p s_{j_1}...s_{j_k} = id
  // then p = s_{j_k}...s_{j_1}.
  std::vector<int> p = perm, swaps;
  const int n = static_cast<int>(p.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        swaps.push_back(j + 1);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

MCache::Key MCache::make_key(const Composition& alpha, const ModuleLabel& label) {
  return {alpha, static_cast<int>(label.kind), label.N, label.set};
}

std::shared_ptr<const SuperPoly> MCache::find(const Composition& alpha,
                                              const ModuleLabel& label) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(make_key(alpha, label));
  return it == map_.end() ? nullptr : it->second;
}

void MCache::store(const Composition& alpha, const ModuleLabel& label,
                   std::shared_ptr<const SuperPoly> value) {
  std::lock_guard<std::mutex> lock(mu_);
  map_.emplace(make_key(alpha, label), std::move(value));
}

size_t MCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

std::vector<std::pair<Composition, ModuleLabel>> MCache::keys() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::pair<Composition, ModuleLabel>> out;
  out.reserve(map_.size());
  for (const auto& [k, v] : map_) {
    ModuleLabel l;
    l.kind = static_cast<LabelKind>(std::get<1>(k));
    l.N = std::get<2>(k);
    l.set = std::get<3>(k);
    out.push_back({std::get<0>(k), l});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph construction
// ---------------------------------------------------------------------------

SuperPoly build_M(const Composition& alpha, const ModuleLabel& label, MCache* cache) {
  if (static_cast<int>(alpha.size()) != label.N)
    throw std::invalid_argument("build_M: composition length mismatch");
  for (int v : alpha)
    if (v < 0) throw std::invalid_argument("build_M: negative exponent");
  if (cache) {
    if (auto hit = cache->find(alpha, label)) return *hit;
  }

  SuperPoly result(label.N);
  if (comp_degree(alpha) == 0) {
    result = SuperPoly::lift(tau_general(label));
  } else {
    int descent = 0;
    for (int i = 1; i < label.N; ++i) {
      if (alpha[i - 1] > alpha[i]) {
        descent = i;
        break;
      }
    }
    if (descent > 0) {
      Composition beta = alpha;
      std::swap(beta[descent - 1], beta[descent]);
      const SuperPoly mb = build_M(beta, label, cache);
      const SpectralVector zeta = spectral_vector(beta, label);
      const RatQT ratio = spectral_ratio(zeta, descent + 1, descent);
      if (ratio.is_one()) throw std::logic_error("build_M: vanishing step denominator");
      const RatQT shift = (RatQT::one() - RatQT::t()) / (RatQT::one() - ratio);
      result = hecke_T_full(descent, mb) + mb.scaled(shift);
    } else {
      // Weakly increasing: alpha = Phi(alpha') with the affine step.
      Composition prev(label.N);
      prev[0] = alpha[label.N - 1] - 1;
      for (int i = 1; i < label.N; ++i) prev[i] = alpha[i - 1];
      Composition xn(label.N, 0);
      xn[label.N - 1] = 1;
      result = w_op(build_M(prev, label, cache)).mul_x(xn);
    }
  }
  if (cache) cache->store(alpha, label, std::make_shared<SuperPoly>(result));
  return result;
}

int beta_exponent(const Composition& alpha) {
  int s = 0;
  for (int v : alpha) s += v * (v - 1) / 2;
  return s;
}

int e_exponent(const Composition& lambda, const ModuleLabel& label) {
  const std::vector<int> c = content_vector(label);
  int s = 0;
  for (int i = 1; i <= label.N; ++i) s += lambda[i - 1] * (label.N - i + c[i - 1]);
  return s;
}

bool leading_term_check(const Composition& alpha, const ModuleLabel& label, const SuperPoly& m) {
  const Composition ap = sorted_partition(alpha);
  const std::vector<int> word = reduced_word(rank_function(alpha));
  // R_alpha = (T_{i_1} ... T_{i_k})^{-1} applied as T_{i_1}^{-1} first.
  FermionPoly expected = tau_general(label);
  expected = hecke_T_word(word, expected, /*inverse=*/true);
  expected = expected.scaled(RatQT::q_pow(beta_exponent(alpha)) *
                             RatQT::t_pow(e_exponent(ap, label)));
  if (m.x_coefficient(alpha) != expected) return false;
  for (const Composition& beta : m.x_support()) {
    if (beta == alpha) continue;
    if (!dominated_or_equal(beta, alpha)) return false;
  }
  return true;
}

}  // namespace msuper

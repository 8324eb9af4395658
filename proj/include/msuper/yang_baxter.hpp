#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "msuper/super.hpp"

namespace msuper {

/// One spectral entry zeta(i) = q^{qexp} t^{texp}, kept as exact exponents.
struct SpectralEntry {
  int qexp = 0;
  int texp = 0;
  friend bool operator==(SpectralEntry, SpectralEntry) = default;
};

using SpectralVector = std::vector<SpectralEntry>;

/// Rank permutation r_alpha(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i};
/// satisfies r_alpha applied to alpha = alpha^+ and is the identity exactly
/// on partitions.
std::vector<int> rank_function(const Composition& alpha);

/// #{(i,j) : i < j, a_i < a_j}.
int inversions(const Composition& alpha);

/// Weakly decreasing rearrangement alpha^+.
Composition sorted_partition(const Composition& alpha);

/// zeta_{alpha,E}(i) = q^{a_i} t^{c(r_alpha(i), E)}.
SpectralVector spectral_vector(const Composition& alpha, const ModuleLabel& label);

/// Spectral entry ratio zeta(j)/zeta(i) as an exact rational function.
RatQT spectral_ratio(const SpectralVector& zeta, int j, int i);

/// Triangularity order on compositions: beta <= alpha iff |beta| = |alpha|
/// and beta^+ strictly dominated by alpha^+, or equal partitions with beta
/// dominated by alpha.
bool dominated_or_equal(const Composition& beta, const Composition& alpha);

/// A reduced word i_1, ..., i_k with perm = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const std::vector<int>& perm);

/// Session-scoped memo for built Macdonald superpolynomials.  Concurrent
/// builders may duplicate work; entries are published only when complete.
class MCache {
 public:
  std::shared_ptr<const SuperPoly> find(const Composition& alpha, const ModuleLabel& label) const;
  void store(const Composition& alpha, const ModuleLabel& label,
             std::shared_ptr<const SuperPoly> value);
  size_t size() const;
  /// Snapshot of all cached (alpha, label) keys.
  std::vector<std::pair<Composition, ModuleLabel>> keys() const;

 private:
  using Key = std::tuple<Composition, int, int, uint64_t>;
  static Key make_key(const Composition& alpha, const ModuleLabel& label);
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const SuperPoly>> map_;
};

/// Builds M_{alpha,E} along the Yang-Baxter graph: tau at alpha = 0, a step
/// (T_i + (1-t)/(1 - zeta(i+1)/zeta(i))) across the leftmost descent, and
/// the affine step x_N w(.) when alpha is weakly increasing.
SuperPoly build_M(const Composition& alpha, const ModuleLabel& label, MCache* cache = nullptr);

/// Checks the leading term q^{beta(alpha)} t^{e(alpha^+,E)} x^alpha
/// T(r_alpha)^{-1} tau and the triangularity of the remaining support.
bool leading_term_check(const Composition& alpha, const ModuleLabel& label, const SuperPoly& m);

/// beta(alpha) = sum_i C(a_i, 2).
int beta_exponent(const Composition& alpha);

/// e(lambda, E) = sum_i lambda_i (N - i + c(i, E)) for a partition lambda.
int e_exponent(const Composition& lambda, const ModuleLabel& label);

}  // namespace msuper

#include "msuper/symmetrizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace msuper {

namespace {

int window_size(const ModuleLabel& label) {
  return label.kind == LabelKind::type0 ? label.N - label.window_m() - 1 : label.window_m();
}

void check_class(const Composition& lambda, const ModuleLabel& label, const char* who) {
  if (static_cast<int>(lambda.size()) != label.N)
    throw std::domain_error(std::string(who) + ": composition length mismatch");
  if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
    throw std::domain_error(std::string(who) + ": lambda must be a partition");
  const int m = label.window_m();
  const bool ok = label.kind == LabelKind::type0 ? in_class_N0(lambda, label.N, m)
                                                 : in_class_N1(lambda, label.N, m);
  if (!ok) throw std::domain_error(std::string(who) + ": lambda outside the label class");
}

}  // namespace

std::vector<Composition> window_rearrangements(const Composition& lambda,
                                               const ModuleLabel& label) {
  check_class(lambda, label, "window_rearrangements");
  const int w = window_size(label);
  Composition window(lambda.begin(), lambda.begin() + w);
  std::sort(window.begin(), window.end());
  std::vector<Composition> out;
  do {
    Composition alpha(label.N, 0);
    std::copy(window.begin(), window.end(), alpha.begin());
    out.push_back(std::move(alpha));
  } while (std::next_permutation(window.begin(), window.end()));
  return out;
}

SuperPoly build_symmetrized(const Composition& lambda, const ModuleLabel& label, SymKind kind,
                            MCache* cache) {
  check_class(lambda, label, "build_symmetrized");
  if (kind == SymKind::s && label.kind != LabelKind::type0)
    throw std::domain_error("build_symmetrized: kind s needs a type-0 label");
  if (kind == SymKind::a && label.kind != LabelKind::type1)
    throw std::domain_error("build_symmetrized: kind a needs a type-1 label");
  SuperPoly out(label.N);
  for (const Composition& alpha : window_rearrangements(lambda, label)) {
    RatQT c = kind == SymKind::s ? R_product(0, alpha, label) : R_product(1, alpha, label);
    if (kind == SymKind::a && inversions(alpha) % 2 != 0) c = -c;
    out = out + build_M(alpha, label, cache).scaled(c);
  }
  return out;
}

std::vector<int> multiplicity_profile(const Composition& lambda, int window) {
  if (window < 0 || window > static_cast<int>(lambda.size()))
    throw std::domain_error("multiplicity_profile: window out of range");
  const int top = window == 0 ? 0 : *std::max_element(lambda.begin(), lambda.begin() + window);
  std::vector<int> n(top + 1, 0);
  for (int l = 0; l < window; ++l) ++n[lambda[l]];
  return n;
}

RatQT t_multinomial(const Composition& lambda, int window) {
  RatQT out = t_factorial(window);
  for (int nj : multiplicity_profile(lambda, window)) out /= t_factorial(nj);
  return out;
}

Composition window_reversal(const Composition& lambda, const ModuleLabel& label) {
  const int w = window_size(label);
  Composition out(label.N, 0);
  for (int i = 0; i < w; ++i) out[i] = lambda[w - 1 - i];
  return out;
}

RatQT closed_eval_symmetrized(const Composition& lambda, const ModuleLabel& label, SymKind kind) {
  check_class(lambda, label, "closed_eval_symmetrized");
  const int w = window_size(label);
  const Composition rev = window_reversal(lambda, label);
  if (kind == SymKind::s) return t_multinomial(lambda, w) * V0(rev, label);
  const RatQT sign = inversions(rev) % 2 == 0 ? RatQT::one() : -RatQT::one();
  return sign * t_multinomial(lambda, w) * V1(rev, label);
}

RatQT rr_sum(const Composition& lambda, const ModuleLabel& label) {
  check_class(lambda, label, "rr_sum");
  RatQT out = RatQT::zero();
  for (const Composition& alpha : window_rearrangements(lambda, label))
    out += R_product(0, alpha, label) / R_product(1, alpha, label);
  return out;
}

}  // namespace msuper

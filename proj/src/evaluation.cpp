#include "msuper/evaluation.hpp"

#include <algorithm>
#include <stdexcept>

namespace msuper {

RatQT t_bracket(int n) {
  if (n < 0) throw std::domain_error("t_bracket: n must be nonnegative");
  std::vector<std::pair<MonoQT, Int>> raw;
  for (int k = 0; k < n; ++k) raw.push_back({MonoQT{0, k}, Int(1)});
  return RatQT(PolyQT::from_terms(std::move(raw)));
}

RatQT t_factorial(int n) {
  if (n < 0) throw std::domain_error("t_factorial: n must be nonnegative");
  RatQT out = RatQT::one();
  for (int i = 2; i <= n; ++i) out *= t_bracket(i);
  return out;
}

RatQT kappa(int n) {
  if (n == 0) throw std::domain_error("kappa: undefined at n = 0");
  if (n > 0) return RatQT::t_pow(n) / t_bracket(n);
  return -(RatQT::one() / t_bracket(-n));
}

RatQT u0(const RatQT& z) {
  if (z.is_one()) throw pole_error("u0: pole at z = 1");
  return (RatQT::t() - z) / (RatQT::one() - z);
}

RatQT u1(const RatQT& z) {
  if (z.is_one()) throw pole_error("u1: pole at z = 1");
  return (RatQT::one() - RatQT::t() * z) / (RatQT::one() - z);
}

RatQT pochhammer(const RatQT& a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be nonnegative");
  RatQT out = RatQT::one();
  for (int l = 0; l < n; ++l) out *= RatQT::one() - a * RatQT::q_pow(l);
  return out;
}

RatQT pochhammer_lambda(const RatQT& a, const Composition& lambda, TDir tdir) {
  RatQT out = RatQT::one();
  for (size_t i = 1; i <= lambda.size(); ++i) {
    const int shift = tdir == TDir::t ? 1 - static_cast<int>(i) : static_cast<int>(i) - 1;
    out *= pochhammer(a * RatQT::t_pow(shift), lambda[i - 1]);
  }
  return out;
}

int leg_length(int i, int j, const Composition& shape) {
  const int n = static_cast<int>(shape.size());
  int leg = 0;
  for (int r = i + 1; r <= n; ++r)
    if (j <= shape[r - 1] && shape[r - 1] <= shape[i - 1]) ++leg;
  for (int r = 1; r < i; ++r)
    if (j <= shape[r - 1] + 1 && shape[r - 1] + 1 <= shape[i - 1]) ++leg;
  return leg;
}

RatQT hook_product(const RatQT& a, const Composition& shape, TDir tdir) {
  RatQT out = RatQT::one();
  for (size_t i = 1; i <= shape.size(); ++i)
    for (int j = 1; j <= shape[i - 1]; ++j) {
      const int arm = shape[i - 1] - j;
      const int leg = leg_length(static_cast<int>(i), j, shape);
      const int texp = tdir == TDir::t ? leg : -leg;
      out *= RatQT::one() - a * RatQT::qt_pow(arm, texp);
    }
  return out;
}

RatQT R_product(int k, const Composition& beta, const ModuleLabel& label) {
  if (k != 0 && k != 1) throw std::invalid_argument("R_product: k must be 0 or 1");
  const SpectralVector zeta = spectral_vector(beta, label);
  RatQT out = RatQT::one();
  const int n = static_cast<int>(beta.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (beta[i - 1] >= beta[j - 1]) continue;
      const RatQT z = spectral_ratio(zeta, j, i);
      out *= k == 0 ? u0(z) : u1(z);
    }
  return out;
}

int e0_exponent(const Composition& lambda, int N, int m) {
  int s = 0;
  for (int i = 1; i <= N - m - 1 && i <= static_cast<int>(lambda.size()); ++i)
    s += lambda[i - 1] * (2 * N - m - i - 1);
  return s;
}

int e1_exponent(const Composition& lambda, int N, int m) {
  int s = 0;
  for (int i = 1; i <= m && i <= static_cast<int>(lambda.size()); ++i)
    s += lambda[i - 1] * (N - m - i);
  return s;
}

int n_exponent(const Composition& lambda) {
  int s = 0;
  for (size_t i = 1; i <= lambda.size(); ++i) s += lambda[i - 1] * (static_cast<int>(i) - 1);
  return s;
}

bool in_class_N0(const Composition& alpha, int N, int m) {
  if (static_cast<int>(alpha.size()) != N) return false;
  for (int i = N - m; i <= N; ++i)
    if (alpha[i - 1] != 0) return false;
  return true;
}

bool in_class_N1(const Composition& alpha, int N, int m) {
  if (static_cast<int>(alpha.size()) != N) return false;
  for (int i = m + 1; i <= N; ++i)
    if (alpha[i - 1] != 0) return false;
  return true;
}

namespace {

bool is_partition(const Composition& a) {
  return std::is_sorted(a.rbegin(), a.rend());
}

void require_type(const ModuleLabel& label, LabelKind kind, const char* who) {
  if (label.kind != kind) throw std::domain_error(std::string(who) + ": wrong label type");
  if (!label.is_special())
    throw std::domain_error(std::string(who) + ": closed forms exist for the special label only");
}

// Telescoped product form of the type-0 evaluation theorem.
RatQT V0_partition(const Composition& lambda, int N, int m) {
  RatQT out = RatQT::q_pow(beta_exponent(lambda)) * RatQT::t_pow(e0_exponent(lambda, N, m));
  for (int k = 1; k <= N - m - 1; ++k) {
    out *= pochhammer(RatQT::qt_pow(1, N - k + 1), lambda[k - 1]) /
           pochhammer(RatQT::qt_pow(1, N - k), lambda[k - 1]);
  }
  for (int i = 1; i < N - m; ++i)
    for (int j = i + 1; j < N - m; ++j) {
      const int d = lambda[i - 1] - lambda[j - 1];
      out *= pochhammer(RatQT::qt_pow(1, j - i + 1), d) / pochhammer(RatQT::qt_pow(1, j - i), d);
    }
  return out;
}

RatQT V1_partition(const Composition& lambda, int N, int m) {
  RatQT out = RatQT::q_pow(beta_exponent(lambda)) * RatQT::t_pow(e1_exponent(lambda, N, m));
  for (int k = 1; k <= m; ++k) {
    out *= pochhammer(RatQT::qt_pow(1, k - N - 1), lambda[k - 1]) /
           pochhammer(RatQT::qt_pow(1, k - N), lambda[k - 1]);
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const int d = lambda[i - 1] - lambda[j - 1];
      out *= pochhammer(RatQT::qt_pow(1, i - j - 1), d) / pochhammer(RatQT::qt_pow(1, i - j), d);
    }
  return out;
}

}  // namespace

RatQT V0(const Composition& alpha, const ModuleLabel& label) {
  require_type(label, LabelKind::type0, "V0");
  const int N = label.N, m = label.window_m();
  if (!in_class_N0(alpha, N, m))
    throw std::domain_error("V0: alpha must vanish on positions >= N-m");
  if (is_partition(alpha)) return V0_partition(alpha, N, m);
  return V0_partition(sorted_partition(alpha), N, m) / R_product(1, alpha, label);
}

RatQT V0_hook(const Composition& alpha, const ModuleLabel& label) {
  require_type(label, LabelKind::type0, "V0_hook");
  const int N = label.N, m = label.window_m();
  if (!in_class_N0(alpha, N, m))
    throw std::domain_error("V0_hook: alpha must vanish on positions >= N-m");
  const Composition lam = sorted_partition(alpha);
  RatQT out = RatQT::q_pow(beta_exponent(lam)) * RatQT::t_pow(e0_exponent(lam, N, m));
  out *= pochhammer_lambda(RatQT::qt_pow(1, N), lam, TDir::t);
  out *= pochhammer_lambda(RatQT::qt_pow(1, N - m - 1), lam, TDir::t);
  out /= pochhammer_lambda(RatQT::qt_pow(1, N - 1), lam, TDir::t);
  out /= hook_product(RatQT::qt_pow(1, 1), lam, TDir::t);
  if (!is_partition(alpha)) out /= R_product(1, alpha, label);
  return out;
}

RatQT V1(const Composition& alpha, const ModuleLabel& label) {
  require_type(label, LabelKind::type1, "V1");
  const int N = label.N, m = label.window_m();
  if (!in_class_N1(alpha, N, m))
    throw std::domain_error("V1: alpha must vanish on positions > m");
  if (is_partition(alpha)) return V1_partition(alpha, N, m);
  const RatQT sign = inversions(alpha) % 2 == 0 ? RatQT::one() : -RatQT::one();
  return sign * V1_partition(sorted_partition(alpha), N, m) / R_product(0, alpha, label);
}

RatQT V1_hook(const Composition& alpha, const ModuleLabel& label) {
  require_type(label, LabelKind::type1, "V1_hook");
  const int N = label.N, m = label.window_m();
  if (!in_class_N1(alpha, N, m))
    throw std::domain_error("V1_hook: alpha must vanish on positions > m");
  const Composition lam = sorted_partition(alpha);
  RatQT out = RatQT::q_pow(beta_exponent(lam)) * RatQT::t_pow(e1_exponent(lam, N, m));
  out *= pochhammer_lambda(RatQT::qt_pow(1, -N), lam, TDir::inv_t);
  out *= pochhammer_lambda(RatQT::qt_pow(1, -m), lam, TDir::inv_t);
  out /= pochhammer_lambda(RatQT::qt_pow(1, 1 - N), lam, TDir::inv_t);
  out /= hook_product(RatQT::qt_pow(1, -1), lam, TDir::inv_t);
  if (!is_partition(alpha)) {
    const RatQT sign = inversions(alpha) % 2 == 0 ? RatQT::one() : -RatQT::one();
    out = sign * out / R_product(0, alpha, label);
  }
  return out;
}

}  // namespace msuper

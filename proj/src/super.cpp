#include "msuper/super.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace msuper {

// ---------------------------------------------------------------------------
// SuperPoly basics
// ---------------------------------------------------------------------------

SuperPoly SuperPoly::lift(const FermionPoly& p) {
  SuperPoly out(p.N);
  const Composition zero(p.N, 0);
  for (const auto& [m, c] : p.terms) out.terms.emplace(SKey{zero, m}, c);
  return out;
}

SuperPoly SuperPoly::monomial(int N, const Composition& alpha, uint64_t theta, const RatQT& c) {
  SuperPoly out(N);
  if (!c.is_zero()) out.terms.emplace(SKey{alpha, theta}, c);
  return out;
}

void SuperPoly::add_term(const SKey& k, const RatQT& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SuperPoly SuperPoly::operator+(const SuperPoly& rhs) const {
  SuperPoly out = *this;
  for (const auto& [k, c] : rhs.terms) out.add_term(k, c);
  return out;
}

SuperPoly SuperPoly::operator-(const SuperPoly& rhs) const {
  SuperPoly out = *this;
  for (const auto& [k, c] : rhs.terms) out.add_term(k, -c);
  return out;
}

SuperPoly SuperPoly::scaled(const RatQT& c) const {
  SuperPoly out(N);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
  return out;
}

SuperPoly SuperPoly::mul_x(const Composition& beta) const {
  SuperPoly out(N);
  for (const auto& [k, v] : terms) {
    SKey nk = k;
    for (int i = 0; i < N; ++i) nk.alpha[i] += beta[i];
    out.terms.emplace(std::move(nk), v);
  }
  return out;
}

bool equals_scaled(const SuperPoly& lhs, const SuperPoly& rhs, const RatQT& factor) {
  if (factor.is_zero()) return lhs.is_zero();
  if (lhs.terms.size() != rhs.terms.size()) return false;
  auto i = lhs.terms.begin();
  auto j = rhs.terms.begin();
  for (; i != lhs.terms.end(); ++i, ++j) {
    if (!(i->first == j->first)) return false;
    if (!(i->second == j->second * factor)) return false;
  }
  return true;
}

FermionPoly SuperPoly::x_coefficient(const Composition& alpha) const {
  FermionPoly out(N);
  for (const auto& [k, v] : terms)
    if (k.alpha == alpha) out.terms.emplace(k.theta, v);
  return out;
}

std::vector<Composition> SuperPoly::x_support() const {
  std::vector<Composition> out;
  for (const auto& [k, v] : terms)
    if (out.empty() || out.back() != k.alpha) out.push_back(k.alpha);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PointSpec
// ---------------------------------------------------------------------------

PointSpec PointSpec::x0(int N) {
  PointSpec pt;
  for (int i = 0; i < N; ++i) pt.coords.push_back({false, i});
  return pt;
}

PointSpec PointSpec::x1(int N) {
  PointSpec pt;
  for (int i = 0; i < N; ++i) pt.coords.push_back({false, -i});
  return pt;
}

PointSpec PointSpec::t_powers(const std::vector<int>& exps) {
  PointSpec pt;
  for (int k : exps) pt.coords.push_back({false, k});
  return pt;
}

PointSpec PointSpec::swapped(int i) const {
  PointSpec pt = *this;
  std::swap(pt.coords[i - 1], pt.coords[i]);
  return pt;
}

// ---------------------------------------------------------------------------
// Hecke action
// ---------------------------------------------------------------------------

namespace {

void check_index(int i, int n, int hi) {
  if (i < 1 || i > hi) throw std::out_of_range("operator index out of range for N=" + std::to_string(n));
}

// The four theta cases of the Hecke generator; emits (mask, coeff) pairs.
template <typename Emit>
void theta_action(int i, uint64_t m, const RatQT& c, Emit&& emit) {
  static const RatQT t = RatQT::t();
  static const RatQT t_minus_1 = RatQT::t() - RatQT::one();
  const uint64_t bi = uint64_t(1) << (i - 1);
  const uint64_t bj = uint64_t(1) << i;
  const bool has_i = m & bi, has_j = m & bj;
  if (has_i && has_j) {
    emit(m, -c);
  } else if (!has_i && !has_j) {
    emit(m, c * t);
  } else if (has_i) {
    emit((m & ~bi) | bj, c);
  } else {
    emit((m & ~bj) | bi, c * t);
    emit(m, c * t_minus_1);
  }
}

}  // namespace

SuperPoly hecke_T_theta(int i, const SuperPoly& p) {
  check_index(i, p.N, p.N - 1);
  SuperPoly out(p.N);
  for (const auto& [k, c] : p.terms)
    theta_action(i, k.theta, c,
                 [&](uint64_t m, const RatQT& v) { out.add_term(SKey{k.alpha, m}, v); });
  return out;
}

SuperPoly hecke_T_full(int i, const SuperPoly& p, bool inverse) {
  check_index(i, p.N, p.N - 1);
  SuperPoly out(p.N);
  const RatQT one_minus_t = RatQT::one() - RatQT::t();
  for (const auto& [k, c] : p.terms) {
    const int a = k.alpha[i - 1], b = k.alpha[i];
    // (1-t) x_{i+1} (x^a y^b - x^b y^a)/(x - y), expanded exactly.
    if (a != b) {
      const RatQT f = (a > b) ? c * one_minus_t : -(c * one_minus_t);
      const int lo = std::min(a, b), hi = std::max(a, b);
      for (int e = lo; e < hi; ++e) {
        SKey nk = k;
        nk.alpha[i - 1] = e;
        nk.alpha[i] = a + b - e;
        out.add_term(nk, f);
      }
    }
    // T_i^theta applied to the swapped monomial.
    SKey sk = k;
    std::swap(sk.alpha[i - 1], sk.alpha[i]);
    theta_action(i, sk.theta, c,
                 [&](uint64_t m, const RatQT& v) { out.add_term(SKey{sk.alpha, m}, v); });
  }
  if (inverse) {
    // T^{-1} p = (T p + (1-t) p)/t by the quadratic relation.
    const RatQT tinv = RatQT::t().inverse();
    return out.scaled(tinv) + p.scaled(one_minus_t * tinv);
  }
  return out;
}

namespace {

// Image of phi_E under the theta word T_{N-1}...T_1, memoized per (N, E).
const FermionPoly& theta_word_image(int n, uint64_t mask) {
  static std::mutex mu;
  static std::map<std::pair<int, uint64_t>, FermionPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, mask});
  if (it == cache.end()) {
    FermionPoly img = FermionPoly::phi(n, mask);
    for (int i = 1; i <= n - 1; ++i) img = hecke_T(i, img);
    it = cache.emplace(std::make_pair(n, mask), std::move(img)).first;
  }
  return it->second;
}

}  // namespace

SuperPoly w_op(const SuperPoly& p, const QSpec& qs) {
  SuperPoly out(p.N);
  for (const auto& [k, c] : p.terms) {
    SKey nk;
    nk.theta = 0;
    nk.alpha.reserve(p.N);
    // x^alpha evaluated at (q x_N, x_1, ..., x_{N-1}).
    nk.alpha.assign(k.alpha.begin() + 1, k.alpha.end());
    nk.alpha.push_back(k.alpha[0]);
    const RatQT scaled = k.alpha[0] == 0 ? c : c * qs.qpow(k.alpha[0]);
    for (const auto& [mask, wc] : theta_word_image(p.N, k.theta).terms) {
      nk.theta = mask;
      out.add_term(nk, scaled * wc);
    }
  }
  return out;
}

SuperPoly cherednik_xi(int i, const SuperPoly& p, const QSpec& qs) {
  check_index(i, p.N, p.N);
  SuperPoly out = p;
  for (int j = i - 1; j >= 1; --j) out = hecke_T_full(j, out, true);
  out = w_op(out, qs);
  for (int j = p.N - 1; j >= i; --j) out = hecke_T_full(j, out);
  return out.scaled(RatQT::t_pow(i - p.N));
}

SuperPoly jucys_full(int i, const SuperPoly& p) {
  check_index(i, p.N, p.N);
  if (i == p.N) return p;
  SuperPoly out = p;
  for (int j = i; j <= p.N - 1; ++j) out = hecke_T_full(j, out);
  for (int j = p.N - 1; j >= i; --j) out = hecke_T_full(j, out);
  return out.scaled(RatQT::t_pow(i - p.N));
}

// ---------------------------------------------------------------------------
// Substitution and specialization
// ---------------------------------------------------------------------------

SuperPoly substitute_x(const SuperPoly& p, const PointSpec& pt) {
  if (static_cast<int>(pt.coords.size()) != p.N)
    throw std::invalid_argument("substitute_x: point length mismatch");
  SuperPoly out(p.N);
  for (const auto& [k, c] : p.terms) {
    SKey nk = k;
    int texp = 0;
    for (int i = 0; i < p.N; ++i) {
      if (pt.coords[i].symbolic) continue;
      texp += pt.coords[i].tpow * nk.alpha[i];
      nk.alpha[i] = 0;
    }
    out.add_term(nk, texp == 0 ? c : c * RatQT::t_pow(texp));
  }
  return out;
}

SuperPoly specialize_q(const SuperPoly& p, int e) {
  SuperPoly out(p.N);
  for (const auto& [k, c] : p.terms) out.add_term(k, embed(specialize_q(c, e)));
  return out;
}

RatQT b_factor(const PointSpec& pt, int i) {
  if (i < 1 || i >= static_cast<int>(pt.coords.size()) + 1)
    throw std::out_of_range("b_factor: index out of range");
  const PointCoord& lo = pt.coords[i - 1];
  const PointCoord& hi = pt.coords[i];
  if (lo.symbolic || hi.symbolic)
    throw std::invalid_argument("b_factor: coordinates must be fixed t-powers");
  if (lo.tpow == hi.tpow) throw pole_error("b_factor: equal coordinates");
  // (t-1)/(1 - t^{k_i - k_{i+1}})
  return (RatQT::t() - RatQT::one()) / (RatQT::one() - RatQT::t_pow(lo.tpow - hi.tpow));
}

}  // namespace msuper

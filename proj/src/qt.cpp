#include "msuper/qt.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace msuper {

namespace {

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyQT
// ---------------------------------------------------------------------------

PolyQT PolyQT::constant(Int c) {
  PolyQT p;
  if (c != 0) p.terms_.push_back({MonoQT{0, 0}, std::move(c)});
  return p;
}

PolyQT PolyQT::monomial(Int c, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("PolyQT exponents must be nonnegative");
  PolyQT p;
  if (c != 0) p.terms_.push_back({MonoQT{a, b}, std::move(c)});
  return p;
}

bool PolyQT::is_one() const {
  return terms_.size() == 1 && terms_[0].first == MonoQT{0, 0} && terms_[0].second == 1;
}

bool PolyQT::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == MonoQT{0, 0});
}

const std::pair<MonoQT, Int>& PolyQT::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.back();
}

int PolyQT::deg_q() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.a));
  return d;
}

int PolyQT::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.b));
  return d;
}

PolyQT PolyQT::from_terms(std::vector<std::pair<MonoQT, Int>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return mono_less(x.first, y.first); });
  PolyQT p;
  for (auto& [m, c] : raw) {
    if (!p.terms_.empty() && p.terms_.back().first == m) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({m, std::move(c)});
    }
  }
  return p;
}

PolyQT PolyQT::operator-() const {
  PolyQT p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

PolyQT PolyQT::operator+(const PolyQT& rhs) const {
  PolyQT out;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin(), j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && mono_less(i->first, j->first))) {
      out.terms_.push_back(*i++);
    } else if (i == terms_.end() || mono_less(j->first, i->first)) {
      out.terms_.push_back(*j++);
    } else {
      Int c = i->second + j->second;
      if (c != 0) out.terms_.push_back({i->first, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

PolyQT PolyQT::operator-(const PolyQT& rhs) const { return *this + (-rhs); }

PolyQT PolyQT::operator*(const PolyQT& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<std::pair<MonoQT, Int>> raw;
  raw.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : rhs.terms_)
      raw.push_back({MonoQT{m1.a + m2.a, m1.b + m2.b}, c1 * c2});
  return from_terms(std::move(raw));
}

PolyQT PolyQT::mul_int(const Int& c) const {
  if (c == 0) return zero();
  PolyQT p = *this;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

PolyQT PolyQT::divexact(const PolyQT& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (d.terms_.size() == 1) {
    const auto& [dm, dc] = d.terms_[0];
    PolyQT out = *this;
    for (auto& [m, c] : out.terms_) {
      if (m.a < dm.a || m.b < dm.b || !mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
        throw std::logic_error("divexact: division is not exact");
      m.a -= dm.a;
      m.b -= dm.b;
      c /= dc;
    }
    return out;
  }
  PolyQT rem = *this, quot;
  std::vector<std::pair<MonoQT, Int>> qterms;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    const auto& [dm, dc] = d.leading();
    if (rm.a < dm.a || rm.b < dm.b || !mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw std::logic_error("divexact: division is not exact");
    MonoQT m{rm.a - dm.a, rm.b - dm.b};
    Int c = rc / dc;
    rem.submul_shifted(d, m, c);
    qterms.push_back({m, std::move(c)});
  }
  return PolyQT::from_terms(std::move(qterms));
}

void PolyQT::submul_shifted(const PolyQT& d, MonoQT m, const Int& c) {
  std::vector<std::pair<MonoQT, Int>> out;
  out.reserve(terms_.size() + d.terms_.size());
  auto i = terms_.begin();
  auto j = d.terms_.begin();
  while (i != terms_.end() || j != d.terms_.end()) {
    MonoQT jm{};
    if (j != d.terms_.end()) jm = MonoQT{j->first.a + m.a, j->first.b + m.b};
    if (j == d.terms_.end() || (i != terms_.end() && mono_less(i->first, jm))) {
      out.push_back(*i++);
    } else if (i == terms_.end() || mono_less(jm, i->first)) {
      Int v = -(j->second * c);
      if (v != 0) out.push_back({jm, std::move(v)});
      ++j;
    } else {
      Int v = i->second;
      mpz_submul(v.get_mpz_t(), j->second.get_mpz_t(), c.get_mpz_t());
      if (v != 0) out.push_back({i->first, std::move(v)});
      ++i, ++j;
    }
  }
  terms_ = std::move(out);
}

Int PolyQT::coeff(int a, int b) const {
  for (const auto& [m, c] : terms_)
    if (m.a == a && m.b == b) return c;
  return 0;
}

// ---------------------------------------------------------------------------
// PolyT
// ---------------------------------------------------------------------------

PolyT::PolyT(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyT PolyT::constant(Int c) {
  PolyT p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

PolyT PolyT::monomial(Int c, int b) {
  PolyT p;
  if (c != 0) {
    p.coeffs_.assign(b + 1, Int(0));
    p.coeffs_[b] = std::move(c);
  }
  return p;
}

bool PolyT::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Int& PolyT::lc() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Int& PolyT::tc() const {
  for (const Int& c : coeffs_)
    if (c != 0) return c;
  throw std::logic_error("trailing coefficient of zero polynomial");
}

PolyT PolyT::operator-() const {
  PolyT p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

PolyT PolyT::operator+(const PolyT& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return PolyT(std::move(out));
}

PolyT PolyT::operator-(const PolyT& rhs) const { return *this + (-rhs); }

PolyT PolyT::operator*(const PolyT& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return PolyT(std::move(out));
}

PolyT PolyT::mul_int(const Int& c) const {
  if (c == 0) return zero();
  PolyT p = *this;
  for (auto& v : p.coeffs_) v *= c;
  return p;
}

void PolyT::mul_int_inplace(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return;
  }
  for (auto& v : coeffs_) v *= c;
}

void PolyT::submul_shifted(const PolyT& v, int shift, const Int& c) {
  if (v.is_zero() || c == 0) return;
  if (static_cast<int>(coeffs_.size()) < v.degree() + shift + 1)
    coeffs_.resize(v.degree() + shift + 1, Int(0));
  for (size_t k = 0; k < v.coeffs_.size(); ++k) {
    if (v.coeffs_[k] == 0) continue;
    Int prod = v.coeffs_[k] * c;
    coeffs_[k + shift] -= prod;
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyT PolyT::div_int_exact(const Int& c) const {
  PolyT p = *this;
  for (auto& v : p.coeffs_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      throw std::logic_error("div_int_exact: not divisible");
    v /= c;
  }
  return p;
}

PolyT PolyT::divexact(const PolyT& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  PolyT rem = *this;
  std::vector<Int> out(is_zero() ? 0 : std::max(0, degree() - d.degree()) + 1, Int(0));
  while (!rem.is_zero()) {
    const int shift = rem.degree() - d.degree();
    if (shift < 0 || !mpz_divisible_p(rem.lc().get_mpz_t(), d.lc().get_mpz_t()))
      throw std::logic_error("divexact: division is not exact");
    Int c = rem.lc() / d.lc();
    rem = rem - d * PolyT::monomial(c, shift);
    out[shift] = std::move(c);
  }
  return PolyT(std::move(out));
}

namespace {

Int content_int(const PolyT& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Pseudo-remainder of u by v over Z[t].
PolyT prem_t(PolyT u, const PolyT& v) {
  const int dv = v.degree();
  const bool unit_lc = v.lc() == 1;
  while (!u.is_zero() && u.degree() >= dv) {
    const int shift = u.degree() - dv;
    const Int lu = u.lc();
    if (!unit_lc) u.mul_int_inplace(v.lc());
    u.submul_shifted(v, shift, lu);
  }
  return u;
}

}  // namespace

PolyT poly_gcd(const PolyT& a, const PolyT& b) {
  auto sign_norm = [](PolyT p) { return (!p.is_zero() && p.tc() < 0) ? -p : p; };
  if (a.is_zero()) return sign_norm(b);
  if (b.is_zero()) return sign_norm(a);
  const Int ca = content_int(a), cb = content_int(b);
  PolyT u = a.div_int_exact(ca), v = b.div_int_exact(cb);
  while (!v.is_zero()) {
    PolyT r = prem_t(u, v);
    u = std::move(v);
    v = r.is_zero() ? PolyT::zero() : r.div_int_exact(content_int(r));
  }
  return sign_norm(u.mul_int(int_gcd(ca, cb)));
}

// ---------------------------------------------------------------------------
// Bivariate gcd via primitive PRS in (Z[t])[q]
// ---------------------------------------------------------------------------

namespace {

// View of a PolyQT as a coefficient vector in q with entries in Z[t].
std::vector<PolyT> q_coeffs(const PolyQT& p) {
  std::vector<PolyT> out(p.is_zero() ? 0 : p.deg_q() + 1);
  std::vector<std::vector<Int>> raw(out.size());
  for (const auto& [m, c] : p.terms()) {
    auto& col = raw[m.a];
    if (static_cast<int>(col.size()) <= m.b) col.resize(m.b + 1, Int(0));
    col[m.b] = c;
  }
  for (size_t i = 0; i < out.size(); ++i) out[i] = PolyT(std::move(raw[i]));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

PolyQT from_q_coeffs(const std::vector<PolyT>& v) {
  std::vector<std::pair<MonoQT, Int>> raw;
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = 0; b < v[a].coeffs().size(); ++b)
      if (v[a].coeffs()[b] != 0)
        raw.push_back({MonoQT{static_cast<int32_t>(a), static_cast<int32_t>(b)},
                       v[a].coeffs()[b]});
  return PolyQT::from_terms(std::move(raw));
}

int deg_qv(const std::vector<PolyT>& v) { return static_cast<int>(v.size()) - 1; }

bool is_zero_qv(const std::vector<PolyT>& v) { return v.empty(); }

void trim_qv(std::vector<PolyT>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

PolyT content_qv(const std::vector<PolyT>& v) {
  PolyT g = PolyT::zero();
  for (const auto& c : v) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Int eval_at(const PolyT& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

// q-degree of the gcd after specializing t to an integer that keeps both
// leading coefficients alive.  The true gcd's q-degree is bounded by the
// specialized one, so a constant image certifies coprime primitive parts.
int specialized_q_degree(const std::vector<PolyT>& u, const std::vector<PolyT>& v) {
  Int x = 2;
  while (eval_at(u.back(), x) == 0 || eval_at(v.back(), x) == 0) ++x;
  auto image = [&](const std::vector<PolyT>& w) {
    std::vector<Int> img(w.size());
    for (size_t a = 0; a < w.size(); ++a) img[a] = eval_at(w[a], x);
    return PolyT(std::move(img));
  };
  return poly_gcd(image(u), image(v)).degree();
}

std::vector<PolyT> div_content_qv(const std::vector<PolyT>& v, const PolyT& c) {
  std::vector<PolyT> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].divexact(c);
  return out;
}

// Pseudo-remainder in q with coefficients in Z[t].
std::vector<PolyT> prem_q(std::vector<PolyT> u, const std::vector<PolyT>& v) {
  const int dv = deg_qv(v);
  const PolyT& lv = v.back();
  const bool unit_lv = lv.is_one();
  while (!is_zero_qv(u) && deg_qv(u) >= dv) {
    const int shift = deg_qv(u) - dv;
    const PolyT lu = u.back();
    if (!unit_lv)
      for (auto& c : u) c = c * lv;
    for (int k = 0; k <= dv; ++k) u[k + shift] = u[k + shift] - v[k] * lu;
    trim_qv(u);
  }
  return u;
}

}  // namespace

namespace {

Int int_content(const PolyQT& p) {
  Int g = 0;
  for (const auto& [m, c] : p.terms()) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Non-throwing exact-division attempt; divisor chains are common in
// denominator towers, so trying b | a before the PRS pays off.
bool try_divexact(const PolyQT& a, const PolyQT& b, PolyQT* quotient) {
  PolyQT rem = a;
  std::vector<std::pair<MonoQT, Int>> qterms;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    const auto& [bm, bc] = b.leading();
    if (rm.a < bm.a || rm.b < bm.b || !mpz_divisible_p(rc.get_mpz_t(), bc.get_mpz_t()))
      return false;
    MonoQT m{rm.a - bm.a, rm.b - bm.b};
    Int c = rc / bc;
    rem.submul_shifted(b, m, c);
    qterms.push_back({m, std::move(c)});
  }
  if (quotient) *quotient = PolyQT::from_terms(std::move(qterms));
  return true;
}

// gcd of a monomial with an arbitrary polynomial: exponent minima times the
// integer content gcd.  This is the dominant case in coefficient chains.
PolyQT gcd_with_monomial(const std::pair<MonoQT, Int>& mono, const PolyQT& p) {
  int a = mono.first.a, b = mono.first.b;
  for (const auto& [m, c] : p.terms()) {
    a = std::min(a, static_cast<int>(m.a));
    b = std::min(b, static_cast<int>(m.b));
  }
  Int g = int_gcd(abs(mono.second), int_content(p));
  return PolyQT::monomial(std::move(g), a, b);
}

}  // namespace

PolyQT poly_gcd(const PolyQT& a, const PolyQT& b) {
  auto sign_norm = [](PolyQT p) {
    return (!p.is_zero() && p.terms().front().second < 0) ? -p : p;
  };
  if (a.is_zero()) return sign_norm(b);
  if (b.is_zero()) return sign_norm(a);
  if (a.terms().size() == 1) return gcd_with_monomial(a.terms()[0], b);
  if (b.terms().size() == 1) return gcd_with_monomial(b.terms()[0], a);
  if (a == b) return sign_norm(a);
  if (a.terms().size() >= b.terms().size() && try_divexact(a, b, nullptr)) return sign_norm(b);
  if (b.terms().size() > a.terms().size() && try_divexact(b, a, nullptr)) return sign_norm(a);
  auto u = q_coeffs(a), v = q_coeffs(b);
  const PolyT cu = content_qv(u), cv = content_qv(v);
  u = div_content_qv(u, cu);
  v = div_content_qv(v, cv);
  const PolyT c0 = poly_gcd(cu, cv);
  if (deg_qv(u) >= 1 && deg_qv(v) >= 1 && specialized_q_degree(u, v) == 0) {
    // Primitive parts are coprime; only the contents contribute.
    std::vector<std::pair<MonoQT, Int>> raw;
    for (size_t bdeg = 0; bdeg < c0.coeffs().size(); ++bdeg)
      if (c0.coeffs()[bdeg] != 0)
        raw.push_back({MonoQT{0, static_cast<int32_t>(bdeg)}, c0.coeffs()[bdeg]});
    return sign_norm(PolyQT::from_terms(std::move(raw)));
  }
  if (deg_qv(u) < deg_qv(v)) std::swap(u, v);
  while (!is_zero_qv(v)) {
    auto r = prem_q(u, v);
    u = std::move(v);
    if (is_zero_qv(r)) {
      v.clear();
    } else {
      v = div_content_qv(r, content_qv(r));
    }
  }
  std::vector<PolyT> g = div_content_qv(u, content_qv(u));
  for (auto& e : g) e = e * c0;
  return sign_norm(from_q_coeffs(g));
}

// ---------------------------------------------------------------------------
// RatQT
// ---------------------------------------------------------------------------

RatQT::RatQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatQT::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQT::one();
    return;
  }
  if (!den_.is_one()) {
    const PolyQT g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  if (den_.terms().front().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQT RatQT::qt_pow(int a, int b) {
  PolyQT num = PolyQT::monomial(1, std::max(a, 0), std::max(b, 0));
  PolyQT den = PolyQT::monomial(1, std::max(-a, 0), std::max(-b, 0));
  return RatQT(std::move(num), std::move(den));
}

RatQT RatQT::operator-() const {
  RatQT f = *this;
  f.num_ = -f.num_;
  return f;
}

RatQT RatQT::operator+(const RatQT& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    PolyQT num = num_ + rhs.num_;
    if (num.is_zero()) return zero();
    if (den_.is_one()) return RatQT(std::move(num));
    return RatQT(std::move(num), den_);
  }
  // a/b + c/d with g = gcd(b,d): keeps the reduction gcd small.
  const PolyQT g = poly_gcd(den_, rhs.den_);
  const PolyQT b1 = den_.divexact(g), d1 = rhs.den_.divexact(g);
  PolyQT num = num_ * d1 + rhs.num_ * b1;
  if (num.is_zero()) return zero();
  PolyQT h = poly_gcd(num, g);
  RatQT out;
  out.num_ = h.is_one() ? std::move(num) : num.divexact(h);
  out.den_ = (h.is_one() ? g : g.divexact(h)) * b1 * d1;
  if (out.den_.terms().front().second < 0) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

RatQT RatQT::operator-(const RatQT& rhs) const { return *this + (-rhs); }

RatQT RatQT::operator*(const RatQT& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  const PolyQT g1 = poly_gcd(num_, rhs.den_);
  const PolyQT g2 = poly_gcd(rhs.num_, den_);
  RatQT out;
  out.num_ = num_.divexact(g1) * rhs.num_.divexact(g2);
  out.den_ = den_.divexact(g2) * rhs.den_.divexact(g1);
  if (out.den_.terms().front().second < 0) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

RatQT RatQT::operator/(const RatQT& rhs) const { return *this * rhs.inverse(); }

RatQT RatQT::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  RatQT f;
  f.num_ = den_;
  f.den_ = num_;
  if (f.den_.terms().front().second < 0) {
    f.num_ = -f.num_;
    f.den_ = -f.den_;
  }
  return f;
}

RatQT RatQT::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatQT acc = one(), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// RatT and specialization q -> t^e
// ---------------------------------------------------------------------------

RatT::RatT(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatT::normalize() {
  if (num_.is_zero()) {
    den_ = PolyT::one();
    return;
  }
  const PolyT g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (den_.tc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatT RatT::operator-() const {
  RatT f = *this;
  f.num_ = -f.num_;
  return f;
}

RatT RatT::operator+(const RatT& rhs) const {
  return RatT(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatT RatT::operator-(const RatT& rhs) const { return *this + (-rhs); }

RatT RatT::operator*(const RatT& rhs) const { return RatT(num_ * rhs.num_, den_ * rhs.den_); }

RatT RatT::operator/(const RatT& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  return RatT(num_ * rhs.den_, den_ * rhs.num_);
}

namespace {

// Laurent polynomial in t as exponent -> coefficient.
using LaurentT = std::map<int, Int>;

LaurentT lift_q(const PolyQT& p, int e) {
  LaurentT out;
  for (const auto& [m, c] : p.terms()) {
    auto& v = out[m.b + e * m.a];
    v += c;
    if (v == 0) out.erase(m.b + e * m.a);
  }
  return out;
}

PolyT laurent_shift(const LaurentT& l, int shift) {
  if (l.empty()) return PolyT::zero();
  std::vector<Int> coeffs(l.rbegin()->first + shift + 1, Int(0));
  for (const auto& [exp, c] : l) coeffs[exp + shift] = c;
  return PolyT(std::move(coeffs));
}

}  // namespace

RatT specialize_q(const RatQT& f, int e) {
  const LaurentT num = lift_q(f.num(), e);
  const LaurentT den = lift_q(f.den(), e);
  if (den.empty())
    throw pole_error("pole at specialization q = t^" + std::to_string(e));
  int low = 0;
  if (!num.empty()) low = std::min(low, num.begin()->first);
  low = std::min(low, den.begin()->first);
  return RatT(laurent_shift(num, -low), laurent_shift(den, -low));
}

RatQT embed(const RatT& f) {
  auto lift = [](const PolyT& p) {
    std::vector<std::pair<MonoQT, Int>> raw;
    for (size_t b = 0; b < p.coeffs().size(); ++b)
      if (p.coeffs()[b] != 0) raw.push_back({MonoQT{0, static_cast<int32_t>(b)}, p.coeffs()[b]});
    return PolyQT::from_terms(std::move(raw));
  };
  return RatQT(lift(f.num()), lift(f.den()));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

void append_term(std::ostream& os, bool first, const Int& c, int a, int b) {
  Int ac = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool need_star = false;
  if (ac != 1 || (a == 0 && b == 0)) {
    os << ac.get_str();
    need_star = true;
  }
  if (a != 0) {
    if (need_star) os << "*";
    os << (a == 1 ? "q" : "q^" + std::to_string(a));
    need_star = true;
  }
  if (b != 0) {
    if (need_star) os << "*";
    os << (b == 1 ? "t" : "t^" + std::to_string(b));
  }
}

}  // namespace

std::string render(const PolyQT& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    append_term(os, first, c, m.a, m.b);
    first = false;
  }
  return os.str();
}

std::string render(const RatQT& f) {
  if (f.den().is_one()) return render(f.num());
  return render(f.num()) + "/(" + render(f.den()) + ")";
}

std::string render(const PolyT& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t b = 0; b < p.coeffs().size(); ++b) {
    if (p.coeffs()[b] == 0) continue;
    append_term(os, first, p.coeffs()[b], 0, static_cast<int>(b));
    first = false;
  }
  return os.str();
}

std::string render(const RatT& f) {
  if (f.den().is_one()) return render(f.num());
  return render(f.num()) + "/(" + render(f.den()) + ")";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument("parse error: expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos) + " in \"" + s + "\"");
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error: " + why + " at offset " + std::to_string(pos) +
                                " in \"" + s + "\"");
  }
};

Int parse_int(Cursor& c) {
  c.skip_ws();
  std::string digits;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) digits.push_back(c.s[c.pos++]);
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    digits.push_back(c.s[c.pos++]);
  if (digits.empty() || digits == "-" || digits == "+") c.fail("expected integer");
  return Int(digits);
}

int parse_exponent(Cursor& c) {
  if (!c.accept('^')) return 1;
  const Int e = parse_int(c);
  if (e < 0 || e > 1000000) c.fail("exponent out of range");
  return static_cast<int>(e.get_si());
}

// term := int ['*' var...] | var ['*' var...], var := 'q'['^'int] | 't'['^'int]
void parse_term(Cursor& c, bool negate, std::vector<std::pair<MonoQT, Int>>& out) {
  Int coeff = 1;
  int a = 0, b = 0;
  bool any = false;
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    coeff = parse_int(c);
    any = true;
    if (!c.accept('*')) {
      out.push_back({MonoQT{0, 0}, negate ? -coeff : coeff});
      return;
    }
  }
  if (c.peek() == 'q') {
    ++c.pos;
    a = parse_exponent(c);
    any = true;
    if (c.accept('*')) {
      if (c.peek() != 't') c.fail("expected t after '*'");
    }
  }
  if (c.peek() == 't') {
    ++c.pos;
    b = parse_exponent(c);
    any = true;
  }
  if (!any) c.fail("expected term");
  out.push_back({MonoQT{a, b}, negate ? -coeff : coeff});
}

PolyQT parse_poly_at(Cursor& c) {
  std::vector<std::pair<MonoQT, Int>> raw;
  bool neg = c.accept('-');
  if (!neg) c.accept('+');
  parse_term(c, neg, raw);
  while (true) {
    const char ch = c.peek();
    if (ch == '+' || ch == '-') {
      ++c.pos;
      parse_term(c, ch == '-', raw);
    } else {
      break;
    }
  }
  return PolyQT::from_terms(std::move(raw));
}

}  // namespace

PolyQT parse_poly(const std::string& text) {
  Cursor c{text};
  PolyQT p = parse_poly_at(c);
  if (!c.eof()) c.fail("trailing input");
  return p;
}

RatQT parse_rat(const std::string& text) {
  Cursor c{text};
  PolyQT num = parse_poly_at(c);
  if (c.accept('/')) {
    c.expect('(');
    PolyQT den = parse_poly_at(c);
    c.expect(')');
    if (!c.eof()) c.fail("trailing input");
    return RatQT(std::move(num), std::move(den));
  }
  if (!c.eof()) c.fail("trailing input");
  return RatQT(std::move(num));
}

}  // namespace msuper

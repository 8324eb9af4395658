#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msuper {

using Int = mpz_class;

/// Raised when a rational function is evaluated on a subvariety where its
/// denominator vanishes identically (e.g. 1/(1-q*t^3) at q = t^-3).
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Monomial q^a t^b, exponents always nonnegative inside a PolyQT.
struct MonoQT {
  int32_t a = 0;  // power of q
  int32_t b = 0;  // power of t
  friend bool operator==(MonoQT, MonoQT) = default;
};

/// Graded-lex order with q weighted before t.
inline bool mono_less(MonoQT x, MonoQT y) {
  const int dx = x.a + x.b, dy = y.a + y.b;
  if (dx != dy) return dx < dy;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

/// Sparse bivariate polynomial over Z in q and t.
///
/// Invariants: terms sorted ascending in graded-lex order, no zero
/// coefficients stored; the zero polynomial has an empty term list.
class PolyQT {
 public:
  PolyQT() = default;

  static PolyQT zero() { return PolyQT(); }
  static PolyQT constant(Int c);
  static PolyQT one() { return constant(1); }
  static PolyQT monomial(Int c, int a, int b);
  static PolyQT q() { return monomial(1, 1, 0); }
  static PolyQT t() { return monomial(1, 0, 1); }

  const std::vector<std::pair<MonoQT, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;

  /// Leading (graded-lex maximal) term; polynomial must be nonzero.
  const std::pair<MonoQT, Int>& leading() const;

  int deg_q() const;
  int deg_t() const;

  PolyQT operator-() const;
  PolyQT operator+(const PolyQT& rhs) const;
  PolyQT operator-(const PolyQT& rhs) const;
  PolyQT operator*(const PolyQT& rhs) const;
  PolyQT& operator+=(const PolyQT& rhs) { return *this = *this + rhs; }
  PolyQT& operator-=(const PolyQT& rhs) { return *this = *this - rhs; }
  PolyQT& operator*=(const PolyQT& rhs) { return *this = *this * rhs; }
  friend bool operator==(const PolyQT&, const PolyQT&) = default;

  PolyQT mul_int(const Int& c) const;

  /// Exact quotient; throws std::logic_error if the division is not exact.
  PolyQT divexact(const PolyQT& d) const;

  /// In-place *this -= d * c * q^{m.a} t^{m.b}; one merge pass.
  void submul_shifted(const PolyQT& d, MonoQT m, const Int& c);

  /// Coefficient of q^a t^b (zero when absent).
  Int coeff(int a, int b) const;

  /// Assembles from arbitrary (possibly duplicated, zero) term data.
  static PolyQT from_terms(std::vector<std::pair<MonoQT, Int>> raw);

 private:
  std::vector<std::pair<MonoQT, Int>> terms_;
};

/// GCD, sign-normalized so the graded-lex least monomial has positive
/// coefficient (products of 1 - q^a t^b stay as written); gcd(0, p) = +-p.
PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);

/// Rational function in q,t over Z, kept fully reduced; the coefficient of
/// the denominator's graded-lex least monomial is positive.  Equality is
/// structural.
class RatQT {
 public:
  RatQT() : num_(PolyQT::zero()), den_(PolyQT::one()) {}
  RatQT(PolyQT num, PolyQT den);
  explicit RatQT(PolyQT num) : RatQT(std::move(num), PolyQT::one()) {}

  static RatQT zero() { return RatQT(); }
  static RatQT one() { return RatQT(PolyQT::one()); }
  static RatQT integer(long v) { return RatQT(PolyQT::constant(Int(v))); }
  static RatQT q() { return RatQT(PolyQT::q()); }
  static RatQT t() { return RatQT(PolyQT::t()); }
  /// q^a t^b with exponents of either sign.
  static RatQT qt_pow(int a, int b);
  static RatQT t_pow(int b) { return qt_pow(0, b); }
  static RatQT q_pow(int a) { return qt_pow(a, 0); }
  /// 1 - q^a t^b.
  static RatQT one_minus_qt(int a, int b) { return one() - qt_pow(a, b); }

  const PolyQT& num() const { return num_; }
  const PolyQT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatQT operator-() const;
  RatQT operator+(const RatQT& rhs) const;
  RatQT operator-(const RatQT& rhs) const;
  RatQT operator*(const RatQT& rhs) const;
  /// Throws std::domain_error on division by zero.
  RatQT operator/(const RatQT& rhs) const;
  RatQT& operator+=(const RatQT& r) { return *this = *this + r; }
  RatQT& operator-=(const RatQT& r) { return *this = *this - r; }
  RatQT& operator*=(const RatQT& r) { return *this = *this * r; }
  RatQT& operator/=(const RatQT& r) { return *this = *this / r; }
  friend bool operator==(const RatQT&, const RatQT&) = default;

  RatQT inverse() const;
  RatQT pow(int k) const;

 private:
  PolyQT num_, den_;
  void normalize();
};

/// Univariate polynomial in t over Z, dense coefficient vector.
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(std::vector<Int> coeffs);
  static PolyT zero() { return PolyT(); }
  static PolyT constant(Int c);
  static PolyT one() { return constant(1); }
  static PolyT monomial(Int c, int b);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& lc() const;
  /// Lowest-degree nonzero coefficient; anchors the canonical sign.
  const Int& tc() const;

  PolyT operator-() const;
  PolyT operator+(const PolyT& rhs) const;
  PolyT operator-(const PolyT& rhs) const;
  PolyT operator*(const PolyT& rhs) const;
  friend bool operator==(const PolyT&, const PolyT&) = default;

  PolyT mul_int(const Int& c) const;
  void mul_int_inplace(const Int& c);
  PolyT div_int_exact(const Int& c) const;
  PolyT divexact(const PolyT& d) const;
  /// In-place *this -= v * c * t^shift.
  void submul_shifted(const PolyT& v, int shift, const Int& c);

 private:
  std::vector<Int> coeffs_;  // coeffs_[k] multiplies t^k; back() nonzero
};

PolyT poly_gcd(const PolyT& a, const PolyT& b);

/// Rational function in t alone, reduced, denominator leading coeff positive.
class RatT {
 public:
  RatT() : num_(PolyT::zero()), den_(PolyT::one()) {}
  RatT(PolyT num, PolyT den);
  explicit RatT(PolyT num) : RatT(std::move(num), PolyT::one()) {}

  static RatT one() { return RatT(PolyT::one()); }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatT operator-() const;
  RatT operator+(const RatT& rhs) const;
  RatT operator-(const RatT& rhs) const;
  RatT operator*(const RatT& rhs) const;
  RatT operator/(const RatT& rhs) const;
  friend bool operator==(const RatT&, const RatT&) = default;

 private:
  PolyT num_, den_;
  void normalize();
};

/// Substitutes q = t^e, clearing negative powers of t through the
/// denominator.  Throws pole_error when the denominator vanishes
/// identically on the subvariety q*t^{-e} = 1.
RatT specialize_q(const RatQT& f, int e);

/// Embeds a q-free rational function back into Q(q,t).
RatQT embed(const RatT& f);

// Canonical text grammar shared by the CLI and the JSON fields:
//   poly := term ('+'|'-' term)*
//   term := int ['*' qpart] ['*' tpart] | qpart ['*' tpart] | tpart
//   rat  := poly | poly '/' '(' poly ')'
// Monomials are emitted ascending in graded-lex order, unit coefficients
// and exponent 1 are suppressed ("t^2/(1 + t)", "1 - q^2*t^3").
std::string render(const PolyQT& p);
std::string render(const RatQT& f);
std::string render(const PolyT& p);
std::string render(const RatT& f);

PolyQT parse_poly(const std::string& text);
RatQT parse_rat(const std::string& text);

}  // namespace msuper

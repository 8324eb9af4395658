#include <doctest.h>

#include <optional>
#include <random>

#include "msuper/qt.hpp"

using namespace msuper;

namespace {

// Independent long-division oracle: returns the quotient when the division
// is exact over Z[q,t], otherwise nothing.  Deliberately naive.
std::optional<PolyQT> long_division(const PolyQT& a, const PolyQT& b) {
  if (b.is_zero()) return std::nullopt;
  PolyQT rem = a, quot = PolyQT::zero();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    const auto& [bm, bc] = b.leading();
    if (rm.a < bm.a || rm.b < bm.b) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), bc.get_mpz_t())) return std::nullopt;
    const PolyQT term = PolyQT::monomial(rc / bc, rm.a - bm.a, rm.b - bm.b);
    quot += term;
    rem -= b * term;
  }
  return quot;
}

RatQT random_rat(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 3), nterms(1, 3);
  auto rand_poly = [&](bool nonzero) {
    PolyQT p;
    do {
      std::vector<std::pair<MonoQT, Int>> raw;
      for (int i = 0, k = nterms(gen); i < k; ++i)
        raw.push_back({MonoQT{expo(gen), expo(gen)}, Int(coeff(gen))});
      p = PolyQT::from_terms(std::move(raw));
    } while (nonzero && p.is_zero());
    return p;
  };
  return RatQT(rand_poly(false), rand_poly(true));
}

const RatQT kOne = RatQT::one();
const RatQT kQ = RatQT::q();
const RatQT kT = RatQT::t();

}  // namespace

TEST_CASE("rational arithmetic on the stated examples") {
  // 1/(1-t) + (-t)/(1-t) = 1
  const RatQT a(PolyQT::one(), PolyQT::one() - PolyQT::t());
  const RatQT b(-PolyQT::t(), PolyQT::one() - PolyQT::t());
  CHECK(a + b == kOne);

  // (1-qt^2)/(1-qt) * (1-qt)/(1-qt^2) = 1
  const RatQT c = RatQT::one_minus_qt(1, 2) / RatQT::one_minus_qt(1, 1);
  CHECK(c * c.inverse() == kOne);
  CHECK(c * (RatQT::one_minus_qt(1, 1) / RatQT::one_minus_qt(1, 2)) == kOne);

  // (1-q^2t^2)/(1-qt): quotient computed by the long-division oracle.
  const PolyQT num = (PolyQT::one() - PolyQT::q() * PolyQT::t()) *
                     (PolyQT::one() + PolyQT::q() * PolyQT::t());
  const auto quotient = long_division(num, PolyQT::one() - PolyQT::q() * PolyQT::t());
  REQUIRE(quotient.has_value());
  CHECK(render(*quotient) == "1 + q*t");
  CHECK(RatQT(num) / RatQT::one_minus_qt(1, 1) == RatQT(*quotient));

  CHECK_THROWS_AS(kOne / RatQT::zero(), std::domain_error);
}

TEST_CASE("polynomial gcd") {
  const PolyQT one_qt = PolyQT::one() - PolyQT::q() * PolyQT::t();
  // gcd(1 - q^2 t^2, (1-qt)^2) = 1 - qt
  const PolyQT a = (PolyQT::one() - PolyQT::q() * PolyQT::t()) *
                   (PolyQT::one() + PolyQT::q() * PolyQT::t());
  CHECK(poly_gcd(a, one_qt * one_qt) == one_qt);
  // gcd(p, 0) = p with positive leading coefficient
  CHECK(poly_gcd(-one_qt, PolyQT::zero()) == one_qt);
  CHECK(poly_gcd(PolyQT::zero(), -one_qt) == one_qt);
  // gcd(1 - q t^3, 1 - q t) = 1
  const PolyQT b = PolyQT::one() - PolyQT::q() * PolyQT::t() * PolyQT::t() * PolyQT::t();
  CHECK(poly_gcd(b, one_qt).is_one());
}

TEST_CASE("specialization q -> t^e") {
  // q t^3 at q = t^-3 is 1.
  CHECK(specialize_q(RatQT::qt_pow(1, 3), -3) == RatT::one());
  // (1-qt)/(1-q) at q = t^2 is (1+t+t^2)/(1+t).
  const RatT got = specialize_q(RatQT::one_minus_qt(1, 1) / RatQT::one_minus_qt(1, 0), 2);
  const PolyT expect_num(std::vector<Int>{1, 1, 1});
  const PolyT expect_den(std::vector<Int>{1, 1});
  CHECK(got == RatT(expect_num, expect_den));
  CHECK(render(got) == "1 + t + t^2/(1 + t)");
  // Denominator vanishing identically is a pole.
  CHECK_THROWS_AS(specialize_q(kOne / RatQT::one_minus_qt(1, 3), -3), pole_error);
  // Multiplicativity where both sides are defined.
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 50; ++rep) {
    const RatQT f = random_rat(gen), g = random_rat(gen);
    const int e = static_cast<int>(gen() % 7) - 3;
    try {
      const RatT lhs = specialize_q(f * g, e);
      const RatT rhs = specialize_q(f, e) * specialize_q(g, e);
      CHECK(lhs == rhs);
    } catch (const pole_error&) {
      // either factor may be undefined on the subvariety; skip
    }
  }
}

TEST_CASE("canonical rendering") {
  CHECK(render(PolyQT::zero()) == "0");
  const PolyQT bracket3 = PolyQT::one() + PolyQT::t() + PolyQT::t() * PolyQT::t();
  CHECK(render(bracket3) == "1 + t + t^2");
  const RatQT kappa2 = RatQT::t_pow(2) / RatQT(PolyQT::one() + PolyQT::t());
  CHECK(render(kappa2) == "t^2/(1 + t)");
  const RatQT f = kOne - RatQT::qt_pow(2, 3);
  CHECK(render(f) == "1 - q^2*t^3");
  CHECK(parse_rat("1 - q^2*t^3") == f);
  CHECK(parse_rat("t^2/(1 + t)") == kappa2);
  CHECK(parse_rat("0") == RatQT::zero());
  CHECK_THROWS_AS(parse_rat("1 + + t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x^2"), std::invalid_argument);
}

TEST_CASE("field axioms and round trips on random samples") {
  std::mt19937_64 gen(42);
  for (int rep = 0; rep < 100; ++rep) {
    const RatQT a = random_rat(gen), b = random_rat(gen), c = random_rat(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatQT::zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == kOne);
    // Canonical-form idempotence: rebuilding from num/den changes nothing.
    CHECK(RatQT(a.num(), a.den()) == a);
    // Text round trip.
    CHECK(parse_rat(render(a)) == a);
  }
}

TEST_CASE("pow and helpers") {
  CHECK(kQ.pow(3) == kQ * kQ * kQ);
  CHECK(kT.pow(-2) * kT.pow(2) == kOne);
  CHECK(RatQT::qt_pow(2, -3) == kQ * kQ / (kT * kT * kT));
  CHECK_THROWS_AS(PolyQT::monomial(1, -1, 0), std::invalid_argument);
}

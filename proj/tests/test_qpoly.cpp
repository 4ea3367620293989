#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qvir/qpoly.hpp"

using namespace qvir;

namespace {
QPoly qpow(std::int64_t n) { return QPoly::monomial(QExp::integer(n), 1); }
}  // namespace

TEST_CASE("exponent arithmetic and formatting") {
  CHECK(QExp::integer(3).eighths == 24);
  CHECK(QExp::half(3).eighths == 12);
  CHECK(QExp::quarter(3).eighths == 6);
  CHECK(QExp::integer(3).is_integer());
  CHECK(QExp::integer(3).as_integer() == 3);
  CHECK_FALSE(QExp::half(3).is_integer());
  CHECK_THROWS_AS(QExp::half(3).as_integer(), std::domain_error);
  CHECK(QExp::integer(3).str() == "3");
  CHECK(QExp::half(-1).str() == "-1/2");
  CHECK(QExp(7).str() == "7/8");
  CHECK(QExp::half(1) + QExp::quarter(1) == QExp(6));
  CHECK(3 * QExp::quarter(1) == QExp(6));
}

TEST_CASE("addition cancels exactly") {
  // (1 + q) + (-q) = 1
  QPoly p = QPoly::one() + qpow(1);
  QPoly q = QPoly::monomial(QExp::integer(1), -1);
  CHECK(p + q == QPoly::one());
  CHECK((p - p).is_zero());
  CHECK(p.term_count() == 2);
  CHECK(p.coeff(QExp::integer(1)) == 1);
  CHECK(p.coeff(QExp::integer(5)) == 0);
}

TEST_CASE("multiplication and shifts") {
  QPoly p = QPoly::one() + qpow(1);          // 1 + q
  QPoly q = QPoly::one_minus_qpow(QExp::integer(1));  // 1 - q
  CHECK(p * q == QPoly::one() - qpow(2));
  CHECK(p.shifted(QExp::half(1)).min_exponent() == QExp::half(1));
  CHECK((p * QPoly::zero()).is_zero());
  QPoly c = p;
  c *= Coeff(3);
  CHECK(c.coeff(QExp(0)) == 3);
}

TEST_CASE("exact division") {
  // (1 - q^2) / (1 - q) = 1 + q
  QPoly num = QPoly::one_minus_qpow(QExp::integer(2));
  QPoly den = QPoly::one_minus_qpow(QExp::integer(1));
  CHECK(div_exact(num, den) == QPoly::one() + qpow(1));
  CHECK(num.div_one_minus_qpow(QExp::integer(1)) == QPoly::one() + qpow(1));
  CHECK_THROWS_AS(div_exact(QPoly::one() + qpow(1), num), std::domain_error);
  CHECK_THROWS_AS((QPoly::one() + qpow(1)).div_one_minus_qpow(QExp::integer(1)),
                  std::domain_error);
}

TEST_CASE("power substitution") {
  // (1 + q^2) at q -> q^{1/2} is 1 + q
  QPoly p = QPoly::one() + qpow(2);
  CHECK(p.substitute_power(1, 2) == QPoly::one() + qpow(1));
  CHECK(p.substitute_power(3, 1) == QPoly::one() + qpow(6));
  // q^{1/8} at q -> q^{1/2} would leave the exponent lattice
  CHECK_THROWS_AS(QPoly::monomial(QExp(1), 1).substitute_power(1, 2), std::domain_error);
}

TEST_CASE("truncation keeps the boundary exponent") {
  QPoly p = QPoly::one() + qpow(1) + qpow(2) + qpow(3);
  QPoly t = p.truncated(QExp::integer(2));
  CHECK(t == QPoly::one() + qpow(1) + qpow(2));
}

TEST_CASE("evaluation at one") {
  QPoly p = QPoly::one() + qpow(1) + QPoly::monomial(QExp::integer(2), 5);
  CHECK(p.eval_at_one() == 7);
}

TEST_CASE("json round trip is bit exact") {
  QPoly p;
  p.add_term(QExp(-3), Coeff("-123456789012345678901234567890"));
  p.add_term(QExp::integer(4), 7);
  p.add_term(QExp::half(1), 1);
  nlohmann::json j = p;
  CHECK(j["den"] == 8);
  QPoly back = j.get<QPoly>();
  CHECK(back == p);
  // terms are serialized ascending by exponent
  CHECK(j["terms"][0][0].get<std::int64_t>() == -3);
}

TEST_CASE("truncated series agree at the common order") {
  QPoly a = QPoly::one() + qpow(1) + qpow(5);
  QPoly b = QPoly::one() + qpow(1) + QPoly::monomial(QExp::integer(5), 9);
  TruncatedSeries sa(a, QExp::integer(4));
  TruncatedSeries sb(b, QExp::integer(6));
  CHECK(agree(sa, sb));  // compared at order 4
  TruncatedSeries sc(b, QExp::integer(5));
  TruncatedSeries sd(a, QExp::integer(5));
  CHECK_FALSE(agree(sc, sd));
  CHECK(agree(sa + sa, sa * (TruncatedSeries(QPoly::monomial(QExp(0), 2), QExp::integer(4)))));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvir/qspecial.hpp"

using namespace qvir;

namespace {

QPoly qpow(std::int64_t n) { return QPoly::monomial(QExp::integer(n), 1); }

// Partition counting oracle: p(k, maxPart) partitions of k into parts <= maxPart.
long long partition_count(int k, int max_part) {
  if (k == 0) return 1;
  if (k < 0 || max_part == 0) return 0;
  return partition_count(k - max_part, max_part) + partition_count(k, max_part - 1);
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(q_pochhammer(0) == QPoly::one());
  CHECK(q_pochhammer(2) ==
        QPoly::one_minus_qpow(QExp::integer(1)) * QPoly::one_minus_qpow(QExp::integer(2)));
  CHECK_THROWS_AS(q_pochhammer(-1), std::domain_error);
}

TEST_CASE("inverse pochhammer counts partitions") {
  TruncatedSeries inf = inv_pochhammer_truncated(QExp::integer(12));
  for (int k = 0; k <= 12; ++k) {
    CHECK(inf.poly.coeff(QExp::integer(k)) == partition_count(k, k));
  }
  TruncatedSeries fin = inv_pochhammer_finite_truncated(3, QExp::integer(12));
  for (int k = 0; k <= 12; ++k) {
    CHECK(fin.poly.coeff(QExp::integer(k)) == partition_count(k, 3));
  }
  CHECK_THROWS_AS(inv_pochhammer_finite_truncated(-1, QExp::integer(4)), std::domain_error);
  CHECK(inv_pochhammer_finite_truncated(0, QExp::integer(4)).poly == QPoly::one());
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(0, 0) == QPoly::one());
  CHECK(q_binomial(1, 1) == QPoly::one() + qpow(1));
  // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
  QPoly b22 = QPoly::one() + qpow(1) + QPoly::monomial(QExp::integer(2), 2) + qpow(3) + qpow(4);
  CHECK(q_binomial(2, 2) == b22);
  CHECK(q_binomial(2, -1).is_zero());
  CHECK(q_binomial(-1, 2).is_zero());
  // the modified binomial differs from the plain one only at (0, -1)
  CHECK(q_binomial_modified(0, -1) == QPoly::one());
  CHECK(q_binomial(0, -1).is_zero());
  CHECK(q_binomial_modified(2, 2) == q_binomial(2, 2));
  CHECK(q_binomial_modified(1, -1).is_zero());
  // base change replaces q by q^2
  CHECK(q_binomial_base(1, 1, 2) == QPoly::one() + qpow(2));
  CHECK(q_binomial_modified_base(0, -1, 2) == QPoly::one());
  // symmetric in the two arguments
  CHECK(q_binomial(3, 5) == q_binomial(5, 3));
  // counts at q = 1
  CHECK(q_binomial(3, 4).eval_at_one() == 35);
}

TEST_CASE("trinomial small values") {
  // T(0; 0; 2) = 1 + q + q^2
  CHECK(q_trinomial(0, 0, 2) == QPoly::one() + qpow(1) + qpow(2));
  CHECK(q_trinomial(0, 0, 0) == QPoly::one());
  CHECK(q_trinomial(0, 3, 2).is_zero());  // |d| > L
  CHECK(q_trinomial_alt(0, 0, 2) == q_trinomial(0, 0, 2));
  // reflection carries d to -d with an explicit monomial factor
  CHECK(q_trinomial(1, -2, 4) == q_trinomial(1, 2, 4).shifted(QExp::integer(-2)));
}

TEST_CASE("trinomial walk counts") {
  CHECK(trinomial_walk_count(0, 0) == 1);
  CHECK(trinomial_walk_count(0, 2) == 3);   // 00, +-, -+
  CHECK(trinomial_walk_count(1, 2) == 2);   // 0+, +0
  CHECK(trinomial_walk_count(2, 2) == 1);   // ++
  CHECK(q_trinomial(0, 0, 6).eval_at_one() == trinomial_walk_count(0, 6));
  CHECK(q_trinomial(0, 2, 5).eval_at_one() == trinomial_walk_count(2, 5));
}

TEST_CASE("trinomial identity suite") {
  Report rep = verify_trinomial_identities(2, 4, 8);
  for (const auto& r : rep) {
    CAPTURE(r.identity);
    CAPTURE(r.indices);
    CHECK(r.pass);
  }
}

TEST_CASE("trinomial limits") {
  Report rep = verify_trinomial_limits(2, 4, 8);
  CHECK(!rep.empty());
  for (const auto& r : rep) {
    CAPTURE(r.identity);
    CAPTURE(r.indices);
    CHECK(r.pass);
  }
}

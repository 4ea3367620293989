#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvir/paths.hpp"
#include "qvir/qspecial.hpp"

using namespace qvir;

TEST_CASE("path validation") {
  AbfPath ok{3, 0, 1, {1, 2, 3, 2}};
  CHECK_NOTHROW(validate(ok));
  CHECK(ok.a() == 1);
  CHECK(ok.b() == 2);
  CHECK(ok.length() == 3);
  CHECK(ok.pre_height() == 2);   // e = 0: segment above
  CHECK(ok.post_height() == 1);  // f = 1: segment below
  CHECK_THROWS_AS(validate(AbfPath{3, 0, 0, {1, 3}}), std::invalid_argument);   // bad step
  CHECK_THROWS_AS(validate(AbfPath{3, 0, 0, {0, 1}}), std::invalid_argument);   // out of band
  CHECK_THROWS_AS(validate(AbfPath{3, 2, 0, {1, 2}}), std::invalid_argument);   // bad flag
  CHECK_THROWS_AS(validate(AbfPath{3, 0, 0, {}}), std::invalid_argument);       // empty
}

TEST_CASE("weights and vertex words") {
  // zigzag 1,2,1,2: every interior vertex is a turn
  AbfPath zig{2, 0, 1, {1, 2, 1, 2}};
  CHECK(vertex_word(zig) == "NNNN");
  CHECK(abf_weight(zig) == QExp::integer(0));
  // straight run 1,2,3 with straight vertex at position 1
  AbfPath run{3, 0, 1, {1, 2, 3}};
  CHECK(vertex_word(run) == "NSN");
  CHECK(abf_weight(run) == QExp::half(1));
  // word-based weight agrees with the geometric one
  for (const AbfPath& h : enumerate_abf(3, 2, 3, 1, 0, 5)) {
    CHECK(abf_weight(h) == weight_from_word(vertex_word(h)));
  }
  // the word determines the path given band, start and incoming flag
  for (const AbfPath& h : enumerate_abf(3, 1, 2, 0, 1, 5)) {
    AbfPath back = path_from_word(vertex_word(h), h.band, h.a(), h.e);
    CHECK(back.heights == h.heights);
    CHECK(back.f == h.f);
  }
}

TEST_CASE("enumeration counts") {
  // unreachable endpoint parity gives the empty set
  CHECK(enumerate_abf(3, 1, 2, 0, 0, 2).empty());
  CHECK_THROWS_AS(enumerate_abf(3, 0, 1, 0, 0, 2), std::invalid_argument);
  // band 2 paths zigzag deterministically: exactly one per reachable datum
  CHECK(enumerate_abf(2, 1, 1, 0, 0, 4).size() == 1);
  // q = 1 count equals the walk count of unit steps in the band
  auto paths = enumerate_abf(3, 2, 2, 0, 0, 6);
  CHECK(gf_abf(3, 2, 2, 0, 0, 6).eval_at_one() == static_cast<std::int64_t>(paths.size()));
}

TEST_CASE("straight-count slices partition the generating function") {
  QPoly total = gf_abf(3, 1, 2, 0, 1, 5);
  QPoly sum;
  for (int m = 0; m <= 6; ++m) sum += gf_abf_m(3, 1, 2, 0, 1, 5, m);
  CHECK(total == sum);
}

TEST_CASE("valley restriction") {
  // with N positions j_0 < j_1 < ..., valleys are the indices of parity e
  CHECK(even_valley_count("NN", 1, 0) == 0);   // valley at odd height 1
  CHECK(even_valley_count("NN", 2, 0) == 1);   // valley at even height 2
  CHECK(even_valley_count("NN", 2, 1) == 0);   // e = 1: position 0 is a peak
  QPoly all = gf_abf(3, 2, 2, 0, 0, 4);
  QPoly restricted = gf_abf_restricted(3, 2, 2, 0, 0, 4);
  CHECK(restricted.eval_at_one() <= all.eval_at_one());
  QPoly sum;
  for (int m = 0; m <= 5; ++m) sum += gf_abf_restricted_m(3, 2, 2, 0, 0, 4, m);
  CHECK(sum == restricted);
}

TEST_CASE("half-lattice paths") {
  // length 0: single vertex, weight 0
  CHECK(gf_half(5, 2, 2, 0, 0, 0) == QPoly::one());
  CHECK(gf_half(5, 2, 4, 0, 0, 0).is_zero());
  // valleys must sit at integer height: doubled heights even at valleys
  for (const HalfLatticePath& h : enumerate_half(5, 2, 2, 0, 0, 6)) {
    CHECK_NOTHROW(validate(h));
    for (int j = 1; j < h.length2(); ++j) {
      if (h.heights2[j - 1] == h.heights2[j + 1] && h.heights2[j - 1] == h.heights2[j] + 1) {
        CHECK(h.heights2[j] % 2 == 0);
      }
    }
  }
  // weight: half the sum of the x positions of straight vertices
  HalfLatticePath run{6, 0, 1, {2, 3, 4, 5}};
  // straight at doubled positions 1 and 2 (x = 1/2 and 1): weight 3/4
  CHECK(half_weight(run) == QExp::quarter(3));
}

TEST_CASE("height rescaling from restricted band paths") {
  // odd band, restricted path: h -> (h+1)/2 halves the weight
  for (const AbfPath& h : enumerate_abf(5, 1, 3, 0, 1, 6)) {
    if (even_valley_count(h) != 0) continue;
    HalfLatticePath half = half_from_restricted(h);
    CHECK_NOTHROW(validate(half));
    CHECK(half.band2 == 6);
    CHECK(half.a2() == h.a() + 1);
    CHECK(half.b2() == h.b() + 1);
    CHECK(2 * half_weight(half).eighths == abf_weight(h).eighths);
  }
  AbfPath valleyed{5, 0, 0, {2, 3, 2, 3, 2}};
  CHECK(even_valley_count(valleyed) == 3);
  CHECK_THROWS_AS(half_from_restricted(valleyed), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvir/paths.hpp"
#include "qvir/transforms.hpp"

using namespace qvir;

TEST_CASE("band extension on words") {
  // the k+1 'N' symbols at j_0 < ... < j_k move to j_i + i
  CHECK(band_extend_word("N") == "N");
  CHECK(band_extend_word("NSN") == "NSSN");
  CHECK(band_extend_word("NN") == "NSN");
  CHECK(band_extend_word("SNN") == "SNSN");
  CHECK_THROWS_AS(band_extend_word("S"), std::domain_error);
  // the N count is preserved and the straight count of the image equals
  // the source path length (word size minus one)
  VertexWord w = "SNSNN";
  VertexWord x = band_extend_word(w);
  CHECK(x.size() == w.size() + 2);
  CHECK(straight_count(x) == static_cast<int>(w.size()) - 1);
}

TEST_CASE("particle insertion and displacement on words") {
  CHECK(append_particles_word("NSN", 2) == "NSNNNNN");
  CHECK(append_particles_word("NSN", 0) == "NSN");
  // one particle moved so that 5 straight symbols sit to its right
  CHECK(displace_particles_word("SSNSSNSNN", {5}) == "NNSSNSSNS");
  CHECK(displace_particles_word("SSNSSNSNN", {0}) == "SSNSSNSNN");
  CHECK_THROWS_AS(displace_particles_word("SSNSSNSNN", {6}), std::invalid_argument);
  CHECK_THROWS_AS(displace_particles_word("SSS", {1}), std::invalid_argument);
  // each elementary move raises the weight by exactly 1
  VertexWord v = "SSNSSNSNN";
  std::int64_t w0 = weight_from_word(v).eighths;
  v = apply_move(v, 6);  // SNN at position 6
  CHECK(weight_from_word(v).eighths == w0 + 8);
  // five moves in total reproduce the displacement by (5)
  VertexWord u = "SSNSSNSNN";
  for (int moves = 0; moves < 5; ++moves) {
    std::size_t at = u.rfind("SNN");
    u = apply_move(u, at);
  }
  CHECK(u == "NNSSNSSNS");
  CHECK(weight_from_word(u).eighths == w0 + 5 * 8);
}

TEST_CASE("band extension on paths") {
  AbfPath h{7, 0, 1, {3, 4, 5, 6, 5, 6, 7, 6, 5, 4, 3, 2, 1, 2, 3, 4, 3, 4}};
  CHECK(h.length() == 17);
  AbfPath g = c1_transform(h);
  CHECK(g.band == 8);
  CHECK(g.a() == h.a() + h.e);
  CHECK(g.b() == h.b() + h.f);
  CHECK(g.e == h.e);
  CHECK(g.f == h.f);
  CHECK(g.length() == 24);
  // straight count of the image equals the length of the source
  CHECK(straight_count(vertex_word(g)) == h.length());
}

TEST_CASE("particle insertion on paths") {
  AbfPath h{5, 1, 0, {4, 3, 2, 1, 2, 3, 4, 5, 4, 3}};
  AbfPath g = c2_transform(h, 4);
  CHECK(g.length() == h.length() + 8);
  CHECK(straight_count(vertex_word(g)) == straight_count(vertex_word(h)));
  CHECK(abf_weight(g) == abf_weight(h));
  CHECK(g.band == h.band);
  CHECK(g.a() == h.a());
}

TEST_CASE("displacement on paths raises weight by the partition size") {
  // extend the band first so the appended particles have headroom
  AbfPath h{3, 0, 0, {1, 2, 3, 2, 3}};
  AbfPath g2 = c2_transform(c1_transform(h), 2);
  for (std::vector<int> lambda : {std::vector<int>{2, 1}, std::vector<int>{1, 0}}) {
    AbfPath g3 = c3_transform(g2, lambda);
    std::int64_t size = 0;
    for (int part : lambda) size += part;
    CHECK(abf_weight(g3).eighths == abf_weight(g2).eighths + 8 * size);
  }
  CHECK_THROWS_AS(c3_transform(g2, {1, 2}), std::invalid_argument);  // not decreasing
}

TEST_CASE("word decomposition inverts the composite transform") {
  Decomposition d = c_decompose_word("NNSSNSSNS");
  CHECK(d.n == 1);
  CHECK(d.lambda == std::vector<int>{5});
  // rebuild: extend, append, displace
  VertexWord rebuilt =
      displace_particles_word(append_particles_word(band_extend_word(d.base), d.n), d.lambda);
  CHECK(rebuilt == "NNSSNSSNS");
  // an all-straight word is the image of the all-straight base one longer
  Decomposition flat = c_decompose_word("SS");
  CHECK(flat.base == "SSS");
  CHECK(flat.n == 0);
  CHECK_THROWS_AS(c_decompose_word(""), std::domain_error);
}

TEST_CASE("path decomposition round trip") {
  std::vector<AbfPath> seeds = enumerate_abf(3, 1, 2, 0, 1, 5);
  REQUIRE(!seeds.empty());
  for (const AbfPath& h : seeds) {
    AbfPath g = c_transform(h, 2, {3, 1});
    PathDecomposition d = c_decompose(g);
    CHECK(d.base.heights == h.heights);
    CHECK(d.n == 2);
    CHECK(d.lambda == std::vector<int>{3, 1});
  }
  // expected straight count mismatch is detected
  AbfPath g = c_transform(seeds.front(), 1, {0});
  CHECK_THROWS_AS(c_decompose(g, 99), std::domain_error);
}

TEST_CASE("transform identity checks") {
  for (int L = 0; L <= 4; ++L) {
    for (int Lp = 0; Lp <= 6; ++Lp) {
      for (const auto& rep : {unrestricted_transform_check(3, 2, 1, 0, 1, L, Lp),
                              restricted_transform_check(3, 2, 1, 0, 1, L, Lp),
                              refined_bijection_check(3, 2, 1, 0, 1, L, Lp)}) {
        for (const auto& r : rep) {
          CAPTURE(r.identity);
          CAPTURE(r.indices);
          CAPTURE(r.detail);
          CHECK(r.pass);
        }
      }
    }
  }
}

#pragma once

// The combinatorial transforms on band paths, implemented on vertex
// words: band extension (N positions spread apart by their index),
// particle insertion at the right edge, and particle displacement by a
// partition.  The inverse decomposition canonicalizes by repeatedly
// removing the rightmost adjacent NN pair.

#include <vector>

#include "qvir/paths.hpp"
#include "qvir/report.hpp"

namespace qvir {

// Word-level primitives ----------------------------------------------------

// N positions j_0 < j_1 < ... < j_k map to j_0, j_1+1, ..., j_k+k; the
// resulting word has length L + k + 1 where L is the input word length
// minus one.  Throws for the single undefined input "S" (length-0 path
// with opposite boundary flags).
VertexWord band_extend_word(const VertexWord& v);

// Append n particles: 2n trailing 'N' symbols.
VertexWord append_particles_word(const VertexWord& v, int n);

// Move particles left: for each part lambda_i (weakly decreasing), one
// trailing NN pair is re-inserted so that exactly lambda_i 'S' symbols lie
// to its right.  Requires the word to end in at least 2*len(lambda) 'N's
// and lambda_1 <= straight_count(v).
VertexWord displace_particles_word(const VertexWord& v, const std::vector<int>& lambda);

// One elementary particle move: rewrite "SNN" at position i to "NNS";
// raises the word weight by exactly 1.
VertexWord apply_move(VertexWord v, std::size_t i);

// Path-level transforms -----------------------------------------------------

// Band extension: band -> band+1, a -> a+e, b -> b+f, flags unchanged.
AbfPath c1_transform(const AbfPath& h);

// Particle insertion; band and weight unchanged, length += 2n.
AbfPath c2_transform(const AbfPath& h, int n);

// Particle displacement by the partition lambda; weight += |lambda|.
AbfPath c3_transform(const AbfPath& h, const std::vector<int>& lambda);

// c3(c2(c1(h), n), lambda).
AbfPath c_transform(const AbfPath& h, int n, const std::vector<int>& lambda);

struct Decomposition {
  VertexWord base;
  int n = 0;
  std::vector<int> lambda;  // weakly decreasing, n parts (zeros kept)
};

// Invert the composite transform on a word: strip particles by removing
// the rightmost adjacent NN pair until none remains (recording how many
// 'S' symbols lie right of each removal), then undo the band extension.
// Throws std::domain_error if the word is not in the image.
Decomposition c_decompose_word(const VertexWord& v);

struct PathDecomposition {
  AbfPath base;
  int n = 0;
  std::vector<int> lambda;
};

// Path-level inverse; expected_base_m, when >= 0, is cross-checked against
// the straight count of the recovered base path.
PathDecomposition c_decompose(const AbfPath& h, int expected_base_m = -1);

// Verifies, for the valley-restricted families with base band `band`, that
// the composite transform restricted to even-part-offset partitions
// (lambda_i = 2 mu_i + TR with TR = (b+1) mod 2) is a weight-graded
// bijection onto the straight-count-L slice of the band+1 family:
// injectivity, surjectivity (by count), the weight law with the nTR
// correction, the parity law lambda_i = TR (mod 2), and round-tripping
// through the decomposition.
Report refined_bijection_check(int band, int a, int b, int e, int f, int L, int Lprime);

// The unrestricted counterpart: checks the straight-count recursion
// gf_{band+1}(L', L) = sum_n q^{L(L-m)/2} [n+L, n] gf_band(L, m) with
// m = 2L - L' + 2n, as an exact polynomial identity.
Report unrestricted_transform_check(int band, int a, int b, int e, int f, int L, int Lprime);

// Restricted counterpart of the identity above, with base-q^2 modified
// binomials and the nTR exponent correction.
Report restricted_transform_check(int band, int a, int b, int e, int f, int L, int Lprime);

}  // namespace qvir

#pragma once

// Lattice-path models: integer-height band paths with oriented boundary
// segments, their valley-restricted subfamily, and the half-integer-step
// paths.  Enumeration here is deliberately direct (DFS over heights) so
// the resulting generating functions serve as independent oracles for the
// closed-form expressions in the bosonic/fermionic modules.

#include <string>
#include <vector>

#include "qvir/qpoly.hpp"

namespace qvir {

// Path in the band 1..band with unit steps, endpoints a = h_0 and
// b = h_L, and boundary orientation flags e (before h_0) and f (after
// h_L).  The two virtual segment heights are a+1-2e and b+1-2f: flag 0
// means the segment sits above the endpoint, flag 1 below.
struct AbfPath {
  int band = 0;
  int e = 0;
  int f = 0;
  std::vector<int> heights;  // h_0 .. h_L

  int a() const { return heights.front(); }
  int b() const { return heights.back(); }
  int length() const { return static_cast<int>(heights.size()) - 1; }
  int pre_height() const { return a() + 1 - 2 * e; }
  int post_height() const { return b() + 1 - 2 * f; }
};

// Throws std::invalid_argument unless steps, band membership and flags are
// all well formed.
void validate(const AbfPath& h);

// Weight: quarter-sum of i*|h_{i+1} - h_{i-1}| over 1 <= i <= L, boundary
// segments included; equivalently half the sum of the positions of the
// straight vertices.
QExp abf_weight(const AbfPath& h);

// The vertex word of a path: one symbol per vertex 0..L, 'S' where the
// path goes straight through (boundary segments included), 'N' at peaks
// and valleys.
using VertexWord = std::string;

VertexWord vertex_word(const AbfPath& h);

// Number of 'S' symbols; the particle-counting statistic m(h).
int straight_count(const VertexWord& v);

// Rebuild the path from its word given the band, the start height and the
// incoming orientation flag; the outgoing flag is determined by the word.
AbfPath path_from_word(const VertexWord& v, int band, int a, int e);

// Weight recomputed from the word alone: L(L+1)/4 minus half the sum of
// the 'N' positions.
QExp weight_from_word(const VertexWord& v);

// Number of valleys of h at even height.  With N positions j_0 < ... <
// j_k, the valleys are those with index i = e (mod 2), and such a valley
// sits at even height exactly when j_i = a (mod 2).  Valley-restricted
// paths are those where this count is zero.
int even_valley_count(const VertexWord& v, int a, int e);
int even_valley_count(const AbfPath& h);

// All band paths with the given boundary data, in lexicographic height
// order.  Unreachable parameter combinations give an empty set; out-of-
// band endpoints throw.
std::vector<AbfPath> enumerate_abf(int band, int a, int b, int e, int f, int L);

// Weight generating functions, optionally restricted to straight count m
// and/or to valley-restricted paths.
QPoly gf_abf(int band, int a, int b, int e, int f, int L);
QPoly gf_abf_m(int band, int a, int b, int e, int f, int L, int m);
QPoly gf_abf_restricted(int band, int a, int b, int e, int f, int L);
QPoly gf_abf_restricted_m(int band, int a, int b, int e, int f, int L, int m);

// Path with half-integer steps on the band 1..band2/2.  All half-integer
// quantities are stored doubled: heights2[j] = 2*h_{j/2}, the length
// parameter L2 = 2L, endpoints a2 = 2a, b2 = 2b.  Valleys are required to
// sit at integer heights (even doubled heights), boundary segments
// included.
struct HalfLatticePath {
  int band2 = 0;  // 2t
  int e = 0;
  int f = 0;
  std::vector<int> heights2;  // 2*h_x for x = 0, 1/2, ..., L

  int a2() const { return heights2.front(); }
  int b2() const { return heights2.back(); }
  int length2() const { return static_cast<int>(heights2.size()) - 1; }
  int pre_height2() const { return a2() + 1 - 2 * e; }
  int post_height2() const { return b2() + 1 - 2 * f; }
};

void validate(const HalfLatticePath& h);

// Weight: half the sum of the x-positions of the straight vertices
// (so each straight vertex at x = j/2 contributes j/4).
QExp half_weight(const HalfLatticePath& h);

std::vector<HalfLatticePath> enumerate_half(int band2, int a2, int b2, int e, int f, int L2);
QPoly gf_half(int band2, int a2, int b2, int e, int f, int L2);

// The height rescaling h -> (h+1)/2 that carries a valley-restricted band
// path (odd band) to a half-lattice path of half the length; weights halve.
HalfLatticePath half_from_restricted(const AbfPath& h);

}  // namespace qvir

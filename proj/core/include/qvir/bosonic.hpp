#pragma once

// Bosonic (alternating-sum) expressions: the character series, the
// binomial alternating sum for band-path generating functions, and the
// trinomial alternating sums for half-lattice path generating functions,
// together with their recurrence and limit verifications.

#include <cstdint>

#include "qvir/qpoly.hpp"
#include "qvir/report.hpp"

namespace qvir {

// Character chi^{p,p'}_{r,s} as a truncated series.  p and r may be
// half-integers and are passed doubled (p2 = 2p, r2 = 2r); p' and s are
// integers.  The lambda window is expanded symmetrically until both
// exponent families exceed the order on two consecutive lambda on each
// side.  r2 = 0 is permitted and yields the zero series.
TruncatedSeries rocha_caridi(int p2, int pprime, int r2, int s, QExp order);

// Alternating binomial sum for the band-path generating function
// X^{e,f}_{band;a,b}(L) (boundary-flag-weighted paths in the band
// 1..band); equal to the enumerated gf_abf.
QPoly abf_bosonic_finitized(int band, int a, int b, int e, int f, int L);

// Y^{n;t}_{a,b}(L): alternating trinomial sum; t is passed doubled (t2),
// a, b, L, n are integers (a, b need not lie in the band: the analytic
// extension is exactly this formula).
QPoly y_polynomial(int n, int t2, int a, int b, int L);

// The half-lattice path generating function via Y-polynomials.  a is an
// integer; b and L are passed doubled and must carry the same parity
// (integer b with integer L, half-integer b with half-integer L) --
// otherwise the path set is empty and the zero polynomial is returned.
QPoly half_bosonic_finitized(int t2, int a, int b2, int e, int f, int L2);

// Analytic extension of the integer-b case to arbitrary integer a, b:
// q^{(a-b)(a-b-1/2)/2 + fL/2} Y^{f;t}_{a,b}(L).
QPoly half_bosonic_extended(int t2, int a, int b, int e, int f, int L);

// Verifies the half-lattice recurrence system at the given t: the two
// length recurrences, the half-step recurrences, the boundary vanishing
// laws (as Y-identities where they leave the band), and the length-0
// initial condition, for all a, b and 1 <= L <= lmax.
Report verify_bosonic_recurrences(int t2, int lmax);

// Large-L limits of the Y-polynomials against the character series:
// Y^0 -> chi_{b,2a} and Y^1 -> chi_{b,2a} + q^{a-b} chi_{b-1,2a},
// checked at L = 2*order with an L+1 stability re-check.
Report y_limits_check(int t2, std::int64_t order);

}  // namespace qvir

#pragma once

// q-analogues of the classical combinatorial quantities: Pochhammer
// symbols, Gaussian binomials (plain, modified, and base-changed) and the
// q-trinomial coefficients T(n; d; L) together with their identity suite.

#include <cstdint>

#include "qvir/qpoly.hpp"
#include "qvir/report.hpp"

namespace qvir {

// (q)_n = (1-q)(1-q^2)...(1-q^n); (q)_0 = 1.  Throws for n < 0.
QPoly q_pochhammer(int n);

// 1/(q)_infinity as a truncated series (partition generating function).
TruncatedSeries inv_pochhammer_truncated(QExp order);

// 1/(q)_n as a truncated series (partitions into parts <= n).
TruncatedSeries inv_pochhammer_finite_truncated(int n, QExp order);

// [n+m choose n]_q = (q)_{n+m} / ((q)_n (q)_m) for n, m >= 0, else 0.
QPoly q_binomial(int n, int m);

// As q_binomial, except the single extra value 1 at (n, m) = (0, -1).
QPoly q_binomial_modified(int n, int m);

// Same coefficients in the variable q^base.
QPoly q_binomial_base(int n, int m, int base);
QPoly q_binomial_modified_base(int n, int m, int base);

// q-trinomial coefficient T(n; d; L), L >= 0; zero when |d| > L.
// q_trinomial uses the single-sum closed form; q_trinomial_alt uses the
// independent double-parity closed form, so the two can cross-check.
QPoly q_trinomial(int n, int d, int L);
QPoly q_trinomial_alt(int n, int d, int L);

// Number of length-L walks with steps {-1,0,+1} and displacement d;
// the q -> 1 specialization of T(n; d; L), computed by direct DP.
Coeff trinomial_walk_count(int d, int L);

// Checks, over n in [0,nmax], |d| <= dmax, L <= lmax:
//  - equality of the two closed forms,
//  - the d -> -d reflection law,
//  - the four depth-reduction recurrences and the three pair recurrences,
//  - the q = 1 walk-count specialization.
Report verify_trinomial_identities(int nmax, int dmax, int lmax);

// Large-L stabilization: T(0;d;L) -> 1/(q)_inf, T(1;d;L) -> (1+q^d)/(q)_inf
// and the limiting recurrence in n, all checked to the given order using
// L = 2*order with an L+1 stability re-check.
Report verify_trinomial_limits(int nmax, int dmax, std::int64_t order);

}  // namespace qvir

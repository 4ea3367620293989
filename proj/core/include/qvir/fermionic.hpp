#pragma once

// Fermionic (manifestly positive) sums: the finitized quasi-particle
// expressions for the three path families and the four-case character
// formulas obtained from their large-L limits.

#include <set>
#include <stdexcept>
#include <vector>

#include "qvir/qpoly.hpp"

namespace qvir {

// Requested table row is excluded for these parameters (the extreme
// endpoint values each row omits to avoid duplicate expressions).
struct ExcludedCaseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parity vectors of length j, defined for 1 <= c <= j+1; entry i (1-based)
// is returned at index i-1.
std::vector<int> parity_q(int c, int j);  // pabs(c-1-i) mod 2
std::vector<int> parity_r(int c, int j);  // (pabs(i+c-j-1)+c+1) mod 2

// Quasi-particle sum for the band-path generating function
// X^{e,f}_{band;a,b}(L): sum over non-negative species vectors pinned by
// m_0 = L, with Cartan-matrix quadratic form exponents and plain
// q-binomials.  The (e,f) pair selects the table row; excluded endpoint
// values raise ExcludedCaseError.
QPoly melzer_finitized(int band, int a, int b, int e, int f, int L);

// Quasi-particle sum for the valley-restricted band-path generating
// function: base-q^2 modified binomials, parity-vector corrections
// T^L, T^R and the n.T^R exponent term.  Requires L+a+b even for a
// non-zero result (odd parity gives the zero polynomial).
QPoly rabf_finitized(int band, int a, int b, int e, int f, int L);

// Quasi-particle sum for the half-lattice path generating function; all
// half-integer arguments doubled (t2 = 2t, a2 = 2a, b2 = 2b, L2 = 2L).
// Identical in structure to rabf_finitized with halved exponents and
// plain-base modified binomials.
QPoly hl_finitized(int t2, int a2, int b2, int e, int f, int L2);

// Evaluation options used by the modified-binomial sharpness analysis:
// with plain_binomials the (0,-1) special value is replaced by 0; if
// fired is non-null it collects the indices i at which the special value
// occurred inside an otherwise non-vanishing term.
struct FermionicOptions {
  bool plain_binomials = false;
  std::set<int>* fired = nullptr;
};

QPoly rabf_finitized_opt(int band, int a, int b, int e, int f, int L, const FermionicOptions& opt);
QPoly hl_finitized_opt(int t2, int a2, int b2, int e, int f, int L2, const FermionicOptions& opt);

// Character chi^{band,band+1}_{r,s} by the four-case fermionic sum
// (case_row in 'a'..'d'); the species sum is accumulated shell by shell up
// to a proven cap beyond which no term can reach the truncation order.
TruncatedSeries melzer_character(int band, int r, int s, char case_row, QExp order);

// Character chi^{t,2t+1}_{r,2a} by the four-case fermionic sum with
// parity-vector corrections; t doubled, r and a integers.
TruncatedSeries hl_character(int t2, int r, int a, char case_row, QExp order);

// The two-character combination chi^{t,2t+1}_{b,2a} + q^{a-b}
// chi^{t,2t+1}_{b-1,2a}, computed as the stabilized large-L limit of the
// depth-1 trinomial sum Y^{1;t}_{a,b}(L).  Requires b >= 1.
TruncatedSeries hl_character_pair(int t2, int a, int b, QExp order);

}  // namespace qvir

#pragma once

#include "kmlab/wedge.hpp"

#include <vector>

namespace kmlab {

// A permutation of {0, ..., p-1} as the vector of its images; a PermTuple is a
// q-tuple of permutations.
using Permutation = std::vector<int>;
using PermTuple = std::vector<Permutation>;

// The reference top form omega ^ conj(omega): all pq unbarred generators in
// canonical order followed by the pq barred ones.
WedgeWord top_word(int p, int q);

// One pass of the Howe operator: 2^{-2q} prod_k sum_j A_{jk} (x) (zbar_j -
// (1/pi) d/dz_j), with `conjugated` swapping to barred generators and the
// conjugate scalar operator.
KMForm apply_howe(const KMForm& form, int p, int q, bool conjugated);

// phi^+_{q,q} as the composite Howe construction; q = 0 yields 1 (x) phi_0.
KMForm km_form(int p, int q);

// The same form through the 2^{-4q} multi-index expansion over (alpha, alpha');
// must agree with km_form exactly.
KMForm km_form_expansion(int p, int q);

// n-fold wedge of the form with itself, PolyGaussians spread over n disjoint
// variable blocks.
KMForm wedge_power(const KMForm& form, int n);

// The top-degree Schwartz function on p(p+q) variables: the sum over
// (sigma, sigma') of the product of per-block creation operators, each term
// weighted by sort_sign. The top-wedge coefficient of
// wedge_power(km_form(p,q), p) equals 2^{-4pq} times this (the operator
// normalization enters once per wedge factor).
PolyGaussian km_schwartz(int p, int q);

// Sign obtained by canonical-sorting the (sigma, sigma')-indexed word into
// omega ^ conj(omega). Equals (-1)^{pq(p-1)/2} times the product of the
// signatures of all 2q permutations; it is constant only across even tuples.
int sort_sign(int p, int q, const PermTuple& sigma, const PermTuple& sigma_prime);

enum class LaguerreMode { closed, recursive };

// Coefficients c_r of |w|^{2r}, r = 0..k, of the polynomial g_k.
std::vector<Rational> laguerre_g(int k, LaguerreMode mode);

// F_{a,b} * phi_0 on one variable, by iterated creation operators.
PolyGaussian F_ab(int a, int b);

// min over stored monomials of sum_j (plain exponent - bar exponent).
int mu_gap(const PolyGaussian& f);

// Recover g_k from F_{k,k} * phi_0 via w = sqrt(2 pi) z and the pi^k / 2^k
// normalization; throws DomainError if the input is not balanced or the result
// is not rational.
std::vector<Rational> laguerre_from_radial(const PolyGaussian& f, int k);

}  // namespace kmlab

#pragma once

#include "kmlab/polygauss.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kmlab {

// Hyperbolic-pair bookkeeping on an m-dimensional block: variables j and
// m+1-j (1-based) combine into e_j = (u_j + u_{m+1-j})/sqrt2 and
// f_j = (u_j - u_{m+1-j})/sqrt2 for j = 1..r0. After split_coordinates, slot
// j-1 holds the e_j-coordinate and slot m-j holds the f_j-coordinate.
struct SplitFrame {
    int m = 0;
    int r0 = 0;

    SplitFrame(int m_, int r0_);

    int residual_dim() const { return m - 2 * r0; }
};

// Exact unitary change of variables per hyperbolic pair in the given block.
PolyGaussian split_coordinates(const PolyGaussian& f, const SplitFrame& frame, int copy);

// The Ikeda map: per block, set the f-coordinates to zero, then integrate out
// the e-coordinates; returns a PolyGaussian on the residual coordinates only.
PolyGaussian ikeda_map(const PolyGaussian& f, const SplitFrame& frame, int copies);

// Fourier-transform the listed coordinates into their duals (same slots);
// dual_block names the resulting slots and must match u_block in size.
PolyGaussian partial_fourier(const PolyGaussian& f, const std::vector<int>& u_block,
                             const std::vector<int>& dual_block);

// For a mixed-model function with r0 = 1, true when the restriction to
// pair-coordinates = 0 is identically zero in every block.
bool rank_support_vanishes(const PolyGaussian& f_hat, const SplitFrame& frame);

// The exact integrand f_k(z / sqrt2) * exp(-pi |z|^2) of the radial vanishing
// lemma, on one variable.
PolyGaussian fk_lemma_integrand(int k);

struct FkReport {
    int k = 0;
    Coefficient lemma_value;  // integral of f_k(z/sqrt2) exp(-pi |z|^2)
    Coefficient i_value;      // integral of f_k(z) exp(-2 pi |z|^2)
    bool binomial_zero = false;
    bool zero = false;
};

// Exact verification that both normalizations of the radial integral vanish
// for k >= 1, together with the alternating-binomial identity from the proof.
// k = 0 is allowed as a negative control (values 1 and 1/2).
FkReport verify_fk_vanishing(int k);

struct FabReport {
    int a = 0, b = 0;
    Coefficient i_value;  // integral of F_{a,b}(z) exp(-2 pi |z|^2)
    int mu = 0;
    bool zero = false;
};

// Exact verification that the unbalanced creation-operator integrals vanish,
// with the exponent-gap witness; rejects a == b.
FabReport verify_Fab_vanishing(int a, int b);

struct IkedaReport {
    int p = 0, q = 0;
    bool zero = false;
    std::int64_t term_count = 0;
    std::int64_t case1_count = 0;
    std::int64_t case2_count = 0;
    double elapsed_seconds = 0;
};

// Applies the Ikeda map to the full top-degree Schwartz function (frame
// m = p+q, r0 = q on each of the p blocks), asserts the exact zero, and
// classifies every permutation-indexed term by its vanishing mechanism:
// case 1 = a pair-line with unequal operator multiplicities (angular
// vanishing), case 2 = equal nonzero multiplicities (radial vanishing).
IkedaReport verify_ikeda_kills(int p, int q);

}  // namespace kmlab

#pragma once

#include "kmlab/errors.hpp"

#include <cstddef>
#include <vector>

namespace kmlab {

using Perm = std::vector<int>;

// A finite permutation group Gamma on D = {0, ..., n-1} together with two
// subgroups and two stable subsets. `group` lists every element; the
// subgroups are index lists into `group`; the subsets are membership masks.
struct FiniteActionModel {
    int n = 0;
    std::vector<Perm> group;
    std::vector<int> gamma0;
    std::vector<int> gamma_xi;
    std::vector<char> d0;
    std::vector<char> d_xi;
};

// Checks the structural hypotheses: closure and inverses for the group and
// both subgroups (DomainError), fixed-point-free action of every non-identity
// element (NonFreeAction), and stability of d0 under gamma0 and of d_xi under
// gamma_xi (DomainError).
void validate_model(const FiniteActionModel& model);

struct FiberReport {
    bool ok = false;           // bijection verified
    std::size_t k_size = 0;    // # of orbit pairs in the fiber product
    std::size_t coset_count = 0;
    std::size_t union_size = 0;  // total orbit count over all double cosets
};

// Exhaustively verifies that (z, gamma) -> (orbit0(z), orbit_xi(gamma^{-1} z))
// is a bijection from the union over double cosets [gamma] of the
// (gamma0 cap gamma gamma_xi gamma^{-1})-orbits on d0 cap gamma d_xi onto the
// fiber product {(orbit0(z), orbit_xi(w)) : z in d0, w in d_xi, same
// Gamma-orbit}.
FiberReport fiber_product_decomposition(const FiniteActionModel& model);

}  // namespace kmlab

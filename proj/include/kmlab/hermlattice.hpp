#pragma once

#include "kmlab/errors.hpp"
#include "kmlab/numfield.hpp"
#include "kmlab/rational.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

namespace kmlab {

// The imaginary quadratic ring Z[w] in E0 = Q(sqrt d), d < 0 squarefree;
// w = sqrt d, or (1 + sqrt d)/2 when d = 1 mod 4.
struct ImagQuadratic {
    int d = -1;

    bool half() const { return ((d % 4) + 4) % 4 == 1; }
    Rational omega_trace() const { return half() ? Rational(1) : Rational(0); }
    Rational omega_norm() const { return half() ? Rational(1 - d, 4) : Rational(-d); }

    static ImagQuadratic gaussian() { return {-1}; }
    static ImagQuadratic eisenstein() { return {-3}; }
};

// Element a + b w of E0 over the basis {1, w}.
struct E0Elem {
    Rational a = 0, b = 0;

    bool operator==(const E0Elem&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
};

E0Elem e0_add(const E0Elem& x, const E0Elem& y);
E0Elem e0_sub(const E0Elem& x, const E0Elem& y);
E0Elem e0_neg(const E0Elem& x);
E0Elem e0_mul(const ImagQuadratic& ring, const E0Elem& x, const E0Elem& y);
E0Elem e0_conj(const ImagQuadratic& ring, const E0Elem& x);
E0Elem e0_scale(const Rational& c, const E0Elem& x);
Rational e0_trace(const ImagQuadratic& ring, const E0Elem& x);
Rational e0_norm(const ImagQuadratic& ring, const E0Elem& x);
std::complex<double> e0_embed(const ImagQuadratic& ring, const E0Elem& x);

using E0Vec = std::vector<E0Elem>;
using E0Mat = std::vector<std::vector<E0Elem>>;

// A hermitian O_E0-lattice: the standard lattice Z[w]^rank with a hermitian
// Gram matrix over E0. The form is linear in the first slot and
// conjugate-linear in the second. Construction verifies hermitian symmetry
// and positive-definiteness (leading principal minors); an indefinite Gram
// throws IndefiniteLattice.
class HermitianLattice {
  public:
    HermitianLattice(ImagQuadratic ring, E0Mat gram);

    const ImagQuadratic& ring() const { return ring_; }
    int rank() const { return rank_; }
    const E0Mat& gram() const { return gram_; }

    E0Elem inner(const E0Vec& x, const E0Vec& y) const;
    Rational norm(const E0Vec& x) const;

  private:
    ImagQuadratic ring_;
    int rank_ = 0;
    E0Mat gram_;
};

// All lattice vectors x with norm(x) <= bound, zero included; throws
// CapExceeded past cap.
std::vector<E0Vec> short_vectors(const HermitianLattice& L, const Rational& bound,
                                 std::size_t cap = 200000);

// Vector counts by exact norm, up to the bound; always contains 0 -> 1.
std::map<Rational, long long> theta_coefficients(const HermitianLattice& L,
                                                 const Rational& bound);

// All n-tuples (x_1, ..., x_n) of lattice vectors whose exact Gram matrix is
// beta. Diagonal entries must be rational, nonnegative tuples only can match;
// a diagonal entry above the bound throws CapExceeded.
std::vector<std::vector<E0Vec>> enumerate_gram(const HermitianLattice& L0, const E0Mat& beta,
                                               const Rational& bound,
                                               std::size_t cap = 200000);

// Exact check of the trace identity
//   tr_{E/E0}(Q(xi, eta) b) = Tr(Q0(x, y) B),  B = mult_matrix(b),
// where xi = sum_i s_i x_i and eta = sum_i s_i y_i expand over the trace-dual
// basis of F and Q0(x, y) is the g x g matrix (Q0(x_i, y_j)). x and y hold g
// lattice vectors each.
bool trace_identity_check(const NumberFieldBasis& F, const HermitianLattice& L0,
                          const QVec& b, const std::vector<E0Vec>& x,
                          const std::vector<E0Vec>& y);

struct BetaGroupingReport {
    long long direct_count = 0;   // # { x in L0^g : Q(xi, xi) = b }
    long long grouped_count = 0;  // sum over beta with ^t s beta s = b of # I_beta(L0)
    long long beta_classes = 0;   // number of beta contributing a nonzero count
    bool injective = false;       // x -> xi injective on the enumerated set
    bool match = false;
    Rational cap = 0;  // diagonal-norm bound actually applied
};

// Verifies that grouping tuples by their Gram matrix beta partitions the
// solutions of Q(xi, xi) = b: the direct count over the composite lattice
// equals the beta-grouped count. Degree of F must be 1 or 2.
BetaGroupingReport beta_grouping_check(const NumberFieldBasis& F, const HermitianLattice& L0,
                                       const QVec& b, const Rational& bound,
                                       std::size_t cap = 200000);

struct BetaSweepEntry {
    QVec b;
    BetaGroupingReport report;
};

// Runs the grouping check for every b attained by some tuple with
// Tr(Q(xi, xi)) <= trace_bound, sharing one enumeration of the composite
// lattice across all b; bound caps the diagonal norms of the Gram candidates
// exactly as in beta_grouping_check. Entries come back sorted by b.
std::vector<BetaSweepEntry> beta_grouping_sweep(const NumberFieldBasis& F,
                                                const HermitianLattice& L0,
                                                const Rational& trace_bound,
                                                const Rational& bound,
                                                std::size_t cap = 200000);

}  // namespace kmlab

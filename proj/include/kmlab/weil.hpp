#pragma once

#include "kmlab/hermlattice.hpp"
#include "kmlab/numfield.hpp"
#include "kmlab/polygauss.hpp"

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace kmlab {

// One archimedean group element of U(1,1) per real place: the unipotent n(b),
// the Levi m(a), the Weyl element w0, or the composite g_tau with
// tau = u + iv in the upper half-plane. Parameters are per-factor; a single
// entry broadcasts to every factor.
struct GroupElementData {
    enum class Kind { unipotent, levi, weyl, tau };

    Kind kind = Kind::weyl;
    QVec b;                    // unipotent parameter, rational per factor
    std::vector<FieldElem> a;  // Levi parameter, nonzero per factor
    std::vector<std::pair<Rational, Rational>> tau;  // (u, v) with v > 0

    static GroupElementData unipotent(QVec b);
    static GroupElementData levi(std::vector<FieldElem> a);
    static GroupElementData weyl();
    static GroupElementData g_tau(std::vector<std::pair<Rational, Rational>> tau);
};

// Sign of variable `var` under the block form diag(+1, ..., +1, -1) on
// consecutive blocks of m_dim variables; a 1-dimensional block is positive.
int block_sign(int var, int m_dim);

// The Weil-representation action on a PolyGaussian whose variables split into
// blocks of m_dim per archimedean factor:
//   n(b):  multiplies by psi(Q(x,x) b) factor-wise, shifting the Gaussian
//          scale by -2 i b sign(var);
//   m(a):  |a|_E^{m/2} f(x a) with |a|_E = a conj(a) (the character is
//          trivial at infinity); odd m needs an exact square root of the norm;
//   w0:    Fourier transform, with the parity twist on negative variables;
//   g_tau: n(u) m(sqrt v), needing exact square roots of v.
// All paths are exact; UnsupportedScale when an exact square root is missing.
PolyGaussian act(const GroupElementData& g, const PolyGaussian& f, int m_dim);

// Numeric omega(g_tau) phi (xi) = prod_j v_j^{m/2} f(xi sqrt v) e_*(b u) with
// b_j = Q_j(xi, xi) per factor; arbitrary upper-half-plane tau.
std::complex<double> g_tau_evaluate(const std::vector<std::complex<double>>& tau,
                                    const PolyGaussian& f,
                                    const std::vector<std::complex<double>>& xi, int m_dim);

// |det a(g)|_E^{s - s0} (act(g) f)(0) with s0 = (m - n)/2; refuses elements
// outside the Siegel parabolic and g_tau.
std::complex<double> siegel_weil_section(const PolyGaussian& f, std::complex<double> s,
                                         const GroupElementData& g, int m_dim, int n_dim);

struct VolumeEntry {
    QVec b;        // field element in integral-basis coordinates
    int index = 0; // lattice-class index
    Rational vol;
    int mult = 1;  // double-coset multiplicity
};
using VolumeTable = std::vector<VolumeEntry>;

// i^{-n} prod_j v_j^{m/2} (sum of vol * mult over entries at b) e_*(b tau),
// n = number of real embeddings of F = tau length.
std::complex<double> assemble_fourier_coefficient(const NumberFieldBasis& F, const QVec& b,
                                                  const VolumeTable& table,
                                                  const std::vector<std::complex<double>>& tau,
                                                  int m_dim);

// c0 + sum over the distinct b in the table of
// i^n prod_j v_j^{-m/2} assemble_fourier_coefficient(b, ...); the prefactors
// cancel, leaving c0 + sum_b (sum vol mult) e_*(b tau).
std::complex<double> generating_series(const NumberFieldBasis& F, const VolumeTable& table,
                                       const std::vector<std::complex<double>>& tau, int m_dim,
                                       std::complex<double> c0);

struct IntertwiningReport {
    int samples = 0;
    int matched = 0;
    bool ok = false;
};

// Samples random lattice tuples x and checks the unipotent phase identity
// tr_{E/E0}(Q(xi,xi) b) = Tr(Q0(x,x) B) exactly (the unipotent case of the
// compatibility of the two Weil representations).
IntertwiningReport intertwining_check(const QVec& b, const NumberFieldBasis& F,
                                      const HermitianLattice& L0, int samples,
                                      std::uint64_t seed = 0);

}  // namespace kmlab

#pragma once

#include "kmlab/coefficient.hpp"
#include "kmlab/errors.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kmlab {

// Per-variable exponent pair for zbar^a z^b.
struct VarExp {
    std::uint8_t bar = 0;
    std::uint8_t plain = 0;
    friend auto operator<=>(const VarExp&, const VarExp&) = default;
};

using Monomial = std::vector<VarExp>;

// A finite sum of monomials in (z_j, zbar_j) times per-variable Gaussian
// factors exp(-pi c_j |z_j|^2), with Re(c_j) > 0. All arithmetic is exact;
// zero coefficients are never stored.
class PolyGaussian {
  public:
    PolyGaussian() = default;

    // The standard Gaussian phi_0 on `num_vars` complex variables (all scales 1).
    static PolyGaussian gaussian(int num_vars);
    static PolyGaussian gaussian(std::vector<FieldElem> scales);
    static PolyGaussian zero(std::vector<FieldElem> scales);

    int num_vars() const { return static_cast<int>(scales_.size()); }
    const std::vector<FieldElem>& scales() const { return scales_; }
    const std::map<Monomial, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Coefficient& c);

    friend PolyGaussian operator+(const PolyGaussian& f, const PolyGaussian& g);
    friend PolyGaussian operator-(const PolyGaussian& f, const PolyGaussian& g);
    friend PolyGaussian operator-(const PolyGaussian& f);
    friend PolyGaussian operator*(const Coefficient& c, const PolyGaussian& f);

    friend bool operator==(const PolyGaussian& f, const PolyGaussian& g) {
        return f.scales_ == g.scales_ && f.terms_ == g.terms_;
    }

    // Multiply by a monomial-with-coefficient: exponents shift, scales stay.
    PolyGaussian mul_poly(const Monomial& m, const Coefficient& c) const;
    PolyGaussian mul_var(int j, int bar_exp, int plain_exp,
                         const Coefficient& c = Coefficient(1)) const;

    // d/dz_j (conjugated = false) or d/dzbar_j (conjugated = true), with the
    // Gaussian differentiated via the product rule.
    PolyGaussian derivative(int j, bool conjugated) const;

    // (z_j - (1/pi) d/dzbar_j) f, or the barred version. Scale 1 only.
    PolyGaussian apply_D(int j, bool conjugated) const;

    // Integral over C of a one-variable PolyGaussian against Lebesgue measure;
    // only balanced monomials survive: zbar^a z^a integrates to a!/(c^{a+1} pi^a).
    Coefficient moment_integral() const;

    // Substitution z_j -> lambda z_j.
    PolyGaussian rescale(int j, const FieldElem& lambda) const;

    // Substitute (z_j, z_k) = U (w_j, w_k) for exactly unitary U (row major).
    PolyGaussian linear_substitution(int j, int k, const std::array<FieldElem, 4>& u) const;

    // Self-dual Fourier transform in variable j (scale 1): phi_0 is fixed and
    // applying it twice gives z_j -> -z_j.
    PolyGaussian fourier_transform(int j) const;

    // Parity x -> -x in variable j.
    PolyGaussian parity(int j) const;

    // Tensor product on disjoint variable blocks (this's vars first).
    PolyGaussian tensor(const PolyGaussian& g) const;

    // Set variable j to zero and remove its slot.
    PolyGaussian restrict_var_zero(int j) const;

    // Integrate variable j out over C (moment integral per term); removes the slot.
    PolyGaussian integrate_var(int j) const;

    // Numeric evaluation at a point.
    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;

    std::string str() const;

  private:
    void check_var(int j) const;

    std::vector<FieldElem> scales_;
    std::map<Monomial, Coefficient> terms_;
};

}  // namespace kmlab

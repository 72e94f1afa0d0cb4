#pragma once

#include "kmlab/errors.hpp"
#include "kmlab/rational.hpp"

#include <vector>

namespace kmlab {

using QVec = std::vector<Rational>;
using QMat = std::vector<std::vector<Rational>>;

// Solve A X = B exactly by Gaussian elimination; throws SingularTraceForm.
QMat solve_linear(QMat a, QMat b);

QMat identity_matrix(int n);

// A totally real field F given by an integral basis {r_0 = 1, r_1, ...} with
// its multiplication table, trace form, trace-dual basis {s_i} (a basis of the
// inverse different) and numeric real embeddings. Elements are coordinate
// vectors over the integral basis.
class NumberFieldBasis {
  public:
    static NumberFieldBasis rationals();
    // Q(sqrt d) for squarefree d > 1, basis {1, sqrt d} or {1, (1 + sqrt d)/2}
    // when d = 1 mod 4.
    static NumberFieldBasis quadratic(int d);
    // Basis {1, theta} for a monic polynomial with rational coefficients
    // [c0, ..., 1] of degree 1 or 2; the roots must be real.
    static NumberFieldBasis from_min_poly(const QVec& coeffs);

    int degree() const { return g_; }
    QVec zero() const { return QVec(g_, Rational(0)); }
    QVec one() const;
    QVec from_rational(const Rational& q) const;

    QVec add(const QVec& x, const QVec& y) const;
    QVec scale(const Rational& c, const QVec& x) const;
    QVec mul(const QVec& x, const QVec& y) const;
    Rational trace(const QVec& x) const;
    Rational trace_of_basis(int i) const { return basis_traces_[i]; }

    const QMat& trace_form() const { return trace_form_; }

    // Column j = coordinates of the dual basis element s_j over {r_i};
    // satisfies Tr(r_i s_j) = delta_ij exactly.
    const QMat& trace_dual() const { return dual_; }
    QVec dual_basis(int j) const;

    // Matrix of x -> b x with the dual basis in the source and the integral
    // basis in the target: column j = coordinates of b s_j.
    QMat mult_matrix(const QVec& b) const;

    // Numeric value of x under the l-th real embedding.
    double embed(int l, const QVec& x) const;

    bool totally_positive(const QVec& x) const;

  private:
    NumberFieldBasis(int g, std::vector<std::vector<QVec>> table,
                     std::vector<std::vector<double>> emb);

    int g_ = 1;
    std::vector<std::vector<QVec>> table_;  // table_[i][j] = coords of r_i r_j
    std::vector<std::vector<double>> emb_;  // emb_[l][i] = l-th embedding of r_i
    QVec basis_traces_;
    QMat trace_form_;
    QMat dual_;
    // Split form of r_1 = split_a_ + split_c_ sqrt(split_d_) for exact
    // positivity checks in the quadratic case.
    Rational split_a_ = 0, split_c_ = 0, split_d_ = 0;
};

}  // namespace kmlab

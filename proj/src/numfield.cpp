#include "kmlab/numfield.hpp"

#include <cmath>
#include <utility>

namespace kmlab {

QMat identity_matrix(int n) {
    QMat id(n, QVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

QMat solve_linear(QMat a, QMat b) {
    const int n = static_cast<int>(a.size());
    const int m = n ? static_cast<int>(b[0].size()) : 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularTraceForm("singular linear system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        const Rational inv = Rational(1) / a[col][col];
        for (int j = 0; j < n; ++j) a[col][j] *= inv;
        for (int j = 0; j < m; ++j) b[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (int j = 0; j < n; ++j) a[row][j] -= f * a[col][j];
            for (int j = 0; j < m; ++j) b[row][j] -= f * b[col][j];
        }
    }
    return b;
}

NumberFieldBasis::NumberFieldBasis(int g, std::vector<std::vector<QVec>> table,
                                   std::vector<std::vector<double>> emb)
    : g_(g), table_(std::move(table)), emb_(std::move(emb)) {
    // Tr(x) = trace of multiplication by x; precompute it on the basis.
    basis_traces_.assign(g_, Rational(0));
    for (int i = 0; i < g_; ++i)
        for (int j = 0; j < g_; ++j) basis_traces_[i] += table_[i][j][j];
    trace_form_.assign(g_, QVec(g_, Rational(0)));
    for (int i = 0; i < g_; ++i)
        for (int j = 0; j < g_; ++j) trace_form_[i][j] = trace(table_[i][j]);
    dual_ = solve_linear(trace_form_, identity_matrix(g_));
}

NumberFieldBasis NumberFieldBasis::rationals() {
    return NumberFieldBasis(1, {{QVec{Rational(1)}}}, {{1.0}});
}

NumberFieldBasis NumberFieldBasis::quadratic(int d) {
    if (d <= 1) throw DomainError("quadratic: need squarefree d > 1");
    const double rd = std::sqrt(static_cast<double>(d));
    if (d % 4 == 1) {
        // w = (1 + sqrt d) / 2, w^2 = w + (d - 1)/4.
        const QVec one{Rational(1), Rational(0)};
        const QVec w{Rational(0), Rational(1)};
        const QVec w2{Rational((d - 1) / 4), Rational(1)};
        NumberFieldBasis f(2, {{one, w}, {w, w2}},
                           {{1.0, (1.0 + rd) / 2.0}, {1.0, (1.0 - rd) / 2.0}});
        f.split_a_ = Rational(1, 2);
        f.split_c_ = Rational(1, 2);
        f.split_d_ = d;
        return f;
    }
    const QVec one{Rational(1), Rational(0)};
    const QVec w{Rational(0), Rational(1)};
    const QVec w2{Rational(d), Rational(0)};
    NumberFieldBasis f(2, {{one, w}, {w, w2}}, {{1.0, rd}, {1.0, -rd}});
    f.split_c_ = 1;
    f.split_d_ = d;
    return f;
}

NumberFieldBasis NumberFieldBasis::from_min_poly(const QVec& coeffs) {
    if (coeffs.empty() || coeffs.back() != 1)
        throw DomainError("from_min_poly: monic polynomial required");
    if (coeffs.size() == 2) return rationals();
    if (coeffs.size() != 3) throw DomainError("from_min_poly: degree 1 or 2 only");
    const Rational c0 = coeffs[0], c1 = coeffs[1];
    const Rational disc = c1 * c1 - 4 * c0;
    if (!(disc > 0)) throw DomainError("from_min_poly: roots must be real and distinct");
    // theta^2 = -c1 theta - c0 on the basis {1, theta}.
    const QVec one{Rational(1), Rational(0)};
    const QVec w{Rational(0), Rational(1)};
    const QVec w2{-c0, -c1};
    const double rd = std::sqrt(to_double(disc));
    const double mid = to_double(-c1) / 2;
    NumberFieldBasis f(2, {{one, w}, {w, w2}},
                       {{1.0, mid + rd / 2}, {1.0, mid - rd / 2}});
    f.split_a_ = -c1 / 2;
    f.split_c_ = Rational(1, 2);
    f.split_d_ = disc;
    return f;
}

QVec NumberFieldBasis::one() const {
    QVec e = zero();
    e[0] = 1;
    return e;
}

QVec NumberFieldBasis::from_rational(const Rational& q) const {
    QVec e = zero();
    e[0] = q;
    return e;
}

QVec NumberFieldBasis::add(const QVec& x, const QVec& y) const {
    QVec out = x;
    for (int i = 0; i < g_; ++i) out[i] += y[i];
    return out;
}

QVec NumberFieldBasis::scale(const Rational& c, const QVec& x) const {
    QVec out = x;
    for (auto& v : out) v *= c;
    return out;
}

QVec NumberFieldBasis::mul(const QVec& x, const QVec& y) const {
    QVec out = zero();
    for (int i = 0; i < g_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < g_; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            for (int k = 0; k < g_; ++k) out[k] += c * table_[i][j][k];
        }
    }
    return out;
}

Rational NumberFieldBasis::trace(const QVec& x) const {
    Rational t = 0;
    for (int i = 0; i < g_; ++i) t += x[i] * basis_traces_[i];
    return t;
}

QVec NumberFieldBasis::dual_basis(int j) const {
    QVec s(g_);
    for (int i = 0; i < g_; ++i) s[i] = dual_[i][j];
    return s;
}

QMat NumberFieldBasis::mult_matrix(const QVec& b) const {
    QMat out(g_, QVec(g_, Rational(0)));
    for (int j = 0; j < g_; ++j) {
        const QVec col = mul(b, dual_basis(j));
        for (int i = 0; i < g_; ++i) out[i][j] = col[i];
    }
    return out;
}

double NumberFieldBasis::embed(int l, const QVec& x) const {
    double v = 0;
    for (int i = 0; i < g_; ++i) v += emb_[l][i] * to_double(x[i]);
    return v;
}

bool NumberFieldBasis::totally_positive(const QVec& x) const {
    if (g_ == 1) return x[0] > 0;
    // Quadratic case, exact: x = A + C sqrt(d); both embeddings positive iff
    // A > 0 and A^2 > C^2 d.
    const Rational a = x[0] + x[1] * split_a_;
    const Rational c = x[1] * split_c_;
    return a > 0 && a * a > c * c * split_d_;
}

}  // namespace kmlab

#include "kmlab/hermlattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace kmlab {

E0Elem e0_add(const E0Elem& x, const E0Elem& y) { return {x.a + y.a, x.b + y.b}; }
E0Elem e0_sub(const E0Elem& x, const E0Elem& y) { return {x.a - y.a, x.b - y.b}; }
E0Elem e0_neg(const E0Elem& x) { return {-x.a, -x.b}; }

E0Elem e0_mul(const ImagQuadratic& ring, const E0Elem& x, const E0Elem& y) {
    // w^2 = d, or w^2 = w + (d-1)/4 in the half-integer case.
    E0Elem out{x.a * y.a, x.a * y.b + x.b * y.a};
    const Rational bb = x.b * y.b;
    if (ring.half()) {
        out.a += bb * Rational(ring.d - 1, 4);
        out.b += bb;
    } else {
        out.a += bb * ring.d;
    }
    return out;
}

E0Elem e0_conj(const ImagQuadratic& ring, const E0Elem& x) {
    // conj(w) = tr(w) - w.
    return {x.a + x.b * ring.omega_trace(), -x.b};
}

E0Elem e0_scale(const Rational& c, const E0Elem& x) { return {c * x.a, c * x.b}; }

Rational e0_trace(const ImagQuadratic& ring, const E0Elem& x) {
    return 2 * x.a + x.b * ring.omega_trace();
}

Rational e0_norm(const ImagQuadratic& ring, const E0Elem& x) {
    return x.a * x.a + x.a * x.b * ring.omega_trace() + x.b * x.b * ring.omega_norm();
}

std::complex<double> e0_embed(const ImagQuadratic& ring, const E0Elem& x) {
    const double im = std::sqrt(static_cast<double>(-ring.d));
    const std::complex<double> w =
        ring.half() ? std::complex<double>(0.5, im / 2) : std::complex<double>(0, im);
    return to_double(x.a) + to_double(x.b) * w;
}

namespace {

E0Elem e0_det(const ImagQuadratic& ring, const E0Mat& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return {Rational(1), Rational(0)};
    if (n == 1) return m[0][0];
    E0Elem det{};
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        E0Mat sub;
        for (int i = 1; i < n; ++i) {
            E0Vec row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        E0Elem term = e0_mul(ring, m[0][j], e0_det(ring, sub));
        det = (j % 2 == 0) ? e0_add(det, term) : e0_sub(det, term);
    }
    return det;
}

Rational e0_real(const ImagQuadratic& ring, const E0Elem& x) {
    return x.a + x.b * ring.omega_trace() / 2;
}

// The real Gram of the norm form on Z^{2 rank}, coordinate order
// (a_0, b_0, a_1, b_1, ...) for entries a + b w.
QMat real_gram(const HermitianLattice& L) {
    const int r = L.rank();
    const int n = 2 * r;
    auto basis = [&](int k) {
        E0Vec v(r);
        if (k % 2 == 0)
            v[k / 2] = {Rational(1), Rational(0)};
        else
            v[k / 2] = {Rational(0), Rational(1)};
        return v;
    };
    QMat m(n, QVec(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m[k][l] = e0_real(L.ring(), L.inner(basis(k), basis(l)));
    return m;
}

struct Cholesky {
    QVec d;
    QMat u;  // u[k][j] for j > k
};

Cholesky cholesky(QMat m) {
    const int n = static_cast<int>(m.size());
    Cholesky c;
    c.d.assign(n, Rational(0));
    c.u.assign(n, QVec(n, Rational(0)));
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) throw IndefiniteLattice("norm form is not positive definite");
        c.d[k] = m[k][k];
        for (int j = k + 1; j < n; ++j) c.u[k][j] = m[k][j] / c.d[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] -= c.d[k] * c.u[k][i] * c.u[k][j];
    }
    return c;
}

// All integer vectors with quadratic-form value <= t. Floating point only
// widens the scan window; membership is decided exactly.
void enumerate_rec(const Cholesky& c, int k, std::vector<long long>& v, const Rational& rem,
                   std::vector<std::vector<long long>>& out, std::size_t cap) {
    if (k < 0) {
        if (out.size() >= cap) throw CapExceeded("enumeration cap exceeded");
        out.push_back(v);
        return;
    }
    Rational center = 0;
    const int n = static_cast<int>(v.size());
    for (int j = k + 1; j < n; ++j) center += c.u[k][j] * v[j];
    const double s = std::sqrt(std::max(0.0, to_double(rem / c.d[k]))) + 1e-9;
    const double cd = to_double(center);
    const long long lo = static_cast<long long>(std::floor(-cd - s)) - 1;
    const long long hi = static_cast<long long>(std::ceil(-cd + s)) + 1;
    for (long long vk = lo; vk <= hi; ++vk) {
        const Rational off = vk + center;
        const Rational rem2 = rem - c.d[k] * off * off;
        if (rem2 < 0) continue;
        v[k] = vk;
        enumerate_rec(c, k - 1, v, rem2, out, cap);
    }
    v[k] = 0;
}

E0Vec to_e0vec(const std::vector<long long>& v) {
    E0Vec x(v.size() / 2);
    for (std::size_t a = 0; a < x.size(); ++a)
        x[a] = {Rational(v[2 * a]), Rational(v[2 * a + 1])};
    return x;
}

Integer denom_lcm(const E0Mat& m) {
    Integer l = 1;
    for (const auto& row : m)
        for (const auto& e : row) {
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e.a));
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e.b));
        }
    return l;
}

}  // namespace

HermitianLattice::HermitianLattice(ImagQuadratic ring, E0Mat gram)
    : ring_(ring), rank_(static_cast<int>(gram.size())), gram_(std::move(gram)) {
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(gram_[i].size()) != rank_)
            throw DomainError("HermitianLattice: Gram matrix must be square");
        for (int j = 0; j < rank_; ++j)
            if (!(gram_[i][j] == e0_conj(ring_, gram_[j][i])))
                throw DomainError("HermitianLattice: Gram matrix is not hermitian");
    }
    for (int k = 1; k <= rank_; ++k) {
        E0Mat lead(k, E0Vec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = gram_[i][j];
        const E0Elem minor = e0_det(ring_, lead);
        if (!minor.is_rational() || !(minor.a > 0))
            throw IndefiniteLattice("Gram matrix is not positive definite");
    }
}

E0Elem HermitianLattice::inner(const E0Vec& x, const E0Vec& y) const {
    if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
        throw DomainError("inner: vector length mismatch");
    E0Elem out{};
    for (int a = 0; a < rank_; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < rank_; ++b) {
            if (y[b].is_zero()) continue;
            out = e0_add(out, e0_mul(ring_, e0_mul(ring_, x[a], e0_conj(ring_, y[b])),
                                     gram_[a][b]));
        }
    }
    return out;
}

Rational HermitianLattice::norm(const E0Vec& x) const {
    const E0Elem v = inner(x, x);
    if (!v.is_rational()) throw DomainError("norm: non-real value");
    return v.a;
}

std::vector<E0Vec> short_vectors(const HermitianLattice& L, const Rational& bound,
                                 std::size_t cap) {
    std::vector<E0Vec> out;
    if (bound < 0) return out;
    const Cholesky c = cholesky(real_gram(L));
    std::vector<std::vector<long long>> raw;
    std::vector<long long> v(2 * L.rank(), 0);
    enumerate_rec(c, 2 * L.rank() - 1, v, bound, raw, cap);
    out.reserve(raw.size());
    for (const auto& w : raw) out.push_back(to_e0vec(w));
    return out;
}

std::map<Rational, long long> theta_coefficients(const HermitianLattice& L,
                                                 const Rational& bound) {
    std::map<Rational, long long> counts;
    for (const auto& x : short_vectors(L, bound)) ++counts[L.norm(x)];
    return counts;
}

std::vector<std::vector<E0Vec>> enumerate_gram(const HermitianLattice& L0, const E0Mat& beta,
                                               const Rational& bound, std::size_t cap) {
    const int n = static_cast<int>(beta.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(beta[i].size()) != n)
            throw DomainError("enumerate_gram: target must be square");
        for (int j = 0; j < n; ++j)
            if (!(beta[i][j] == e0_conj(L0.ring(), beta[j][i])))
                throw DomainError("enumerate_gram: target is not hermitian");
        if (!beta[i][i].is_rational())
            throw DomainError("enumerate_gram: diagonal must be rational");
        if (beta[i][i].a > bound) throw CapExceeded("diagonal norm above the bound");
    }
    std::vector<std::vector<E0Vec>> out;
    for (int i = 0; i < n; ++i)
        if (beta[i][i].a < 0) return out;

    std::vector<std::vector<E0Vec>> layers(n);
    double size_estimate = 1;
    for (int i = 0; i < n; ++i) {
        for (auto& x : short_vectors(L0, beta[i][i].a, cap))
            if (L0.norm(x) == beta[i][i].a) layers[i].push_back(std::move(x));
        size_estimate *= static_cast<double>(layers[i].size());
        if (layers[i].empty()) return out;
    }
    if (size_estimate > static_cast<double>(cap))
        throw CapExceeded("Gram tuple space above the cap");

    std::vector<E0Vec> tuple(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(tuple);
            return;
        }
        for (const auto& x : layers[i]) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = L0.inner(tuple[j], x) == beta[j][i];
            if (!ok) continue;
            tuple[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool trace_identity_check(const NumberFieldBasis& F, const HermitianLattice& L0,
                          const QVec& b, const std::vector<E0Vec>& x,
                          const std::vector<E0Vec>& y) {
    const int g = F.degree();
    if (static_cast<int>(x.size()) != g || static_cast<int>(y.size()) != g)
        throw DomainError("trace_identity_check: need g vectors per side");

    std::vector<std::vector<E0Elem>> q(g, std::vector<E0Elem>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) q[i][j] = L0.inner(x[i], y[j]);

    // Q(xi, eta) = sum_{ij} s_i s_j Q0(x_i, y_j) as an element of E = E0 F,
    // coordinates over the integral basis of F.
    std::vector<E0Elem> z(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const QVec sisj = F.mul(F.dual_basis(i), F.dual_basis(j));
            for (int k = 0; k < g; ++k) z[k] = e0_add(z[k], e0_scale(sisj[k], q[i][j]));
        }

    // Multiply by b in F, then take tr_{E/E0} coefficient-wise.
    std::vector<E0Elem> w(g);
    for (int l = 0; l < g; ++l) {
        QVec unit(g, Rational(0));
        unit[l] = 1;
        const QVec rb = F.mul(unit, b);
        for (int k = 0; k < g; ++k) w[k] = e0_add(w[k], e0_scale(rb[k], z[l]));
    }
    E0Elem lhs{};
    for (int k = 0; k < g; ++k) lhs = e0_add(lhs, e0_scale(F.trace_of_basis(k), w[k]));

    const QMat B = F.mult_matrix(b);
    E0Elem rhs{};
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) rhs = e0_add(rhs, e0_scale(B[i][j], q[i][j]));

    return lhs == rhs;
}

namespace {

// Q(xi, xi) in F-coordinates for x = (x_1, ..., x_g); false when the value is
// not conjugation-fixed (cannot happen for a hermitian form, kept as a guard).
bool xi_norm(const NumberFieldBasis& F, const HermitianLattice& L0,
             const std::vector<E0Vec>& x, QVec& out) {
    const int g = F.degree();
    std::vector<E0Elem> z(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const QVec sisj = F.mul(F.dual_basis(i), F.dual_basis(j));
            const E0Elem qij = L0.inner(x[i], x[j]);
            for (int k = 0; k < g; ++k) z[k] = e0_add(z[k], e0_scale(sisj[k], qij));
        }
    out.assign(g, Rational(0));
    for (int k = 0; k < g; ++k) {
        if (!z[k].is_rational()) return false;
        out[k] = z[k].a;
    }
    return true;
}

}  // namespace

BetaGroupingReport beta_grouping_check(const NumberFieldBasis& F, const HermitianLattice& L0,
                                       const QVec& b, const Rational& bound,
                                       std::size_t cap) {
    const int g = F.degree();
    const int n = L0.rank();
    if (g > 2) throw DomainError("beta_grouping_check: field degree above 2");
    BetaGroupingReport rep;
    rep.cap = bound;

    // Direct route: the composite lattice on L0^g with Gram Tr(s_i s_j) G,
    // whose norm is the F-trace of Q(xi, xi).
    QMat ts(g, QVec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) ts[i][j] = F.trace(F.mul(F.dual_basis(i), F.dual_basis(j)));
    E0Mat comp(g * n, E0Vec(g * n));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c)
                    comp[i * n + a][j * n + c] = e0_scale(ts[i][j], L0.gram()[a][c]);
    const HermitianLattice composite(L0.ring(), comp);

    std::set<std::vector<Rational>> xi_keys;
    for (const auto& flat : short_vectors(composite, F.trace(b), cap)) {
        std::vector<E0Vec> x(g);
        for (int i = 0; i < g; ++i)
            x[i] = E0Vec(flat.begin() + i * n, flat.begin() + (i + 1) * n);
        QVec value;
        if (!xi_norm(F, L0, x, value) || value != b) continue;
        ++rep.direct_count;
        // xi itself, coordinate by coordinate over the F-basis, as the
        // injectivity key.
        std::vector<Rational> key;
        for (int a = 0; a < n; ++a)
            for (int k = 0; k < g; ++k) {
                E0Elem c{};
                for (int i = 0; i < g; ++i)
                    c = e0_add(c, e0_scale(F.dual_basis(i)[k], x[i][a]));
                key.push_back(c.a);
                key.push_back(c.b);
            }
        xi_keys.insert(std::move(key));
    }
    rep.injective = static_cast<long long>(xi_keys.size()) == rep.direct_count;

    // Grouped route: enumerate beta with ^t s beta s = b, count tuples with
    // that exact Gram.
    auto count_beta = [&](const E0Mat& beta) {
        const auto tuples = enumerate_gram(L0, beta, bound, cap);
        if (!tuples.empty()) ++rep.beta_classes;
        rep.grouped_count += static_cast<long long>(tuples.size());
    };
    if (g == 1) {
        const QVec s1sq = F.mul(F.dual_basis(0), F.dual_basis(0));
        const Rational beta11 = b[0] / s1sq[0];
        if (beta11 >= 0 && beta11 <= bound)
            count_beta({{E0Elem{beta11, Rational(0)}}});
    } else {
        const QVec a11 = F.mul(F.dual_basis(0), F.dual_basis(0));
        const QVec a22 = F.mul(F.dual_basis(1), F.dual_basis(1));
        const QVec a12 = F.mul(F.dual_basis(0), F.dual_basis(1));
        int pivot = a12[0] != 0 ? 0 : 1;
        if (a12[pivot] == 0) throw DomainError("beta_grouping_check: degenerate dual basis");

        std::vector<Rational> norms;
        for (const auto& [value, count] : theta_coefficients(L0, bound))
            if (count > 0) norms.push_back(value);
        const Integer den = denom_lcm(L0.gram());
        const ImagQuadratic& ring = L0.ring();
        for (const Rational& b11 : norms)
            for (const Rational& b22 : norms) {
                // b - a11 b11 - a22 b22 must be a rational multiple of s1 s2;
                // the multiple is the E0-trace of beta_12.
                QVec rem = b;
                for (int k = 0; k < g; ++k) rem[k] -= a11[k] * b11 + a22[k] * b22;
                const Rational t = rem[pivot] / a12[pivot];
                bool consistent = true;
                for (int k = 0; k < g; ++k) consistent = consistent && rem[k] == a12[k] * t;
                if (!consistent) continue;
                // beta_12 = u + v w with 2u + v tr(w) = t, |beta_12|^2 <= b11 b22,
                // and v in (1/den) Z.
                const Rational lead = ring.omega_norm() - ring.omega_trace() * ring.omega_trace() / 4;
                const Rational disc = b11 * b22 - t * t / 4;
                if (disc < 0) continue;
                const double span = std::sqrt(to_double(disc / lead)) + 1e-9;
                const double dend = den.convert_to<double>();
                const long long vlo = static_cast<long long>(std::floor(-span * dend)) - 1;
                const long long vhi = static_cast<long long>(std::ceil(span * dend)) + 1;
                for (long long vv = vlo; vv <= vhi; ++vv) {
                    const Rational v(Integer(vv), den);
                    const Rational u = (t - v * ring.omega_trace()) / 2;
                    const E0Elem b12{u, v};
                    if (e0_norm(ring, b12) > b11 * b22) continue;
                    count_beta({{E0Elem{b11, Rational(0)}, b12},
                                {e0_conj(ring, b12), E0Elem{b22, Rational(0)}}});
                }
            }
    }

    rep.match = rep.direct_count == rep.grouped_count;
    return rep;
}

std::vector<BetaSweepEntry> beta_grouping_sweep(const NumberFieldBasis& F,
                                                const HermitianLattice& L0,
                                                const Rational& trace_bound,
                                                const Rational& bound, std::size_t cap) {
    const int g = F.degree();
    const int n = L0.rank();
    if (g > 2) throw DomainError("beta_grouping_sweep: field degree above 2");

    // Direct route, once: bucket the composite-lattice ball by the exact
    // value b = Q(xi, xi) and track the injectivity keys per b.
    QMat ts(g, QVec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) ts[i][j] = F.trace(F.mul(F.dual_basis(i), F.dual_basis(j)));
    E0Mat comp(g * n, E0Vec(g * n));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c)
                    comp[i * n + a][j * n + c] = e0_scale(ts[i][j], L0.gram()[a][c]);
    const HermitianLattice composite(L0.ring(), comp);

    struct Bucket {
        long long count = 0;
        std::set<std::vector<Rational>> keys;
    };
    std::map<QVec, Bucket> direct;
    for (const auto& flat : short_vectors(composite, trace_bound, cap)) {
        std::vector<E0Vec> x(g);
        for (int i = 0; i < g; ++i)
            x[i] = E0Vec(flat.begin() + i * n, flat.begin() + (i + 1) * n);
        QVec value;
        if (!xi_norm(F, L0, x, value)) continue;
        Bucket& bucket = direct[value];
        ++bucket.count;
        std::vector<Rational> key;
        for (int a = 0; a < n; ++a)
            for (int k = 0; k < g; ++k) {
                E0Elem c{};
                for (int i = 0; i < g; ++i)
                    c = e0_add(c, e0_scale(F.dual_basis(i)[k], x[i][a]));
                key.push_back(c.a);
                key.push_back(c.b);
            }
        bucket.keys.insert(std::move(key));
    }

    // Vectors of L0 up to the diagonal bound, bucketed by exact norm, shared
    // by every grouped count.
    std::map<Rational, std::vector<E0Vec>> by_norm;
    for (auto& v : short_vectors(L0, bound, cap)) by_norm[L0.norm(v)].push_back(std::move(v));

    // Ordered-pair counts per (norm, norm, inner product), built on demand and
    // reused across the b values.
    std::map<std::pair<Rational, Rational>, std::map<std::pair<Rational, Rational>, long long>>
        pair_cache;
    auto pair_counts = [&](const Rational& b11, const Rational& b22)
        -> const std::map<std::pair<Rational, Rational>, long long>& {
        const auto key = std::make_pair(b11, b22);
        auto it = pair_cache.find(key);
        if (it != pair_cache.end()) return it->second;
        auto& counts = pair_cache[key];
        for (const auto& x1 : by_norm.at(b11))
            for (const auto& x2 : by_norm.at(b22)) {
                const E0Elem inner = L0.inner(x1, x2);
                ++counts[{inner.a, inner.b}];
            }
        return counts;
    };

    const QVec a11 = F.mul(F.dual_basis(0), F.dual_basis(0));
    const QVec a22 = g == 2 ? F.mul(F.dual_basis(1), F.dual_basis(1)) : QVec{};
    const QVec a12 = g == 2 ? F.mul(F.dual_basis(0), F.dual_basis(1)) : QVec{};
    // For g = 2, (b22, t) solves the linear system a22 b22 + a12 t = b - a11 b11.
    Rational det = 0;
    if (g == 2) {
        det = a22[0] * a12[1] - a22[1] * a12[0];
        if (det == 0) throw DomainError("beta_grouping_sweep: degenerate dual basis");
    }
    const Integer den = denom_lcm(L0.gram());
    const ImagQuadratic& ring = L0.ring();
    const Rational lead = ring.omega_norm() - ring.omega_trace() * ring.omega_trace() / 4;

    std::vector<BetaSweepEntry> out;
    for (const auto& [b, bucket] : direct) {
        BetaGroupingReport rep;
        rep.cap = bound;
        rep.direct_count = bucket.count;
        rep.injective = static_cast<long long>(bucket.keys.size()) == rep.direct_count;

        if (g == 1) {
            const Rational beta11 = b[0] / a11[0];
            if (beta11 >= 0 && beta11 <= bound) {
                const auto it = by_norm.find(beta11);
                const long long count =
                    it == by_norm.end() ? 0 : static_cast<long long>(it->second.size());
                rep.grouped_count = count;
                if (count > 0) rep.beta_classes = 1;
            }
        } else {
            for (const auto& [b11, layer1] : by_norm) {
                const Rational r0 = b[0] - a11[0] * b11;
                const Rational r1 = b[1] - a11[1] * b11;
                const Rational b22 = (r0 * a12[1] - r1 * a12[0]) / det;
                const Rational t = (a22[0] * r1 - a22[1] * r0) / det;
                if (b22 < 0 || b22 > bound || !by_norm.count(b22)) continue;
                const Rational disc = b11 * b22 - t * t / 4;
                if (disc < 0) continue;
                const auto& counts = pair_counts(b11, b22);
                const double span = std::sqrt(to_double(disc / lead)) + 1e-9;
                const double dend = den.convert_to<double>();
                const long long vlo = static_cast<long long>(std::floor(-span * dend)) - 1;
                const long long vhi = static_cast<long long>(std::ceil(span * dend)) + 1;
                for (long long vv = vlo; vv <= vhi; ++vv) {
                    const Rational v(Integer(vv), den);
                    const Rational u = (t - v * ring.omega_trace()) / 2;
                    if (e0_norm(ring, {u, v}) > b11 * b22) continue;
                    const auto it = counts.find({u, v});
                    const long long count = it == counts.end() ? 0 : it->second;
                    rep.grouped_count += count;
                    if (count > 0) ++rep.beta_classes;
                }
            }
        }
        rep.match = rep.direct_count == rep.grouped_count;
        out.push_back({b, rep});
    }
    return out;
}

}  // namespace kmlab

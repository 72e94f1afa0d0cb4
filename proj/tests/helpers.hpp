#pragma once

// Shared test utilities: random exact inputs and numeric oracles that stay
// independent of the library's own evaluation paths.

#include "kmlab/polygauss.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace kmlab::testing {

inline FieldElem random_field_elem(std::mt19937_64& rng, int span = 4) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    auto q = [&] { return Rational(num(rng), den(rng)); };
    return {q(), q(), q(), q()};
}

inline Coefficient random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> grade(-1, 1);
    FieldElem c = random_field_elem(rng);
    if (c.is_zero()) c = FieldElem{1};
    return Coefficient(c, grade(rng));
}

inline PolyGaussian random_polygauss(std::mt19937_64& rng, int num_vars, int max_deg,
                                     std::vector<FieldElem> scales = {}) {
    if (scales.empty()) scales.assign(num_vars, FieldElem{1});
    PolyGaussian f = PolyGaussian::zero(std::move(scales));
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(1, 4);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(num_vars);
        for (int j = 0; j < num_vars; ++j) {
            m[j].bar = static_cast<std::uint8_t>(deg(rng));
            m[j].plain = static_cast<std::uint8_t>(deg(rng));
        }
        f.add_term(m, random_coefficient(rng));
    }
    return f;
}

inline std::complex<double> random_point(std::mt19937_64& rng, double span = 1.0) {
    std::uniform_real_distribution<double> u(-span, span);
    return {u(rng), u(rng)};
}

// Gauss-Legendre nodes and weights on [-1, 1].
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1.0);
            double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
        }
        double dp = n * (t * p0 - p1) / (t * t - 1.0);
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// Quadrature of g over the complex plane (as R^2), truncated to |Re|,|Im| <= R.
inline std::complex<double> integrate_C(
    const std::function<std::complex<double>(std::complex<double>)>& g, double R = 6.0,
    int n = 140) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    std::complex<double> total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            total += w[i] * w[j] * g({R * x[i], R * x[j]});
    return total * (R * R);
}

}  // namespace kmlab::testing

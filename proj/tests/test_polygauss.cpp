#include "kmlab/polygauss.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <random>

using namespace kmlab;
using namespace kmlab::testing;

namespace {

PolyGaussian phi0_1v() { return PolyGaussian::gaussian(1); }

// zbar^a z^b phi_0 in one variable with unit coefficient.
PolyGaussian mono(int a, int b, Coefficient c = Coefficient(1)) {
    return phi0_1v().mul_var(0, a, b, c);
}

const Coefficient kInvPi(FieldElem{1}, -1);

}  // namespace

TEST_CASE("add: additive inverse and disjoint monomials") {
    PolyGaussian f = phi0_1v();
    CHECK((f + Coefficient(-1) * f).is_zero());

    PolyGaussian two_z = mono(0, 1, Coefficient(2));
    PolyGaussian c = Coefficient(FieldElem{-2}, -1) * phi0_1v();  // -2/pi
    PolyGaussian sum = two_z + c;
    CHECK(sum.terms().size() == 2);
}

TEST_CASE("add rejects mismatched scales") {
    PolyGaussian f = phi0_1v();
    PolyGaussian g = PolyGaussian::gaussian({FieldElem{Rational(1, 2)}});
    CHECK_THROWS_AS(f + g, ScaleMismatch);
}

TEST_CASE("add: F_{1,1} doubled, with apply_D as oracle") {
    // F_{1,1} phi_0 = Dbar D phi_0.
    PolyGaussian f11 = phi0_1v().apply_D(0, false).apply_D(0, true);
    PolyGaussian doubled = f11 + f11;
    // (8|z|^2 - 4/pi) phi_0
    PolyGaussian expect = mono(1, 1, Coefficient(8)) + mono(0, 0, Coefficient(FieldElem{-4}, -1));
    CHECK(doubled == expect);
}

TEST_CASE("mul_poly basics") {
    CHECK(mono(0, 1) == phi0_1v().mul_var(0, 0, 1));
    CHECK(mono(0, 1).mul_var(0, 1, 0) == mono(1, 1));
    PolyGaussian f = phi0_1v().mul_var(0, 1, 0, Coefficient(FieldElem::i() * FieldElem::sqrt2()));
    CHECK(f == mono(1, 0, Coefficient(FieldElem(0, 0, 0, 1))));
}

TEST_CASE("derivative: chain rule on the Gaussian exponent") {
    // d/dzbar phi_0 = -pi z phi_0.
    CHECK(phi0_1v().derivative(0, true) == mono(0, 1, Coefficient(FieldElem{-1}, 1)));
    // d/dz (z phi_0) = (1 - pi |z|^2) phi_0.
    PolyGaussian expect = mono(0, 0) + mono(1, 1, Coefficient(FieldElem{-1}, 1));
    CHECK(mono(0, 1).derivative(0, false) == expect);
    // scale 1/2 carries into the derivative.
    PolyGaussian half = PolyGaussian::gaussian({FieldElem{Rational(1, 2)}});
    PolyGaussian expect_half = half.mul_var(0, 0, 1, Coefficient(FieldElem{Rational(-1, 2)}, 1));
    CHECK(half.derivative(0, true) == expect_half);
}

TEST_CASE("derivative order does not matter") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        PolyGaussian f = random_polygauss(rng, 2, 3);
        CHECK(f.derivative(0, false).derivative(0, true) ==
              f.derivative(0, true).derivative(0, false));
        CHECK(f.derivative(0, false).derivative(1, true) ==
              f.derivative(1, true).derivative(0, false));
    }
}

TEST_CASE("derivative matches central finite differences") {
    std::mt19937_64 rng(5);
    const double h = 1e-5;
    for (int t = 0; t < 20; ++t) {
        PolyGaussian f = random_polygauss(rng, 1, 3);
        PolyGaussian dz = f.derivative(0, false);
        PolyGaussian dzb = f.derivative(0, true);
        std::complex<double> z = random_point(rng);
        auto at = [&](std::complex<double> p) { return f.evaluate({p}); };
        // d/dz = (d/dx - i d/dy)/2, d/dzbar = (d/dx + i d/dy)/2.
        std::complex<double> fx = (at(z + h) - at(z - h)) / (2 * h);
        std::complex<double> fy =
            (at(z + std::complex<double>(0, h)) - at(z - std::complex<double>(0, h))) / (2 * h);
        std::complex<double> dz_num = (fx - std::complex<double>(0, 1) * fy) / 2.0;
        std::complex<double> dzb_num = (fx + std::complex<double>(0, 1) * fy) / 2.0;
        CHECK(std::abs(dz.evaluate({z}) - dz_num) < 1e-6);
        CHECK(std::abs(dzb.evaluate({z}) - dzb_num) < 1e-6);
    }
}

TEST_CASE("apply_D: creation operators against phi_0") {
    // D phi_0 = 2 z phi_0.
    CHECK(phi0_1v().apply_D(0, false) == mono(0, 1, Coefficient(2)));
    // D^3 phi_0 = (2z)^3 phi_0.
    PolyGaussian d3 = phi0_1v().apply_D(0, false).apply_D(0, false).apply_D(0, false);
    CHECK(d3 == mono(0, 3, Coefficient(8)));
    // Dbar D phi_0 = (4|z|^2 - 2/pi) phi_0.
    PolyGaussian dd = phi0_1v().apply_D(0, false).apply_D(0, true);
    CHECK(dd == mono(1, 1, Coefficient(4)) + mono(0, 0, Coefficient(FieldElem{-2}, -1)));
    // Off-scale input is rejected.
    PolyGaussian half = PolyGaussian::gaussian({FieldElem{Rational(1, 2)}});
    CHECK_THROWS_AS(half.apply_D(0, false), UnsupportedScale);
}

TEST_CASE("moment_integral closed form") {
    CHECK(phi0_1v().moment_integral() == Coefficient(1));
    CHECK(mono(1, 2).moment_integral() == Coefficient());
    // |z|^4 phi_0 -> 2/pi^2.
    CHECK(mono(2, 2).moment_integral() == Coefficient(FieldElem{2}, -2));
    // Scale 1/2 Gaussian has mass 2.
    PolyGaussian half = PolyGaussian::gaussian({FieldElem{Rational(1, 2)}});
    CHECK(half.moment_integral() == Coefficient(2));
    // r! / pi^r for r <= 10.
    for (int r = 0; r <= 10; ++r) {
        CHECK(mono(r, r).moment_integral() ==
              Coefficient(FieldElem{Rational(factorial(r))}, -r));
    }
}

TEST_CASE("moment_integral vanishes on unbalanced monomials at any scale") {
    for (Rational s : {Rational(1), Rational(1, 2), Rational(2)}) {
        PolyGaussian g = PolyGaussian::gaussian({FieldElem{s}});
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                if (a == b) continue;
                CHECK(g.mul_var(0, a, b).moment_integral() == Coefficient());
            }
    }
}

TEST_CASE("moment_integral agrees with 2-D quadrature") {
    std::mt19937_64 rng(17);
    std::vector<Rational> scale_pool = {Rational(1), Rational(1, 2), Rational(2)};
    for (int t = 0; t < 50; ++t) {
        Rational s = scale_pool[t % 3];
        PolyGaussian f = random_polygauss(rng, 1, 3, {FieldElem{s}});
        std::complex<double> exact = f.moment_integral().to_complex();
        std::complex<double> numeric =
            integrate_C([&](std::complex<double> z) { return f.evaluate({z}); },
                        7.0 / std::sqrt(to_double(s)));
        double scale_ref = std::max(1.0, std::abs(exact));
        CHECK(std::abs(exact - numeric) / scale_ref < 1e-9);
    }
}

TEST_CASE("rescale") {
    FieldElem inv_sqrt2 = FieldElem{1} / FieldElem::sqrt2();
    PolyGaussian half = PolyGaussian::gaussian({FieldElem{Rational(1, 2)}});
    CHECK(phi0_1v().rescale(0, inv_sqrt2) == half);
    // (2z) phi_0 with z -> z/sqrt2 gives (sqrt2 z) phi_0 at scale 1/2.
    CHECK(mono(0, 1, Coefficient(2)).rescale(0, inv_sqrt2) ==
          half.mul_var(0, 0, 1, Coefficient(FieldElem::sqrt2())));
    CHECK_THROWS_AS(phi0_1v().rescale(0, FieldElem{0}), ZeroScale);
}

TEST_CASE("rescale round trip is the identity") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        PolyGaussian f = random_polygauss(rng, 2, 3);
        FieldElem lambda = random_field_elem(rng);
        if (lambda.is_zero()) lambda = FieldElem::sqrt2();
        CHECK(f.rescale(0, lambda).rescale(0, lambda.inverse()) == f);
    }
}

TEST_CASE("linear_substitution") {
    FieldElem r = FieldElem{1} / FieldElem::sqrt2();
    std::array<FieldElem, 4> split = {r, r, r, -r};

    PolyGaussian phi2 = PolyGaussian::gaussian(2);
    CHECK(phi2.linear_substitution(0, 1, split) == phi2);

    // x1 phi -> ((w1 + w2)/sqrt2) phi.
    PolyGaussian x1 = phi2.mul_var(0, 0, 1);
    PolyGaussian expect =
        phi2.mul_var(0, 0, 1, Coefficient(r)) + phi2.mul_var(1, 0, 1, Coefficient(r));
    CHECK(x1.linear_substitution(0, 1, split) == expect);

    std::array<FieldElem, 4> ident = {FieldElem{1}, FieldElem{0}, FieldElem{0}, FieldElem{1}};
    std::mt19937_64 rng(29);
    PolyGaussian f = random_polygauss(rng, 2, 3);
    CHECK(f.linear_substitution(0, 1, ident) == f);

    std::array<FieldElem, 4> bad = {FieldElem{1}, FieldElem{1}, FieldElem{0}, FieldElem{1}};
    CHECK_THROWS_AS(f.linear_substitution(0, 1, bad), NotUnitary);
}

TEST_CASE("fourier_transform fixes phi_0 and squares to parity") {
    CHECK(phi0_1v().fourier_transform(0) == phi0_1v());
    // Even degree: F(F(z^2 phi_0)) = z^2 phi_0.
    PolyGaussian z2 = mono(0, 2);
    CHECK(z2.fourier_transform(0).fourier_transform(0) == z2);
    // All monomials of degree <= 6.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            PolyGaussian f = mono(a, b);
            CHECK(f.fourier_transform(0).fourier_transform(0) == f.parity(0));
        }
    CHECK_THROWS_AS(PolyGaussian::gaussian({FieldElem{2}}).fourier_transform(0),
                    UnsupportedScale);
}

TEST_CASE("fourier_transform of z phi_0: phase locked by quadrature") {
    // Defining integral with kernel exp(-2 pi i Re(conj(y) x)).
    PolyGaussian zphi = mono(0, 1);
    PolyGaussian ft = zphi.fourier_transform(0);
    // Regression: F(z phi_0) = -i z phi_0.
    CHECK(ft == mono(0, 1, Coefficient(-FieldElem::i())));
    std::complex<double> x(0.3, 0.1);
    std::complex<double> numeric = integrate_C([&](std::complex<double> y) {
        double phase = -2 * M_PI * (std::conj(y) * x).real();
        return zphi.evaluate({y}) * std::exp(std::complex<double>(0, phase));
    });
    CHECK(std::abs(numeric - ft.evaluate({x})) < 1e-10);
    // And inversion: F(F(z phi_0)) = -z phi_0.
    CHECK(ft.fourier_transform(0) == mono(0, 1, Coefficient(-1)));
}

TEST_CASE("ring properties: commutative, associative, distributive") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        PolyGaussian f = random_polygauss(rng, 2, 3);
        PolyGaussian g = random_polygauss(rng, 2, 3);
        PolyGaussian h = random_polygauss(rng, 2, 3);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        Monomial m(2);
        m[0] = {1, 0};
        m[1] = {0, 2};
        Coefficient c = random_coefficient(rng);
        CHECK((f + g).mul_poly(m, c) == f.mul_poly(m, c) + g.mul_poly(m, c));
    }
}

TEST_CASE("tensor, restriction, and per-variable integration") {
    PolyGaussian f = mono(1, 1, Coefficient(3));
    PolyGaussian g = mono(0, 2);
    PolyGaussian t = f.tensor(g);
    CHECK(t.num_vars() == 2);
    CHECK(t.restrict_var_zero(1).is_zero());      // z^2 dies at z = 0
    CHECK(t.integrate_var(1).is_zero());          // unbalanced monomial integrates to 0
    CHECK(g.tensor(f).integrate_var(1) == Coefficient(FieldElem{3}, -1) * g);  // 3 * 1!/pi
}

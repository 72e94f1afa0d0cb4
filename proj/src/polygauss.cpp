#include "kmlab/polygauss.hpp"

#include "kmlab/budget.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace kmlab {

namespace {

FieldElem pow_field(const FieldElem& x, int n) {
    FieldElem r{1};
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

PolyGaussian PolyGaussian::gaussian(int num_vars) {
    return gaussian(std::vector<FieldElem>(num_vars, FieldElem{1}));
}

PolyGaussian PolyGaussian::gaussian(std::vector<FieldElem> scales) {
    PolyGaussian f = zero(std::move(scales));
    f.terms_[Monomial(f.num_vars())] = Coefficient(1);
    return f;
}

PolyGaussian PolyGaussian::zero(std::vector<FieldElem> scales) {
    for (const auto& c : scales)
        if (c.real_sign() <= 0)
            throw NonIntegrable("Gaussian scale must have positive real part");
    PolyGaussian f;
    f.scales_ = std::move(scales);
    return f;
}

void PolyGaussian::check_var(int j) const {
    if (j < 0 || j >= num_vars()) throw DomainError("variable index out of range");
}

void PolyGaussian::add_term(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    TermBudget::charge(1);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PolyGaussian operator+(const PolyGaussian& f, const PolyGaussian& g) {
    if (f.scales_ != g.scales_)
        throw ScaleMismatch("cannot add PolyGaussians with different Gaussian scales");
    PolyGaussian r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

PolyGaussian operator-(const PolyGaussian& f) {
    PolyGaussian r = PolyGaussian::zero(f.scales_);
    for (const auto& [m, c] : f.terms_) r.terms_[m] = -c;
    return r;
}

PolyGaussian operator-(const PolyGaussian& f, const PolyGaussian& g) { return f + (-g); }

PolyGaussian operator*(const Coefficient& c, const PolyGaussian& f) {
    PolyGaussian r = PolyGaussian::zero(f.scales_);
    for (const auto& [m, v] : f.terms_) r.add_term(m, c * v);
    return r;
}

PolyGaussian PolyGaussian::mul_poly(const Monomial& m, const Coefficient& c) const {
    if (static_cast<int>(m.size()) != num_vars())
        throw DomainError("monomial length does not match variable count");
    PolyGaussian r = zero(scales_);
    for (const auto& [mm, cc] : terms_) {
        Monomial shifted = mm;
        for (int j = 0; j < num_vars(); ++j) {
            shifted[j].bar += m[j].bar;
            shifted[j].plain += m[j].plain;
        }
        r.add_term(shifted, cc * c);
    }
    return r;
}

PolyGaussian PolyGaussian::mul_var(int j, int bar_exp, int plain_exp,
                                   const Coefficient& c) const {
    check_var(j);
    Monomial m(num_vars());
    m[j] = {static_cast<std::uint8_t>(bar_exp), static_cast<std::uint8_t>(plain_exp)};
    return mul_poly(m, c);
}

PolyGaussian PolyGaussian::derivative(int j, bool conjugated) const {
    check_var(j);
    // exp(-pi c z zbar): d/dz contributes -pi c zbar, d/dzbar contributes -pi c z.
    const Coefficient gauss_factor(-scales_[j], 1);
    PolyGaussian r = zero(scales_);
    for (const auto& [m, c] : terms_) {
        int exp = conjugated ? m[j].bar : m[j].plain;
        if (exp > 0) {
            Monomial down = m;
            if (conjugated)
                --down[j].bar;
            else
                --down[j].plain;
            r.add_term(down, c * Coefficient(exp));
        }
        Monomial up = m;
        if (conjugated)
            ++up[j].plain;
        else
            ++up[j].bar;
        r.add_term(up, c * gauss_factor);
    }
    return r;
}

PolyGaussian PolyGaussian::apply_D(int j, bool conjugated) const {
    check_var(j);
    if (scales_[j] != FieldElem{1})
        throw UnsupportedScale("apply_D is defined against the standard Gaussian (scale 1)");
    // D = z - (1/pi) d/dzbar; conjugated: zbar - (1/pi) d/dz.
    PolyGaussian mul = conjugated ? mul_var(j, 1, 0) : mul_var(j, 0, 1);
    PolyGaussian der = derivative(j, !conjugated);
    return mul - Coefficient(FieldElem{1}, -1) * der;
}

Coefficient PolyGaussian::moment_integral() const {
    if (num_vars() != 1) throw DomainError("moment_integral expects one variable");
    const FieldElem& c = scales_[0];
    if (c.real_sign() <= 0) throw NonIntegrable("moment_integral: Re(scale) <= 0");
    Coefficient total;
    for (const auto& [m, v] : terms_) {
        if (m[0].bar != m[0].plain) continue;  // angular integral kills a != b
        int a = m[0].bar;
        Coefficient factor(FieldElem(Rational(factorial(a))) / pow_field(c, a + 1), -a);
        total += v * factor;
    }
    return total;
}

PolyGaussian PolyGaussian::rescale(int j, const FieldElem& lambda) const {
    check_var(j);
    if (lambda.is_zero()) throw ZeroScale("rescale: lambda must be nonzero");
    std::vector<FieldElem> s = scales_;
    s[j] = s[j] * lambda.norm();
    PolyGaussian r = zero(std::move(s));
    for (const auto& [m, c] : terms_)
        r.add_term(m, c * Coefficient(pow_field(lambda.conj(), m[j].bar) *
                                      pow_field(lambda, m[j].plain)));
    return r;
}

PolyGaussian PolyGaussian::linear_substitution(int j, int k,
                                               const std::array<FieldElem, 4>& u) const {
    check_var(j);
    check_var(k);
    if (j == k) throw DomainError("linear_substitution needs two distinct variables");
    if (scales_[j] != scales_[k])
        throw ScaleMismatch("linear_substitution: paired variables must share a scale");
    // Unitarity: conj(U)^T U = I.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            FieldElem dot = u[a].conj() * u[b] + u[2 + a].conj() * u[2 + b];
            if (dot != (a == b ? FieldElem{1} : FieldElem{0}))
                throw NotUnitary("linear_substitution: matrix is not exactly unitary");
        }

    PolyGaussian r = zero(scales_);
    for (const auto& [m, c] : terms_) {
        const int aj = m[j].bar, bj = m[j].plain, ak = m[k].bar, bk = m[k].plain;
        // z_j = u0 w_j + u1 w_k, z_k = u2 w_j + u3 w_k; bars use conjugates.
        for (int s1 = 0; s1 <= aj; ++s1)
            for (int s2 = 0; s2 <= bj; ++s2)
                for (int s3 = 0; s3 <= ak; ++s3)
                    for (int s4 = 0; s4 <= bk; ++s4) {
                        FieldElem coef =
                            FieldElem(Rational(binomial(aj, s1) * binomial(bj, s2) *
                                               binomial(ak, s3) * binomial(bk, s4))) *
                            pow_field(u[0].conj(), s1) * pow_field(u[1].conj(), aj - s1) *
                            pow_field(u[0], s2) * pow_field(u[1], bj - s2) *
                            pow_field(u[2].conj(), s3) * pow_field(u[3].conj(), ak - s3) *
                            pow_field(u[2], s4) * pow_field(u[3], bk - s4);
                        Monomial mm = m;
                        mm[j] = {static_cast<std::uint8_t>(s1 + s3),
                                 static_cast<std::uint8_t>(s2 + s4)};
                        mm[k] = {static_cast<std::uint8_t>((aj - s1) + (ak - s3)),
                                 static_cast<std::uint8_t>((bj - s2) + (bk - s4))};
                        r.add_term(mm, c * Coefficient(coef));
                    }
    }
    return r;
}

PolyGaussian PolyGaussian::fourier_transform(int j) const {
    check_var(j);
    if (scales_[j] != FieldElem{1})
        throw UnsupportedScale("exact fourier_transform supports only the self-dual scale 1");

    // F(zbar^a z^b phi_0) in one variable, via F(z f) = (i/pi) d/dxbar F(f)
    // and F(zbar f) = (i/pi) d/dx F(f), starting from the fixed Gaussian.
    static const Coefficient i_over_pi(FieldElem::i(), -1);
    std::map<std::pair<int, int>, PolyGaussian> memo;
    std::function<const PolyGaussian&(int, int)> ft = [&](int a, int b) -> const PolyGaussian& {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        PolyGaussian v = PolyGaussian::gaussian(1);
        if (b > 0)
            v = i_over_pi * ft(a, b - 1).derivative(0, true);
        else if (a > 0)
            v = i_over_pi * ft(a - 1, 0).derivative(0, false);
        return memo.emplace(std::pair{a, b}, std::move(v)).first->second;
    };

    PolyGaussian r = zero(scales_);
    for (const auto& [m, c] : terms_) {
        const PolyGaussian& g = ft(m[j].bar, m[j].plain);
        for (const auto& [gm, gc] : g.terms()) {
            Monomial mm = m;
            mm[j] = gm[0];
            r.add_term(mm, c * gc);
        }
    }
    return r;
}

PolyGaussian PolyGaussian::parity(int j) const {
    check_var(j);
    PolyGaussian r = zero(scales_);
    for (const auto& [m, c] : terms_) {
        bool odd = (m[j].bar + m[j].plain) % 2;
        r.add_term(m, odd ? -c : c);
    }
    return r;
}

PolyGaussian PolyGaussian::tensor(const PolyGaussian& g) const {
    std::vector<FieldElem> s = scales_;
    s.insert(s.end(), g.scales_.begin(), g.scales_.end());
    PolyGaussian r = zero(std::move(s));
    for (const auto& [mf, cf] : terms_)
        for (const auto& [mg, cg] : g.terms_) {
            Monomial m = mf;
            m.insert(m.end(), mg.begin(), mg.end());
            r.add_term(m, cf * cg);
        }
    return r;
}

PolyGaussian PolyGaussian::restrict_var_zero(int j) const {
    check_var(j);
    std::vector<FieldElem> s = scales_;
    s.erase(s.begin() + j);
    PolyGaussian r = zero(std::move(s));
    for (const auto& [m, c] : terms_) {
        if (m[j].bar != 0 || m[j].plain != 0) continue;
        Monomial mm = m;
        mm.erase(mm.begin() + j);
        r.add_term(mm, c);
    }
    return r;
}

PolyGaussian PolyGaussian::integrate_var(int j) const {
    check_var(j);
    const FieldElem& c = scales_[j];
    if (c.real_sign() <= 0) throw NonIntegrable("integrate_var: Re(scale) <= 0");
    std::vector<FieldElem> s = scales_;
    s.erase(s.begin() + j);
    PolyGaussian r = zero(std::move(s));
    for (const auto& [m, v] : terms_) {
        if (m[j].bar != m[j].plain) continue;
        int a = m[j].bar;
        Coefficient factor(FieldElem(Rational(factorial(a))) / pow_field(c, a + 1), -a);
        Monomial mm = m;
        mm.erase(mm.begin() + j);
        r.add_term(mm, v * factor);
    }
    return r;
}

std::complex<double> PolyGaussian::evaluate(const std::vector<std::complex<double>>& z) const {
    if (static_cast<int>(z.size()) != num_vars())
        throw DomainError("evaluate: wrong number of coordinates");
    const double pi = std::numbers::pi;
    std::complex<double> gauss_exp = 0;
    for (int j = 0; j < num_vars(); ++j)
        gauss_exp += -pi * scales_[j].to_complex() * std::norm(z[j]);
    std::complex<double> poly = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int j = 0; j < num_vars(); ++j) {
            for (int e = 0; e < m[j].bar; ++e) t *= std::conj(z[j]);
            for (int e = 0; e < m[j].plain; ++e) t *= z[j];
        }
        poly += t;
    }
    return poly * std::exp(gauss_exp);
}

std::string PolyGaussian::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (int j = 0; j < num_vars(); ++j) {
            if (m[j].bar) s += "*zb" + std::to_string(j) + "^" + std::to_string(m[j].bar);
            if (m[j].plain) s += "*z" + std::to_string(j) + "^" + std::to_string(m[j].plain);
        }
    }
    return s;
}

}  // namespace kmlab

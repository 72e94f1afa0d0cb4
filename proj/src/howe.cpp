#include "kmlab/howe.hpp"

#include "kmlab/budget.hpp"
#include "kmlab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace kmlab {

namespace {

Coefficient inv_pow2(int e) {
    return Coefficient(FieldElem(Rational(1, Integer(1) << e)));
}

std::vector<Permutation> symmetric_group(int p) {
    Permutation id(p);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> all;
    do {
        all.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    return all;
}

// Odometer over {0, ..., base-1}^q; returns false after the last tuple.
bool next_tuple(std::vector<int>& t, int base) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

WedgeWord top_word(int p, int q) {
    std::vector<WedgeGen> gens;
    for (int bar = 0; bar < 2; ++bar)
        for (int k = 1; k <= q; ++k)
            for (int j = 1; j <= p; ++j)
                gens.push_back({bar == 1, static_cast<std::uint16_t>(k),
                                static_cast<std::uint16_t>(j)});
    return WedgeWord::from_sequence(std::move(gens));
}

KMForm apply_howe(const KMForm& form, int p, int q, bool conjugated) {
    if (p < 1 || q < 0) throw DomainError("apply_howe: need p >= 1, q >= 0");
    for (const auto& [w, f] : form.terms())
        if (f.num_vars() < p) throw DomainError("apply_howe: too few variables");
    KMForm result = form;
    for (int k = q; k >= 1; --k) {
        KMForm next;
        for (const auto& [w, f] : result.terms()) {
            for (int j = 1; j <= p; ++j) {
                WedgeWord gen = WedgeWord::from_sequence(
                    {{conjugated, static_cast<std::uint16_t>(k),
                      static_cast<std::uint16_t>(j)}});
                next.add(gen * w, f.apply_D(j - 1, !conjugated));
            }
        }
        result = std::move(next);
    }
    return inv_pow2(2 * q) * result;
}

KMForm km_form(int p, int q) {
    if (p < 1 || q < 0) throw DomainError("km_form: need p >= 1, q >= 0");
    KMForm start{PolyGaussian::gaussian(p + q)};
    if (q == 0) return start;
    return apply_howe(apply_howe(start, p, q, true), p, q, false);
}

KMForm km_form_expansion(int p, int q) {
    if (p < 1 || q < 0) throw DomainError("km_form_expansion: need p >= 1, q >= 0");
    const PolyGaussian phi0 = PolyGaussian::gaussian(p + q);
    if (q == 0) return KMForm{phi0};
    KMForm form;
    std::vector<int> alpha(q, 0);
    do {
        std::vector<int> alpha_p(q, 0);
        do {
            PolyGaussian pg = phi0;
            std::vector<WedgeGen> gens;
            for (int t = 0; t < q; ++t) {
                pg = pg.apply_D(alpha[t], true);
                gens.push_back({false, static_cast<std::uint16_t>(t + 1),
                                static_cast<std::uint16_t>(alpha[t] + 1)});
            }
            for (int t = 0; t < q; ++t) {
                pg = pg.apply_D(alpha_p[t], false);
                gens.push_back({true, static_cast<std::uint16_t>(t + 1),
                                static_cast<std::uint16_t>(alpha_p[t] + 1)});
            }
            form.add(WedgeWord::from_sequence(std::move(gens)), pg);
        } while (next_tuple(alpha_p, p));
    } while (next_tuple(alpha, p));
    return inv_pow2(4 * q) * form;
}

KMForm wedge_power(const KMForm& form, int n) {
    if (n < 1) throw DomainError("wedge_power: need n >= 1");
    KMForm acc = form;
    for (int i = 1; i < n; ++i) {
        KMForm next;
        for (const auto& [w1, f1] : acc.terms())
            for (const auto& [w2, f2] : form.terms()) next.add(w1 * w2, f1.tensor(f2));
        acc = std::move(next);
    }
    return acc;
}

PolyGaussian km_schwartz(int p, int q) {
    if (p < 1 || q < 0) throw DomainError("km_schwartz: need p >= 1, q >= 0");
    const int m = p + q;
    {
        Integer count = 1;
        const Integer pf = factorial(p);
        for (int t = 0; t < 2 * q; ++t) {
            count *= pf;
            if (count > TermBudget::limit())
                throw ResourceLimit("km_schwartz: (p!)^{2q} exceeds the term budget");
        }
    }
    const PolyGaussian phi0 = PolyGaussian::gaussian(p * m);
    if (q == 0) return phi0;

    const std::vector<Permutation> sp = symmetric_group(p);
    const int np = static_cast<int>(sp.size());
    PolyGaussian sum = PolyGaussian::zero(std::vector<FieldElem>(p * m, FieldElem{1}));
    std::vector<int> si(q, 0);
    do {
        std::vector<int> sj(q, 0);
        do {
            PermTuple sigma, sigma_p;
            for (int k = 0; k < q; ++k) sigma.push_back(sp[si[k]]);
            for (int k = 0; k < q; ++k) sigma_p.push_back(sp[sj[k]]);
            const int s = sort_sign(p, q, sigma, sigma_p);
            PolyGaussian pg = phi0;
            for (int j = 0; j < p; ++j)
                for (int k = 0; k < q; ++k) {
                    pg = pg.apply_D(j * m + sigma[k][j], false);
                    pg = pg.apply_D(j * m + sigma_p[k][j], true);
                }
            sum = s < 0 ? sum - pg : sum + pg;
        } while (next_tuple(sj, np));
    } while (next_tuple(si, np));
    return sum;
}

int sort_sign(int p, int q, const PermTuple& sigma, const PermTuple& sigma_prime) {
    if (static_cast<int>(sigma.size()) != q || static_cast<int>(sigma_prime.size()) != q)
        throw DomainError("sort_sign: need q permutations on each side");
    std::vector<WedgeGen> gens;
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k < q; ++k)
            gens.push_back({false, static_cast<std::uint16_t>(k + 1),
                            static_cast<std::uint16_t>(sigma[k][j] + 1)});
        for (int k = 0; k < q; ++k)
            gens.push_back({true, static_cast<std::uint16_t>(k + 1),
                            static_cast<std::uint16_t>(sigma_prime[k][j] + 1)});
    }
    return WedgeWord::from_sequence(std::move(gens)).sign();
}

std::vector<Rational> laguerre_g(int k, LaguerreMode mode) {
    if (k < 0) throw DomainError("laguerre_g: need k >= 0");
    if (mode == LaguerreMode::closed) {
        std::vector<Rational> c(k + 1);
        const Integer kf = factorial(k);
        for (int r = 0; r <= k; ++r) {
            Rational v(kf * kf, factorial(r) * factorial(r) * factorial(k - r));
            c[r] = (k - r) % 2 ? -v : v;
        }
        return c;
    }
    std::vector<Rational> c{1};
    for (int j = 0; j < k; ++j) {
        std::vector<Rational> next(j + 2);
        for (int r = 0; r <= j + 1; ++r) {
            Rational v;
            if (r >= 1) v += c[r - 1];
            if (r <= j) v -= Rational(1 + 2 * r) * c[r];
            if (r + 1 <= j) v += Rational((r + 1) * (r + 1)) * c[r + 1];
            next[r] = v;
        }
        c = std::move(next);
    }
    return c;
}

PolyGaussian F_ab(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("F_ab: need a, b >= 0");
    PolyGaussian f = PolyGaussian::gaussian(1);
    for (int t = 0; t < b; ++t) f = f.apply_D(0, false);
    for (int t = 0; t < a; ++t) f = f.apply_D(0, true);
    return f;
}

int mu_gap(const PolyGaussian& f) {
    if (f.is_zero()) throw DomainError("mu_gap: zero function");
    bool first = true;
    int mu = 0;
    for (const auto& [m, c] : f.terms()) {
        int gap = 0;
        for (const auto& e : m) gap += static_cast<int>(e.plain) - static_cast<int>(e.bar);
        if (first || gap < mu) mu = gap;
        first = false;
    }
    return mu;
}

std::vector<Rational> laguerre_from_radial(const PolyGaussian& f, int k) {
    if (f.num_vars() != 1) throw DomainError("laguerre_from_radial: one variable expected");
    std::vector<Rational> c(k + 1);
    for (const auto& [m, coeff] : f.terms()) {
        const int r = m[0].bar;
        if (m[0].plain != m[0].bar || r > k)
            throw DomainError("laguerre_from_radial: unbalanced input");
        // |z|^{2r} -> |w|^{2r} (2 pi)^{-r}, then the overall pi^k / 2^k.
        Coefficient g = coeff * Coefficient(FieldElem(Rational(1, Integer(1) << (r + k))), k - r);
        if (g.is_zero()) continue;
        if (!g.is_pure_grade(0) || !g.terms().begin()->second.is_rational())
            throw DomainError("laguerre_from_radial: non-rational result");
        c[r] = g.terms().begin()->second.one_part();
    }
    return c;
}

}  // namespace kmlab

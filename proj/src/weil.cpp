#include "kmlab/weil.hpp"

#include <cmath>
#include <random>
#include <set>

namespace kmlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

PolyGaussian with_scales(const PolyGaussian& f, std::vector<FieldElem> scales) {
    PolyGaussian out = PolyGaussian::zero(std::move(scales));
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

// Per-factor parameter lookup with single-entry broadcast.
template <typename T>
const T& factor_param(const std::vector<T>& params, int factor, int factors) {
    if (static_cast<int>(params.size()) == factors) return params[factor];
    if (params.size() == 1) return params[0];
    throw DomainError("group element: parameter count does not match the factors");
}

int factor_count(const PolyGaussian& f, int m_dim) {
    if (m_dim < 1 || f.num_vars() % m_dim != 0)
        throw DomainError("act: variable count is not a multiple of the block size");
    return f.num_vars() / m_dim;
}

FieldElem norm_power(const FieldElem& a, int m) {
    // |a|_E^{m/2} = (a conj(a))^{m/2}; odd m needs an exact square root.
    const FieldElem nrm = a.norm();
    FieldElem out{1};
    for (int k = 0; k < m / 2; ++k) out = out * nrm;
    if (m % 2) {
        FieldElem root;
        if (!nrm.try_sqrt(root))
            throw UnsupportedScale("act: |a| has no exact square root in Q(i, sqrt2)");
        out = out * root;
    }
    return out;
}

std::complex<double> i_power(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

GroupElementData GroupElementData::unipotent(QVec b) {
    GroupElementData g;
    g.kind = Kind::unipotent;
    g.b = std::move(b);
    return g;
}

GroupElementData GroupElementData::levi(std::vector<FieldElem> a) {
    for (const FieldElem& e : a)
        if (e.is_zero()) throw DomainError("levi: parameter must be nonzero");
    GroupElementData g;
    g.kind = Kind::levi;
    g.a = std::move(a);
    return g;
}

GroupElementData GroupElementData::weyl() { return GroupElementData{}; }

GroupElementData GroupElementData::g_tau(std::vector<std::pair<Rational, Rational>> tau) {
    for (const auto& [u, v] : tau)
        if (!(v > 0)) throw DomainError("g_tau: needs Im tau > 0");
    GroupElementData g;
    g.kind = Kind::tau;
    g.tau = std::move(tau);
    return g;
}

int block_sign(int var, int m_dim) {
    return (m_dim > 1 && var % m_dim == m_dim - 1) ? -1 : 1;
}

PolyGaussian act(const GroupElementData& g, const PolyGaussian& f, int m_dim) {
    const int factors = factor_count(f, m_dim);
    switch (g.kind) {
        case GroupElementData::Kind::unipotent: {
            // psi(Q(x,x) b): scale c -> c - 2 i b sign per variable.
            std::vector<FieldElem> scales = f.scales();
            const FieldElem two_i = FieldElem(2) * FieldElem::i();
            for (int j = 0; j < f.num_vars(); ++j) {
                const Rational& bj = factor_param(g.b, j / m_dim, factors);
                FieldElem shift = two_i * FieldElem(bj);
                if (block_sign(j, m_dim) < 0) shift = -shift;
                scales[j] = scales[j] - shift;
            }
            return with_scales(f, std::move(scales));
        }
        case GroupElementData::Kind::levi: {
            PolyGaussian out = f;
            Coefficient prefactor(1);
            for (int fac = 0; fac < factors; ++fac) {
                const FieldElem& a = factor_param(g.a, fac, factors);
                if (a.is_zero()) throw DomainError("levi: parameter must be nonzero");
                for (int j = fac * m_dim; j < (fac + 1) * m_dim; ++j) out = out.rescale(j, a);
                prefactor = prefactor * Coefficient(norm_power(a, m_dim));
            }
            return prefactor * out;
        }
        case GroupElementData::Kind::weyl: {
            PolyGaussian out = f;
            for (int j = 0; j < f.num_vars(); ++j) {
                out = out.fourier_transform(j);
                if (block_sign(j, m_dim) < 0) out = out.parity(j);
            }
            return out;
        }
        case GroupElementData::Kind::tau: {
            std::vector<FieldElem> roots;
            roots.reserve(g.tau.size());
            QVec us;
            for (const auto& [u, v] : g.tau) {
                FieldElem root;
                if (!FieldElem(v).try_sqrt(root))
                    throw UnsupportedScale("g_tau: Im tau has no exact square root");
                roots.push_back(root);
                us.push_back(u);
            }
            return act(GroupElementData::unipotent(std::move(us)),
                       act(GroupElementData::levi(std::move(roots)), f, m_dim), m_dim);
        }
    }
    throw DomainError("act: unknown element kind");
}

std::complex<double> g_tau_evaluate(const std::vector<std::complex<double>>& tau,
                                    const PolyGaussian& f,
                                    const std::vector<std::complex<double>>& xi, int m_dim) {
    const int factors = factor_count(f, m_dim);
    if (static_cast<int>(tau.size()) != factors)
        throw DomainError("g_tau_evaluate: one tau per factor");
    if (static_cast<int>(xi.size()) != f.num_vars())
        throw DomainError("g_tau_evaluate: point dimension mismatch");
    std::complex<double> out = 1;
    std::vector<std::complex<double>> scaled(xi.size());
    double phase = 0;
    for (int fac = 0; fac < factors; ++fac) {
        const double u = tau[fac].real(), v = tau[fac].imag();
        if (v <= 0) throw DomainError("g_tau_evaluate: needs Im tau > 0");
        out *= std::pow(v, m_dim / 2.0);
        double b = 0;
        for (int j = fac * m_dim; j < (fac + 1) * m_dim; ++j) {
            b += block_sign(j, m_dim) * std::norm(xi[j]);
            scaled[j] = xi[j] * std::sqrt(v);
        }
        phase += b * u;
    }
    return out * f.evaluate(scaled) * std::exp(std::complex<double>(0, kTwoPi * phase));
}

std::complex<double> siegel_weil_section(const PolyGaussian& f, std::complex<double> s,
                                         const GroupElementData& g, int m_dim, int n_dim) {
    if (g.kind == GroupElementData::Kind::weyl)
        throw DecompositionUnsupported("siegel_weil_section: element outside P");
    double det_norm = 1;
    if (g.kind == GroupElementData::Kind::levi)
        for (const FieldElem& a : g.a) det_norm *= to_double(a.norm().one_part()) +
                                                  to_double(a.norm().sqrt2_part()) * std::sqrt(2.0);
    if (g.kind == GroupElementData::Kind::tau)
        for (const auto& [u, v] : g.tau) det_norm *= to_double(v);
    const std::complex<double> s0((m_dim - n_dim) / 2.0, 0);
    const PolyGaussian acted = act(g, f, m_dim);
    const std::vector<std::complex<double>> origin(f.num_vars(), 0.0);
    return std::pow(std::complex<double>(det_norm, 0), s - s0) * acted.evaluate(origin);
}

std::complex<double> assemble_fourier_coefficient(const NumberFieldBasis& F, const QVec& b,
                                                  const VolumeTable& table,
                                                  const std::vector<std::complex<double>>& tau,
                                                  int m_dim) {
    const int n = static_cast<int>(tau.size());
    if (n != F.degree()) throw DomainError("assemble: one tau per embedding");
    Rational mass = 0;
    for (const VolumeEntry& e : table)
        if (e.b == b) mass += e.vol * e.mult;
    std::complex<double> out = i_power(-n) * to_double(mass);
    std::complex<double> phase = 0;
    for (int j = 0; j < n; ++j) {
        const double v = tau[j].imag();
        if (v <= 0) throw DomainError("assemble: needs Im tau > 0");
        out *= std::pow(v, m_dim / 2.0);
        phase += F.embed(j, b) * tau[j];
    }
    return out * std::exp(std::complex<double>(0, kTwoPi) * phase);
}

std::complex<double> generating_series(const NumberFieldBasis& F, const VolumeTable& table,
                                       const std::vector<std::complex<double>>& tau, int m_dim,
                                       std::complex<double> c0) {
    std::set<QVec> bs;
    for (const VolumeEntry& e : table) bs.insert(e.b);
    std::complex<double> out = c0;
    double vpow = 1;
    for (const auto& t : tau) vpow *= std::pow(t.imag(), m_dim / 2.0);
    const int n = static_cast<int>(tau.size());
    for (const QVec& b : bs)
        out += i_power(n) / vpow * assemble_fourier_coefficient(F, b, table, tau, m_dim);
    return out;
}

IntertwiningReport intertwining_check(const QVec& b, const NumberFieldBasis& F,
                                      const HermitianLattice& L0, int samples,
                                      std::uint64_t seed) {
    IntertwiningReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int t = 0; t < samples; ++t) {
        std::vector<E0Vec> x(F.degree(), E0Vec(L0.rank()));
        for (auto& vec : x)
            for (auto& e : vec) e = {Rational(dist(rng)), Rational(dist(rng))};
        if (trace_identity_check(F, L0, b, x, x)) ++rep.matched;
    }
    rep.ok = rep.matched == rep.samples;
    return rep;
}

}  // namespace kmlab

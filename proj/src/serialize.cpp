#include "kmlab/serialize.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace kmlab {

using nlohmann::json;

std::string rational_str(const Rational& q) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        out << "/" << boost::multiprecision::denominator(q);
    return out.str();
}

namespace {

Rational parse_rational_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            const Integer num(s.substr(0, slash));
            const Integer den(s.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator");
            return Rational(num, den);
        }
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            // Parse whole and fractional digits separately; leading zeros
            // would otherwise read as an octal literal.
            std::string body = s;
            bool neg = false;
            if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
                neg = body[0] == '-';
                body.erase(0, 1);
            }
            const auto d = body.find('.');
            const std::string whole = body.substr(0, d);
            const std::string frac = body.substr(d + 1);
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
                whole.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("malformed decimal: " + s);
            Integer den = 1, num = 0;
            for (char c : whole) num = num * 10 + (c - '0');
            for (char c : frac) {
                num = num * 10 + (c - '0');
                den *= 10;
            }
            const Rational r(num, den);
            return neg ? -r : r;
        }
        return Rational(Integer(s));
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + s);
    }
}

}  // namespace

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational_string(j.get<std::string>());
    if (j.is_number_float()) {
        std::ostringstream out;
        out.precision(15);
        out << std::fixed << j.get<double>();
        return parse_rational_string(out.str());
    }
    throw ParseError("expected a rational value");
}

json to_json(const FieldElem& x) {
    return json::array({rational_str(x.one_part()), rational_str(x.i_part()),
                        rational_str(x.sqrt2_part()), rational_str(x.i_sqrt2_part())});
}

json to_json(const Coefficient& c) {
    json out = json::array();
    for (const auto& [pi_exp, value] : c.terms())
        out.push_back(json::array({pi_exp, to_json(value)}));
    return out;
}

json to_json(const PolyGaussian& f) {
    json scales = json::array();
    for (const FieldElem& s : f.scales()) scales.push_back(to_json(s));
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json exps = json::array();
        for (const VarExp& e : m) exps.push_back(json::array({e.bar, e.plain}));
        terms.push_back(json{{"exp", exps}, {"coeff", to_json(c)}});
    }
    return json{{"vars", f.num_vars()}, {"scales", scales}, {"terms", terms}};
}

json to_json(const KMForm& form) {
    json terms = json::array();
    for (const auto& [word, value] : form.terms()) {
        json gens = json::array();
        for (const WedgeGen& g : word.gens())
            gens.push_back(json::array({g.conjugated ? 1 : 0, g.k, g.j}));
        terms.push_back(json{{"word", json{{"sign", word.sign()}, {"gens", gens}}},
                             {"value", to_json(value)}});
    }
    return json{{"terms", terms}};
}

json to_json(const IkedaReport& rep) {
    return json{{"case", json::array({rep.p, rep.q})},
                {"result", rep.zero ? "zero" : "nonzero"},
                {"term_count", rep.term_count},
                {"case1_count", rep.case1_count},
                {"case2_count", rep.case2_count},
                {"elapsed", rep.elapsed_seconds}};
}

NumberFieldBasis field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_poly") || !j["min_poly"].is_array())
        throw ParseError("field: expected {\"min_poly\": [...]}");
    QVec coeffs;
    for (const auto& c : j["min_poly"]) coeffs.push_back(parse_rational(c));
    try {
        return NumberFieldBasis::from_min_poly(coeffs);
    } catch (const DomainError& e) {
        throw ParseError(std::string("field: ") + e.what());
    }
}

HermitianLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("disc") || !j.contains("rank") || !j.contains("gram"))
        throw ParseError("lattice: expected {\"disc\", \"rank\", \"gram\"}");
    if (!j["disc"].is_number_integer() || j["disc"].get<int>() >= 0)
        throw ParseError("lattice: disc must be a negative integer");
    const ImagQuadratic ring{j["disc"].get<int>()};
    if (!j["rank"].is_number_integer() || !j["gram"].is_array())
        throw ParseError("lattice: malformed rank or gram");
    const int rank = j["rank"].get<int>();
    const auto& gram_json = j["gram"];
    if (static_cast<int>(gram_json.size()) != rank)
        throw ParseError("lattice: gram size does not match rank");
    E0Mat gram(rank, E0Vec(rank));
    for (int i = 0; i < rank; ++i) {
        if (!gram_json[i].is_array() || static_cast<int>(gram_json[i].size()) != rank)
            throw ParseError("lattice: gram row size does not match rank");
        for (int k = 0; k < rank; ++k) {
            const auto& entry = gram_json[i][k];
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("lattice: gram entry must be a pair [a, b]");
            gram[i][k] = {parse_rational(entry[0]), parse_rational(entry[1])};
        }
    }
    try {
        return HermitianLattice(ring, std::move(gram));
    } catch (const DomainError& e) {
        throw ParseError(std::string("lattice: ") + e.what());
    }
}

VolumeTable volume_table_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("volumes: expected an array");
    VolumeTable table;
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("b") || !rec.contains("vol"))
            throw ParseError("volumes: each record needs \"b\" and \"vol\"");
        VolumeEntry e;
        if (!rec["b"].is_array()) throw ParseError("volumes: \"b\" must be a coordinate list");
        for (const auto& c : rec["b"]) e.b.push_back(parse_rational(c));
        e.vol = parse_rational(rec["vol"]);
        if (e.vol < 0) throw ParseError("volumes: vol must be nonnegative");
        e.index = rec.value("i", 0);
        e.mult = rec.value("mult", 1);
        if (e.mult < 1) throw ParseError("volumes: mult must be at least 1");
        table.push_back(std::move(e));
    }
    return table;
}

std::string qexpansion_csv(const NumberFieldBasis& F, const VolumeTable& table,
                           const std::vector<std::complex<double>>& tau) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::ostringstream out;
    for (int k = 0; k < F.degree(); ++k) out << "b" << k << ",";
    out << "abs,arg\n";
    std::set<QVec> bs;
    for (const VolumeEntry& e : table) bs.insert(e.b);
    out.precision(15);
    for (const QVec& b : bs) {
        Rational mass = 0;
        for (const VolumeEntry& e : table)
            if (e.b == b) mass += e.vol * e.mult;
        std::complex<double> phase = 0;
        for (int k = 0; k < F.degree(); ++k) phase += F.embed(k, b) * tau[k];
        const std::complex<double> coeff =
            to_double(mass) * std::exp(std::complex<double>(0, kTwoPi) * phase);
        for (int k = 0; k < F.degree(); ++k) out << rational_str(b[k]) << ",";
        out << std::abs(coeff) << "," << std::arg(coeff) << "\n";
    }
    return out.str();
}

}  // namespace kmlab

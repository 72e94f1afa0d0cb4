#pragma once

#include "kmlab/qisqrt2.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <string>

namespace kmlab {

// A finite Laurent sum sum_k c_k * pi^k with c_k in Q(i, sqrt2). Powers of pi
// are kept as a formal grading; they never mix with the field part.
class Coefficient {
  public:
    Coefficient() = default;
    Coefficient(FieldElem c, int pi_power = 0) {
        if (!c.is_zero()) terms_[pi_power] = std::move(c);
    }
    Coefficient(int n) : Coefficient(FieldElem(n)) {}
    Coefficient(Rational q) : Coefficient(FieldElem(std::move(q))) {}

    static Coefficient pi_power(int k) { return Coefficient(FieldElem(1), k); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, FieldElem>& terms() const { return terms_; }

    // True when the value is a single pi-grade with the given exponent.
    bool is_pure_grade(int k) const {
        return terms_.size() == 1 && terms_.begin()->first == k;
    }

    friend Coefficient operator+(const Coefficient& x, const Coefficient& y) {
        Coefficient r = x;
        for (const auto& [k, c] : y.terms_) r.add_term(k, c);
        return r;
    }
    friend Coefficient operator-(const Coefficient& x, const Coefficient& y) {
        Coefficient r = x;
        for (const auto& [k, c] : y.terms_) r.add_term(k, -c);
        return r;
    }
    friend Coefficient operator-(const Coefficient& x) {
        Coefficient r;
        for (const auto& [k, c] : x.terms_) r.terms_[k] = -c;
        return r;
    }
    friend Coefficient operator*(const Coefficient& x, const Coefficient& y) {
        Coefficient r;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) r.add_term(kx + ky, cx * cy);
        return r;
    }
    Coefficient& operator+=(const Coefficient& y) { return *this = *this + y; }
    Coefficient& operator-=(const Coefficient& y) { return *this = *this - y; }
    Coefficient& operator*=(const Coefficient& y) { return *this = *this * y; }

    // Division by a single-grade value c * pi^k.
    Coefficient divided_by(const FieldElem& c, int pi_pow) const {
        FieldElem inv = c.inverse();
        Coefficient r;
        for (const auto& [k, v] : terms_) r.terms_[k - pi_pow] = v * inv;
        return r;
    }

    Coefficient conj() const {
        Coefficient r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v.conj();
        return r;
    }

    friend bool operator==(const Coefficient& x, const Coefficient& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

    std::complex<double> to_complex() const {
        static const double pi = 3.14159265358979323846;
        std::complex<double> v = 0;
        for (const auto& [k, c] : terms_) v += c.to_complex() * std::pow(pi, k);
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (k != 0) s += "*pi^" + std::to_string(k);
        }
        return s;
    }

  private:
    void add_term(int k, const FieldElem& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, FieldElem> terms_;
};

}  // namespace kmlab

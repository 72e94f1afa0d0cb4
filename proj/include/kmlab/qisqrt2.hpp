#pragma once

#include "kmlab/errors.hpp"
#include "kmlab/rational.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <string>

namespace kmlab {

// An element of Q(i, sqrt 2), stored as a + b*i + c*sqrt2 + d*i*sqrt2 with
// exact rational components. Arithmetic uses i^2 = -1 and (sqrt2)^2 = 2.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(Rational a) : a_(std::move(a)) {}
    FieldElem(int a) : a_(a) {}
    FieldElem(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static FieldElem i() { return {0, 1, 0, 0}; }
    static FieldElem sqrt2() { return {0, 0, 1, 0}; }

    const Rational& one_part() const { return a_; }
    const Rational& i_part() const { return b_; }
    const Rational& sqrt2_part() const { return c_; }
    const Rational& i_sqrt2_part() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_real() const { return b_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
    }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
    }
    friend FieldElem operator-(const FieldElem& x) {
        return {-x.a_, -x.b_, -x.c_, -x.d_};
    }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        // (a + bi + cs + dis)(a' + b'i + c's + d'is), s = sqrt2.
        FieldElem r;
        r.a_ = x.a_ * y.a_ - x.b_ * y.b_ + 2 * (x.c_ * y.c_ - x.d_ * y.d_);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_ + 2 * (x.c_ * y.d_ + x.d_ * y.c_);
        r.c_ = x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_;
        r.d_ = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
        return r;
    }
    FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
    FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
    FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

    // Complex conjugation: i -> -i.
    FieldElem conj() const { return {a_, -b_, c_, -d_}; }

    // |x|^2 = x * conj(x); always real.
    FieldElem norm() const { return *this * conj(); }

    FieldElem inverse() const {
        if (is_zero()) throw DomainError("FieldElem: division by zero");
        // First clear i via the complex conjugate, leaving an element of
        // Q(sqrt2); then clear sqrt2 via its Galois conjugate.
        FieldElem n = norm();  // e + f*sqrt2
        const Rational& e = n.a_;
        const Rational& f = n.c_;
        Rational den = e * e - 2 * f * f;  // nonzero for nonzero n
        FieldElem real_inv{e / den, 0, -f / den, 0};
        return conj() * real_inv;
    }
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
        return x * y.inverse();
    }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
    friend bool operator<(const FieldElem& x, const FieldElem& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        if (x.c_ != y.c_) return x.c_ < y.c_;
        return x.d_ < y.d_;
    }

    // Sign of the real part a + c*sqrt2, computed exactly.
    int real_sign() const {
        if (a_ == 0 && c_ == 0) return 0;
        if (a_ >= 0 && c_ >= 0) return 1;
        if (a_ <= 0 && c_ <= 0) return -1;
        // Signs differ: compare a^2 against 2c^2; the summand with the larger
        // square dominates.
        int cmp = (a_ * a_ > 2 * c_ * c_) ? 1 : -1;
        return a_ > 0 ? cmp : -cmp;
    }

    std::complex<double> to_complex() const {
        static const double s = 1.4142135623730950488;
        return {to_double(a_) + to_double(c_) * s, to_double(b_) + to_double(d_) * s};
    }

    // Exact square root for the cases arising in rescaling: nonnegative
    // rationals q with q = r^2 or q = 2 r^2. Returns false if unsupported.
    bool try_sqrt(FieldElem& out) const {
        if (!is_rational() || a_ < 0) return false;
        auto rational_sqrt = [](const Rational& q, Rational& r) {
            Integer n = numerator(q), d = denominator(q);
            Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
            if (sn * sn != n || sd * sd != d) return false;
            r = Rational(sn, sd);
            return true;
        };
        Rational r;
        if (rational_sqrt(a_, r)) {
            out = FieldElem{r};
            return true;
        }
        if (rational_sqrt(a_ / 2, r)) {
            out = FieldElem{0, 0, r, 0};  // sqrt(2 r^2) = r sqrt2
            return true;
        }
        return false;
    }

    std::string str() const;

  private:
    Rational a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

inline std::string FieldElem::str() const {
    std::string s;
    auto app = [&s](const Rational& q, const char* unit) {
        if (q == 0) return;
        if (!s.empty() && q > 0) s += "+";
        if (q == -1 && *unit) s += "-";
        else if (q != 1 || !*unit) s += q.str();
        if (*unit) {
            if (q != 1 && q != -1) s += "*";
            s += unit;
        }
    };
    app(a_, "");
    app(b_, "i");
    app(c_, "sqrt2");
    app(d_, "i*sqrt2");
    return s.empty() ? "0" : s;
}

}  // namespace kmlab

#pragma once

#include "kmlab/polygauss.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kmlab {

// A generator xi_{jk} (or its conjugate) of the invariant-form algebra,
// 1 <= j <= p, 1 <= k <= q. Canonical order is (conjugated, k, j), which
// makes the identity-sorted full word equal to omega ^ conj(omega).
struct WedgeGen {
    bool conjugated = false;
    std::uint16_t k = 1;
    std::uint16_t j = 1;
    friend auto operator<=>(const WedgeGen&, const WedgeGen&) = default;
};

// An ordered wedge word in canonical form, with the sign of the sorting
// permutation absorbed into `sign`. A repeated generator collapses to the
// zero word (sign 0).
class WedgeWord {
  public:
    WedgeWord() = default;

    static WedgeWord from_sequence(std::vector<WedgeGen> gens) {
        WedgeWord w;
        w.sign_ = 1;
        // Insertion sort with transposition counting; exact and tiny inputs.
        for (std::size_t i = 1; i < gens.size(); ++i) {
            std::size_t pos = i;
            while (pos > 0 && gens[pos] < gens[pos - 1]) {
                std::swap(gens[pos], gens[pos - 1]);
                --pos;
                w.sign_ = -w.sign_;
            }
        }
        for (std::size_t i = 1; i < gens.size(); ++i)
            if (gens[i] == gens[i - 1]) return WedgeWord{};  // zero
        w.gens_ = std::move(gens);
        return w;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    const std::vector<WedgeGen>& gens() const { return gens_; }
    std::size_t degree() const { return gens_.size(); }

    // The same word with sign forced to +1 (for use as a map key).
    WedgeWord unsigned_key() const {
        WedgeWord w = *this;
        if (w.sign_ != 0) w.sign_ = 1;
        return w;
    }

    friend WedgeWord operator*(const WedgeWord& a, const WedgeWord& b) {
        if (a.is_zero() || b.is_zero()) return WedgeWord{};
        std::vector<WedgeGen> gens = a.gens_;
        gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
        WedgeWord w = WedgeWord::from_sequence(std::move(gens));
        w.sign_ *= a.sign_ * b.sign_;
        return w;
    }

    friend auto operator<=>(const WedgeWord&, const WedgeWord&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        for (const auto& g : gens_) {
            s += g.conjugated ? "xb" : "xi";
            s += "(" + std::to_string(g.j) + "," + std::to_string(g.k) + ")";
        }
        return s.empty() ? "1" : s;
    }

  private:
    std::vector<WedgeGen> gens_;
    int sign_ = 0;
};

// A formal sum of wedge words with PolyGaussian values, all over the same
// variable set and scales.
class KMForm {
  public:
    KMForm() = default;
    explicit KMForm(PolyGaussian scalar_part) {
        add(WedgeWord::from_sequence({}), std::move(scalar_part));
    }

    const std::map<WedgeWord, PolyGaussian>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const WedgeWord& w, const PolyGaussian& f) {
        if (w.is_zero() || f.is_zero()) return;
        PolyGaussian val = w.sign() < 0 ? -f : f;
        WedgeWord key = w.unsigned_key();
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(val));
            return;
        }
        it->second = it->second + val;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend KMForm operator*(const Coefficient& c, const KMForm& a) {
        KMForm r;
        for (const auto& [w, f] : a.terms_) r.add(w, c * f);
        return r;
    }

    friend KMForm operator+(const KMForm& a, const KMForm& b) {
        KMForm r = a;
        for (const auto& [w, f] : b.terms_) r.add(w, f);
        return r;
    }

    friend bool operator==(const KMForm& a, const KMForm& b) { return a.terms_ == b.terms_; }

  private:
    std::map<WedgeWord, PolyGaussian> terms_;
};

}  // namespace kmlab

#pragma once

#include <map>
#include <string>

#include "prelie/rational.hpp"

namespace prelie {

// Formal linear combination over a canonically ordered basis. Zero
// coefficients are never stored; iteration order is the basis order, so all
// downstream output is deterministic.
template <typename Basis>
class LinComb {
public:
    using Terms = std::map<Basis, Rational>;

    LinComb() = default;

    static LinComb single(const Basis& b, const Rational& c = Rational(1)) {
        LinComb out;
        out.add_term(b, c);
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Basis& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Basis& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [b, v] : terms_) v *= c;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    Rational coeff_sum() const {
        Rational s(0);
        for (const auto& [b, c] : terms_) s += c;
        return s;
    }

    bool operator==(const LinComb&) const = default;

private:
    Terms terms_;
};

// "3*(1 (2)) - (2 (1))"; empty combination prints as "0".
template <typename Basis, typename KeyFormat>
std::string format_lincomb(const LinComb<Basis>& v, KeyFormat&& format_key) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : v.terms()) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (a != 1) {
            out += to_string(a);
            out += '*';
        }
        out += format_key(b);
    }
    return out;
}

}  // namespace prelie

#pragma once

#include <map>
#include <string>
#include <vector>

#include "srt/matrix.hpp"

namespace srt {

// Exact multivariate Laurent polynomial with integer coefficients, keyed by
// exponent vectors. Variable names are carried for printing only; arithmetic
// identifies variables by position.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<std::string> names)
        : names_(std::move(names)) {}

    static LaurentPolynomial one(std::vector<std::string> names) {
        LaurentPolynomial p(std::move(names));
        p.add_term(std::vector<int>(p.names_.size(), 0), 1);
        return p;
    }

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exponents);
        if (it == terms_.end()) {
            terms_.emplace(exponents, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Int(0) : it->second;
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r(names_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<int> e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    LaurentPolynomial operator*(const Int& s) const {
        LaurentPolynomial r(names_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    Int eval_ones() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names_.size() > i ? names_[i] : "v" + std::to_string(i);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += c.str();
            else if (c == 1)
                out += mono;
            else if (c == -1)
                out += "-" + mono;
            else
                out += c.str() + "*" + mono;
        }
        return out;
    }

private:
    std::vector<std::string> names_;
    std::map<std::vector<int>, Int> terms_;
};

} // namespace srt

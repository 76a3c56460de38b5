#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace braidvar {

// Sparse multivariate polynomial over Rational, canonical by construction:
// no zero coefficients stored, terms ordered graded-lexicographically.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(int c) { if (c != 0) terms_[Monomial()] = c; }
    Polynomial(const Rational& c) { if (!braidvar::is_zero(c)) terms_[Monomial()] = c; }
    static Polynomial var(int index) { return term(Monomial::var(index), 1); }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (!braidvar::is_zero(c)) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_term() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    int degree_in(int var) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
        return d;
    }
    int max_variable() const {
        int v = 0;
        for (auto& [m, c] : terms_) v = std::max(v, m.max_variable());
        return v;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (braidvar::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (braidvar::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c) {
        if (braidvar::is_zero(c)) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    Polynomial pow(int e) const {
        if (e < 0) throw error("negative polynomial power");
        Polynomial r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact substitution. `point[i]` is the value of z_{i+1}; every variable
    // occurring in the polynomial must be covered. Works for any scalar with
    // ring ops and Rational multiplication (Rational, Jet, Polynomial).
    template <class S>
    S eval(const std::vector<S>& point) const {
        S acc{};
        for (auto& [m, c] : terms_) {
            S t = S(1);
            for (auto& [v, e] : m.entries()) {
                if (v < 1 || static_cast<std::size_t>(v) > point.size())
                    throw error("missing assignment for variable z" + std::to_string(v));
                for (int i = 0; i < e; ++i) t = t * point[v - 1];
            }
            acc = acc + t * c;
        }
        return acc;
    }

    Polynomial partial(int var) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            int e = m.exponent(var);
            if (e == 0) continue;
            Monomial q;
            m.divide(Monomial::var(var), q);
            r.add_term(q, c * e);
        }
        return r;
    }

    // Total differential helper: list of (variable, partial) for nonzero partials.
    std::vector<std::pair<int, Polynomial>> gradient() const {
        std::vector<std::pair<int, Polynomial>> g;
        for (int v = 1; v <= max_variable(); ++v) {
            Polynomial d = partial(v);
            if (!d.is_zero()) g.push_back({v, std::move(d)});
        }
        return g;
    }

    template <class F>
    Polynomial remap_variables(F&& f) const {
        Polynomial r;
        for (auto& [m, c] : terms_) r.add_term(m.remap(f), c);
        return r;
    }

    std::string to_string() const;
    static Polynomial parse(const std::string& text);

private:
    TermMap terms_;
};

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool unit_coef = (a == 1) && !m.is_one();
        if (!unit_coef) out << a.get_str();
        bool need_star = !unit_coef;
        for (auto& [v, e] : m.entries()) {
            if (need_star) out << "*";
            out << "z" << v;
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

// Textual syntax: terms like `3/2*z1^2*z3 - z2 + 1`, whitespace-insensitive.
inline Polynomial Polynomial::parse(const std::string& text) {
    Polynomial result;
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    if (i == n) throw parse_error("empty polynomial", i);
    bool expect_term = true;
    int sign = 1;
    while (i < n) {
        skip_ws();
        if (i == n) break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (expect_term && sign == 1 && c == '-') sign = -sign;
            else if (expect_term) throw parse_error("unexpected sign", i);
            else { sign = (c == '-') ? -1 : 1; expect_term = true; }
            ++i;
            continue;
        }
        if (!expect_term) throw parse_error("expected '+' or '-' between terms", i);
        // one term: factors separated by '*'
        Rational coef(1);
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < n && text[i] == '.') throw parse_error("decimal literal rejected, use p/q", i);
            if (i < n && (isdigit(static_cast<unsigned char>(text[i])))) {
                std::size_t start = i;
                while (i < n && (isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
                if (i < n && text[i] == '.') throw parse_error("decimal literal rejected, use p/q", i);
                coef *= parse_rational(text.substr(start, i - start));
            } else if (i < n && (text[i] == 'z' || text[i] == 'Z')) {
                ++i;
                std::size_t start = i;
                while (i < n && isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw parse_error("variable needs an index, e.g. z2", i);
                int var = std::stoi(text.substr(start, i - start));
                if (var < 1) throw parse_error("variable index must be >= 1", start);
                int exp = 1;
                skip_ws();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t estart = i;
                    while (i < n && isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    if (estart == i) throw parse_error("exponent expected after '^'", i);
                    exp = std::stoi(text.substr(estart, i - estart));
                }
                mono = mono * Monomial::var(var, exp);
            } else {
                throw parse_error("expected coefficient or variable", i);
            }
            saw_factor = true;
            skip_ws();
            if (i < n && text[i] == '*') { ++i; continue; }
            break;
        }
        if (!saw_factor) throw parse_error("empty term", i);
        result.add_term(mono, coef * sign);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw parse_error("dangling sign", i);
    return result;
}

}  // namespace braidvar

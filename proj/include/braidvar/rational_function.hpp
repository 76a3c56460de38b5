#pragma once

#include "jet.hpp"
#include "poly_gcd.hpp"
#include "polynomial.hpp"

namespace braidvar {

// Reduced fraction of polynomials. Canonical representative: num/den with the
// polynomial gcd divided out, both integer with coprime contents, and the
// denominator's graded-lex leading coefficient positive. Equality of canonical
// forms is plain structural equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) { normalize(); }
    RationalFunction(const Polynomial& p) : num_(p), den_(1) { normalize(); }
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("rational function with zero denominator");
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
        // Henrici: reduce by gcd of denominators before cross-multiplying.
        Polynomial g = poly_gcd(x.den_, y.den_);
        Polynomial yd = div_exact(y.den_, g), xd = div_exact(x.den_, g);
        return RationalFunction(x.num_ * yd + y.num_ * xd, x.den_ * yd);
    }
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
        return x + (-y);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
        Polynomial g1 = poly_gcd(x.num_, y.den_), g2 = poly_gcd(y.num_, x.den_);
        return RationalFunction(div_exact(x.num_, g1) * div_exact(y.num_, g2),
                                div_exact(x.den_, g2) * div_exact(y.den_, g1));
    }
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
        if (y.is_zero()) throw error("rational function division by zero");
        return x * y.reciprocal();
    }
    RationalFunction reciprocal() const {
        if (is_zero()) throw error("reciprocal of zero");
        return RationalFunction(den_, num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction pow(int e) const {
        if (e < 0) return reciprocal().pow(-e);
        RationalFunction r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Quotient rule; result canonical.
    RationalFunction partial(int var) const {
        Polynomial dn = num_.partial(var), dd = den_.partial(var);
        return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
    }

    template <class S>
    S eval(const std::vector<S>& point) const {
        S d = den_.eval(point);
        if (scalar_is_zero(d)) throw error("pole: denominator vanishes at the point");
        return num_.eval(point) / d;
    }

    // Signed degree in a variable; the multiplicative-degree functional used
    // by Laurent-monomial solving.
    int degree_in(int var) const { return num_.degree_in(var) - den_.degree_in(var); }
    int max_variable() const { return std::max(num_.max_variable(), den_.max_variable()); }

    std::string to_string() const {
        if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
        std::string n = num_.to_string(), d = den_.to_string();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + " / " + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (!(g.is_constant() && g.constant_term() == 1)) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        Rational cn = content(num_), cd = content(den_);
        Rational ratio = cn / cd;  // canonical p/q, q > 0
        num_ = primitive_part(num_) * Rational(ratio.get_num());
        den_ = primitive_part(den_) * Rational(ratio.get_den());
    }

    Polynomial num_, den_;
};

// Canonicalizing constructor as a free function.
inline RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

// value = f(point), gradient = exact partials of f at point.
inline Jet jet_eval(const RationalFunction& f, const std::vector<Rational>& point) {
    std::vector<Jet> seeded;
    seeded.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        seeded.push_back(Jet::seed(point[i], point.size(), i));
    return f.eval(seeded);
}

}  // namespace braidvar

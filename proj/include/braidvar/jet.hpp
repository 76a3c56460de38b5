#pragma once

#include <vector>

#include "rational.hpp"

namespace braidvar {

// First-order jet: value plus exact gradient. Gradients of different lengths
// broadcast (missing entries are zero), so plain constants need no dimension.
struct Jet {
    Rational value;
    std::vector<Rational> grad;

    Jet() : value(0) {}
    Jet(int v) : value(v) {}
    Jet(const Rational& v) : value(v) {}

    static Jet seed(const Rational& v, std::size_t dim, std::size_t index) {
        Jet j(v);
        j.grad.assign(dim, Rational(0));
        j.grad[index] = 1;
        return j;
    }

    Rational deriv(std::size_t i) const { return i < grad.size() ? grad[i] : Rational(0); }
};

inline Jet operator+(const Jet& x, const Jet& y) {
    Jet r(x.value + y.value);
    r.grad.resize(std::max(x.grad.size(), y.grad.size()), Rational(0));
    for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = x.deriv(i) + y.deriv(i);
    return r;
}

inline Jet operator-(const Jet& x, const Jet& y) {
    Jet r(x.value - y.value);
    r.grad.resize(std::max(x.grad.size(), y.grad.size()), Rational(0));
    for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = x.deriv(i) - y.deriv(i);
    return r;
}

inline Jet operator-(const Jet& x) {
    Jet r(-x.value);
    r.grad.reserve(x.grad.size());
    for (auto& g : x.grad) r.grad.push_back(-g);
    return r;
}

inline Jet operator*(const Jet& x, const Jet& y) {
    Jet r(x.value * y.value);
    r.grad.resize(std::max(x.grad.size(), y.grad.size()), Rational(0));
    for (std::size_t i = 0; i < r.grad.size(); ++i)
        r.grad[i] = x.value * y.deriv(i) + y.value * x.deriv(i);
    return r;
}

inline Jet operator/(const Jet& x, const Jet& y) {
    if (is_zero(y.value)) throw error("jet division by zero value (pole)");
    Jet r(x.value / y.value);
    Rational y2 = y.value * y.value;
    r.grad.resize(std::max(x.grad.size(), y.grad.size()), Rational(0));
    for (std::size_t i = 0; i < r.grad.size(); ++i)
        r.grad[i] = (x.deriv(i) * y.value - x.value * y.deriv(i)) / y2;
    return r;
}

inline Jet operator*(const Jet& x, const Rational& c) {
    Jet r(x.value * c);
    r.grad.reserve(x.grad.size());
    for (auto& g : x.grad) r.grad.push_back(g * c);
    return r;
}
inline Jet operator*(const Rational& c, const Jet& x) { return x * c; }

inline bool operator==(const Jet& x, const Jet& y) {
    if (x.value != y.value) return false;
    for (std::size_t i = 0; i < std::max(x.grad.size(), y.grad.size()); ++i)
        if (x.deriv(i) != y.deriv(i)) return false;
    return true;
}

// Invertibility test used by the scalar-templated pipelines.
inline bool scalar_is_zero(const Rational& r) { return is_zero(r); }
inline bool scalar_is_zero(const Jet& j) { return is_zero(j.value); }

}  // namespace braidvar

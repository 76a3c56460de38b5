#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace braidvar {

// Rational content: value c such that p = c * pp(p) with pp(p) an integer
// polynomial with coprime coefficients and positive leading coefficient.
inline Rational content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    Integer den_lcm = 1, num_gcd = 0;
    for (auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto& [m, c] : p.terms()) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) c = -c;
    return c;
}

inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    Polynomial r;
    for (auto& [m, v] : p.terms()) r.add_term(m, v / c);
    return r;
}

// Exact multivariate division: returns a/b if b divides a, nullopt otherwise.
inline std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    Polynomial rem = a, quot;
    while (!rem.is_zero()) {
        Monomial qm;
        if (!rem.leading_monomial().divide(b.leading_monomial(), qm)) return std::nullopt;
        Rational qc = rem.leading_coefficient() / b.leading_coefficient();
        Polynomial t = Polynomial::term(qm, qc);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

inline Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw error("inexact polynomial division");
    return *q;
}

inline bool divides(const Polynomial& b, const Polynomial& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return try_divide(a, b).has_value();
}

namespace detail {

// Dense view of p as a univariate polynomial in x with Polynomial coefficients.
inline std::vector<Polynomial> univariate_view(const Polynomial& p, int x) {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(p.degree_in(x)) + 1);
    for (auto& [m, c] : p.terms()) {
        int e = m.exponent(x);
        Monomial rest;
        m.divide(Monomial::var(x, e), rest);
        coeffs[e].add_term(rest, c);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

inline Polynomial from_univariate(const std::vector<Polynomial>& coeffs, int x) {
    Polynomial r;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        r += coeffs[e] * Polynomial::term(Monomial::var(x, static_cast<int>(e)), 1);
    return r;
}

inline int univ_degree(const std::vector<Polynomial>& u) {
    for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
        if (!u[d].is_zero()) return d;
    return -1;
}

// Pseudo-remainder of lc(B)^(deg A - deg B + 1) * A by B, univariate in x.
inline std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> A, const std::vector<Polynomial>& B) {
    int da = univ_degree(A), db = univ_degree(B);
    const Polynomial& lb = B[db];
    int steps = da - db + 1;
    while (true) {
        da = univ_degree(A);
        if (da < db) break;
        std::vector<Polynomial> next(A.size());
        const Polynomial& la = A[da];
        for (int e = 0; e <= da; ++e) next[e] = A[e] * lb;
        for (int e = 0; e <= db; ++e) next[e + da - db] -= la * B[e];
        next[da] = Polynomial();
        A = std::move(next);
        --steps;
    }
    // Keep the classical normalization lc(B)^(deg A - deg B + 1).
    Polynomial scale = lb.pow(steps > 0 ? steps : 0);
    if (steps > 0)
        for (auto& c : A) c = c * scale;
    int d = univ_degree(A);
    A.resize(static_cast<std::size_t>(d < 0 ? 0 : d) + 1);
    return A;
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// Content of p with respect to x: gcd of the coefficient polynomials.
inline Polynomial content_in(const std::vector<Polynomial>& u) {
    Polynomial g;
    for (auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_part(c) : gcd_primitive(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

// GCD of integer-primitive polynomials, primitive result, positive leading
// coefficient. Content extraction plus subresultant PRS, correctness over
// speed: all callers stay at desk scale (k <= 10).
inline Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a;
    if (divides(b, a)) return b;
    if (divides(a, b)) return a;

    int x = std::max(a.max_variable(), b.max_variable());
    auto ua = univariate_view(a, x), ub = univariate_view(b, x);
    Polynomial ca = content_in(ua), cb = content_in(ub);
    Polynomial cont_gcd = gcd_primitive(ca, cb);

    auto divall = [](std::vector<Polynomial>& u, const Polynomial& d) {
        if (d.is_constant() && d.constant_term() == 1) return;
        for (auto& c : u)
            if (!c.is_zero()) c = div_exact(c, d);
    };
    divall(ua, ca);
    divall(ub, cb);

    if (univ_degree(ua) < univ_degree(ub)) std::swap(ua, ub);
    // Subresultant PRS on the primitive parts.
    Polynomial g(1), h(1);
    while (true) {
        int da = univ_degree(ua), db = univ_degree(ub);
        int delta = da - db;
        auto r = pseudo_rem(ua, ub);
        if (univ_degree(r) < 0) break;
        if (univ_degree(r) == 0) {
            ub = {Polynomial(1)};
            break;
        }
        ua = std::move(ub);
        Polynomial divisor = g * h.pow(delta);
        ub = std::move(r);
        divall(ub, divisor);
        g = ua[univ_degree(ua)];
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = div_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
    // The PRS picks up content in the coefficient variables; strip it so the
    // result is primitive with respect to x before restoring cont_gcd.
    Polynomial tail = content_in(ub);
    divall(ub, tail);
    Polynomial prim = primitive_part(from_univariate(ub, x));
    return primitive_part(cont_gcd * prim);
}

}  // namespace detail

// GCD over Q: primitive integer representative with positive leading
// coefficient; gcd(p, 0) = pp(p); gcd(0, 0) = 0.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    return detail::gcd_primitive(primitive_part(a), primitive_part(b));
}

}  // namespace braidvar

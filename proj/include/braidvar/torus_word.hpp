#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace braidvar {

// Element of the exterior algebra over Q on abstract symbols eta_1..eta_n
// (eta_i = dlog w_i on a torus chart). Keys are strictly increasing symbol
// tuples; grading is by word length.
class TorusWord {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    TorusWord() = default;
    static TorusWord one() {
        TorusWord w;
        w.terms_[{}] = 1;
        return w;
    }
    static TorusWord eta(int i) {
        TorusWord w;
        w.terms_[{i}] = 1;
        return w;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Mixed-degree words never arise here; degree of 0 is -1.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }

    void add_term(std::vector<int> idx, Rational coef) {
        if (is_zero(coef)) return;
        int sign = 1;
        for (std::size_t a = 0; a + 1 < idx.size(); ++a)
            for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
                if (idx[b] > idx[b + 1]) {
                    std::swap(idx[b], idx[b + 1]);
                    sign = -sign;
                }
        for (std::size_t a = 0; a + 1 < idx.size(); ++a)
            if (idx[a] == idx[a + 1]) return;
        if (sign < 0) coef = -coef;
        auto [it, inserted] = terms_.try_emplace(std::move(idx), coef);
        if (!inserted) {
            it->second += coef;
            if (braidvar::is_zero(it->second)) terms_.erase(it);
        }
    }

    TorusWord& operator+=(const TorusWord& o) {
        for (auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    friend TorusWord operator+(TorusWord a, const TorusWord& b) { return a += b; }
    TorusWord operator-() const {
        TorusWord r = *this;
        for (auto& [idx, c] : r.terms_) c = -c;
        return r;
    }
    friend TorusWord operator-(TorusWord a, const TorusWord& b) { return a + (-b); }
    friend TorusWord operator*(const Rational& c, const TorusWord& a) {
        TorusWord r;
        for (auto& [idx, v] : a.terms_) r.add_term(idx, c * v);
        return r;
    }

    bool operator==(const TorusWord& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusWord& o) const { return !(*this == o); }

    // Renumber symbols (e.g. to embed a factor's algebra with an offset).
    template <class F>
    TorusWord remap(F&& f) const {
        TorusWord r;
        for (auto& [idx, c] : terms_) {
            std::vector<int> nid = idx;
            for (int& s : nid) s = f(s);
            r.add_term(std::move(nid), c);
        }
        return r;
    }

    std::string to_string() const;

private:
    static bool is_zero(const Rational& r) { return sgn(r) == 0; }
    Terms terms_;
};

inline TorusWord wedge(const TorusWord& a, const TorusWord& b) {
    TorusWord r;
    for (auto& [ia, ca] : a.terms())
        for (auto& [ib, cb] : b.terms()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

inline TorusWord wedge_pow(const TorusWord& a, int e) {
    TorusWord r = TorusWord::one();
    for (int i = 0; i < e; ++i) r = wedge(r, a);
    return r;
}

// alpha on U_fan: eta_{k-1} (the frozen dlog w).
inline TorusWord alpha_word(int k) {
    if (k < 2) throw error("alpha word needs k >= 2");
    return TorusWord::eta(k - 1);
}

// omega on U_fan: eta_{k-1} eta_{k-2} + sum_{i=1}^{k-3} eta_{i+1} eta_i.
inline TorusWord omega_word(int k) {
    if (k < 2) throw error("omega word needs k >= 2");
    TorusWord w;
    if (k == 2) return w;
    for (int i = 1; i <= k - 2; ++i) {
        TorusWord t = wedge(TorusWord::eta(i + 1), TorusWord::eta(i));
        w += t;
    }
    return w;
}

// The k classes 1, alpha, omega, alpha omega, ... : degree d is omega^{d/2}
// for even d and alpha omega^{(d-1)/2} for odd d. Each is checked nonzero and
// the basis relations are checked to hold in the exterior algebra.
std::vector<std::pair<int, TorusWord>> cohomology_basis(int k);

// Betti vector (1,...,1) of length k, derived from the basis count.
std::vector<int> betti(int k);

}  // namespace braidvar

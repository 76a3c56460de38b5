#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational_function.hpp"
#include "seed.hpp"

namespace braidvar {

// Exterior form with RationalFunction coefficients on dz basis elements
// dz_{i1} ^ ... ^ dz_{ip}, keys strictly increasing; antisymmetry lives in the
// sign bookkeeping on insertion.
class DifferentialForm {
public:
    using Terms = std::map<std::vector<int>, RationalFunction>;

    DifferentialForm() = default;
    explicit DifferentialForm(int degree) : degree_(degree) {}

    static DifferentialForm scalar(const RationalFunction& f) {
        DifferentialForm r(0);
        r.add_term({}, f);
        return r;
    }
    static DifferentialForm dz(int i) {
        DifferentialForm r(1);
        r.add_term({i}, RationalFunction(1));
        return r;
    }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coefficient(std::vector<int> idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    // Sorts the index tuple, tracking the permutation sign; repeated index
    // kills the term.
    void add_term(std::vector<int> idx, RationalFunction coef) {
        if (static_cast<int>(idx.size()) != degree_) throw error("form term degree mismatch");
        if (coef.is_zero()) return;
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
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DifferentialForm& operator+=(const DifferentialForm& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (degree_ != o.degree_) throw error("cannot add forms of different degree");
        for (auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    DifferentialForm operator-() const {
        DifferentialForm r = *this;
        for (auto& [idx, c] : r.terms_) c = -c;
        return r;
    }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a + (-b); }
    friend DifferentialForm operator*(const RationalFunction& f, const DifferentialForm& a) {
        DifferentialForm r(a.degree_);
        for (auto& [idx, c] : a.terms_) r.add_term(idx, f * c);
        return r;
    }

    bool operator==(const DifferentialForm& o) const {
        if (is_zero() && o.is_zero()) return true;
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int degree_ = 0;
    Terms terms_;
};

inline DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.is_zero() || b.is_zero()) return DifferentialForm();
    DifferentialForm r(a.degree() + b.degree());
    for (auto& [ia, ca] : a.terms())
        for (auto& [ib, cb] : b.terms()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

// d(f dz_I) = sum_i df/dz_i dz_i ^ dz_I with quotient-rule partials.
inline DifferentialForm exterior_derivative(const DifferentialForm& a) {
    if (a.is_zero()) return DifferentialForm();
    DifferentialForm r(a.degree() + 1);
    for (auto& [idx, c] : a.terms()) {
        for (int v = 1; v <= c.max_variable(); ++v) {
            RationalFunction dc = c.partial(v);
            if (dc.is_zero()) continue;
            std::vector<int> nid;
            nid.push_back(v);
            nid.insert(nid.end(), idx.begin(), idx.end());
            r.add_term(std::move(nid), dc);
        }
    }
    return r;
}

// dlog f = df / f as a 1-form.
inline DifferentialForm dlog(const RationalFunction& f) {
    if (f.is_zero()) throw error("dlog of zero");
    DifferentialForm r(1);
    for (int v = 1; v <= f.max_variable(); ++v) {
        RationalFunction df = f.partial(v);
        if (!df.is_zero()) r.add_term({v}, df / f);
    }
    return r;
}

// alpha = dlog Delta_{1,k+1} = (1/Delta_{1,k+1}) sum_i Delta_{1,i} Delta_{i,k+1} dz_i.
DifferentialForm alpha_form(int k);

// omega in z-coordinates; coefficient of dz_i ^ dz_j (i < j) is
// -Delta_{1,i} Delta_{i,j} Delta_{j,k+1} / Delta_{1,k+1}, the sign matching
// the sigma^3 / sigma^4 examples and the fan expansion.
DifferentialForm omega_form(int k);

// omega from the quiver of a chart seed: sum over arrows u -> v of
// dlog A_u ^ dlog A_v.
DifferentialForm omega_from_seed(const Seed& s);

// The fan-chart expansion of omega, expanded back into z-coordinates.
DifferentialForm omega_chart(int k);

// d Delta_{1n} / d z_i = Delta_{1i} Delta_{in} for all admissible (i, n);
// for i >= n both sides vanish by convention.
bool delta_derivative_check(int k);

// sum_{m=i}^{k} 1/(Delta_{1,m} Delta_{1,m+1}) = Delta_{i,k+1}/(Delta_{1,i} Delta_{1,k+1}).
bool fractions_check(int k, int i);

}  // namespace braidvar

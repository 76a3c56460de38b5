#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace braidvar {

// Sparse exponent vector. Entries are (variable index, exponent), sorted by
// variable index, no zero exponents stored. Variable indices are 1-based and
// match the z_1..z_n of the formulas.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
    }
    static Monomial var(int index, int exp = 1) {
        Monomial m;
        if (exp != 0) m.entries_.push_back({index, exp});
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : entries_) d += e;
        return d;
    }

    int exponent(int var) const {
        for (auto& [v, e] : entries_)
            if (v == var) return e;
        return 0;
    }

    int max_variable() const { return entries_.empty() ? 0 : entries_.back().first; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.entries_.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first))
                r.entries_.push_back(*a++);
            else if (a == entries_.end() || b->first < a->first)
                r.entries_.push_back(*b++);
            else {
                r.entries_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    // Quotient if divisible, otherwise false. Used by polynomial division.
    bool divide(const Monomial& by, Monomial& out) const {
        Monomial r;
        auto a = entries_.begin();
        for (auto& [v, e] : by.entries_) {
            while (a != entries_.end() && a->first < v) r.entries_.push_back(*a++);
            if (a == entries_.end() || a->first != v || a->second < e) return false;
            if (a->second > e) r.entries_.push_back({v, a->second - e});
            ++a;
        }
        while (a != entries_.end()) r.entries_.push_back(*a++);
        out = std::move(r);
        return true;
    }

    // Rename variables via index map (must be strictly increasing on the
    // occurring indices so sortedness is preserved). Used for window shifts.
    template <class F>
    Monomial remap(F&& f) const {
        Monomial r = *this;
        for (auto& [v, e] : r.entries_) v = f(v);
        std::sort(r.entries_.begin(), r.entries_.end());
        return r;
    }

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

// Graded lexicographic order with z_1 < z_2 < ...: compare total degree, then
// exponents from the highest variable downward. Fixes canonical forms and
// printing order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.entries().rbegin(), ib = b.entries().rbegin();
        while (ia != a.entries().rend() && ib != b.entries().rend()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        }
        return ib != b.entries().rend();
    }
};

}  // namespace braidvar

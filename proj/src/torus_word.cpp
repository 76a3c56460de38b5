#include "braidvar/torus_word.hpp"

#include <sstream>

namespace braidvar {

std::string TorusWord::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [idx, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (int s : idx) out << "*e" << s;
    }
    return out.str();
}

std::vector<std::pair<int, TorusWord>> cohomology_basis(int k) {
    if (k < 2) throw error("cohomology basis needs k >= 2");
    TorusWord a = alpha_word(k), w = omega_word(k);
    std::vector<std::pair<int, TorusWord>> basis;
    for (int d = 0; d < k; ++d) {
        TorusWord cls = (d % 2 == 0) ? wedge_pow(w, d / 2) : wedge(a, wedge_pow(w, (d - 1) / 2));
        if (cls.is_zero()) throw error("cohomology basis class of degree " + std::to_string(d) + " vanished");
        if (cls.degree() != d) throw error("cohomology basis class has wrong degree");
        basis.push_back({d, std::move(cls)});
    }
    // The stated relations: the next power(s) vanish.
    if (k % 2 == 0) {
        if (!wedge_pow(w, k / 2).is_zero()) throw error("relation omega^{k/2} = 0 fails");
    } else {
        if (!wedge(a, wedge_pow(w, (k - 1) / 2)).is_zero())
            throw error("relation alpha omega^{(k-1)/2} = 0 fails");
        if (!wedge_pow(w, (k + 1) / 2).is_zero()) throw error("relation omega^{(k+1)/2} = 0 fails");
    }
    return basis;
}

std::vector<int> betti(int k) {
    if (k < 1) throw error("betti needs k >= 1");
    if (k == 1) return {1};  // a point
    auto basis = cohomology_basis(k);
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (auto& [d, cls] : basis) counts[static_cast<std::size_t>(d)] += 1;
    for (int c : counts)
        if (c != 1) throw error("basis does not have exactly one class per degree");
    return counts;
}

}  // namespace braidvar

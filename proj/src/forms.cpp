#include "braidvar/forms.hpp"

#include <sstream>

#include "braidvar/positroid.hpp"

namespace braidvar {

std::string DifferentialForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [idx, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        for (int v : idx) out << " dz" << v;
    }
    return out.str();
}

DifferentialForm alpha_form(int k) {
    if (k < 2) throw error("alpha form needs k >= 2");
    Polynomial w = plucker_poly(k, 1, k + 1);
    RationalFunction inv_w = RationalFunction(Polynomial(1), w);
    DifferentialForm a(1);
    for (int i = 2; i <= k; ++i)
        a.add_term({i}, RationalFunction(plucker_poly(k, 1, i) * plucker_poly(k, i, k + 1)) * inv_w);
    return a;
}

DifferentialForm omega_form(int k) {
    if (k < 2) throw error("omega form needs k >= 2");
    Polynomial w = plucker_poly(k, 1, k + 1);
    RationalFunction inv_w = RationalFunction(Polynomial(1), w);
    DifferentialForm o(2);
    for (int i = 2; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            Polynomial num = plucker_poly(k, 1, i) * plucker_poly(k, i, j) * plucker_poly(k, j, k + 1);
            o.add_term({j, i}, RationalFunction(num) * inv_w);
        }
    return o;
}

DifferentialForm omega_from_seed(const Seed& s) {
    std::vector<DifferentialForm> dlogs;
    dlogs.reserve(s.variables.size());
    for (auto& v : s.variables) dlogs.push_back(dlog(v));
    DifferentialForm o;
    for (int u = 0; u < s.size(); ++u)
        for (int v = 0; v < s.size(); ++v) {
            int e = s.quiver.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (e <= 0) continue;  // each unordered pair contributes once, from its arrow
            DifferentialForm t = wedge(dlogs[static_cast<std::size_t>(u)], dlogs[static_cast<std::size_t>(v)]);
            for (int c = 0; c < e; ++c) o += t;
        }
    return o;
}

DifferentialForm omega_chart(int k) {
    if (k < 2) throw error("omega chart needs k >= 2");
    if (k == 2) return DifferentialForm();  // no mutable vertices, no arrows among {w}
    return omega_from_seed(triangulation_seed(k, fan_triangulation(k)));
}

bool delta_derivative_check(int k) {
    if (k < 2) throw error("delta derivative check needs k >= 2");
    for (int n = 2; n <= k + 1; ++n) {
        Polynomial d1n = plucker_poly(k, 1, n);
        for (int i = 2; i <= k; ++i) {
            Polynomial lhs = d1n.partial(i);
            Polynomial rhs;  // zero when the window is empty (i >= n)
            if (i < n) rhs = plucker_poly(k, 1, i) * plucker_poly(k, i, n);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool fractions_check(int k, int i) {
    if (!(2 <= i && i <= k)) throw error("fractions check needs 2 <= i <= k");
    RationalFunction sum;
    for (int m = i; m <= k; ++m)
        sum += RationalFunction(Polynomial(1), plucker_poly(k, 1, m) * plucker_poly(k, 1, m + 1));
    RationalFunction rhs(plucker_poly(k, i, k + 1),
                         plucker_poly(k, 1, i) * plucker_poly(k, 1, k + 1));
    return sum == rhs;
}

}  // namespace braidvar

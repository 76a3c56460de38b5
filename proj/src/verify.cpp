#include "braidvar/verify.hpp"

#include <functional>
#include <sstream>

#include "braidvar/cuts.hpp"
#include "braidvar/forms.hpp"
#include "braidvar/io_json.hpp"
#include "braidvar/seed.hpp"
#include "braidvar/torus_word.hpp"

namespace braidvar {

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string = pass, otherwise failure detail
};

std::string check_continuant_vs_product(int max_k) {
    for (int k = 1; k <= max_k; ++k) {
        PolyMat2 closed = braid_matrix(k), prod = braid_matrix_product(k);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (closed[r][c] != prod[r][c])
                    return "entry (" + std::to_string(r) + "," + std::to_string(c) +
                           ") differs at k=" + std::to_string(k);
    }
    return "";
}

std::string check_det_identity(int max_i) {
    for (int i = 0; i <= max_i; ++i)
        if (!det_identity(i)) return "fails at i=" + std::to_string(i);
    return "";
}

std::string check_plucker_relations(int max_k) {
    for (int k = 2; k <= max_k; ++k)
        for (int a = 1; a <= k + 1; ++a)
            for (int b = a + 1; b <= k + 1; ++b)
                for (int c = b + 1; c <= k + 1; ++c)
                    for (int d = c + 1; d <= k + 1; ++d)
                        if (!plucker_relation_check(k, a, b, c, d))
                            return "fails at k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
    return "";
}

std::string check_delta_from_f(int max_k) {
    for (int k = 1; k <= max_k; ++k) {
        std::vector<Polynomial> z;
        for (int t = 1; t <= k; ++t) z.push_back(Polynomial::var(t));
        auto cols = columns_from_z(z);
        for (int i = 1; i <= k + 1; ++i)
            for (int j = i + 1; j <= k + 1; ++j)
                if (det2(cols[static_cast<std::size_t>(i) - 1], cols[static_cast<std::size_t>(j) - 1]) !=
                    plucker_poly(k, i, j))
                    return "fails at k=" + std::to_string(k) + " (i,j)=(" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
    }
    return "";
}

std::string check_delta_derivative(int max_k) {
    for (int k = 2; k <= max_k; ++k)
        if (!delta_derivative_check(k)) return "fails at k=" + std::to_string(k);
    return "";
}

std::string check_fractions(int max_k) {
    for (int k = 2; k <= max_k; ++k)
        for (int i = 2; i <= k; ++i)
            if (!fractions_check(k, i))
                return "fails at k=" + std::to_string(k) + " i=" + std::to_string(i);
    return "";
}

std::string check_omega_chart(int max_k) {
    for (int k = 2; k <= max_k; ++k)
        if (omega_chart(k) != omega_form(k)) return "fails at k=" + std::to_string(k);
    // chart independence: every triangulation's quiver expands to the same form
    for (int k = 3; k <= std::min(max_k, 5); ++k)
        for (auto& t : all_triangulations(k + 1))
            if (omega_from_seed(triangulation_seed(k, t)) != omega_form(k))
                return "chart dependence at k=" + std::to_string(k);
    return "";
}

std::string check_closedness(int max_k) {
    for (int k = 2; k <= max_k; ++k) {
        if (!exterior_derivative(alpha_form(k)).is_zero())
            return "d(alpha) != 0 at k=" + std::to_string(k);
        if (!exterior_derivative(omega_form(k)).is_zero())
            return "d(omega) != 0 at k=" + std::to_string(k);
    }
    return "";
}

std::string check_cohomology(int max_k) {
    for (int k = 1; k <= max_k; ++k) {
        auto bv = betti(k);
        if (static_cast<int>(bv.size()) != k) return "betti length wrong at k=" + std::to_string(k);
        for (int c : bv)
            if (c != 1) return "betti entry != 1 at k=" + std::to_string(k);
    }
    return "";
}

std::string check_flip_mutation(int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        for (auto& t : all_triangulations(n)) {
            Quiver q = quiver_from_triangulation(t);
            for (auto& d : t.diagonals) {
                Triangulation ft = flip(t, d);
                Quiver qf = quiver_from_triangulation(ft);
                Quiver qm = mutate_quiver(q, q.index_of(d));
                // the mutated vertex keeps its old label; relabel to the flipped diagonal
                Diagonal nd;
                for (auto& e : ft.diagonals)
                    if (!t.diagonals.count(e)) nd = e;
                qm.labels[static_cast<std::size_t>(q.index_of(d))] = nd;
                // compare as labeled graphs (vertex order differs)
                for (int u = 0; u < qf.size(); ++u)
                    for (int v = 0; v < qf.size(); ++v) {
                        int um = qm.index_of(qf.labels[static_cast<std::size_t>(u)]);
                        int vm = qm.index_of(qf.labels[static_cast<std::size_t>(v)]);
                        if (qf.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
                            qm.eps[static_cast<std::size_t>(um)][static_cast<std::size_t>(vm)])
                            return "flip/mutation mismatch on n=" + std::to_string(n);
                    }
            }
        }
    }
    return "";
}

std::string check_quasi_equivalence(int max_k) {
    for (int k = 3; k <= max_k; ++k)
        for (auto& spec : all_cut_specs(k)) {
            auto [big, prod] = cut_freezing_seeds(k, spec.i, spec.j);
            QuasiReport rep = quasi_equivalence_check(big, prod);
            if (!rep.pass())
                return "fails at k=" + std::to_string(k) + " (i,j)=(" + std::to_string(spec.i) + "," +
                       std::to_string(spec.j) + ")";
        }
    return "";
}

std::string check_cut_glue(int max_k, int trials, std::uint64_t seed) {
    for (int k = 3; k <= max_k; ++k)
        for (auto& spec : all_cut_specs(k)) {
            Sampler rng(seed);
            int done = 0, attempts = 0;
            while (done < trials && attempts < trials * 100) {
                ++attempts;
                PositroidMatrix m = sample_variety_matrix(k, rng);
                if (is_zero(plucker(m, spec.i, spec.j))) continue;
                CutPair pair = cut(m, spec);
                if (!pair.left.is_unit() || !pair.right.is_unit())
                    return "cut factors not unit at k=" + std::to_string(k);
                if (!(glue(pair, spec) == m))
                    return "glue(cut(M)) != M at k=" + std::to_string(k) + " (i,j)=(" +
                           std::to_string(spec.i) + "," + std::to_string(spec.j) + ")";
                CutPair back = cut(glue(pair, spec), spec);
                if (!(back.left == pair.left && back.right == pair.right))
                    return "cut(glue(P)) != P at k=" + std::to_string(k);
                ++done;
            }
            if (done < trials) return "sampling exhausted at k=" + std::to_string(k);
        }
    return "";
}

std::string check_type_a(int max_k, int trials, std::uint64_t seed) {
    for (int k = 4; k <= max_k; ++k)
        for (int ip = 1; ip <= k; ++ip)
            for (int jp = ip + 2; jp <= k + 1; ++jp) {
                if (ip == 1 && jp == k + 1) continue;
                for (int i = ip; i < jp; ++i)
                    for (int j = i + 2; j <= jp; ++j) {
                        if (i == ip && j == jp) continue;
                        if (i == 1 && j == k + 1) continue;
                        auto rep = verify_type_a(k, i, j, ip, jp, trials, seed);
                        if (!rep.pass()) return rep.name + " fails";
                    }
            }
    return "";
}

std::string check_type_b(int max_k, int trials, std::uint64_t seed) {
    for (int k = 4; k <= max_k; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 2; j <= k + 1; ++j) {
                if (i == 1 && j == k + 1) continue;
                for (int ip = j; ip <= k; ++ip)
                    for (int jp = ip + 2; jp <= k + 1; ++jp) {
                        if (ip == 1 && jp == k + 1) continue;
                        auto rep = verify_type_b(k, i, j, ip, jp, trials, seed);
                        if (!rep.corrected.pass()) return rep.corrected.name + " fails with correction";
                        if (rep.uncorrected_failures == 0)
                            return rep.corrected.name + ": uncorrected square produced no counterexample";
                    }
            }
    return "";
}

std::string check_pullback_point(int max_k, int trials, std::uint64_t seed) {
    for (int k = 3; k <= max_k; ++k)
        for (auto& spec : all_cut_specs(k)) {
            auto rep = pullback_point_check(spec, trials, seed);
            if (!rep.pass()) return rep.name + " fails";
        }
    return "";
}

std::string check_pullback_cohomology(int max_k) {
    for (int k = 3; k <= max_k; ++k)
        for (auto& spec : all_cut_specs(k)) {
            auto pm = pullback_cohomology_matrix(spec);
            if (pm.rank != k)
                return "rank " + std::to_string(pm.rank) + " != k at k=" + std::to_string(k) +
                       " (i,j)=(" + std::to_string(spec.i) + "," + std::to_string(spec.j) + ")";
        }
    return "";
}

}  // namespace

VerifyReport run_verify_all(int max_k, int trials, std::uint64_t seed) {
    if (max_k < 2) throw error("verify needs max_k >= 2");
    VerifyReport report;
    report.max_k = max_k;
    report.trials = trials;
    report.seed = seed;

    std::vector<Check> registry = {
        {"continuant-vs-braid-matrix-product", [&] { return check_continuant_vs_product(max_k); }},
        {"det-identity", [&] { return check_det_identity(max_k); }},
        {"plucker-relations", [&] { return check_plucker_relations(max_k); }},
        {"delta-from-f", [&] { return check_delta_from_f(max_k); }},
        {"delta-derivative", [&] { return check_delta_derivative(max_k); }},
        {"fractions", [&] { return check_fractions(max_k); }},
        {"omega-chart-vs-omega-form", [&] { return check_omega_chart(std::min(max_k, 6)); }},
        {"closedness", [&] { return check_closedness(std::min(max_k, 6)); }},
        {"cohomology-basis-betti", [&] { return check_cohomology(max_k); }},
        {"flip-mutation-compatibility", [&] { return check_flip_mutation(std::min(max_k + 1, 7)); }},
        {"quasi-equivalence-freezing", [&] { return check_quasi_equivalence(max_k); }},
        {"cut-glue-roundtrips", [&] { return check_cut_glue(max_k, trials, seed); }},
        {"type-a-diagrams", [&] { return check_type_a(max_k, trials, seed); }},
        {"type-b-diagrams", [&] { return check_type_b(max_k, trials, seed); }},
        {"pullback-point", [&] { return check_pullback_point(max_k, trials, seed); }},
        {"pullback-cohomology-rank", [&] { return check_pullback_cohomology(max_k); }},
    };

    for (auto& check : registry) {
        CheckResult r;
        r.name = check.name;
        try {
            std::string detail = check.run();
            r.status = detail.empty() ? "pass" : "fail";
            r.detail = detail;
        } catch (const std::exception& e) {
            r.status = "fail";
            r.detail = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    out << "verify max-k=" << max_k << " trials=" << trials << " seed=" << seed << "\n";
    for (auto& c : checks) {
        out << (c.status == "pass" ? "PASS" : c.status == "skip" ? "SKIP" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << (all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    return out.str();
}

std::string VerifyReport::to_json_string() const {
    json j;
    j["suite"] = "verify";
    j["parameters"] = {{"max_k", max_k}, {"trials", trials}, {"seed", seed}};
    json checks_json = json::array();
    for (auto& c : checks)
        checks_json.push_back(json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    j["checks"] = checks_json;
    j["pass"] = all_pass();
    return j.dump(2) + "\n";
}

}  // namespace braidvar

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "braidvar/cuts.hpp"
#include "braidvar/forms.hpp"
#include "braidvar/io_json.hpp"
#include "braidvar/seed.hpp"
#include "braidvar/torus_word.hpp"
#include "braidvar/verify.hpp"

namespace bv = braidvar;
using bv::json;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BRAIDVAR_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

bv::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bv::error("cannot open file: " + path);
    bv::json j;
    in >> j;
    return j;
}

std::set<bv::Diagonal> parse_diagonals(const std::string& text) {
    std::set<bv::Diagonal> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t dash = piece.find('-');
        if (dash == std::string::npos) throw bv::parse_error("diagonal must look like 1-3", pos);
        out.insert({std::stoi(piece.substr(0, dash)), std::stoi(piece.substr(dash + 1))});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string diagonals_to_string(const std::set<bv::Diagonal>& ds) {
    std::string s;
    for (auto& d : ds) {
        if (!s.empty()) s += ",";
        s += std::to_string(d.first) + "-" + std::to_string(d.second);
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic models of two-strand braid varieties: positroid matrices, "
                 "type-A cluster charts, the forms alpha and omega, and diagonal cut/glue maps."};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::uint64_t seed = default_seed();
    int trials = 100;
    int max_k = 5;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--seed", seed, "PRNG seed (default: BRAIDVAR_SEED env or 0)");
    app.add_option("--trials", trials, "trials per randomized check");
    app.add_option("--max-k", max_k, "largest braid word length to verify");

    // continuant
    auto* cont = app.add_subcommand("continuant", "print the continuant polynomial F_k");
    int cont_k = 0;
    std::string window;
    cont->add_option("--k", cont_k, "number of crossings")->required();
    cont->add_option("--window", window, "variable window i..j (default 1..k)");
    cont->callback([&] {
        int lo = 1, hi = cont_k;
        if (!window.empty()) {
            auto dots = window.find("..");
            if (dots == std::string::npos) throw bv::parse_error("window must look like 2..5", 0);
            lo = std::stoi(window.substr(0, dots));
            hi = std::stoi(window.substr(dots + 2));
        }
        bv::Polynomial f = bv::continuant_window(hi - lo + 1, lo);
        if (as_json)
            std::cout << bv::polynomial_to_json(f).dump() << "\n";
        else
            std::cout << f.to_string() << "\n";
    });

    // variety check
    auto* variety = app.add_subcommand("variety", "braid variety membership");
    auto* vcheck = variety->add_subcommand("check", "test F_k = 0, or recover z_1 from chart coordinates");
    int vk = 0;
    std::string point_text;
    vcheck->add_option("--k", vk, "number of crossings")->required();
    vcheck->add_option("--point", point_text, "comma-separated rationals")->required();
    vcheck->callback([&] {
        auto pt = bv::parse_point(point_text);
        json out;
        if (static_cast<int>(pt.size()) == vk) {
            bool on = bv::on_variety(pt);
            out = {{"k", vk}, {"on_variety", on}};
            if (!as_json) std::cout << (on ? "on" : "off") << "\n";
        } else if (static_cast<int>(pt.size()) == vk - 1) {
            bv::Rational z1 = bv::solve_z1(pt);
            std::vector<bv::Rational> full{z1};
            full.insert(full.end(), pt.begin(), pt.end());
            bool on = bv::on_variety(full);
            out = {{"k", vk}, {"z1", z1.get_str()}, {"on_variety", on}};
            if (!as_json) std::cout << (on ? "on" : "off") << " z1=" << z1.get_str() << "\n";
        } else {
            throw bv::error("point needs k or k-1 coordinates");
        }
        if (as_json) std::cout << out.dump() << "\n";
    });

    // positroid
    auto* positroid = app.add_subcommand("positroid", "2 x (k+1) matrix model");
    auto* fromz = positroid->add_subcommand("from-z", "matrix of a full z-tuple");
    std::string z_text;
    fromz->add_option("--z", z_text, "comma-separated z_1..z_k")->required();
    fromz->callback([&] {
        auto m = bv::z_to_matrix(bv::parse_point(z_text));
        std::cout << bv::matrix_to_json(m).dump() << "\n";
    });
    auto* toz = positroid->add_subcommand("to-z", "recover z parameters of a normalized matrix");
    std::string matrix_file;
    toz->add_option("--file", matrix_file, "matrix JSON file")->required();
    toz->callback([&] {
        auto m = bv::matrix_from_json(load_json_file(matrix_file));
        auto z = bv::matrix_to_z(m);
        if (as_json) {
            json arr = json::array();
            for (auto& r : z) arr.push_back(r.get_str());
            std::cout << json{{"z", arr}}.dump() << "\n";
        } else {
            std::string s;
            for (auto& r : z) s += (s.empty() ? "" : ",") + r.get_str();
            std::cout << s << "\n";
        }
    });
    auto* pluck = positroid->add_subcommand("plucker", "minor det(v_i, v_j)");
    int pi = 0, pj = 0;
    std::string pluck_file;
    pluck->add_option("--i", pi)->required();
    pluck->add_option("--j", pj)->required();
    pluck->add_option("--file", pluck_file, "matrix JSON file")->required();
    pluck->callback([&] {
        auto m = bv::matrix_from_json(load_json_file(pluck_file));
        auto d = bv::plucker(m, pi, pj);
        if (as_json)
            std::cout << json{{"i", pi}, {"j", pj}, {"value", d.get_str()}}.dump() << "\n";
        else
            std::cout << d.get_str() << "\n";
    });

    // cluster
    auto* cluster = app.add_subcommand("cluster", "triangulations, quivers, seeds");
    auto* fan = cluster->add_subcommand("fan", "fan triangulation of the (k+1)-gon");
    int fan_k = 0;
    fan->add_option("--k", fan_k)->required();
    fan->callback([&] {
        auto t = bv::fan_triangulation(fan_k);
        if (as_json) {
            json arr = json::array();
            for (auto& d : t.diagonals) arr.push_back({d.first, d.second});
            std::cout << json{{"n", t.n}, {"diagonals", arr}}.dump() << "\n";
        } else {
            std::cout << diagonals_to_string(t.diagonals) << "\n";
        }
    });
    auto* quiver_cmd = cluster->add_subcommand("quiver", "quiver of a triangulation chart");
    int quiver_k = 0;
    std::string quiver_diagonals;
    quiver_cmd->add_option("--k", quiver_k)->required();
    quiver_cmd->add_option("--diagonals", quiver_diagonals, "e.g. 1-3,1-4 (default: fan)");
    quiver_cmd->callback([&] {
        bv::Triangulation t = quiver_diagonals.empty()
                                  ? bv::fan_triangulation(quiver_k)
                                  : bv::Triangulation(quiver_k + 1, parse_diagonals(quiver_diagonals));
        std::cout << bv::quiver_to_json(bv::quiver_from_triangulation(t)).dump() << "\n";
    });
    auto* flip_cmd = cluster->add_subcommand("flip", "flip a diagonal");
    int flip_k = 0;
    std::string flip_diagonals, flip_d;
    flip_cmd->add_option("--k", flip_k)->required();
    flip_cmd->add_option("--diagonals", flip_diagonals, "triangulation (default: fan)");
    flip_cmd->add_option("--d", flip_d, "diagonal to flip, e.g. 1-4")->required();
    flip_cmd->callback([&] {
        bv::Triangulation t = flip_diagonals.empty()
                                  ? bv::fan_triangulation(flip_k)
                                  : bv::Triangulation(flip_k + 1, parse_diagonals(flip_diagonals));
        auto ds = parse_diagonals(flip_d);
        if (ds.size() != 1) throw bv::error("--d takes exactly one diagonal");
        auto flipped = bv::flip(t, *ds.begin());
        std::cout << diagonals_to_string(flipped.diagonals) << "\n";
    });
    auto* quasi = cluster->add_subcommand("quasi-check", "quasi-equivalence under freezing Delta_ij");
    int qk = 0, qi = 0, qj = 0;
    quasi->add_option("--k", qk)->required();
    quasi->add_option("--i", qi)->required();
    quasi->add_option("--j", qj)->required();
    quasi->callback([&] {
        auto [big, prod] = bv::cut_freezing_seeds(qk, qi, qj);
        auto rep = bv::quasi_equivalence_check(big, prod);
        if (as_json) {
            json lines = json::array();
            for (auto& l : rep.lines)
                lines.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
            std::cout << json{{"pass", rep.pass()}, {"lines", lines}}.dump() << "\n";
        } else {
            for (auto& l : rep.lines)
                std::cout << (l.pass ? "PASS  " : "FAIL  ") << l.name
                          << (l.detail.empty() ? "" : "  (" + l.detail + ")") << "\n";
        }
        if (!rep.pass()) throw bv::error("quasi-equivalence check failed");
    });

    // forms
    auto* forms = app.add_subcommand("forms", "the regular forms alpha and omega");
    auto* alpha_cmd = forms->add_subcommand("alpha", "the one-form dlog Delta_{1,k+1}");
    int ak = 0;
    alpha_cmd->add_option("--k", ak)->required();
    alpha_cmd->callback([&] {
        auto f = bv::alpha_form(ak);
        std::cout << (as_json ? bv::form_to_json(f).dump() : f.to_string()) << "\n";
    });
    auto* omega_cmd = forms->add_subcommand("omega", "the cluster two-form");
    int ok = 0;
    std::string chart = "z";
    omega_cmd->add_option("--k", ok)->required();
    omega_cmd->add_option("--chart", chart, "z (closed formula) or fan (chart expansion)")
        ->check(CLI::IsMember({"z", "fan"}));
    omega_cmd->callback([&] {
        auto f = chart == "fan" ? bv::omega_chart(ok) : bv::omega_form(ok);
        std::cout << (as_json ? bv::form_to_json(f).dump() : f.to_string()) << "\n";
    });
    auto* basis_cmd = forms->add_subcommand("basis", "cohomology basis on the fan chart");
    int bk = 0;
    basis_cmd->add_option("--k", bk)->required();
    basis_cmd->callback([&] {
        auto basis = bv::cohomology_basis(bk);
        if (as_json) {
            json arr = json::array();
            for (auto& [d, w] : basis) arr.push_back({{"degree", d}, {"word", w.to_string()}});
            std::cout << arr.dump() << "\n";
        } else {
            for (auto& [d, w] : basis) std::cout << "deg " << d << ": " << w.to_string() << "\n";
        }
    });

    // cut
    auto* cut_cmd = app.add_subcommand("cut", "diagonal cut and glue maps");
    auto* apply_cmd = cut_cmd->add_subcommand("apply", "cut the canonical matrix of a chart point");
    int ck = 0, ci = 0, cj = 0;
    std::string point_file;
    apply_cmd->add_option("--k", ck)->required();
    apply_cmd->add_option("--i", ci)->required();
    apply_cmd->add_option("--j", cj)->required();
    apply_cmd->add_option("--point-file", point_file, "JSON {\"coords\": [\"...\"]} with z_2..z_k")->required();
    apply_cmd->callback([&] {
        auto j = load_json_file(point_file);
        std::vector<bv::Rational> coords;
        for (auto& c : j.at("coords")) coords.push_back(bv::parse_rational(c.get<std::string>()));
        bv::VarietyPoint point(ck, std::move(coords));
        bv::PositroidMatrix m(bv::canonical_columns(point.coords));
        bv::CutSpec spec(ck, ci, cj);
        auto pair = bv::cut(m, spec);
        std::cout << json{{"left", bv::matrix_to_json(pair.left)},
                          {"right", bv::matrix_to_json(pair.right)}}
                         .dump()
                  << "\n";
    });
    auto* glue_cmd = cut_cmd->add_subcommand("glue", "glue two factor matrices");
    int gk = 0, gi = 0, gj = 0;
    std::string left_file, right_file;
    glue_cmd->add_option("--k", gk)->required();
    glue_cmd->add_option("--i", gi)->required();
    glue_cmd->add_option("--j", gj)->required();
    glue_cmd->add_option("--left", left_file)->required();
    glue_cmd->add_option("--right", right_file)->required();
    glue_cmd->callback([&] {
        bv::CutPair pair{bv::matrix_from_json(load_json_file(left_file)),
                         bv::matrix_from_json(load_json_file(right_file))};
        auto m = bv::glue(pair, bv::CutSpec(gk, gi, gj));
        std::cout << bv::matrix_to_json(m).dump() << "\n";
    });
    auto* ta = cut_cmd->add_subcommand("verify-type-a", "nested double-cut diagram");
    auto* tb = cut_cmd->add_subcommand("verify-type-b", "disjoint double-cut diagram with T correction");
    int sa = 2, sb = 2, sc = 2;
    for (auto* sub : {ta, tb}) {
        sub->add_option("--a", sa)->required();
        sub->add_option("--b", sb)->required();
        sub->add_option("--c", sc)->required();
    }
    ta->callback([&] {
        if (sa < 2 || sb < 2 || sc < 2) throw bv::error("type A needs a, b, c >= 2");
        int k = sa + sb + sc - 2;
        auto rep = bv::verify_type_a(k, 1, sa + 1, 1, sa + sb, trials, seed);
        std::cout << (as_json ? bv::report_to_json(rep).dump(): rep.name + (rep.pass() ? ": pass" : ": FAIL")) << "\n";
        if (!rep.pass()) throw bv::error("type A diagram failed");
    });
    tb->callback([&] {
        if (sa < 2 || sb < 2 || sc < 2) throw bv::error("type B needs a, b, c >= 2");
        int k = sa + sb + sc - 2;
        auto rep = bv::verify_type_b(k, 1, sa + 1, sa + 1, sa + sc + 1, trials, seed);
        if (as_json) {
            json j = bv::report_to_json(rep.corrected);
            j["uncorrected_failures"] = rep.uncorrected_failures;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rep.corrected.name << (rep.pass() ? ": pass" : ": FAIL")
                      << " (uncorrected square fails on " << rep.uncorrected_failures << "/"
                      << rep.corrected.trials << " trials)\n";
        }
        if (!rep.pass()) throw bv::error("type B diagram failed");
    });
    auto* pull = cut_cmd->add_subcommand("pullback", "pullback of alpha and omega through the cut");
    int uk = 0, ui = 0, uj = 0;
    std::string mode = "point";
    pull->add_option("--k", uk)->required();
    pull->add_option("--i", ui)->required();
    pull->add_option("--j", uj)->required();
    pull->add_option("--mode", mode)->check(CLI::IsMember({"point", "cohomology"}));
    pull->callback([&] {
        bv::CutSpec spec(uk, ui, uj);
        if (mode == "point") {
            auto rep = bv::pullback_point_check(spec, trials, seed);
            std::cout << (as_json ? bv::report_to_json(rep).dump()
                                  : rep.name + (rep.pass() ? ": pass" : ": FAIL"))
                      << "\n";
            if (!rep.pass()) throw bv::error("pullback point check failed");
        } else {
            auto pm = bv::pullback_cohomology_matrix(spec);
            if (as_json) {
                json rows = json::array();
                for (auto& row : pm.matrix) {
                    json r = json::array();
                    for (auto& v : row) r.push_back(v.get_str());
                    rows.push_back(r);
                }
                std::cout << json{{"rank", pm.rank}, {"matrix", rows}}.dump() << "\n";
            } else {
                std::cout << "rank " << pm.rank << " (expected " << uk << ")\n";
            }
            if (pm.rank != uk) throw bv::error("pullback cohomology map is not injective");
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full identity suite");
    verify_cmd->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto report = bv::run_verify_all(max_k, trials, seed);
        auto t1 = std::chrono::steady_clock::now();
        std::cout << (as_json ? report.to_json_string() : report.to_text());
        std::cerr << "elapsed "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
        if (!report.all_pass()) throw bv::error("verification failures");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bv::parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const bv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

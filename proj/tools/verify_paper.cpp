#include "cli.hpp"

#include "treewalk/derive.hpp"
#include "treewalk/derived_io.hpp"
#include "treewalk/graph_io.hpp"
#include "treewalk/isomorphism.hpp"
#include "treewalk/partition.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include "treewalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace treewalk::cli {

namespace {

IntPoly poly(std::vector<long long> descending)
{
    std::vector<BigInt> c(descending.begin(), descending.end());
    return IntPoly::from_descending(std::move(c));
}

/// x²⁰(x+6)³(x−24)
IntPoly stated_btl6_char_poly()
{
    return IntPoly::monomial(1, 20) * poly({1, 6}).pow(3) * poly({1, -24});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

PaperCheck guarded(const std::string& name, const std::string& expected,
                   const std::function<std::pair<bool, std::string>()>& body)
{
    PaperCheck c{name, false, "", expected};
    try {
        auto [ok, measured] = body();
        c.passed = ok;
        c.measured = std::move(measured);
    } catch (const std::exception& e) {
        c.passed = false;
        c.measured = std::string("error: ") + e.what();
    }
    return c;
}

} // namespace

std::vector<PaperCheck> run_paper_checks(const std::filesystem::path& fixtures)
{
    const auto load = [&](const std::string& name) { return load_graph(fixtures / (name + ".edges")); };
    std::vector<PaperCheck> out;

    out.push_back(guarded("c8_charpoly", "x^8 - 8x^6 + 20x^4 - 16x^2", [&] {
        const auto p = char_poly_exact(adjacency_matrix(load("c8").simple()));
        return std::pair{p == poly({1, 0, -8, 0, 20, 0, -16, 0, 0}), p.to_string()};
    }));

    out.push_back(guarded("gamma8_two_trivalent_vertices", "vertices 2 and 3 of degree 3, no others", [&] {
        const auto g = load("gamma8");
        std::string measured;
        std::size_t count = 0;
        for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
            if (g.degree(v) == 3) {
                measured += (count++ ? "," : "") + std::to_string(v);
            }
        }
        return std::pair{measured == "2,3", "degree-3 vertices {" + measured + "}"};
    }));

    out.push_back(guarded("gamma8_six_tree_count", "4", [&] {
        const auto n = enumerate_k_trees(load("gamma8"), 6).size();
        return std::pair{n == 4, std::to_string(n)};
    }));

    out.push_back(guarded("gamma8_six_tree_graph_is_k4", "isomorphic to K4", [&] {
        const auto d = k_tree_graph(load("gamma8"), 6);
        const bool iso = isomorphic(d.graph(), complete_graph(4));
        return std::pair{iso, std::to_string(d.vertex_count()) + " vertices, " + std::to_string(d.edge_count()) +
                                  " edges"};
    }));

    out.push_back(guarded("btl6_quotient_6(J-I)", "4 classes, quotient 6(J-I)", [&] {
        const auto s = btl_class_structure(load("gamma8"), 6);
        const IntMatrix b = s.quotient();
        IntMatrix target = IntMatrix::Constant(4, 4, 6);
        target.diagonal().setZero();
        const bool ok = b.rows() == 4 && b == target;
        return std::pair{ok, std::to_string(s.vertex_count) + " vertices in " + std::to_string(s.class_trees.size()) +
                                 " classes"};
    }));

    out.push_back(guarded("btl6_charpoly", "x^20(x + 6)^3(x - 24)", [&] {
        const auto s = btl_class_structure(load("gamma8"), 6);
        const auto quotient_poly = char_poly_exact(s.quotient());
        const auto zeros = s.vertex_count - s.class_trees.size();
        const auto stated = stated_btl6_char_poly();
        const bool ok = stated.degree() == static_cast<int>(s.vertex_count) &&
                        IntPoly::monomial(1, zeros) * quotient_poly == stated;
        const auto inner = quotient_poly.zero_root_multiplicity();
        return std::pair{ok, "x^" + std::to_string(zeros + inner) + factored_form(quotient_poly.shift_down(inner))};
    }));

    out.push_back(guarded("multipartite_6666", "x^20(x + 6)^3(x - 24)", [&] {
        const auto p = multipartite_char_poly({6, 6, 6, 6});
        return std::pair{p == stated_btl6_char_poly(), factored_form(p)};
    }));

    const auto btl3 = [&] { return derive_iterated(load("gamma8"), DeriveKind::BipartiteTreeLine, 3); };

    out.push_back(guarded("btl3_class_count", "16", [&] {
        const auto n = tree_partition(btl3()).size();
        return std::pair{n == 16, std::to_string(n)};
    }));

    out.push_back(guarded("btl3_star_class_size", "3", [&] {
        const auto d = btl3();
        const auto p = tree_partition(d);
        std::vector<std::uint32_t> vs{1, 2, 3, 4};
        std::vector<Edge> es{{1, 2}, {2, 3}, {2, 4}};
        const auto cls = p.find_class(make_subgraph(d.base(), vs, es));
        const auto n = cls ? p.classes[*cls].size() : 0;
        return std::pair{n == 3, std::to_string(n)};
    }));

    out.push_back(guarded("btl3_quotient_spectrum", "contains -2, sqrt(2), -sqrt(2)", [&] {
        const auto d = btl3();
        const auto q = quotient_matrix(d, tree_partition(d));
        const auto ev = eigenvalues_numeric(q.b);
        const auto has = [&](double x) {
            return std::any_of(ev.begin(), ev.end(), [&](double e) { return std::abs(e - x) <= 1e-9; });
        };
        std::ostringstream m;
        m << "-2:" << yes_no(has(-2.0)) << " sqrt2:" << yes_no(has(std::sqrt(2.0)))
          << " -sqrt2:" << yes_no(has(-std::sqrt(2.0)));
        return std::pair{has(-2.0) && has(std::sqrt(2.0)) && has(-std::sqrt(2.0)), m.str()};
    }));

    out.push_back(guarded("btl3_quotient_aperiodic", "Aperiodic", [&] {
        const auto d = btl3();
        const auto v = periodicity_classify(quotient_matrix(d, tree_partition(d)).b, MatrixOrigin::Quotient);
        return std::pair{v.status == Periodicity::Aperiodic, to_string(v.status)};
    }));

    const auto table = [&](const char* label) {
        const auto d = derive_iterated(load("gamma8"), DeriveKind::TreeLine, 3);
        const auto t = infinitesimal_table(d, static_cast<std::uint32_t>(resolve_label(d, label)), 1e-3);
        return t.count(RowClass::Neighbor);
    };
    out.push_back(guarded("table1_v_neighbors", "6", [&] {
        const auto n = table("{{{1,2},{2,3}},{{2,3},{2,4}}}");
        return std::pair{n == 6, std::to_string(n)};
    }));
    out.push_back(guarded("table1_w_neighbors", "5", [&] {
        const auto n = table("{{{2,4},{1,2}},{{1,2},{2,3}}}");
        return std::pair{n == 5, std::to_string(n)};
    }));

    out.push_back(guarded("cycles_fixed_under_tl", "tl^k C_n is C_n for n=3..12, k=1..4", [&] {
        std::string failures;
        for (int n = 3; n <= 12; ++n) {
            const auto g = load("c" + std::to_string(n));
            for (std::uint32_t k = 1; k <= 4; ++k) {
                bool ok = false;
                try {
                    ok = isomorphic(derive_iterated(g, DeriveKind::TreeLine, k).graph(), cycle_graph(n));
                } catch (const NotConnected&) {
                    ok = false;
                }
                if (!ok) {
                    failures += (failures.empty() ? "" : " ") + std::string("(") + std::to_string(n) + "," +
                                std::to_string(k) + ")";
                }
            }
        }
        return std::pair{failures.empty(), failures.empty() ? "all cycles" : "not a cycle at " + failures};
    }));

    out.push_back(guarded("periodicity_captions", "C4 periodic, C8 not periodic", [&] {
        const auto c4 = periodicity_classify(adjacency_matrix(load("c4").simple()));
        const auto c8 = periodicity_classify(adjacency_matrix(load("c8").simple()));
        const auto s4 = periodic_return_scan(adjacency_matrix(load("c4").simple()));
        const auto s8 = periodic_return_scan(adjacency_matrix(load("c8").simple()));
        const bool ok = c4.status == Periodicity::PeriodicInteger && c8.status == Periodicity::Aperiodic &&
                        s4.time.has_value() && !s8.time.has_value();
        return std::pair{ok, "C4 " + to_string(c4.status) + ", C8 " + to_string(c8.status)};
    }));

    out.push_back(guarded("k4_eigenvalues", "-1 (x3), 3", [&] {
        const auto ev = eigenvalues_numeric(adjacency_matrix(load("k4").simple()));
        const bool ok = ev.size() == 4 && std::abs(ev[0] + 1) < 1e-9 && std::abs(ev[2] + 1) < 1e-9 &&
                        std::abs(ev[3] - 3) < 1e-9;
        std::ostringstream m;
        for (double e : ev) {
            m << e << " ";
        }
        return std::pair{ok, m.str()};
    }));

    out.push_back(guarded("btl_equitability_suite", "every btl tree partition equitable", [&] {
        std::string failures;
        std::size_t checked = 0;
        std::vector<std::string> names{"gamma8", "c5", "c6", "k4", "p4"};
        for (const auto& name : names) {
            const auto g = load(name);
            auto d = DerivedGraph::level_zero(g, DeriveKind::BipartiteTreeLine);
            for (std::uint32_t k = 1; k <= 4; ++k) {
                try {
                    d = derive_step(d, DeriveKind::BipartiteTreeLine);
                } catch (const NotConnected&) {
                    break;
                }
                ++checked;
                if (!is_equitable(d, tree_partition(d))) {
                    failures += " " + name + "@" + std::to_string(k);
                }
            }
        }
        return std::pair{failures.empty(), std::to_string(checked) + " levels checked" +
                                               (failures.empty() ? "" : ", not equitable:" + failures)};
    }));

    out.push_back(guarded("generalized_line_graph_tl3", "XX^T - 2I = A at tl^3 of gamma8", [&] {
        const auto d = derive_iterated(load("gamma8"), DeriveKind::TreeLine, 3);
        const bool ok = incidence_factorization_check(d);
        return std::pair{ok, yes_no(ok)};
    }));

    return out;
}

} // namespace treewalk::cli

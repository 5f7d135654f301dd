#include "oracles.hpp"

#include "treewalk/derive.hpp"
#include "treewalk/derived_io.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace treewalk;

namespace {

constexpr double pi = std::numbers::pi;

IntMatrix adj(const std::string& name) { return adjacency_matrix(oracle::fixture(name).simple()); }

/// exp(iAt) by a scaled Taylor series, independent of the eigensolver.
Eigen::MatrixXcd taylor_exp(const IntMatrix& a, double t)
{
    const auto n = a.rows();
    int squarings = 0;
    double norm = a.cast<double>().cwiseAbs().rowwise().sum().maxCoeff() * std::abs(t);
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    const Eigen::MatrixXcd x = a.cast<double>().cast<Complex>() * Complex(0, t / std::pow(2.0, squarings));
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * x / double(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

} // namespace

TEST_SUITE("walk") {
TEST_CASE("basic values")
{
    const WalkOperator k2(adj("k2"));
    CHECK((k2.at(0) - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);
    CHECK(std::abs(k2.amplitude(1, 0, pi / 2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(amplitude(adj("k2"), 0, 1, pi / 2) - Complex(0, 1)) < 1e-12);

    const WalkOperator c4(adj("c4"));
    CHECK(c4.min_return_magnitude(pi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c4.min_return_magnitude(pi / 2) < 0.5);
    CHECK(c4.spectrum().size() == 3);
}

TEST_CASE("projectors resolve the identity and the generator")
{
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const WalkOperator w(adj(name));
        const auto n = static_cast<Eigen::Index>(w.dimension());
        const auto theta = w.spectrum();
        const auto e = w.projectors();
        REQUIRE(theta.size() == e.size());
        Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t r = 0; r < e.size(); ++r) {
            CHECK((e[r] * e[r] - e[r]).norm() < 1e-9);
            CHECK((e[r] - e[r].transpose()).norm() < 1e-9);
            for (std::size_t s = r + 1; s < e.size(); ++s) {
                CHECK((e[r] * e[s]).norm() < 1e-9);
            }
            sum += e[r];
            weighted += theta[r] * e[r];
        }
        CHECK((sum - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-9);
        CHECK((weighted - w.generator()).norm() < 1e-9);
    }
}

TEST_CASE("unitarity, symmetry and the group law")
{
    std::vector<IntMatrix> inputs;
    for (const auto& name : oracle::all_fixtures()) {
        inputs.push_back(adj(name));
    }
    inputs.push_back(adjacency_matrix(derive_iterated(oracle::fixture("gamma8"), DeriveKind::TreeLine, 3).graph()));
    for (const auto& a : inputs) {
        const WalkOperator w(a);
        const auto n = a.rows();
        for (double t : {0.3, 1.7, 12.5}) {
            const auto h = w.at(t);
            CHECK((h.adjoint() * h - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-10);
            CHECK((h - h.transpose()).norm() < 1e-10);
            CHECK((w.at(t + 0.9) - h * w.at(0.9)).norm() < 1e-10);
            CHECK((h - taylor_exp(a, t)).norm() < 1e-8);
        }
    }
}

TEST_CASE("first-order expansion bound")
{
    const auto a = adj("gamma8");
    const WalkOperator w(a);
    const auto n = a.rows();
    const double norm2 = (a.cast<double>() * a.cast<double>()).norm();
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const Eigen::MatrixXcd first =
            Eigen::MatrixXcd::Identity(n, n) + Complex(0, eps) * a.cast<double>().cast<Complex>();
        CHECK((w.at(eps) - first).norm() <= eps * eps * norm2);
    }
}

TEST_CASE("laplacian generator")
{
    const WalkOperator w(adj("c4"), Hamiltonian::Laplacian);
    CHECK(w.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.generator().rowwise().sum().norm() < 1e-12);
}

TEST_CASE("input validation")
{
    IntMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(WalkOperator{m}, std::invalid_argument);
    CHECK_THROWS_AS(WalkOperator{IntMatrix::Zero(2, 3)}, DimensionMismatch);
}

TEST_CASE("scans")
{
    const auto c4 = periodic_return_scan(adj("c4"));
    REQUIRE(c4.time);
    CHECK(*c4.time == doctest::Approx(pi).epsilon(1e-8));

    const auto k4 = periodic_return_scan(adj("k4"));
    REQUIRE(k4.time);
    CHECK(*k4.time == doctest::Approx(pi / 2).epsilon(1e-8));

    const auto p3 = periodic_return_scan(adj("p3"));
    REQUIRE(p3.time);
    CHECK(*p3.time == doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-8));

    for (const auto* name : {"c5", "c8"}) {
        CAPTURE(name);
        const auto r = periodic_return_scan(adj(name));
        CHECK_FALSE(r.time);
        CHECK(r.best_value < 1 - 1e-6);
    }

    const auto k2 = pst_scan(adj("k2"), 0, 1);
    REQUIRE(k2.time);
    CHECK(*k2.time == doctest::Approx(pi / 2).epsilon(1e-8));

    const auto p3pst = pst_scan(adj("p3"), 0, 2);
    REQUIRE(p3pst.time);
    CHECK(*p3pst.time == doctest::Approx(pi / std::sqrt(2.0)).epsilon(1e-8));

    CHECK_FALSE(pst_scan(adj("c4"), 0, 1).time);
    CHECK_THROWS_AS((void)pst_scan(adj("c4"), 1, 1), std::invalid_argument);
}

TEST_CASE("scan agrees with the periodicity verdict")
{
    // Integer or √Δ spectra with a bipartite-compatible ratio return; the
    // others found no return within t_max on these inputs.
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const auto a = adj(name);
        const auto verdict = periodicity_classify(a);
        const auto scan = periodic_return_scan(a);
        if (verdict.status == Periodicity::Aperiodic) {
            CHECK_FALSE(scan.time);
        } else {
            CHECK(scan.time);
        }
    }
}

TEST_CASE("infinitesimal amplitude table at v and w")
{
    const auto d = derive_iterated(oracle::fixture("gamma8"), DeriveKind::TreeLine, 3);
    const auto v = static_cast<std::uint32_t>(resolve_label(d, "{{{1,2},{2,3}},{{2,3},{2,4}}}"));
    const auto w = static_cast<std::uint32_t>(resolve_label(d, "{{{2,4},{1,2}},{{1,2},{2,3}}}"));
    const double eps = 1e-3;
    for (auto [start, degree] : {std::pair{v, 6U}, std::pair{w, 5U}}) {
        const auto t = infinitesimal_table(d, start, eps);
        CHECK(t.rows.size() == d.vertex_count());
        CHECK(t.count(RowClass::Diagonal) == 1);
        CHECK(t.count(RowClass::Neighbor) == degree);
        CHECK(t.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
        for (const auto& row : t.rows) {
            const double mag = std::abs(row.exact);
            switch (row.row_class) {
            case RowClass::Diagonal:
                CHECK(mag == doctest::Approx(1.0).epsilon(eps * eps * degree));
                break;
            case RowClass::Neighbor:
                CHECK(mag == doctest::Approx(eps).epsilon(0.01));
                break;
            case RowClass::NonNeighbor:
                CHECK(mag < 30 * eps * eps);
                break;
            }
            CHECK(std::abs(row.exact - row.first_order) < 50 * eps * eps);
        }
    }
    CHECK_FALSE(d.graph().adjacent(v, w));
    const auto tv = infinitesimal_table(d, v, eps);
    CHECK(tv.rows[w].row_class == RowClass::NonNeighbor);
    CHECK(table_to_csv(tv).find("label,re,im,abs,class") == 0);
    CHECK(table_to_json(tv, d.base())["rows"].size() == d.vertex_count());

    CHECK_THROWS_AS((void)infinitesimal_table(d, v, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)infinitesimal_table(d, v, 0.2), std::invalid_argument);
    CHECK_THROWS_AS((void)infinitesimal_table(d, 9999, 0.01), UnknownVertex);
}
}

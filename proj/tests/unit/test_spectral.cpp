#include "oracles.hpp"

#include "treewalk/derive.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/isomorphism.hpp"
#include "treewalk/polynomial.hpp"
#include "treewalk/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace treewalk;

namespace {

IntPoly desc(std::vector<BigInt> c) { return IntPoly::from_descending(std::move(c)); }

IntMatrix adj(const std::string& name) { return adjacency_matrix(oracle::fixture(name).simple()); }

/// Checks p against det(xI − A) at deg+1 integer points, which pins a monic degree-n polynomial.
void check_against_determinant(const IntMatrix& a)
{
    const auto p = char_poly_exact(a);
    REQUIRE(p.degree() == a.rows());
    REQUIRE(p.is_monic());
    for (long long x = -3; x <= a.rows() - 2; ++x) {
        REQUIRE(p.eval(BigInt(x)) == oracle::char_poly_at(a, x));
    }
}

/// Squarefree part by naive trial division.
BigInt naive_squarefree(long long m)
{
    m = m < 0 ? -m : m;
    long long out = 1;
    for (long long d = 2; d * d <= m; ++d) {
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % 2 == 1) {
            out *= d;
        }
    }
    return BigInt(out * m);
}

} // namespace

TEST_SUITE("polynomial") {
TEST_CASE("arithmetic and evaluation")
{
    const auto p = desc({1, 0, -2});
    const auto q = desc({1, -3});
    CHECK((p * q) == desc({1, -3, -2, 6}));
    CHECK((p * q).eval(BigInt(3)) == 0);
    CHECK(p.pow(2) == desc({1, 0, -4, 0, 4}));
    CHECK(p.derivative() == desc({2, 0}));
    CHECK((p - p).is_zero());
    CHECK(desc({6, 4}).content() == 2);
    CHECK(desc({-6, 4}).content() == -2);
    CHECK(desc({6, 4}).primitive_part() == desc({3, 2}));
    CHECK(IntPoly::monomial(1, 3).zero_root_multiplicity() == 3);
    CHECK(desc({1, 0, -1, 0, 0}).shift_down(2) == desc({1, 0, -1}));
    CHECK(desc({1, 0, -8, 0, 20, 0, -16, 0, 0}).to_string() == "x^8 - 8x^6 + 20x^4 - 16x^2");
    CHECK(std::abs(p.eval(std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("division and gcd")
{
    const auto a = desc({1, -3}) * desc({1, 0, -2}).pow(2);
    const auto b = desc({1, 0, -2}) * desc({1, 5});
    CHECK(exact_divide(a, desc({1, 0, -2})) == desc({1, -3}) * desc({1, 0, -2}));
    CHECK_THROWS_AS((void)exact_divide(a, desc({1, 5})), std::domain_error);
    CHECK(gcd(a, b) == desc({1, 0, -2}));
    CHECK(gcd(desc({2, 4}), desc({3, 6})) == desc({1, 2}));
    CHECK(gcd(desc({1, 1}), desc({1, -1})).degree() == 0);
    const auto r = pseudo_remainder(desc({1, 0, 1}), desc({2, 1}));
    CHECK(r.degree() <= 0);
}

TEST_CASE("squarefree decomposition reproduces the polynomial")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly f = IntPoly::constant(1 + trial % 3);
        for (int k = 0; k < 3; ++k) {
            IntPoly factor = desc({1, coef(rng), coef(rng)});
            f = f * factor.pow(1 + static_cast<unsigned>(trial + k) % 3);
        }
        const auto parts = squarefree_decomposition(f);
        IntPoly product = IntPoly::constant(1);
        for (const auto& [s, m] : parts) {
            REQUIRE(gcd(s, s.derivative()).degree() == 0);
            product = product * s.pow(m);
        }
        // Equal up to the content of f.
        REQUIRE(exact_divide(f, product).degree() == 0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                REQUIRE(gcd(parts[i].first, parts[j].first).degree() == 0);
            }
        }
    }
}

TEST_CASE("integer roots")
{
    const auto p = IntPoly::monomial(1, 2) * desc({1, 2}) * desc({1, -2}) * desc({1, 0, -2}).pow(2);
    const auto r = integer_roots(p);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0] == std::pair<BigInt, unsigned>{-2, 1});
    CHECK(r.roots[1] == std::pair<BigInt, unsigned>{0, 2});
    CHECK(r.roots[2] == std::pair<BigInt, unsigned>{2, 1});
    CHECK(r.count() == 4);
    CHECK(r.remainder == desc({1, 0, -2}).pow(2));

    const auto big = desc({1, -1'000'003}).pow(2) * desc({1, 17});
    const auto rb = integer_roots(big);
    REQUIRE(rb.roots.size() == 2);
    CHECK(rb.roots[1] == std::pair<BigInt, unsigned>{1'000'003, 2});
    CHECK(rb.remainder.degree() == 0);

    // 2x − 1 has a rational but no integer root.
    CHECK(integer_roots(desc({2, -1})).roots.empty());
}

TEST_CASE("real root isolation")
{
    const auto p = desc({1, 0, -2}) * desc({1, -3}) * desc({1, 0, 1});
    const auto roots = real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(roots[2] == doctest::Approx(3.0));
    auto intervals = isolate_real_roots(p);
    REQUIRE(intervals.size() == 3);
    refine_root(p, intervals[1], BigRational(1, 1'000'000));
    CHECK(intervals[1].hi - intervals[1].lo < BigRational(1, 1'000'000));
    CHECK(p.sign_at(intervals[1].lo) != p.sign_at(intervals[1].hi));
}

TEST_CASE("factored form")
{
    CHECK(factored_form(desc({1, 0, -8, 0, 20, 0, -16, 0, 0})) == "x^2(x + 2)(x - 2)(x^2 - 2)^2");
    CHECK(factored_form(desc({1, 0, -6, -8, -3})) == "(x + 1)^3(x - 3)");
    CHECK(factored_form(desc({2, 0, -4})) == "2·(x^2 - 2)");
}
}

TEST_SUITE("spectral") {
TEST_CASE("Berkowitz agrees with determinants on random matrices")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 9;
        check_against_determinant(oracle::random_matrix(rng, n, -3, 3, trial % 2 == 0));
    }
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        check_against_determinant(adj(name));
    }
}

TEST_CASE("characteristic polynomial examples")
{
    CHECK(char_poly_exact(adj("c8")) == desc({1, 0, -8, 0, 20, 0, -16, 0, 0}));
    CHECK(char_poly_exact(IntMatrix::Zero(3, 3)) == IntPoly::monomial(1, 3));
    CHECK(char_poly_exact(adj("k4")) == desc({1, -3}) * desc({1, 1}).pow(3));
    CHECK(char_poly_exact(IntMatrix(0, 0)) == IntPoly::constant(1));
    CHECK_THROWS_AS((void)char_poly_exact(IntMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("multipartite formula against Berkowitz")
{
    std::vector<std::vector<std::size_t>> all;
    for (std::size_t parts = 1; parts <= 4; ++parts) {
        std::vector<std::size_t> sizes(parts, 1);
        while (true) {
            all.push_back(sizes);
            std::size_t i = 0;
            while (i < parts && sizes[i] == 4) {
                sizes[i++] = 1;
            }
            if (i == parts) {
                break;
            }
            ++sizes[i];
        }
    }
    for (const auto& sizes : all) {
        CAPTURE(sizes.size());
        REQUIRE(multipartite_char_poly(sizes) == char_poly_exact(multipartite_adjacency(sizes)));
    }
    CHECK(multipartite_char_poly({6, 6, 6, 6}) == IntPoly::monomial(1, 20) * desc({1, 6}).pow(3) * desc({1, -18}));
    CHECK(isomorphic(graph_from_adjacency(multipartite_adjacency({1, 1, 1, 1})), complete_graph(4)));
}

TEST_CASE("squarefree part")
{
    for (long long m = -200; m <= 2000; ++m) {
        if (m != 0) {
            REQUIRE(squarefree_part(BigInt(m)) == naive_squarefree(m));
        }
    }
    CHECK(squarefree_part(0) == 0);
    CHECK(squarefree_part(BigInt(1'000'003)) == 1'000'003);
    CHECK(squarefree_part(BigInt(1'000'003) * 1'000'033) == BigInt(1'000'003) * 1'000'033);
    CHECK(squarefree_part(BigInt(1'000'000'007) * 1'000'000'007 * 12) == 3);
    CHECK_THROWS_AS((void)squarefree_part(BigInt(1'000'000'007) * 1'000'000'009), FactorizationLimit);
}

TEST_CASE("periodicity desk set")
{
    struct Case {
        std::string name;
        Periodicity status;
        int delta;
        bool bipartite;
    };
    for (const auto& c : std::vector<Case>{{"k2", Periodicity::PeriodicInteger, 0, true},
                                           {"c4", Periodicity::PeriodicInteger, 0, true},
                                           {"c6", Periodicity::PeriodicInteger, 0, true},
                                           {"k4", Periodicity::PeriodicInteger, 0, false},
                                           {"p3", Periodicity::PeriodicSqrt, 2, true},
                                           {"c3", Periodicity::PeriodicInteger, 0, false},
                                           {"c5", Periodicity::Aperiodic, 0, false},
                                           {"c8", Periodicity::Aperiodic, 0, true},
                                           {"p4", Periodicity::Aperiodic, 0, true}}) {
        CAPTURE(c.name);
        const auto v = periodicity_classify(adj(c.name));
        CHECK(v.status == c.status);
        CHECK(v.delta == c.delta);
        REQUIRE(v.bipartite);
        CHECK(*v.bipartite == c.bipartite);
        CHECK_FALSE(v.evidence.empty());
    }
    const auto star = adjacency_matrix(oracle::make(4, {{1, 2}, {1, 3}, {1, 4}}).simple());
    CHECK(periodicity_classify(star).status == Periodicity::PeriodicSqrt);
    CHECK(periodicity_classify(star).delta == 3);
    const auto star4 = adjacency_matrix(oracle::make(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}).simple());
    CHECK(periodicity_classify(star4).status == Periodicity::PeriodicInteger);
    // ±√2 together with ±√3: squares are integers, squarefree parts differ.
    const auto mixed = adjacency_matrix(oracle::make(7, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {4, 7}}).simple());
    const auto mv = periodicity_classify(mixed);
    CHECK(mv.status == Periodicity::Aperiodic);
    CHECK(mv.evidence.find("squarefree parts") != std::string::npos);
    CHECK_FALSE(periodicity_classify(adj("c4"), MatrixOrigin::Quotient).bipartite);
}

TEST_CASE("integer verdicts match numeric eigenvalues")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_connected(rng, 2 + trial % 7, trial % 4);
        const auto a = adjacency_matrix(g.simple());
        const auto v = periodicity_classify(a);
        const auto eig = eigenvalues_numeric(a);
        const bool all_integer = std::all_of(eig.begin(), eig.end(), [](double x) {
            return std::abs(x - std::round(x)) < 1e-7;
        });
        CHECK((v.status == Periodicity::PeriodicInteger) == all_integer);
    }
}

TEST_CASE("numeric eigenvalues")
{
    const auto c6 = eigenvalues_numeric(adj("c6"));
    const std::vector<double> expected{-2, -1, -1, 1, 1, 2};
    REQUIRE(c6.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(c6[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    }
    IntMatrix ns(2, 2);
    ns << 0, 1, 2, 1;
    const auto e = eigenvalues_numeric(ns);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == doctest::Approx(-1.0));
    CHECK(e[1] == doctest::Approx(2.0));
    IntMatrix rot(2, 2);
    rot << 0, -1, 1, 0;
    CHECK_THROWS_AS((void)eigenvalues_numeric(rot), NumericalFailure);

    const auto d = derive_iterated(oracle::fixture("gamma8"), DeriveKind::BipartiteTreeLine, 3);
    const auto a = adjacency_matrix(d.graph());
    const auto full = char_poly_exact(a);
    const auto zeros = full.zero_root_multiplicity();
    const auto p = full.shift_down(zeros);
    std::size_t near_zero = 0;
    for (double x : eigenvalues_numeric(a)) {
        if (std::abs(x) < 1e-8) {
            ++near_zero;
            continue;
        }
        double scale = 0;
        for (std::size_t k = 0; k < p.ascending().size(); ++k) {
            scale += std::abs(p.ascending()[k].convert_to<double>()) * std::pow(std::abs(x), double(k));
        }
        CHECK(std::abs(p.eval(x)) <= 1e-9 * scale);
    }
    CHECK(near_zero == zeros);
}

TEST_CASE("spectrum containment and helpers")
{
    CHECK(spectrum_contained({1, 1}, {1, 1, 2}, 1e-9));
    CHECK_FALSE(spectrum_contained({1, 1}, {1, 2}, 1e-9));
    CHECK(spectrum_contained({}, {1}, 1e-9));
    CHECK(is_bipartite(oracle::fixture("gamma8").simple()));
    CHECK_FALSE(is_bipartite(oracle::fixture("c5").simple()));
    CHECK(is_bipartite(oracle::fixture("c8").simple()));
    IntMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_FALSE(is_symmetric(m));
}
}

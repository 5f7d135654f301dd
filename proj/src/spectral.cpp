#include "treewalk/spectral.hpp"

#include "treewalk/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace treewalk {

namespace {

std::string big_to_string(const BigInt& x)
{
    std::ostringstream out;
    out << x;
    return out.str();
}

struct SplitCheck {
    bool splits = false;
    IntegerRoots roots;
};

SplitCheck splits_over_z(const IntPoly& p)
{
    SplitCheck out;
    out.roots = integer_roots(p);
    out.splits = out.roots.remainder.degree() == 0;
    return out;
}

} // namespace

IntPoly char_poly_exact(const IntMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("char_poly_exact: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
    }
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }

    // p holds descending coefficients of the leading r×r principal minor's polynomial.
    std::vector<BigInt> p{1};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<BigInt> t(r + 2);
        t[0] = 1;
        t[1] = -m[r][r];
        // v = M^k·C for the leading r×r block M and column C = m[0..r)[r].
        std::vector<BigInt> v(r);
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = m[i][r];
        }
        for (std::size_t k = 2; k < r + 2; ++k) {
            BigInt dot = 0;
            for (std::size_t j = 0; j < r; ++j) {
                dot += m[r][j] * v[j];
            }
            t[k] = -dot;
            if (k + 1 < r + 2) {
                std::vector<BigInt> next(r);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        if (m[i][j] != 0) {
                            next[i] += m[i][j] * v[j];
                        }
                    }
                }
                v = std::move(next);
            }
        }
        std::vector<BigInt> q(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) {
                q[i] += t[i - j] * p[j];
            }
        }
        p = std::move(q);
    }
    return IntPoly::from_descending(std::move(p));
}

IntPoly multipartite_char_poly(const std::vector<std::size_t>& parts)
{
    if (parts.empty()) {
        throw std::invalid_argument("multipartite_char_poly: at least one part required");
    }
    std::size_t total = 0;
    std::vector<IntPoly> linear;
    for (auto p : parts) {
        if (p == 0) {
            throw std::invalid_argument("multipartite_char_poly: part sizes must be positive");
        }
        total += p;
        linear.push_back(IntPoly(std::vector<BigInt>{BigInt(p), 1}));
    }
    IntPoly product = IntPoly::constant(1);
    for (const auto& f : linear) {
        product = product * f;
    }
    IntPoly sum;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        IntPoly others = IntPoly::constant(BigInt(parts[i]));
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) {
                others = others * linear[j];
            }
        }
        sum += others;
    }
    return IntPoly::monomial(1, total - parts.size()) * (product - sum);
}

IntMatrix multipartite_adjacency(const std::vector<std::size_t>& parts)
{
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        owner.insert(owner.end(), parts[i], i);
    }
    const auto n = static_cast<Eigen::Index>(owner.size());
    IntMatrix a = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)] ? 1 : 0;
        }
    }
    return a;
}

std::string to_string(Periodicity p)
{
    switch (p) {
    case Periodicity::PeriodicInteger:
        return "Periodic-Integer";
    case Periodicity::PeriodicSqrt:
        return "Periodic-SqrtClass";
    case Periodicity::Aperiodic:
        return "Aperiodic";
    }
    return "unknown";
}

BigInt squarefree_part(const BigInt& m)
{
    BigInt rest = m < 0 ? BigInt(-m) : m;
    if (rest == 0) {
        return 0;
    }
    BigInt out = 1;
    for (unsigned long d = 2; d <= 1'000'000 && BigInt(d) * d <= rest; ++d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e % 2 == 1) {
            out *= d;
        }
    }
    if (rest == 1) {
        return out;
    }
    // Every prime factor left is above 10⁶.
    static const BigInt prime_below = BigInt(1'000'000) * 1'000'000;
    static const BigInt two_primes_below = prime_below * 1'000'000;
    if (rest < prime_below) {
        return out * rest;
    }
    const BigInt root = sqrt(rest);
    if (root * root == rest) {
        return out;
    }
    if (rest < two_primes_below) {
        return out * rest;
    }
    throw FactorizationLimit("squarefree_part: cofactor " + big_to_string(rest) +
                             " has no prime factor below 10^6 and is too large to certify");
}

PeriodicityVerdict periodicity_classify(const IntMatrix& a, MatrixOrigin origin)
{
    PeriodicityVerdict out;
    out.char_poly = char_poly_exact(a);
    if (origin == MatrixOrigin::Adjacency) {
        out.bipartite = is_bipartite(graph_from_adjacency(a));
    }

    auto direct = splits_over_z(out.char_poly);
    if (direct.splits) {
        out.status = Periodicity::PeriodicInteger;
        out.roots = std::move(direct.roots.roots);
        out.evidence = "characteristic polynomial splits over the integers";
        return out;
    }

    const IntMatrix squared = a * a;
    auto sq = splits_over_z(char_poly_exact(squared));
    if (!sq.splits) {
        out.status = Periodicity::Aperiodic;
        out.offending_factor = direct.roots.remainder;
        out.evidence = "squared eigenvalues are not all integers; factor " + out.offending_factor.to_string();
        return out;
    }
    BigInt delta = 0;
    for (const auto& [r, m] : sq.roots.roots) {
        if (r < 0) {
            out.status = Periodicity::Aperiodic;
            out.offending_factor = direct.roots.remainder;
            out.evidence = "negative squared eigenvalue " + big_to_string(r);
            return out;
        }
        if (r == 0) {
            continue;
        }
        const BigInt part = squarefree_part(r);
        if (delta == 0) {
            delta = part;
        } else if (part != delta) {
            out.status = Periodicity::Aperiodic;
            out.offending_factor = direct.roots.remainder;
            out.evidence = "squared eigenvalues have squarefree parts " + big_to_string(delta) + " and " +
                           big_to_string(part);
            return out;
        }
    }
    if (delta < 2) {
        // Only reachable if every θ² were a perfect square, i.e. θ integral.
        out.status = Periodicity::Aperiodic;
        out.offending_factor = direct.roots.remainder;
        out.evidence = "inconsistent spectrum: squared eigenvalues are perfect squares";
        return out;
    }
    out.status = Periodicity::PeriodicSqrt;
    out.delta = delta;
    out.roots = std::move(sq.roots.roots);
    out.evidence = "every nonzero eigenvalue is an integer multiple of sqrt(" + big_to_string(delta) + ")";
    return out;
}

bool is_symmetric(const IntMatrix& a) { return a.rows() == a.cols() && a == a.transpose(); }

std::vector<double> eigenvalues_numeric(const IntMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("eigenvalues_numeric: matrix is not square");
    }
    const auto n = static_cast<std::size_t>(a.rows());
    if (n == 0) {
        return {};
    }
    if (is_symmetric(a)) {
        const Eigen::MatrixXd ad = a.cast<double>();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ad);
        if (solver.info() != Eigen::Success) {
            throw NumericalFailure("eigenvalues_numeric: eigensolver did not converge");
        }
        const Eigen::MatrixXd& v = solver.eigenvectors();
        const double scale = std::max(1.0, ad.cwiseAbs().maxCoeff());
        const double residual = (ad * v - v * solver.eigenvalues().asDiagonal()).cwiseAbs().maxCoeff() / scale;
        if (residual > 1e-8) {
            throw NumericalFailure("eigenvalues_numeric: residual " + std::to_string(residual) + " above 1e-8");
        }
        std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
        std::sort(out.begin(), out.end());
        return out;
    }
    const IntPoly p = char_poly_exact(a);
    std::vector<double> out;
    const auto zeros = p.zero_root_multiplicity();
    out.insert(out.end(), zeros, 0.0);
    for (const auto& [factor, m] : squarefree_decomposition(p.shift_down(zeros))) {
        for (double r : real_roots(factor, 1e-12)) {
            out.insert(out.end(), m, r);
        }
    }
    if (out.size() != n) {
        throw NumericalFailure("eigenvalues_numeric: only " + std::to_string(out.size()) + " of " +
                               std::to_string(n) + " eigenvalues are real");
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool spectrum_contained(const std::vector<double>& sub, const std::vector<double>& full, double tol)
{
    std::vector<double> pool = full;
    std::sort(pool.begin(), pool.end());
    std::vector<char> used(pool.size(), 0);
    std::vector<double> want = sub;
    std::sort(want.begin(), want.end());
    for (double x : want) {
        auto it = std::lower_bound(pool.begin(), pool.end(), x - tol);
        bool matched = false;
        for (; it != pool.end() && *it <= x + tol; ++it) {
            const auto idx = static_cast<std::size_t>(it - pool.begin());
            if (!used[idx]) {
                used[idx] = 1;
                matched = true;
                break;
            }
        }
        if (!matched) {
            return false;
        }
    }
    return true;
}

bool is_bipartite(const SimpleGraph& g)
{
    std::vector<int> colour(g.n, -1);
    for (std::size_t s = 0; s < g.n; ++s) {
        if (colour[s] != -1) {
            continue;
        }
        colour[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (auto w : g.neighbors[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace treewalk

#pragma once

#include "treewalk/graph.hpp"
#include "treewalk/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treewalk {

/// det(xI − A) by Berkowitz's division-free recurrence. Throws DimensionMismatch if A is not square.
[[nodiscard]] IntPoly char_poly_exact(const IntMatrix& a);

/// x^{p−n}[∏(x+pᵢ) − Σ pᵢ∏_{j≠i}(x+pⱼ)] for the complete multipartite graph K_{p₁,…,pₙ}, p = Σpᵢ.
[[nodiscard]] IntPoly multipartite_char_poly(const std::vector<std::size_t>& parts);

/// Adjacency matrix of K_{p₁,…,pₙ}, parts laid out consecutively.
[[nodiscard]] IntMatrix multipartite_adjacency(const std::vector<std::size_t>& parts);

enum class Periodicity {
    PeriodicInteger,
    PeriodicSqrt,
    Aperiodic,
};

[[nodiscard]] std::string to_string(Periodicity p);

/// Adjacency inputs also get a bipartiteness check; quotient inputs do not.
enum class MatrixOrigin {
    Adjacency,
    Quotient,
};

struct PeriodicityVerdict {
    Periodicity status = Periodicity::Aperiodic;
    BigInt delta = 0;  ///< squarefree Δ ≥ 2 for PeriodicSqrt, else 0
    IntPoly char_poly;
    /// Integer eigenvalues (PeriodicInteger) or integer eigenvalue squares (PeriodicSqrt).
    std::vector<std::pair<BigInt, unsigned>> roots;
    /// Aperiodic: the factor without the required roots (empty when the cause is mixed Δ).
    IntPoly offending_factor;
    std::string evidence;
    std::optional<bool> bipartite;
};

/// Squarefree part of |m| by trial division to 10⁶; throws FactorizationLimit past what that certifies.
[[nodiscard]] BigInt squarefree_part(const BigInt& m);

/// Integer spectrum, or spectrum in √Δ·Z with a common Δ, or neither.
[[nodiscard]] PeriodicityVerdict periodicity_classify(const IntMatrix& a,
                                                      MatrixOrigin origin = MatrixOrigin::Adjacency);

/// Real eigenvalues, ascending. Symmetric input uses a symmetric eigensolver;
/// otherwise real roots of the exact characteristic polynomial are isolated.
/// Throws NumericalFailure on a residual above 1e-8 or a non-real spectrum.
[[nodiscard]] std::vector<double> eigenvalues_numeric(const IntMatrix& a);

/// Whether every element of `sub` can be matched to a distinct element of
/// `full` within `tol` (multiset containment).
[[nodiscard]] bool spectrum_contained(const std::vector<double>& sub, const std::vector<double>& full,
                                      double tol);

[[nodiscard]] bool is_bipartite(const SimpleGraph& g);
[[nodiscard]] bool is_symmetric(const IntMatrix& a);

} // namespace treewalk

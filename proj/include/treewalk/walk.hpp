#pragma once

#include "treewalk/derive.hpp"
#include "treewalk/graph.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace treewalk {

using Complex = std::complex<double>;

/// Generator of the walk. Only the adjacency matrix is the studied model;
/// the Laplacian D − A is experimental.
enum class Hamiltonian {
    Adjacency,
    Laplacian,
};

/**
 * Spectral decomposition of a symmetric integer matrix, cached so that
 * H(t) = exp(iHt) can be evaluated at many times.
 */
class WalkOperator {
public:
    /// Throws DimensionMismatch for non-square input, std::invalid_argument
    /// for non-symmetric input and NumericalFailure on a residual above 1e-8.
    explicit WalkOperator(const IntMatrix& a, Hamiltonian h = Hamiltonian::Adjacency);

    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(vectors_.rows()); }
    /// All eigenvalues, ascending, with repetition.
    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
    /// Distinct eigenvalues θ_r (grouped at relative tolerance 1e-8).
    [[nodiscard]] std::vector<double> spectrum() const;
    /// Orthogonal projectors E_r onto the eigenspaces, matching spectrum().
    [[nodiscard]] std::vector<Eigen::MatrixXd> projectors() const;
    /// The Hamiltonian as a real matrix.
    [[nodiscard]] const Eigen::MatrixXd& generator() const noexcept { return generator_; }

    [[nodiscard]] Eigen::MatrixXcd at(double t) const;
    /// ⟨v|H(t)|u⟩.
    [[nodiscard]] Complex amplitude(std::size_t v, std::size_t u, double t) const;
    /// min over v of |H(t)_{v,v}|.
    [[nodiscard]] double min_return_magnitude(double t) const;

private:
    std::vector<std::pair<std::size_t, std::size_t>> groups() const;

    Eigen::MatrixXd generator_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
};

[[nodiscard]] Eigen::MatrixXcd transition_operator(const IntMatrix& a, double t);
/// H(t)_{v,u}.
[[nodiscard]] Complex amplitude(const IntMatrix& a, std::size_t u, std::size_t v, double t);

struct ScanOptions {
    double t_max = 100.0;
    double step = 0.01;
    double tolerance = 1e-6;   ///< accept when the fidelity reaches 1 − tolerance
    double resolution = 1e-9;  ///< golden-section stopping width
};

struct ScanResult {
    std::optional<double> time;
    double best_value = 0.0;
    double best_time = 0.0;
};

/// Smallest refined time with min_v |H(t)_{v,v}| ≥ 1 − tolerance.
[[nodiscard]] ScanResult periodic_return_scan(const WalkOperator& w, const ScanOptions& options = {});
[[nodiscard]] ScanResult periodic_return_scan(const IntMatrix& a, const ScanOptions& options = {});

/// Smallest refined time with |H(t)_{v,u}| ≥ 1 − tolerance; u ≠ v.
[[nodiscard]] ScanResult pst_scan(const WalkOperator& w, std::size_t u, std::size_t v,
                                  const ScanOptions& options = {});
[[nodiscard]] ScanResult pst_scan(const IntMatrix& a, std::size_t u, std::size_t v, const ScanOptions& options = {});

enum class RowClass {
    Diagonal,
    Neighbor,
    NonNeighbor,
};

[[nodiscard]] std::string to_string(RowClass c);

struct AmplitudeRow {
    std::uint32_t vertex = 0;
    std::string label;
    TreeData tree;
    Complex exact;        ///< H(ε)_{vertex, initial}
    Complex first_order;  ///< (I + iεA)_{vertex, initial}
    RowClass row_class = RowClass::NonNeighbor;
};

struct AmplitudeTable {
    double epsilon = 0.0;
    std::uint32_t initial = 0;
    std::string initial_label;
    std::vector<AmplitudeRow> rows;

    [[nodiscard]] std::size_t count(RowClass c) const;
    /// Σ |exact|², which is 1 up to rounding.
    [[nodiscard]] double norm_squared() const;
};

/// Column of H(ε) for the initial basis state. Throws std::invalid_argument
/// unless 0 < ε ≤ 0.1 and UnknownVertex for a missing initial vertex.
[[nodiscard]] AmplitudeTable infinitesimal_table(const DerivedGraph& d, std::uint32_t initial, double epsilon);

[[nodiscard]] std::string table_to_csv(const AmplitudeTable& t);
[[nodiscard]] nlohmann::json table_to_json(const AmplitudeTable& t, const PrimitiveGraph& base);

} // namespace treewalk

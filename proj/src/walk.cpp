#include "treewalk/walk.hpp"

#include "treewalk/derived_io.hpp"
#include "treewalk/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace treewalk {

namespace {

Eigen::MatrixXd build_generator(const IntMatrix& a, Hamiltonian h)
{
    Eigen::MatrixXd m = a.cast<double>();
    if (h == Hamiltonian::Laplacian) {
        const Eigen::VectorXd degrees = m.rowwise().sum();
        m = Eigen::MatrixXd(degrees.asDiagonal()) - m;
    }
    return m;
}

/// Golden-section maximisation of f on [lo, hi].
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo, double hi, double resolution)
{
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > resolution) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double t = 0.5 * (lo + hi);
    return {t, f(t)};
}

ScanResult scan(const std::function<double(double)>& f, const ScanOptions& options)
{
    if (!(options.step > 0.0) || !(options.t_max > 0.0)) {
        throw std::invalid_argument("scan: step and t_max must be positive");
    }
    ScanResult out;
    const auto steps = static_cast<std::size_t>(std::floor(options.t_max / options.step + 1e-9));
    std::vector<double> values(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        values[k] = f(static_cast<double>(k) * options.step);
    }
    for (std::size_t k = 1; k <= steps; ++k) {
        const bool rises = values[k] >= values[k - 1];
        const bool peak = rises && (k == steps || values[k] >= values[k + 1]);
        if (!peak) {
            continue;
        }
        const double lo = static_cast<double>(k - 1) * options.step;
        const double hi = std::min(static_cast<double>(k + 1) * options.step, options.t_max);
        auto [t, value] = golden_max(f, lo, hi, options.resolution);
        if (values[k] > value) {
            t = static_cast<double>(k) * options.step;
            value = values[k];
        }
        if (value > out.best_value) {
            out.best_value = value;
            out.best_time = t;
        }
        if (value >= 1.0 - options.tolerance) {
            out.time = t;
            return out;
        }
    }
    return out;
}

} // namespace

WalkOperator::WalkOperator(const IntMatrix& a, Hamiltonian h)
{
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("WalkOperator: matrix is not square");
    }
    if (a != a.transpose()) {
        throw std::invalid_argument("WalkOperator: matrix is not symmetric");
    }
    generator_ = build_generator(a, h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(generator_);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("WalkOperator: eigensolver did not converge");
    }
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
    const double scale = std::max(1.0, generator_.cwiseAbs().maxCoeff());
    const double residual = (generator_ * vectors_ - vectors_ * values_.asDiagonal()).cwiseAbs().maxCoeff() / scale;
    if (residual > 1e-8) {
        throw NumericalFailure("WalkOperator: eigendecomposition residual " + std::to_string(residual));
    }
}

std::vector<std::pair<std::size_t, std::size_t>> WalkOperator::groups() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = static_cast<std::size_t>(values_.size());
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && values_[static_cast<Eigen::Index>(j)] - values_[static_cast<Eigen::Index>(i)] <=
                            1e-8 * std::max(1.0, std::abs(values_[static_cast<Eigen::Index>(i)]))) {
            ++j;
        }
        out.emplace_back(i, j);
        i = j;
    }
    return out;
}

std::vector<double> WalkOperator::spectrum() const
{
    std::vector<double> out;
    for (const auto& [b, e] : groups()) {
        out.push_back(values_.segment(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(e - b)).mean());
    }
    return out;
}

std::vector<Eigen::MatrixXd> WalkOperator::projectors() const
{
    std::vector<Eigen::MatrixXd> out;
    for (const auto& [b, e] : groups()) {
        const auto block = vectors_.middleCols(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(e - b));
        out.push_back(block * block.transpose());
    }
    return out;
}

Eigen::MatrixXcd WalkOperator::at(double t) const
{
    Eigen::VectorXcd phases(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        phases[k] = std::polar(1.0, values_[k] * t);
    }
    const Eigen::MatrixXcd v = vectors_.cast<Complex>();
    return v * phases.asDiagonal() * v.transpose();
}

Complex WalkOperator::amplitude(std::size_t v, std::size_t u, double t) const
{
    if (v >= dimension() || u >= dimension()) {
        throw std::out_of_range("WalkOperator::amplitude: vertex out of range");
    }
    Complex sum = 0.0;
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        sum += vectors_(static_cast<Eigen::Index>(v), k) * vectors_(static_cast<Eigen::Index>(u), k) *
               std::polar(1.0, values_[k] * t);
    }
    return sum;
}

double WalkOperator::min_return_magnitude(double t) const
{
    Eigen::VectorXcd phases(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        phases[k] = std::polar(1.0, values_[k] * t);
    }
    const Eigen::MatrixXd squares = vectors_.cwiseAbs2();
    const Eigen::VectorXcd diagonal = squares.cast<Complex>() * phases;
    return diagonal.cwiseAbs().minCoeff();
}

Eigen::MatrixXcd transition_operator(const IntMatrix& a, double t) { return WalkOperator(a).at(t); }

Complex amplitude(const IntMatrix& a, std::size_t u, std::size_t v, double t)
{
    return WalkOperator(a).amplitude(v, u, t);
}

ScanResult periodic_return_scan(const WalkOperator& w, const ScanOptions& options)
{
    return scan([&](double t) { return w.min_return_magnitude(t); }, options);
}

ScanResult periodic_return_scan(const IntMatrix& a, const ScanOptions& options)
{
    return periodic_return_scan(WalkOperator(a), options);
}

ScanResult pst_scan(const WalkOperator& w, std::size_t u, std::size_t v, const ScanOptions& options)
{
    if (u == v) {
        throw std::invalid_argument("pst_scan: source and target must differ");
    }
    if (u >= w.dimension() || v >= w.dimension()) {
        throw std::out_of_range("pst_scan: vertex out of range");
    }
    return scan([&](double t) { return std::abs(w.amplitude(v, u, t)); }, options);
}

ScanResult pst_scan(const IntMatrix& a, std::size_t u, std::size_t v, const ScanOptions& options)
{
    return pst_scan(WalkOperator(a), u, v, options);
}

std::string to_string(RowClass c)
{
    switch (c) {
    case RowClass::Diagonal:
        return "diagonal";
    case RowClass::Neighbor:
        return "neighbor";
    case RowClass::NonNeighbor:
        return "non-neighbor";
    }
    return "unknown";
}

std::size_t AmplitudeTable::count(RowClass c) const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [c](const AmplitudeRow& r) { return r.row_class == c; }));
}

double AmplitudeTable::norm_squared() const
{
    double sum = 0.0;
    for (const auto& r : rows) {
        sum += std::norm(r.exact);
    }
    return sum;
}

AmplitudeTable infinitesimal_table(const DerivedGraph& d, std::uint32_t initial, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= 0.1)) {
        throw std::invalid_argument("infinitesimal_table: epsilon must lie in (0, 0.1]");
    }
    if (initial >= d.vertex_count()) {
        throw UnknownVertex("infinitesimal_table: initial vertex #" + std::to_string(initial) + " out of range");
    }
    const auto& g = d.graph();
    const WalkOperator w(adjacency_matrix(g));
    AmplitudeTable table;
    table.epsilon = epsilon;
    table.initial = initial;
    table.initial_label = vertex_label(d, initial);
    for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
        AmplitudeRow row;
        row.vertex = v;
        row.label = vertex_label(d, v);
        row.tree = d.vertex(v).tree;
        row.exact = w.amplitude(v, initial, epsilon);
        if (v == initial) {
            row.row_class = RowClass::Diagonal;
            row.first_order = 1.0;
        } else if (g.adjacent(v, initial)) {
            row.row_class = RowClass::Neighbor;
            row.first_order = Complex(0.0, epsilon);
        } else {
            row.row_class = RowClass::NonNeighbor;
            row.first_order = 0.0;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string table_to_csv(const AmplitudeTable& t)
{
    std::ostringstream out;
    out.precision(12);
    out << "label,re,im,abs,class\n";
    for (const auto& r : t.rows) {
        out << '"' << r.label << "\"," << r.exact.real() << ',' << r.exact.imag() << ',' << std::abs(r.exact) << ','
            << to_string(r.row_class) << "\n";
    }
    return out.str();
}

nlohmann::json table_to_json(const AmplitudeTable& t, const PrimitiveGraph& base)
{
    auto rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        rows.push_back({
            {"label", r.label},
            {"tree", tree_to_json(base, r.tree)},
            {"re", r.exact.real()},
            {"im", r.exact.imag()},
            {"abs", std::abs(r.exact)},
            {"first_order_re", r.first_order.real()},
            {"first_order_im", r.first_order.imag()},
            {"class", to_string(r.row_class)},
        });
    }
    return {
        {"epsilon", t.epsilon},
        {"initial", t.initial_label},
        {"neighbor_rows", t.count(RowClass::Neighbor)},
        {"norm_squared", t.norm_squared()},
        {"rows", std::move(rows)},
    };
}

} // namespace treewalk

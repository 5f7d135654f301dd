#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace treewalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Dense univariate polynomial over the integers, coefficients ascending by
 * power. The zero polynomial has no coefficients and degree -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);

    static IntPoly constant(BigInt c);
    /// c·x^k
    static IntPoly monomial(BigInt c, std::size_t k);
    /// x − r
    static IntPoly linear_root(const BigInt& r);
    /// Builds from descending coefficients (leading first).
    static IntPoly from_descending(std::vector<BigInt> descending);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] const BigInt& leading() const;
    [[nodiscard]] BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    [[nodiscard]] const std::vector<BigInt>& ascending() const noexcept { return c_; }
    [[nodiscard]] std::vector<BigInt> descending() const;
    [[nodiscard]] bool is_monic() const { return !is_zero() && leading() == 1; }

    [[nodiscard]] BigInt eval(const BigInt& x) const;
    /// Sign of p(num/den) for den > 0, computed exactly.
    [[nodiscard]] int sign_at(const BigInt& num, const BigInt& den) const;
    [[nodiscard]] int sign_at(const BigRational& x) const;
    [[nodiscard]] double eval(double x) const;
    [[nodiscard]] IntPoly derivative() const;

    /// gcd of the coefficients, sign following the leading coefficient.
    [[nodiscard]] BigInt content() const;
    [[nodiscard]] IntPoly primitive_part() const;

    /// Index of the lowest nonzero coefficient (multiplicity of the root 0).
    [[nodiscard]] std::size_t zero_root_multiplicity() const;
    /// Divides out x^k.
    [[nodiscard]] IntPoly shift_down(std::size_t k) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s);
    friend IntPoly operator-(const IntPoly& a) { return a * BigInt(-1); }
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    [[nodiscard]] IntPoly pow(unsigned e) const;

    /// Human-readable, e.g. "x^8 - 8x^6 + 20x^4 - 16x^2".
    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Pseudo-remainder: lc(b)^(deg a − deg b + 1)·a mod b.
[[nodiscard]] IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over Z; throws std::domain_error if b does not divide a.
[[nodiscard]] IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
[[nodiscard]] IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// f = c·∏ s_j^j with s_j squarefree, pairwise coprime and primitive. Only
/// nonconstant factors are returned, paired with their multiplicity.
[[nodiscard]] std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// Half-open rational interval (lo, hi] holding exactly one real root.
struct RootInterval {
    BigRational lo;
    BigRational hi;
};

/// Isolates every real root of a squarefree polynomial, ascending.
[[nodiscard]] std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree);

/// Shrinks an isolating interval until hi − lo < width.
void refine_root(const IntPoly& squarefree, RootInterval& interval, const BigRational& width);

/// Real roots of a squarefree polynomial to within `width`, ascending.
[[nodiscard]] std::vector<double> real_roots(const IntPoly& squarefree, double width = 1e-12);

struct IntegerRoots {
    std::vector<std::pair<BigInt, unsigned>> roots;  // ascending by value
    IntPoly remainder;                               // no integer roots left
    [[nodiscard]] std::size_t count() const;
};

/// Integer roots with multiplicity; the remainder times ∏(x − r)^m equals p.
[[nodiscard]] IntegerRoots integer_roots(const IntPoly& p);

/// Product form such as "x^2(x - 2)(x + 2)(x^2 - 2)^2": integer linear
/// factors, then squarefree factors of what is left.
[[nodiscard]] std::string factored_form(const IntPoly& p);

} // namespace treewalk

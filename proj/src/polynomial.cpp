#include "treewalk/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace treewalk {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt a, BigInt b)
{
    a = abs_big(a);
    b = abs_big(b);
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt floor_rational(const BigRational& q)
{
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    BigInt f = num / den;
    if (num % den != 0 && num < 0) {
        f -= 1;
    }
    return f;
}

BigInt ceil_rational(const BigRational& q) { return -floor_rational(-q); }

/// Positive rescaling keeps Sturm sign patterns intact.
IntPoly divide_abs_content(const IntPoly& p)
{
    BigInt g = 0;
    for (const auto& c : p.ascending()) {
        g = gcd_big(g, c);
    }
    if (g <= 1) {
        return p;
    }
    std::vector<BigInt> out;
    out.reserve(p.ascending().size());
    for (const auto& c : p.ascending()) {
        out.push_back(c / g);
    }
    return IntPoly(std::move(out));
}

class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& p)
    {
        seq_.push_back(divide_abs_content(p));
        seq_.push_back(divide_abs_content(p.derivative()));
        while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
            const auto& a = seq_[seq_.size() - 2];
            const auto& b = seq_.back();
            IntPoly r = pseudo_remainder(a, b);
            const unsigned m = static_cast<unsigned>(a.degree() - b.degree() + 1);
            // prem = lc^m · rem; undo the sign of lc^m, then negate.
            const bool flip = b.leading() < 0 && (m % 2 == 1);
            r = flip ? r : -r;
            if (r.is_zero()) {
                break;
            }
            seq_.push_back(divide_abs_content(r));
        }
    }

    [[nodiscard]] int variations(const BigRational& x) const
    {
        int changes = 0;
        int last = 0;
        for (const auto& s : seq_) {
            const int sign = s.sign_at(x);
            if (sign == 0) {
                continue;
            }
            if (last != 0 && sign != last) {
                ++changes;
            }
            last = sign;
        }
        return changes;
    }

    /// Roots in (lo, hi].
    [[nodiscard]] int count(const BigRational& lo, const BigRational& hi) const
    {
        return variations(lo) - variations(hi);
    }

private:
    std::vector<IntPoly> seq_;
};

BigRational root_bound(const IntPoly& p)
{
    BigInt largest = 0;
    for (const auto& c : p.ascending()) {
        largest = std::max(largest, abs_big(c));
    }
    const BigInt lead = abs_big(p.leading());
    return BigRational(largest / lead + 2);
}

void refine_with(const SturmSequence& sturm, const IntPoly& p, RootInterval& iv, const BigRational& width)
{
    while (iv.hi - iv.lo >= width) {
        const BigRational mid = (iv.lo + iv.hi) / 2;
        if (p.sign_at(mid) == 0) {
            iv.hi = mid;
            iv.lo = std::max(iv.lo, BigRational(mid - width / 2));
            return;
        }
        if (sturm.count(iv.lo, mid) == 1) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
}

std::string term(const BigInt& c, std::size_t k, bool first)
{
    std::ostringstream out;
    const BigInt mag = abs_big(c);
    if (first) {
        out << (c < 0 ? "-" : "");
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) {
        out << mag;
    }
    if (k >= 1) {
        out << "x";
    }
    if (k >= 2) {
        out << "^" << k;
    }
    return out.str();
}

} // namespace

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, std::size_t k)
{
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, 1}); }

IntPoly IntPoly::from_descending(std::vector<BigInt> descending)
{
    std::reverse(descending.begin(), descending.end());
    return IntPoly(std::move(descending));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

const BigInt& IntPoly::leading() const
{
    if (c_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return c_.back();
}

std::vector<BigInt> IntPoly::descending() const { return {c_.rbegin(), c_.rend()}; }

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const
{
    if (c_.empty()) {
        return 0;
    }
    BigInt acc = c_.back();
    BigInt den_pow = 1;
    for (auto i = c_.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc = acc * num + c_[i] * den_pow;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int IntPoly::sign_at(const BigRational& x) const { return sign_at(numerator(x), denominator(x)); }

double IntPoly::eval(double x) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + it->convert_to<double>();
    }
    return acc;
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * static_cast<unsigned long long>(k);
    }
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const
{
    BigInt g = 0;
    for (const auto& c : c_) {
        g = gcd_big(g, c);
    }
    if (!c_.empty() && c_.back() < 0) {
        g = -g;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (c_.empty()) {
        return {};
    }
    const BigInt g = content();
    std::vector<BigInt> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        out.push_back(c / g);
    }
    return IntPoly(std::move(out));
}

std::size_t IntPoly::zero_root_multiplicity() const
{
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) {
        ++k;
    }
    return k;
}

IntPoly IntPoly::shift_down(std::size_t k) const
{
    if (k > zero_root_multiplicity()) {
        throw std::domain_error("shift_down: x^k does not divide the polynomial");
    }
    return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(std::min(k, c_.size())), c_.end()));
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const BigInt& s)
{
    for (auto& c : a.c_) {
        c *= s;
    }
    a.trim();
    return a;
}

IntPoly IntPoly::pow(unsigned e) const
{
    IntPoly out = constant(1);
    for (unsigned i = 0; i < e; ++i) {
        out = out * *this;
    }
    return out;
}

std::string IntPoly::to_string() const
{
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) {
            continue;
        }
        out += term(c_[k], k, first);
        first = false;
    }
    return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("pseudo_remainder by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    const BigInt lc = b.leading();
    int e = a.degree() - b.degree() + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const IntPoly s = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
        r = r * lc - s * b;
        --e;
    }
    for (; e > 0; --e) {
        r = r * lc;
    }
    return r;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("exact_divide by the zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw std::domain_error("exact_divide: divisor has larger degree");
    }
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> r = a.ascending();
    std::vector<BigInt> q(r.size() - db);
    const BigInt& lc = b.leading();
    for (std::size_t top = r.size(); top-- > db;) {
        if (r[top] == 0) {
            continue;
        }
        BigInt rem;
        BigInt coef;
        divide_qr(r[top], lc, coef, rem);
        if (rem != 0) {
            throw std::domain_error("exact_divide: quotient is not integral");
        }
        const auto shift = top - db;
        q[shift] = coef;
        for (std::size_t k = 0; k <= db; ++k) {
            r[shift + k] -= coef * b.coeff(k);
        }
    }
    if (std::any_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(db), [](const BigInt& c) { return c != 0; })) {
        throw std::domain_error("exact_divide: nonzero remainder");
    }
    return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) {
        return b.primitive_part();
    }
    if (b.is_zero()) {
        return a.primitive_part();
    }
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f)
{
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f.degree() < 1) {
        return out;
    }
    const IntPoly p = f.primitive_part();
    IntPoly g = gcd(p, p.derivative());
    IntPoly w = exact_divide(p, g).primitive_part();
    unsigned i = 1;
    while (w.degree() > 0) {
        IntPoly y = gcd(w, g);
        IntPoly z = exact_divide(w, y).primitive_part();
        if (z.degree() > 0) {
            out.emplace_back(std::move(z), i);
        }
        g = exact_divide(g, y).primitive_part();
        w = std::move(y);
        ++i;
    }
    return out;
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree)
{
    std::vector<RootInterval> out;
    if (squarefree.degree() < 1) {
        return out;
    }
    const SturmSequence sturm(squarefree);
    const BigRational bound = root_bound(squarefree);
    std::vector<RootInterval> stack{{-bound, bound}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        const int n = sturm.count(iv.lo, iv.hi);
        if (n == 0) {
            continue;
        }
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        const BigRational mid = (iv.lo + iv.hi) / 2;
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

void refine_root(const IntPoly& squarefree, RootInterval& interval, const BigRational& width)
{
    refine_with(SturmSequence(squarefree), squarefree, interval, width);
}

std::vector<double> real_roots(const IntPoly& squarefree, double width)
{
    std::vector<double> out;
    const SturmSequence sturm(squarefree);
    const BigRational w(width);
    for (auto iv : isolate_real_roots(squarefree)) {
        refine_with(sturm, squarefree, iv, w);
        if (squarefree.sign_at(iv.hi) == 0) {
            out.push_back(iv.hi.convert_to<double>());
        } else {
            out.push_back(((iv.lo + iv.hi) / 2).convert_to<double>());
        }
    }
    return out;
}

std::size_t IntegerRoots::count() const
{
    std::size_t n = 0;
    for (const auto& [r, m] : roots) {
        n += m;
    }
    return n;
}

IntegerRoots integer_roots(const IntPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("integer_roots of the zero polynomial");
    }
    IntegerRoots out;
    const auto zeros = p.zero_root_multiplicity();
    IntPoly q = p.shift_down(zeros);
    if (zeros > 0) {
        out.roots.emplace_back(0, static_cast<unsigned>(zeros));
    }
    if (q.degree() >= 1) {
        const IntPoly core = exact_divide(q, gcd(q, q.derivative())).primitive_part();
        const SturmSequence sturm(core);
        std::vector<BigInt> candidates;
        for (auto iv : isolate_real_roots(core)) {
            refine_with(sturm, core, iv, BigRational(1, 2));
            for (BigInt c = ceil_rational(iv.lo); c <= floor_rational(iv.hi); ++c) {
                if (c != 0 && core.eval(c) == 0) {
                    candidates.push_back(c);
                }
            }
        }
        for (const auto& r : candidates) {
            unsigned m = 0;
            const IntPoly factor = IntPoly::linear_root(r);
            while (q.degree() >= 1 && q.eval(r) == 0) {
                q = exact_divide(q, factor);
                ++m;
            }
            if (m > 0) {
                out.roots.emplace_back(r, m);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.remainder = std::move(q);
    return out;
}

std::string factored_form(const IntPoly& p)
{
    if (p.degree() < 1) {
        return p.to_string();
    }
    const auto split = integer_roots(p);
    std::string out;
    const auto power = [](unsigned m) { return m > 1 ? "^" + std::to_string(m) : std::string(); };
    for (const auto& [r, m] : split.roots) {
        if (r == 0) {
            out = "x" + power(m) + out;
        } else {
            std::ostringstream f;
            f << "(x " << (r < 0 ? "+ " : "- ") << abs_big(r) << ")";
            out += f.str() + power(m);
        }
    }
    const IntPoly& rest = split.remainder;
    BigInt scale = rest.leading();
    for (const auto& [factor, m] : squarefree_decomposition(rest)) {
        out += "(" + factor.to_string() + ")" + power(m);
        scale /= BigInt(pow(factor.leading(), m));
    }
    if (scale != 1) {
        std::ostringstream s;
        s << scale;
        out = s.str() + (out.empty() ? "" : "·" + out);
    }
    return out.empty() ? "1" : out;
}

} // namespace treewalk

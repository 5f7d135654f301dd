#include "treewalk/bitset.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace treewalk {

Bitset::Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

void Bitset::set(std::size_t i)
{
    if (i >= bits_) {
        throw std::out_of_range("Bitset::set index out of range");
    }
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void Bitset::reset(std::size_t i)
{
    if (i >= bits_) {
        throw std::out_of_range("Bitset::reset index out of range");
    }
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool Bitset::test(std::size_t i) const
{
    if (i >= bits_) {
        return false;
    }
    return ((words_[i / 64] >> (i % 64)) & 1U) != 0;
}

std::size_t Bitset::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool Bitset::none() const noexcept
{
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool Bitset::is_subset_of(const Bitset& other) const
{
    assert(bits_ == other.bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

Bitset& Bitset::operator|=(const Bitset& other)
{
    if (bits_ != other.bits_) {
        throw std::invalid_argument("Bitset width mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other)
{
    if (bits_ != other.bits_) {
        throw std::invalid_argument("Bitset width mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

std::size_t union_count(const Bitset& a, const Bitset& b)
{
    assert(a.bits_ == b.bits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
    }
    return c;
}

std::size_t intersection_count(const Bitset& a, const Bitset& b)
{
    assert(a.bits_ == b.bits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    }
    return c;
}

std::vector<std::size_t> Bitset::members() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::size_t Bitset::hash() const noexcept
{
    std::size_t h = bits_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b)
{
    if (a.bits_ != b.bits_) {
        return a.bits_ <=> b.bits_;
    }
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const auto diff = a.words_[i] ^ b.words_[i];
        if (diff == 0) {
            continue;
        }
        // Lowest differing element d. The set holding d is smaller, unless the
        // other set has nothing above d (then it is a proper prefix).
        const auto bit = static_cast<unsigned>(std::countr_zero(diff));
        const bool a_has = ((a.words_[i] >> bit) & 1U) != 0;
        const Bitset& other = a_has ? b : a;
        const std::uint64_t above_mask = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
        bool other_has_more = (other.words_[i] & above_mask) != 0;
        for (std::size_t j = i + 1; j < other.words_.size() && !other_has_more; ++j) {
            other_has_more = other.words_[j] != 0;
        }
        if (other_has_more) {
            return a_has ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return a_has ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace treewalk

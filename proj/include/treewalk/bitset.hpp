#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace treewalk {

/**
 * Fixed-width dynamic bitset used for vertex and edge sets.
 *
 * Ordering is lexicographic on the ascending list of members, so
 * {1,2} < {1,2,5} < {1,3} < {2}. Binary operations require equal widths.
 */
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }

    void set(std::size_t i);
    void reset(std::size_t i);
    [[nodiscard]] bool test(std::size_t i) const;

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool none() const noexcept;
    [[nodiscard]] bool is_subset_of(const Bitset& other) const;

    Bitset& operator|=(const Bitset& other);
    Bitset& operator&=(const Bitset& other);
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// |a ∪ b| without allocating.
    friend std::size_t union_count(const Bitset& a, const Bitset& b);
    /// |a ∩ b| without allocating.
    friend std::size_t intersection_count(const Bitset& a, const Bitset& b);

    [[nodiscard]] std::vector<std::size_t> members() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word != 0) {
                const auto bit = static_cast<std::size_t>(__builtin_ctzll(word));
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const noexcept;

    friend bool operator==(const Bitset& a, const Bitset& b) = default;
    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace treewalk

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace hermpsh {

/// Exponent vector of fixed length n.
///
/// The ordering is graded-lexicographic: first by order |alpha|, then
/// lexicographically with the first variable most significant. This is the
/// single term order of the library; "leading" always means largest.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : exps_(dim, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

    static MultiIndex zero(std::size_t dim) { return MultiIndex(dim); }
    static MultiIndex unit(std::size_t dim, std::size_t j, std::uint32_t power = 1);

    std::size_t dim() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t j) const { return exps_[j]; }
    std::uint32_t& operator[](std::size_t j) { return exps_[j]; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    /// |alpha|
    unsigned order() const noexcept;
    bool is_zero() const noexcept { return order() == 0; }

    /// Componentwise alpha <= other.
    bool divides(const MultiIndex& other) const noexcept;
    /// True iff every entry is divisible by m.
    bool all_divisible_by(std::uint32_t m) const noexcept;

    MultiIndex operator+(const MultiIndex& rhs) const;
    /// Requires rhs.divides(*this).
    MultiIndex operator-(const MultiIndex& rhs) const;
    MultiIndex scaled(std::uint32_t factor) const;
    MultiIndex divided(std::uint32_t m) const;

    /// Entries [first, first + count).
    MultiIndex slice(std::size_t first, std::size_t count) const;
    MultiIndex concat(const MultiIndex& tail) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<std::uint32_t> exps_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

/// Monomial z^alpha zbar^beta. Ordered graded-lex on the concatenation (alpha, beta).
struct BiIndex {
    MultiIndex holo;
    MultiIndex anti;

    std::size_t dim() const noexcept { return holo.dim(); }
    unsigned order() const noexcept { return holo.order() + anti.order(); }
    BiIndex swapped() const { return {anti, holo}; }

    BiIndex operator+(const BiIndex& rhs) const { return {holo + rhs.holo, anti + rhs.anti}; }

    friend bool operator==(const BiIndex&, const BiIndex&) = default;
    friend std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b);
};

}  // namespace hermpsh

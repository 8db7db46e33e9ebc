#include "hermpsh/multi_index.hpp"

#include <numeric>

#include "hermpsh/error.hpp"

namespace hermpsh {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t j, std::uint32_t power) {
    MultiIndex a(dim);
    a.exps_.at(j) = power;
    return a;
}

unsigned MultiIndex::order() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool MultiIndex::divides(const MultiIndex& other) const noexcept {
    if (other.dim() != dim()) return false;
    for (std::size_t j = 0; j < exps_.size(); ++j)
        if (exps_[j] > other.exps_[j]) return false;
    return true;
}

bool MultiIndex::all_divisible_by(std::uint32_t m) const noexcept {
    for (auto e : exps_)
        if (e % m != 0) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
    if (rhs.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "multi-index lengths differ");
    MultiIndex out(*this);
    for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] += rhs.exps_[j];
    return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& rhs) const {
    if (!rhs.divides(*this)) throw Error(ErrorCode::InvalidArgument, "multi-index subtraction underflows");
    MultiIndex out(*this);
    for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] -= rhs.exps_[j];
    return out;
}

MultiIndex MultiIndex::scaled(std::uint32_t factor) const {
    MultiIndex out(*this);
    for (auto& e : out.exps_) e *= factor;
    return out;
}

MultiIndex MultiIndex::divided(std::uint32_t m) const {
    MultiIndex out(*this);
    for (auto& e : out.exps_) e /= m;
    return out;
}

MultiIndex MultiIndex::slice(std::size_t first, std::size_t count) const {
    return MultiIndex(std::vector<std::uint32_t>(exps_.begin() + static_cast<std::ptrdiff_t>(first),
                                                 exps_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

MultiIndex MultiIndex::concat(const MultiIndex& tail) const {
    MultiIndex out(*this);
    out.exps_.insert(out.exps_.end(), tail.exps_.begin(), tail.exps_.end());
    return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.exps_ <=> b.exps_;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
    os << '(';
    for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? "," : "") << a[j];
    return os << ')';
}

std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.holo.exponents().size() <=> b.holo.exponents().size(); c != 0) return c;
    auto ah = a.holo.exponents(), bh = b.holo.exponents();
    for (std::size_t j = 0; j < ah.size(); ++j)
        if (auto c = ah[j] <=> bh[j]; c != 0) return c;
    auto aa = a.anti.exponents(), ba = b.anti.exponents();
    for (std::size_t j = 0; j < aa.size(); ++j)
        if (auto c = aa[j] <=> ba[j]; c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace hermpsh

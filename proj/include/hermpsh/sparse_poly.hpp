#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "hermpsh/error.hpp"
#include "hermpsh/gaussian_rational.hpp"

namespace hermpsh::detail {

/// Sparse polynomial over Q(i) keyed by a monomial type. Terms are kept in
/// descending term order (leading term first) and zero coefficients are
/// never stored. Derived supplies the concrete value type (CRTP).
template <class Derived, class Monomial>
class SparsePolynomial {
public:
    using monomial_type = Monomial;
    using TermMap = std::map<Monomial, GaussianRational, std::greater<>>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational{} : it->second;
    }

    /// Requires a nonzero polynomial.
    const typename TermMap::value_type& leading() const {
        if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
        return *terms_.begin();
    }

    /// Adds c * m, summing with an existing term and dropping cancellations.
    void add_term(const Monomial& m, const GaussianRational& c) {
        if (m.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "monomial dimension differs from polynomial");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Derived& operator+=(const Derived& rhs) {
        check_dim(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return self();
    }
    Derived& operator-=(const Derived& rhs) {
        check_dim(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return self();
    }
    Derived& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator*(Derived a, const GaussianRational& s) { return a *= s; }
    friend Derived operator*(const GaussianRational& s, Derived a) { return a *= s; }
    Derived operator-() const {
        Derived out = self();
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend Derived operator*(const Derived& a, const Derived& b) {
        a.check_dim(b);
        Derived out = Derived::zero(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
        return out;
    }
    Derived& operator*=(const Derived& rhs) { return self() = self() * rhs; }

    Derived pow(unsigned exponent) const {
        Derived result = Derived::one(dim_);
        Derived base = self();
        while (exponent > 0) {
            if (exponent & 1u) result = result * base;
            exponent >>= 1u;
            if (exponent > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

protected:
    void check_dim(const SparsePolynomial& other) const {
        if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ");
    }
    Derived& self() { return static_cast<Derived&>(*this); }
    const Derived& self() const { return static_cast<const Derived&>(*this); }

    std::size_t dim_ = 0;
    TermMap terms_;
};

}  // namespace hermpsh::detail

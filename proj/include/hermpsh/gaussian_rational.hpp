#pragma once

#include <complex>
#include <concepts>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hermpsh {

/// Exact element a + b*i of Q(i). Both parts are kept canonical by GMP.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(mpq_class re, mpq_class im = 0);

    template <std::integral T>
    GaussianRational(T value) : re_(static_cast<long>(value)) {}

    static GaussianRational i() { return {0, 1}; }
    static GaussianRational rational(long num, unsigned long den);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |x|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical text: "a/b", "c/d*i" or "a/b+c/d*i".
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational pow(unsigned exponent) const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace hermpsh

#include "hermpsh/gaussian_rational.hpp"

#include <stdexcept>

#include "hermpsh/error.hpp"

namespace hermpsh {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::rational(long num, unsigned long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return {q, 0};
}

std::string GaussianRational::str() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) return re_.get_str();
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = im_.get_str() + "*i";
    }
    if (!has_re) return im_part;
    if (sgn(im_) > 0) return re_.get_str() + "+" + im_part;
    return re_.get_str() + im_part;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (rhs.is_real()) {
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    const mpq_class n = rhs.norm();
    *this *= rhs.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
    GaussianRational result = 1;
    GaussianRational base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

}  // namespace hermpsh

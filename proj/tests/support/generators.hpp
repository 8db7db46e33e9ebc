#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hermpsh/herm_poly.hpp"
#include "hermpsh/levi.hpp"
#include "hermpsh/profile.hpp"

namespace hermpsh::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Nonzero p/q + (r/s) i with small numerators.
    GaussianRational coefficient(bool complex = true);
    mpq_class positive_rational();
    std::vector<GaussianRational> exact_point(std::size_t dim);
    ComplexPoint point(std::size_t dim, double radius = 1.0);

    MultiIndex multi_index(std::size_t dim, unsigned order);
    /// Nonzero homogeneous holomorphic polynomial.
    HoloPoly homogeneous(std::size_t dim, unsigned degree, std::size_t max_terms = 4);
    HoloPoly monic_homogeneous(std::size_t dim, unsigned degree, std::size_t max_terms = 4);
    /// Nonzero Hermitian polynomial, homogeneous of degree 2k when requested.
    HermPoly hermitian(std::size_t dim, unsigned max_half_degree, std::size_t pairs, bool homogeneous);
    /// Hermitian homogeneous of degree 2k with at least one mixed term.
    HermPoly hermitian_homogeneous(std::size_t dim, unsigned k, std::size_t pairs);
    /// Sum of |h_i|^2 over random homogeneous h_i of one degree.
    HermPoly sum_of_squares(std::size_t dim, unsigned degree, std::size_t count);
    /// One-variable s with terms tau^p conj(tau)^q, p, q in [1, max_pq], p + q == total.
    HermPoly one_variable(unsigned total, unsigned max_pq);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Random separately homogeneous profile on the leading block.
struct ProfileSpec {
    std::size_t dim = 0;
    std::size_t block = 0;
    std::vector<unsigned> half_degrees;  // d_1..d_l
    unsigned half_total = 0;             // k
};

/// d^2 P / dz_i dzbar_j at x by central differences in the real coordinates.
std::complex<double> wirtinger_difference(const HermPoly& p, const ComplexPoint& x, std::size_t i, std::size_t j,
                                          double h);

ProfileSpec random_profile(Gen& g, std::size_t max_dim, unsigned max_degree);
/// Sum of |z_1^{d_1}..z_l^{d_l} q_i(z')|^2 matching the profile; with
/// `monomial_only` each q_i is a single monomial.
HermPoly profile_instance(Gen& g, const ProfileSpec& spec, std::size_t count, bool monomial_only);

}  // namespace hermpsh::testing

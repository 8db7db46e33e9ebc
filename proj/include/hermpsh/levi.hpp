#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hermpsh/herm_poly.hpp"
#include "hermpsh/linear_algebra.hpp"

namespace hermpsh {

using ComplexPoint = std::vector<std::complex<double>>;

/// Complex Hessian (d^2 P / dz_i dzbar_j) as a matrix of mixed polynomials.
/// Entry (j, i) is the conjugate of entry (i, j).
using PolyMatrix = Matrix<MixedPoly>;

PolyMatrix hessian(const HermPoly& p);

/// Numeric Hessian at a point.
Matrix<std::complex<double>> evaluate(const PolyMatrix& h, std::span<const std::complex<double>> point);

/// L(P; p, V) = sum_ij V_i H_ij(p) conj(V_j).
double levi_form(const HermPoly& p, std::span<const std::complex<double>> point,
                 std::span<const std::complex<double>> direction);

/// Exact Levi form at a Gaussian-rational point and direction.
GaussianRational levi_form_exact(const HermPoly& p, std::span<const GaussianRational> point,
                                 std::span<const GaussianRational> direction);

/// L(P; z, W(z)) expanded as a polynomial in z, zbar for a holomorphic field W.
MixedPoly levi_form_along(const HermPoly& p, std::span<const HoloPoly> field);

struct PshWitness {
    ComplexPoint point;
    ComplexPoint direction;  // unit vector with L(P; point, direction) == eigenvalue
    double eigenvalue = 0;
};

struct PshVerdict {
    bool passed = true;
    std::optional<PshWitness> witness;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Smallest Hessian eigenvalue seen over all samples.
    double min_eigenvalue = 0;
};

/// Sample points reproducibly from the seed: a third from the unit polydisc,
/// the rest scaled onto polydisc shells of radius 1/2 and 2.
std::vector<ComplexPoint> psh_sample_points(std::size_t dim, std::size_t count, std::uint64_t seed);

/// Numeric falsifier: fails iff some sampled minimum Hessian eigenvalue is < -tol.
/// The witness is the first failing sample in generation order.
PshVerdict psh_sample_test(const HermPoly& p, std::size_t count, std::uint64_t seed, double tol);

double min_eigenvalue(const Matrix<std::complex<double>>& h);

struct DiagonalCheck {
    bool passed = true;
    std::optional<MultiIndex> offending;
};

/// Each diagonal coefficient a_{alpha,alpha} must be real and >= 0. Necessary
/// for plurisubharmonicity, not sufficient. Throws NotHomogeneous unless P is
/// homogeneous of even degree.
DiagonalCheck diagonal_nonneg_check(const HermPoly& p);

struct AveragedLevi {
    /// Exact coefficient S with average integral == (2 pi)^n * S.
    mpq_class exact_coefficient;
    /// (2 pi)^n * S in double precision.
    double exact = 0;
    /// Trapezoidal torus quadrature; set only when dim <= 3.
    std::optional<double> quadrature;
};

/// Closed form (2 pi)^n sum_alpha a_{alpha,alpha} |sum_j alpha_j c_j|^2 r^{2 alpha}
/// of the torus integral of L(P; r e^{i theta}, (c_j r_j e^{i theta_j})).
AveragedLevi averaged_levi(const HermPoly& p, std::span<const GaussianRational> c,
                           std::span<const mpq_class> r, bool with_quadrature = true);

/// Trapezoidal quadrature with `nodes` points per angle. Throws DimensionTooLarge for dim > 3.
double averaged_levi_quadrature(const HermPoly& p, std::span<const GaussianRational> c,
                                std::span<const mpq_class> r, unsigned nodes);

/// True iff P restricted to span(basis) has no mixed terms. Throws DependentBasis.
bool pluriharmonic_along_subspace(const HermPoly& p, const std::vector<std::vector<GaussianRational>>& basis);

}  // namespace hermpsh

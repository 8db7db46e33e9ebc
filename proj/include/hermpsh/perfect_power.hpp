#pragma once

#include "hermpsh/holo_poly.hpp"

namespace hermpsh {

/// g == unit * base^power with base monic and power maximal.
struct PerfectPower {
    HoloPoly base;
    unsigned power = 1;
    GaussianRational unit;
};

/// Maximal perfect-power decomposition of a homogeneous g of positive degree.
/// Throws ZeroPolynomial, NotHomogeneous.
PerfectPower perfect_power_base(const HoloPoly& g);

/// Monic m-th root of a monic polynomial, if one exists.
std::optional<HoloPoly> monic_root(const HoloPoly& monic_g, unsigned m);

}  // namespace hermpsh

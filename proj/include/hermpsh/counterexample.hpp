#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermpsh/herm_poly.hpp"

namespace hermpsh {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CounterexampleFixture {
    HermPoly p;
    std::vector<HoloPoly> g;
    std::vector<std::string> variables;
};

/// |z|^2 (|w1|^4 + |w1^2 - w1 w2|^2 + |w2|^4) on C^3 with G = (z w1^2, z w2^2).
CounterexampleFixture counterexample_fixture();

struct CounterexampleOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

struct CounterexampleReport {
    std::vector<CheckResult> checks;
    /// q_beta parts whose span dimension is the obstruction.
    std::vector<HoloPoly> obstruction_parts;
    std::size_t span_dimension = 0;
    bool confirmed = false;
};

/// Five checks: psh sampling, diagonal nonnegativity, exact Levi null
/// directions for G, separate homogeneity only in the first variable, and a
/// span dimension of the q_beta parts exceeding the number of G components.
/// The last one is the obstruction to writing P as Q(F_1, F_2); the full
/// non-existence argument is not machine checked.
CounterexampleReport verify_counterexample(const CounterexampleFixture& fixture,
                                           const CounterexampleOptions& options = {});
CounterexampleReport verify_counterexample(const CounterexampleOptions& options = {});

}  // namespace hermpsh

#pragma once

// Random exact test data and the verification sweeps shared by the command
// line and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aromatic/elemental.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

using Rng = std::mt19937_64;

/// Small rationals p/q with |p| <= 5, 1 <= q <= 3 (zero allowed).
Rational random_rational(Rng& rng);
/// Dense polynomial of total degree <= degree with random small rational coefficients.
PolyScalar random_polynomial(std::size_t dimension, int degree, Rng& rng);
PolyVecField random_field(std::size_t dimension, int degree, Rng& rng);
/// A random value for every forest of the domain up to `order`.
CoeffMap random_coeff_map(Domain domain, std::size_t order, Rng& rng);

struct SweepOutcome {
    std::string instance;
    Verification result;
};

struct SweepReport {
    std::vector<SweepOutcome> outcomes;
    std::size_t failures() const;
};

struct SweepConfig {
    std::size_t max_size = 5;   // composition lemma: |phi1| + |phi2| <= max_size
    std::size_t order = 3;      // series checks
    std::size_t instances = 10;
    std::size_t dimension = 2;
    std::uint64_t seed = 1;
};

/// Every pair with |phi1| + |phi2| <= max_size, one random cubic f and quadratic G.
SweepReport sweep_composition_lemma(const SweepConfig& config);
/// Random AF-map pairs (b, a).
SweepReport sweep_composition_theorem(const SweepConfig& config);
/// Random AT-maps a; also checks bar a(<b>) = 0.
SweepReport sweep_sseries_of_map(const SweepConfig& config);
/// Random (b, a) pairs, then a = delta_<b> for each b (div B_f(b) = S_f(nabla b)).
SweepReport sweep_substitution_theorem(const SweepConfig& config);

}  // namespace aromatic

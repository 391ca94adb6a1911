#pragma once

#include <cstdint>
#include <string>

#include "hilbert/spaces.hpp"

namespace hilbert::verify {

// Deterministic counter-based generator (SplitMix64 core).  The exact
// construction is documented in the README so certificates reproduce across
// implementations.
struct CounterRng {
    std::uint64_t seed;

    // uniform in (0,1], from counter c
    double uniform(std::uint64_t c) const;
    // standard normal via Box-Muller from counters (2c, 2c+1)
    double normal(std::uint64_t c) const;
};

struct BoundCertificate {
    spaces::SpaceSpec source;
    spaces::SpaceSpec target;
    double claimed = 0.0;
    int trials = 0;
    double worst_ratio = 0.0;
    std::string worst_function;
    bool passed = false;
    std::uint64_t seed = 0;
};

// Samples random polynomials (degree <= 30, standard normal coefficients),
// normalizes them to unit source norm, applies the operator and measures the
// target norm.  Throws std::domain_error for (source, target) pairs that are
// unbounded; those belong to formulas::unboundedness_probe.
BoundCertificate bound_certificate(const spaces::SpaceSpec& source,
                                   const spaces::SpaceSpec& target,
                                   double claimed, int trials,
                                   std::uint64_t seed);

// ||Hf||_target / ||f||_source for one named function.
double named_function_ratio(const spaces::SpaceSpec& source,
                            const spaces::SpaceSpec& target,
                            const spaces::FunctionHandle& f);

// The per-theorem lower-bound quantity evaluated at radius r_probe for the
// extremal function of that theorem ("TH61", "TH71", "TH52").
double attainment_ratio(const std::string& theorem, double alpha,
                        double r_probe);

struct CrosscheckReport {
    double max_deviation = 0.0;
    int degree = 0;
    int samples = 0;
};

// Max pairwise deviation among the matrix, kernel-integral and
// weighted-composition representations over random polynomials at random
// points with |z| <= 0.9.
CrosscheckReport crosscheck_representations(int degree, int samples,
                                            std::uint64_t seed);

struct RadialAuditReport {
    double polar_sup = 0.0;
    double radial_sup = 0.0;
    double gap = 0.0;  // polar - radial; <= 0 means the radial scan wins
    int angles = 0;
};

// Compares sup over a polar grid of the weighted operator image with the
// radial-only sup.  kernel ids: "TH31", "TH41" (weighted |H f_alpha|) and
// "CONST" (Korenblum-weighted constant, the trivial r = 0 case).
RadialAuditReport radial_reduction_audit(const std::string& kernel_id,
                                         double alpha, int angles);

}  // namespace hilbert::verify

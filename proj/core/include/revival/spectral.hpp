// spectral.hpp — classification of eigenvalues into rational/irrational sets
// and the common revival denominator T.
//
// Rationality of a float is undecidable, so the classifier is parameterized by
// (tolerance, max_denominator); both are carried in the result so downstream
// reports stay reproducible. Defaults: 1e-9 and 1000.

#pragma once

#include "revival/rational.hpp"
#include "revival/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <vector>

namespace revival {

inline constexpr double kDefaultClassifyTol = 1e-9;
inline constexpr long long kDefaultMaxDenominator = 1000;

struct RationalEigenvalue {
    int index = 0;  // 0-based position in the ascending spectrum
    Fraction value;
};

struct EigenClassification {
    std::vector<int> rational_indices;    // set A, ascending
    std::vector<int> irrational_indices;  // set B, ascending
    std::vector<RationalEigenvalue> rational_values;
    std::optional<long long> common_denominator;  // T; empty when A is empty
    double tolerance = kDefaultClassifyTol;
    long long max_denominator = kDefaultMaxDenominator;

    int n_rational() const { return static_cast<int>(rational_indices.size()); }
    int n_irrational() const { return static_cast<int>(irrational_indices.size()); }
    bool is_rational_index(int index) const;

    // T, or throws std::runtime_error when no rational eigenvalue was found.
    long long period_denominator() const;
};

// Assigns each eigenvalue to A iff its best rational approximation with
// denominator <= max_denominator lies within tolerance; T = lcm of the
// accepted denominators. Throws when a rational and an irrational eigenvalue
// are degenerate within tolerance (the A/B eigenbasis split would be
// ill-defined).
EigenClassification classify(const SpectralDecomposition& spec, double tolerance = kDefaultClassifyTol,
                             long long max_denominator = kDefaultMaxDenominator);

struct SpacingViolation {
    int i = 0;  // indices into the ascending spectrum, both in B
    int j = 0;
    Fraction approximation;  // the rational value found within tolerance
};

// Tests every pair in B for a rational energy difference at the classifier's
// resolution. An empty result means the irrational-spacing assumption holds at
// this (tolerance, max_denominator).
std::vector<SpacingViolation> check_irrational_spacing(const EigenClassification& cls,
                                                       const SpectralDecomposition& spec,
                                                       double tolerance,
                                                       long long max_denominator);

// 2*pi*T. Throws when T is undefined.
double revival_period(const EigenClassification& cls);

// {tolerance, max_denominator, T, rational: [{index, num, den}],
//  irrational: [index], spacing_violations: [[i, j]], warnings: [...]}
nlohmann::json classification_report(const EigenClassification& cls,
                                     const std::vector<SpacingViolation>& violations);

}  // namespace revival

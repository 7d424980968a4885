#include "revival/spectral.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revival {

bool EigenClassification::is_rational_index(int index) const {
    return std::binary_search(rational_indices.begin(), rational_indices.end(), index);
}

long long EigenClassification::period_denominator() const {
    if (!common_denominator)
        throw std::runtime_error("EigenClassification: no rational eigenvalues, T undefined");
    return *common_denominator;
}

EigenClassification classify(const SpectralDecomposition& spec, double tolerance,
                             long long max_denominator) {
    if (tolerance <= 0) throw std::invalid_argument("classify: tolerance must be positive");
    if (max_denominator < 1) throw std::invalid_argument("classify: max_denominator must be >= 1");

    EigenClassification cls;
    cls.tolerance = tolerance;
    cls.max_denominator = max_denominator;

    const Eigen::Index d = spec.dim();
    for (Eigen::Index i = 0; i < d; ++i) {
        const double e = spec.eigenvalues(i);
        const Fraction f = best_rational(e, max_denominator);
        if (std::abs(e - f.value()) <= tolerance) {
            cls.rational_indices.push_back(static_cast<int>(i));
            cls.rational_values.push_back({static_cast<int>(i), f});
        } else {
            cls.irrational_indices.push_back(static_cast<int>(i));
        }
    }

    if (!cls.rational_values.empty()) {
        long long t = 1;
        for (const RationalEigenvalue& re : cls.rational_values) t = lcm_ll(t, re.value.den);
        cls.common_denominator = t;
    }

    // Degeneracy across the A/B boundary makes the eigenbasis split
    // ill-defined; reject it here rather than in every consumer. The floor
    // covers pairs an eigensolver cannot resolve even when the caller asks
    // for a tighter classification tolerance.
    const double degeneracy_gap = std::max(tolerance, 1e-11);
    for (Eigen::Index i = 0; i + 1 < d; ++i) {
        const bool ri = cls.is_rational_index(static_cast<int>(i));
        const bool rj = cls.is_rational_index(static_cast<int>(i + 1));
        if (ri != rj && std::abs(spec.eigenvalues(i) - spec.eigenvalues(i + 1)) <= degeneracy_gap)
            throw std::runtime_error(
                "classify: degenerate eigenvalue pair straddles the rational/irrational split");
    }

    return cls;
}

std::vector<SpacingViolation> check_irrational_spacing(const EigenClassification& cls,
                                                       const SpectralDecomposition& spec,
                                                       double tolerance,
                                                       long long max_denominator) {
    std::vector<SpacingViolation> out;
    const auto& b = cls.irrational_indices;
    for (std::size_t a = 0; a < b.size(); ++a) {
        for (std::size_t c = a + 1; c < b.size(); ++c) {
            const double diff = spec.eigenvalues(b[a]) - spec.eigenvalues(b[c]);
            const Fraction f = best_rational(diff, max_denominator);
            if (std::abs(diff - f.value()) <= tolerance) out.push_back({b[a], b[c], f});
        }
    }
    return out;
}

double revival_period(const EigenClassification& cls) {
    return 2.0 * std::numbers::pi * static_cast<double>(cls.period_denominator());
}

nlohmann::json classification_report(const EigenClassification& cls,
                                     const std::vector<SpacingViolation>& violations) {
    nlohmann::json rational = nlohmann::json::array();
    for (const RationalEigenvalue& re : cls.rational_values)
        rational.push_back({{"index", re.index}, {"num", re.value.num}, {"den", re.value.den}});

    nlohmann::json viol = nlohmann::json::array();
    for (const SpacingViolation& v : violations) viol.push_back({v.i, v.j});

    nlohmann::json warnings = nlohmann::json::array();
    if (cls.n_rational() == 1)
        warnings.push_back("only one rational eigenvalue; free-state span is one-dimensional");

    nlohmann::json j{{"tolerance", cls.tolerance},
                     {"max_denominator", cls.max_denominator},
                     {"rational", rational},
                     {"irrational", cls.irrational_indices},
                     {"spacing_violations", viol},
                     {"warnings", warnings}};
    if (cls.common_denominator) j["T"] = *cls.common_denominator;
    else j["T"] = nullptr;
    return j;
}

}  // namespace revival

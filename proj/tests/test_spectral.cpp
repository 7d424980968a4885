#include "revival/spectral.hpp"

#include "revival/hamiltonians.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

using namespace revival;

namespace {

SpectralDecomposition diag_spectrum(std::initializer_list<double> values) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()),
                            static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) m(i, i) = v, ++i;
    return SpectralDecomposition::diagonalize(DenseOperator::from_matrix(m));
}

}  // namespace

TEST_CASE("classify the rescaling-example spectrum") {
    const auto spec = diag_spectrum({1.0, 2.0, std::sqrt(2.0), 2.0 * std::sqrt(2.0)});
    const EigenClassification cls = classify(spec, 1e-9, 64);
    CHECK(cls.n_rational() == 2);
    CHECK(cls.n_irrational() == 2);
    CHECK(cls.period_denominator() == 1);
    // Ascending order: 1, sqrt(2), 2, 2 sqrt(2) -> rational at 0 and 2.
    CHECK(cls.rational_indices == std::vector<int>{0, 2});
    CHECK(cls.irrational_indices == std::vector<int>{1, 3});
}

TEST_CASE("classify halves and pi") {
    const auto spec = diag_spectrum({0.5, 1.5, std::numbers::pi, 100.0});
    const EigenClassification cls = classify(spec, 1e-9, 64);
    CHECK(cls.n_rational() == 3);  // 1/2, 3/2, 100
    CHECK(cls.period_denominator() == 2);
    CHECK_FALSE(cls.is_rational_index(2));  // pi sits between 3/2 and 100
}

TEST_CASE("toy model has exactly one rational eigenvalue") {
    const auto spec = SpectralDecomposition::diagonalize(build_toy_model());
    const EigenClassification cls = classify(spec, 1e-9, 64);
    REQUIRE(cls.n_rational() == 1);
    CHECK(cls.rational_values[0].value == Fraction{3, 1});
    CHECK(check_irrational_spacing(cls, spec, 1e-9, 64).empty());
}

TEST_CASE("spacing violations are reported") {
    const auto spec = diag_spectrum({0.0, 1.0, std::sqrt(2.0), 1.0 + std::sqrt(2.0)});
    const EigenClassification cls = classify(spec, 1e-9, 64);
    REQUIRE(cls.n_irrational() == 2);
    const auto violations = check_irrational_spacing(cls, spec, 1e-9, 64);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].approximation == Fraction{-1, 1});
}

TEST_CASE("toy-model-style surd set has no violations") {
    // Differences of {a + b sqrt(2) + c sqrt(10)} combinations are checked
    // exactly by the synthetic generator; numerically they must also pass.
    const double s2 = std::sqrt(2.0), s10 = std::sqrt(10.0);
    const auto spec = diag_spectrum({-1.0 - 2.0 * s2, -1.0 + s2 - s10, 3.0, -1.0 + s2 + s10});
    const EigenClassification cls = classify(spec, 1e-9, 1000);
    CHECK(check_irrational_spacing(cls, spec, 1e-9, 1000).empty());
}

TEST_CASE("revival period") {
    const auto spec1 = diag_spectrum({1.0, 2.0, std::sqrt(2.0), std::sqrt(3.0)});
    CHECK(revival_period(classify(spec1, 1e-9, 64)) ==
          doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));

    const auto spec2 = diag_spectrum({0.5, 1.5, std::sqrt(2.0), std::sqrt(3.0)});
    CHECK(revival_period(classify(spec2, 1e-9, 64)) ==
          doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));

    // Denominators {2, 3}: T = 6, period 12 pi.
    const auto spec3 = diag_spectrum({0.5, 1.0 / 3.0, std::sqrt(2.0), std::sqrt(3.0)});
    CHECK(revival_period(classify(spec3, 1e-9, 64)) ==
          doctest::Approx(12.0 * std::numbers::pi).epsilon(1e-14));

    const auto none = diag_spectrum({std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)});
    CHECK_THROWS(revival_period(classify(none, 1e-12, 64)));
}

TEST_CASE("phase closure at the revival time") {
    SyntheticSpectrum s;
    s.rationals = {make_fraction(1, 3), make_fraction(3, 4), make_fraction(-5, 6),
                   make_fraction(7, 2)};
    s.irrationals = {Surd{{0, 1}, {1, 1}, 2}, Surd{{0, 1}, {1, 1}, 3}, Surd{{0, 1}, {1, 1}, 5},
                     Surd{{0, 1}, {1, 1}, 7}};
    const SyntheticResult res = build_synthetic(s, 9);
    const auto spec = SpectralDecomposition::diagonalize(res.hamiltonian);
    const EigenClassification cls = classify(spec, 1e-9, 64);
    const double period = revival_period(cls);
    const double t = static_cast<double>(cls.period_denominator());
    for (int i : cls.rational_indices) {
        const Complex phase = std::exp(-kImag * spec.eigenvalues(i) * period);
        CHECK(std::abs(phase - Complex{1.0, 0.0}) <=
              2.0 * std::numbers::pi * t * cls.tolerance + 1e-9);
    }
}

TEST_CASE("ground truth is reproduced at sufficient resolution") {
    SyntheticSpectrum s;
    s.rationals = {make_fraction(2, 5), make_fraction(-3, 7)};
    s.irrationals = {Surd{{0, 1}, {1, 1}, 2}, Surd{{1, 1}, {2, 3}, 3}, Surd{{0, 1}, {-1, 2}, 5},
                     Surd{{-2, 1}, {1, 1}, 6}, Surd{{0, 1}, {3, 1}, 7}, Surd{{1, 3}, {1, 1}, 10}};
    const SyntheticResult res = build_synthetic(s, 1234);
    const auto spec = SpectralDecomposition::diagonalize(res.hamiltonian);
    for (double tol : {1e-10, 1e-9}) {
        const EigenClassification cls = classify(spec, tol, 35);  // lcm(5,7) = 35
        CHECK(cls.rational_indices == res.truth.rational_indices);
        CHECK(cls.period_denominator() == res.truth.period_denominator());
    }
}

TEST_CASE("degeneracy across the class boundary is rejected") {
    const auto spec = diag_spectrum({1.0, 1.0 + 2e-13, std::sqrt(2.0), std::sqrt(3.0)});
    // At tolerance 1e-14 the first value classifies rational, the second does
    // not, and they are degenerate at solver resolution.
    CHECK_THROWS(classify(spec, 1e-14, 64));
    // At tolerance 1e-9 both classify rational: fine.
    CHECK_NOTHROW(classify(spec, 1e-9, 64));
}

TEST_CASE("classification report schema") {
    const auto spec = SpectralDecomposition::diagonalize(build_toy_model());
    const EigenClassification cls = classify(spec, 1e-9, 64);
    const auto violations = check_irrational_spacing(cls, spec, 1e-9, 64);
    const nlohmann::json j = classification_report(cls, violations);
    CHECK(j["T"] == 1);
    CHECK(j["tolerance"] == 1e-9);
    CHECK(j["max_denominator"] == 64);
    CHECK(j["rational"].size() == 1);
    CHECK(j["rational"][0]["num"] == 3);
    CHECK(j["rational"][0]["den"] == 1);
    CHECK(j["irrational"].size() == 3);
    CHECK(j["spacing_violations"].empty());
    CHECK(j["warnings"].size() == 1);  // single rational eigenvalue warning
}

TEST_CASE("classifier parameter validation") {
    const auto spec = diag_spectrum({1.0, 2.0});
    CHECK_THROWS(classify(spec, -1.0, 64));
    CHECK_THROWS(classify(spec, 1e-9, 0));
}

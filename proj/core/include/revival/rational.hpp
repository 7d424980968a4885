// rational.hpp — exact fractions and best rational approximation by continued
// fractions.

#pragma once

#include <cstdint>
#include <string>

namespace revival {

struct Fraction {
    long long num = 0;
    long long den = 1;  // > 0, gcd(num, den) = 1 after reduce()

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Fraction reduced() const;
    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction make_fraction(long long num, long long den);

// Best rational approximation p/q to x with 1 <= q <= max_den: the continued
// fraction convergent cut at the denominator bound, against which the largest
// admissible semiconvergent is compared. O(log max_den).
Fraction best_rational(double x, long long max_den);

long long gcd_ll(long long a, long long b);
// Throws std::overflow_error if the result does not fit in long long.
long long lcm_ll(long long a, long long b);

}  // namespace revival

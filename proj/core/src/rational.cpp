#include "revival/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace revival {

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm_ll: zero argument");
    const long long g = gcd_ll(a, b);
    const long long x = (a < 0 ? -a : a) / g;
    const long long babs = b < 0 ? -b : b;
    if (x > std::numeric_limits<long long>::max() / babs)
        throw std::overflow_error("lcm_ll: overflow");
    return x * babs;
}

Fraction Fraction::reduced() const {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    long long g = gcd_ll(num, den);
    if (g == 0) g = 1;
    const long long sign = den < 0 ? -1 : 1;
    return {sign * num / g, sign * den / g};
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction make_fraction(long long num, long long den) {
    return Fraction{num, den}.reduced();
}

Fraction best_rational(double x, long long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("best_rational: non-finite input");
    if (max_den < 1) throw std::invalid_argument("best_rational: max_den < 1");

    const double ax = std::abs(x);

    // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}, seeded with
    // h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
    long long h_m = 1, k_m = 0;   // previous convergent
    long long h_mm = 0, k_mm = 1; // one before that
    double y = ax;

    const auto err = [ax](long long p, long long q) {
        return std::abs(ax - static_cast<double>(p) / static_cast<double>(q));
    };

    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(y);
        if (fl > 9.0e18) break;
        const long long a = static_cast<long long>(fl);

        if (k_m != 0 && a > (std::numeric_limits<long long>::max() - k_mm) / k_m) break;
        const long long k_next = a * k_m + k_mm;
        const long long h_next = a * h_m + h_mm;

        if (k_next > max_den) {
            // Largest admissible semiconvergent j*h_m + h_mm with denominator
            // within the bound; keep it only if it beats the last convergent.
            const long long j = k_m > 0 ? (max_den - k_mm) / k_m : 0;
            if (j > 0 && k_m > 0) {
                const long long qs = j * k_m + k_mm;
                const long long ps = j * h_m + h_mm;
                if (err(ps, qs) < err(h_m, k_m)) {
                    h_m = ps;
                    k_m = qs;
                }
            }
            break;
        }

        h_mm = h_m;
        k_mm = k_m;
        h_m = h_next;
        k_m = k_next;

        const double rem = y - fl;
        if (rem < 1e-14) break;  // |x| is (numerically) exactly h_m/k_m
        y = 1.0 / rem;
    }

    if (k_m == 0) {  // |x| too large for any convergent; clamp to nearest integer-free form
        return make_fraction(x < 0 ? -h_m : h_m, 1);
    }
    return make_fraction(x < 0 ? -h_m : h_m, k_m);
}

}  // namespace revival

#pragma once

#include <cstdint>
#include <string>

#include "hylag/errors.hpp"

namespace hylag {

// Overflow-checked signed 64-bit helpers. All throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Minimal exact rational, normalized (den > 0, gcd(num,den) = 1).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b);
};

}  // namespace hylag

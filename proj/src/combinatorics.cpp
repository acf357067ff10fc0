#include "hylag/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace hylag {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 multiplication overflow");
    return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw RangeError("checked_pow: negative exponent");
    std::int64_t out = 1;
    for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // result holds C(n-k+i, i) exactly after each step; the intermediate
    // product needs 128 bits even when every C value fits in 64
    unsigned __int128 result = 1;
    constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(INT64_MAX);
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) /
                 static_cast<unsigned __int128>(i);
        if (result > kMax) throw std::overflow_error("binomial coefficient exceeds int64");
    }
    return static_cast<std::int64_t>(result);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw InputError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    // sizes in this project stay far from overflow after reduction
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

}  // namespace hylag

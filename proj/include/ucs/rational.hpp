#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucs {

// Exact rational with positive denominator. All conjecture-relevant
// comparisons go through 128-bit cross multiplication, never floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        return Rational{num, den};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline bool operator==(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}
inline bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator>(Rational a, Rational b) { return b < a; }
inline bool operator<=(Rational a, Rational b) { return !(b < a); }
inline bool operator>=(Rational a, Rational b) { return !(a < b); }

}  // namespace ucs

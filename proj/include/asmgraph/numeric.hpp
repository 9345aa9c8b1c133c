#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace asmg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational '" + s + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rational &r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

// Exact square root of a nonnegative rational, if it exists.
inline bool rational_sqrt(const Rational &x, Rational &root)
{
    if (x < 0) {
        return false;
    }
    Integer n = numerator(x), d = denominator(x);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) {
        return false;
    }
    root = Rational(rn, rd);
    return true;
}

template <class T>
T power(T base, unsigned exponent)
{
    T result(1);
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

// SplitMix64 finalizer; derives independent per-task seeds from (seed, index).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace asmg

#pragma once

// Sparse polynomials in q^{1/2}. Exponents are stored doubled, so the key 3
// denotes q^{3/2}.

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "error.hpp"
#include "numeric.hpp"

namespace asmg {

struct NonExactDivision : Error {
    NonExactDivision() : Error("NonExactDivision", "polynomial division left a nonzero remainder") {}
};

namespace detail {

inline bool divide_coeff(const Integer &a, const Integer &b, Integer &out)
{
    if (a % b != 0) return false;
    out = a / b;
    return true;
}

inline bool divide_coeff(const Rational &a, const Rational &b, Rational &out)
{
    out = a / b;
    return true;
}

inline std::string coeff_string(const Integer &c) { return c.str(); }
inline std::string coeff_string(const Rational &c) { return asmg::to_string(c); }

} // namespace detail

template <class Coeff>
class HalfExpPoly {
public:
    using coeff_type = Coeff;
    using term_map = std::map<long, Coeff>;

    HalfExpPoly() = default;
    HalfExpPoly(const Coeff &c) { add_term(0, c); }
    HalfExpPoly(int c) { add_term(0, Coeff(c)); }

    // c * q^{twice_exponent / 2}
    static HalfExpPoly term(long twice_exponent, const Coeff &c)
    {
        HalfExpPoly p;
        p.add_term(twice_exponent, c);
        return p;
    }
    static HalfExpPoly q_power(long exponent) { return term(2 * exponent, Coeff(1)); }
    // 1 - q^k
    static HalfExpPoly one_minus_q_power(long k) { return HalfExpPoly(1) - q_power(k); }

    const term_map &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(long twice_exponent) const
    {
        auto it = terms_.find(twice_exponent);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    // Doubled exponents of the highest / lowest terms; 0 for the zero polynomial.
    long twice_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    long twice_low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

    bool has_integer_exponents() const
    {
        for (const auto &[e, c] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }

    // Value at q = root^2.
    Rational evaluate_at_root(const Rational &root) const
    {
        Rational total = 0;
        for (const auto &[e, c] : terms_) {
            Rational p = e >= 0 ? power(root, static_cast<unsigned>(e)) : 1 / power(root, static_cast<unsigned>(-e));
            total += Rational(c) * p;
        }
        return total;
    }

    // q^{deg} P(1/q)
    HalfExpPoly reflected() const
    {
        HalfExpPoly out;
        const long d = twice_degree();
        for (const auto &[e, c] : terms_) out.add_term(d - e, c);
        return out;
    }

    HalfExpPoly &operator+=(const HalfExpPoly &o)
    {
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    HalfExpPoly &operator-=(const HalfExpPoly &o)
    {
        for (const auto &[e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    HalfExpPoly &operator*=(const HalfExpPoly &o) { return *this = *this * o; }

    friend HalfExpPoly operator+(HalfExpPoly a, const HalfExpPoly &b) { return a += b; }
    friend HalfExpPoly operator-(HalfExpPoly a, const HalfExpPoly &b) { return a -= b; }
    friend HalfExpPoly operator-(const HalfExpPoly &a) { return HalfExpPoly() - a; }
    friend HalfExpPoly operator*(const HalfExpPoly &a, const HalfExpPoly &b)
    {
        HalfExpPoly out;
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend bool operator==(const HalfExpPoly &, const HalfExpPoly &) = default;

    // Exact quotient; throws NonExactDivision if `den` does not divide.
    friend HalfExpPoly divide_exact(const HalfExpPoly &num, const HalfExpPoly &den)
    {
        if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
        HalfExpPoly quotient, rest = num;
        const auto &[lead_e, lead_c] = *den.terms_.rbegin();
        while (!rest.is_zero() && rest.twice_degree() >= lead_e) {
            const auto &[e, c] = *rest.terms_.rbegin();
            Coeff factor;
            if (!detail::divide_coeff(c, lead_c, factor)) throw NonExactDivision();
            const HalfExpPoly t = term(e - lead_e, factor);
            quotient += t;
            rest -= t * den;
        }
        if (!rest.is_zero()) throw NonExactDivision();
        return quotient;
    }

    // Ascending exponents, e.g. "1 - 2q + 2q^3 - q^4"; half exponents print as q^(3/2).
    std::string to_string(const std::string &var = "q") const
    {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            const bool negative = c < 0;
            const Coeff mag = negative ? Coeff(-c) : c;
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                out << detail::coeff_string(mag);
                continue;
            }
            if (mag != 1) out << detail::coeff_string(mag);
            out << var;
            if (e % 2 == 0) {
                if (e != 2) out << "^" << e / 2;
            } else {
                out << "^(" << e << "/2)";
            }
        }
        return out.str();
    }

private:
    void add_term(long e, const Coeff &c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    term_map terms_;
};

using IntQPoly = HalfExpPoly<Integer>;
using RationalQPoly = HalfExpPoly<Rational>;

} // namespace asmg

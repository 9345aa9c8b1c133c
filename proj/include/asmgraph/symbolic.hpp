#pragma once

// Laurent monomials in the matrix variables x_ij, 2x2 minors, and the
// subtraction-free Laurent certificates built from covering chains.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asm.hpp"
#include "determinant.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "numeric.hpp"

namespace asmg {

using RationalMatrix = SquareMatrix<Rational>;

struct Undefined : Error {
    explicit Undefined(Cell at)
        : Error("Undefined", "zero value at x" + std::to_string(at.first) + "," + std::to_string(at.second) +
                                 " under a negative exponent"),
          position(at)
    {
    }
    Cell position;
};

struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string &detail) : Error("VerificationFailure", detail) {}
};

inline std::string variable_name(int i, int j)
{
    if (i < 10 && j < 10) return "x" + std::to_string(i) + std::to_string(j);
    return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// coeff * prod x_ij^{e_ij}; zero exponents are never stored.
class LaurentMonomial {
public:
    using exponent_map = std::map<Cell, int>;

    LaurentMonomial() = default;
    explicit LaurentMonomial(Rational coeff) : coeff_(std::move(coeff)) {}

    static LaurentMonomial variable(int i, int j, int exponent = 1)
    {
        LaurentMonomial m;
        m.multiply_variable({i, j}, exponent);
        return m;
    }

    static LaurentMonomial from_exponents(const exponent_map &exps, Rational coeff = 1)
    {
        LaurentMonomial m(std::move(coeff));
        for (const auto &[cell, e] : exps) m.multiply_variable(cell, e);
        return m;
    }

    const Rational &coeff() const noexcept { return coeff_; }
    const exponent_map &exponents() const noexcept { return exps_; }

    int exponent(int i, int j) const
    {
        auto it = exps_.find({i, j});
        return it == exps_.end() ? 0 : it->second;
    }

    void multiply_variable(Cell cell, int exponent)
    {
        if (exponent == 0) return;
        auto [it, inserted] = exps_.try_emplace(cell, exponent);
        if (!inserted) {
            it->second += exponent;
            if (it->second == 0) exps_.erase(it);
        }
    }

    // All exponents >= -1.
    bool is_almost_positive() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](const auto &kv) { return kv.second >= -1; });
    }
    bool is_polynomial() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](const auto &kv) { return kv.second >= 0; });
    }

    // Value at x_ij = m(i,j); nullopt (with the offending cell) when a
    // variable under a negative exponent is zero.
    std::optional<Rational> try_evaluate(const RationalMatrix &m, Cell *bad = nullptr) const
    {
        Rational value = coeff_;
        for (const auto &[cell, e] : exps_) {
            const Rational &x = m(cell.first, cell.second);
            if (e < 0 && x == 0) {
                if (bad) *bad = cell;
                return std::nullopt;
            }
            value *= e > 0 ? power(x, static_cast<unsigned>(e)) : 1 / power(x, static_cast<unsigned>(-e));
        }
        return value;
    }

    Rational evaluate(const RationalMatrix &m) const
    {
        Cell bad{};
        auto v = try_evaluate(m, &bad);
        if (!v) throw Undefined(bad);
        return *v;
    }

    LaurentMonomial &operator*=(const LaurentMonomial &o)
    {
        coeff_ *= o.coeff_;
        for (const auto &[cell, e] : o.exps_) multiply_variable(cell, e);
        return *this;
    }
    LaurentMonomial &operator/=(const LaurentMonomial &o)
    {
        coeff_ /= o.coeff_;
        for (const auto &[cell, e] : o.exps_) multiply_variable(cell, -e);
        return *this;
    }
    friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial &b) { return a *= b; }
    friend LaurentMonomial operator/(LaurentMonomial a, const LaurentMonomial &b) { return a /= b; }
    friend bool operator==(const LaurentMonomial &, const LaurentMonomial &) = default;

    // Exponent-wise minimum (coefficient 1): the largest monomial dividing both.
    friend LaurentMonomial exponent_min(const LaurentMonomial &a, const LaurentMonomial &b)
    {
        LaurentMonomial out;
        std::map<Cell, int> merged;
        for (const auto &[cell, e] : a.exps_) merged[cell] = std::min(e, b.exponent(cell.first, cell.second));
        for (const auto &[cell, e] : b.exps_)
            if (!merged.count(cell)) merged[cell] = std::min(e, 0);
        for (const auto &[cell, e] : merged) out.multiply_variable(cell, e);
        return out;
    }

    // "x12*x21*x23/x22", with denominators parenthesised when there are several.
    std::string to_string() const
    {
        std::vector<std::string> num, den;
        for (const auto &[cell, e] : exps_) {
            std::string v = variable_name(cell.first, cell.second);
            const int mag = e < 0 ? -e : e;
            if (mag != 1) v += "^" + std::to_string(mag);
            (e > 0 ? num : den).push_back(v);
        }
        std::string s;
        const bool unit = coeff_ == 1 || coeff_ == -1;
        if (coeff_ == -1) s += "-";
        if (!unit) s += asmg::to_string(coeff_);
        for (std::size_t t = 0; t < num.size(); ++t) {
            if (t > 0 || !unit) s += "*";
            s += num[t];
        }
        if (num.empty() && unit) s += "1";
        if (!den.empty()) {
            s += "/";
            if (den.size() > 1) s += "(";
            for (std::size_t t = 0; t < den.size(); ++t) s += (t ? "*" : "") + den[t];
            if (den.size() > 1) s += ")";
        }
        return s;
    }

private:
    Rational coeff_ = 1;
    exponent_map exps_;
};

// x^A = prod x_ij^{a_ij}
inline LaurentMonomial asm_monomial(const Asm &a)
{
    LaurentMonomial m;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) m.multiply_variable({i, j}, a(i, j));
    return m;
}

// x_q^A = q^{beta(A)} x^A, from the substitution x_ij -> q^{(i-j)^2/2} x_ij.
struct QMonomial {
    LaurentMonomial monomial;
    long twice_q_power;

    // Integral for every ASM.
    long q_power() const { return twice_q_power / 2; }
};

inline QMonomial q_monomial(const Asm &a)
{
    long twice = 0;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) twice += static_cast<long>((i - j) * (i - j)) * a(i, j);
    return QMonomial{asm_monomial(a), twice};
}

// Minor on sorted row and column index lists of equal length.
struct MinorRef {
    std::vector<int> rows;
    std::vector<int> cols;

    int size() const noexcept { return static_cast<int>(rows.size()); }
    bool is_small() const noexcept { return size() >= 1 && size() <= 2; }
    bool is_solid() const
    {
        for (std::size_t t = 1; t < rows.size(); ++t)
            if (rows[t] != rows[t - 1] + 1 || cols[t] != cols[t - 1] + 1) return false;
        return true;
    }

    Rational evaluate(const RationalMatrix &m) const { return determinant(m.submatrix(rows, cols)); }

    // |x32 x33; x42 x43|
    std::string to_string() const
    {
        std::string s = "|";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += "; ";
            for (std::size_t c = 0; c < cols.size(); ++c) s += (c ? " " : "") + variable_name(rows[r], cols[c]);
        }
        return s + "|";
    }

    friend bool operator==(const MinorRef &, const MinorRef &) = default;
};

// x^A - x^B = x_ab * corner_terms * minor / corner_divisor for an edge
// A -> B on rectangle (i,j,k,l): x_ab collects the shared entries,
// corner_terms = x_ik^{a_ik} x_il^{a_il} x_jk^{a_jk} x_jl^{a_jl} and
// corner_divisor = x_ik x_jl.
struct EdgeFactor {
    LaurentMonomial x_ab;
    LaurentMonomial corner_terms;
    LaurentMonomial corner_divisor;
    MinorRef minor;

    LaurentMonomial prefix() const { return x_ab * corner_terms; }
    LaurentMonomial combined() const { return prefix() / corner_divisor; }
};

inline EdgeFactor edge_factorization(const Asm &source, const Asm &target, const Rect &r)
{
    classify_edge(source, target, r);
    EdgeFactor f;
    for (int p = 1; p <= source.size(); ++p)
        for (int q = 1; q <= source.size(); ++q) {
            const bool corner = (p == r.i || p == r.j) && (q == r.k || q == r.l);
            (corner ? f.corner_terms : f.x_ab).multiply_variable({p, q}, source(p, q));
        }
    f.corner_divisor = LaurentMonomial::variable(r.i, r.k) * LaurentMonomial::variable(r.j, r.l);
    f.minor = MinorRef{{r.i, r.j}, {r.k, r.l}};
    return f;
}

inline EdgeFactor edge_factorization(const Edge &e) { return edge_factorization(e.source, e.target, e.rect); }

// One telescoping term: x^{A_t} - x^{A_{t+1}} = prefix * minor / divisor.
struct SflStep {
    LaurentMonomial prefix;
    LaurentMonomial divisor;
    MinorRef minor;

    LaurentMonomial combined() const { return prefix / divisor; }

    std::optional<Rational> try_evaluate(const RationalMatrix &m) const
    {
        auto c = combined().try_evaluate(m);
        if (!c) return std::nullopt;
        return *c * minor.evaluate(m);
    }

    friend bool operator==(const SflStep &, const SflStep &) = default;
};

// Certificate that x^A - x^B is subtraction-free Laurent in minors, indexed
// by a covering chain from A up to B.
struct SflCertificate {
    Asm lower;
    Asm upper;
    int beta_lower = 0;
    int beta_upper = 0;
    std::vector<SflStep> steps;

    // Sum of the step values; nullopt if any step is undefined at m.
    std::optional<Rational> try_evaluate(const RationalMatrix &m) const
    {
        Rational total = 0;
        for (const auto &s : steps) {
            auto v = s.try_evaluate(m);
            if (!v) return std::nullopt;
            total += *v;
        }
        return total;
    }
};

inline SflCertificate sfl_certificate(const Asm &a, const Asm &b)
{
    const auto chain = covering_chain(a, b);
    SflCertificate cert{a, b, beta(a), beta(b), {}};
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
        const auto points = essential_points(chain[t + 1]);
        // The step's rectangle is the essential point of the upper element
        // that lowers it to chain[t].
        std::optional<Rect> rect;
        for (auto [i, k] : points) {
            const Rect r{i, i + 1, k, k + 1};
            if (apply_rect(chain[t + 1], r) == chain[t]) {
                rect = r;
                break;
            }
        }
        if (!rect) throw std::logic_error("covering step without a matching essential point");
        const EdgeFactor f = edge_factorization(chain[t], chain[t + 1], *rect);
        cert.steps.push_back(SflStep{f.prefix(), f.corner_divisor, f.minor});
    }
    return cert;
}

// Common-denominator form: x^A - x^B = common * sum_t terms[t].first * minor_t,
// where every term monomial is a polynomial.
struct CombinedForm {
    LaurentMonomial common;
    std::vector<std::pair<LaurentMonomial, MinorRef>> terms;

    std::string to_string() const
    {
        if (terms.empty()) return "0";
        std::string s = common.to_string() + " * (";
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (t) s += " + ";
            if (!terms[t].first.exponents().empty() || terms[t].first.coeff() != 1) {
                s += terms[t].first.to_string() + "*";
            }
            s += terms[t].second.to_string();
        }
        return s + ")";
    }
};

inline CombinedForm combined_form(const SflCertificate &c)
{
    CombinedForm out;
    if (c.steps.empty()) return out;
    out.common = c.steps.front().combined();
    out.common = LaurentMonomial::from_exponents(out.common.exponents());
    for (const auto &s : c.steps) out.common = exponent_min(out.common, s.combined());
    for (const auto &s : c.steps) out.terms.emplace_back(s.combined() / out.common, s.minor);
    return out;
}

// Factored display: one "prefix/divisor * |minor|" term per step.
inline std::string to_display_string(const SflCertificate &c)
{
    if (c.steps.empty()) return "0";
    std::string s;
    for (std::size_t t = 0; t < c.steps.size(); ++t) {
        if (t) s += " + ";
        s += c.steps[t].combined().to_string() + " * " + c.steps[t].minor.to_string();
    }
    return s;
}

// Random matrix with entries p/q, p in 1..9, q in 1..4.
inline RationalMatrix random_positive_matrix(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = Rational(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4));
    return m;
}

struct VerificationReport {
    bool passed = true;
    int samples_checked = 0;
    std::string message;
};

// Exact check at `samples` random positive rational points: each step equals
// the monomial difference of its covering pair, and the steps telescope to
// x^A - x^B. Also checks almost-positivity, small solid minors and the step
// count against the beta difference.
inline VerificationReport verify_certificate(const SflCertificate &c, int samples, std::uint64_t seed)
{
    VerificationReport report;
    auto fail = [&](std::string why) {
        report.passed = false;
        report.message = std::move(why);
        return report;
    };
    if (c.beta_lower != beta(c.lower) || c.beta_upper != beta(c.upper)) return fail("beta pair mismatch");
    if (static_cast<int>(c.steps.size()) != c.beta_upper - c.beta_lower) return fail("step count != beta difference");
    for (std::size_t t = 0; t < c.steps.size(); ++t) {
        const auto &s = c.steps[t];
        if (!s.combined().is_almost_positive()) return fail("step " + std::to_string(t) + " is not almost positive");
        if (s.minor.size() != 2 || !s.minor.is_small() || !s.minor.is_solid())
            return fail("step " + std::to_string(t) + " minor is not a small solid 2x2 minor");
    }
    const auto chain = covering_chain(c.lower, c.upper);
    const auto lower_mono = asm_monomial(c.lower);
    const auto upper_mono = asm_monomial(c.upper);
    for (int k = 0; k < samples; ++k) {
        const auto m = random_positive_matrix(c.lower.size(), mix_seed(seed, static_cast<std::uint64_t>(k)));
        Rational total = 0;
        for (std::size_t t = 0; t < c.steps.size(); ++t) {
            const auto value = c.steps[t].try_evaluate(m);
            const Rational expected = asm_monomial(chain[t]).evaluate(m) - asm_monomial(chain[t + 1]).evaluate(m);
            if (!value || *value != expected) {
                return fail("step " + std::to_string(t) + " disagrees with its monomial difference at sample " +
                            std::to_string(k));
            }
            total += *value;
        }
        if (total != lower_mono.evaluate(m) - upper_mono.evaluate(m)) {
            return fail("telescoped sum disagrees with x^A - x^B at sample " + std::to_string(k));
        }
        ++report.samples_checked;
    }
    return report;
}

inline void require_verified(const SflCertificate &c, int samples, std::uint64_t seed)
{
    const auto report = verify_certificate(c, samples, seed);
    if (!report.passed) throw VerificationFailure(report.message);
}

} // namespace asmg

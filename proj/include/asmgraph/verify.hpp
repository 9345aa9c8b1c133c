#pragma once

// Exhaustive consistency checks over A_n, shared by `asmgraph verify-all`
// and the acceptance suite. Every check returns a result rather than
// throwing so a run reports all findings.

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asm.hpp"
#include "bigrassmannian.hpp"
#include "enumerate.hpp"
#include "lattice.hpp"
#include "symbolic.hpp"
#include "tnn.hpp"

namespace asmg {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Records the first failure message only.
struct Failures {
    bool any = false;
    std::string first;
    void add(const std::string &what)
    {
        if (!any) first = what;
        any = true;
    }
};

inline std::vector<std::vector<bool>> leq_table(const std::vector<Asm> &nodes)
{
    std::vector<IntMatrix> sums;
    sums.reserve(nodes.size());
    for (const auto &a : nodes) sums.push_back(CornerSum(a).values());
    std::vector<std::vector<bool>> leq(nodes.size(), std::vector<bool>(nodes.size()));
    for (std::size_t u = 0; u < nodes.size(); ++u)
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            const auto &x = sums[u].data();
            const auto &y = sums[v].data();
            bool ok = true;
            for (std::size_t t = 0; t < x.size() && ok; ++t) ok = x[t] >= y[t];
            leq[u][v] = ok;
        }
    return leq;
}

} // namespace detail

// prod_{k=0}^{n-1} (3k+1)! / (n+k)!
inline Integer asm_count_formula(int n)
{
    auto factorial = [](int m) {
        Integer f = 1;
        for (int t = 2; t <= m; ++t) f *= t;
        return f;
    };
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= Rational(factorial(3 * k + 1), factorial(n + k));
    return numerator(r);
}

inline CheckResult check_enumeration(int n)
{
    detail::Stopwatch clock;
    CheckResult res{"enumeration count", true, {}, 0.0};
    const auto all = enumerate_asms(n);
    const Integer expected = asm_count_formula(n);
    std::set<std::vector<int>> distinct;
    int permutations = 0;
    for (const auto &a : all) {
        distinct.insert(a.entries().data());
        permutations += !a.is_proper();
    }
    Integer fact = 1;
    for (int t = 2; t <= n; ++t) fact *= t;
    res.passed = Integer(all.size()) == expected && distinct.size() == all.size() && Integer(permutations) == fact &&
                 std::is_sorted(all.begin(), all.end());
    res.detail = "|A_" + std::to_string(n) + "| = " + std::to_string(all.size()) + " (formula " + expected.str() + ")";
    res.seconds = clock.seconds();
    return res;
}

inline CheckResult check_beta_agreement(int n)
{
    detail::Stopwatch clock;
    CheckResult res{"beta evaluators agree", true, {}, 0.0};
    const auto bigr = bigrassmannian_permutations(n);
    detail::Failures f;
    std::size_t count = 0;
    for (const auto &a : enumerate_asms(n)) {
        const int b1 = beta_corner_sum(a), b2 = beta_quadratic(a), b3 = beta_bigrassmannian_count(a, bigr);
        const int bq = static_cast<int>(q_monomial(a).q_power());
        if (b1 != b2 || b2 != b3 || b2 != bq) f.add("disagreement " + std::to_string(b1) + "/" + std::to_string(b2) + "/" + std::to_string(b3));
        ++count;
    }
    res.passed = !f.any;
    res.detail = f.any ? f.first : std::to_string(count) + " ASMs, three evaluators and the q-power agree";
    res.seconds = clock.seconds();
    return res;
}

struct OracleStats {
    std::size_t pairs = 0;
    std::size_t certificates = 0;
    std::size_t counterexamples = 0;
    std::size_t evaluations = 0;
};

// leq <=> certificate <=> no counterexample over all ordered pairs; each
// certificate is evaluated exactly at `samples` TNN points and compared with
// the direct difference; each counterexample is TNN and strictly negative.
inline CheckResult check_order_oracle(int n, int samples, std::uint64_t seed, OracleStats *stats = nullptr)
{
    detail::Stopwatch clock;
    CheckResult res{"order oracle equivalence", true, {}, 0.0};
    const auto nodes = enumerate_asms(n);
    detail::Failures f;
    OracleStats st;
    std::uint64_t task = 0;
    for (std::size_t u = 0; u < nodes.size(); ++u)
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            const Asm &a = nodes[u], &b = nodes[v];
            const std::string tag = "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
            ++st.pairs;
            const bool leq = asm_leq(a, b);
            std::optional<SflCertificate> cert;
            std::optional<Counterexample> cex;
            try {
                cert = sfl_certificate(a, b);
            } catch (const Incomparable &) {
            }
            try {
                cex = counterexample_matrix(a, b);
            } catch (const Comparable &) {
            }
            if (leq != cert.has_value() || leq == cex.has_value()) {
                f.add(tag + ": oracle sides disagree");
                continue;
            }
            if (cert) {
                ++st.certificates;
                for (const auto &s : cert->steps) {
                    if (!s.combined().is_almost_positive() || !s.minor.is_small() || !s.minor.is_solid())
                        f.add(tag + ": certificate step is not almost positive with a small solid minor");
                }
                for (int k = 0; k < samples; ++k) {
                    const auto m = random_tnn(n, mix_seed(seed, task++));
                    const auto value = cert->try_evaluate(m);
                    const Rational direct = evaluate_difference(a, b, m);
                    ++st.evaluations;
                    if (!value || *value != direct || *value < 0) f.add(tag + ": certificate value mismatch or negative");
                }
            }
            if (cex) {
                ++st.counterexamples;
                const Rational value = evaluate_difference(a, b, cex->matrix);
                const CornerSum ca(a), cb(b);
                const auto [k, l] = cex->witness;
                const Rational expected = power(Rational(2), static_cast<unsigned>(ca(k, l))) -
                                          power(Rational(2), static_cast<unsigned>(cb(k, l)));
                if (!(value < 0) || value != expected) f.add(tag + ": counterexample value is not 2^Ca - 2^Cb < 0");
                if (!is_tnn(cex->matrix)) f.add(tag + ": counterexample matrix is not TNN");
            }
        }
    res.passed = !f.any;
    std::ostringstream d;
    d << st.pairs << " pairs, " << st.certificates << " certificates (" << st.evaluations << " exact evaluations), "
      << st.counterexamples << " counterexamples";
    res.detail = f.any ? f.first : d.str();
    res.seconds = clock.seconds();
    if (stats) *stats = st;
    return res;
}

struct GradedStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t covers = 0;
    std::set<int> edge_types;
};

// Edge and cover structure of the ASM graph on A_n: Key-Lemma corner
// pattern, unique edge type, beta jump = rectangle area, covers <=>
// essential points with beta step 1, dichotomy, corner-sign lemmas,
// order <=> reachability, unique source, Bruhat restriction, and (n <= 4)
// unique joins.
inline CheckResult check_graded_structure(int n, GradedStats *stats = nullptr)
{
    detail::Stopwatch clock;
    CheckResult res{"graded lattice structure", true, {}, 0.0};
    detail::Failures f;
    const AsmGraph g = build_graph(n);
    const auto &nodes = g.nodes();
    const std::size_t N = nodes.size();
    const auto leq = detail::leq_table(nodes);
    GradedStats st;
    st.nodes = N;

    for (std::size_t v = 0; v < N; ++v) {
        const Asm &b = nodes[v];
        const std::string tag = "node " + std::to_string(v);
        for (const auto &arc : g.arcs(v)) {
            ++st.edges;
            const Asm &t = nodes[arc.target];
            const Rect &r = arc.rect;
            if (g.beta_of(arc.target) - g.beta_of(v) != r.area()) f.add(tag + ": beta jump != area");
            if (!is_essential(CornerSum(t), r)) f.add(tag + ": rectangle not essential for the target");
            const auto ca = corners(b, r), cb = corners(t, r);
            for (int k = 0; k < 4; ++k)
                if (ca[k] - cb[k] != kCornerDifference[k]) f.add(tag + ": corner difference != (1,-1,-1,1)");
            int matches = 0;
            for (const auto &kind : kEdgeKinds) matches += kind.target == cb && kind.source == ca;
            if (matches != 1) f.add(tag + ": edge matches " + std::to_string(matches) + " table rows");
            if (arc.edge_type < 1 || arc.edge_type > 16) f.add(tag + ": bad edge type");
            st.edge_types.insert(arc.edge_type);
        }
        // Dichotomy and corner-sign lemmas.
        const CornerSum cs(b);
        for (const Rect &r : essential_rects(b)) {
            if (!(beta(apply_rect(b, r)) < beta(b))) f.add(tag + ": essential move does not lower beta");
            if (!(b(r.i, r.k) <= 0 && b(r.j, r.l) <= 0 && b(r.i, r.l) >= 0 && b(r.j, r.k) >= 0))
                f.add(tag + ": corner-sign lemma fails");
        }
        for (const Rect &r : dual_essential_rects(b))
            if (!(beta(apply_rect(b, r)) > beta(b))) f.add(tag + ": dual move does not raise beta");

        // Lower covers by brute force vs essential points.
        std::set<std::size_t> brute;
        for (std::size_t u = 0; u < N; ++u) {
            if (u == v || !leq[u][v]) continue;
            bool cover = true;
            for (std::size_t w = 0; w < N && cover; ++w)
                if (w != u && w != v && leq[u][w] && leq[w][v]) cover = false;
            if (cover) brute.insert(u);
        }
        std::set<std::size_t> via_points;
        for (const auto &c : lower_covers(b)) via_points.insert(*g.find(c));
        if (brute != via_points) f.add(tag + ": covers differ from essential points");
        for (auto u : brute) {
            ++st.covers;
            if (g.beta_of(v) - g.beta_of(u) != 1) f.add(tag + ": cover with beta step != 1");
        }
    }

    // Order <=> reachability; unique source reaching everything.
    std::size_t sources = 0;
    std::vector<bool> has_incoming(N, false);
    for (std::size_t v = 0; v < N; ++v)
        for (const auto &arc : g.arcs(v)) has_incoming[arc.target] = true;
    for (std::size_t v = 0; v < N; ++v) {
        const auto reach = g.reachable_from(v);
        for (std::size_t u = 0; u < N; ++u)
            if (reach[u] != leq[v][u]) f.add("reachability differs from order at (" + std::to_string(v) + "," + std::to_string(u) + ")");
        if (!has_incoming[v]) {
            ++sources;
            if (!(nodes[v] == Asm::identity(n)) || g.beta_of(v) != 0) f.add("source is not the identity");
        }
    }
    if (sources != 1) f.add("graph has " + std::to_string(sources) + " sources");

    // Permutation nodes with type-1 edges reproduce the Bruhat graph.
    std::set<std::pair<std::vector<int>, std::vector<int>>> restricted, bruhat;
    for (std::size_t v = 0; v < N; ++v) {
        if (nodes[v].is_proper()) continue;
        for (const auto &arc : g.arcs(v)) {
            if (arc.edge_type == 1 && !nodes[arc.target].is_proper())
                restricted.emplace(asm_to_permutation(nodes[v]).images(), asm_to_permutation(nodes[arc.target]).images());
            if (!nodes[arc.target].is_proper() && arc.edge_type != 1) f.add("non-type-1 edge between permutations");
        }
    }
    for (const auto &[u, w] : bruhat_graph_edges(n)) bruhat.emplace(u.images(), w.images());
    if (restricted != bruhat) f.add("type-1 permutation edges differ from the Bruhat graph");

    if (n <= 4) {
        for (std::size_t u = 0; u < N; ++u)
            for (std::size_t v = 0; v < N; ++v) {
                std::vector<std::size_t> minimal;
                for (std::size_t w = 0; w < N; ++w) {
                    if (!leq[u][w] || !leq[v][w]) continue;
                    bool is_min = true;
                    for (std::size_t z = 0; z < N && is_min; ++z)
                        if (z != w && leq[u][z] && leq[v][z] && leq[z][w]) is_min = false;
                    if (is_min) minimal.push_back(w);
                }
                if (minimal.size() != 1) f.add("pair without a unique join");
            }
    }

    res.passed = !f.any;
    std::ostringstream d;
    d << st.nodes << " nodes, " << st.edges << " edges, " << st.covers << " covers, edge types {";
    bool first = true;
    for (int t : st.edge_types) {
        d << (first ? "" : ",") << t;
        first = false;
    }
    d << "}";
    res.detail = f.any ? f.first : d.str();
    res.seconds = clock.seconds();
    if (stats) *stats = st;
    return res;
}

inline CheckResult check_bq_agreement(int n)
{
    detail::Stopwatch clock;
    CheckResult res{"B_n(q) four-way agreement", true, {}, 0.0};
    const auto def = bq_definition(n), prod = bq_product(n), qdet = bq_qdet(n), rec = bq_recursion(n);
    res.passed = def == prod && prod == qdet && qdet == rec && def.twice_degree() == 2 * bq_degree(n);
    res.detail = "B_" + std::to_string(n) + "(q) = " + prod.to_string();
    res.seconds = clock.seconds();
    return res;
}

inline CheckResult check_fulton(int n)
{
    detail::Stopwatch clock;
    CheckResult res{"Fulton essential set equivalence", true, {}, 0.0};
    std::size_t count = 0;
    detail::Failures f;
    for (const auto &w : enumerate_permutations(n)) {
        ++count;
        if (fulton_essential_set(w) != essential_points(permutation_to_asm(w))) f.add("mismatch at " + w.one_line());
    }
    res.passed = !f.any;
    res.detail = f.any ? f.first : std::to_string(count) + " permutations";
    res.seconds = clock.seconds();
    return res;
}

// Random matrix with entries p/q, p in -9..9, q in 1..5.
inline RationalMatrix random_rational_matrix(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(1 + rng() % 5));
    return m;
}

// Matrices with a singular interior are redrawn from the next seed.
inline CheckResult check_dodgson(int n, int trials, std::uint64_t seed)
{
    detail::Stopwatch clock;
    CheckResult res{"dodgson condensation n=" + std::to_string(n), true, {}, 0.0};
    detail::Failures f;
    int done = 0, redrawn = 0;
    for (std::uint64_t task = 0; done < trials; ++task) {
        const auto m = random_rational_matrix(n, mix_seed(seed, task));
        try {
            if (dodgson(m) != determinant(m)) f.add("mismatch at draw " + std::to_string(task));
            ++done;
        } catch (const SingularInterior &) {
            ++redrawn;
        }
    }
    res.passed = !f.any;
    res.detail = f.any ? f.first
                       : std::to_string(done) + "/" + std::to_string(trials) + " exact matches, " + std::to_string(redrawn) +
                             " redrawn";
    res.seconds = clock.seconds();
    return res;
}

inline CheckResult check_q_dodgson(int n, int trials, std::uint64_t seed)
{
    detail::Stopwatch clock;
    CheckResult res{"q-dodgson identity n=" + std::to_string(n), true, {}, 0.0};
    detail::Failures f;
    for (int t = 0; t < trials; ++t) {
        const auto m = random_rational_matrix(n, mix_seed(seed, static_cast<std::uint64_t>(t)));
        const auto report = q_dodgson_check(m);
        if (!report.passed) f.add("identity fails at trial " + std::to_string(t));
        if (report.divided && !(*report.divided == cofactor_determinant(q_matrix(m))))
            f.add("divided form differs from the q-determinant at trial " + std::to_string(t));
    }
    res.passed = !f.any;
    res.detail = f.any ? f.first : std::to_string(trials) + "/" + std::to_string(trials) + " symbolic identities hold";
    res.seconds = clock.seconds();
    return res;
}

inline std::vector<CheckResult> verify_all(int n, int samples, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    out.push_back(check_enumeration(n));
    out.push_back(check_beta_agreement(n));
    out.push_back(check_order_oracle(n, samples, seed));
    out.push_back(check_graded_structure(n));
    out.push_back(check_bq_agreement(n));
    out.push_back(check_fulton(n));
    if (n >= 2) {
        out.push_back(check_dodgson(n, 20, seed));
        out.push_back(check_q_dodgson(n, 20, seed));
    }
    return out;
}

} // namespace asmg

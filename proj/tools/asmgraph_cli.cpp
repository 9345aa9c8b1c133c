#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asmgraph/asmgraph.hpp"
#include "asmgraph/io.hpp"
#include "json.hpp"

namespace {

using namespace asmg;
using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomparable = 3;

struct Globals {
    bool json = false;
    bool limit_override = false;
    std::optional<std::uint64_t> seed;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool looks_like_permutation(const std::string &s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',') return false;
    return true;
}

// A file path (text or JSON format), or a permutation in one-line notation.
Asm load_asm(const std::string &arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            try {
                return asm_from_json(json::parse(text));
            } catch (const json::exception &e) {
                throw ParseError(std::string("bad JSON: ") + e.what());
            }
        }
        return parse_asm_text(text);
    }
    if (looks_like_permutation(arg)) return permutation_to_asm(parse_permutation(arg));
    throw ParseError("no such file and not a permutation: " + arg);
}

std::uint64_t require_seed(const Globals &g, const std::string &command)
{
    if (!g.seed) throw UsageError(command + " requires --seed");
    return *g.seed;
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

json matrix_to_json(const RationalMatrix &m)
{
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string format_matrix(const RationalMatrix &m)
{
    std::string s;
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) s += (j > 1 ? " " : "") + to_string(m(i, j));
        s += "\n";
    }
    return s;
}

std::vector<Rational> parse_grid(const std::string &text)
{
    std::vector<Rational> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) grid.push_back(parse_rational(item));
    if (grid.empty()) throw UsageError("empty --grid");
    return grid;
}

int cmd_enumerate(const Globals &g, int n, bool count_only)
{
    const auto all = enumerate_asms(n, g.limit_override);
    if (count_only) {
        std::cout << (g.json ? json{{"n", n}, {"count", all.size()}}.dump() : std::to_string(all.size())) << "\n";
        return 0;
    }
    if (g.json) {
        json out = json::array();
        for (const auto &a : all) out.push_back(asm_to_json(a));
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (std::size_t t = 0; t < all.size(); ++t) std::cout << (t ? "\n" : "") << format_asm_text(all[t]);
    return 0;
}

int cmd_graph(const Globals &g, int n, const std::string &dot_path)
{
    const AsmGraph graph = build_graph(n, g.limit_override);
    if (!dot_path.empty()) write_file(dot_path, export_dot(graph, DotOptions{}));
    if (g.json) {
        json nodes = json::array(), edges = json::array();
        for (std::size_t v = 0; v < graph.node_count(); ++v) {
            json node = asm_to_json(graph.node(v));
            node["index"] = v;
            node["beta"] = graph.beta_of(v);
            nodes.push_back(node);
            for (const auto &arc : graph.arcs(v))
                edges.push_back({{"source", v}, {"target", arc.target}, {"rect", arc.rect.to_string()}, {"type", arc.edge_type}});
        }
        std::cout << json{{"n", n}, {"nodes", nodes}, {"edges", edges}}.dump() << "\n";
        return 0;
    }
    std::cout << "nodes " << graph.node_count() << "\nedges " << graph.edge_count() << "\n";
    for (std::size_t v = 0; v < graph.node_count(); ++v)
        for (const auto &arc : graph.arcs(v))
            std::cout << v << " -> " << arc.target << " " << arc.rect.to_string() << " type " << arc.edge_type << "\n";
    return 0;
}

int cmd_leq(const Globals &g, const std::string &x, const std::string &y)
{
    const bool leq = asm_leq(load_asm(x), load_asm(y));
    std::cout << (g.json ? json{{"leq", leq}}.dump() : std::string(leq ? "true" : "false")) << "\n";
    return 0;
}

int cmd_beta(const Globals &g, const std::string &x)
{
    const Asm a = load_asm(x);
    const int b1 = beta_corner_sum(a), b2 = beta_quadratic(a), b3 = beta_bigrassmannian_count(a);
    if (b1 != b2 || b2 != b3) throw std::logic_error("beta evaluators disagree");
    if (g.json)
        std::cout << json{{"beta", b1}, {"corner_sum", b1}, {"quadratic", b2}, {"bigrassmannian_count", b3}}.dump() << "\n";
    else
        std::cout << b1 << "\n";
    return 0;
}

int cmd_chain(const Globals &g, const std::string &x, const std::string &y)
{
    const auto chain = covering_chain(load_asm(x), load_asm(y));
    if (g.json) {
        json out = json::array();
        for (const auto &a : chain) out.push_back(asm_to_json(a));
        std::cout << json{{"length", chain.size() - 1}, {"chain", out}}.dump() << "\n";
        return 0;
    }
    for (std::size_t t = 0; t < chain.size(); ++t) std::cout << (t ? "\n" : "") << format_asm_text(chain[t]);
    return 0;
}

int cmd_certify(const Globals &g, const std::string &x, const std::string &y, const std::string &out_path)
{
    const Asm a = load_asm(x), b = load_asm(y);
    if (asm_leq(a, b)) {
        const auto cert = sfl_certificate(a, b);
        const json j = certificate_to_json(cert);
        if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
        if (g.json)
            std::cout << json{{"result", "CERTIFICATE"}, {"certificate", j}}.dump() << "\n";
        else
            std::cout << "CERTIFICATE\n" << to_display_string(cert) << "\n";
        return 0;
    }
    const auto cex = counterexample_matrix(a, b);
    const json j{{"matrix", matrix_to_json(cex.matrix)}, {"witness", {cex.witness.first, cex.witness.second}},
                 {"value", to_string(evaluate_difference(a, b, cex.matrix))}};
    if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
    if (g.json) {
        std::cout << json{{"result", "COUNTEREXAMPLE"}, {"counterexample", j}}.dump() << "\n";
    } else {
        std::cout << "COUNTEREXAMPLE\nwitness " << cell_key(cex.witness) << "\nvalue "
                  << to_string(evaluate_difference(a, b, cex.matrix)) << "\n"
                  << format_matrix(cex.matrix);
    }
    return kExitIncomparable;
}

int cmd_scan(const Globals &g, const std::string &x, const std::string &y, const std::string &grid_text, int samples)
{
    const std::uint64_t seed = require_seed(g, "scan");
    const auto report = qtnn_scan(load_asm(x), load_asm(y), parse_grid(grid_text), samples, seed);
    if (g.json) {
        json rows = json::array();
        for (const auto &r : report.rows)
            rows.push_back({{"q0", to_string(r.q0)},
                            {"samples", r.samples},
                            {"undefined", r.undefined},
                            {"violations", r.violations},
                            {"weighting_consistent", r.weighting_consistent},
                            {"counterexample_negative", r.counterexample_negative},
                            {"min_value", r.min_value ? json(to_string(*r.min_value)) : json(nullptr)}});
        std::cout << json{{"comparable", report.comparable}, {"rows", rows}}.dump() << "\n";
    } else {
        std::cout << (report.comparable ? "comparable" : "incomparable") << "\n";
        for (const auto &r : report.rows) {
            std::cout << "q0=" << to_string(r.q0) << " samples=" << r.samples << " undefined=" << r.undefined
                      << " violations=" << r.violations << " consistent=" << (r.weighting_consistent ? "yes" : "no");
            if (!report.comparable) std::cout << " counterexample_negative=" << (r.counterexample_negative ? "yes" : "no");
            std::cout << " min=" << (r.min_value ? to_string(*r.min_value) : "none") << "\n";
        }
    }
    return report.comparable ? 0 : kExitIncomparable;
}

int cmd_bq(const Globals &g, int n, const std::string &method)
{
    std::vector<std::pair<std::string, IntQPoly>> results;
    auto want = [&](const char *m) { return method == "all" || method == m; };
    if (want("def")) results.emplace_back("def", bq_definition(n, g.limit_override));
    if (want("prod")) results.emplace_back("prod", bq_product(n));
    if (want("qdet")) results.emplace_back("qdet", bq_qdet(n, g.limit_override));
    if (want("rec")) results.emplace_back("rec", bq_recursion(n));
    if (results.empty()) throw UsageError("unknown --method " + method);
    for (const auto &[name, p] : results) {
        if (g.json) {
            auto j = poly_to_json(n, p);
            if (method == "all") j["method"] = name;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (method == "all" ? name + ": " : "") << p.to_string() << "\n";
        }
    }
    for (const auto &r : results)
        if (!(r.second == results.front().second)) throw std::logic_error("B_n(q) methods disagree");
    return 0;
}

int print_checks(const Globals &g, const std::vector<CheckResult> &checks)
{
    bool ok = true;
    json out = json::array();
    for (const auto &c : checks) {
        ok = ok && c.passed;
        if (g.json)
            out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        else
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    if (g.json) std::cout << out.dump() << "\n";
    return ok ? 0 : kExitDomain;
}

int cmd_dodgson(const Globals &g, int n, int trials)
{
    const std::uint64_t seed = require_seed(g, "dodgson verify");
    if (n < 2) throw UsageError("dodgson verify needs --n >= 2");
    if (n > kMaxQdetN && !g.limit_override) throw SizeLimitExceeded("dodgson verify", n, kMaxQdetN);
    return print_checks(g, {check_dodgson(n, trials, seed), check_q_dodgson(n, trials, seed)});
}

int cmd_verify_all(const Globals &g, int n, int samples)
{
    const std::uint64_t seed = require_seed(g, "verify-all");
    if (n > 5 && !g.limit_override) throw SizeLimitExceeded("verify-all", n, 5);
    return print_checks(g, verify_all(n, samples, seed));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Alternating sign matrix lattice toolkit"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t seed = 0;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--limit-override", g.limit_override, "Lift size guards");
    auto *seed_opt = app.add_option("--seed", seed, "Seed for randomized commands");

    int n = 3, samples = 5, trials = 100;
    bool count_only = false;
    std::string a_arg, b_arg, dot_path, out_path, grid = "1/4,1,4", method = "all";

    // Subcommands accept the global options after the subcommand name too.
    auto globals = [&](CLI::App *sub) {
        sub->add_flag("--json", g.json, "Emit JSON");
        sub->add_flag("--limit-override", g.limit_override, "Lift size guards");
        return sub->add_option("--seed", seed, "Seed for randomized commands");
    };
    std::vector<CLI::Option *> seed_opts{seed_opt};

    auto *enumerate = app.add_subcommand("enumerate", "List A_n in text format");
    enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--count-only", count_only);
    seed_opts.push_back(globals(enumerate));

    auto *graph = app.add_subcommand("graph", "Build the ASM graph");
    graph->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    graph->add_option("--dot", dot_path, "Write DOT output to a file");
    seed_opts.push_back(globals(graph));

    auto two_asms = [&](CLI::App *sub) {
        sub->add_option("A", a_arg, "ASM file or permutation")->required();
        sub->add_option("B", b_arg, "ASM file or permutation")->required();
        seed_opts.push_back(globals(sub));
    };
    auto *leq = app.add_subcommand("leq", "Test A <= B");
    two_asms(leq);
    auto *beta_cmd = app.add_subcommand("beta", "Bigrassmannian statistic");
    beta_cmd->add_option("A", a_arg, "ASM file or permutation")->required();
    seed_opts.push_back(globals(beta_cmd));
    auto *chain = app.add_subcommand("chain", "Saturated chain from A to B");
    two_asms(chain);
    auto *certify = app.add_subcommand("certify", "SFL certificate or counterexample for x^A - x^B");
    two_asms(certify);
    certify->add_option("--out", out_path, "Write the certificate or counterexample as JSON");
    auto *scan = app.add_subcommand("scan", "Sampled qTNN scan");
    two_asms(scan);
    scan->add_option("--grid", grid, "Comma-separated rational squares q0");
    scan->add_option("--samples", samples)->check(CLI::PositiveNumber);

    auto *bq = app.add_subcommand("bq", "Signed bigrassmannian polynomial B_n(q)");
    bq->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    bq->add_option("--method", method)->check(CLI::IsMember({"def", "prod", "qdet", "rec", "all"}));
    seed_opts.push_back(globals(bq));

    auto *dodgson_cmd = app.add_subcommand("dodgson", "Condensation checks");
    dodgson_cmd->require_subcommand(1);
    auto *dodgson_verify = dodgson_cmd->add_subcommand("verify", "Random exact and q-analog checks");
    dodgson_verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    dodgson_verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
    seed_opts.push_back(globals(dodgson_verify));

    auto *verify = app.add_subcommand("verify-all", "Exhaustive consistency checks on A_n");
    verify->add_option("--n", n)->required()->check(CLI::Range(1, 7));
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    seed_opts.push_back(globals(verify));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    for (auto *opt : seed_opts)
        if (opt->count() > 0) g.seed = seed;

    try {
        if (*enumerate) return cmd_enumerate(g, n, count_only);
        if (*graph) return cmd_graph(g, n, dot_path);
        if (*leq) return cmd_leq(g, a_arg, b_arg);
        if (*beta_cmd) return cmd_beta(g, a_arg);
        if (*chain) return cmd_chain(g, a_arg, b_arg);
        if (*certify) return cmd_certify(g, a_arg, b_arg, out_path);
        if (*scan) return cmd_scan(g, a_arg, b_arg, grid, samples);
        if (*bq) return cmd_bq(g, n, method);
        if (*dodgson_verify) return cmd_dodgson(g, n, trials);
        if (*verify) return cmd_verify_all(g, n, samples);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

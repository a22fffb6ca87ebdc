#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracegen/analysis.hpp"
#include "tracegen/errors.hpp"
#include "tracegen/graph_json.hpp"
#include "tracegen/laws.hpp"
#include "tracegen/mobius.hpp"
#include "tracegen/numeric.hpp"
#include "tracegen/pyramid.hpp"
#include "tracegen/sampler.hpp"
#include "tracegen/stream.hpp"

using json = nlohmann::ordered_json;
using namespace tracegen;

namespace {

struct ParsedP {
    bool critical = false;
    Rational exact = 0; // meaningful when !critical
    double value = 0.0;
    std::string text;
};

ParsedP parse_p(const std::string& text) {
    ParsedP out;
    out.text = text;
    if (text == "critical") {
        out.critical = true;
        return out;
    }
    out.exact = parse_rational(text);
    out.value = static_cast<double>(out.exact);
    if (!(out.value > 0) || out.exact > 1)
        throw input_error("p must lie in (0, 1] or be the token 'critical'");
    return out;
}

std::vector<int> parse_ordering(const DependenceGraph& g, const std::string& names) {
    std::vector<int> ordering;
    for (int a : g.parse_letter_set(names))
        (void)a; // validates the names; order below
    size_t start = 0;
    while (start <= names.size()) {
        size_t comma = names.find(',', start);
        if (comma == std::string::npos)
            comma = names.size();
        std::string item = names.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty())
            ordering.push_back(g.index(item));
        start = comma + 1;
    }
    return ordering;
}

json ordering_to_json(const DependenceGraph& g, const std::vector<int>& ordering) {
    json arr = json::array();
    for (int a : ordering)
        arr.push_back(g.name(a));
    return arr;
}

double resolve_p(const DependenceGraph& g, const ParsedP& p) {
    if (!p.critical)
        return p.value;
    return critical_root(g, g.all()).value;
}

// --- mobius ----------------------------------------------------------------

int run_mobius(const std::string& graph_path, const std::string& subset_arg,
               const std::optional<std::string>& p_arg, bool critical, int series_degree) {
    DependenceGraph g = load_graph_file(graph_path);
    LetterSet subset = subset_arg.empty() ? g.all() : g.parse_letter_set(subset_arg);

    if (series_degree >= 0) {
        auto coeffs = series_expand(g, subset, series_degree);
        std::string line;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if (j)
                line += " ";
            line += coeffs[j].str();
        }
        std::printf("%s\n", line.c_str());
        return 0;
    }
    if (critical) {
        CriticalRoot root = critical_root(g, subset);
        std::printf("%.12f\n", root.value);
        return 0;
    }
    if (p_arg) {
        ParsedP p = parse_p(*p_arg);
        double value = resolve_p(g, p);
        MobiusPolynomial mu = mobius_poly(g, subset);
        std::printf("%.12f\n", mu.eval(value));
        return 0;
    }
    std::printf("%s\n", mobius_poly(g, subset).to_string().c_str());
    return 0;
}

// --- sample ----------------------------------------------------------------

int run_sample(const std::string& graph_path, const std::string& p_arg, long count,
               const std::string& algorithm, const std::string& max_set_arg,
               std::uint64_t seed, int k_arg, int ell_arg) {
    DependenceGraph g = load_graph_file(graph_path);
    ParsedP p = parse_p(p_arg);
    double p_value = resolve_p(g, p);
    MobiusTable table(g, p_value);
    Rng rng(seed);

    if (algorithm == "direct") {
        LetterSet t = max_set_arg.empty() ? g.all() : g.parse_letter_set(max_set_arg);
        if (!p.critical) {
            // validate p < p_Sigma up front; streaming-style critical use
            // on the full alphabet is rejected by the sampler itself
            TraceLaw law(g, p_value, t);
            (void)law;
        }
        for (long i = 0; i < count; ++i)
            std::printf("%s\n", sample_finite(table, g.all(), t, rng).to_string(g).c_str());
        return 0;
    }
    if (algorithm != "rejection")
        throw input_error("--algorithm must be direct or rejection");
    if (!max_set_arg.empty())
        throw input_error("--max-set applies to the direct algorithm; the rejection sampler "
                          "conditions on L(a_ell) through --k/--ell");

    std::vector<int> ordering(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i)
        ordering[static_cast<size_t>(i)] = i;
    int k = k_arg >= 0 ? k_arg : g.size() - 1;
    int ell = ell_arg >= 0 ? ell_arg : g.size();
    RejectionStats stats;
    for (long i = 0; i < count; ++i)
        std::printf("%s\n",
                    sample_finite_rejection(table, ordering, k, ell, rng, stats).to_string(g).c_str());
    return 0;
}

// --- stream ----------------------------------------------------------------

int run_stream(const std::string& graph_path, const std::string& algorithm, long loops,
               long budget_letters, std::uint64_t seed, const std::string& anchor_arg,
               const std::string& ordering_arg) {
    DependenceGraph g = load_graph_file(graph_path);

    SamplerConfig cfg;
    cfg.seed = seed;
    if (!anchor_arg.empty())
        cfg.anchor = g.index(anchor_arg);
    if (!ordering_arg.empty())
        cfg.ordering = parse_ordering(g, ordering_arg);

    PrefixStream::Mode mode;
    if (algorithm == "direct")
        mode = PrefixStream::Mode::direct;
    else if (algorithm == "rejection")
        mode = PrefixStream::Mode::rejection;
    else
        throw input_error("--algorithm must be direct or rejection");

    PrefixStream stream(g, cfg, mode);
    for (long loop = 1; loop <= loops; ++loop) {
        Trace increment = stream.step();
        json record;
        record["loop"] = loop;
        record["increment"] = increment.to_string(g);
        record["total_length"] = stream.prefix().length();
        record["rejections"] = stream.stats().rejections;
        std::printf("%s\n", record.dump().c_str());
        if (budget_letters > 0 &&
            stream.prefix().length() > static_cast<std::size_t>(budget_letters))
            break;
    }
    return 0;
}

// --- analyze ----------------------------------------------------------------

int run_analyze(const std::string& graph_path, const std::string& ordering_arg,
                const std::string& estimate_arg, std::uint64_t seed) {
    DependenceGraph g = load_graph_file(graph_path);

    OrderingReport report = ordering_arg.empty()
                                ? find_peo(g)
                                : analyze_ordering(g, parse_ordering(g, ordering_arg));

    json doc;
    doc["ordering"] = ordering_to_json(g, report.ordering);
    doc["chordal"] = report.chordal;
    doc["rejection_free"] = report.rejection_free;
    if (report.peo)
        doc["peo"] = ordering_to_json(g, *report.peo);
    else
        doc["peo"] = nullptr;

    if (g.connected()) {
        RateReport rate = rate_bound(g, report.ordering);
        doc["rate"] = {{"p_critical", rate.p_critical},
                       {"tau", rate.tau},
                       {"expected_pyramid_length", rate.expected_pyramid_length}};
    } else {
        doc["rate"] = nullptr;
    }

    if (!estimate_arg.empty()) {
        size_t c1 = estimate_arg.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : estimate_arg.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw input_error("--estimate expects p,epsilon,alpha");
        ParsedP p = parse_p(estimate_arg.substr(0, c1));
        double eps = std::stod(estimate_arg.substr(c1 + 1, c2 - c1 - 1));
        double alpha = std::stod(estimate_arg.substr(c2 + 1));
        Rng rng(seed);
        MobiusEstimate est = estimate_mobius(g, resolve_p(g, p), eps, alpha, rng);
        doc["estimate"] = {{"p", p.text},
                           {"lo", est.lo},
                           {"hi", est.hi},
                           {"point", est.point},
                           {"naive", est.naive},
                           {"samples", est.samples},
                           {"naive_samples", est.naive_samples},
                           {"ratios", est.ratios},
                           {"true_value", mobius_poly(g, g.all()).eval(resolve_p(g, p))}};
    }

    std::printf("%s\n", doc.dump(2).c_str());
    return 0;
}

// --- verify -----------------------------------------------------------------

json empirical_report(const DependenceGraph& g, const std::vector<Trace>& samples,
                      const ExactTable& oracle, int horizon) {
    std::map<std::string, double> empirical;
    double unit = 1.0 / static_cast<double>(samples.size());
    std::size_t units = 0;
    for (const Trace& x : samples) {
        units += x.is_unit();
        if (static_cast<int>(x.length()) <= horizon)
            empirical[cf_to_string(g, cf_normal_form(g, x))] += unit;
    }
    double tv = 0.0;
    for (const auto& [key, weight] : oracle.entries) {
        auto it = empirical.find(key);
        tv += std::abs(static_cast<double>(weight) - (it == empirical.end() ? 0.0 : it->second));
    }
    for (const auto& [key, freq] : empirical)
        if (!oracle.entries.count(key))
            tv += freq;
    json out;
    out["samples"] = samples.size();
    out["unit_frequency"] = static_cast<double>(units) / static_cast<double>(samples.size());
    out["tv_to_oracle"] = tv / 2.0;
    return out;
}

int run_verify(const std::string& graph_path, const std::string& p_arg,
               const std::string& max_set_arg, int horizon, long samples,
               std::uint64_t seed) {
    DependenceGraph g = load_graph_file(graph_path);
    ParsedP p = parse_p(p_arg);
    if (p.critical)
        throw input_error("verify compares against the exact finite-p oracle; give p as a fraction");

    LetterSet t = max_set_arg.empty() ? g.all() : g.parse_letter_set(max_set_arg);
    MobiusTable table(g, p.value);
    Rng rng(seed);

    json doc;
    doc["p"] = p.text;
    doc["p_double"] = p.value;
    doc["p_critical"] = critical_root(g, g.all()).value;

    // oracle + direct sampler on (Sigma, T)
    ExactTable oracle = exact_distribution(g, p.exact, g.all(), t, horizon);
    json oracle_doc;
    oracle_doc["horizon"] = oracle.horizon;
    oracle_doc["tail_bound"] = oracle.tail_bound;
    json entries = json::object();
    for (const auto& [key, weight] : oracle.entries)
        entries[key] = to_string(weight);
    oracle_doc["entries"] = std::move(entries);
    doc["oracle"] = std::move(oracle_doc);

    std::vector<Trace> direct;
    direct.reserve(static_cast<size_t>(samples));
    for (long i = 0; i < samples; ++i)
        direct.push_back(sample_finite(table, g.all(), t, rng));
    doc["direct"] = empirical_report(g, direct, oracle, horizon);

    // pyramid-count law at the least pivot of Sigma & T
    if (!(g.all() & t).empty()) {
        int anchor = (g.all() & t).least();
        double r = geometric_param(table, g.all(), anchor);
        std::vector<std::int64_t> ks;
        ks.reserve(direct.size());
        for (const Trace& x : direct)
            ks.push_back(static_cast<std::int64_t>(x.count(anchor)));
        GoodnessOfFit fit = k_law_check(ks, r);
        doc["k_law"] = {{"anchor", g.name(anchor)}, {"r", r},          {"statistic", fit.statistic},
                        {"dof", fit.dof},           {"bins", fit.bins}, {"p_value", fit.p_value}};
    }

    // rejection sampler against its own oracle on (Sigma_{n-1}, L(a_n))
    if (g.size() >= 2) {
        std::vector<int> ordering(static_cast<size_t>(g.size()));
        for (int i = 0; i < g.size(); ++i)
            ordering[static_cast<size_t>(i)] = i;
        int n = g.size();
        LetterSet s = g.all().without(ordering.back());
        LetterSet t2 = g.link(ordering.back()) & s;
        ExactTable oracle2 = exact_distribution(g, p.exact, s, t2, horizon);
        std::vector<Trace> rejection;
        rejection.reserve(static_cast<size_t>(samples));
        RejectionStats stats;
        for (long i = 0; i < samples; ++i)
            rejection.push_back(sample_finite_rejection(table, ordering, n - 1, n, rng, stats));
        json rep = empirical_report(g, rejection, oracle2, horizon);
        rep["rejections"] = stats.rejections;
        rep["attempts"] = stats.attempts;

        // agreement between the two samplers on the same law
        std::vector<Trace> direct2;
        direct2.reserve(static_cast<size_t>(samples));
        for (long i = 0; i < samples; ++i)
            direct2.push_back(sample_finite(table, s, t2, rng));
        json agree = empirical_report(g, direct2, oracle2, horizon);
        rep["tv_direct_vs_oracle_same_law"] = agree["tv_to_oracle"];
        doc["rejection"] = std::move(rep);
    }

    std::printf("%s\n", doc.dump(2).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and streaming samplers for trace monoids"};
    app.require_subcommand(1);

    std::string graph_path, p_arg, subset_arg, max_set_arg, algorithm = "direct";
    std::string anchor_arg, ordering_arg, estimate_arg;
    std::uint64_t seed = kDefaultSeed;
    long count = 1, loops = 1, budget_letters = 0, samples = 100000;
    int series_degree = -1, k_arg = -1, ell_arg = -1, horizon = 4;
    bool critical = false;
    std::optional<std::string> mobius_p;

    auto* mobius = app.add_subcommand("mobius", "Mobius polynomial, values, root, growth series");
    mobius->add_option("--graph", graph_path)->required();
    mobius->add_option("--subset", subset_arg, "comma-separated letters (default: whole alphabet)");
    mobius->add_option("--p", mobius_p, "evaluate mu at p (fraction, decimal or 'critical')");
    mobius->add_flag("--critical", critical, "print the smallest positive root");
    mobius->add_option("--series-degree", series_degree,
                       "print growth-series coefficients up to this degree");

    auto* sample = app.add_subcommand("sample", "Draw finite traces from D_{S,T}");
    sample->add_option("--graph", graph_path)->required();
    sample->add_option("--p", p_arg)->required();
    sample->add_option("--count", count);
    sample->add_option("--algorithm", algorithm, "direct | rejection");
    sample->add_option("--max-set", max_set_arg, "condition max(x) inside this set (direct)");
    sample->add_option("--seed", seed);
    sample->add_option("--k", k_arg, "rejection: size of Sigma_k (default n-1)");
    sample->add_option("--ell", ell_arg, "rejection: index of the conditioning letter (default n)");

    auto* stream = app.add_subcommand("stream", "Grow prefixes of a uniform infinite trace");
    stream->add_option("--graph", graph_path)->required();
    stream->add_option("--algorithm", algorithm, "direct | rejection");
    stream->add_option("--loops", loops)->required();
    stream->add_option("--budget-letters", budget_letters, "stop once the prefix exceeds this");
    stream->add_option("--seed", seed);
    stream->add_option("--anchor", anchor_arg, "anchor letter for the direct stream");
    stream->add_option("--ordering", ordering_arg, "enumeration for the rejection stream");

    auto* analyze = app.add_subcommand("analyze", "Chordality, rates and the mu estimator");
    analyze->add_option("--graph", graph_path)->required();
    analyze->add_option("--ordering", ordering_arg);
    analyze->add_option("--estimate", estimate_arg, "p,epsilon,alpha");
    analyze->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "Exact oracle tables and sampler reports");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--p", p_arg)->required();
    verify->add_option("--max-set", max_set_arg);
    verify->add_option("--horizon", horizon);
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mobius->parsed())
            return run_mobius(graph_path, subset_arg, mobius_p, critical, series_degree);
        if (sample->parsed())
            return run_sample(graph_path, p_arg, count, algorithm, max_set_arg, seed, k_arg, ell_arg);
        if (stream->parsed())
            return run_stream(graph_path, algorithm, loops, budget_letters, seed, anchor_arg,
                              ordering_arg);
        if (analyze->parsed())
            return run_analyze(graph_path, ordering_arg, estimate_arg, seed);
        if (verify->parsed())
            return run_verify(graph_path, p_arg, max_set_arg, horizon, samples, seed);
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const consistency_error& e) {
        std::fprintf(stderr, "internal consistency error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

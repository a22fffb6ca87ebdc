#include "tracegen/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "tracegen/errors.hpp"
#include "tracegen/laws.hpp"
#include "tracegen/mobius.hpp"
#include "tracegen/sampler.hpp"

namespace tracegen {

namespace {

void check_permutation(const DependenceGraph& g, const std::vector<int>& ordering) {
    if (static_cast<int>(ordering.size()) != g.size())
        throw input_error("ordering must enumerate the whole alphabet");
    LetterSet seen;
    for (int a : ordering) {
        if (a < 0 || a >= g.size() || seen.contains(a))
            throw input_error("ordering is not a permutation of the alphabet");
        seen |= LetterSet::single(a);
    }
}

} // namespace

bool is_rejection_free(const DependenceGraph& g, const std::vector<int>& ordering) {
    check_permutation(g, ordering);
    const int n = g.size();
    LetterSet sigma_k;
    for (int k = 1; k < n; ++k) {
        int a_k = ordering[static_cast<size_t>(k - 1)];
        sigma_k |= LetterSet::single(a_k);
        LetterSet component = g.component(sigma_k, a_k);
        for (int ell = k + 1; ell <= n; ++ell) {
            int a_ell = ordering[static_cast<size_t>(ell - 1)];
            LetterSet link_ell = g.link(a_ell);
            if (link_ell.contains(a_k))
                continue;
            if (component.intersects(link_ell))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<int> lex_bfs(const DependenceGraph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> labels(static_cast<size_t>(n));
    std::vector<int> order;
    LetterSet visited;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited.contains(v))
                continue;
            if (best < 0 || labels[static_cast<size_t>(v)] > labels[static_cast<size_t>(best)])
                best = v;
        }
        order.push_back(best);
        visited |= LetterSet::single(best);
        for (int w : g.link(best).without(best))
            if (!visited.contains(w))
                labels[static_cast<size_t>(w)].push_back(n - step);
    }
    return order;
}

bool is_peo(const DependenceGraph& g, const std::vector<int>& ordering) {
    // Later neighbors of each vertex must be pairwise adjacent.
    const int n = g.size();
    LetterSet later = LetterSet::full(n);
    for (int i = 0; i < n; ++i) {
        int v = ordering[static_cast<size_t>(i)];
        later -= LetterSet::single(v);
        LetterSet nbrs = g.link(v).without(v) & later;
        for (int x : nbrs)
            if (!(nbrs - g.link(x)).empty())
                return false;
    }
    return true;
}

} // namespace

OrderingReport find_peo(const DependenceGraph& g) {
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end());

    OrderingReport report;
    report.ordering = order;
    report.chordal = is_peo(g, order);
    if (report.chordal)
        report.peo = order;
    report.rejection_free = is_rejection_free(g, order);
    return report;
}

OrderingReport analyze_ordering(const DependenceGraph& g, const std::vector<int>& ordering) {
    check_permutation(g, ordering);
    OrderingReport base = find_peo(g);
    OrderingReport report;
    report.ordering = ordering;
    report.chordal = base.chordal;
    report.peo = base.peo;
    report.rejection_free = is_rejection_free(g, ordering);
    return report;
}

RateReport rate_bound(const DependenceGraph& g, const std::vector<int>& ordering) {
    check_permutation(g, ordering);
    if (!g.connected())
        throw input_error("rate bounds require a connected dependence graph");

    const int n = g.size();
    double p = critical_root(g, g.all()).value;
    LetterSet sigma_n1 = g.all().without(ordering.back());

    double mu_head = mobius_poly(g, sigma_n1).eval(p);
    double mu_prime = mobius_poly(g, g.all()).eval_derivative(p);

    RateReport report;
    report.p_critical = p;
    report.tau = std::abs((mu_head + p * mu_prime) / static_cast<double>(n));
    report.expected_pyramid_length = 1.0 + (-mu_head - p * mu_prime) / mu_head;
    return report;
}

MobiusEstimate estimate_mobius(const DependenceGraph& g, double p, double epsilon,
                               double alpha, Rng& rng) {
    if (!(epsilon > 0))
        throw input_error("epsilon must be positive");
    if (!(alpha > 0) || !(alpha < 1))
        throw input_error("alpha must lie in (0, 1)");
    CriticalRoot root = critical_root(g, g.all());
    if (!(p > 0) || p >= root.value)
        throw domain_error("p must lie in (0, p_Sigma)");

    const int n = g.size();
    const double min_p = std::min(p, 1.0 - p);

    // Chain Sigma = S_0 > S_1 > ... > S_n = {} removing letters in the
    // declared order. Steps whose removed letter has no neighbor left
    // contribute the exact factor (1 - p); the others are Bernoulli
    // ratios mu_{S_i} / mu_{T_i} estimated from D_{S_i, S_i}.
    struct Step {
        LetterSet s;
        int removed;
        bool sampled;
    };
    std::vector<Step> steps;
    LetterSet s = g.all();
    while (!s.empty()) {
        int c = s.least();
        LetterSet rest = s.without(c);
        steps.push_back({rest, c, rest.intersects(g.link(c))});
        s = rest;
    }
    int sampled_count = 0;
    for (const Step& step : steps)
        sampled_count += step.sampled ? 1 : 0;

    // Per-ratio confidence adjusted so the chained interval holds jointly
    // at level alpha.
    double alpha_each = sampled_count > 0 ? 1.0 - (1.0 - alpha) / sampled_count : alpha;
    boost::math::normal_distribution<double> normal;
    double lambda = boost::math::quantile(normal, 0.5 + alpha_each / 2.0);
    auto trials = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(n) * n * lambda * lambda / (epsilon * epsilon * min_p)));

    MobiusTable table(g, p);
    MobiusEstimate est;
    est.lo = est.hi = est.point = 1.0;

    for (const Step& step : steps) {
        if (!step.sampled) {
            est.lo *= 1.0 - p;
            est.hi *= 1.0 - p;
            est.point *= 1.0 - p;
            continue;
        }
        LetterSet forbidden = g.link(step.removed);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Trace x = sample_finite(table, step.s, step.s, rng);
            if (!x.alphabet().intersects(forbidden))
                ++hits;
        }
        est.samples += trials;
        double rho = static_cast<double>(hits) / static_cast<double>(trials);
        double halfw = lambda * std::sqrt(rho * (1.0 - rho) / static_cast<double>(trials));
        // The true ratio lies in [p, 1-p]; clipping only tightens the CI.
        double rho_lo = std::clamp(rho - halfw, p, 1.0 - p);
        double rho_hi = std::clamp(rho + halfw, p, 1.0 - p);
        double rho_mid = std::clamp(rho, p, 1.0 - p);
        est.ratios.push_back(rho_mid);
        est.lo *= 1.0 - p / rho_lo;
        est.hi *= 1.0 - p / rho_hi;
        est.point *= 1.0 - p / rho_mid;
    }

    // Naive estimator for comparison: frequency of the unit trace under
    // B_{Sigma,p} = D_{Sigma,Sigma}.
    std::uint64_t unit_hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
        if (sample_finite(table, g.all(), g.all(), rng).is_unit())
            ++unit_hits;
    est.naive_samples = trials;
    est.naive = static_cast<double>(unit_hits) / static_cast<double>(trials);
    return est;
}

double letter_density(PrefixStream& stream, int a, std::uint64_t letter_budget) {
    if (letter_budget == 0)
        throw input_error("letter budget must be positive");
    if (a < 0 || a >= stream.graph().size())
        throw input_error("letter out of range");
    while (stream.prefix().length() <= letter_budget)
        stream.step();
    return static_cast<double>(stream.prefix().count(a)) /
           static_cast<double>(stream.prefix().length());
}

} // namespace tracegen

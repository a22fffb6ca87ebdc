#include "tracegen/laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "tracegen/errors.hpp"

namespace tracegen {

namespace {

double checked_p_critical(const DependenceGraph& g, double p) {
    CriticalRoot root = critical_root(g, g.all());
    // Strictness gate: p must be certifiably below the root, so anything
    // at or above the bracket's lower edge is rejected.
    if (!(p > 0) || p >= root.lo)
        throw domain_error("p must lie strictly below p_Sigma ~= " + std::to_string(root.value));
    return root.value;
}

} // namespace

TraceLaw::TraceLaw(const DependenceGraph& g, double p)
    : g_(&g), p_(p), p_critical_(checked_p_critical(g, p)), max_set_(g.all()), conditioned_(false) {}

TraceLaw::TraceLaw(const DependenceGraph& g, double p, LetterSet max_set)
    : g_(&g), p_(p), p_critical_(checked_p_critical(g, p)), max_set_(max_set), conditioned_(true) {}

double b_weight(const TraceLaw& law, const Trace& x) {
    double mu = mobius_poly(law.graph(), law.graph().all()).eval(law.p());
    return mu * std::pow(law.p(), static_cast<double>(x.length()));
}

double conditional_weight(const TraceLaw& law, const Trace& x) {
    const DependenceGraph& g = law.graph();
    if (!law.max_set().contains_all(max_letters(g, x)))
        return 0.0;
    // Z = B(max inside T) = mu_Sigma(p) G_{Sigma,T}(p) = mu_{Sigma \ T}(p)
    double z = mobius_poly(g, g.all() - law.max_set()).eval(law.p());
    if (!(z > 0))
        throw domain_error("conditioning mass is not positive");
    return b_weight(law, x) / z;
}

double geometric_param(const MobiusTable& table, LetterSet s, int a1) {
    if (!s.contains(a1))
        throw input_error("anchor letter is not in the subset");
    const DependenceGraph& g = table.graph();
    double denom = table.value(s.without(a1));
    if (!(denom > 0))
        throw domain_error("mu_{S \\ {a1}}(p) <= 0 signals p >= p_S");

    double mu_s = table.value(s);
    if (mu_s < 0 && mu_s > -1e-12)
        mu_s = 0.0; // rounding at the critical point
    double r_link = table.p() * table.value(s - g.link(a1)) / denom;
    double r_ratio = 1.0 - mu_s / denom;
    if (std::abs(r_link - r_ratio) > 1e-9)
        throw consistency_error("geometric parameter forms disagree: " +
                                std::to_string(r_link) + " vs " + std::to_string(r_ratio));
    if (!(r_link >= 0.0) || r_link >= 1.0)
        throw domain_error("geometric parameter outside [0,1) signals p >= p_S");
    return r_link;
}

namespace {

struct CfEnumerator {
    const DependenceGraph& g;
    LetterSet s;
    int horizon;
    std::vector<LetterSet> stack;
    std::vector<LetterSet> clique_pool; // nonempty cliques of s
    std::function<void(const std::vector<LetterSet>&)> visit;

    void run() {
        visit(stack);
        descend(0);
    }

    void descend(int used) {
        for (const LetterSet& c : clique_pool) {
            if (used + c.size() > horizon)
                continue;
            if (!stack.empty() && !chain_ok(stack.back(), c))
                continue;
            stack.push_back(c);
            visit(stack);
            descend(used + c.size());
            stack.pop_back();
        }
    }

    bool chain_ok(LetterSet prev, LetterSet next) const {
        for (int b : next)
            if (!g.link(b).intersects(prev))
                return false;
        return true;
    }
};

} // namespace

ExactTable exact_distribution(const DependenceGraph& g, const Rational& p,
                              LetterSet s, LetterSet t, int horizon) {
    if (s.size() > 5 || horizon > 10 || horizon < 0)
        throw input_error("exact_distribution is guarded to |s| <= 5 and horizon <= 10");
    if (!(p > 0) || p > 1)
        throw input_error("p must lie in (0, 1]");
    t &= s;

    double p_dbl = static_cast<double>(p);
    if (!s.empty()) {
        CriticalRoot root = critical_root(g, s);
        if (!root.degenerate && p_dbl >= root.value)
            throw domain_error("p >= p_S: the weights do not form a distribution");
    }

    Rational mu_s = mobius_poly(g, s).eval_exact(p);
    Rational z = mobius_poly(g, s - t).eval_exact(p);
    if (z <= 0)
        throw domain_error("conditioning mass is not positive");

    ExactTable table;
    table.horizon = horizon;

    // Powers of p up to the horizon.
    std::vector<Rational> p_pow(static_cast<size_t>(horizon) + 1);
    p_pow[0] = 1;
    for (int j = 1; j <= horizon; ++j)
        p_pow[static_cast<size_t>(j)] = p_pow[static_cast<size_t>(j - 1)] * p;

    std::vector<LetterSet> cliques;
    for (LetterSet c : enumerate_cliques(g, s))
        if (!c.empty())
            cliques.push_back(c);

    CfEnumerator enumerator{g, s, horizon, {}, cliques, nullptr};
    enumerator.visit = [&](const std::vector<LetterSet>& cf) {
        int len = 0;
        for (const LetterSet& c : cf)
            len += c.size();
        Trace x = trace_from_cliques(cf);
        if (!t.contains_all(max_letters(g, x)))
            return;
        Rational weight = mu_s * p_pow[static_cast<size_t>(len)] / z;
        table.entries.emplace(cf_to_string(g, cf), weight);
        table.enumerated_mass += weight;
    };
    enumerator.run();

    // Tail bound: the count of qualifying traces of length j is the j-th
    // coefficient of G_{s,t}; push the series until increments vanish.
    MobiusPolynomial numer = mobius_poly(g, s - t);
    MobiusPolynomial denom = mobius_poly(g, s);
    std::vector<BigInt> counts(static_cast<size_t>(horizon) + 1);
    for (int n = 0; n <= horizon; ++n) {
        BigInt acc = numer.coeff(n);
        for (int j = 1; j <= std::min(n, denom.degree()); ++j)
            acc -= denom.coeff(j) * counts[static_cast<size_t>(n - j)];
        counts[static_cast<size_t>(n)] = acc;
    }
    double scale = static_cast<double>(mu_s / z);
    double p_power = static_cast<double>(p_pow[static_cast<size_t>(horizon)]);
    double tail = 0.0;
    for (int n = horizon + 1; n <= horizon + 4000; ++n) {
        BigInt acc = numer.coeff(n);
        for (int j = 1; j <= std::min(n, denom.degree()); ++j)
            acc -= denom.coeff(j) * counts[static_cast<size_t>(n - j)];
        counts.push_back(acc);
        p_power *= p_dbl;
        double increment = static_cast<double>(acc) * p_power * scale;
        tail += increment;
        if (increment < 1e-15 && n > horizon + 1)
            break;
    }
    table.tail_bound = tail * (1.0 + 1e-9) + 1e-15;
    return table;
}

double chi_square_p_value(double statistic, int dof) {
    if (dof <= 0)
        return 1.0;
    if (!(statistic > 0))
        return 1.0;
    return boost::math::gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

GoodnessOfFit k_law_check(std::span<const std::int64_t> samples, double r) {
    if (samples.empty())
        throw input_error("empty sample");
    if (!(r >= 0.0) || r >= 1.0)
        throw input_error("geometric parameter must lie in [0, 1)");

    const double n = static_cast<double>(samples.size());

    if (r == 0.0) {
        bool all_zero = std::all_of(samples.begin(), samples.end(),
                                    [](std::int64_t k) { return k == 0; });
        GoodnessOfFit fit;
        fit.bins = 1;
        fit.dof = 0;
        fit.statistic = all_zero ? 0.0 : std::numeric_limits<double>::infinity();
        fit.p_value = all_zero ? 1.0 : 0.0;
        return fit;
    }

    // Bin k = 0..m-1 individually, pool the geometric tail so the pooled
    // expectation stays at least 5.
    int m = 0;
    double tail_mass = 1.0; // P(K >= m)
    while (n * tail_mass * (1.0 - r) >= 5.0 && n * tail_mass * r >= 5.0 && m < 4096) {
        ++m;
        tail_mass *= r;
    }

    std::vector<double> observed(static_cast<size_t>(m) + 1, 0.0);
    for (std::int64_t k : samples) {
        if (k < 0)
            throw input_error("geometric samples must be nonnegative");
        observed[static_cast<size_t>(std::min<std::int64_t>(k, m))] += 1.0;
    }

    GoodnessOfFit fit;
    fit.bins = m + 1;
    fit.dof = m; // bins - 1
    double mass = 1.0;
    for (int k = 0; k < m; ++k) {
        double expected = n * mass * (1.0 - r);
        double diff = observed[static_cast<size_t>(k)] - expected;
        fit.statistic += diff * diff / expected;
        mass *= r;
    }
    double expected_tail = n * mass;
    double diff = observed[static_cast<size_t>(m)] - expected_tail;
    fit.statistic += diff * diff / expected_tail;
    fit.p_value = chi_square_p_value(fit.statistic, fit.dof);
    return fit;
}

} // namespace tracegen

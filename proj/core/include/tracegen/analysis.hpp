#ifndef TRACEGEN_ANALYSIS_HPP
#define TRACEGEN_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tracegen/dependence_graph.hpp"
#include "tracegen/rng.hpp"
#include "tracegen/stream.hpp"

namespace tracegen {

/// Chordality and rejection diagnostics for one enumeration of Sigma.
struct OrderingReport {
    std::vector<int> ordering;
    bool chordal = false;
    bool rejection_free = false;
    std::optional<std::vector<int>> peo;
};

/// True iff the rejection sampler never discards a draw under this
/// enumeration: for all k < ell, a_k is in L(a_ell) or the component of
/// a_k inside Sigma_k avoids L(a_ell).
bool is_rejection_free(const DependenceGraph& g, const std::vector<int>& ordering);

/// Lexicographic BFS; the reversed visit order is a perfect elimination
/// ordering iff the graph is chordal. The returned report carries that
/// candidate as both `ordering` and `peo` when the check succeeds.
OrderingReport find_peo(const DependenceGraph& g);

/// Report for a caller-chosen enumeration, with chordality and the PEO
/// taken from find_peo.
OrderingReport analyze_ordering(const DependenceGraph& g, const std::vector<int>& ordering);

/// Analytic throughput quantities of the rejection stream at the
/// critical parameter.
struct RateReport {
    double p_critical = 0.0;
    double tau = 0.0;                     // rate lower-bound factor
    double expected_pyramid_length = 0.0; // 1 + E[L(n-1, n)]
};

/// Requires a connected graph; Sigma_{n-1} is read from the ordering.
RateReport rate_bound(const DependenceGraph& g, const std::vector<int>& ordering);

/// Monte-Carlo confidence interval for mu_Sigma(p), estimated as a chain
/// of Bernoulli ratios mu_S / mu_{S \ L(a)}, each sampled from D_{S,S}.
struct MobiusEstimate {
    double lo = 0.0;
    double hi = 0.0;
    double point = 0.0;
    double naive = 0.0;             // frequency of the unit trace
    std::uint64_t samples = 0;      // draws spent on the chained ratios
    std::uint64_t naive_samples = 0;
    std::vector<double> ratios;     // one per removal with a live link
};

MobiusEstimate estimate_mobius(const DependenceGraph& g, double p, double epsilon,
                               double alpha, Rng& rng);

/// Occurrences of `a` divided by prefix length, measured on the first
/// emitted prefix whose length exceeds the budget.
double letter_density(PrefixStream& stream, int a, std::uint64_t letter_budget);

} // namespace tracegen

#endif

#ifndef TRACEGEN_LAWS_HPP
#define TRACEGEN_LAWS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracegen/mobius.hpp"
#include "tracegen/numeric.hpp"
#include "tracegen/trace.hpp"

namespace tracegen {

/// The weight distribution B_{Sigma,p}(x) = mu_Sigma(p) p^|x|, optionally
/// conditioned on max(x) being contained in a set T (distribution D_{Sigma,T}).
/// Requires p strictly below the critical root.
class TraceLaw {
public:
    /// Unconditioned law B_{Sigma,p}.
    TraceLaw(const DependenceGraph& g, double p);
    /// Conditional law D_{Sigma,T}.
    TraceLaw(const DependenceGraph& g, double p, LetterSet max_set);

    const DependenceGraph& graph() const { return *g_; }
    double p() const { return p_; }
    double p_critical() const { return p_critical_; }
    bool conditioned() const { return conditioned_; }
    LetterSet max_set() const { return max_set_; }

private:
    const DependenceGraph* g_;
    double p_;
    double p_critical_;
    LetterSet max_set_;
    bool conditioned_;
};

/// B_{Sigma,p}(x) = mu_Sigma(p) p^|x|.
double b_weight(const TraceLaw& law, const Trace& x);

/// D_{Sigma,T}(x): zero when max(x) is not inside T, otherwise
/// b_weight(x) / Z with Z = mu_{Sigma \ T}(p).
double conditional_weight(const TraceLaw& law, const Trace& x);

/// The geometric parameter of the pyramid-count law for the anchor a1 in s:
///   r = p mu_{s \ L(a1)}(p) / mu_{s \ {a1}}(p) = 1 - mu_s(p) / mu_{s \ {a1}}(p).
/// Both forms are evaluated; disagreement beyond 1e-9 raises
/// consistency_error. Throws domain_error when mu_{s \ {a1}}(p) <= 0 or
/// the result leaves [0, 1), both of which signal p >= p_s.
double geometric_param(const MobiusTable& table, LetterSet s, int a1);

/// Exact finite restriction of D_{s,t} on the sub-alphabet s: every
/// trace over s of length <= horizon with max inside t, keyed by its
/// Cartier-Foata serialization, with exact rational weights. tail_bound
/// dominates the probability mass beyond the horizon.
struct ExactTable {
    std::map<std::string, Rational> entries;
    int horizon = 0;
    Rational enumerated_mass = 0;
    double tail_bound = 0.0;
};

/// Brute-force oracle; guarded to |s| <= 5 and horizon <= 10.
ExactTable exact_distribution(const DependenceGraph& g, const Rational& p,
                              LetterSet s, LetterSet t, int horizon);

/// Chi-square goodness of fit of nonnegative integer samples against the
/// geometric law (1-r) r^k, with tail bins pooled so each expected count
/// is at least 5.
struct GoodnessOfFit {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int bins = 0;
};

GoodnessOfFit k_law_check(std::span<const std::int64_t> samples, double r);

/// Upper-tail chi-square p-value, exposed for other report code.
double chi_square_p_value(double statistic, int dof);

} // namespace tracegen

#endif

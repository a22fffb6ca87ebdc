#ifndef TRACEGEN_SAMPLER_HPP
#define TRACEGEN_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "tracegen/laws.hpp"
#include "tracegen/mobius.hpp"
#include "tracegen/rng.hpp"
#include "tracegen/trace.hpp"

namespace tracegen {

/// K >= 0 with P(K = k) = (1-r) r^k, by inversion of the CDF:
/// K = floor(ln(1-U) / ln(r)). Requires r in [0, 1).
std::int64_t sample_geometric(double r, Rng& rng);

/// True with probability r.
bool sample_bernoulli(double r, Rng& rng);

/// Work counters for the recursive sampler; calls counts invocations
/// (including leaf calls) and letters counts emitted letters.
struct CostCounter {
    std::uint64_t calls = 0;
    std::uint64_t letters = 0;
};

/// Recursive exact sampler: draws a trace over s distributed as D_{s,t}
/// at the table's parameter p (which must stay below p_s throughout the
/// recursion). The pivot letter is always the least index of s & t.
Trace sample_finite(const MobiusTable& table, LetterSet s, LetterSet t, Rng& rng,
                    CostCounter* cost = nullptr);

/// Counters of the rejection sampler's repeat loop, cumulative across
/// recursive calls.
struct RejectionStats {
    std::uint64_t attempts = 0;   // repeat-loop iterations
    std::uint64_t accepted = 0;   // loops that exited
    std::uint64_t rejections = 0; // attempts - accepted
    std::uint64_t produced_letters = 0;
};

/// Rejection sampler over an enumeration a_1..a_n of the alphabet:
/// draws a trace over Sigma_k = {a_1..a_k} distributed as
/// D_{Sigma_k, L(a_ell)}, using only the mu values of the sets Sigma_j.
/// Positions k < ell are 1-based; ordering[i] is the letter a_{i+1}.
Trace sample_finite_rejection(const MobiusTable& table, const std::vector<int>& ordering,
                              int k, int ell, Rng& rng, RejectionStats& stats);

} // namespace tracegen

#endif

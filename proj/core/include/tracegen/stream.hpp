#ifndef TRACEGEN_STREAM_HPP
#define TRACEGEN_STREAM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tracegen/mobius.hpp"
#include "tracegen/rng.hpp"
#include "tracegen/sampler.hpp"
#include "tracegen/trace.hpp"

namespace tracegen {

/// Configuration shared by the samplers and streams. p may be given
/// explicitly or left at the critical root; the anchor letter drives the
/// direct stream and the ordering drives the rejection machinery. Tie
/// breaks in the recursive sampler are fixed to the least index of S & T.
struct SamplerConfig {
    std::optional<double> p;          // empty means: use the critical root
    int anchor = -1;                  // default: last letter of the ordering
    std::vector<int> ordering;        // default: declared letter order
    std::uint64_t seed = kDefaultSeed;
};

/// Endless generator of the non-decreasing prefixes xi_k of an infinite
/// trace under the uniform measure at infinity. Each loop appends one
/// anchor-pyramidal increment v.a, so xi_k left-divides xi_{k+1} by
/// construction. Requires a connected dependence graph.
class PrefixStream {
public:
    enum class Mode { direct, rejection };

    PrefixStream(const DependenceGraph& g, const SamplerConfig& cfg, Mode mode);

    const DependenceGraph& graph() const { return *g_; }
    Mode mode() const { return mode_; }
    double p() const { return table_->p(); }
    int anchor() const { return anchor_; }

    /// Runs one loop; returns the appended increment (v . a).
    Trace step();

    const Trace& prefix() const { return prefix_; }
    std::uint64_t loops() const { return loops_; }
    const RejectionStats& stats() const { return stats_; }

private:
    const DependenceGraph* g_;
    Mode mode_;
    std::vector<int> ordering_;
    int anchor_;
    std::unique_ptr<MobiusTable> table_;
    Rng rng_;
    Trace prefix_;
    std::uint64_t loops_ = 0;
    RejectionStats stats_;
};

} // namespace tracegen

#endif

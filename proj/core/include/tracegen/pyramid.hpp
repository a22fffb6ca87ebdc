#ifndef TRACEGEN_PYRAMID_HPP
#define TRACEGEN_PYRAMID_HPP

#include <vector>

#include "tracegen/trace.hpp"

namespace tracegen {

/// Unique factorization of a trace x as u_0 ... u_{k-1} u_k where each
/// u_i (i < k) is anchor-pyramidal and the tail u_k has no occurrence of
/// the anchor. k equals the number of occurrences of the anchor in x.
struct PyramidalFactorization {
    std::vector<Trace> pyramids;
    Trace tail;
    int anchor = -1;

    std::size_t k() const { return pyramids.size(); }
    Trace concatenated() const;
};

/// True iff x has exactly one occurrence of a1 and max(x) = {a1}.
bool is_pyramidal(const DependenceGraph& g, const Trace& x, int a1);

/// Decomposes x through a1-pyramidal traces. Each pyramid is the
/// downward closure of one a1-piece in the heap, taken bottom-up.
PyramidalFactorization pyramidal_decompose(const DependenceGraph& g, const Trace& x, int a1);

} // namespace tracegen

#endif

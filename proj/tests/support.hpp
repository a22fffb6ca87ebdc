#ifndef TRACEGEN_TESTS_SUPPORT_HPP
#define TRACEGEN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tracegen/dependence_graph.hpp"
#include "tracegen/laws.hpp"
#include "tracegen/mobius.hpp"
#include "tracegen/rng.hpp"
#include "tracegen/trace.hpp"

namespace tracegen::testing {

// --- graph families -------------------------------------------------------

/// Path graph a - b - c - d, the primary test alphabet.
DependenceGraph path4();

/// Complete dependence on k letters (free monoid).
DependenceGraph free_monoid(int k);

/// No dependence at all beyond reflexivity (free commutative monoid).
DependenceGraph edgeless(int k);

/// Dependence cycle a_0 - a_1 - ... - a_{n-1} - a_0.
DependenceGraph cycle(int n);

/// Dimer chain: path on n letters.
DependenceGraph dimer(int n);

/// Graph from an edge bitmask over the pairs (i, j), i < j, in
/// lexicographic order. Enumerating masks enumerates all graphs on n
/// labeled letters.
DependenceGraph graph_from_mask(int n, std::uint64_t edge_mask);
int pair_count(int n);

/// Random graph with independent edge coin flips.
DependenceGraph random_graph(int n, double edge_prob, Rng& rng);

// --- trace helpers --------------------------------------------------------

inline Trace tr(const DependenceGraph& g, std::string_view text) {
    return Trace::parse(g, text);
}

/// Canonical key of a word: the lexicographically least representative,
/// built letter by letter. Independent of cf_normal_form; used to
/// identify congruence classes in oracles.
std::string lex_min_key(const DependenceGraph& g, const Trace& x);

/// Calls fn for every word (including the empty one) over the letters of
/// `s` with length <= maxlen.
void for_each_word(const DependenceGraph& g, LetterSet s, int maxlen,
                   const std::function<void(const Trace&)>& fn);

/// Number of distinct traces of each length 0..maxlen over `s`, counted
/// by brute-force word enumeration and lex-min deduplication; when
/// `max_inside` is given only traces with max(x) inside it are counted.
std::vector<std::int64_t> count_traces(const DependenceGraph& g, LetterSet s, int maxlen);
std::vector<std::int64_t> count_traces_max_inside(const DependenceGraph& g, LetterSet s,
                                                  LetterSet max_inside, int maxlen);

/// All distinct traces over `s` of length <= maxlen, one representative
/// each, keyed deterministically.
std::vector<Trace> distinct_traces(const DependenceGraph& g, LetterSet s, int maxlen);

// --- statistics -----------------------------------------------------------

/// Total variation distance 0.5 * sum |a - b| over the union of keys.
double tv_distance(const std::map<std::string, double>& a,
                   const std::map<std::string, double>& b);

/// Empirical distribution of samples over Cartier-Foata keys, restricted
/// to traces of length <= maxlen; longer samples still count in the
/// denominator.
std::map<std::string, double> empirical_cf_distribution(const DependenceGraph& g,
                                                        const std::vector<Trace>& samples,
                                                        int maxlen);

/// Exact table entries as doubles, keyed like the empirical map.
std::map<std::string, double> table_distribution(const ExactTable& table);

// --- reference samplers ----------------------------------------------------

/// The inefficient rejection variant used as a distribution oracle: the
/// whole pyramid block is redrawn until max(xi) lands inside L(a_ell).
Trace algorithm_2b(const MobiusTable& table, const std::vector<int>& ordering,
                   int k, int ell, Rng& rng);

} // namespace tracegen::testing

#endif

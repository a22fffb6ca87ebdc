#ifndef TRACEGEN_DEPENDENCE_GRAPH_HPP
#define TRACEGEN_DEPENDENCE_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracegen/letter_set.hpp"

namespace tracegen {

/// Dependence alphabet (Sigma, R): named letters plus a reflexive and
/// symmetric dependence relation. Letters whose pair is *not* in R
/// commute in the trace monoid.
///
/// Immutable after construction and safe to share across threads.
class DependenceGraph {
public:
    /// Builds the graph from letter names and dependent pairs (given by
    /// name). Reflexive pairs are implicit and the symmetric closure is
    /// applied. Throws input_error on duplicate letters, unknown names,
    /// or more than 64 letters.
    DependenceGraph(std::vector<std::string> letters,
                    const std::vector<std::pair<std::string, std::string>>& dependent_pairs);

    int size() const { return static_cast<int>(letters_.size()); }
    LetterSet all() const { return LetterSet::full(size()); }

    const std::string& name(int letter) const { return letters_[static_cast<size_t>(letter)]; }
    const std::vector<std::string>& letters() const { return letters_; }

    /// Index of a named letter; throws input_error if unknown.
    int index(std::string_view name) const;
    /// Index of a named letter, or -1 if unknown.
    int find(std::string_view name) const;

    /// The link L(a): all letters dependent on a, including a itself.
    LetterSet link(int a) const { return link_[static_cast<size_t>(a)]; }

    bool dependent(int a, int b) const { return link_[static_cast<size_t>(a)].contains(b); }
    bool independent(int a, int b) const { return !dependent(a, b); }

    /// Connected component of `a` in the subgraph induced on `within`
    /// (reflexive loops ignored). Requires a in within.
    LetterSet component(LetterSet within, int a) const;

    /// Whole-graph connectivity; irreducibility gate for the streaming
    /// algorithms.
    bool connected() const;

    /// Parses a letter set given as comma-separated names.
    LetterSet parse_letter_set(std::string_view names) const;
    std::string set_to_string(LetterSet s) const;

private:
    std::vector<std::string> letters_;
    std::vector<LetterSet> link_;
};

/// All cliques of the trace monoid inside `s`: subsets of `s` whose
/// letters are pairwise independent, the empty set included. Returned
/// in ascending bit-set order so downstream sums are reproducible.
std::vector<LetterSet> enumerate_cliques(const DependenceGraph& g, LetterSet s);

} // namespace tracegen

#endif

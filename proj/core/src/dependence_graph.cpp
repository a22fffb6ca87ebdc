#include "tracegen/dependence_graph.hpp"

#include <algorithm>
#include <sstream>

#include "tracegen/errors.hpp"

namespace tracegen {

DependenceGraph::DependenceGraph(std::vector<std::string> letters,
                                 const std::vector<std::pair<std::string, std::string>>& dependent_pairs)
    : letters_(std::move(letters)) {
    if (letters_.empty())
        throw input_error("alphabet must contain at least one letter");
    if (letters_.size() > 64)
        throw input_error("alphabet is capped at 64 letters, got " + std::to_string(letters_.size()));
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].empty())
            throw input_error("letter names must be nonempty");
        for (size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw input_error("duplicate letter '" + letters_[i] + "'");
    }

    link_.assign(letters_.size(), LetterSet());
    for (int i = 0; i < size(); ++i)
        link_[static_cast<size_t>(i)] = LetterSet::single(i); // reflexive part

    for (const auto& [from, to] : dependent_pairs) {
        int a = index(from);
        int b = index(to);
        link_[static_cast<size_t>(a)] |= LetterSet::single(b);
        link_[static_cast<size_t>(b)] |= LetterSet::single(a); // symmetric closure
    }
}

int DependenceGraph::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (letters_[static_cast<size_t>(i)] == name)
            return i;
    return -1;
}

int DependenceGraph::index(std::string_view name) const {
    int i = find(name);
    if (i < 0)
        throw input_error("unknown letter '" + std::string(name) + "'");
    return i;
}

LetterSet DependenceGraph::component(LetterSet within, int a) const {
    if (!within.contains(a))
        throw input_error("letter '" + name(a) + "' is not in the given subset");
    LetterSet reached = LetterSet::single(a);
    LetterSet frontier = reached;
    while (!frontier.empty()) {
        LetterSet next;
        for (int v : frontier)
            next |= link_[static_cast<size_t>(v)] & within;
        frontier = next - reached;
        reached |= next;
    }
    return reached;
}

bool DependenceGraph::connected() const {
    return component(all(), 0) == all();
}

LetterSet DependenceGraph::parse_letter_set(std::string_view names) const {
    LetterSet out;
    size_t start = 0;
    while (start <= names.size()) {
        size_t comma = names.find(',', start);
        if (comma == std::string_view::npos)
            comma = names.size();
        std::string_view item = names.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty())
            out |= LetterSet::single(index(item));
        start = comma + 1;
    }
    return out;
}

std::string DependenceGraph::set_to_string(LetterSet s) const {
    std::ostringstream out;
    bool first = true;
    for (int a : s) {
        if (!first)
            out << ',';
        out << name(a);
        first = false;
    }
    return out.str();
}

namespace {

void clique_dfs(const DependenceGraph& g, LetterSet candidates, LetterSet current,
                std::vector<LetterSet>& out) {
    out.push_back(current);
    while (!candidates.empty()) {
        int a = candidates.least();
        candidates = candidates.without(a);
        // extend by a: future members must be independent of a
        clique_dfs(g, candidates - g.link(a), current.with(a), out);
    }
}

} // namespace

std::vector<LetterSet> enumerate_cliques(const DependenceGraph& g, LetterSet s) {
    std::vector<LetterSet> out;
    clique_dfs(g, s, LetterSet(), out);
    std::sort(out.begin(), out.end(),
              [](LetterSet a, LetterSet b) { return a.bits() < b.bits(); });
    return out;
}

} // namespace tracegen

#include "tracegen/trace.hpp"

#include <algorithm>
#include <sstream>

#include "tracegen/errors.hpp"

namespace tracegen {

std::size_t Trace::count(int a) const {
    return static_cast<std::size_t>(
        std::count(word_.begin(), word_.end(), static_cast<std::uint8_t>(a)));
}

LetterSet Trace::alphabet() const {
    LetterSet s;
    for (std::uint8_t a : word_)
        s |= LetterSet::single(a);
    return s;
}

Trace Trace::parse(const DependenceGraph& g, std::string_view text) {
    if (text.empty())
        return Trace();
    if (text == "e" && g.find("e") < 0)
        return Trace();
    Trace out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t dot = text.find('.', start);
        if (dot == std::string_view::npos)
            dot = text.size();
        std::string_view item = text.substr(start, dot - start);
        if (item.empty())
            throw input_error("empty letter in trace '" + std::string(text) + "'");
        out.push_letter(g.index(item));
        start = dot + 1;
        if (start > text.size())
            break;
        if (start == text.size())
            throw input_error("trailing '.' in trace '" + std::string(text) + "'");
    }
    return out;
}

std::string Trace::to_string(const DependenceGraph& g) const {
    if (word_.empty())
        return "e";
    std::ostringstream out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i)
            out << '.';
        out << g.name(word_[i]);
    }
    return out.str();
}

LetterSet max_letters(const DependenceGraph& g, const Trace& x) {
    // Right-to-left scan: a letter is maximal iff nothing after its last
    // occurrence depends on it. The link is reflexive, so `seen` also
    // filters repeated occurrences.
    LetterSet maxima;
    LetterSet seen;
    auto word = x.word();
    for (size_t i = word.size(); i-- > 0;) {
        int a = word[i];
        if (!g.link(a).intersects(seen))
            maxima |= LetterSet::single(a);
        seen |= LetterSet::single(a);
    }
    return maxima;
}

LetterSet min_letters(const DependenceGraph& g, const Trace& x) {
    LetterSet minima;
    LetterSet seen;
    for (int a : x.word()) {
        if (!g.link(a).intersects(seen))
            minima |= LetterSet::single(a);
        seen |= LetterSet::single(a);
    }
    return minima;
}

std::vector<LetterSet> cf_normal_form(const DependenceGraph& g, const Trace& x) {
    // Greedy layer extraction: repeatedly remove the minimal pieces of
    // what remains. Each pass is one left-to-right scan.
    std::vector<LetterSet> cliques;
    std::vector<std::uint8_t> rest(x.word().begin(), x.word().end());
    std::vector<std::uint8_t> next;
    while (!rest.empty()) {
        LetterSet layer;
        LetterSet seen;
        next.clear();
        for (std::uint8_t a : rest) {
            if (!g.link(a).intersects(seen))
                layer |= LetterSet::single(a);
            else
                next.push_back(a);
            seen |= LetterSet::single(a);
        }
        cliques.push_back(layer);
        rest.swap(next);
    }
    return cliques;
}

Trace trace_from_cliques(std::span<const LetterSet> cliques) {
    Trace out;
    for (const LetterSet& c : cliques)
        for (int a : c)
            out.push_letter(a);
    return out;
}

std::string cf_to_string(const DependenceGraph& g, std::span<const LetterSet> cliques) {
    if (cliques.empty())
        return "[]";
    std::ostringstream out;
    for (const LetterSet& c : cliques) {
        out << '[';
        bool first = true;
        for (int a : c) {
            if (!first)
                out << ' ';
            out << g.name(a);
            first = false;
        }
        out << ']';
    }
    return out.str();
}

bool traces_equal(const DependenceGraph& g, const Trace& x, const Trace& y) {
    if (x.length() != y.length())
        return false;
    return cf_normal_form(g, x) == cf_normal_form(g, y);
}

namespace {

// Removes the bottom piece labeled `a` from the heap of `word`, i.e. the
// first occurrence of `a` that has no earlier dependent letter. Returns
// false if `a` is not a minimal piece.
bool remove_bottom_piece(const DependenceGraph& g, std::vector<std::uint8_t>& word, int a) {
    LetterSet blockers = g.link(a);
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] == a) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
        if (blockers.contains(word[i]))
            return false;
    }
    return false;
}

} // namespace

std::optional<Trace> left_quotient(const DependenceGraph& g, const Trace& x, const Trace& y) {
    if (x.length() > y.length())
        return std::nullopt;
    std::vector<std::uint8_t> rest(y.word().begin(), y.word().end());
    for (int a : x.word())
        if (!remove_bottom_piece(g, rest, a))
            return std::nullopt;
    return Trace(std::move(rest));
}

bool left_divides(const DependenceGraph& g, const Trace& x, const Trace& y) {
    return left_quotient(g, x, y).has_value();
}

} // namespace tracegen

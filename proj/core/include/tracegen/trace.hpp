#ifndef TRACEGEN_TRACE_HPP
#define TRACEGEN_TRACE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracegen/dependence_graph.hpp"
#include "tracegen/letter_set.hpp"

namespace tracegen {

/// Element of the trace monoid, held as one representative word.
/// Two traces are equal as monoid elements iff their Cartier-Foata
/// normal forms coincide; equality and canonicalization are computed on
/// demand against a DependenceGraph. The empty trace is the unit e.
class Trace {
public:
    Trace() = default;
    explicit Trace(std::vector<std::uint8_t> word) : word_(std::move(word)) {}

    static Trace unit() { return Trace(); }

    std::size_t length() const { return word_.size(); }
    bool is_unit() const { return word_.empty(); }
    std::span<const std::uint8_t> word() const { return word_; }
    int letter_at(std::size_t i) const { return word_[i]; }

    void push_letter(int a) { word_.push_back(static_cast<std::uint8_t>(a)); }
    void pop_letter() { word_.pop_back(); }
    void append(const Trace& other) {
        word_.insert(word_.end(), other.word_.begin(), other.word_.end());
    }

    /// Number of occurrences |x|_a of a letter.
    std::size_t count(int a) const;
    /// Set of letters occurring at least once.
    LetterSet alphabet() const;

    /// Parses "b.a.b.d.d.c"; "e" denotes the unit unless the graph
    /// declares a letter named e.
    static Trace parse(const DependenceGraph& g, std::string_view text);
    std::string to_string(const DependenceGraph& g) const;

    friend bool operator==(const Trace&, const Trace&) = delete; // use traces_equal

private:
    std::vector<std::uint8_t> word_;
};

/// max(x): letters labeling maximal pieces of the heap, i.e. the letters
/// some representative word of x can end with.
LetterSet max_letters(const DependenceGraph& g, const Trace& x);

/// min(x): letters labeling minimal pieces; equals the first clique of
/// the Cartier-Foata normal form. a is a left divisor of x iff a is here.
LetterSet min_letters(const DependenceGraph& g, const Trace& x);

/// Cartier-Foata normal form: the unique sequence of nonempty cliques
/// (c_1, ..., c_m) with c_1 the minimal pieces of x, recursively on the
/// remainder. Every letter of c_{i+1} depends on some letter of c_i.
std::vector<LetterSet> cf_normal_form(const DependenceGraph& g, const Trace& x);

/// Rebuilds the representative word from a clique sequence, letters of
/// each clique in increasing index order.
Trace trace_from_cliques(std::span<const LetterSet> cliques);

/// Serialization "[b d][a d][b][c]"; the empty sequence prints "[]".
std::string cf_to_string(const DependenceGraph& g, std::span<const LetterSet> cliques);

/// Equality of congruence classes (both traces over g).
bool traces_equal(const DependenceGraph& g, const Trace& x, const Trace& y);

/// Left divisibility x <= y, by greedy cancellation of x's letters from
/// the bottom of y's heap.
bool left_divides(const DependenceGraph& g, const Trace& x, const Trace& y);

/// The unique z with y = x . z, if x left-divides y.
std::optional<Trace> left_quotient(const DependenceGraph& g, const Trace& x, const Trace& y);

} // namespace tracegen

#endif

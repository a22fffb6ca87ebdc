#include "tracegen/pyramid.hpp"

#include <cstddef>

namespace tracegen {

Trace PyramidalFactorization::concatenated() const {
    Trace out;
    for (const Trace& u : pyramids)
        out.append(u);
    out.append(tail);
    return out;
}

bool is_pyramidal(const DependenceGraph& g, const Trace& x, int a1) {
    return x.count(a1) == 1 && max_letters(g, x) == LetterSet::single(a1);
}

PyramidalFactorization pyramidal_decompose(const DependenceGraph& g, const Trace& x, int a1) {
    PyramidalFactorization out;
    out.anchor = a1;

    std::vector<std::uint8_t> rest(x.word().begin(), x.word().end());
    std::vector<char> taken;
    std::vector<std::uint8_t> pyramid, remainder;

    // Each pyramid is the downward closure of the lowest remaining
    // a1-piece: walk left from that piece collecting everything a chain
    // of dependencies ties below it.
    while (true) {
        size_t pos = rest.size();
        for (size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == a1) {
                pos = i;
                break;
            }
        }
        if (pos == rest.size())
            break;

        taken.assign(rest.size(), 0);
        taken[pos] = 1;
        LetterSet wanted = g.link(a1);
        for (size_t i = pos; i-- > 0;) {
            if (wanted.contains(rest[i])) {
                taken[i] = 1;
                wanted |= g.link(rest[i]);
            }
        }

        pyramid.clear();
        remainder.clear();
        for (size_t i = 0; i < rest.size(); ++i)
            (taken[i] ? pyramid : remainder).push_back(rest[i]);
        out.pyramids.emplace_back(std::move(pyramid));
        rest.swap(remainder);
    }

    out.tail = Trace(std::move(rest));
    return out;
}

} // namespace tracegen

#include "support.hpp"

#include <algorithm>
#include <set>

#include "tracegen/laws.hpp"
#include "tracegen/sampler.hpp"

namespace tracegen::testing {

namespace {

std::vector<std::string> letter_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

} // namespace

DependenceGraph path4() {
    return DependenceGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

DependenceGraph free_monoid(int k) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto names = letter_names(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
    return DependenceGraph(names, edges);
}

DependenceGraph edgeless(int k) {
    return DependenceGraph(letter_names(k), {});
}

DependenceGraph cycle(int n) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto names = letter_names(n);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>((i + 1) % n)]);
    return DependenceGraph(names, edges);
}

DependenceGraph dimer(int n) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto names = letter_names(n);
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(i + 1)]);
    return DependenceGraph(names, edges);
}

int pair_count(int n) {
    return n * (n - 1) / 2;
}

DependenceGraph graph_from_mask(int n, std::uint64_t edge_mask) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto names = letter_names(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((edge_mask >> bit) & 1u)
                edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
    return DependenceGraph(names, edges);
}

DependenceGraph random_graph(int n, double edge_prob, Rng& rng) {
    std::uint64_t mask = 0;
    for (int bit = 0; bit < pair_count(n); ++bit)
        if (rng.next_double() < edge_prob)
            mask |= std::uint64_t{1} << bit;
    return graph_from_mask(n, mask);
}

std::string lex_min_key(const DependenceGraph& g, const Trace& x) {
    std::vector<std::uint8_t> word(x.word().begin(), x.word().end());
    std::string out;
    out.reserve(word.size());
    while (!word.empty()) {
        int best = -1;
        size_t best_pos = 0;
        LetterSet seen;
        for (size_t i = 0; i < word.size(); ++i) {
            int a = word[i];
            if (!g.link(a).intersects(seen) && (best < 0 || a < best)) {
                best = a;
                best_pos = i;
            }
            seen |= LetterSet::single(a);
        }
        out.push_back(static_cast<char>('a' + best));
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    return out;
}

void for_each_word(const DependenceGraph& g, LetterSet s, int maxlen,
                   const std::function<void(const Trace&)>& fn) {
    std::vector<int> letters;
    for (int a : s)
        letters.push_back(a);
    Trace current;
    std::function<void(int)> rec = [&](int remaining) {
        fn(current);
        if (remaining == 0)
            return;
        for (int a : letters) {
            current.push_letter(a);
            rec(remaining - 1);
            current.pop_letter();
        }
    };
    rec(maxlen);
}

std::vector<std::int64_t> count_traces_max_inside(const DependenceGraph& g, LetterSet s,
                                                  LetterSet max_inside, int maxlen) {
    std::vector<std::set<std::string>> classes(static_cast<size_t>(maxlen) + 1);
    for_each_word(g, s, maxlen, [&](const Trace& w) {
        if (!max_inside.contains_all(max_letters(g, w)))
            return;
        classes[w.length()].insert(lex_min_key(g, w));
    });
    std::vector<std::int64_t> counts;
    for (const auto& cls : classes)
        counts.push_back(static_cast<std::int64_t>(cls.size()));
    return counts;
}

std::vector<std::int64_t> count_traces(const DependenceGraph& g, LetterSet s, int maxlen) {
    return count_traces_max_inside(g, s, g.all(), maxlen);
}

std::vector<Trace> distinct_traces(const DependenceGraph& g, LetterSet s, int maxlen) {
    std::set<std::string> seen;
    std::vector<Trace> out;
    for_each_word(g, s, maxlen, [&](const Trace& w) {
        if (seen.insert(lex_min_key(g, w)).second)
            out.push_back(w);
    });
    return out;
}

double tv_distance(const std::map<std::string, double>& a,
                   const std::map<std::string, double>& b) {
    double total = 0.0;
    for (const auto& [key, pa] : a) {
        auto it = b.find(key);
        total += std::abs(pa - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [key, pb] : b)
        if (!a.count(key))
            total += pb;
    return total / 2.0;
}

Trace algorithm_2b(const MobiusTable& table, const std::vector<int>& ordering,
                   int k, int ell, Rng& rng) {
    const DependenceGraph& g = table.graph();
    LetterSet sigma_k;
    for (int i = 0; i < k; ++i)
        sigma_k |= LetterSet::single(ordering[static_cast<size_t>(i)]);
    int a_ell = ordering[static_cast<size_t>(ell - 1)];
    LetterSet link_ell = g.link(a_ell);
    if (!sigma_k.intersects(link_ell))
        return Trace();

    int a_k = ordering[static_cast<size_t>(k - 1)];
    LetterSet component = g.component(sigma_k, a_k);
    double r = component.intersects(link_ell) ? geometric_param(table, sigma_k, a_k) : 0.0;

    for (;;) {
        Trace xi;
        bool heads = sample_bernoulli(r, rng);
        Trace v_inf = algorithm_2b(table, ordering, k - 1, ell, rng);
        std::int64_t pyramids = heads ? 1 + sample_geometric(r, rng) : 0;
        for (std::int64_t i = 0; i < pyramids; ++i) {
            xi.append(algorithm_2b(table, ordering, k - 1, k, rng));
            xi.push_letter(a_k);
        }
        xi.append(v_inf);
        if (link_ell.contains_all(max_letters(g, xi)))
            return xi;
    }
}

} // namespace tracegen::testing

namespace tracegen::testing {

std::map<std::string, double> empirical_cf_distribution(const DependenceGraph& g,
                                                        const std::vector<Trace>& samples,
                                                        int maxlen) {
    std::map<std::string, double> out;
    double unit = 1.0 / static_cast<double>(samples.size());
    for (const Trace& x : samples) {
        if (static_cast<int>(x.length()) > maxlen)
            continue;
        out[cf_to_string(g, cf_normal_form(g, x))] += unit;
    }
    return out;
}

std::map<std::string, double> table_distribution(const ExactTable& table) {
    std::map<std::string, double> out;
    for (const auto& [key, weight] : table.entries)
        out[key] = static_cast<double>(weight);
    return out;
}

} // namespace tracegen::testing

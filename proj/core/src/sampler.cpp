#include "tracegen/sampler.hpp"

#include <cmath>

#include "tracegen/errors.hpp"

namespace tracegen {

std::int64_t sample_geometric(double r, Rng& rng) {
    if (!(r >= 0.0) || r >= 1.0)
        throw domain_error("geometric parameter must lie in [0, 1)");
    if (r == 0.0)
        return 0;
    double u = rng.next_double();
    return static_cast<std::int64_t>(std::floor(std::log1p(-u) / std::log(r)));
}

bool sample_bernoulli(double r, Rng& rng) {
    return rng.next_double() < r;
}

namespace {

void sample_finite_rec(const MobiusTable& table, LetterSet s, LetterSet t, Rng& rng,
                       Trace& out, CostCounter* cost) {
    if (cost)
        ++cost->calls;
    LetterSet st = s & t;
    if (st.empty())
        return;

    int a1 = st.least();
    double r = geometric_param(table, s, a1);
    std::int64_t k = sample_geometric(r, rng);

    LetterSet rest = s.without(a1);
    LetterSet link = table.graph().link(a1);
    for (std::int64_t i = 0; i < k; ++i) {
        sample_finite_rec(table, rest, link, rng, out, cost);
        out.push_letter(a1);
        if (cost)
            ++cost->letters;
    }
    sample_finite_rec(table, rest, t, rng, out, cost);
}

} // namespace

Trace sample_finite(const MobiusTable& table, LetterSet s, LetterSet t, Rng& rng,
                    CostCounter* cost) {
    Trace out;
    sample_finite_rec(table, s, t, rng, out, cost);
    return out;
}

namespace {

LetterSet prefix_set(const std::vector<int>& ordering, int k) {
    LetterSet s;
    for (int i = 0; i < k; ++i)
        s |= LetterSet::single(ordering[static_cast<size_t>(i)]);
    return s;
}

Trace rejection_rec(const MobiusTable& table, const std::vector<int>& ordering,
                    int k, int ell, Rng& rng, RejectionStats& stats) {
    const DependenceGraph& g = table.graph();
    LetterSet sigma_k = prefix_set(ordering, k);
    int a_ell = ordering[static_cast<size_t>(ell - 1)];
    LetterSet link_ell = g.link(a_ell);

    if (!sigma_k.intersects(link_ell))
        return Trace();

    int a_k = ordering[static_cast<size_t>(k - 1)];
    LetterSet component = g.component(sigma_k, a_k);
    double r = component.intersects(link_ell) ? geometric_param(table, sigma_k, a_k) : 0.0;

    bool heads = false;
    Trace v_inf;
    for (;;) {
        ++stats.attempts;
        heads = sample_bernoulli(r, rng);
        v_inf = rejection_rec(table, ordering, k - 1, ell, rng, stats);
        // Accept unless the pyramids would bury v_inf's maximal letters:
        // R = 0 or a_k in L(a_ell) or v_inf not in M_{Sigma_{k-1} \ L(a_k)}.
        if (!heads || link_ell.contains(a_k) || v_inf.alphabet().intersects(g.link(a_k))) {
            ++stats.accepted;
            break;
        }
        ++stats.rejections;
    }

    std::int64_t pyramid_count = heads ? 1 + sample_geometric(r, rng) : 0;
    Trace xi;
    for (std::int64_t i = 0; i < pyramid_count; ++i) {
        xi.append(rejection_rec(table, ordering, k - 1, k, rng, stats));
        xi.push_letter(a_k);
    }
    xi.append(v_inf);
    return xi;
}

} // namespace

Trace sample_finite_rejection(const MobiusTable& table, const std::vector<int>& ordering,
                              int k, int ell, Rng& rng, RejectionStats& stats) {
    const int n = table.graph().size();
    if (static_cast<int>(ordering.size()) != n)
        throw input_error("ordering must enumerate the whole alphabet");
    LetterSet seen;
    for (int a : ordering) {
        if (a < 0 || a >= n || seen.contains(a))
            throw input_error("ordering is not a permutation of the alphabet");
        seen |= LetterSet::single(a);
    }
    if (k < 0 || ell <= k || ell > n)
        throw input_error("need 0 <= k < ell <= n");

    Trace out = rejection_rec(table, ordering, k, ell, rng, stats);
    stats.produced_letters += out.length();
    return out;
}

} // namespace tracegen

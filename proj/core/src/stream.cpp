#include "tracegen/stream.hpp"

#include <numeric>

#include "tracegen/errors.hpp"

namespace tracegen {

PrefixStream::PrefixStream(const DependenceGraph& g, const SamplerConfig& cfg, Mode mode)
    : g_(&g), mode_(mode), rng_(cfg.seed) {
    if (!g.connected())
        throw input_error("streaming requires a connected dependence graph (irreducible monoid)");
    if (cfg.p.has_value())
        throw input_error("prefix streams run at the critical parameter; leave p unset");

    ordering_ = cfg.ordering;
    if (ordering_.empty()) {
        ordering_.resize(static_cast<size_t>(g.size()));
        std::iota(ordering_.begin(), ordering_.end(), 0);
    }
    if (static_cast<int>(ordering_.size()) != g.size())
        throw input_error("ordering must enumerate the whole alphabet");
    LetterSet seen;
    for (int a : ordering_) {
        if (a < 0 || a >= g.size() || seen.contains(a))
            throw input_error("ordering is not a permutation of the alphabet");
        seen |= LetterSet::single(a);
    }

    if (mode_ == Mode::rejection) {
        anchor_ = ordering_.back();
        if (cfg.anchor >= 0 && cfg.anchor != anchor_)
            throw input_error("the rejection stream appends the last letter of the ordering; "
                              "reorder instead of setting an anchor");
    } else {
        anchor_ = cfg.anchor >= 0 ? cfg.anchor : ordering_.back();
        if (anchor_ >= g.size())
            throw input_error("anchor letter out of range");
    }

    double p_critical = critical_root(g, g.all()).value;
    table_ = std::make_unique<MobiusTable>(g, p_critical);
}

Trace PrefixStream::step() {
    Trace increment;
    if (mode_ == Mode::direct) {
        LetterSet s = g_->all().without(anchor_);
        increment = sample_finite(*table_, s, g_->link(anchor_), rng_);
        increment.push_letter(anchor_);
        stats_.produced_letters += increment.length();
    } else {
        increment = sample_finite_rejection(*table_, ordering_, g_->size() - 1, g_->size(),
                                            rng_, stats_);
        increment.push_letter(anchor_);
        stats_.produced_letters += 1; // the appended anchor letter
    }
    prefix_.append(increment);
    ++loops_;
    return increment;
}

} // namespace tracegen

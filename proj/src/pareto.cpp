#include "mgrq/pareto.hpp"

#include <algorithm>
#include <limits>

namespace mgrq {

bool dominates_plain(const Label& a, const Label& b) {
    return (a.cost < b.cost && a.gain >= b.gain) || (a.cost <= b.cost && a.gain > b.gain);
}

bool dominates_rc(const Label& a, std::span<const EdgeId> edges_a, const Label& b,
                  std::span<const EdgeId> edges_b) {
    if (!dominates_plain(a, b)) return false;
    return std::includes(edges_b.begin(), edges_b.end(), edges_a.begin(), edges_a.end());
}

ParetoSet::ParetoSet(Mode mode, bool subset_domination, bool dominance_pruning)
    : mode_(mode), subset_domination_(subset_domination), pruning_(dominance_pruning) {}

void ParetoSet::note_insert(double gain) {
    if (unprocessed_ == 0 || gain > max_unprocessed_) max_unprocessed_ = gain;
    ++unprocessed_;
}

UpdateOutcome ParetoSet::update(Way way) {
    double gain = mode_ == Mode::plain ? way.gain_plain : way.gain_rc;
    if (!subset_domination_ && pruning_) return update_plain(std::move(way), gain);
    return update_full_scan(std::move(way), gain);
}

// Plain skyline: cost and gain both strictly ascending, so domination and
// eviction reduce to neighbour checks around the insertion point.
UpdateOutcome ParetoSet::update_plain(Way way, double gain) {
    double cost = way.cost;
    auto ge = std::lower_bound(items_.begin(), items_.end(), cost,
                               [](const Item& it, double c) { return it.way.cost < c; });
    if (ge != items_.begin()) {
        // max gain among strictly cheaper items; equal gain dominates too
        const Item& prev = *std::prev(ge);
        if (prev.gain >= gain) return UpdateOutcome::rejected_dominated;
    }
    if (ge != items_.end() && ge->way.cost == cost) {
        if (ge->gain > gain) return UpdateOutcome::rejected_dominated;
        if (ge->gain == gain) return UpdateOutcome::rejected_duplicate;
    }
    // evict items with cost >= ours and gain <= ours
    auto last = ge;
    while (last != items_.end() && last->gain <= gain) {
        if (!last->processed) --unprocessed_;
        ++evicted_;
        ++last;
    }
    auto pos = items_.erase(ge, last);
    Item item;
    item.gain = gain;
    item.way = std::move(way);
    items_.insert(pos, std::move(item));
    note_insert(gain);
    return UpdateOutcome::inserted;
}

UpdateOutcome ParetoSet::update_full_scan(Way way, double gain) {
    Label label{way.cost, gain};
    auto dom = [&](const Label& a, std::span<const EdgeId> ea, const Label& b,
                   std::span<const EdgeId> eb) {
        return subset_domination_ ? dominates_rc(a, ea, b, eb) : dominates_plain(a, b);
    };
    for (const Item& it : items_) {
        if (it.way.cost == way.cost && it.gain == gain) {
            // Under redundancy control only ways interchangeable for every
            // future extension count as duplicates.
            bool same = !subset_domination_ || (it.way.edge_set == way.edge_set &&
                                                it.way.multiplicity == way.multiplicity);
            if (same) return UpdateOutcome::rejected_duplicate;
        }
        if (pruning_ && dom({it.way.cost, it.gain}, it.way.edge_set, label, way.edge_set))
            return UpdateOutcome::rejected_dominated;
    }
    if (pruning_) {
        auto doomed = [&](const Item& it) {
            return dom(label, way.edge_set, {it.way.cost, it.gain}, it.way.edge_set);
        };
        std::size_t kept = 0;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (doomed(items_[i])) {
                if (!items_[i].processed) --unprocessed_;
                ++evicted_;
            } else {
                if (kept != i) items_[kept] = std::move(items_[i]);
                ++kept;
            }
        }
        items_.resize(kept);
    }
    auto pos = std::upper_bound(items_.begin(), items_.end(), way.cost,
                                [](double c, const Item& it) { return c < it.way.cost; });
    Item item;
    item.gain = gain;
    item.way = std::move(way);
    items_.insert(pos, std::move(item));
    note_insert(gain);
    return UpdateOutcome::inserted;
}

double ParetoSet::max_gain() const {
    double m = 0.0;
    for (const Item& it : items_) m = std::max(m, it.gain);
    return m;
}

std::vector<Way> ParetoSet::take_unprocessed() {
    std::vector<Way> out;
    out.reserve(unprocessed_);
    for (Item& it : items_) {
        if (!it.processed) {
            out.push_back(it.way);
            it.processed = true;
        }
    }
    unprocessed_ = 0;
    max_unprocessed_ = 0.0;
    return out;
}

}  // namespace mgrq

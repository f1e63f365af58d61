#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mgrq/way.hpp"

namespace mgrq {

struct Label {
    double cost = 0.0;
    double gain = 0.0;
};

/// Strict domination: cheaper with at least the gain, or at most the cost
/// with more gain. Equal labels do not dominate.
bool dominates_plain(const Label& a, const Label& b);

/// Domination under redundancy control: plain domination plus the
/// dominating way's directed-edge set being a subset of the dominated one's.
/// Edge sets must be sorted.
bool dominates_rc(const Label& a, std::span<const EdgeId> edges_a,
                  const Label& b, std::span<const EdgeId> edges_b);

enum class UpdateOutcome { inserted, rejected_dominated, rejected_duplicate };

/// Skyline of ways keyed by (cost, mode gain), kept sorted by cost.
/// With subset_domination the rc relation is used and equal-label items with
/// different edge sets coexist. With dominance_pruning off only duplicate
/// rejection applies (the node tab then holds every valid way found).
/// Items carry the processed flag used by the search node tables.
class ParetoSet {
public:
    struct Item {
        Way way;
        double gain = 0.0;  // label gain under the set's mode
        bool processed = false;
    };

    ParetoSet() = default;
    ParetoSet(Mode mode, bool subset_domination, bool dominance_pruning);

    UpdateOutcome update(Way way);

    /// Maximum gain over all items, 0 when empty.
    double max_gain() const;

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    std::span<const Item> items() const { return items_; }

    // -- search support --------------------------------------------------
    bool has_unprocessed() const { return unprocessed_ > 0; }
    /// Max gain over unprocessed items; meaningless when none exist.
    double max_unprocessed_gain() const { return max_unprocessed_; }
    /// Copies all unprocessed ways and marks them processed.
    std::vector<Way> take_unprocessed();

    std::uint64_t evicted_count() const { return evicted_; }

private:
    UpdateOutcome update_plain(Way way, double gain);
    UpdateOutcome update_full_scan(Way way, double gain);
    void note_insert(double gain);

    std::vector<Item> items_;  // cost-ascending; ties in arrival order
    Mode mode_ = Mode::plain;
    bool subset_domination_ = false;
    bool pruning_ = true;
    std::size_t unprocessed_ = 0;
    double max_unprocessed_ = 0.0;
    std::uint64_t evicted_ = 0;
};

}  // namespace mgrq

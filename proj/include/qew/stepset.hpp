#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qew {

/// Finite set of vertical displacements s, each standing for the unit-width
/// atomic step (1, s). Stored sorted and deduplicated.
class StepSet {
public:
    explicit StepSet(std::vector<int> steps) : steps_(std::move(steps)) {
        if (steps_.empty()) throw std::invalid_argument("empty step set");
        std::sort(steps_.begin(), steps_.end());
        steps_.erase(std::unique(steps_.begin(), steps_.end()), steps_.end());
    }

    static StepSet dyck() { return StepSet({1, -1}); }
    static StepSet motzkin() { return StepSet({1, 0, -1}); }

    const std::vector<int>& steps() const { return steps_; }
    size_t size() const { return steps_.size(); }
    int min_step() const { return steps_.front(); }
    int max_step() const { return steps_.back(); }
    /// Largest height drop a single step can achieve (0 if none descends).
    int max_descent() const { return std::max(0, -min_step()); }

    bool operator==(const StepSet& o) const { return steps_ == o.steps_; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < steps_.size(); ++i) {
            if (i) s += ",";
            s += "[1," + std::to_string(steps_[i]) + "]";
        }
        return s + "]";
    }

private:
    std::vector<int> steps_;
};

}  // namespace qew

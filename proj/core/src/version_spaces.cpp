#include "teachdim/version_spaces.hpp"

#include <unordered_set>

namespace teachdim {

std::vector<VersionSpace> enumerate_version_spaces(const HypothesisClass& cls,
                                                   const Budget& budget) {
    BudgetMeter meter(budget, "version-space enumeration");
    std::vector<VersionSpace> out;
    std::unordered_set<VersionSpace, IndexSetHash> seen;

    out.push_back(cls.full_set());
    seen.insert(out.front());

    for (std::size_t head = 0; head < out.size(); ++head) {
        const VersionSpace current = out[head];  // copy: out may reallocate
        for (int x = 0; x < cls.instance_count(); ++x) {
            for (int y = 0; y <= 1; ++y) {
                VersionSpace next = current & cls.consistent_mask(x, y);
                if (next.empty() || next == current) continue;
                if (seen.insert(next).second) {
                    meter.charge();
                    out.push_back(std::move(next));
                }
            }
        }
    }
    return out;
}

}  // namespace teachdim

#pragma once

#include <unordered_map>

#include "teachdim/preference.hpp"

namespace teachdim::detail {

struct SpaceHypKey {
    VersionSpace space;
    int h;
    bool operator==(const SpaceHypKey& o) const { return h == o.h && space == o.space; }
};

struct SpaceHypKeyHash {
    std::size_t operator()(const SpaceHypKey& k) const {
        return k.space.hash() * 1000003u + static_cast<std::size_t>(k.h);
    }
};

// Memoizes argmin_set per (version space, current hypothesis). Engines hit
// the same pairs from many parent states.
class ArgminCache {
public:
    explicit ArgminCache(const PreferenceFunction& sigma) : sigma_(&sigma) {}

    const IndexSet& get(const VersionSpace& H, int h) {
        auto [it, inserted] = cache_.try_emplace(SpaceHypKey{H, h});
        if (inserted) it->second = sigma_->argmin_set(H, h);
        return it->second;
    }

    std::size_t size() const { return cache_.size(); }

private:
    const PreferenceFunction* sigma_;
    std::unordered_map<SpaceHypKey, IndexSet, SpaceHypKeyHash> cache_;
};

}  // namespace teachdim::detail

#pragma once

// Brute-force reference implementations, independent of the engine code
// paths they cross-check. Straight-line recursion, explicit enumeration,
// no memoization.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "teachdim/hypothesis_class.hpp"
#include "teachdim/preference.hpp"

namespace oracle {

inline constexpr long kInfinite = std::numeric_limits<long>::max() / 4;

// Worst-case optimal teaching cost by depth-limited minimax over example
// sequences, repeats included. Exact whenever the true value fits in the
// depth budget.
inline long d_sigma_naive(const teachdim::HypothesisClass& cls,
                          const teachdim::PreferenceFunction& sigma,
                          const teachdim::VersionSpace& H, int h, int target, int depth) {
    if (h == target) return 0;
    if (depth == 0) return kInfinite;
    long best = kInfinite;
    for (int x = 0; x < cls.instance_count(); ++x) {
        const int y = cls.label(target, x);
        teachdim::VersionSpace reduced = H & cls.consistent_mask(x, y);
        teachdim::IndexSet candidates = sigma.argmin_set(reduced, h);
        long value;
        if (candidates.is_singleton() && candidates.contains(static_cast<std::size_t>(target))) {
            value = 1;
        } else {
            long worst = 0;
            candidates.for_each([&](std::size_t c) {
                if (static_cast<int>(c) == target) return;
                worst = std::max(worst,
                                 d_sigma_naive(cls, sigma, reduced, static_cast<int>(c), target,
                                               depth - 1));
            });
            value = worst >= kInfinite ? kInfinite : 1 + worst;
        }
        best = std::min(best, value);
    }
    return best;
}

// Weak orders on m elements counted by enumerating rank vectors whose value
// set is an initial segment {0..k-1}; each weak order has exactly one such
// encoding.
inline unsigned long long weak_order_count_enum(int m) {
    unsigned long long count = 0;
    unsigned long long total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<unsigned long long>(m);
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long c = code;
        unsigned used = 0;
        int max_rank = 0;
        for (int i = 0; i < m; ++i) {
            const int r = static_cast<int>(c % static_cast<unsigned long long>(m));
            c /= static_cast<unsigned long long>(m);
            used |= 1u << r;
            max_rank = std::max(max_rank, r);
        }
        if (used == (1u << (max_rank + 1)) - 1) count += 1;
    }
    return count;
}

// The same count evaluated literally: sum over ordered compositions of m of
// the multinomial coefficients.
inline unsigned long long weak_order_count_formula(int m) {
    std::vector<unsigned long long> factorial(static_cast<std::size_t>(m) + 1, 1);
    for (int i = 1; i <= m; ++i)
        factorial[i] = factorial[i - 1] * static_cast<unsigned long long>(i);

    unsigned long long total = 0;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int left) -> void {
        if (left == 0) {
            unsigned long long multinomial = factorial[static_cast<std::size_t>(m)];
            for (int t : parts) multinomial /= factorial[static_cast<std::size_t>(t)];
            total += multinomial;
            return;
        }
        for (int t = 1; t <= left; ++t) {
            parts.push_back(t);
            self(self, left - t);
            parts.pop_back();
        }
    };
    recurse(recurse, m);
    return total;
}

// Smallest example set labeled by h that pins {h} inside `members`;
// enumerates all instance subsets directly.
inline int min_teaching_set_size(const teachdim::HypothesisClass& cls, int h,
                                 const teachdim::IndexSet& members) {
    const int n = cls.instance_count();
    int best = n + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        teachdim::IndexSet vs = members;
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) vs &= cls.consistent_mask(x, cls.label(h, x));
        if (vs.is_singleton() && vs.contains(static_cast<std::size_t>(h)))
            best = std::min(best, static_cast<int>(std::popcount(mask)));
    }
    return best;
}

// Recursive teaching dimension by minimizing over all hypothesis
// orderings.
inline int rtd_brute_force(const teachdim::HypothesisClass& cls) {
    const int m = cls.hypothesis_count();
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[i] = i;

    int best = cls.instance_count() + 1;
    do {
        teachdim::IndexSet suffix = cls.full_set();
        int worst = 0;
        for (int i = 0; i < m && worst < best; ++i) {
            worst = std::max(worst, min_teaching_set_size(cls, order[i], suffix));
            suffix.erase(static_cast<std::size_t>(order[i]));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Random distinct-row class with n instances and m hypotheses.
inline teachdim::ClassPtr random_class(std::mt19937& rng, int n, int m) {
    std::uniform_int_distribution<int> dist(0, (1 << n) - 1);
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < m) {
        const int v = dist(rng);
        if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    std::vector<std::vector<int>> rows;
    for (int v : picked) {
        std::vector<int> row(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) row[x] = (v >> (n - 1 - x)) & 1;
        rows.push_back(std::move(row));
    }
    return std::make_shared<teachdim::HypothesisClass>(std::move(rows));
}

// Random table-backed preference functions for property tests.
inline teachdim::PreferenceFunction random_local(std::mt19937& rng, teachdim::ClassPtr cls,
                                                 int max_rank = 4) {
    const int m = cls->hypothesis_count();
    std::uniform_int_distribution<teachdim::Rank> dist(0, max_rank);
    std::vector<std::vector<teachdim::Rank>> matrix(m, std::vector<teachdim::Rank>(m));
    for (auto& row : matrix)
        for (auto& r : row) r = dist(rng);
    return teachdim::build_local_table(std::move(cls), std::move(matrix));
}

inline teachdim::PreferenceFunction random_global(std::mt19937& rng, teachdim::ClassPtr cls,
                                                  int max_rank = 4) {
    const int m = cls->hypothesis_count();
    std::uniform_int_distribution<teachdim::Rank> dist(0, max_rank);
    std::vector<teachdim::Rank> ranks(static_cast<std::size_t>(m));
    for (auto& r : ranks) r = dist(rng);
    return teachdim::build_global(std::move(cls), std::move(ranks));
}

// Random gvs sigma over the realizable version spaces of the class.
inline teachdim::PreferenceFunction random_gvs(std::mt19937& rng, teachdim::ClassPtr cls,
                                               const std::vector<teachdim::VersionSpace>& spaces,
                                               int max_rank = 3) {
    const int m = cls->hypothesis_count();
    std::uniform_int_distribution<teachdim::Rank> dist(0, max_rank);
    std::vector<teachdim::GvsEntry> entries;
    for (const auto& H : spaces) {
        teachdim::GvsEntry e;
        e.pattern.required = H;
        e.pattern.optional = teachdim::IndexSet(static_cast<std::size_t>(m));
        e.ranks.resize(static_cast<std::size_t>(m));
        for (auto& r : e.ranks) r = dist(rng);
        entries.push_back(std::move(e));
    }
    return teachdim::build_gvs(std::move(cls), std::move(entries), max_rank);
}

}  // namespace oracle

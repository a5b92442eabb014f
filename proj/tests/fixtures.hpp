#pragma once

// The Warmuth-class preference-function fixtures used across the tests and
// the acceptance suite. Indices are 0-based: h1..h10 -> 0..9, x1..x5 -> 0..4.

#include <vector>

#include "teachdim/hypothesis_class.hpp"
#include "teachdim/preference.hpp"

namespace fixtures {

using teachdim::ClassPtr;
using teachdim::GvsEntry;
using teachdim::IndexSet;
using teachdim::LvsEntry;
using teachdim::PreferenceFunction;
using teachdim::Rank;

inline IndexSet make_set(int m, std::initializer_list<int> elems) {
    IndexSet s(static_cast<std::size_t>(m));
    for (int e : elems) s.insert(static_cast<std::size_t>(e));
    return s;
}

inline std::vector<Rank> zero_except(int m, int hot, Rank hot_value, Rank fill) {
    std::vector<Rank> r(static_cast<std::size_t>(m), fill);
    r[static_cast<std::size_t>(hot)] = hot_value;
    return r;
}

inline PreferenceFunction warmuth_const(ClassPtr cls) { return teachdim::build_const(cls, 0); }

inline PreferenceFunction warmuth_global(ClassPtr cls) {
    return teachdim::build_global(cls, std::vector<Rank>(10, 0));
}

// Listed version spaces per column; everything else defaults to 1.
inline PreferenceFunction warmuth_gvs(ClassPtr cls) {
    const int m = 10;
    const std::vector<std::pair<int, std::vector<int>>> listed = {
        {0, {0, 5}}, {1, {1, 6}}, {2, {2, 7}}, {3, {3, 8}}, {4, {4, 9}},
        {5, {5, 8}}, {6, {6, 9}}, {7, {7, 5}}, {8, {8, 6}}, {9, {9, 7}},
    };
    std::vector<GvsEntry> entries;
    for (const auto& [hot, pair_space] : listed) {
        GvsEntry two;
        two.pattern.required = IndexSet(m);
        for (int e : pair_space) two.pattern.required.insert(static_cast<std::size_t>(e));
        two.pattern.optional = IndexSet(m);
        two.ranks = zero_except(m, hot, 0, 1);
        entries.push_back(std::move(two));

        GvsEntry solo;
        solo.pattern.required = make_set(m, {hot});
        solo.pattern.optional = IndexSet(m);
        solo.ranks = zero_except(m, hot, 0, 1);
        entries.push_back(std::move(solo));
    }
    return teachdim::build_gvs(std::move(cls), std::move(entries), 1);
}

inline PreferenceFunction warmuth_local(ClassPtr cls) {
    return teachdim::build_local_hamming(std::move(cls));
}

// Column patterns {h_i} u subsets of a fixed 4-set, each active from the
// initial hypothesis h1 and from h_i itself.
inline PreferenceFunction warmuth_lvs(ClassPtr cls) {
    const int m = 10;
    const std::vector<std::vector<int>> optional = {
        {4, 5, 7, 9},  // h1:  {h5,h6,h8,h10}
        {0, 5, 6, 8},  // h2:  {h1,h7,h6,h9}
        {1, 6, 7, 9},  // h3:  {h2,h7,h8,h10}
        {2, 5, 7, 8},  // h4:  {h3,h6,h8,h9}
        {3, 6, 8, 9},  // h5:  {h4,h7,h9,h10}
        {0, 3, 4, 8},  // h6:  {h1,h4,h5,h9}
        {0, 1, 4, 9},  // h7:  {h1,h2,h5,h10}
        {0, 1, 2, 5},  // h8:  {h1,h2,h3,h6}
        {1, 2, 3, 6},  // h9:  {h2,h3,h4,h7}
        {2, 3, 4, 7},  // h10: {h3,h4,h5,h8}
    };
    std::vector<LvsEntry> entries;
    for (int col = 0; col < m; ++col) {
        teachdim::VersionSpacePattern pattern;
        pattern.required = make_set(m, {col});
        pattern.optional = IndexSet(m);
        for (int e : optional[static_cast<std::size_t>(col)])
            pattern.optional.insert(static_cast<std::size_t>(e));

        LvsEntry from_h1;
        from_h1.current = 0;
        from_h1.pattern = pattern;
        from_h1.ranks = zero_except(m, col, 0, 1);
        entries.push_back(from_h1);

        if (col != 0) {
            LvsEntry from_self = from_h1;
            from_self.current = col;
            entries.push_back(std::move(from_self));
        }
    }
    return teachdim::build_lvs(std::move(cls), std::move(entries), 1);
}

// Two-instance, three-hypothesis lvs function that uniquely prefers B from
// the initial state but abandons it on a consistent follow-up: the
// collusion-freeness counterexample.
inline PreferenceFunction adversarial_lvs(ClassPtr cls) {
    // Class rows: A=00, B=01, C=11.
    const int m = 3;
    std::vector<LvsEntry> entries;

    LvsEntry initial;  // from A over the full space: B preferred uniquely
    initial.current = 0;
    initial.pattern.required = make_set(m, {0, 1, 2});
    initial.pattern.optional = IndexSet(m);
    initial.ranks = {1, 0, 2};
    entries.push_back(std::move(initial));

    LvsEntry stay;  // from B over the full space: B keeps first place
    stay.current = 1;
    stay.pattern.required = make_set(m, {0, 1, 2});
    stay.pattern.optional = IndexSet(m);
    stay.ranks = {1, 0, 2};
    entries.push_back(std::move(stay));

    LvsEntry betray;  // from B over {A,B}: B ranked worst
    betray.current = 1;
    betray.pattern.required = make_set(m, {0, 1});
    betray.pattern.optional = IndexSet(m);
    betray.ranks = {0, 5, 1};
    entries.push_back(std::move(betray));

    return teachdim::build_lvs(std::move(cls), std::move(entries), 1);
}

inline ClassPtr adversarial_class() {
    return std::make_shared<teachdim::HypothesisClass>(
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
}

}  // namespace fixtures

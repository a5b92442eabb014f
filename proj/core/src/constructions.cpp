#include "teachdim/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "teachdim/version_spaces.hpp"

namespace teachdim {

int PreferenceTree::depth() const {
    int best = 0;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        int d = 0;
        for (int u = static_cast<int>(v); parent[u] >= 0; u = parent[u]) ++d;
        best = std::max(best, d);
    }
    return best;
}

bool PreferenceTree::covers(int m) const {
    if (static_cast<int>(parent.size()) != m) return false;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    // Every node reachable from the root exactly once through parent links.
    for (int v = 0; v < m; ++v) {
        int u = v;
        int hops = 0;
        while (parent[u] >= 0 && hops <= m) {
            u = parent[u];
            ++hops;
        }
        if (u != root || hops > m) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; });
}

TeachingSequence PreferenceTree::path_sequence(int node) const {
    TeachingSequence seq;
    for (int u = node; parent[u] >= 0; u = parent[u]) seq.push_back(edge[u]);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

PreferenceFunction tree_to_local_sigma(ClassPtr cls, const PreferenceTree& tree) {
    const int m = cls->hypothesis_count();
    if (!tree.covers(m)) throw InputError("preference tree does not cover the class");
    if (tree.depth() > tree.depth_bound) throw InputError("preference tree exceeds its depth bound");
    for (int v = 0; v < m; ++v) {
        if (v == tree.root) continue;
        cls->check_example(tree.edge[v]);
        if (cls->label(v, tree.edge[v].instance) != tree.edge[v].label)
            throw InputError("tree edge example is inconsistent with its node");
    }

    std::vector<std::vector<Rank>> matrix(static_cast<std::size_t>(m),
                                          std::vector<Rank>(static_cast<std::size_t>(m), m - 1));
    for (int h = 0; h < m; ++h) {
        matrix[h][h] = 0;
        Rank r = 1;
        for (int child : tree.children[h]) matrix[h][child] = r++;
    }
    return build_local_table(std::move(cls), std::move(matrix));
}

namespace {

// ------------------------------------------------------------------
// The powerset-7 tree: published left branch plus a solved completion.
// ------------------------------------------------------------------

constexpr int kSeven = 7;

int bit_of(int v, int x) { return (v >> (kSeven - 1 - x)) & 1; }

int index_of_bits(std::initializer_list<int> ones) {
    int v = 0;
    for (int x : ones) v |= 1 << (kSeven - 1 - x);
    return v;
}

struct TreeBuilder {
    PreferenceTree tree;

    TreeBuilder() {
        tree.root = 0;
        tree.children.resize(128);
        tree.parent.assign(128, -1);
        tree.edge.resize(128);
        tree.depth_bound = 3;
    }

    void add(int parent, int child, int x, int y) {
        tree.children[parent].push_back(child);
        tree.parent[child] = parent;
        tree.edge[child] = LabeledExample{x, y};
    }
};

// Sibling lists need an order where no earlier sibling survives a later
// sibling's edge example. Returns the order, or nullopt on a cycle.
std::optional<std::vector<int>> sibling_order(const std::vector<int>& nodes,
                                              const std::vector<LabeledExample>& edges) {
    const std::size_t k = nodes.size();
    // must_precede[a][b]: node a has to appear before node b.
    std::vector<std::vector<char>> must_precede(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            // If b survives a's edge, a must be taught first (b listed later).
            if (bit_of(nodes[b], edges[a].instance) == edges[a].label) must_precede[a][b] = 1;
        }
    std::vector<int> order;
    std::vector<char> placed(k, 0);
    for (std::size_t step = 0; step < k; ++step) {
        int pick = -1;
        for (std::size_t a = 0; a < k && pick < 0; ++a) {
            if (placed[a]) continue;
            bool ready = true;
            for (std::size_t b = 0; b < k; ++b)
                if (!placed[b] && b != a && must_precede[b][a]) ready = false;
            if (ready) pick = static_cast<int>(a);
        }
        if (pick < 0) return std::nullopt;
        placed[static_cast<std::size_t>(pick)] = 1;
        order.push_back(nodes[static_cast<std::size_t>(pick)]);
    }
    return order;
}

// Completion solver: places every unpinned hypothesis as a depth-2 or
// depth-3 node of one of the six unpinned root branches, keeping each
// teaching path unique-by-rank. Deterministic backtracking, most
// constrained vector first.
class CompletionSolver {
public:
    CompletionSolver(TreeBuilder& builder, const std::vector<int>& branch_roots)
        : b_(builder), roots_(branch_roots) {
        for (int v = 0; v < 128; ++v)
            if (b_.tree.parent[v] < 0 && v != b_.tree.root) remaining_.push_back(v);
    }

    bool run() { return place_next(); }

private:
    struct Placement {
        int parent;
        int x;
        int y;
    };

    std::vector<Placement> feasible(int v) const {
        std::vector<Placement> out;
        // Depth 2: child of a branch root e_i via (x_j, 1).
        for (int root : roots_) {
            const int i = branch_instance(root);
            if (!bit_of(v, i)) continue;
            for (int j = 0; j < kSeven; ++j) {
                if (j == i || !bit_of(v, j)) continue;
                if (edge_used(root, j)) continue;
                out.push_back(Placement{root, j, 1});
            }
        }
        // Depth 3: child of an already placed depth-2 node.
        for (int root : roots_) {
            const int i = branch_instance(root);
            for (int d : b_.tree.children[root]) {
                const int j = b_.tree.edge[d].instance;
                if (!bit_of(v, i) || !bit_of(v, j)) continue;
                for (int l = 0; l < kSeven; ++l) {
                    if (l == i || l == j) continue;
                    const int y = 1 - bit_of(d, l);
                    if (bit_of(v, l) != y) continue;
                    if (edge_used(d, l)) continue;
                    out.push_back(Placement{d, l, y});
                }
            }
        }
        return out;
    }

    bool edge_used(int parent, int x) const {
        for (int c : b_.tree.children[parent])
            if (b_.tree.edge[c].instance == x) return true;
        return false;
    }

    static int branch_instance(int root) {
        for (int x = 0; x < kSeven; ++x)
            if (bit_of(root, x)) return x;
        return -1;
    }

    bool siblings_orderable(int parent) const {
        std::vector<LabeledExample> edges;
        for (int c : b_.tree.children[parent]) edges.push_back(b_.tree.edge[c]);
        return sibling_order(b_.tree.children[parent], edges).has_value();
    }

    bool place_next() {
        if (remaining_.empty()) return true;
        // Most constrained vector first.
        std::size_t pick = 0;
        std::size_t best_count = SIZE_MAX;
        for (std::size_t i = 0; i < remaining_.size(); ++i) {
            const std::size_t count = feasible(remaining_[i]).size();
            if (count < best_count) {
                best_count = count;
                pick = i;
            }
        }
        if (best_count == 0) return false;

        const int v = remaining_[pick];
        remaining_.erase(remaining_.begin() + static_cast<std::ptrdiff_t>(pick));
        for (const Placement& p : feasible(v)) {
            b_.add(p.parent, v, p.x, p.y);
            if (siblings_orderable(p.parent) && place_next()) return true;
            b_.tree.children[p.parent].pop_back();
            b_.tree.parent[v] = -1;
        }
        remaining_.insert(remaining_.begin() + static_cast<std::ptrdiff_t>(pick), v);
        return false;
    }

    TreeBuilder& b_;
    std::vector<int> roots_;
    std::vector<int> remaining_;
};

}  // namespace

PreferenceTree powerset7_tree() {
    TreeBuilder b;

    // Published left branch: the chain child and its full subtree.
    const int h1 = index_of_bits({0});
    const int h8 = index_of_bits({0, 1});
    const int h9 = index_of_bits({0, 1, 2});
    const int h10 = index_of_bits({0, 1, 2, 3});
    const int h11 = index_of_bits({0, 1, 2, 3, 4});
    const int h12 = index_of_bits({0, 1, 2, 3, 4, 5});
    const int h13 = index_of_bits({0, 1, 2, 3, 4, 5, 6});
    b.add(0, h1, 0, 1);
    b.add(h1, h8, 1, 1);
    b.add(h1, h9, 2, 1);
    b.add(h1, h10, 3, 1);
    b.add(h1, h11, 4, 1);
    b.add(h1, h12, 5, 1);
    b.add(h1, h13, 6, 1);

    const int h44 = index_of_bits({0, 1, 3});
    const int h45 = index_of_bits({0, 1, 3, 4});
    const int h46 = index_of_bits({0, 1, 2, 4});
    const int h47 = index_of_bits({0, 1, 5});
    const int h48 = index_of_bits({0, 1, 4, 6});
    b.add(h8, h44, 3, 1);
    b.add(h8, h45, 4, 1);
    b.add(h8, h46, 2, 1);
    b.add(h8, h47, 5, 1);
    b.add(h8, h48, 6, 1);

    const int h79 = index_of_bits({0, 2});
    const int h80 = index_of_bits({0, 2, 4});
    const int h81 = index_of_bits({0, 2, 4, 5});
    const int h82 = index_of_bits({0, 1, 2, 3, 5});
    const int h83 = index_of_bits({0, 2, 3, 4, 6});
    b.add(h9, h79, 1, 0);
    b.add(h9, h80, 4, 1);
    b.add(h9, h81, 5, 1);
    b.add(h9, h82, 3, 1);
    b.add(h9, h83, 6, 1);

    const int h114 = index_of_bits({0, 3});
    const int h115 = index_of_bits({0, 3, 4});
    b.add(h10, h114, 1, 0);
    b.add(h10, h115, 4, 1);

    // Remaining root children: single-instance hypotheses, one per branch.
    std::vector<int> branch_roots;
    for (int i = 1; i < kSeven; ++i) {
        const int c = index_of_bits({i});
        b.add(0, c, i, 1);
        branch_roots.push_back(c);
    }

    CompletionSolver solver(b, branch_roots);
    if (!solver.run()) throw DomainError("powerset-7 completion failed");

    // Normalize child orders of the completed branches; pinned orders are
    // already valid as published.
    std::vector<char> pinned(128, 0);
    for (int v : {0, h1, h8, h9, h10}) pinned[v] = 1;
    for (int p = 0; p < 128; ++p) {
        if (pinned[p] || b.tree.children[p].empty()) continue;
        std::vector<LabeledExample> edges;
        for (int c : b.tree.children[p]) edges.push_back(b.tree.edge[c]);
        auto order = sibling_order(b.tree.children[p], edges);
        if (!order) throw DomainError("powerset-7 sibling ordering failed");
        b.tree.children[p] = *order;
    }

    b.tree.names = {{"h0", 0},     {"h1", h1},   {"h8", h8},   {"h9", h9},   {"h10", h10},
                    {"h11", h11},  {"h12", h12}, {"h13", h13}, {"h44", h44}, {"h45", h45},
                    {"h46", h46},  {"h47", h47}, {"h48", h48}, {"h79", h79}, {"h80", h80},
                    {"h81", h81},  {"h82", h82}, {"h83", h83}, {"h114", h114},
                    {"h115", h115}};
    return b.tree;
}

// ------------------------------------------------------------------
// Doubling and disjoint-union compositions.
// ------------------------------------------------------------------

namespace {

// Normalization required by the doubling step: self-rank zero, other ranks
// in (0, m-1].
void check_doubling_normalization(const HypothesisClass& cls,
                                  const std::vector<std::vector<Rank>>& rows) {
    const int m = cls.hypothesis_count();
    for (int h = 0; h < m; ++h) {
        if (rows[h][h] != 0) throw InputError("doubling input must rank itself 0");
        for (int hp = 0; hp < m; ++hp) {
            if (hp == h) continue;
            if (rows[h][hp] <= 0 || rows[h][hp] > m - 1)
                throw InputError("doubling input ranks must lie in (0, m-1]");
        }
    }
}

}  // namespace

PreferenceFunction double_sigma(const PreferenceFunction& sigma_k, const Budget& budget) {
    const ClassPtr& small = sigma_k.bound_class();
    const int mk = small->hypothesis_count();
    const int k = small->instance_count();
    if (mk != (1 << k)) throw InputError("doubling expects a powerset class");
    {
        ClassPtr canonical = powerset_class(k);
        if (canonical->matrix_hash() != small->matrix_hash())
            throw InputError("doubling expects the binary-ordered powerset class");
    }
    if (sigma_k.family() != PrefFamily::kLocal)
        throw InputError("doubling expects a local-family preference function");

    // Materialize the input's rank rows (the local family ignores H).
    const VersionSpace small_full = small->full_set();
    std::vector<std::vector<Rank>> rows;
    rows.reserve(static_cast<std::size_t>(mk));
    for (int h = 0; h < mk; ++h) rows.push_back(sigma_k.rank_vector(small_full, h));
    check_doubling_normalization(*small, rows);
    {
        FamilyVerdict wsls = check_family(sigma_k, FamilyCheck::kWsls, *small, budget);
        if (!wsls.holds) throw InputError("doubling input is not win-stay lose-shift: " + wsls.detail);
    }

    ClassPtr big = powerset_class(2 * k);
    const int mbig = big->hypothesis_count();

    auto first_half = [&](int v) { return v >> k; };
    auto second_half = [&](int v) { return v & ((1 << k) - 1); };
    auto is_pivot = [&](int v) { return second_half(v) == 0; };

    std::vector<std::vector<Rank>> out(static_cast<std::size_t>(mbig),
                                       std::vector<Rank>(static_cast<std::size_t>(mbig), mbig - 1));
    for (int h = 0; h < mbig; ++h) out[h][h] = 0;

    for (int h = 0; h < mbig; ++h) {
        for (int hp = 0; hp < mbig; ++hp) {
            if (h == hp) continue;
            if (is_pivot(h) && is_pivot(hp)) {
                // Coarse navigation between pivots follows the small sigma
                // on the first k instances.
                out[h][hp] = rows[first_half(h)][first_half(hp)];
            } else if (first_half(h) == first_half(hp)) {
                // Fine navigation within a pivot's group follows the small
                // sigma on the last k instances, offset past every pivot
                // rank.
                out[h][hp] = rows[second_half(h)][second_half(hp)] + mk;
            }
        }
    }
    return build_local_table(std::move(big), std::move(out));
}

PreferenceFunction wsls_disjoint_union_sigma(PrefPtr sigma_a, PrefPtr sigma_b,
                                             const Budget& budget) {
    const ClassPtr& cls_a = sigma_a->bound_class();
    const ClassPtr& cls_b = sigma_b->bound_class();
    {
        FamilyVerdict wa = check_family(*sigma_a, FamilyCheck::kWsls, *cls_a, budget);
        if (!wa.holds)
            throw InputError("left operand is not win-stay lose-shift: " + wa.detail);
        FamilyVerdict wb = check_family(*sigma_b, FamilyCheck::kWsls, *cls_b, budget);
        if (!wb.holds)
            throw InputError("right operand is not win-stay lose-shift: " + wb.detail);
    }
    ClassPtr union_cls = disjoint_union(*cls_a, *cls_b);
    return build_additive_composite(std::move(union_cls), std::move(sigma_a), std::move(sigma_b));
}

PreferenceFunction order_to_global_sigma(ClassPtr cls, std::vector<Rank> ranks) {
    return build_global(std::move(cls), std::move(ranks));
}

PreferenceFunction materialize_lvs(const PreferenceFunction& sigma, const Budget& budget) {
    const ClassPtr& cls = sigma.bound_class();
    const int m = cls->hypothesis_count();
    const auto spaces = enumerate_version_spaces(*cls, budget);

    BudgetMeter meter(budget, "lvs materialization");
    std::vector<LvsEntry> entries;
    for (int h = 0; h < m; ++h) {
        for (const auto& H : spaces) {
            meter.charge();
            LvsEntry e;
            e.current = h;
            e.pattern.required = H;
            e.pattern.optional = IndexSet(static_cast<std::size_t>(m));
            e.ranks = sigma.rank_vector(H, h);
            entries.push_back(std::move(e));
        }
    }
    return build_lvs(cls, std::move(entries), sigma.default_rank());
}

}  // namespace teachdim

#include "teachdim/hypothesis_class.hpp"

#include <algorithm>
#include <set>

namespace teachdim {

HypothesisClass::HypothesisClass(std::vector<std::vector<int>> rows,
                                 std::vector<std::string> instance_names,
                                 std::vector<std::string> hypothesis_names,
                                 std::size_t max_hypotheses)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("hypothesis class needs at least one hypothesis");
    if (rows_.size() > max_hypotheses)
        throw ResourceError("hypothesis class too large: m = " + std::to_string(rows_.size()),
                            max_hypotheses);
    m_ = static_cast<int>(rows_.size());
    n_ = static_cast<int>(rows_[0].size());
    if (n_ == 0) throw InputError("hypothesis class needs at least one instance");

    std::set<std::vector<int>> seen;
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != n_)
            throw InputError("all hypotheses must have exactly " + std::to_string(n_) + " labels");
        for (int b : row)
            if (b != 0 && b != 1) throw InputError("labels must be bits");
        if (!seen.insert(row).second) throw InputError("duplicate hypothesis row");
    }

    masks_.assign(static_cast<std::size_t>(n_) * 2, IndexSet(static_cast<std::size_t>(m_)));
    for (int h = 0; h < m_; ++h)
        for (int x = 0; x < n_; ++x)
            masks_[static_cast<std::size_t>(x) * 2 + rows_[h][x]].insert(static_cast<std::size_t>(h));

    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto mix = [&hash](std::uint64_t v) {
        hash ^= v;
        hash *= 0x100000001b3ull;
    };
    mix(static_cast<std::uint64_t>(m_));
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& row : rows_)
        for (int b : row) mix(static_cast<std::uint64_t>(b) + 1);
    matrix_hash_ = hash;

    if (instance_names.empty()) {
        instance_names_.reserve(n_);
        for (int x = 0; x < n_; ++x) instance_names_.push_back("x" + std::to_string(x));
    } else {
        if (static_cast<int>(instance_names.size()) != n_)
            throw InputError("instance-names arity mismatch");
        instance_names_ = std::move(instance_names);
    }
    if (hypothesis_names.empty()) {
        hypothesis_names_.reserve(m_);
        for (int h = 0; h < m_; ++h) hypothesis_names_.push_back("h" + std::to_string(h));
    } else {
        if (static_cast<int>(hypothesis_names.size()) != m_)
            throw InputError("hypothesis-names arity mismatch");
        hypothesis_names_ = std::move(hypothesis_names);
    }
}

int HypothesisClass::find_instance(const std::string& name) const {
    auto it = std::find(instance_names_.begin(), instance_names_.end(), name);
    return it == instance_names_.end() ? -1 : static_cast<int>(it - instance_names_.begin());
}

int HypothesisClass::find_hypothesis(const std::string& name) const {
    auto it = std::find(hypothesis_names_.begin(), hypothesis_names_.end(), name);
    return it == hypothesis_names_.end() ? -1 : static_cast<int>(it - hypothesis_names_.begin());
}

bool consistent(int hypothesis, const HypothesisClass& cls, const std::vector<LabeledExample>& Z) {
    cls.check_hypothesis(hypothesis);
    for (const auto& z : Z) {
        cls.check_example(z);
        if (cls.label(hypothesis, z.instance) != z.label) return false;
    }
    return true;
}

VersionSpace version_space(const HypothesisClass& cls, const std::vector<LabeledExample>& Z) {
    VersionSpace vs = cls.full_set();
    for (const auto& z : Z) {
        cls.check_example(z);
        vs &= cls.consistent_mask(z.instance, z.label);
    }
    return vs;
}

int hamming(const HypothesisClass& cls, int h, int h_prime) {
    cls.check_hypothesis(h);
    cls.check_hypothesis(h_prime);
    int d = 0;
    for (int x = 0; x < cls.instance_count(); ++x)
        if (cls.label(h, x) != cls.label(h_prime, x)) ++d;
    return d;
}

ClassPtr powerset_class(int k, int max_k) {
    if (k < 1) throw InputError("powerset class needs k >= 1");
    if (k > max_k)
        throw ResourceError("powerset class k = " + std::to_string(k) + " exceeds cap",
                            static_cast<std::size_t>(max_k));
    const int m = 1 << k;
    std::vector<std::vector<int>> rows(m, std::vector<int>(k, 0));
    std::vector<std::string> hyp_names(m);
    for (int i = 0; i < m; ++i) {
        std::string bits(k, '0');
        for (int x = 0; x < k; ++x) {
            // Most-significant bit is instance 0.
            rows[i][x] = (i >> (k - 1 - x)) & 1;
            bits[x] = static_cast<char>('0' + rows[i][x]);
        }
        hyp_names[i] = bits;
    }
    return std::make_shared<HypothesisClass>(std::move(rows), std::vector<std::string>{},
                                             std::move(hyp_names));
}

ClassPtr warmuth_class() {
    const std::vector<std::string> bits = {"11000", "01100", "00110", "00011", "10001",
                                           "11010", "01101", "10110", "01011", "10101"};
    std::vector<std::vector<int>> rows;
    std::vector<std::string> hyp_names;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::vector<int> row;
        for (char c : bits[i]) row.push_back(c - '0');
        rows.push_back(std::move(row));
        hyp_names.push_back("h" + std::to_string(i + 1));
    }
    return std::make_shared<HypothesisClass>(
        std::move(rows), std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"},
        std::move(hyp_names));
}

ClassPtr disjoint_union(const HypothesisClass& a, const HypothesisClass& b,
                        std::size_t max_hypotheses) {
    const int na = a.instance_count(), nb = b.instance_count();
    const int ma = a.hypothesis_count(), mb = b.hypothesis_count();
    if (static_cast<std::size_t>(ma) * static_cast<std::size_t>(mb) > max_hypotheses)
        throw ResourceError("disjoint union too large", max_hypotheses);

    std::vector<std::vector<int>> rows;
    std::vector<std::string> hyp_names;
    rows.reserve(static_cast<std::size_t>(ma) * mb);
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            std::vector<int> row(static_cast<std::size_t>(na + nb));
            for (int x = 0; x < na; ++x) row[x] = a.label(i, x);
            for (int x = 0; x < nb; ++x) row[na + x] = b.label(j, x);
            rows.push_back(std::move(row));
            hyp_names.push_back(a.hypothesis_name(i) + "+" + b.hypothesis_name(j));
        }
    }
    std::vector<std::string> inst_names;
    for (int x = 0; x < na; ++x) inst_names.push_back("a." + a.instance_name(x));
    for (int x = 0; x < nb; ++x) inst_names.push_back("b." + b.instance_name(x));
    return std::make_shared<HypothesisClass>(std::move(rows), std::move(inst_names),
                                             std::move(hyp_names), max_hypotheses);
}

}  // namespace teachdim

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace teachdim {

// Set of hypothesis indices over a fixed universe [0, size), packed into
// 64-bit words. This is the representation behind version spaces and all
// engine state, so the operations here are the hot path of the whole
// workbench.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::size_t universe_size)
        : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

    static IndexSet full(std::size_t universe_size) {
        IndexSet s(universe_size);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static IndexSet singleton(std::size_t universe_size, std::size_t i) {
        IndexSet s(universe_size);
        s.insert(i);
        return s;
    }

    std::size_t universe_size() const { return size_; }

    bool contains(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool is_singleton() const { return count() == 1; }

    // Lowest element; only meaningful on a nonempty set.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }

    bool is_subset_of(const IndexSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    IndexSet& operator&=(const IndexSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    IndexSet& operator|=(const IndexSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    // Set difference: elements of *this not in other.
    IndexSet& operator-=(const IndexSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool intersects(const IndexSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    bool operator==(const IndexSet& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const IndexSet& other) const { return !(*this == other); }

    // Calls f(i) for every element in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h ^ size_);
    }

private:
    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace teachdim

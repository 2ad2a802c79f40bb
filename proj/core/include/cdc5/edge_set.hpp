// Copyright 2026 The cdc5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CDC5_EDGE_SET_HPP
#define CDC5_EDGE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace cdc5 {

/**
 * Fixed-length GF(2) vector indexed by edge identifier.
 *
 * Every edge subset in the library (even subgraphs, circuits, matchings,
 * cover elements) is an EdgeSet whose length equals the host edge count.
 * Binary operators require equal lengths; mixing hosts is a logic error and
 * is caught by assertions in debug builds.
 */
class EdgeSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    EdgeSet() = default;
    explicit EdgeSet(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    static EdgeSet from_ids(std::size_t size, std::span<const int> ids);
    static EdgeSet from_ids(std::size_t size, std::initializer_list<int> ids) {
        return from_ids(size, std::span<const int>(ids.begin(), ids.size()));
    }
    static EdgeSet full(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept {
        const Word mask = Word{1} << (i % word_bits);
        if (value)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
    }
    void reset(std::size_t i) noexcept { set(i, false); }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

    EdgeSet& operator^=(const EdgeSet& o) noexcept;
    EdgeSet& operator&=(const EdgeSet& o) noexcept;
    EdgeSet& operator|=(const EdgeSet& o) noexcept;
    /// Set difference.
    EdgeSet& operator-=(const EdgeSet& o) noexcept;

    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) noexcept { return a ^= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) noexcept { return a &= b; }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) noexcept { return a |= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) noexcept { return a -= b; }

    EdgeSet complement() const;
    bool is_subset_of(const EdgeSet& o) const noexcept;
    bool intersects(const EdgeSet& o) const noexcept;
    std::size_t intersection_count(const EdgeSet& o) const noexcept;

    /// Member identifiers in ascending order.
    std::vector<int> ids() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<int>(w * word_bits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Lexicographic order on ascending member lists: {0,1,2} < {0,1,3} < {0,2}.
bool lex_less(const EdgeSet& a, const EdgeSet& b) noexcept;

/// Order by cardinality, then lex_less.
bool card_lex_less(const EdgeSet& a, const EdgeSet& b) noexcept;

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(s.size());
        for (EdgeSet::Word w : s.words()) h ^= std::hash<EdgeSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace cdc5

#endif  // CDC5_EDGE_SET_HPP

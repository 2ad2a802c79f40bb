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

#include "cdc5/edge_set.hpp"

#include <cassert>

namespace cdc5 {

EdgeSet EdgeSet::from_ids(std::size_t size, std::span<const int> ids) {
    EdgeSet s(size);
    for (int id : ids) {
        assert(id >= 0 && static_cast<std::size_t>(id) < size);
        s.set(static_cast<std::size_t>(id));
    }
    return s;
}

EdgeSet EdgeSet::full(std::size_t size) {
    EdgeSet s(size);
    return s.complement();
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

EdgeSet EdgeSet::complement() const {
    EdgeSet r = *this;
    for (Word& w : r.words_) w = ~w;
    if (const std::size_t tail = size_ % word_bits; tail != 0 && !r.words_.empty())
        r.words_.back() &= (Word{1} << tail) - 1;
    return r;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool EdgeSet::intersects(const EdgeSet& o) const noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::size_t EdgeSet::intersection_count(const EdgeSet& o) const noexcept {
    assert(size_ == o.size_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
}

std::vector<int> EdgeSet::ids() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
}

bool lex_less(const EdgeSet& a, const EdgeSet& b) noexcept {
    assert(a.size() == b.size());
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        const EdgeSet::Word diff = wa[i] ^ wb[i];
        if (diff == 0) continue;
        // Member lists agree below the lowest differing bit. The side owning
        // that bit is smaller unless the other side has no further members.
        const int bit = std::countr_zero(diff);
        const bool a_has = (wa[i] >> bit) & 1u;
        const EdgeSet& other = a_has ? b : a;
        const auto wo = other.words();
        bool other_continues = bit < 63 && (wo[i] >> (bit + 1)) != 0;
        for (std::size_t j = i + 1; !other_continues && j < wo.size(); ++j) other_continues = wo[j] != 0;
        return a_has ? other_continues : !other_continues;
    }
    return false;
}

bool card_lex_less(const EdgeSet& a, const EdgeSet& b) noexcept {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

}  // namespace cdc5

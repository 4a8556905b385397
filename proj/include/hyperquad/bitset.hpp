#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperquad {

/// Fixed-size bit vector; the adjacency-row workhorse.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// popcount of the intersection with another bitset of the same size.
    std::size_t count_and(const Bitset& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool operator==(const Bitset&) const = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hyperquad

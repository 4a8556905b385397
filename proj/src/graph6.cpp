#include "hyperquad/graph6.hpp"

#include <stdexcept>

namespace hyperquad {

namespace {

constexpr std::size_t kMaxVertices = 258047;

std::size_t body_chars(std::size_t v) {
    return (v * (v - 1) / 2 + 5) / 6;
}

} // namespace

std::string graph6_encode(const std::vector<Bitset>& adjacency) {
    const std::size_t v = adjacency.size();
    if (v > kMaxVertices)
        throw std::invalid_argument("graph6 encoding supports at most 258047 vertices");
    for (std::size_t i = 0; i < v; ++i)
        if (adjacency[i].test(i))
            throw std::invalid_argument("graph6 encoding needs an irreflexive graph");

    std::string out;
    if (v <= 62) {
        out.push_back(static_cast<char>(v + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((v >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((v >> 6) & 63) + 63));
        out.push_back(static_cast<char>((v & 63) + 63));
    }

    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    int group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < v; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (adjacency[i].test(j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Bitset> graph6_decode(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty graph6 text");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 character out of range");

    std::size_t v = 0;
    std::size_t pos = 0;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126)
            throw std::invalid_argument("graph6 input exceeds the supported vertex range");
        if (text.size() < 4)
            throw std::invalid_argument("truncated graph6 vertex count");
        v = (static_cast<std::size_t>(text[1] - 63) << 12) |
            (static_cast<std::size_t>(text[2] - 63) << 6) |
            static_cast<std::size_t>(text[3] - 63);
        pos = 4;
    } else {
        v = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    }
    if (v > kMaxVertices)
        throw std::invalid_argument("graph6 input exceeds the supported vertex range");
    if (text.size() - pos != body_chars(v))
        throw std::invalid_argument("graph6 body has the wrong length");

    std::vector<Bitset> adjacency(v, Bitset(v));
    std::size_t bit_index = 0;
    for (std::size_t j = 1; j < v; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const char c = text[pos + bit_index / 6];
            const int bit = ((c - 63) >> (5 - bit_index % 6)) & 1;
            if (bit) {
                adjacency[i].set(j);
                adjacency[j].set(i);
            }
            ++bit_index;
        }
    // Trailing padding bits must be zero.
    if (bit_index % 6 != 0) {
        const char c = text[pos + bit_index / 6];
        const int pad_mask = (1 << (6 - bit_index % 6)) - 1;
        if ((c - 63) & pad_mask)
            throw std::invalid_argument("graph6 padding bits must be zero");
    }
    return adjacency;
}

} // namespace hyperquad

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

// Largest vertex count the codec accepts; L_23 = 253 bits fits four words.
inline constexpr int kMaxVertices = 23;

constexpr int pair_count(int n_vertices) { return n_vertices * (n_vertices - 1) / 2; }

// Position of edge {v, vp} (1-based vertices, vp < v) in the column-wise
// lower-triangular order (2,1)..(N,1),(3,2)..(N,2),..,(N,N-1).
int edge_index(int v, int vp, int n_vertices);

// An N-vertex graph packed into an L_N-bit string: bit edge_index(v,vp,N)
// is set iff edge {v,vp} is present.
class GraphBits {
public:
    explicit GraphBits(int n_vertices);               // empty graph
    GraphBits(int n_vertices, uint64_t low_word);     // requires L_N <= 64

    int n_vertices() const { return n_vertices_; }
    int n_bits() const { return pair_count(n_vertices_); }

    bool test(int pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1u; }
    void set(int pos, bool value);

    bool edge(int v, int vp) const { return test(edge_index(v, vp, n_vertices_)); }
    void set_edge(int v, int vp, bool present) { set(edge_index(v, vp, n_vertices_), present); }

    int popcount() const;
    GraphBits complement() const;  // every bit flipped

    uint64_t low_word() const { return words_[0]; }
    const std::array<uint64_t, 4>& words() const { return words_; }

    std::string bit_string() const;  // "0110..." in edge-index order

    bool operator==(const GraphBits&) const = default;
    bool operator<(const GraphBits& o) const;

private:
    int n_vertices_;
    std::array<uint64_t, 4> words_{};
};

// Codec between GraphBits and symmetric 0/1 adjacency matrices (1-based
// vertices map to rows/cols 0..N-1).
GraphBits bits_from_adjacency(const std::vector<std::vector<int>>& adj);
std::vector<std::vector<int>> adjacency_from_bits(const GraphBits& g);

GraphBits graph_from_bit_string(int n_vertices, const std::string& bits);

}  // namespace ramsey

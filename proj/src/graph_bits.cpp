#include "ramsey/graph_bits.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

void check_vertex_count(int n_vertices) {
    if (n_vertices < 2 || n_vertices > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n_vertices) +
                                    " outside [2, " + std::to_string(kMaxVertices) + "]");
}

}  // namespace

int edge_index(int v, int vp, int n_vertices) {
    check_vertex_count(n_vertices);
    if (vp < 1 || v <= vp || v > n_vertices)
        throw std::invalid_argument("edge_index requires 1 <= vp < v <= N, got (" +
                                    std::to_string(v) + "," + std::to_string(vp) + ")");
    // column vp starts after the full columns 1..vp-1 of heights N-1, N-2, ...
    int offset = 0;
    for (int c = 1; c < vp; ++c) offset += n_vertices - c;
    return offset + (v - vp - 1);
}

GraphBits::GraphBits(int n_vertices) : n_vertices_(n_vertices) {
    check_vertex_count(n_vertices);
}

GraphBits::GraphBits(int n_vertices, uint64_t low_word) : GraphBits(n_vertices) {
    if (n_bits() > 64) throw std::invalid_argument("low-word constructor needs L_N <= 64");
    if (n_bits() < 64 && (low_word >> n_bits()) != 0)
        throw std::invalid_argument("bits set beyond L_N");
    words_[0] = low_word;
}

void GraphBits::set(int pos, bool value) {
    if (pos < 0 || pos >= n_bits()) throw std::out_of_range("bit position out of range");
    const uint64_t mask = uint64_t{1} << (pos & 63);
    if (value)
        words_[pos >> 6] |= mask;
    else
        words_[pos >> 6] &= ~mask;
}

int GraphBits::popcount() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

GraphBits GraphBits::complement() const {
    GraphBits out(n_vertices_);
    const int lb = n_bits();
    for (int i = 0; i < 4; ++i) out.words_[i] = ~words_[i];
    // clear the slack above L_N
    for (int pos = lb; pos < 256; ++pos) out.words_[pos >> 6] &= ~(uint64_t{1} << (pos & 63));
    return out;
}

std::string GraphBits::bit_string() const {
    std::string s(n_bits(), '0');
    for (int i = 0; i < n_bits(); ++i)
        if (test(i)) s[i] = '1';
    return s;
}

bool GraphBits::operator<(const GraphBits& o) const {
    if (n_vertices_ != o.n_vertices_) return n_vertices_ < o.n_vertices_;
    for (int i = 3; i >= 0; --i)
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
}

GraphBits bits_from_adjacency(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    check_vertex_count(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(adj[i].size()) != n)
            throw std::invalid_argument("adjacency matrix not square");
        if (adj[i][i] != 0) throw std::invalid_argument("adjacency diagonal must be zero");
        for (int j = 0; j < n; ++j) {
            if (adj[i][j] != 0 && adj[i][j] != 1)
                throw std::invalid_argument("adjacency entries must be 0/1");
            if (adj[i][j] != adj[j][i]) throw std::invalid_argument("adjacency matrix not symmetric");
        }
    }
    GraphBits g(n);
    for (int v = 2; v <= n; ++v)
        for (int vp = 1; vp < v; ++vp)
            g.set(edge_index(v, vp, n), adj[v - 1][vp - 1] != 0);
    return g;
}

std::vector<std::vector<int>> adjacency_from_bits(const GraphBits& g) {
    const int n = g.n_vertices();
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (int v = 2; v <= n; ++v)
        for (int vp = 1; vp < v; ++vp)
            adj[v - 1][vp - 1] = adj[vp - 1][v - 1] = g.edge(v, vp) ? 1 : 0;
    return adj;
}

GraphBits graph_from_bit_string(int n_vertices, const std::string& bits) {
    GraphBits g(n_vertices);
    if (static_cast<int>(bits.size()) != g.n_bits())
        throw std::invalid_argument("bit string length " + std::to_string(bits.size()) +
                                    " != L_N = " + std::to_string(g.n_bits()));
    for (int i = 0; i < g.n_bits(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bit string must be 0/1");
        g.set(i, bits[i] == '1');
    }
    return g;
}

}  // namespace ramsey

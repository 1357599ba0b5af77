#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mrr {

inline constexpr int kMaxGraphVertices = 1024;

// Simple undirected graph on vertices 0..n-1 as a square bitset adjacency
// matrix. Symmetric, loop-free. Built once, then treated as immutable.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }

    bool adj(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);

    int degree(int v) const;
    long edge_count() const;

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * stride_; }
    int row_words() const { return stride_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

// Cartesian product; vertex (u, v) of g1 x g2 is encoded as u * g2.n() + v.
// Cayley-graph identifications elsewhere depend on this row-major encoding.
Graph cartesian_product(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// perm[v] = new label of vertex v.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// graph6 (standard ASCII encoding, bit-exact) and a plain edge-list format:
// first line "n", then one "u v" pair per line, 0-based.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& s);

// Small named graphs used all over the test and verification corpus.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

} // namespace mrr

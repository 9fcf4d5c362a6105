#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphwalk {

/// Undirected, unweighted, simple, connected graph.
/// Immutable after construction; safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<int> degree;
    int d_max = 0;

    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;
    const std::vector<int>& neighbors(int i) const { return adj[i]; }
};

/// Builds a Graph from an edge list, enforcing all invariants.
/// Throws std::invalid_argument on self-loops, duplicate edges or
/// out-of-range endpoints, and on disconnected input.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// 4-connected rows x cols lattice; vertex (r,c) has index r*cols + c.
Graph grid_graph(int rows, int cols);

/// G(n,p): each unordered pair is an edge independently with probability p.
/// Disconnected draws are discarded and a fresh seed-derived stream is used;
/// throws std::runtime_error after 10000 consecutive disconnected draws.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Preferential attachment: complete graph on the m seed vertices, then each
/// new vertex attaches m distinct edges by degree-proportional sampling
/// without replacement (draw-and-reject).
Graph barabasi_albert(int n, int m, std::uint64_t seed);

/// Exact diameter via all-pairs BFS.
int diameter(const Graph& g);

/// Edge-list text format: one "u v" pair per line, ASCII decimal, 0-indexed,
/// each edge listed once.
Graph load_graph(const std::string& text);
std::string save_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace graphwalk

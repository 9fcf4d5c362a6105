#include "graphwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphwalk/rng.hpp"

namespace graphwalk {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : adj) total += nb.size();
    return total / 2;
}

namespace {

bool connected(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

Graph assemble(int n, const std::vector<std::pair<int, int>>& edges,
               bool require_connected) {
    if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    if (require_connected && !connected(adj))
        throw std::invalid_argument("graph is disconnected");
    Graph g;
    g.n = n;
    g.adj = std::move(adj);
    g.degree.resize(n);
    for (int i = 0; i < n; ++i) g.degree[i] = static_cast<int>(g.adj[i].size());
    g.d_max = *std::max_element(g.degree.begin(), g.degree.end());
    return g;
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return assemble(n, edges, true);
}

Graph grid_graph(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("grid dimensions must be positive");
    if (rows * cols < 2)
        throw std::invalid_argument("grid must have at least two vertices");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    }
    return make_graph(rows * cols, edges);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi requires n >= 2");
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("erdos_renyi requires 0 < p <= 1");
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform01(rng) < p) edges.emplace_back(i, j);
        try {
            return make_graph(n, edges);
        } catch (const std::invalid_argument&) {
            // disconnected draw, resample
        }
    }
    throw std::runtime_error(
        "erdos_renyi: 10000 consecutive draws were disconnected; p too small");
}

Graph barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("barabasi_albert requires m >= 1");
    if (n <= m) throw std::invalid_argument("barabasi_albert requires n > m");
    Rng rng = make_rng(seed);
    std::vector<std::pair<int, int>> edges;
    // endpoints of every edge so far; uniform draws from this list are
    // degree-proportional draws over existing vertices
    std::vector<int> endpoints;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    for (int v = m; v < n; ++v) {
        std::vector<int> chosen;
        if (v == m && m == 1) {
            // no edges yet; the single seed vertex is the only choice
            chosen.push_back(0);
        } else {
            while (static_cast<int>(chosen.size()) < m) {
                int t = endpoints[uniform_index(rng, static_cast<int>(endpoints.size()))];
                if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                    chosen.push_back(t);
            }
        }
        for (int t : chosen) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return make_graph(n, edges);
}

int diameter(const Graph& g) {
    int diam = 0;
    std::vector<int> dist(g.n);
    std::deque<int> queue;
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter: graph is disconnected");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_vertex = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue;  // blank line
        std::string rest;
        if (!(ls >> v) || (ls >> rest))
            throw std::invalid_argument("malformed edge at line " +
                                        std::to_string(lineno) + ": " + line);
        if (u < 0 || v < 0)
            throw std::invalid_argument("negative vertex index at line " +
                                        std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) throw std::invalid_argument("empty edge list");
    return make_graph(max_vertex + 1, edges);
}

std::string save_graph(const Graph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << save_graph(g);
}

}  // namespace graphwalk

#pragma once

#include <vector>

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"

namespace steiner {

// n x n table of geodesic distances. Entries are exact BFS distances;
// the graph is connected by construction so every entry is finite.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, 0) {}

    int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int size() const { return n_; }

    int eccentricity_max() const {
        int best = 0;
        for (int d : dist_) best = std::max(best, d);
        return best;
    }

private:
    int n_;
    std::vector<int> dist_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int w : g.neighbors(u))
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
        }
        for (int v = 0; v < n; ++v) dm.at(s, v) = dist[v];
    }
    return dm;
}

// W(G): sum of geodesic distances over unordered vertex pairs.
inline BigCount wiener_index(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    BigCount total = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += dm(u, v);
    return total;
}

inline BigCount wiener_index(const Graph& g) { return wiener_index(g, all_pairs_distances(g)); }

// Exact shortest-path counts from every source, by DP over the BFS DAG.
// counts[s][v] is the number of geodesics from s to v.
inline std::vector<std::vector<BigCount>> geodesic_path_counts(const Graph& g,
                                                               const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    std::vector<std::vector<BigCount>> counts(n, std::vector<BigCount>(n, 0));
    std::vector<int> order(n);
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return dm(s, a) < dm(s, b); });
        auto& row = counts[s];
        row[s] = 1;
        for (int v : order) {
            if (v == s) continue;
            for (int w : g.neighbors(v))
                if (dm(s, w) + 1 == dm(s, v)) row[v] += row[w];
        }
    }
    return counts;
}

// Classical betweenness centrality in exact rationals, summed over
// unordered pairs {x, y} avoiding v. A geodesic passes through v when
// d(x,v) + d(v,y) = d(x,y); the number of such geodesics factors as
// counts[x][v] * counts[v][y].
inline std::vector<ExactRatio> geodesic_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto counts = geodesic_path_counts(g, dm);
    std::vector<ExactRatio> centrality(n, ExactRatio(0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            for (int v = 0; v < n; ++v) {
                if (v == x || v == y) continue;
                if (dm(x, v) + dm(v, y) != dm(x, y)) continue;
                BigCount through = counts[x][v] * counts[v][y];
                if (through == 0) continue;
                centrality[v] += make_ratio(through, counts[x][y]);
            }
        }
    return centrality;
}

} // namespace steiner

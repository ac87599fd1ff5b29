#include "hhc/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace hhc {

double edge_weight(double p, WeightMethod method) {
    if (method == WeightMethod::uniform) return 1.0;
    if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("edge probability outside (0, 0.5]");
    return std::log((1.0 - p) / p);
}

MatchingGraph build_matching_graph(const DecodingHypergraph& hg, char basis,
                                   const CodeDefinition& code, WeightMethod method) {
    MatchingGraph g;
    g.basis = basis;
    g.method = method;

    std::vector<int> node_of_event(hg.events.size(), -1);
    for (const auto& e : hg.events) {
        if (e.kind != EventKind::stabilizer_diff || e.basis != basis) continue;
        node_of_event[e.id] = int(g.node_events.size());
        g.node_events.push_back(e.id);
    }

    // Correction qubit: the lowest data qubit whose single error of the
    // corrected type flips exactly this stabilizer set (none for time-like
    // measurement edges).
    const auto& stabs = (basis == 'Z') ? code.stab_z : code.stab_x;
    auto correction_for = [&](std::vector<int> stab_set) -> int {
        std::sort(stab_set.begin(), stab_set.end());
        for (uint32_t q = 0; q < 9; q++) {
            std::vector<int> pattern;
            for (size_t s = 0; s < stabs.size(); s++)
                if (basis == 'Z' ? stabs[s].z(q) : stabs[s].x(q)) pattern.push_back(int(s));
            if (pattern == stab_set) return int(q) + 1;
        }
        return 0;
    };

    for (const auto& h : hg.hyperedges) {
        if (h.events.empty() || h.events.size() > 2) continue;
        bool supported = true;
        for (int e : h.events)
            if (node_of_event[e] < 0) supported = false;
        if (!supported) continue;
        MatchingEdge me;
        me.u = node_of_event[h.events[0]];
        me.v = h.events.size() == 2 ? node_of_event[h.events[1]] : g.boundary();
        me.probability = h.probability;
        me.weight = edge_weight(h.probability, method);
        me.logical_label = h.logical_label;
        if (h.events.size() == 2 &&
            hg.events[h.events[0]].stabilizer_index == hg.events[h.events[1]].stabilizer_index) {
            me.correction_qubit = 0;  // time-like
        } else {
            std::vector<int> set;
            for (int e : h.events) set.push_back(hg.events[e].stabilizer_index);
            me.correction_qubit = correction_for(std::move(set));
        }
        g.edges.push_back(me);
    }
    return g;
}

namespace {

struct PathInfo {
    double dist;
    uint8_t label;
    std::vector<int> qubits;
};

// Dijkstra from src over the matching graph; tracks the label and correction
// qubits along shortest paths. Ties resolve toward the earlier predecessor
// edge, which keeps decoding deterministic.
std::vector<PathInfo> shortest_paths(const MatchingGraph& g, int src) {
    int n = g.n_nodes();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // node -> (edge ix, other)
    for (size_t i = 0; i < g.edges.size(); i++) {
        adj[g.edges[i].u].push_back({int(i), g.edges[i].v});
        adj[g.edges[i].v].push_back({int(i), g.edges[i].u});
    }
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> pred_edge(n, -1), pred_node(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto [ei, v] : adj[u]) {
            double nd = d + g.edges[ei].weight;
            if (nd < dist[v]) {
                dist[v] = nd;
                pred_edge[v] = ei;
                pred_node[v] = u;
                pq.push({nd, v});
            }
        }
    }
    std::vector<PathInfo> out(n);
    for (int v = 0; v < n; v++) {
        out[v].dist = dist[v];
        uint8_t lab = 0;
        std::vector<int> qs;
        int cur = v;
        while (cur != src && pred_edge[cur] >= 0) {
            const auto& e = g.edges[pred_edge[cur]];
            lab ^= e.logical_label;
            if (e.correction_qubit) qs.push_back(e.correction_qubit);
            cur = pred_node[cur];
        }
        out[v].label = lab;
        out[v].qubits = std::move(qs);
    }
    return out;
}

}  // namespace

MatchingResult decode_matching_full(const MatchingGraph& graph, const std::vector<uint8_t>& beta) {
    if (int(beta.size()) != int(graph.node_events.size()))
        throw std::invalid_argument("beta length does not match node count");
    MatchingResult res;
    std::vector<int> hot;
    for (size_t i = 0; i < beta.size(); i++)
        if (beta[i]) hot.push_back(int(i));
    if (hot.empty()) return res;
    int k = int(hot.size());
    if (k > 24) throw std::runtime_error("too many highlighted nodes for exact matching");

    std::vector<std::vector<PathInfo>> paths;
    paths.reserve(k);
    for (int i = 0; i < k; i++) paths.push_back(shortest_paths(graph, hot[i]));
    int b = graph.boundary();
    for (int i = 0; i < k; i++)
        if (!std::isfinite(paths[i][b].dist))
            throw std::runtime_error("highlighted node disconnected from boundary");

    // Subset DP: match the lowest unmatched node to the boundary or a partner.
    uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    std::vector<double> dp(full + 1, std::numeric_limits<double>::infinity());
    std::vector<int> choice(full + 1, -2);  // -1 = boundary, else partner index
    dp[0] = 0.0;
    for (uint32_t mask = 1; mask <= full; mask++) {
        int i = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << i);
        double best = dp[rest] + paths[i][b].dist;
        int bestj = -1;
        uint32_t m = rest;
        while (m) {
            int j = __builtin_ctz(m);
            m &= m - 1;
            double cand = dp[rest & ~(1u << j)] + paths[i][hot[j]].dist;
            if (cand < best) {
                best = cand;
                bestj = j;
            }
        }
        dp[mask] = best;
        choice[mask] = bestj;
    }

    res.total_weight = dp[full];
    uint32_t mask = full;
    uint8_t label = 0;
    std::map<int, int> qcount;
    while (mask) {
        int i = __builtin_ctz(mask);
        int j = choice[mask];
        const PathInfo& pi = (j < 0) ? paths[i][b] : paths[i][hot[j]];
        label ^= pi.label;
        for (int q : pi.qubits) qcount[q] ^= 1;
        mask &= ~(1u << i);
        if (j >= 0) mask &= ~(1u << j);
    }
    res.label = label;
    for (auto& [q, c] : qcount)
        if (c) res.correction_qubits.push_back(q);
    return res;
}

uint8_t decode_matching(const MatchingGraph& graph, const std::vector<uint8_t>& beta) {
    return decode_matching_full(graph, beta).label;
}

}  // namespace hhc

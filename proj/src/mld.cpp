#include "hhc/mld.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <stdexcept>

namespace hhc {

JointDistribution JointDistribution::zero_error(int n_events) {
    JointDistribution d;
    d.n_events = n_events;
    d.pr.assign(size_t(1) << (n_events + 2), 0.0);
    d.pr[0] = 1.0;
    return d;
}

double JointDistribution::total_mass() const {
    double s = 0.0;
    for (double v : pr) s += v;
    return s;
}

static uint64_t edge_key(const DecodingHypergraph& hg, int id) {
    const Hyperedge& h = hg.hyperedges[id];
    uint64_t key = h.logical_label;
    for (int e : h.events) key |= uint64_t(1) << (e + 2);
    return key;
}

void include_hyperedge(JointDistribution& dist, const DecodingHypergraph& hg, int hyperedge_id) {
    for (int done : dist.incorporated)
        if (done == hyperedge_id) throw std::invalid_argument("hyperedge already included");
    const Hyperedge& h = hg.hyperedges[hyperedge_id];
    for (int e : h.events)
        if (e < dist.frozen_prefix)
            throw std::invalid_argument("hyperedge touches the frozen event prefix");
    uint64_t m = edge_key(hg, hyperedge_id);
    double p = h.probability;
    for (uint64_t k = 0; k < dist.pr.size(); k++) {
        uint64_t mate = k ^ m;
        if (mate < k) continue;
        double a = dist.pr[k], b = dist.pr[mate];
        dist.pr[k] = (1.0 - p) * a + p * b;
        dist.pr[mate] = (1.0 - p) * b + p * a;
    }
    dist.incorporated.push_back(hyperedge_id);
}

OfflineMld::OfflineMld(const DecodingHypergraph& hg) : hg_(hg) {
    int n = int(hg.events.size());
    if (n > 26) throw std::invalid_argument("offline MLD refuses more than 26 events");
    // every event must have an incident hyperedge, else a syndrome could be impossible
    std::vector<char> seen(n, 0);
    for (const auto& h : hg.hyperedges)
        for (int e : h.events) seen[e] = 1;
    for (int e = 0; e < n; e++)
        if (!seen[e]) throw std::invalid_argument("event without incident hyperedge");
    dist_ = JointDistribution::zero_error(n);
    for (int i = 0; i < int(hg.hyperedges.size()); i++) include_hyperedge(dist_, hg, i);
}

uint8_t OfflineMld::decode(const std::vector<uint8_t>& beta) const {
    if (int(beta.size()) != dist_.n_events) throw std::invalid_argument("beta length mismatch");
    uint64_t b = 0;
    for (size_t i = 0; i < beta.size(); i++)
        if (beta[i]) b |= uint64_t(1) << i;
    double best = -1.0;
    uint8_t best_g = 0;
    for (uint8_t g = 0; g < 4; g++) {
        double v = dist_.pr[(b << 2) | g];
        if (v > best) {
            best = v;
            best_g = g;
        }
    }
    if (best <= 0.0) throw std::runtime_error("impossible syndrome in offline MLD");
    return best_g;
}

void OfflineMld::dump(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    uint64_t count = 0;
    for (double v : dist_.pr)
        if (v != 0.0) count++;
    os.write(reinterpret_cast<const char*>(&count), 8);
    for (uint64_t k = 0; k < dist_.pr.size(); k++) {
        if (dist_.pr[k] == 0.0) continue;
        os.write(reinterpret_cast<const char*>(&k), 8);
        os.write(reinterpret_cast<const char*>(&dist_.pr[k]), 8);
    }
}

OnlineMld::OnlineMld(const DecodingHypergraph& hg, int prefix_cache_depth)
    : hg_(hg), cache_depth_(prefix_cache_depth) {
    if (hg.rounds > 10) throw std::invalid_argument("online MLD refuses more than 10 rounds");
    edges_at_.assign(hg.events.size(), {});
    for (int i = 0; i < int(hg.hyperedges.size()); i++) {
        int first = *std::min_element(hg.hyperedges[i].events.begin(),
                                      hg.hyperedges[i].events.end());
        edges_at_[first].push_back(i);
    }
}

OnlineMld::Dist OnlineMld::advance(Dist d, int event, uint8_t bit) const {
    // include every hyperedge first seen at this event, then condition on it
    for (int hid : edges_at_[event]) {
        const Hyperedge& h = hg_.hyperedges[hid];
        Key m = h.logical_label;
        for (int e : h.events) m |= Key(1) << (e + 2);
        double p = h.probability;
        std::map<Key, double> next;
        for (auto& [k, v] : d.entries) {
            next[k] += (1.0 - p) * v;
            next[k ^ m] += p * v;
        }
        d.entries.assign(next.begin(), next.end());
        s_max_ = std::max(s_max_, d.entries.size());
    }
    Key bitmask = Key(1) << (event + 2);
    std::vector<std::pair<Key, double>> kept;
    kept.reserve(d.entries.size() / 2 + 1);
    for (auto& [k, v] : d.entries)
        if (((k & bitmask) != 0) == (bit != 0)) kept.push_back({k, v});
    d.entries = std::move(kept);
    return d;
}

uint8_t OnlineMld::decode(const std::vector<uint8_t>& beta) const {
    if (beta.size() != hg_.events.size()) throw std::invalid_argument("beta length mismatch");
    int n = int(beta.size());
    int start = 0;
    Dist d;
    d.entries = {{Key(0), 1.0}};
    int depth = std::min(cache_depth_, n);
    if (depth > 0 && depth <= 60) {
        uint64_t prefix = 1;  // leading 1 guards length
        for (int i = 0; i < depth; i++) prefix = (prefix << 1) | (beta[i] ? 1 : 0);
        auto it = prefix_cache_.find(prefix);
        if (it != prefix_cache_.end()) {
            d = it->second;
            start = depth;
        } else {
            for (int i = 0; i < depth; i++) d = advance(std::move(d), i, beta[i]);
            prefix_cache_[prefix] = d;
            start = depth;
        }
    }
    for (int i = start; i < n; i++) d = advance(std::move(d), i, beta[i]);

    double best = -1.0;
    uint8_t best_g = 0;
    double mass = 0.0;
    std::array<double, 4> by_g{0.0, 0.0, 0.0, 0.0};
    for (auto& [k, v] : d.entries) {
        by_g[uint8_t(k & 3)] += v;
        mass += v;
    }
    for (uint8_t g = 0; g < 4; g++)
        if (by_g[g] > best) {
            best = by_g[g];
            best_g = g;
        }
    if (mass <= 0.0) throw std::runtime_error("impossible syndrome in online MLD");
    return best_g;
}

}  // namespace hhc

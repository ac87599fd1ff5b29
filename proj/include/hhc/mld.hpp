#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hhc/hypergraph.hpp"

namespace hhc {

// Dense joint distribution over (event bits, logical label), keyed as
// (beta << 2) | gamma. Grows to 2^(|V|+2) doubles, so offline decoding is
// capped at 26 events.
struct JointDistribution {
    int n_events = 0;
    std::vector<double> pr;             // size 2^(n_events+2)
    std::vector<int> incorporated;      // hyperedge ids already applied
    int frozen_prefix = 0;

    static JointDistribution zero_error(int n_events);
    double total_mass() const;
};

// Pr[bg] <- (1-p) Pr[bg] + p Pr[(b^bh)(g^gh)] over all entries.
void include_hyperedge(JointDistribution& dist, const DecodingHypergraph& hg, int hyperedge_id);

class OfflineMld {
  public:
    explicit OfflineMld(const DecodingHypergraph& hg);  // throws if |V| > 26
    uint8_t decode(const std::vector<uint8_t>& beta) const;
    const JointDistribution& distribution() const { return dist_; }
    void dump(const std::string& path) const;  // little-endian {count, key/prob pairs}

  private:
    const DecodingHypergraph& hg_;
    JointDistribution dist_;
};

class OnlineMld {
  public:
    OnlineMld(const DecodingHypergraph& hg, int prefix_cache_depth);  // throws if rounds > 10
    uint8_t decode(const std::vector<uint8_t>& beta) const;
    size_t max_support() const { return s_max_; }  // largest instantaneous support seen

  private:
    using Key = unsigned __int128;
    struct Dist {
        std::vector<std::pair<Key, double>> entries;
    };
    const DecodingHypergraph& hg_;
    int cache_depth_;
    std::vector<std::vector<int>> edges_at_;  // event -> hyperedges first seen there
    mutable std::map<uint64_t, Dist> prefix_cache_;
    mutable size_t s_max_ = 0;

    Dist advance(Dist d, int event, uint8_t bit) const;
};

}  // namespace hhc

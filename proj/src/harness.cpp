#include "hhc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hhc {

DecoderKind decoder_from_string(const std::string& s) {
    if (s == "matching-uniform") return DecoderKind::matching_uniform;
    if (s == "matching-analytic") return DecoderKind::matching_analytic;
    if (s == "mld-offline") return DecoderKind::mld_offline;
    if (s == "mld-online") return DecoderKind::mld_online;
    throw std::invalid_argument("unknown decoder: " + s);
}

const char* decoder_name(DecoderKind d) {
    switch (d) {
        case DecoderKind::matching_uniform: return "matching-uniform";
        case DecoderKind::matching_analytic: return "matching-analytic";
        case DecoderKind::mld_offline: return "mld-offline";
        case DecoderKind::mld_online: return "mld-online";
    }
    return "?";
}

int default_prefix_cache_depth(int rounds) {
    if (rounds >= 4) return 21;
    if (rounds == 3) return 15;
    return 0;
}

MemoryExperiment::MemoryExperiment(InitialState state, int rounds, const NoiseParams& params,
                                   const NoiseParams& decoder_priors, const CircuitStyle& style)
    : code_(heavy_hex_code()),
      circuit_(memory_experiment(state, rounds, style)),
      params_(params),
      basis_(memory_basis(state)) {
    hg_ = build_hypergraph(circuit_, decoder_priors, code_, true);
    prop_ = std::make_unique<FramePropagator>(circuit_, code_, true);

    // Signatures of every enumerable physical fault, indexed by component.
    auto faults = enumerate_faults(circuit_, params_);
    comp_fault_offset_.assign(circuit_.components.size() + 1, -1);
    fault_events_.resize(faults.size());
    fault_labels_.resize(faults.size());
    for (size_t i = 0; i < faults.size(); i++) {
        if (comp_fault_offset_[faults[i].location] < 0)
            comp_fault_offset_[faults[i].location] = int(i);
        FrameOutcome out = prop_->propagate({faults[i]});
        auto bits = events_from_outcome(hg_, out);
        for (size_t e = 0; e < bits.size(); e++)
            if (bits[e]) fault_events_[i].push_back(int(e));
        fault_labels_[i] = out.label;
    }

    graph_uniform_ = build_matching_graph(hg_, basis_, code_, WeightMethod::uniform);
    graph_analytic_ = build_matching_graph(hg_, basis_, code_, WeightMethod::analytic);
}

uint8_t MemoryExperiment::memory_bit(uint8_t label) const {
    return basis_ == 'Z' ? (label & 1) : ((label >> 1) & 1);
}

ShotRecord MemoryExperiment::sample_shot(uint64_t base_seed, uint64_t shot_index) const {
    ShotRecord shot;
    shot.seed = mix64(base_seed ^ mix64(shot_index + 0x51ed2701d9e1fcb5ull));
    auto faults = sample_fault_set(circuit_, params_, shot.seed);
    shot.beta.assign(hg_.events.size(), 0);
    uint8_t label = 0;
    for (const auto& f : faults) {
        int idx = comp_fault_offset_[f.location];
        if (f.pauli_index > 0) idx += f.pauli_index - 1;
        for (int e : fault_events_[idx]) shot.beta[e] ^= 1;
        label ^= fault_labels_[idx];
    }
    shot.true_label = label;
    shot.final_logical_bit = memory_bit(label);
    return shot;
}

std::vector<uint8_t> MemoryExperiment::matching_beta(const ShotRecord& shot) const {
    const MatchingGraph& g = graph_analytic_;
    std::vector<uint8_t> beta(g.node_events.size(), 0);
    for (size_t i = 0; i < g.node_events.size(); i++) beta[i] = shot.beta[g.node_events[i]];
    return beta;
}

uint8_t MemoryExperiment::decode(DecoderKind d, const ShotRecord& shot,
                                 int prefix_cache_depth) const {
    switch (d) {
        case DecoderKind::matching_uniform:
            return decode_matching(graph_uniform_, matching_beta(shot));
        case DecoderKind::matching_analytic:
            return decode_matching(graph_analytic_, matching_beta(shot));
        case DecoderKind::mld_offline: {
            if (!offline_) offline_ = std::make_unique<OfflineMld>(hg_);
            return offline_->decode(shot.beta);
        }
        case DecoderKind::mld_online: {
            int depth = prefix_cache_depth >= 0 ? prefix_cache_depth
                                                : default_prefix_cache_depth(circuit_.rounds);
            if (!online_ || online_depth_ != depth) {
                online_ = std::make_unique<OnlineMld>(hg_, depth);
                online_depth_ = depth;
            }
            return online_->decode(shot.beta);
        }
    }
    throw std::logic_error("unreachable");
}

void MemoryExperiment::prepare(DecoderKind d, int prefix_cache_depth) const {
    if (d == DecoderKind::mld_offline && !offline_) offline_ = std::make_unique<OfflineMld>(hg_);
    if (d == DecoderKind::mld_online) {
        int depth = prefix_cache_depth >= 0 ? prefix_cache_depth
                                            : default_prefix_cache_depth(circuit_.rounds);
        if (!online_ || online_depth_ != depth) {
            online_ = std::make_unique<OnlineMld>(hg_, depth);
            online_depth_ = depth;
        }
    }
}

bool MemoryExperiment::fails(DecoderKind d, const ShotRecord& shot, int prefix_cache_depth) const {
    uint8_t corr = decode(d, shot, prefix_cache_depth);
    return memory_bit(corr) != memory_bit(shot.true_label);
}

ExperimentResult run_memory_mc(InitialState state, int rounds, const NoiseParams& params,
                               const RunOptions& opts) {
    MemoryExperiment exp(state, rounds, params,
                         opts.decoder_priors ? *opts.decoder_priors : params);
    int depth = opts.prefix_cache_depth >= 0 ? opts.prefix_cache_depth
                                             : default_prefix_cache_depth(rounds);

    exp.prepare(opts.decoder, depth);
    uint64_t n_threads = opts.threads > 0 ? opts.threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<uint64_t>(n_threads, std::max<uint64_t>(1, opts.shots / 256));

    std::vector<uint64_t> fail_counts(n_threads, 0);
    auto worker = [&](uint64_t t) {
        // online MLD keeps per-thread state so the prefix cache is private
        std::unique_ptr<OnlineMld> online;
        if (opts.decoder == DecoderKind::mld_online)
            online = std::make_unique<OnlineMld>(exp.hypergraph(), depth);
        uint64_t fails = 0;
        for (uint64_t i = t; i < opts.shots; i += n_threads) {
            ShotRecord shot = exp.sample_shot(opts.seed, i);
            uint8_t corr;
            if (online)
                corr = online->decode(shot.beta);
            else
                corr = exp.decode(opts.decoder, shot, depth);
            uint8_t bit = exp.logical_bit_index() == 'Z' ? 1 : 2;
            if ((corr & bit) != (shot.true_label & bit)) fails++;
        }
        fail_counts[t] = fails;
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (uint64_t t = 0; t < n_threads; t++) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    ExperimentResult res;
    res.state = initial_state_name(state);
    res.rounds = rounds;
    res.shots = opts.shots;
    res.decoder = decoder_name(opts.decoder);
    for (uint64_t c : fail_counts) res.failures += c;
    res.p_fail = double(res.failures) / double(opts.shots);
    res.std_error = std::sqrt(std::max(res.p_fail * (1.0 - res.p_fail), 1e-300) /
                              double(opts.shots));
    return res;
}

}  // namespace hhc

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhc/circuit_builder.hpp"
#include "hhc/hypergraph.hpp"
#include "hhc/matching.hpp"
#include "hhc/mld.hpp"

namespace hhc {

enum class DecoderKind { matching_uniform, matching_analytic, mld_offline, mld_online };
DecoderKind decoder_from_string(const std::string& s);
const char* decoder_name(DecoderKind d);

struct ShotRecord {
    uint64_t seed = 0;
    std::vector<uint8_t> beta;
    uint8_t final_logical_bit = 0;  // measured memory-basis logical eigenvalue flip
    uint8_t true_label = 0;         // the injected fault set's label
};

struct ExperimentResult {
    std::string state;
    int rounds = 0;
    uint64_t shots = 0;
    std::string decoder;
    uint64_t failures = 0;
    double p_fail = 0.0;
    double std_error = 0.0;
};

struct RunOptions {
    DecoderKind decoder = DecoderKind::matching_analytic;
    uint64_t shots = 10000;
    uint64_t seed = 1;
    int threads = 0;                 // 0 = hardware concurrency
    int prefix_cache_depth = -1;     // -1 = per-round default (15 for r=3, 21 for r=4)
    std::optional<NoiseParams> decoder_priors;  // defaults to the true params
};

int default_prefix_cache_depth(int rounds);

// Shared per-(state, rounds, params) machinery: circuit, hypergraph, decoders.
class MemoryExperiment {
  public:
    MemoryExperiment(InitialState state, int rounds, const NoiseParams& params,
                     const NoiseParams& decoder_priors, const CircuitStyle& style = default_style());

    const ScheduledCircuit& circuit() const { return circuit_; }
    const DecodingHypergraph& hypergraph() const { return hg_; }
    const CodeDefinition& code() const { return code_; }

    ShotRecord sample_shot(uint64_t base_seed, uint64_t shot_index) const;
    // beta restricted to the matching basis of this experiment
    std::vector<uint8_t> matching_beta(const ShotRecord& shot) const;

    uint8_t decode(DecoderKind d, const ShotRecord& shot, int prefix_cache_depth = -1) const;
    void prepare(DecoderKind d, int prefix_cache_depth = -1) const;  // pre-builds decoder state
    bool fails(DecoderKind d, const ShotRecord& shot, int prefix_cache_depth = -1) const;

    char logical_bit_index() const { return basis_; }  // which label bit counts

  private:
    CodeDefinition code_;
    ScheduledCircuit circuit_;
    NoiseParams params_;
    DecodingHypergraph hg_;        // built from decoder priors: what the decoders see
    char basis_;
    std::unique_ptr<FramePropagator> prop_;
    std::vector<std::vector<int>> fault_events_;  // enumerated fault -> event ids
    std::vector<uint8_t> fault_labels_;
    std::vector<int> comp_fault_offset_;  // component -> first enumerated fault index
    MatchingGraph graph_uniform_, graph_analytic_;
    mutable std::unique_ptr<OfflineMld> offline_;
    mutable std::unique_ptr<OnlineMld> online_;
    mutable int online_depth_ = -1;

    uint8_t memory_bit(uint8_t label) const;
};

ExperimentResult run_memory_mc(InitialState state, int rounds, const NoiseParams& params,
                               const RunOptions& opts);

}  // namespace hhc

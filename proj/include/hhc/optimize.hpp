#pragma once

#include <set>
#include <vector>

#include "hhc/harness.hpp"

namespace hhc {

struct OptimizeOptions {
    DecoderKind decoder = DecoderKind::matching_analytic;
    std::set<ComponentKind> frozen = {ComponentKind::z, ComponentKind::s, ComponentKind::id,
                                      ComponentKind::idm, ComponentKind::initialize};
    double lower = 1e-6, upper = 0.4;  // bounds for unfrozen entries
    int max_evals = 400;
};

struct OptimizeResult {
    NoiseParams params;
    double objective = 0.0;        // decoded failure fraction on the corpus
    double initial_objective = 0.0;
    int evaluations = 0;
};

// Fixed pre-sampled corpus for a deterministic objective.
struct ShotCorpus {
    InitialState state = InitialState::zero;
    int rounds = 2;
    std::vector<ShotRecord> shots;
};

ShotCorpus sample_corpus(InitialState state, int rounds, const NoiseParams& truth, uint64_t shots,
                         uint64_t seed);

// Bounded derivative-free minimization of the decoder failure fraction over
// the unfrozen entries; never returns a point worse than the initial one.
OptimizeResult optimize_decoder_priors(const ShotCorpus& corpus, const NoiseParams& initial,
                                       const OptimizeOptions& opts = {});

}  // namespace hhc

#include "hhc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hhc {

ShotCorpus sample_corpus(InitialState state, int rounds, const NoiseParams& truth, uint64_t shots,
                         uint64_t seed) {
    ShotCorpus corpus;
    corpus.state = state;
    corpus.rounds = rounds;
    MemoryExperiment exp(state, rounds, truth, truth);
    corpus.shots.reserve(shots);
    for (uint64_t i = 0; i < shots; i++) corpus.shots.push_back(exp.sample_shot(seed, i));
    return corpus;
}

namespace {

// Decoder failure fraction as a function of the prior vector; the fault
// signatures are parameter-independent, so only probabilities are remerged.
class PriorObjective {
  public:
    PriorObjective(const ShotCorpus& corpus, DecoderKind decoder)
        : corpus_(corpus),
          decoder_(decoder),
          code_(heavy_hex_code()),
          circuit_(memory_experiment(corpus.state, corpus.rounds)),
          basis_(memory_basis(corpus.state)) {
        NoiseParams unit;
        for (auto k : NoiseParams::vector_order()) unit.set(k, 0.25);
        hg_ = build_hypergraph(circuit_, unit, code_, true);
        faults_ = enumerate_faults(circuit_, unit);
        FramePropagator prop(circuit_, code_, true);
        for (const auto& f : faults_) {
            FrameOutcome out = prop.propagate({f});
            auto bits = events_from_outcome(hg_, out);
            std::vector<int> sig;
            for (size_t e = 0; e < bits.size(); e++)
                if (bits[e]) sig.push_back(int(e));
            sigs_.push_back(std::move(sig));
            labels_.push_back(out.label);
        }
    }

    double eval(const NoiseParams& p) {
        std::vector<Hyperedge> raw;
        raw.reserve(faults_.size());
        for (size_t i = 0; i < faults_.size(); i++) {
            if (sigs_[i].empty()) continue;
            double pc = p.at(faults_[i].source_kind);
            if (pc == 0.0) continue;
            int arity = faults_[i].source_kind == ComponentKind::cx
                            ? 15
                            : (faults_[i].pauli_index == 0 ? 1 : 3);
            Hyperedge h;
            h.events = sigs_[i];
            h.logical_label = labels_[i];
            h.probability = pc / arity;
            raw.push_back(std::move(h));
        }
        DecodingHypergraph hg = hg_;
        hg.hyperedges = merge_hyperedges(std::move(raw), MergeMode::exact_xor);
        MatchingGraph g = build_matching_graph(
            hg, basis_, code_,
            decoder_ == DecoderKind::matching_uniform ? WeightMethod::uniform
                                                      : WeightMethod::analytic);
        uint8_t bit = basis_ == 'Z' ? 1 : 2;
        uint64_t fails = 0;
        std::vector<uint8_t> beta(g.node_events.size());
        for (const auto& shot : corpus_.shots) {
            for (size_t i = 0; i < g.node_events.size(); i++)
                beta[i] = shot.beta[g.node_events[i]];
            uint8_t corr = decode_matching(g, beta);
            if ((corr & bit) != (shot.true_label & bit)) fails++;
        }
        return double(fails) / double(corpus_.shots.size());
    }

  private:
    const ShotCorpus& corpus_;
    DecoderKind decoder_;
    CodeDefinition code_;
    ScheduledCircuit circuit_;
    char basis_;
    DecodingHypergraph hg_;
    std::vector<FaultSpec> faults_;
    std::vector<std::vector<int>> sigs_;
    std::vector<uint8_t> labels_;
};

}  // namespace

OptimizeResult optimize_decoder_priors(const ShotCorpus& corpus, const NoiseParams& initial,
                                       const OptimizeOptions& opts) {
    if (opts.decoder != DecoderKind::matching_analytic &&
        opts.decoder != DecoderKind::matching_uniform)
        throw std::invalid_argument("prior optimization drives the matching decoders");
    std::vector<ComponentKind> dims;
    for (auto k : NoiseParams::vector_order())
        if (!opts.frozen.count(k)) dims.push_back(k);
    for (auto k : dims) {
        double v = initial.at(k);
        if (v != 0.0 && (v < opts.lower || v > opts.upper))
            throw std::invalid_argument(std::string("initial value for ") + kind_name(k) +
                                        " violates the optimization bounds");
    }

    PriorObjective objective(corpus, opts.decoder);
    int evals = 0;
    auto params_of = [&](const std::vector<double>& x) {
        NoiseParams p = initial;
        for (size_t i = 0; i < dims.size(); i++)
            p.set(dims[i], std::clamp(x[i], opts.lower, opts.upper));
        return p;
    };
    auto f = [&](const std::vector<double>& x) {
        evals++;
        return objective.eval(params_of(x));
    };

    size_t n = dims.size();
    std::vector<double> x0(n);
    for (size_t i = 0; i < n; i++) x0[i] = std::clamp(initial.at(dims[i]), opts.lower, opts.upper);

    // Nelder-Mead with clamped vertices.
    std::vector<std::vector<double>> simplex{x0};
    for (size_t i = 0; i < n; i++) {
        auto v = x0;
        v[i] = std::clamp(v[i] * 2.0 + 1e-4, opts.lower, opts.upper);
        simplex.push_back(v);
    }
    std::vector<double> fv(simplex.size());
    for (size_t i = 0; i < simplex.size(); i++) fv[i] = f(simplex[i]);
    double initial_obj = fv[0];

    std::vector<double> best_x = x0;
    double best_f = fv[0];
    auto note = [&](const std::vector<double>& x, double v) {
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    };
    for (size_t i = 0; i < simplex.size(); i++) note(simplex[i], fv[i]);

    while (evals < opts.max_evals) {
        std::vector<size_t> order(simplex.size());
        for (size_t i = 0; i < order.size(); i++) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> sx;
        std::vector<double> sf;
        for (size_t i : order) {
            sx.push_back(simplex[i]);
            sf.push_back(fv[i]);
        }
        simplex = sx;
        fv = sf;
        if (fv.back() - fv.front() < 1e-12) break;

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i + 1 < simplex.size(); i++)
            for (size_t d = 0; d < n; d++) centroid[d] += simplex[i][d];
        for (size_t d = 0; d < n; d++) centroid[d] /= double(n);

        auto blend = [&](double t) {
            std::vector<double> v(n);
            for (size_t d = 0; d < n; d++)
                v[d] = std::clamp(centroid[d] + t * (centroid[d] - simplex.back()[d]), opts.lower,
                                  opts.upper);
            return v;
        };
        auto xr = blend(1.0);
        double fr = f(xr);
        note(xr, fr);
        if (fr < fv.front()) {
            auto xe = blend(2.0);
            double fe = f(xe);
            note(xe, fe);
            if (fe < fr) {
                simplex.back() = xe;
                fv.back() = fe;
            } else {
                simplex.back() = xr;
                fv.back() = fr;
            }
        } else if (fr < fv[fv.size() - 2]) {
            simplex.back() = xr;
            fv.back() = fr;
        } else {
            auto xc = blend(-0.5);
            double fc = f(xc);
            note(xc, fc);
            if (fc < fv.back()) {
                simplex.back() = xc;
                fv.back() = fc;
            } else {
                for (size_t i = 1; i < simplex.size(); i++) {
                    for (size_t d = 0; d < n; d++)
                        simplex[i][d] = std::clamp(
                            0.5 * (simplex[i][d] + simplex[0][d]), opts.lower, opts.upper);
                    fv[i] = f(simplex[i]);
                    note(simplex[i], fv[i]);
                }
            }
        }
    }

    OptimizeResult res;
    res.params = params_of(best_x);
    res.objective = best_f;
    res.initial_objective = initial_obj;
    res.evaluations = evals;
    return res;
}

}  // namespace hhc

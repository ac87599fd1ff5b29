#pragma once

#include <string>

#include "hhc/circuit.hpp"
#include "hhc/fits.hpp"
#include "hhc/harness.hpp"
#include "hhc/hypergraph.hpp"
#include "hhc/noise.hpp"
#include "hhc/optimize.hpp"

namespace hhc {

// Circuit: array of time steps, each an array of {kind, qubits,
// measurement_id?}, plus round_schedule and measurement_labels.
std::string circuit_to_json(const ScheduledCircuit& c);

// Hypergraph: {events: [...], hyperedges: [{events, probability,
// logical_label: [b0, b1]}], k}; probabilities printed with 17 significant
// digits so round-trips are exact.
std::string hypergraph_to_json(const DecodingHypergraph& hg);

std::string noise_to_json(const NoiseParams& p);
NoiseParams noise_from_json(const std::string& text);
NoiseParams load_noise_file(const std::string& path);

std::string results_to_json(const std::vector<ExperimentResult>& results);
std::vector<ExperimentResult> results_from_json(const std::string& text);

std::string fit_to_json(const FitResult& fit);
std::string leakage_fit_to_json(const LeakageFit& fit);

// Shot corpus CSV: shot_id, seed, one column per event, final logical bit.
std::string corpus_to_csv(const ShotCorpus& corpus, const DecodingHypergraph& hg);
ShotCorpus corpus_from_csv(const std::string& text, InitialState state, int rounds);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hhc

#pragma once

#include <cstdint>
#include <vector>

#include "hhc/circuit.hpp"
#include "hhc/code.hpp"
#include "hhc/noise.hpp"
#include "hhc/propagate.hpp"

namespace hhc {

enum class EventKind { stabilizer_diff, flag };

struct ErrorSensitiveEvent {
    int id = 0;
    EventKind kind = EventKind::stabilizer_diff;
    char basis = 'Z';          // stabilizer type for stabilizer_diff events
    int stabilizer_index = -1;
    int round = 0;             // layer index t (1-based)
    std::vector<int> source_measurements;
    bool predictor_constant = false;

    std::string name() const;  // e.g. "z0^2", "x3^1", "f11^2"
};

struct Hyperedge {
    std::vector<int> events;   // sorted ascending
    double probability = 0.0;
    uint8_t logical_label = 0;  // bit0: logical-Z flip, bit1: logical-X flip
    std::vector<FaultSpec> fault_witnesses;
};

struct DecodingHypergraph {
    std::vector<ErrorSensitiveEvent> events;
    std::vector<Hyperedge> hyperedges;
    int k = 1;
    char memory_basis = 'Z';
    int rounds = 0;
    bool deflagged = true;
};

enum class MergeMode { exact_xor, first_order };

// Error-sensitive events of the circuit in chronological order (latest
// contributing measurement decides). With deflag=false the flag measurements
// appear as their own events and no virtual corrections apply.
std::vector<ErrorSensitiveEvent> define_events(const ScheduledCircuit& circuit,
                                               const CodeDefinition& code, bool deflag);

DecodingHypergraph build_hypergraph(const ScheduledCircuit& circuit, const NoiseParams& params,
                                    const CodeDefinition& code, bool deflag,
                                    MergeMode mode = MergeMode::exact_xor,
                                    bool keep_witnesses = false);

// Groups identical (events, label) signatures. exact_xor combines pairwise as
// p + q - 2pq; first_order simply sums.
std::vector<Hyperedge> merge_hyperedges(std::vector<Hyperedge> raw, MergeMode mode);

// Event bits from raw measurement outcomes (parity of sources minus predictor,
// deflag corrections first when the hypergraph was built deflagged).
std::vector<uint8_t> events_from_shot(const DecodingHypergraph& hg, const ScheduledCircuit& circuit,
                                      const std::vector<uint8_t>& raw_bits);

// Event bits directly from a propagated fault outcome.
std::vector<uint8_t> events_from_outcome(const DecodingHypergraph& hg, const FrameOutcome& out);

// Virtual Z corrections implied by one round's flag bits, as (qubit, Z) pairs.
std::vector<uint32_t> deflag_rules(const std::array<DeflagRule, 2>& rules,
                                   const std::vector<std::pair<uint32_t, bool>>& flag_outcomes);

}  // namespace hhc

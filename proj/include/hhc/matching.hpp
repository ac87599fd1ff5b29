#pragma once

#include <cstdint>
#include <vector>

#include "hhc/code.hpp"
#include "hhc/hypergraph.hpp"

namespace hhc {

enum class WeightMethod { uniform, analytic };

struct MatchingEdge {
    int u = 0, v = 0;  // node indices; boundary() for the boundary vertex
    double probability = 0.0;
    double weight = 1.0;
    int correction_qubit = 0;  // 1-based data qubit, 0 when none
    uint8_t logical_label = 0;
};

struct MatchingGraph {
    std::vector<int> node_events;  // event id per node, in chronological order
    std::vector<MatchingEdge> edges;
    char basis = 'Z';
    WeightMethod method = WeightMethod::analytic;

    int boundary() const { return int(node_events.size()); }
    int n_nodes() const { return int(node_events.size()) + 1; }
};

double edge_weight(double p, WeightMethod method);

// Restriction of the hypergraph to one basis: hyperedges fully supported on
// that basis's stabilizer-diff events with size <= 2; size-1 edges attach to
// the boundary node.
MatchingGraph build_matching_graph(const DecodingHypergraph& hg, char basis,
                                   const CodeDefinition& code,
                                   WeightMethod method = WeightMethod::analytic);

// Minimum-weight perfect matching over the highlighted nodes (odd parity pulls
// in the boundary); returns the logical correction accumulated along matched
// paths. beta is indexed by graph node.
uint8_t decode_matching(const MatchingGraph& graph, const std::vector<uint8_t>& beta);

// Result with the implied data corrections, for the matching-validity checks.
struct MatchingResult {
    uint8_t label = 0;
    double total_weight = 0.0;
    std::vector<int> correction_qubits;  // 1-based, with multiplicity parity applied
};
MatchingResult decode_matching_full(const MatchingGraph& graph, const std::vector<uint8_t>& beta);

}  // namespace hhc

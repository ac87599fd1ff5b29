#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hhc/circuit.hpp"
#include "hhc/code.hpp"

namespace hhc {

// One CX of the Z sub-round CX phase; qubits use the figure's 1-23 numbering.
struct ZCx {
    int step;
    uint32_t control, target;
};

// One CX of the X sub-round CX phase (ancilla is always the control).
struct XCx {
    int step;
    uint32_t ancilla, data;
};

// The gate schedule of the round circuit as literal data. The defaults encode
// the layout figure's arrows; the Z-graph/X-graph first-order edge tables pin
// them down exactly (see tests/test_edge_tables.cpp).
struct CircuitStyle {
    std::vector<ZCx> z_cx;
    std::vector<XCx> x_cx;
    std::array<DeflagRule, 2> deflag_rules;
};

const CircuitStyle& default_style();

enum class InitialState { zero, one, plus, minus };
InitialState initial_state_from_string(const std::string& s);
const char* initial_state_name(InitialState s);
char memory_basis(InitialState s);  // 'Z' or 'X'

// One gauge measurement sub-round (with flags on the Z side), mostly for tests.
ScheduledCircuit gauge_round_circuit(char basis, const CircuitStyle& style = default_style());

// Full memory experiment: preparation sub-round, r rounds of paired gauge
// sub-rounds, transversal readout merged into the last measurement step.
ScheduledCircuit memory_experiment(InitialState state, int rounds,
                                   const CircuitStyle& style = default_style());

}  // namespace hhc

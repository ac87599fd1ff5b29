#pragma once

#include <cstdint>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "hhc/pauli.hpp"

namespace hhc {

enum class ComponentKind {
    cx,
    h,
    s,
    id,
    idm,
    x,
    y,
    z,
    measure,
    initialize,
    reset,
};

const char* kind_name(ComponentKind k);
ComponentKind kind_from_name(const std::string& name);
bool kind_is_unitary(ComponentKind k);

// One noisy circuit element. cx acts on {control, target}; every other kind
// acts on a single qubit. Qubit indices are 0-based internally; the public
// layout uses the 1-23 numbering of the code figure (see circuit_builder).
struct CliffordComponent {
    ComponentKind kind;
    std::vector<uint32_t> qubits;
    int time_step = -1;
    int measurement_id = -1;  // set for measure components only

    static CliffordComponent one_qubit(ComponentKind k, uint32_t q) { return {k, {q}, -1, -1}; }
    static CliffordComponent cx_gate(uint32_t control, uint32_t target) {
        return {ComponentKind::cx, {control, target}, -1, -1};
    }
};

enum class MeasurementPurpose { gauge_z, gauge_x, flag, final_data };

// Deflag rule for one weight-4 gauge complex: if flag_a fired and flag_b did
// not, a virtual Z lands on correct_a (and symmetrically for b). Qubits use
// the figure's 1-based numbering.
struct DeflagRule {
    uint32_t flag_a = 0, flag_b = 0;
    uint32_t correct_a = 0, correct_b = 0;
};

struct MeasurementLabel {
    uint32_t qubit = 0;
    int round = 0;  // 0 = preparation sub-round, 1..r = syndrome rounds, r+1 = final readout
    MeasurementPurpose purpose = MeasurementPurpose::gauge_z;
    int gauge_index = -1;  // index into the basis gauge list for gauge measurements
};

// Time-ordered noisy circuit. Components are grouped into time steps; no qubit
// appears twice within a step. Idle components (id/idm) are materialized
// explicitly so they carry fault locations.
struct ScheduledCircuit {
    uint32_t n_qubits = 0;
    std::vector<CliffordComponent> components;  // flattened, ordered by time step
    std::vector<size_t> step_begin;             // index of first component of each step
    std::map<int, MeasurementLabel> measurement_labels;
    std::string round_schedule;  // e.g. "XZXZX"
    int rounds = 0;
    char memory_basis = 'Z';
    std::array<DeflagRule, 2> deflag_rules{};

    size_t n_steps() const { return step_begin.size(); }
    int n_measurements() const { return int(measurement_labels.size()); }
    void validate() const;  // throws if a qubit collides within a step or a reset is missing
};

// Conjugates p through a unitary component: returns c p c^dagger up to phase.
// Throws for non-unitary kinds (measure/initialize/reset) and for s.
PauliOperator conjugate_through(const CliffordComponent& c, const PauliOperator& p);

}  // namespace hhc

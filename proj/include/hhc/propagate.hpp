#pragma once

#include <cstdint>
#include <vector>

#include "hhc/circuit.hpp"
#include "hhc/code.hpp"
#include "hhc/noise.hpp"

namespace hhc {

struct FrameOutcome {
    std::vector<uint64_t> meas_flips;  // bitset over measurement ids
    uint8_t label = 0;  // bit0: logical-Z readout flipped, bit1: logical-X readout flipped

    bool meas_flip(int m) const { return (meas_flips[m >> 6] >> (m & 63)) & 1u; }
};

// Propagates Pauli faults through the circuit as an X/Z frame, recording which
// measurements flip relative to the error-free run. In deflag mode the flag
// outcomes trigger the virtual Z corrections instead of surfacing as flips.
class FramePropagator {
  public:
    FramePropagator(const ScheduledCircuit& circuit, const CodeDefinition& code, bool deflag);

    // faults must be ordered by (location, before-first); single faults from
    // enumerate_faults and sets from sample_fault_set both satisfy this.
    FrameOutcome propagate(const std::vector<FaultSpec>& faults) const;

    const ScheduledCircuit& circuit() const { return circuit_; }

  private:
    const ScheduledCircuit& circuit_;
    bool deflag_;
    uint32_t logical_z_mask_, logical_x_mask_;  // data-qubit masks
    size_t meas_words_;
    size_t label_snapshot_component_;  // first component of the readout layer
    std::vector<int8_t> flag_slot_;    // qubit -> deflag rule slot (0..3) or -1
    std::vector<int> final_meas_id_;   // qubit -> final readout measurement id or -1
    std::vector<size_t> step_of_component_;
};

}  // namespace hhc

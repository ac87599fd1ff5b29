#include "hhc/propagate.hpp"

#include <bit>
#include <stdexcept>

#include "hhc/layout.hpp"

namespace hhc {

namespace {
uint32_t support_mask(const PauliOperator& p, bool x_half) {
    uint32_t m = 0;
    for (size_t q = 0; q < p.n; q++)
        if (x_half ? p.x(q) : p.z(q)) m |= 1u << q;
    return m;
}
}  // namespace

FramePropagator::FramePropagator(const ScheduledCircuit& circuit, const CodeDefinition& code,
                                 bool deflag)
    : circuit_(circuit), deflag_(deflag) {
    logical_z_mask_ = support_mask(code.logical_z, false);
    logical_x_mask_ = support_mask(code.logical_x, true);
    meas_words_ = (circuit.n_measurements() + 63) / 64;

    flag_slot_.assign(circuit.n_qubits, -1);
    final_meas_id_.assign(circuit.n_qubits, -1);
    if (deflag_) {
        const auto& r = circuit.deflag_rules;
        flag_slot_[layout::idx(r[0].flag_a)] = 0;
        flag_slot_[layout::idx(r[0].flag_b)] = 1;
        flag_slot_[layout::idx(r[1].flag_a)] = 2;
        flag_slot_[layout::idx(r[1].flag_b)] = 3;
    }

    size_t first_final = circuit.components.size();
    for (size_t i = 0; i < circuit.components.size(); i++) {
        const auto& c = circuit.components[i];
        if (c.kind != ComponentKind::measure) continue;
        auto it = circuit.measurement_labels.find(c.measurement_id);
        if (it == circuit.measurement_labels.end()) continue;
        if (it->second.purpose != MeasurementPurpose::final_data) continue;
        if (first_final == circuit.components.size()) first_final = i;
        final_meas_id_[c.qubits[0]] = c.measurement_id;
    }
    step_of_component_.resize(circuit.components.size());
    for (size_t s = 0; s < circuit.step_begin.size(); s++) {
        size_t end = (s + 1 < circuit.step_begin.size()) ? circuit.step_begin[s + 1]
                                                         : circuit.components.size();
        for (size_t i = circuit.step_begin[s]; i < end; i++) step_of_component_[i] = s;
    }
    // The label is read off just before the readout layer; for an X-basis run
    // that is one step earlier, before the data Hadamards.
    label_snapshot_component_ = first_final;
    if (first_final < circuit.components.size() && circuit.memory_basis == 'X') {
        size_t s = step_of_component_[first_final];
        if (s == 0) throw std::logic_error("readout layer at step 0");
        label_snapshot_component_ = circuit.step_begin[s - 1];
    }
}

FrameOutcome FramePropagator::propagate(const std::vector<FaultSpec>& faults) const {
    FrameOutcome out;
    out.meas_flips.assign(meas_words_, 0);
    uint32_t fx = 0, fz = 0;
    uint32_t final_flips = 0;
    uint32_t snap_x = 0, snap_z = 0;
    bool snapshot_done = false;

    size_t fi = 0;
    const size_t nf = faults.size();
    uint8_t flag_fired = 0;
    size_t cur_step = 0;

    auto set_flip = [&](int m) { out.meas_flips[m >> 6] ^= uint64_t(1) << (m & 63); };
    auto apply_fault = [&](const FaultSpec& f, const CliffordComponent& c) {
        for (size_t leg = 0; leg < c.qubits.size(); leg++) {
            uint32_t bit = 1u << c.qubits[leg];
            if (f.x_on(leg)) fx ^= bit;
            if (f.z_on(leg)) fz ^= bit;
        }
    };
    // Virtual Z corrections: mid-circuit they join the frame; fired by the
    // final merged measurement step they flip the already-recorded readout.
    auto flush_flags = [&](bool at_end) {
        if (!flag_fired) return;
        const auto& rules = circuit_.deflag_rules;
        for (int rix = 0; rix < 2; rix++) {
            bool a = flag_fired & (1u << (2 * rix)), b = flag_fired & (1u << (2 * rix + 1));
            uint32_t q = a && !b ? rules[rix].correct_a : (b && !a ? rules[rix].correct_b : 0);
            if (!q) continue;
            uint32_t qi = layout::idx(q);
            if (at_end) {
                if (final_meas_id_[qi] >= 0 && circuit_.memory_basis == 'X') {
                    set_flip(final_meas_id_[qi]);
                    final_flips ^= 1u << qi;
                }
            } else {
                fz ^= 1u << qi;
            }
        }
        flag_fired = 0;
    };

    for (size_t i = 0; i < circuit_.components.size(); i++) {
        if (step_of_component_[i] != cur_step) {
            flush_flags(false);
            cur_step = step_of_component_[i];
        }
        if (i == label_snapshot_component_) {
            snap_x = fx;
            snap_z = fz;
            snapshot_done = true;
        }
        const auto& c = circuit_.components[i];
        while (fi < nf && faults[fi].location == i && faults[fi].before)
            apply_fault(faults[fi++], c);
        switch (c.kind) {
            case ComponentKind::h: {
                uint32_t bit = 1u << c.qubits[0];
                bool xb = fx & bit, zb = fz & bit;
                fx = (fx & ~bit) | (zb ? bit : 0u);
                fz = (fz & ~bit) | (xb ? bit : 0u);
                break;
            }
            case ComponentKind::s: {
                uint32_t bit = 1u << c.qubits[0];
                if (fx & bit) fz ^= bit;
                break;
            }
            case ComponentKind::cx: {
                uint32_t cb = 1u << c.qubits[0], tb = 1u << c.qubits[1];
                if (fx & cb) fx ^= tb;
                if (fz & tb) fz ^= cb;
                break;
            }
            case ComponentKind::measure: {
                uint32_t bit = 1u << c.qubits[0];
                if (fx & bit) {
                    set_flip(c.measurement_id);
                    if (deflag_ && flag_slot_[c.qubits[0]] >= 0)
                        flag_fired |= uint8_t(1u << flag_slot_[c.qubits[0]]);
                    if (final_meas_id_[c.qubits[0]] == c.measurement_id)
                        final_flips ^= bit;
                }
                break;
            }
            case ComponentKind::reset:
            case ComponentKind::initialize: {
                uint32_t bit = 1u << c.qubits[0];
                fx &= ~bit;
                fz &= ~bit;
                break;
            }
            default:
                break;  // id, idm, x, y, z leave the frame unchanged
        }
        while (fi < nf && faults[fi].location == i && !faults[fi].before)
            apply_fault(faults[fi++], c);
    }
    flush_flags(true);
    if (fi != nf) throw std::invalid_argument("faults not ordered by location");

    if (circuit_.memory_basis == 'Z') {
        out.label = uint8_t((std::popcount(final_flips & logical_z_mask_) & 1) |
                            ((snapshot_done ? std::popcount(snap_z & logical_x_mask_) & 1 : 0) << 1));
    } else {
        out.label = uint8_t(((std::popcount(final_flips & logical_x_mask_) & 1) << 1) |
                            (snapshot_done ? std::popcount(snap_x & logical_z_mask_) & 1 : 0));
    }
    return out;
}

}  // namespace hhc

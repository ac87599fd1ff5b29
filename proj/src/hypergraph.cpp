#include "hhc/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hhc/layout.hpp"
#include "hhc/tableau.hpp"

namespace hhc {

std::string ErrorSensitiveEvent::name() const {
    if (kind == EventKind::flag)
        return "f" + std::to_string(stabilizer_index) + "^" + std::to_string(round);
    std::string b(1, char(tolower(basis)));
    return b + std::to_string(stabilizer_index) + "^" + std::to_string(round);
}

namespace {

struct MeasIndex {
    // gauge measurement ids by [basis][block ordinal][gauge index]
    std::map<int, std::vector<int>> z_blocks, x_blocks;  // ordinal -> ids by gauge index
    std::vector<int> final_data;                         // by data qubit 0..8
    std::vector<std::pair<int, int>> flags;              // (round, measurement id)
};

MeasIndex index_measurements(const ScheduledCircuit& c) {
    MeasIndex ix;
    ix.final_data.assign(9, -1);
    for (const auto& [id, lab] : c.measurement_labels) {
        switch (lab.purpose) {
            case MeasurementPurpose::gauge_z: {
                auto& v = ix.z_blocks[lab.round];
                v.resize(4, -1);
                v[lab.gauge_index] = id;
                break;
            }
            case MeasurementPurpose::gauge_x: {
                auto& v = ix.x_blocks[lab.round];
                v.resize(6, -1);
                v[lab.gauge_index] = id;
                break;
            }
            case MeasurementPurpose::final_data:
                ix.final_data[lab.qubit] = id;
                break;
            case MeasurementPurpose::flag:
                ix.flags.push_back({lab.round, id});
                break;
        }
    }
    return ix;
}

std::vector<int> stab_support(const PauliOperator& p, bool x_type) {
    std::vector<int> qs;
    for (size_t q = 0; q < p.n; q++)
        if (x_type ? p.x(q) : p.z(q)) qs.push_back(int(q));
    return qs;
}

}  // namespace

std::vector<ErrorSensitiveEvent> define_events(const ScheduledCircuit& circuit,
                                               const CodeDefinition& code, bool deflag) {
    MeasIndex ix = index_measurements(circuit);
    char basis = circuit.memory_basis;
    int r = circuit.rounds;
    std::vector<ErrorSensitiveEvent> events;

    auto gauge_sources = [&](char type, int ordinal, int stab) {
        std::vector<int> out;
        const auto& groups = (type == 'Z') ? code.stab_z_gauges : code.stab_x_gauges;
        const auto& blocks = (type == 'Z') ? ix.z_blocks : ix.x_blocks;
        auto it = blocks.find(ordinal);
        if (it == blocks.end()) throw std::logic_error("missing gauge block");
        for (int g : groups[stab]) {
            if (it->second.at(g) < 0) throw std::logic_error("missing gauge measurement");
            out.push_back(it->second[g]);
        }
        return out;
    };

    // Memory-basis stabilizers: absolute first layer, diffs, then the layer
    // recomputed from the transversal readout.
    int n_stabs = (basis == 'Z') ? 2 : 4;
    const auto& stabs = (basis == 'Z') ? code.stab_z : code.stab_x;
    for (int s = 0; s < n_stabs; s++) {
        for (int t = 1; t <= r + 1; t++) {
            ErrorSensitiveEvent e;
            e.basis = basis;
            e.stabilizer_index = s;
            e.round = t;
            if (t <= r) {
                e.source_measurements = gauge_sources(basis, t, s);
                if (t > 1) {
                    auto prev = gauge_sources(basis, t - 1, s);
                    e.source_measurements.insert(e.source_measurements.end(), prev.begin(),
                                                 prev.end());
                }
            } else {
                for (int q : stab_support(stabs[s], basis == 'X'))
                    e.source_measurements.push_back(ix.final_data.at(q));
                if (r > 0) {
                    auto prev = gauge_sources(basis, r, s);
                    e.source_measurements.insert(e.source_measurements.end(), prev.begin(),
                                                 prev.end());
                }
            }
            events.push_back(std::move(e));
        }
    }

    // Other-basis stabilizers: consecutive-block differences only.
    char other = (basis == 'Z') ? 'X' : 'Z';
    int n_other = (other == 'Z') ? 2 : 4;
    int other_blocks = int(((other == 'Z') ? ix.z_blocks : ix.x_blocks).size());
    for (int s = 0; s < n_other; s++) {
        for (int t = 1; t < other_blocks; t++) {
            ErrorSensitiveEvent e;
            e.basis = other;
            e.stabilizer_index = s;
            e.round = t;
            e.source_measurements = gauge_sources(other, t, s);
            auto nxt = gauge_sources(other, t + 1, s);
            e.source_measurements.insert(e.source_measurements.end(), nxt.begin(), nxt.end());
            events.push_back(std::move(e));
        }
    }

    if (!deflag) {
        for (auto& [round, id] : ix.flags) {
            ErrorSensitiveEvent e;
            e.kind = EventKind::flag;
            e.basis = 'Z';
            e.stabilizer_index = int(circuit.measurement_labels.at(id).qubit) + 1;
            e.round = round;
            e.source_measurements = {id};
            events.push_back(std::move(e));
        }
    }

    // Predictor constants via the tableau; also validates determinism.
    Tableau tab(circuit.n_qubits);
    for (const auto& c : circuit.components) tab.apply(c);
    for (auto& e : events) {
        bool det = false;
        OutcomeForm f = tab.reduce_parity(e.source_measurements, &det);
        if (!det)
            throw std::logic_error("event " + e.name() + " is not deterministic");
        e.predictor_constant = f.constant;
    }

    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        int ma = *std::max_element(a.source_measurements.begin(), a.source_measurements.end());
        int mb = *std::max_element(b.source_measurements.begin(), b.source_measurements.end());
        return ma < mb;
    });
    for (size_t i = 0; i < events.size(); i++) events[i].id = int(i);
    return events;
}

std::vector<uint8_t> events_from_outcome(const DecodingHypergraph& hg, const FrameOutcome& out) {
    std::vector<uint8_t> bits(hg.events.size(), 0);
    for (size_t i = 0; i < hg.events.size(); i++) {
        int acc = 0;
        for (int m : hg.events[i].source_measurements) acc ^= out.meas_flip(m) ? 1 : 0;
        bits[i] = uint8_t(acc);
    }
    return bits;
}

std::vector<Hyperedge> merge_hyperedges(std::vector<Hyperedge> raw, MergeMode mode) {
    std::map<std::pair<std::vector<int>, uint8_t>, Hyperedge> groups;
    for (auto& h : raw) {
        auto key = std::make_pair(h.events, h.logical_label);
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(std::move(key), std::move(h));
        } else {
            Hyperedge& g = it->second;
            if (mode == MergeMode::exact_xor)
                g.probability = g.probability + h.probability - 2.0 * g.probability * h.probability;
            else
                g.probability += h.probability;
            g.fault_witnesses.insert(g.fault_witnesses.end(), h.fault_witnesses.begin(),
                                     h.fault_witnesses.end());
        }
    }
    std::vector<Hyperedge> out;
    out.reserve(groups.size());
    for (auto& [k, h] : groups) out.push_back(std::move(h));
    return out;
}

DecodingHypergraph build_hypergraph(const ScheduledCircuit& circuit, const NoiseParams& params,
                                    const CodeDefinition& code, bool deflag, MergeMode mode,
                                    bool keep_witnesses) {
    DecodingHypergraph hg;
    hg.memory_basis = circuit.memory_basis;
    hg.rounds = circuit.rounds;
    hg.deflagged = deflag;
    hg.events = define_events(circuit, code, deflag);

    FramePropagator prop(circuit, code, deflag);
    auto faults = enumerate_faults(circuit, params);
    std::vector<Hyperedge> raw;
    raw.reserve(faults.size());
    for (const auto& f : faults) {
        FrameOutcome out = prop.propagate({f});
        Hyperedge h;
        auto bits = events_from_outcome(hg, out);
        for (size_t i = 0; i < bits.size(); i++)
            if (bits[i]) h.events.push_back(int(i));
        h.probability = f.probability;
        h.logical_label = out.label;
        if (h.events.empty() && h.logical_label != 0) {
            const auto& c = circuit.components[f.location];
            throw std::runtime_error(
                "fault-tolerance violation: undetected logical fault at component " +
                std::to_string(f.location) + " (" + kind_name(c.kind) + ", pauli " +
                std::to_string(f.pauli_index) + ")");
        }
        if (h.events.empty() && h.logical_label == 0) continue;  // harmless fault
        if (keep_witnesses) h.fault_witnesses.push_back(f);
        raw.push_back(std::move(h));
    }
    hg.hyperedges = merge_hyperedges(std::move(raw), mode);

    // Layer locality: hyperedges never span more than two adjacent layers.
    for (const auto& h : hg.hyperedges) {
        int lo = hg.events[h.events.front()].round, hi = lo;
        for (int e : h.events) {
            lo = std::min(lo, hg.events[e].round);
            hi = std::max(hi, hg.events[e].round);
        }
        if (hi - lo > 1)
            throw std::runtime_error("hyperedge spans more than two event layers");
    }
    return hg;
}

std::vector<uint32_t> deflag_rules(const std::array<DeflagRule, 2>& rules,
                                   const std::vector<std::pair<uint32_t, bool>>& flag_outcomes) {
    auto fired = [&](uint32_t q) {
        for (const auto& [fq, bit] : flag_outcomes)
            if (fq == q) return bit;
        return false;
    };
    std::vector<uint32_t> corrections;
    for (const auto& r : rules) {
        bool a = fired(r.flag_a), b = fired(r.flag_b);
        if (a && !b) corrections.push_back(r.correct_a);
        if (b && !a) corrections.push_back(r.correct_b);
    }
    return corrections;
}

std::vector<uint8_t> events_from_shot(const DecodingHypergraph& hg, const ScheduledCircuit& circuit,
                                      const std::vector<uint8_t>& raw_bits) {
    if (int(raw_bits.size()) != circuit.n_measurements())
        throw std::invalid_argument("raw_bits length does not match measurement count");

    // Virtual corrections per Z sub-round when deflagged.
    std::vector<std::pair<int, uint32_t>> corrections;  // (z ordinal, qubit 1-based)
    if (hg.deflagged) {
        std::map<int, std::vector<std::pair<uint32_t, bool>>> flags_by_round;
        for (const auto& [id, lab] : circuit.measurement_labels)
            if (lab.purpose == MeasurementPurpose::flag)
                flags_by_round[lab.round].push_back({lab.qubit + 1, raw_bits[id] != 0});
        for (auto& [round, outs] : flags_by_round)
            for (uint32_t q : deflag_rules(circuit.deflag_rules, outs))
                corrections.push_back({round, q});
    }

    auto corrected_bit = [&](int m) -> int {
        int v = raw_bits[m] ? 1 : 0;
        if (corrections.empty()) return v;
        const auto& lab = circuit.measurement_labels.at(m);
        for (auto& [zr, q] : corrections) {
            uint32_t qi = q - 1;
            if (lab.purpose == MeasurementPurpose::gauge_x) {
                const auto& pair = layout::kXGauges[lab.gauge_index];
                if (qi + 1 != pair[1] && qi + 1 != pair[2]) continue;
                // does this correction precede x sub-round lab.round?
                bool after = circuit.memory_basis == 'Z' ? (lab.round > zr) : (lab.round >= zr);
                if (after) v ^= 1;
            } else if (lab.purpose == MeasurementPurpose::final_data && circuit.memory_basis == 'X') {
                if (lab.qubit == qi) v ^= 1;
            }
        }
        return v;
    };

    std::vector<uint8_t> bits(hg.events.size(), 0);
    for (size_t i = 0; i < hg.events.size(); i++) {
        int acc = hg.events[i].predictor_constant ? 1 : 0;
        for (int m : hg.events[i].source_measurements) acc ^= corrected_bit(m);
        bits[i] = uint8_t(acc);
    }
    return bits;
}

}  // namespace hhc

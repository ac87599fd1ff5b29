#include "hhc/circuit_builder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hhc/layout.hpp"

namespace hhc {

using namespace layout;

namespace {

std::vector<ZCx> default_z_cx() {
    // Steps 0..10. Weight-2 gauges latch first; the weight-4 complexes collect
    // through the carrier chains, bouncing the far corner (3 resp. 7) off its
    // neighbour X-ancilla. Vertex names per layout.hpp.
    return {
        {0, 1, kA12},  {0, 9, kA89},  {0, 8, kXA58}, {0, 6, kXA36}, {0, 4, kXA47},
        {1, 2, kA12},  {1, 8, kA89},  {1, kXA36, 3}, {1, kXA47, 7}, {1, kHubT, kPendT},
        {1, kHubB, kPendB},
        {2, 2, kXA25}, {2, 5, kXA58},
        {3, 5, kXA25}, {3, kXA58, kCarB},
        {4, kXA25, kCarT}, {4, kCarB, kHubB},
        {5, kCarT, kHubT}, {5, kCarB, kXA58},
        {6, kCarT, kXA25}, {6, kHubB, kCarB},
        {7, kHubT, kCarT}, {7, 7, kHubB},
        {8, 3, kHubT},  {8, kXA47, 7},
        {9, kXA36, 3},  {9, 4, kXA47},
        {10, 6, kXA36},
    };
}

std::vector<XCx> default_x_cx() {
    // Two steps; on the shared middle-row qubits the lower gauge couples first.
    return {
        {0, kXA14, 1}, {0, kXA25, 2}, {0, kXA36, 3}, {0, kXA47, 4}, {0, kXA58, 5}, {0, kXA69, 6},
        {1, kXA14, 4}, {1, kXA25, 5}, {1, kXA36, 6}, {1, kXA47, 7}, {1, kXA58, 8}, {1, kXA69, 9},
    };
}

std::array<DeflagRule, 2> default_deflag_rules() {
    return {DeflagRule{kXA25, kXA36, 2, 6}, DeflagRule{kXA47, kXA58, 7, 8}};
}

constexpr std::array<uint32_t, 12> kZBlockMeasured = {kA12, kHubT, kHubB, kA89,  kXA25, kXA36,
                                                      kXA47, kXA58, kCarT, kPendT, kCarB, kPendB};
constexpr std::array<uint32_t, 8> kZOnlyAncillas = {kA12, kHubT, kHubB, kA89,
                                                    kCarT, kPendT, kCarB, kPendB};
constexpr std::array<uint32_t, 6> kXAncillas = {kXA14, kXA25, kXA36, kXA47, kXA58, kXA69};

int z_gauge_index(uint32_t q) {
    if (q == kA12) return 0;
    if (q == kHubT) return 1;
    if (q == kHubB) return 2;
    if (q == kA89) return 3;
    return -1;
}

int x_gauge_index(uint32_t q) {
    for (size_t i = 0; i < kXGauges.size(); i++)
        if (kXGauges[i][0] == q) return int(i);
    return -1;
}

class Builder {
  public:
    explicit Builder(const CircuitStyle& style) : style_(style) { circ_.n_qubits = kQubits; }

    ScheduledCircuit build_memory(InitialState state, int rounds);
    ScheduledCircuit build_single(char basis);

  private:
    const CircuitStyle& style_;
    ScheduledCircuit circ_;
    std::set<uint32_t> active_;
    std::vector<CliffordComponent> step_;
    std::set<uint32_t> busy_;
    bool step_has_meas_ = false;
    int next_meas_id_ = 0;
    int z_ordinal_ = 0, x_ordinal_ = 0;
    int final_round_tag_ = 0;

    void stage(CliffordComponent c);
    void commit_step();
    void measure_qubit(uint32_t q, MeasurementLabel label);
    void stage_final_data_measures();
    // final_merge: fold the transversal readout into this block's measurement
    // step and skip the trailing reset. extra_inits: ancillas of the other
    // sub-round type, initialized in this block's reset step.
    void z_block(bool final_merge, bool data_h_first, const std::vector<uint32_t>& extra_inits);
    void x_block(bool final_merge, const std::vector<uint32_t>& extra_inits);
};

void Builder::stage(CliffordComponent c) {
    for (auto& q : c.qubits) {
        q = idx(q);
        if (!busy_.insert(q).second)
            throw std::runtime_error("schedule collision on qubit " + std::to_string(q + 1));
    }
    if (c.kind == ComponentKind::measure || c.kind == ComponentKind::reset) step_has_meas_ = true;
    step_.push_back(std::move(c));
}

void Builder::commit_step() {
    ComponentKind idle = step_has_meas_ ? ComponentKind::idm : ComponentKind::id;
    std::vector<CliffordComponent> idles;
    for (uint32_t q : active_)
        if (!busy_.count(q)) idles.push_back({idle, {q}, -1, -1});
    circ_.step_begin.push_back(circ_.components.size());
    int t = int(circ_.step_begin.size()) - 1;
    auto emit = [&](CliffordComponent& c) {
        c.time_step = t;
        if (c.kind == ComponentKind::initialize) active_.insert(c.qubits[0]);
        circ_.components.push_back(c);
    };
    for (auto& c : step_) emit(c);
    for (auto& c : idles) emit(c);
    step_.clear();
    busy_.clear();
    step_has_meas_ = false;
}

void Builder::measure_qubit(uint32_t q, MeasurementLabel label) {
    CliffordComponent c{ComponentKind::measure, {q}, -1, next_meas_id_};
    label.qubit = q;
    circ_.measurement_labels[next_meas_id_] = label;
    next_meas_id_++;
    stage(std::move(c));
}

void Builder::stage_final_data_measures() {
    for (uint32_t q = 1; q <= 9; q++) {
        MeasurementLabel lab;
        lab.round = final_round_tag_;
        lab.purpose = MeasurementPurpose::final_data;
        measure_qubit(q, lab);
    }
}

void Builder::z_block(bool final_merge, bool data_h_first, const std::vector<uint32_t>& extra_inits) {
    z_ordinal_++;
    int n_steps = 0;
    for (const auto& zc : style_.z_cx) n_steps = std::max(n_steps, zc.step + 1);
    for (int s = 0; s < n_steps; s++) {
        for (const auto& zc : style_.z_cx)
            if (zc.step == s) stage(CliffordComponent::cx_gate(zc.control, zc.target));
        commit_step();
    }
    if (final_merge && data_h_first) {
        for (uint32_t q = 1; q <= 9; q++) stage(CliffordComponent::one_qubit(ComponentKind::h, q));
        commit_step();
    }
    for (uint32_t q : kZBlockMeasured) {
        MeasurementLabel lab;
        lab.round = z_ordinal_;
        int g = z_gauge_index(q);
        lab.purpose = g >= 0 ? MeasurementPurpose::gauge_z : MeasurementPurpose::flag;
        lab.gauge_index = g;
        measure_qubit(q, lab);
    }
    if (final_merge) stage_final_data_measures();
    commit_step();
    if (!final_merge) {
        for (uint32_t q : kZBlockMeasured) stage({ComponentKind::reset, {q}, -1, -1});
        for (uint32_t q : extra_inits) stage({ComponentKind::initialize, {q}, -1, -1});
        commit_step();
    }
}

void Builder::x_block(bool final_merge, const std::vector<uint32_t>& extra_inits) {
    x_ordinal_++;
    for (uint32_t a : kXAncillas) stage(CliffordComponent::one_qubit(ComponentKind::h, a));
    commit_step();
    int n_steps = 0;
    for (const auto& xc : style_.x_cx) n_steps = std::max(n_steps, xc.step + 1);
    for (int s = 0; s < n_steps; s++) {
        for (const auto& xc : style_.x_cx)
            if (xc.step == s) stage(CliffordComponent::cx_gate(xc.ancilla, xc.data));
        commit_step();
    }
    for (uint32_t a : kXAncillas) stage(CliffordComponent::one_qubit(ComponentKind::h, a));
    commit_step();
    for (uint32_t a : kXAncillas) {
        MeasurementLabel lab;
        lab.round = x_ordinal_;
        lab.purpose = MeasurementPurpose::gauge_x;
        lab.gauge_index = x_gauge_index(a);
        measure_qubit(a, lab);
    }
    if (final_merge) stage_final_data_measures();
    commit_step();
    if (!final_merge) {
        for (uint32_t a : kXAncillas) stage({ComponentKind::reset, {a}, -1, -1});
        for (uint32_t q : extra_inits) stage({ComponentKind::initialize, {q}, -1, -1});
        commit_step();
    }
}

ScheduledCircuit Builder::build_memory(InitialState state, int rounds) {
    if (rounds < 0) throw std::invalid_argument("rounds must be non-negative");
    char basis = memory_basis(state);
    circ_.memory_basis = basis;
    circ_.rounds = rounds;
    circ_.deflag_rules = style_.deflag_rules;

    std::string sched = (basis == 'Z') ? "X" : "Z";
    for (int i = 0; i < rounds; i++) sched += (basis == 'Z') ? "ZX" : "XZ";
    circ_.round_schedule = sched;
    final_round_tag_ = rounds + 2;  // one past the last same-basis layer

    std::vector<uint32_t> first(9);
    for (uint32_t q = 1; q <= 9; q++) first[q - 1] = q;
    std::vector<uint32_t> late_anc;
    if (sched[0] == 'X') {
        first.insert(first.end(), kXAncillas.begin(), kXAncillas.end());
        late_anc.assign(kZOnlyAncillas.begin(), kZOnlyAncillas.end());
    } else {
        first.insert(first.end(), kZBlockMeasured.begin(), kZBlockMeasured.end());
        late_anc.assign({kXA14, kXA69});
    }
    for (uint32_t q : first) stage({ComponentKind::initialize, {q}, -1, -1});
    commit_step();

    if (state == InitialState::one) {
        for (uint32_t q = 1; q <= 9; q++) stage(CliffordComponent::one_qubit(ComponentKind::x, q));
        commit_step();
    } else if (state == InitialState::plus || state == InitialState::minus) {
        for (uint32_t q = 1; q <= 9; q++) stage(CliffordComponent::one_qubit(ComponentKind::h, q));
        commit_step();
        if (state == InitialState::minus) {
            for (uint32_t q = 1; q <= 9; q++)
                stage(CliffordComponent::one_qubit(ComponentKind::z, q));
            commit_step();
        }
    }

    for (size_t b = 0; b < sched.size(); b++) {
        bool final_block = (b + 1 == sched.size());
        std::vector<uint32_t> inits = (b == 0) ? late_anc : std::vector<uint32_t>{};
        if (sched[b] == 'Z')
            z_block(final_block, basis == 'X', inits);
        else
            x_block(final_block, inits);
    }
    circ_.validate();
    return circ_;
}

ScheduledCircuit Builder::build_single(char basis) {
    std::vector<uint32_t> qs(9);
    for (uint32_t q = 1; q <= 9; q++) qs[q - 1] = q;
    if (basis == 'Z')
        qs.insert(qs.end(), kZBlockMeasured.begin(), kZBlockMeasured.end());
    else
        qs.insert(qs.end(), kXAncillas.begin(), kXAncillas.end());
    circ_.deflag_rules = style_.deflag_rules;
    for (uint32_t q : qs) stage({ComponentKind::initialize, {q}, -1, -1});
    commit_step();
    final_round_tag_ = 2;
    if (basis == 'Z')
        z_block(false, false, {});
    else
        x_block(false, {});
    circ_.round_schedule = std::string(1, basis);
    circ_.memory_basis = basis;
    circ_.validate();
    return circ_;
}

}  // namespace

const CircuitStyle& default_style() {
    static const CircuitStyle style{default_z_cx(), default_x_cx(), default_deflag_rules()};
    return style;
}

InitialState initial_state_from_string(const std::string& s) {
    if (s == "0" || s == "zero") return InitialState::zero;
    if (s == "1" || s == "one") return InitialState::one;
    if (s == "+" || s == "plus") return InitialState::plus;
    if (s == "-" || s == "minus") return InitialState::minus;
    throw std::invalid_argument("unknown initial state: " + s);
}

const char* initial_state_name(InitialState s) {
    switch (s) {
        case InitialState::zero: return "0";
        case InitialState::one: return "1";
        case InitialState::plus: return "+";
        case InitialState::minus: return "-";
    }
    return "?";
}

char memory_basis(InitialState s) {
    return (s == InitialState::zero || s == InitialState::one) ? 'Z' : 'X';
}

ScheduledCircuit gauge_round_circuit(char basis, const CircuitStyle& style) {
    if (basis != 'Z' && basis != 'X') throw std::invalid_argument("basis must be 'Z' or 'X'");
    Builder b(style);
    return b.build_single(basis);
}

ScheduledCircuit memory_experiment(InitialState state, int rounds, const CircuitStyle& style) {
    Builder b(style);
    return b.build_memory(state, rounds);
}

}  // namespace hhc

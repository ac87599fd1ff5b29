#include "hhc/noise.hpp"

#include <stdexcept>

namespace hhc {

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

const std::array<ComponentKind, 11>& NoiseParams::vector_order() {
    static const std::array<ComponentKind, 11> order = {
        ComponentKind::cx, ComponentKind::h,   ComponentKind::s,       ComponentKind::id,
        ComponentKind::idm, ComponentKind::x,  ComponentKind::y,       ComponentKind::z,
        ComponentKind::measure, ComponentKind::initialize, ComponentKind::reset};
    return order;
}

NoiseParams::NoiseParams() {
    for (auto k : vector_order()) p[k] = 0.0;
}

NoiseParams NoiseParams::uniform_zero() { return NoiseParams(); }

NoiseParams NoiseParams::from_vector(const std::array<double, 11>& v) {
    NoiseParams np;
    for (size_t i = 0; i < 11; i++) np.set(vector_order()[i], v[i]);
    return np;
}

double NoiseParams::at(ComponentKind k) const {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument(std::string("no noise entry for ") + kind_name(k));
    return it->second;
}

void NoiseParams::set(ComponentKind k, double value) {
    if (!(value >= 0.0 && value <= 0.5))
        throw std::invalid_argument(std::string("probability for ") + kind_name(k) +
                                    " outside [0, 0.5]");
    p[k] = value;
}

NoiseParams NoiseParams::scaled(double factor) const {
    NoiseParams np;
    for (auto& [k, v] : p) np.set(k, v * factor);
    return np;
}

bool FaultSpec::x_on(size_t leg) const {
    if (pauli_index == 0) return leg == 0;  // bit flip
    if (source_kind == ComponentKind::cx) return (pauli_index >> (2 * leg)) & 1;
    return pauli_index & 1;
}

bool FaultSpec::z_on(size_t leg) const {
    if (pauli_index == 0) return false;
    if (source_kind == ComponentKind::cx) return (pauli_index >> (2 * leg + 1)) & 1;
    return (pauli_index >> 1) & 1;
}

static int fault_arity(ComponentKind k) {
    switch (k) {
        case ComponentKind::cx: return 15;
        case ComponentKind::h:
        case ComponentKind::s:
        case ComponentKind::id:
        case ComponentKind::idm:
        case ComponentKind::x:
        case ComponentKind::y:
        case ComponentKind::z: return 3;
        case ComponentKind::measure:
        case ComponentKind::initialize:
        case ComponentKind::reset: return 1;
    }
    return 0;
}

std::vector<FaultSpec> enumerate_faults(const ScheduledCircuit& circuit, const NoiseParams& params) {
    std::vector<FaultSpec> out;
    for (size_t i = 0; i < circuit.components.size(); i++) {
        const auto& c = circuit.components[i];
        double pc = params.at(c.kind);
        if (pc == 0.0) continue;
        int n = fault_arity(c.kind);
        for (int j = 1; j <= n; j++) {
            FaultSpec f;
            f.location = i;
            f.source_kind = c.kind;
            f.before = (c.kind == ComponentKind::measure);
            f.pauli_index = (n == 1) ? 0 : uint8_t(j);
            f.probability = pc / n;
            out.push_back(f);
        }
    }
    return out;
}

std::vector<FaultSpec> sample_fault_set(const ScheduledCircuit& circuit, const NoiseParams& params,
                                        uint64_t seed) {
    std::vector<FaultSpec> out;
    Rng rng(seed);
    for (size_t i = 0; i < circuit.components.size(); i++) {
        const auto& c = circuit.components[i];
        double pc = params.at(c.kind);
        if (pc == 0.0) {
            continue;
        }
        if (rng.uniform() >= pc) continue;
        int n = fault_arity(c.kind);
        FaultSpec f;
        f.location = i;
        f.source_kind = c.kind;
        f.before = (c.kind == ComponentKind::measure);
        f.pauli_index = (n == 1) ? 0 : uint8_t(1 + rng.next() % n);
        f.probability = pc / n;
        out.push_back(f);
    }
    return out;
}

double rb_to_depolarizing(double alpha, int n_qubits) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha outside [0, 1]");
    if (n_qubits != 1 && n_qubits != 2) throw std::invalid_argument("n_qubits must be 1 or 2");
    double dim = (n_qubits == 1) ? 2.0 : 4.0;
    return (dim - 1.0) / dim * (1.0 - alpha);
}

}  // namespace hhc

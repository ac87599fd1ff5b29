#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hhc/circuit.hpp"

namespace hhc {

// Per-component fault probabilities over the eleven component kinds
// {cx, h, s, id, idm, x, y, z, measure, initialize, reset}. Every probability
// must lie in [0, 0.5]; analytic edge weights log((1-p)/p) stay non-negative.
struct NoiseParams {
    std::map<ComponentKind, double> p;

    NoiseParams();
    static NoiseParams uniform_zero();
    // Order follows the supplement's parameter vector:
    // [cx, h, s, id, idm, x, y, z, measure, initialize, reset].
    static NoiseParams from_vector(const std::array<double, 11>& v);
    static const std::array<ComponentKind, 11>& vector_order();

    double at(ComponentKind k) const;
    void set(ComponentKind k, double value);  // throws outside [0, 0.5]
    NoiseParams scaled(double factor) const;
};

// One elementary fault: a Pauli (or bit flip) attached to a circuit component.
// Unitary faults follow the gate; measurement flips precede the measurement;
// initialize/reset flips follow the ideal preparation.
struct FaultSpec {
    size_t location = 0;  // index into circuit.components
    ComponentKind source_kind = ComponentKind::id;
    bool before = false;        // true only for measurement flips
    uint8_t pauli_index = 0;    // 1..3 one-qubit (X,Z,Y), 1..15 two-qubit, 0 for flips
    double probability = 0.0;

    // Pauli acting on the component's qubits: (x,z) bit pairs per qubit.
    bool x_on(size_t leg) const;
    bool z_on(size_t leg) const;
};

// Enumerates every fault of the model: 3 per one-qubit unitary (p/3 each), 15
// per cx (p/15), one X flip per measure/initialize/reset (p). Kinds at p=0
// produce nothing. Throws if a kind present in the circuit has no entry.
std::vector<FaultSpec> enumerate_faults(const ScheduledCircuit& circuit, const NoiseParams& params);

// Independent per-component sampling; reproducible for a fixed seed.
std::vector<FaultSpec> sample_fault_set(const ScheduledCircuit& circuit, const NoiseParams& params,
                                        uint64_t seed);

// Depolarizing parameter alpha -> error per gate, eps = (2^n-1)/2^n (1-alpha).
double rb_to_depolarizing(double alpha, int n_qubits);

// splitmix64; used to derive per-shot streams from (seed, shot index).
uint64_t mix64(uint64_t x);

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        return mix64(state);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
};

}  // namespace hhc

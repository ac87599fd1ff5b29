#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hhc {

// Phase-free n-qubit Pauli in binary symplectic form. Bit q of x_bits is set
// when the operator acts as X (or Y) on qubit q, bit q of z_bits when it acts
// as Z (or Y). Global phase is not tracked.
struct PauliOperator {
    std::vector<uint64_t> x_bits;
    std::vector<uint64_t> z_bits;
    size_t n = 0;

    PauliOperator() = default;
    explicit PauliOperator(size_t n_qubits);

    static PauliOperator identity(size_t n_qubits) { return PauliOperator(n_qubits); }
    // Parses strings like "X1", "Z1Z2", "Y3X7" with 1-based qubit indices.
    static PauliOperator from_string(const std::string& s, size_t n_qubits);

    bool x(size_t q) const { return (x_bits[q >> 6] >> (q & 63)) & 1u; }
    bool z(size_t q) const { return (z_bits[q >> 6] >> (q & 63)) & 1u; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    bool is_identity() const;
    size_t weight() const;
    std::string str() const;

    bool operator==(const PauliOperator& o) const {
        return n == o.n && x_bits == o.x_bits && z_bits == o.z_bits;
    }
};

// Phase-free product (bitwise XOR of both halves). Throws on length mismatch.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

// True iff the symplectic inner product <p.x,q.z> + <p.z,q.x> vanishes mod 2.
bool commutes(const PauliOperator& p, const PauliOperator& q);

}  // namespace hhc

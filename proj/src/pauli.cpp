#include "hhc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace hhc {

PauliOperator::PauliOperator(size_t n_qubits)
    : x_bits((n_qubits + 63) / 64, 0), z_bits((n_qubits + 63) / 64, 0), n(n_qubits) {}

void PauliOperator::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t(1) << (q & 63);
    if (v)
        x_bits[q >> 6] |= mask;
    else
        x_bits[q >> 6] &= ~mask;
}

void PauliOperator::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t(1) << (q & 63);
    if (v)
        z_bits[q >> 6] |= mask;
    else
        z_bits[q >> 6] &= ~mask;
}

bool PauliOperator::is_identity() const {
    for (auto w : x_bits)
        if (w) return false;
    for (auto w : z_bits)
        if (w) return false;
    return true;
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x_bits.size(); i++) w += std::popcount(x_bits[i] | z_bits[i]);
    return w;
}

std::string PauliOperator::str() const {
    if (is_identity()) return "I";
    std::string s;
    for (size_t q = 0; q < n; q++) {
        bool xb = x(q), zb = z(q);
        if (!xb && !zb) continue;
        s += xb ? (zb ? 'Y' : 'X') : 'Z';
        s += std::to_string(q + 1);
    }
    return s;
}

PauliOperator PauliOperator::from_string(const std::string& s, size_t n_qubits) {
    PauliOperator p(n_qubits);
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i++];
        if (c == 'I') continue;
        if (c != 'X' && c != 'Y' && c != 'Z') throw std::invalid_argument("bad Pauli letter in " + s);
        size_t j = i;
        while (j < s.size() && isdigit(s[j])) j++;
        if (j == i) throw std::invalid_argument("missing qubit index in " + s);
        size_t q = std::stoul(s.substr(i, j - i));
        if (q < 1 || q > n_qubits) throw std::invalid_argument("qubit index out of range in " + s);
        q -= 1;
        if (c == 'X' || c == 'Y') p.set_x(q, !p.x(q));
        if (c == 'Z' || c == 'Y') p.set_z(q, !p.z(q));
        i = j;
    }
    return p;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw std::invalid_argument("PauliOperator length mismatch");
    PauliOperator r(p.n);
    for (size_t i = 0; i < r.x_bits.size(); i++) {
        r.x_bits[i] = p.x_bits[i] ^ q.x_bits[i];
        r.z_bits[i] = p.z_bits[i] ^ q.z_bits[i];
    }
    return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw std::invalid_argument("PauliOperator length mismatch");
    int acc = 0;
    for (size_t i = 0; i < p.x_bits.size(); i++) {
        acc ^= std::popcount(p.x_bits[i] & q.z_bits[i]) & 1;
        acc ^= std::popcount(p.z_bits[i] & q.x_bits[i]) & 1;
    }
    return acc == 0;
}

}  // namespace hhc

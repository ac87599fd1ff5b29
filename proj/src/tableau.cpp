#include "hhc/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhc {

Tableau::Tableau(uint32_t n_qubits)
    : n_(n_qubits), words_per_row_((n_qubits + 63) / 64) {
    x_.assign(2 * n_, std::vector<uint64_t>(words_per_row_, 0));
    z_.assign(2 * n_, std::vector<uint64_t>(words_per_row_, 0));
    sign_.assign(2 * n_, SymBits{});
    for (uint32_t q = 0; q < n_; q++) {
        x_[q][q >> 6] |= uint64_t(1) << (q & 63);          // destabilizer X_q
        z_[n_ + q][q >> 6] |= uint64_t(1) << (q & 63);     // stabilizer Z_q
    }
}

void Tableau::xor_sym(SymBits& dst, const SymBits& src) {
    dst.constant ^= src.constant;
    dst.grow(src.words.size());
    for (size_t i = 0; i < src.words.size(); i++) dst.words[i] ^= src.words[i];
}

// Exponent of i contributed by multiplying the qubit-q letters of row i into
// row h, following Aaronson-Gottesman.
int Tableau::row_phase_g(size_t h, size_t i) const {
    int acc = 0;
    for (uint32_t q = 0; q < n_; q++) {
        int x1 = xbit(i, q), z1 = zbit(i, q), x2 = xbit(h, q), z2 = zbit(h, q);
        if (!x1 && !z1) continue;
        if (x1 && z1)
            acc += z2 - x2;
        else if (x1)
            acc += z2 * (2 * x2 - 1);
        else
            acc += x2 * (1 - 2 * z2);
    }
    return acc;
}

void Tableau::rowsum(size_t h, size_t i) {
    int phase = 2 * (sign_[h].constant ? 1 : 0) + 2 * (sign_[i].constant ? 1 : 0) + row_phase_g(h, i);
    phase = ((phase % 4) + 4) % 4;
    if (phase & 1) throw std::runtime_error("tableau rowsum produced imaginary phase");
    SymBits result;
    result.constant = (phase == 2);
    xor_sym(result, sign_[h]);
    result.constant ^= sign_[h].constant;  // keep only the variable part of h
    SymBits merged = sign_[i];
    merged.constant = false;
    xor_sym(result, merged);
    sign_[h] = std::move(result);
    for (size_t w = 0; w < words_per_row_; w++) {
        x_[h][w] ^= x_[i][w];
        z_[h][w] ^= z_[i][w];
    }
}

void Tableau::apply(const CliffordComponent& c) {
    switch (c.kind) {
        case ComponentKind::id:
        case ComponentKind::idm:
        case ComponentKind::initialize:
            return;  // initialize targets a fresh qubit, already |0>
        case ComponentKind::h: {
            uint32_t q = c.qubits[0];
            for (size_t r = 0; r < 2 * n_; r++) {
                bool xb = xbit(r, q), zb = zbit(r, q);
                if (xb && zb) sign_[r].constant ^= true;
                uint64_t mask = uint64_t(1) << (q & 63);
                if (xb != zb) {
                    x_[r][q >> 6] ^= mask;
                    z_[r][q >> 6] ^= mask;
                }
            }
            return;
        }
        case ComponentKind::s: {
            uint32_t q = c.qubits[0];
            for (size_t r = 0; r < 2 * n_; r++) {
                bool xb = xbit(r, q), zb = zbit(r, q);
                if (xb && zb) sign_[r].constant ^= true;
                if (xb) z_[r][q >> 6] ^= uint64_t(1) << (q & 63);
            }
            return;
        }
        case ComponentKind::cx: {
            uint32_t ctl = c.qubits[0], tgt = c.qubits[1];
            for (size_t r = 0; r < 2 * n_; r++) {
                bool xc = xbit(r, ctl), zc = zbit(r, ctl), xt = xbit(r, tgt), zt = zbit(r, tgt);
                if (xc && zt && (xt == zc)) sign_[r].constant ^= true;
                if (xc) x_[r][tgt >> 6] ^= uint64_t(1) << (tgt & 63);
                if (zt) z_[r][ctl >> 6] ^= uint64_t(1) << (ctl & 63);
            }
            return;
        }
        case ComponentKind::x: {
            uint32_t q = c.qubits[0];
            for (size_t r = 0; r < 2 * n_; r++)
                if (zbit(r, q)) sign_[r].constant ^= true;
            return;
        }
        case ComponentKind::y: {
            uint32_t q = c.qubits[0];
            for (size_t r = 0; r < 2 * n_; r++)
                if (xbit(r, q) != zbit(r, q)) sign_[r].constant ^= true;
            return;
        }
        case ComponentKind::z: {
            uint32_t q = c.qubits[0];
            for (size_t r = 0; r < 2 * n_; r++)
                if (xbit(r, q)) sign_[r].constant ^= true;
            return;
        }
        case ComponentKind::measure:
            measure(c.qubits[0], c.measurement_id);
            return;
        case ComponentKind::reset:
            reset_qubit(c.qubits[0]);
            return;
    }
    throw std::invalid_argument("tableau: unsupported component");
}

static void sym_to_vars(const std::vector<uint64_t>& words, std::vector<int>& out) {
    out.clear();
    for (size_t w = 0; w < words.size(); w++) {
        uint64_t bits = words[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(int(w * 64 + b));
            bits &= bits - 1;
        }
    }
}

void Tableau::measure(uint32_t q, int measurement_id) {
    if (measurement_id < 0) throw std::invalid_argument("measure needs a measurement id");
    size_t p = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++)
        if (xbit(r, q)) { p = r; break; }

    MeasurementPredictor pred;
    pred.measurement_id = measurement_id;
    OutcomeForm form;

    if (p < 2 * n_) {
        // Outcome is fresh randomness; introduce it as a new variable.
        for (size_t r = 0; r < 2 * n_; r++)
            if (r != p && xbit(r, q)) rowsum(r, p);
        x_[p - n_] = x_[p];
        z_[p - n_] = z_[p];
        sign_[p - n_] = sign_[p];
        std::fill(x_[p].begin(), x_[p].end(), 0);
        std::fill(z_[p].begin(), z_[p].end(), 0);
        z_[p][q >> 6] |= uint64_t(1) << (q & 63);
        SymBits s;
        s.grow(size_t(measurement_id / 64 + 1));
        s.words[measurement_id / 64] |= uint64_t(1) << (measurement_id & 63);
        sign_[p] = s;
        pred.is_deterministic = false;
        form.vars = {measurement_id};
    } else {
        // Deterministic: accumulate the stabilizer product equal to Z_q.
        std::vector<uint64_t> save_x = x_[0], save_z = z_[0];
        SymBits save_s = sign_[0];
        // use a scratch row appended conceptually; reuse storage via locals
        std::vector<uint64_t> sx(words_per_row_, 0), sz(words_per_row_, 0);
        SymBits ss;
        // temporary scratch row lives at index 2n via a small shim
        x_.push_back(sx);
        z_.push_back(sz);
        sign_.push_back(ss);
        for (uint32_t i = 0; i < n_; i++)
            if (xbit(i, q)) rowsum(2 * n_, i + n_);
        pred.is_deterministic = true;
        pred.constant = sign_[2 * n_].constant;
        sym_to_vars(sign_[2 * n_].words, pred.dependency_set);
        form.constant = pred.constant;
        form.vars = pred.dependency_set;
        x_.pop_back();
        z_.pop_back();
        sign_.pop_back();
    }

    if (int(forms_.size()) <= measurement_id) forms_.resize(measurement_id + 1);
    forms_[measurement_id] = form;
    predictors_.push_back(std::move(pred));
}

void Tableau::flip_sign_if_anticommutes_x(uint32_t q, const SymBits& cond) {
    for (size_t r = 0; r < 2 * n_; r++)
        if (zbit(r, q)) xor_sym(sign_[r], cond);
}

void Tableau::reset_qubit(uint32_t q) {
    // Z_q must be in the stabilizer span (the circuit measures before reset);
    // apply X conditioned on the current outcome form to force |0>.
    for (size_t r = n_; r < 2 * n_; r++)
        if (xbit(r, q)) throw std::runtime_error("reset of unmeasured qubit");
    std::vector<uint64_t> sx(words_per_row_, 0), sz(words_per_row_, 0);
    x_.push_back(sx);
    z_.push_back(sz);
    sign_.push_back(SymBits{});
    for (uint32_t i = 0; i < n_; i++)
        if (xbit(i, q)) rowsum(2 * n_, i + n_);
    SymBits cond = sign_[2 * n_];
    x_.pop_back();
    z_.pop_back();
    sign_.pop_back();
    flip_sign_if_anticommutes_x(q, cond);
}

OutcomeForm Tableau::reduce_parity(const std::vector<int>& measurement_ids, bool* deterministic_out) const {
    SymBits acc;
    bool constant = false;
    for (int m : measurement_ids) {
        const OutcomeForm& f = forms_.at(m);
        constant ^= f.constant;
        for (int v : f.vars) {
            acc.grow(size_t(v / 64 + 1));
            acc.words[v / 64] ^= uint64_t(1) << (v & 63);
        }
    }
    OutcomeForm out;
    out.constant = constant;
    sym_to_vars(acc.words, out.vars);
    if (deterministic_out) *deterministic_out = out.vars.empty();
    return out;
}

std::vector<MeasurementPredictor> derive_predictors(const ScheduledCircuit& circuit) {
    Tableau t(circuit.n_qubits);
    for (const auto& c : circuit.components) t.apply(c);
    return t.predictors();
}

}  // namespace hhc

#pragma once

#include <cstdint>
#include <vector>

#include "hhc/circuit.hpp"

namespace hhc {

// Linear form over measurement-outcome variables: constant + XOR of the
// outcomes in vars. Variables are ids of non-deterministic measurements.
struct OutcomeForm {
    bool constant = false;
    std::vector<int> vars;  // sorted ascending
};

struct MeasurementPredictor {
    int measurement_id = -1;
    bool is_deterministic = false;
    bool constant = false;
    std::vector<int> dependency_set;  // ids of earlier (non-deterministic) measurements
};

// Stabilizer tableau with destabilizers and symbolic signs: each row sign is a
// linear form over the outcomes of past non-deterministic measurements, which
// is what lets one circuit pass extract every predictor F_m at once.
class Tableau {
  public:
    explicit Tableau(uint32_t n_qubits);

    void apply(const CliffordComponent& c);  // throws on unsupported kinds
    // Measures Z on qubit q, records the predictor under this measurement id.
    void measure(uint32_t q, int measurement_id);
    void reset_qubit(uint32_t q);  // re-prepares |0>; assumes the qubit was just measured

    const std::vector<MeasurementPredictor>& predictors() const { return predictors_; }
    // Value of measurement id as a form over non-deterministic outcomes.
    const OutcomeForm& outcome_form(int measurement_id) const { return forms_.at(measurement_id); }

    // XOR of the given measurements' forms; deterministic_out is set to false
    // if random variables survive the reduction.
    OutcomeForm reduce_parity(const std::vector<int>& measurement_ids, bool* deterministic_out) const;

  private:
    struct SymBits {
        bool constant = false;
        std::vector<uint64_t> words;
        void grow(size_t nwords) { if (words.size() < nwords) words.resize(nwords, 0); }
    };

    uint32_t n_;
    size_t words_per_row_;
    // Rows 0..n-1 destabilizers, n..2n-1 stabilizers.
    std::vector<std::vector<uint64_t>> x_, z_;
    std::vector<SymBits> sign_;
    std::vector<MeasurementPredictor> predictors_;
    std::vector<OutcomeForm> forms_;
    size_t var_words_ = 1;

    bool xbit(size_t row, uint32_t q) const { return (x_[row][q >> 6] >> (q & 63)) & 1u; }
    bool zbit(size_t row, uint32_t q) const { return (z_[row][q >> 6] >> (q & 63)) & 1u; }
    void rowsum(size_t h, size_t i);  // row_h *= row_i with exact sign arithmetic
    int row_phase_g(size_t h, size_t i) const;
    void xor_sym(SymBits& dst, const SymBits& src);
    void flip_sign_if_anticommutes_x(uint32_t q, const SymBits& cond);
};

// Runs the ideal circuit once and reports, for every measurement, whether its
// error-free outcome is determined by earlier outcomes and if so the predictor.
std::vector<MeasurementPredictor> derive_predictors(const ScheduledCircuit& circuit);

}  // namespace hhc

#include "hhc/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hhc {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {
const char* purpose_name(MeasurementPurpose p) {
    switch (p) {
        case MeasurementPurpose::gauge_z: return "gauge-z";
        case MeasurementPurpose::gauge_x: return "gauge-x";
        case MeasurementPurpose::flag: return "flag";
        case MeasurementPurpose::final_data: return "final-data";
    }
    return "?";
}
}  // namespace

std::string circuit_to_json(const ScheduledCircuit& c) {
    ordered root;
    root["n_qubits"] = c.n_qubits;
    root["round_schedule"] = c.round_schedule;
    root["rounds"] = c.rounds;
    root["memory_basis"] = std::string(1, c.memory_basis);
    ordered steps = ordered::array();
    for (size_t s = 0; s < c.step_begin.size(); s++) {
        size_t end = (s + 1 < c.step_begin.size()) ? c.step_begin[s + 1] : c.components.size();
        ordered step = ordered::array();
        for (size_t i = c.step_begin[s]; i < end; i++) {
            const auto& comp = c.components[i];
            ordered jc;
            jc["kind"] = kind_name(comp.kind);
            ordered qs = ordered::array();
            for (uint32_t q : comp.qubits) qs.push_back(q + 1);
            jc["qubits"] = qs;
            if (comp.measurement_id >= 0) jc["measurement_id"] = comp.measurement_id;
            step.push_back(jc);
        }
        steps.push_back(step);
    }
    root["steps"] = steps;
    ordered labels = ordered::array();
    for (const auto& [id, lab] : c.measurement_labels) {
        ordered jl;
        jl["id"] = id;
        jl["qubit"] = lab.qubit + 1;
        jl["round"] = lab.round;
        jl["purpose"] = purpose_name(lab.purpose);
        if (lab.gauge_index >= 0) jl["gauge_index"] = lab.gauge_index;
        labels.push_back(jl);
    }
    root["measurement_labels"] = labels;
    return root.dump(2) + "\n";
}

std::string hypergraph_to_json(const DecodingHypergraph& hg) {
    ordered root;
    root["k"] = hg.k;
    root["memory_basis"] = std::string(1, hg.memory_basis);
    root["rounds"] = hg.rounds;
    root["deflagged"] = hg.deflagged;
    ordered events = ordered::array();
    for (const auto& e : hg.events) {
        ordered je;
        je["id"] = e.id;
        je["kind"] = e.kind == EventKind::flag ? "flag" : "stabilizer-diff";
        je["basis"] = std::string(1, e.basis);
        je["stabilizer_index"] = e.stabilizer_index;
        je["round"] = e.round;
        je["name"] = e.name();
        events.push_back(je);
    }
    root["events"] = events;
    ordered edges = ordered::array();
    for (const auto& h : hg.hyperedges) {
        ordered jh;
        jh["events"] = h.events;
        jh["probability"] = h.probability;  // dumped with exact round-trip precision
        jh["logical_label"] = std::array<int, 2>{h.logical_label & 1, (h.logical_label >> 1) & 1};
        edges.push_back(jh);
    }
    root["hyperedges"] = edges;
    return root.dump(2) + "\n";
}

std::string noise_to_json(const NoiseParams& p) {
    ordered root;
    for (auto k : NoiseParams::vector_order()) root[kind_name(k)] = p.at(k);
    return root.dump(2) + "\n";
}

NoiseParams noise_from_json(const std::string& text) {
    json root = json::parse(text);
    NoiseParams p;
    for (auto& [key, value] : root.items()) p.set(kind_from_name(key), value.get<double>());
    return p;
}

NoiseParams load_noise_file(const std::string& path) { return noise_from_json(read_file(path)); }

std::string results_to_json(const std::vector<ExperimentResult>& results) {
    ordered arr = ordered::array();
    for (const auto& r : results) {
        ordered jr;
        jr["state"] = r.state;
        jr["rounds"] = r.rounds;
        jr["shots"] = r.shots;
        jr["decoder"] = r.decoder;
        jr["failures"] = r.failures;
        jr["p_fail"] = r.p_fail;
        jr["std_error"] = r.std_error;
        arr.push_back(jr);
    }
    return arr.dump(2) + "\n";
}

std::vector<ExperimentResult> results_from_json(const std::string& text) {
    json arr = json::parse(text);
    std::vector<ExperimentResult> out;
    for (const auto& jr : arr) {
        ExperimentResult r;
        r.state = jr.at("state").get<std::string>();
        r.rounds = jr.at("rounds").get<int>();
        r.shots = jr.at("shots").get<uint64_t>();
        r.decoder = jr.value("decoder", "");
        r.failures = jr.at("failures").get<uint64_t>();
        r.p_fail = jr.at("p_fail").get<double>();
        r.std_error = jr.at("std_error").get<double>();
        out.push_back(r);
    }
    return out;
}

std::string fit_to_json(const FitResult& fit) {
    ordered root;
    root["A"] = fit.A;
    root["epsilon"] = fit.epsilon;
    root["tau"] = fit.tau;
    root["cov"] = std::array<std::array<double, 2>, 2>{fit.covariance};
    root["chi2"] = fit.chi2;
    return root.dump(2) + "\n";
}

std::string leakage_fit_to_json(const LeakageFit& fit) {
    ordered root;
    root["gamma_l"] = fit.gamma_l;
    root["gamma_s"] = fit.gamma_s;
    root["cov"] = std::array<std::array<double, 2>, 2>{fit.covariance};
    root["chi2"] = fit.chi2;
    return root.dump(2) + "\n";
}

std::string corpus_to_csv(const ShotCorpus& corpus, const DecodingHypergraph& hg) {
    std::ostringstream os;
    os << "shot_id,seed";
    for (const auto& e : hg.events) os << "," << e.name();
    os << ",final_logical_bit\n";
    for (size_t i = 0; i < corpus.shots.size(); i++) {
        const auto& s = corpus.shots[i];
        os << i << "," << s.seed;
        for (uint8_t b : s.beta) os << "," << int(b);
        os << "," << int(s.final_logical_bit) << "\n";
    }
    return os.str();
}

ShotCorpus corpus_from_csv(const std::string& text, InitialState state, int rounds) {
    ShotCorpus corpus;
    corpus.state = state;
    corpus.rounds = rounds;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty corpus CSV");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 3) throw std::runtime_error("malformed corpus row");
        ShotRecord shot;
        shot.seed = std::stoull(cells[1]);
        for (size_t i = 2; i + 1 < cells.size(); i++)
            shot.beta.push_back(uint8_t(std::stoi(cells[i])));
        shot.final_logical_bit = uint8_t(std::stoi(cells.back()));
        // true_label reconstructed from the memory bit only; corpus decoding
        // uses the memory-basis bit alone.
        char basis = memory_basis(state);
        shot.true_label = basis == 'Z' ? shot.final_logical_bit : uint8_t(shot.final_logical_bit << 1);
        corpus.shots.push_back(std::move(shot));
    }
    return corpus;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace hhc

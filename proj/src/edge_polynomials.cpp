#include "hhc/edge_polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hhc/noise.hpp"
#include "hhc/propagate.hpp"

namespace hhc {

void Rational::add(long long n, long long d) {
    num = num * d + n * den;
    den *= d;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::vector<EdgePolynomial> first_order_edge_polynomials(const ScheduledCircuit& circuit,
                                                         char basis, const CodeDefinition& code) {
    // Unit-probability noise on every kind so enumerate_faults emits each
    // location; the arity is recovered from the kind.
    NoiseParams unit;
    for (auto k : NoiseParams::vector_order()) unit.set(k, 0.5);
    auto faults = enumerate_faults(circuit, unit);

    DecodingHypergraph hg;
    hg.memory_basis = circuit.memory_basis;
    hg.rounds = circuit.rounds;
    hg.deflagged = true;
    hg.events = define_events(circuit, code, true);
    FramePropagator prop(circuit, code, true);

    std::vector<int> node_event(hg.events.size(), 0);
    for (const auto& e : hg.events)
        node_event[e.id] = (e.kind == EventKind::stabilizer_diff && e.basis == basis) ? 1 : 0;

    const auto& stabs = (basis == 'Z') ? code.stab_z : code.stab_x;
    auto correction_for = [&](std::vector<int> stab_set) -> int {
        std::sort(stab_set.begin(), stab_set.end());
        stab_set.erase(std::unique(stab_set.begin(), stab_set.end()), stab_set.end());
        for (uint32_t q = 0; q < 9; q++) {
            std::vector<int> pattern;
            for (size_t s = 0; s < stabs.size(); s++)
                if (basis == 'Z' ? stabs[s].z(q) : stabs[s].x(q)) pattern.push_back(int(s));
            if (pattern == stab_set) return int(q) + 1;
        }
        return 0;
    };

    std::map<std::vector<int>, EdgePolynomial> table;
    for (const auto& f : faults) {
        FrameOutcome out = prop.propagate({f});
        std::vector<int> sig;
        bool in_graph = true;
        for (size_t i = 0; i < hg.events.size(); i++) {
            int acc = 0;
            for (int m : hg.events[i].source_measurements) acc ^= out.meas_flip(m) ? 1 : 0;
            if (!acc) continue;
            if (!node_event[i]) in_graph = false;
            sig.push_back(int(i));
        }
        if (!in_graph || sig.empty() || sig.size() > 2) continue;
        auto& poly = table[sig];
        if (poly.node_u.empty()) {
            poly.node_u = hg.events[sig[0]].name();
            poly.node_v = sig.size() == 2 ? hg.events[sig[1]].name() : "b";
            if (sig.size() == 2 &&
                hg.events[sig[0]].stabilizer_index == hg.events[sig[1]].stabilizer_index) {
                poly.correction_qubit = 0;
            } else {
                std::vector<int> set;
                for (int e : sig) set.push_back(hg.events[e].stabilizer_index);
                poly.correction_qubit = correction_for(std::move(set));
            }
        }
        int arity = f.source_kind == ComponentKind::cx
                        ? 15
                        : (f.pauli_index == 0 ? 1 : 3);
        poly.coefficients[f.source_kind].add(1, arity);
    }

    std::vector<EdgePolynomial> out;
    out.reserve(table.size());
    for (auto& [sig, poly] : table) out.push_back(std::move(poly));
    return out;
}

EdgeTableDiff diff_edge_tables(const std::vector<EdgePolynomial>& computed,
                               const std::vector<EdgePolynomial>& reference) {
    EdgeTableDiff d;
    d.total_reference = int(reference.size());
    d.total_computed = int(computed.size());
    auto key = [](const EdgePolynomial& p) {
        std::string a = p.node_u, b = p.node_v;
        if (b < a) std::swap(a, b);
        return a + "|" + b;
    };
    std::map<std::string, const EdgePolynomial*> comp;
    for (const auto& p : computed) comp[key(p)] = &p;
    for (const auto& ref : reference) {
        auto it = comp.find(key(ref));
        if (it == comp.end()) {
            d.mismatches.push_back("missing edge (" + ref.node_u + ", " + ref.node_v + ")");
            continue;
        }
        const EdgePolynomial& got = *it->second;
        std::ostringstream msg;
        bool ok = got.correction_qubit == ref.correction_qubit;
        if (!ok)
            msg << "Q mismatch " << got.correction_qubit << " vs " << ref.correction_qubit << "; ";
        auto all_kinds = NoiseParams::vector_order();
        for (auto k : all_kinds) {
            Rational g{}, r{};
            auto gi = got.coefficients.find(k);
            if (gi != got.coefficients.end()) g = gi->second;
            auto ri = ref.coefficients.find(k);
            if (ri != ref.coefficients.end()) r = ri->second;
            if (!(g == r)) {
                ok = false;
                msg << kind_name(k) << ": " << g.num << "/" << g.den << " vs " << r.num << "/"
                    << r.den << "; ";
            }
        }
        if (ok)
            d.matched++;
        else
            d.mismatches.push_back("edge (" + ref.node_u + ", " + ref.node_v + "): " + msg.str());
    }
    return d;
}

std::string edge_polynomials_csv(const std::vector<EdgePolynomial>& polys) {
    std::ostringstream os;
    os << "node_u,node_v,correction_qubit,component,numerator,denominator\n";
    for (const auto& p : polys)
        for (const auto& [k, r] : p.coefficients)
            os << p.node_u << "," << p.node_v << "," << p.correction_qubit << "," << kind_name(k)
               << "," << r.num << "," << r.den << "\n";
    return os.str();
}

namespace {

// One reference row: nodes, Q(e), then {kind, num, den} triples.
struct RefRow {
    const char* u;
    const char* v;
    int q;
    std::vector<std::tuple<const char*, long long, long long>> terms;
};

std::vector<EdgePolynomial> make_table(const std::vector<RefRow>& rows) {
    std::vector<EdgePolynomial> out;
    for (const auto& r : rows) {
        EdgePolynomial p;
        p.node_u = r.u;
        p.node_v = r.v;
        p.correction_qubit = r.q;
        for (auto& [k, n, d] : r.terms) p.coefficients[kind_from_name(k)] = Rational{n, d};
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

const std::vector<EdgePolynomial>& reference_edge_table(char basis) {
    // Two-round memory experiments; layer 3 comes from the transversal readout.
    static const std::vector<EdgePolynomial> z_table = make_table({
        {"z0^1", "z1^1", 2, {{"cx", 44, 15}, {"id", 14, 3}, {"initialize", 3, 1}, {"idm", 2, 1}}},
        {"z0^1", "b", 1, {{"cx", 44, 15}, {"id", 6, 1}, {"initialize", 3, 1}, {"idm", 2, 1}}},
        {"z0^1", "z0^2", 0, {{"cx", 88, 15}, {"id", 4, 3}, {"initialize", 2, 1}, {"measure", 2, 1}}},
        {"z1^1", "b", 3, {{"cx", 44, 15}, {"id", 4, 1}, {"initialize", 3, 1}, {"idm", 2, 1}}},
        {"z1^1", "z0^2", 2, {{"cx", 8, 5}}},
        {"z1^1", "z1^2", 0, {{"cx", 88, 15}, {"id", 4, 3}, {"initialize", 2, 1}, {"measure", 2, 1}}},
        {"z0^2", "z1^2", 2, {{"cx", 56, 15}, {"id", 22, 3}, {"idm", 4, 1}}},
        {"z0^2", "b", 1, {{"cx", 56, 15}, {"id", 28, 3}, {"idm", 4, 1}}},
        {"z0^2", "z0^3", 0, {{"cx", 88, 15}, {"id", 4, 3}, {"measure", 2, 1}, {"reset", 2, 1}}},
        {"z1^2", "b", 3, {{"cx", 56, 15}, {"id", 28, 3}, {"idm", 4, 1}}},
        {"z1^2", "z0^3", 2, {{"cx", 8, 5}}},
        {"z1^2", "z1^3", 0, {{"cx", 88, 15}, {"id", 4, 3}, {"measure", 2, 1}, {"reset", 2, 1}}},
        {"z0^3", "z1^3", 2, {{"cx", 44, 15}, {"id", 4, 1}, {"idm", 2, 1}, {"measure", 3, 1}}},
        {"z0^3", "b", 1, {{"cx", 44, 15}, {"id", 14, 3}, {"idm", 2, 1}, {"measure", 3, 1}}},
        {"z1^3", "b", 3, {{"cx", 44, 15}, {"id", 20, 3}, {"idm", 2, 1}, {"measure", 3, 1}}},
    });
    static const std::vector<EdgePolynomial> x_table = make_table({
        {"x0^1", "x2^1", 4,
         {{"h", 4, 3}, {"cx", 8, 5}, {"id", 8, 3}, {"initialize", 1, 1}, {"idm", 2, 3}, {"measure", 1, 1}}},
        {"x0^1", "x3^1", 5,
         {{"h", 2, 1}, {"cx", 12, 5}, {"id", 2, 1}, {"initialize", 3, 1}, {"idm", 2, 3}}},
        {"x0^1", "b", 1,
         {{"h", 10, 3}, {"cx", 4, 1}, {"id", 16, 3}, {"initialize", 4, 1}, {"idm", 4, 3}, {"measure", 1, 1}}},
        {"x0^1", "x0^2", 0,
         {{"h", 8, 3}, {"cx", 16, 15}, {"initialize", 1, 1}, {"measure", 2, 1}, {"reset", 1, 1}}},
        {"x0^1", "x2^2", 4, {{"cx", 8, 15}}},
        {"x0^1", "x3^2", 5, {{"cx", 8, 15}}},
        {"x1^1", "x3^1", 6,
         {{"h", 4, 3}, {"cx", 16, 15}, {"id", 10, 3}, {"initialize", 1, 1}, {"idm", 2, 3}, {"measure", 1, 1}}},
        {"x1^1", "b", 3,
         {{"h", 4, 3}, {"cx", 8, 5}, {"id", 8, 3}, {"initialize", 2, 1}, {"idm", 2, 3}}},
        {"x1^1", "x1^2", 0, {{"h", 4, 3}, {"cx", 8, 15}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x1^1", "x3^2", 6, {{"cx", 8, 15}}},
        {"x2^1", "b", 7,
         {{"h", 4, 3}, {"cx", 16, 15}, {"id", 10, 3}, {"initialize", 2, 1}, {"idm", 2, 3}}},
        {"x2^1", "x2^2", 0, {{"h", 4, 3}, {"cx", 8, 15}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x3^1", "b", 8,
         {{"h", 10, 3}, {"cx", 52, 15}, {"id", 22, 3}, {"initialize", 4, 1}, {"idm", 4, 3}, {"measure", 1, 1}}},
        {"x3^1", "x3^2", 0,
         {{"h", 8, 3}, {"cx", 16, 15}, {"initialize", 1, 1}, {"measure", 2, 1}, {"reset", 1, 1}}},
        {"x0^2", "x2^2", 4,
         {{"h", 2, 3}, {"cx", 28, 15}, {"id", 8, 3}, {"idm", 4, 3}, {"measure", 1, 1}}},
        {"x0^2", "x3^2", 5, {{"h", 4, 3}, {"cx", 8, 3}, {"id", 2, 1}, {"idm", 4, 3}, {"reset", 2, 1}}},
        {"x0^2", "b", 1,
         {{"h", 2, 1}, {"cx", 68, 15}, {"id", 20, 3}, {"idm", 8, 3}, {"measure", 1, 1}, {"reset", 2, 1}}},
        {"x0^2", "x0^3", 0, {{"h", 8, 3}, {"cx", 16, 15}, {"measure", 2, 1}, {"reset", 2, 1}}},
        {"x0^2", "x2^3", 4, {{"cx", 8, 15}}},
        {"x0^2", "x3^3", 5, {{"cx", 8, 15}}},
        {"x1^2", "x3^2", 6, {{"h", 2, 3}, {"cx", 4, 3}, {"id", 10, 3}, {"idm", 4, 3}, {"measure", 1, 1}}},
        {"x1^2", "b", 3, {{"h", 2, 3}, {"cx", 28, 15}, {"id", 10, 3}, {"idm", 4, 3}, {"reset", 1, 1}}},
        {"x1^2", "x1^3", 0, {{"h", 4, 3}, {"cx", 8, 15}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x1^2", "x3^3", 6, {{"cx", 8, 15}}},
        {"x2^2", "b", 7, {{"h", 2, 3}, {"cx", 4, 3}, {"id", 10, 3}, {"idm", 4, 3}, {"reset", 1, 1}}},
        {"x2^2", "x2^3", 0, {{"h", 4, 3}, {"cx", 8, 15}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x3^2", "b", 8,
         {{"h", 2, 1}, {"cx", 4, 1}, {"id", 22, 3}, {"idm", 8, 3}, {"measure", 1, 1}, {"reset", 2, 1}}},
        {"x3^2", "x3^3", 0, {{"h", 8, 3}, {"cx", 16, 15}, {"measure", 2, 1}, {"reset", 2, 1}}},
        {"x0^3", "x2^3", 4,
         {{"h", 4, 3}, {"cx", 8, 5}, {"id", 8, 3}, {"idm", 2, 3}, {"measure", 2, 1}}},
        {"x0^3", "x3^3", 5,
         {{"h", 2, 1}, {"cx", 12, 5}, {"id", 2, 1}, {"idm", 2, 3}, {"measure", 1, 1}, {"reset", 2, 1}}},
        {"x0^3", "b", 1,
         {{"h", 10, 3}, {"cx", 4, 1}, {"id", 20, 3}, {"idm", 4, 3}, {"measure", 3, 1}, {"reset", 2, 1}}},
        {"x1^3", "x3^3", 6,
         {{"h", 4, 3}, {"cx", 16, 15}, {"id", 10, 3}, {"idm", 2, 3}, {"measure", 2, 1}}},
        {"x1^3", "b", 3,
         {{"h", 4, 3}, {"cx", 8, 5}, {"id", 10, 3}, {"idm", 2, 3}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x2^3", "b", 7,
         {{"h", 4, 3}, {"cx", 16, 15}, {"id", 8, 3}, {"idm", 2, 3}, {"measure", 1, 1}, {"reset", 1, 1}}},
        {"x3^3", "b", 8,
         {{"h", 10, 3}, {"cx", 52, 15}, {"id", 6, 1}, {"idm", 4, 3}, {"measure", 3, 1}, {"reset", 2, 1}}},
    });
    return basis == 'Z' ? z_table : x_table;
}

}  // namespace hhc

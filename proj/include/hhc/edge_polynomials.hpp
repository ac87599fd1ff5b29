#pragma once

#include <map>
#include <string>
#include <vector>

#include "hhc/circuit.hpp"
#include "hhc/code.hpp"
#include "hhc/hypergraph.hpp"

namespace hhc {

struct Rational {
    long long num = 0, den = 1;
    void add(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// First-order content of one decoding-graph edge, as exact per-component
// rationals (fault counts over the fault arity).
struct EdgePolynomial {
    std::string node_u, node_v;  // "z0^1", "x3^2", ... and "b" for the boundary
    int correction_qubit = 0;    // 1-based, 0 for measurement-type edges
    std::map<ComponentKind, Rational> coefficients;
};

std::vector<EdgePolynomial> first_order_edge_polynomials(const ScheduledCircuit& circuit,
                                                         char basis, const CodeDefinition& code);

// Reference edge data for the two-round memory graphs, against which a
// candidate gate schedule is judged.
const std::vector<EdgePolynomial>& reference_edge_table(char basis);

struct EdgeTableDiff {
    int matched = 0;
    int total_reference = 0;
    int total_computed = 0;
    std::vector<std::string> mismatches;
    bool pass() const {
        return matched == total_reference && total_computed == total_reference;
    }
};

EdgeTableDiff diff_edge_tables(const std::vector<EdgePolynomial>& computed,
                               const std::vector<EdgePolynomial>& reference);

std::string edge_polynomials_csv(const std::vector<EdgePolynomial>& polys);

}  // namespace hhc

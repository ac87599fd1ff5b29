#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hhc/pauli.hpp"

namespace hhc {

enum class AncillaRole { z_syndrome, x_syndrome, flag };

// The distance-3 heavy-hexagon code on 9 code qubits plus 14 ancillas,
// following the 1-23 numbering of the layout figure (0-based internally).
struct CodeDefinition {
    uint32_t n = 9;
    std::vector<PauliOperator> gauge_z;  // Z1Z2, Z2Z3Z5Z6, Z4Z5Z7Z8, Z8Z9
    std::vector<PauliOperator> gauge_x;  // X1X4, X2X5, X3X6, X4X7, X5X8, X6X9
    std::vector<PauliOperator> stab_z;   // Z1Z2Z4Z5Z7Z8, Z2Z3Z5Z6Z8Z9
    std::vector<PauliOperator> stab_x;   // X1X2X4X5, X3X6, X4X7, X5X6X8X9
    PauliOperator logical_z;             // Z1Z4Z7
    PauliOperator logical_x;             // X1X2X3
    std::map<uint32_t, AncillaRole> ancilla_roles;  // keyed by 1-based qubit number 10..23

    // stabilizer -> constituent gauge indices of the same type
    std::vector<std::vector<int>> stab_z_gauges;  // {{0,2},{1,3}}
    std::vector<std::vector<int>> stab_x_gauges;  // {{0,1},{2},{3},{4,5}}
};

CodeDefinition heavy_hex_code();

}  // namespace hhc

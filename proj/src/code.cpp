#include "hhc/code.hpp"

#include "hhc/layout.hpp"

namespace hhc {

CodeDefinition heavy_hex_code() {
    CodeDefinition c;
    c.n = 9;
    auto P = [&](const char* s) { return PauliOperator::from_string(s, 9); };
    c.gauge_z = {P("Z1Z2"), P("Z2Z3Z5Z6"), P("Z4Z5Z7Z8"), P("Z8Z9")};
    c.gauge_x = {P("X1X4"), P("X2X5"), P("X3X6"), P("X4X7"), P("X5X8"), P("X6X9")};
    c.stab_z = {P("Z1Z2Z4Z5Z7Z8"), P("Z2Z3Z5Z6Z8Z9")};
    c.stab_x = {P("X1X2X4X5"), P("X3X6"), P("X4X7"), P("X5X6X8X9")};
    c.logical_z = P("Z1Z4Z7");
    c.logical_x = P("X1X2X3");
    c.stab_z_gauges = {{0, 2}, {1, 3}};
    c.stab_x_gauges = {{0, 1}, {2}, {3}, {4, 5}};
    for (uint32_t q : layout::kZSyndromes) c.ancilla_roles[q] = AncillaRole::z_syndrome;
    for (uint32_t q : layout::kPureXSyndromes) c.ancilla_roles[q] = AncillaRole::x_syndrome;
    for (uint32_t q : layout::kFlags) c.ancilla_roles[q] = AncillaRole::flag;
    return c;
}

}  // namespace hhc

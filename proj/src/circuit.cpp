#include "hhc/circuit.hpp"

#include <set>
#include <stdexcept>

namespace hhc {

const char* kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::cx: return "cx";
        case ComponentKind::h: return "h";
        case ComponentKind::s: return "s";
        case ComponentKind::id: return "id";
        case ComponentKind::idm: return "idm";
        case ComponentKind::x: return "x";
        case ComponentKind::y: return "y";
        case ComponentKind::z: return "z";
        case ComponentKind::measure: return "measure";
        case ComponentKind::initialize: return "initialize";
        case ComponentKind::reset: return "reset";
    }
    return "?";
}

ComponentKind kind_from_name(const std::string& name) {
    static const std::map<std::string, ComponentKind> table = {
        {"cx", ComponentKind::cx},   {"h", ComponentKind::h},     {"s", ComponentKind::s},
        {"id", ComponentKind::id},   {"idm", ComponentKind::idm}, {"x", ComponentKind::x},
        {"y", ComponentKind::y},     {"z", ComponentKind::z},     {"measure", ComponentKind::measure},
        {"initialize", ComponentKind::initialize},                {"reset", ComponentKind::reset},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown component kind: " + name);
    return it->second;
}

bool kind_is_unitary(ComponentKind k) {
    switch (k) {
        case ComponentKind::cx:
        case ComponentKind::h:
        case ComponentKind::id:
        case ComponentKind::idm:
        case ComponentKind::x:
        case ComponentKind::y:
        case ComponentKind::z:
            return true;
        default:
            return false;
    }
}

void ScheduledCircuit::validate() const {
    std::set<uint32_t> awaiting_reset;
    for (size_t s = 0; s < step_begin.size(); s++) {
        size_t end = (s + 1 < step_begin.size()) ? step_begin[s + 1] : components.size();
        std::set<uint32_t> seen;
        for (size_t i = step_begin[s]; i < end; i++) {
            const auto& c = components[i];
            for (uint32_t q : c.qubits) {
                if (!seen.insert(q).second)
                    throw std::runtime_error("qubit " + std::to_string(q + 1) + " collides in step " +
                                             std::to_string(s));
                if (c.kind != ComponentKind::reset && awaiting_reset.count(q))
                    throw std::runtime_error("qubit " + std::to_string(q + 1) +
                                             " used before reset after measurement");
            }
            if (c.kind == ComponentKind::measure) awaiting_reset.insert(c.qubits[0]);
            if (c.kind == ComponentKind::reset) awaiting_reset.erase(c.qubits[0]);
        }
    }
}

PauliOperator conjugate_through(const CliffordComponent& c, const PauliOperator& p) {
    if (!kind_is_unitary(c.kind))
        throw std::invalid_argument(std::string("conjugate_through: unsupported component ") +
                                    kind_name(c.kind));
    PauliOperator r = p;
    switch (c.kind) {
        case ComponentKind::id:
        case ComponentKind::idm:
            break;
        case ComponentKind::x:
        case ComponentKind::y:
        case ComponentKind::z:
            break;  // Pauli conjugation only changes phase, which we drop
        case ComponentKind::h: {
            uint32_t q = c.qubits[0];
            bool xb = r.x(q), zb = r.z(q);
            r.set_x(q, zb);
            r.set_z(q, xb);
            break;
        }
        case ComponentKind::cx: {
            uint32_t ctl = c.qubits[0], tgt = c.qubits[1];
            // X_c -> X_c X_t, Z_t -> Z_c Z_t
            if (r.x(ctl)) r.set_x(tgt, !r.x(tgt));
            if (r.z(tgt)) r.set_z(ctl, !r.z(ctl));
            break;
        }
        default:
            throw std::invalid_argument("conjugate_through: unsupported component");
    }
    return r;
}

}  // namespace hhc

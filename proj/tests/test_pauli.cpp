#include <doctest.h>

#include "hhc/circuit.hpp"
#include "hhc/pauli.hpp"

using namespace hhc;

TEST_CASE("multiply identity and involution") {
    auto I = PauliOperator::identity(9);
    auto p = PauliOperator::from_string("X1Z4Y7", 9);
    CHECK(multiply(I, p) == p);
    CHECK(multiply(p, p).is_identity());
}

TEST_CASE("multiply X and Z on the same qubit gives Y") {
    auto x1 = PauliOperator::from_string("X1", 9);
    auto z1 = PauliOperator::from_string("Z1", 9);
    auto y1 = multiply(x1, z1);
    CHECK(y1 == PauliOperator::from_string("Y1", 9));
    CHECK(y1.x(0));
    CHECK(y1.z(0));
}

TEST_CASE("multiply rejects mismatched lengths") {
    CHECK_THROWS_AS(multiply(PauliOperator(4), PauliOperator(5)), std::invalid_argument);
    CHECK_THROWS_AS(commutes(PauliOperator(4), PauliOperator(5)), std::invalid_argument);
}

TEST_CASE("commutes on elementary pairs") {
    auto n = 9;
    CHECK_FALSE(commutes(PauliOperator::from_string("X1", n), PauliOperator::from_string("Z1", n)));
    CHECK(commutes(PauliOperator::from_string("X1X4", n), PauliOperator::from_string("Z1Z4", n)));
    // the logical representatives anticommute
    CHECK_FALSE(commutes(PauliOperator::from_string("Z1Z4Z7", n),
                         PauliOperator::from_string("X1X2X3", n)));
}

TEST_CASE("multiply is associative and commutative on random operators") {
    uint64_t s = 12345;
    auto rnd = [&]() {
        PauliOperator p(9);
        for (int q = 0; q < 9; q++) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            p.set_x(q, (s >> 33) & 1);
            p.set_z(q, (s >> 34) & 1);
        }
        return p;
    };
    for (int t = 0; t < 50; t++) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, a).is_identity());
    }
}

TEST_CASE("conjugation through CX and H") {
    auto cx = CliffordComponent::cx_gate(1, 2);  // 1-based in builder, raw here: qubits {1,2}
    auto x_ctl = PauliOperator::from_string("X2", 9);  // qubit index 1 is "X2" 1-based
    auto out = conjugate_through(cx, x_ctl);
    CHECK(out == PauliOperator::from_string("X2X3", 9));

    auto z_tgt = PauliOperator::from_string("Z3", 9);
    CHECK(conjugate_through(cx, z_tgt) == PauliOperator::from_string("Z2Z3", 9));

    auto h = CliffordComponent::one_qubit(ComponentKind::h, 0);
    CHECK(conjugate_through(h, PauliOperator::from_string("X1", 9)) ==
          PauliOperator::from_string("Z1", 9));

    auto meas = CliffordComponent{ComponentKind::measure, {0}, -1, 0};
    CHECK_THROWS_AS(conjugate_through(meas, x_ctl), std::invalid_argument);
}

TEST_CASE("conjugation preserves commutation") {
    uint64_t s = 777;
    auto rnd = [&]() {
        PauliOperator p(5);
        for (int q = 0; q < 5; q++) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            p.set_x(q, (s >> 33) & 1);
            p.set_z(q, (s >> 34) & 1);
        }
        return p;
    };
    std::vector<CliffordComponent> gates = {
        CliffordComponent::cx_gate(0, 1), CliffordComponent::cx_gate(3, 2),
        CliffordComponent::one_qubit(ComponentKind::h, 4),
        CliffordComponent::one_qubit(ComponentKind::x, 2),
        CliffordComponent::one_qubit(ComponentKind::idm, 0)};
    for (int t = 0; t < 100; t++) {
        auto p = rnd(), q = rnd();
        for (const auto& g : gates)
            CHECK(commutes(p, q) == commutes(conjugate_through(g, p), conjugate_through(g, q)));
    }
}

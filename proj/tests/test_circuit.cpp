#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "qcpoly/circuit.hpp"
#include "qcpoly/errors.hpp"
#include "random_circuits.hpp"

using namespace qcpoly;
using namespace qcpoly::circuit;
using qcpoly::testsupport::random_chain_grid;
using qcpoly::testsupport::random_grid;

namespace {

const char* kFixture =
    "wires 3\n"
    "H 1\n"
    "H 2\n"
    "TOF 1 2 3\n"
    "H 1\n"
    "H 3\n"
    "TOF 2 3 1\n";

std::vector<ElementaryGate> column(const CircuitGrid& grid, int col) {
    std::vector<ElementaryGate> cells;
    for (int r = 1; r <= grid.wires(); ++r) cells.push_back(grid.at(r, col));
    return cells;
}

}  // namespace

TEST_CASE("gate tokens round-trip") {
    const ElementaryGate all[] = {ElementaryGate::Identity,  ElementaryGate::Cross,
                                  ElementaryGate::IdentityUp, ElementaryGate::IdentityDown,
                                  ElementaryGate::MulUp,      ElementaryGate::MulDown,
                                  ElementaryGate::AddUp,      ElementaryGate::AddDown,
                                  ElementaryGate::Hadamard};
    for (ElementaryGate g : all) {
        auto back = gate_from_token(gate_token(g));
        REQUIRE(back.has_value());
        CHECK(*back == g);
    }
    CHECK(gate_token(ElementaryGate::Cross) == "X");
    CHECK_FALSE(gate_from_token("QQ").has_value());
    CHECK_FALSE(gate_from_token("").has_value());
}

TEST_CASE("the fixture gate list lowers to a 3x6 grid") {
    const CircuitGrid grid = parse_circuit(kFixture);
    CHECK(grid.wires() == 3);
    CHECK(grid.columns() == 6);
    CHECK(grid.count(ElementaryGate::Hadamard) == 4);
    REQUIRE(grid.source().has_value());
    CHECK(grid.source()->size() == 6);

    const std::vector<ElementaryGate> tof_down = {
        ElementaryGate::IdentityDown, ElementaryGate::MulDown, ElementaryGate::AddDown};
    const std::vector<ElementaryGate> tof_up = {
        ElementaryGate::AddUp, ElementaryGate::MulUp, ElementaryGate::IdentityUp};
    CHECK(column(grid, 3) == tof_down);
    CHECK(column(grid, 6) == tof_up);
    CHECK(grid.at(1, 1) == ElementaryGate::Hadamard);
    CHECK(grid.at(2, 2) == ElementaryGate::Hadamard);
    CHECK(validate_grid(grid).empty());
}

TEST_CASE("a bare wires line is the empty circuit") {
    const CircuitGrid grid = parse_circuit("wires 2\n");
    CHECK(grid.wires() == 2);
    CHECK(grid.columns() == 0);
}

TEST_CASE("lowering individual gates") {
    const CircuitGrid tof = lower_to_grid({HighGate::toffoli(1, 2, 3)}, 3);
    const std::vector<ElementaryGate> down = {ElementaryGate::IdentityDown,
                                              ElementaryGate::MulDown, ElementaryGate::AddDown};
    CHECK(column(tof, 1) == down);

    const CircuitGrid tof_up = lower_to_grid({HighGate::toffoli(2, 3, 1)}, 3);
    const std::vector<ElementaryGate> up = {ElementaryGate::AddUp, ElementaryGate::MulUp,
                                            ElementaryGate::IdentityUp};
    CHECK(column(tof_up, 1) == up);

    const CircuitGrid cnot = lower_to_grid({HighGate::cnot(1, 3)}, 3);
    const std::vector<ElementaryGate> skip = {ElementaryGate::IdentityDown, ElementaryGate::Cross,
                                              ElementaryGate::AddDown};
    CHECK(column(cnot, 1) == skip);

    const CircuitGrid h = lower_to_grid({HighGate::hadamard(2)}, 3);
    const std::vector<ElementaryGate> hcol = {ElementaryGate::Identity, ElementaryGate::Hadamard,
                                              ElementaryGate::Identity};
    CHECK(column(h, 1) == hcol);
}

TEST_CASE("lowering rejects bad gates") {
    CHECK_THROWS_AS(lower_to_grid({HighGate::toffoli(1, 3, 2)}, 3), std::invalid_argument);
    CHECK_THROWS_WITH_AS(lower_to_grid({HighGate::toffoli(1, 3, 2)}, 3),
                         doctest::Contains("between"), std::invalid_argument);
    CHECK_THROWS_AS(lower_to_grid({HighGate::hadamard(0)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lower_to_grid({HighGate::hadamard(4)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lower_to_grid({HighGate::toffoli(1, 1, 2)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lower_to_grid({HighGate::cnot(2, 2)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lower_to_grid({HighGate::cnot(1, 4)}, 3), std::invalid_argument);
}

TEST_CASE("a target between controls is a parse error with its line") {
    try {
        parse_circuit("wires 3\nTOF 1 3 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(doctest::String(e.what()) == doctest::Contains("between"));
    }
}

TEST_CASE("validate_grid flags broken vertical channels") {
    CircuitGrid dangling(2, 1);
    dangling.set(1, 1, ElementaryGate::MulDown);
    auto errors = validate_grid(dangling);
    REQUIRE(errors.size() == 2);
    CHECK(errors[0].row == 1);
    CHECK(errors[0].col == 1);
    CHECK(errors[1].row == 2);
    CHECK(errors[1].col == 1);

    CircuitGrid bottom(1, 1);
    bottom.set(1, 1, ElementaryGate::IdentityDown);
    errors = validate_grid(bottom);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].row == 1);

    CircuitGrid unconsumed(2, 1);
    unconsumed.set(1, 1, ElementaryGate::IdentityDown);
    unconsumed.set(2, 1, ElementaryGate::Hadamard);
    errors = validate_grid(unconsumed);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].row == 2);

    CircuitGrid top(2, 1);
    top.set(1, 1, ElementaryGate::MulUp);
    CHECK(validate_grid(top).size() == 2);
}

TEST_CASE("multi-controlled chains validate even though the lowerer never emits them") {
    const CircuitGrid grid = parse_circuit("grid 4 1\nID\nMD\nMD\nAD\n");
    CHECK(validate_grid(grid).empty());
    CHECK(grid.at(3, 1) == ElementaryGate::MulDown);
    CHECK_FALSE(grid.source().has_value());
}

TEST_CASE("grid form parses and equals the lowered fixture") {
    const CircuitGrid lowered = parse_circuit(kFixture);
    const CircuitGrid raw = parse_circuit(render_grid(lowered));
    CHECK(raw == lowered);
}

TEST_CASE("render emits the grid block form") {
    CHECK(render_grid(CircuitGrid(2, 0)) == "grid 2 0\n\n");

    CircuitGrid grid(2, 1);
    grid.set(1, 1, ElementaryGate::IdentityDown);
    grid.set(2, 1, ElementaryGate::AddDown);
    CHECK(render_grid(grid) == "grid 2 1\nID\nAD\n");
}

TEST_CASE("parse and render round-trip on random grids") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 50; ++i) {
        const CircuitGrid lowered = random_grid(rng, 1 + rng() % 4, rng() % 7, 6);
        CHECK(parse_circuit(render_grid(lowered)) == lowered);
        const CircuitGrid chained = random_chain_grid(rng, 2 + rng() % 3, rng() % 7, 6);
        CHECK(parse_circuit(render_grid(chained)) == chained);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_circuit(""), ParseError);
    CHECK_THROWS_AS(parse_circuit("wires 0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("wires two\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("loops 3\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("wires 3\nSWAP 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("wires 3\nH 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("wires 3\nTOF 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("grid 2 2\nI I\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("grid 2 2\nI I\nI I I\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("grid 2 1\nI\nQQ\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("grid 2 1\nI\nI\nI\n"), ParseError);

    try {
        parse_circuit("wires 3\nH 1\nH 9\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    const CircuitGrid grid = parse_circuit(
        "# the fixture, commented\n"
        "wires 3\n"
        "\n"
        "H 1  # first path variable\n"
        "H 2\n"
        "TOF 1 2 3\n"
        "H 1\n"
        "H 3\n"
        "TOF 2 3 1\n");
    CHECK(grid == parse_circuit(kFixture));
}

TEST_CASE("an invalid raw grid fails parse_circuit with placements") {
    try {
        parse_circuit("grid 2 1\nMD\nI\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.errors().size() == 2);
        CHECK(doctest::String(e.what()) == doctest::Contains("(1,1)"));
    }
}

TEST_CASE("lowered gate lists always validate") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const CircuitGrid grid = random_grid(rng, 1 + rng() % 5, rng() % 9, 8);
        CHECK(validate_grid(grid).empty());
    }
}

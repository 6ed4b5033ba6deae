#pragma once

#include <string>
#include <vector>

#include "qcpoly/circuit.hpp"
#include "qcpoly/gf2poly.hpp"

namespace qcpoly::pathsum {

/// The polynomial system of a circuit: one output constraint per wire and
/// the phase polynomial. outputs[j-1] is f_j = g_j(x, a) + b_j; the phase
/// is over path and input variables only. All polynomials are multilinear
/// and the path variables are exactly x_1 .. x_hadamards.
struct PolynomialSystem {
    int wires = 0;
    int hadamards = 0;
    std::vector<gf2::Polynomial> outputs;
    gf2::Polynomial phase;

    bool operator==(const PolynomialSystem&) const = default;
};

/// A system with concrete input/output bits substituted in: everything is
/// over path variables only. F0 = constraints + {phase}; F1 = constraints
/// + {phase + 1}.
struct BoundSystem {
    int hadamards = 0;
    std::vector<gf2::Polynomial> constraints;
    gf2::Polynomial phase;

    std::vector<gf2::Polynomial> f0() const;
    std::vector<gf2::Polynomial> f1() const;
};

/// Symbolically execute a validated grid, column by column. Wire j starts
/// as a_j; a Hadamard cell replaces its wire with a fresh path variable x_k
/// and adds (incoming wire) * x_k to the phase; vertical chains carry
/// control products into Add cells. Path variables are numbered left to
/// right by column, top to bottom inside a column.
/// Throws ValidationError if the grid does not validate.
PolynomialSystem extract_system(const circuit::CircuitGrid& grid);

/// Wire polynomials before any column and after each one (the trail
/// extract_system walks); trace[0] holds the inputs a_1..a_n.
std::vector<std::vector<gf2::Polynomial>> wire_trace(const circuit::CircuitGrid& grid);

/// Substitute the bits of a (inputs) and b (outputs) into the system.
/// Bitstrings are big-endian in wire order: character i is wire i+1's bit.
/// Throws std::invalid_argument on length mismatch or non-binary characters.
BoundSystem bind_system(const PolynomialSystem& sys, const std::string& input_bits,
                        const std::string& output_bits);

enum class ExportFormat { Plain, Maple, Mathematica, Structured };

/// Map "plain" / "maple" / "mathematica" / "structured" to a format.
/// Throws std::invalid_argument for anything else.
ExportFormat parse_format(const std::string& name);

/// Render the system: one polynomial per line ("f1 = ...", then "phi = ...")
/// for Plain; a Maple list assignment; a Mathematica list with juxtaposed
/// products; or a JSON object with fields wires, hadamards, outputs, phase.
std::string export_system(const PolynomialSystem& sys, ExportFormat format);

/// Read a system back from its Plain rendering. Wire count is the number
/// of f-lines; the Hadamard count is the largest path index that appears.
PolynomialSystem parse_system(const std::string& text);

}  // namespace qcpoly::pathsum

#pragma once

#include <string>
#include <vector>

#include "qcpoly/circuit.hpp"
#include "qcpoly/counting.hpp"

namespace qcpoly::simulator {

/// Exact statevector: sum over i of entries[i] * 2^(-scale_h/2) * |i>.
/// Entries stay integers; every Hadamard bumps scale_h by one. Basis
/// indices are big-endian in wire order (wire 1 = most significant bit),
/// the same convention counting uses. Unitarity keeps
/// sum(entries[i]^2) = 2^scale_h.
struct ExactState {
    int wires = 0;
    std::vector<long long> entries;
    int scale_h = 0;
};

/// |bits> with unit entry and scale 0. Wire counts past wire_cap raise
/// ResourceLimitError (the state has 2^n entries).
ExactState basis_state(int wires, const std::string& bits, int wire_cap = 12);

/// Apply one gate. Hadamard on wire w maps each index pair (i0, i1)
/// differing in bit w to (old0 + old1, old0 - old1) and increments
/// scale_h; Toffoli and Cnot permute entries by the classical truth
/// table. Out-of-range or colliding wires raise std::invalid_argument.
ExactState apply_high_gate(ExactState state, const circuit::HighGate& gate);

/// <b|U|a> by direct state evolution: run the gates on |a>, read entry
/// index(b), normalize. Ground truth for the path-sum pipeline.
counting::Amplitude oracle_amplitude(const std::vector<circuit::HighGate>& gates, int wires,
                                     const std::string& input_bits,
                                     const std::string& output_bits, int wire_cap = 12);

/// All matrix elements at once; result[b][a] = oracle_amplitude(gates, n, a, b).
/// Costs one state evolution per input column.
std::vector<std::vector<counting::Amplitude>> oracle_matrix(
    const std::vector<circuit::HighGate>& gates, int wires, int wire_cap = 12);

}  // namespace qcpoly::simulator

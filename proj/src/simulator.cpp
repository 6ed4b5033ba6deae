#include "qcpoly/simulator.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qcpoly/errors.hpp"

namespace qcpoly::simulator {

using circuit::HighGate;
using counting::Amplitude;

namespace {

void check_wire(int wire, int wires, const char* what) {
    if (wire < 1 || wire > wires) {
        throw std::invalid_argument(std::string(what) + " wire " + std::to_string(wire) +
                                    " out of range 1.." + std::to_string(wires));
    }
}

long long wire_mask(int wire, int wires) { return 1ll << (wires - wire); }

}  // namespace

ExactState basis_state(int wires, const std::string& bits, int wire_cap) {
    if (wires < 1) throw std::invalid_argument("a state needs at least one wire");
    if (wires > wire_cap) {
        throw ResourceLimitError("a " + std::to_string(wires) +
                                 "-wire state exceeds the simulator cap " +
                                 std::to_string(wire_cap) + " (2^n entries)");
    }
    if (static_cast<int>(bits.size()) != wires) {
        throw std::invalid_argument("bitstring has " + std::to_string(bits.size()) +
                                    " bits, the state has " + std::to_string(wires) + " wires");
    }

    ExactState state;
    state.wires = wires;
    state.entries.assign(1ll << wires, 0);
    state.entries[counting::basis_index(bits)] = 1;
    return state;
}

ExactState apply_high_gate(ExactState state, const HighGate& gate) {
    const int n = state.wires;
    const long long dim = static_cast<long long>(state.entries.size());

    switch (gate.kind) {
        case HighGate::Kind::Hadamard: {
            check_wire(gate.wire, n, "Hadamard");
            const long long mask = wire_mask(gate.wire, n);
            for (long long i = 0; i < dim; ++i) {
                if (i & mask) continue;
                long long e0 = state.entries[i];
                long long e1 = state.entries[i | mask];
                state.entries[i] = e0 + e1;
                state.entries[i | mask] = e0 - e1;
            }
            ++state.scale_h;
            break;
        }
        case HighGate::Kind::Toffoli: {
            check_wire(gate.control1, n, "Toffoli control");
            check_wire(gate.control2, n, "Toffoli control");
            check_wire(gate.target, n, "Toffoli target");
            if (gate.control1 == gate.control2 || gate.control1 == gate.target ||
                gate.control2 == gate.target) {
                throw std::invalid_argument("Toffoli wires must be distinct");
            }
            const long long c = wire_mask(gate.control1, n) | wire_mask(gate.control2, n);
            const long long t = wire_mask(gate.target, n);
            for (long long i = 0; i < dim; ++i) {
                if ((i & c) == c && !(i & t)) std::swap(state.entries[i], state.entries[i | t]);
            }
            break;
        }
        case HighGate::Kind::Cnot: {
            check_wire(gate.control1, n, "Cnot control");
            check_wire(gate.target, n, "Cnot target");
            if (gate.control1 == gate.target) {
                throw std::invalid_argument("Cnot control and target must differ");
            }
            const long long c = wire_mask(gate.control1, n);
            const long long t = wire_mask(gate.target, n);
            for (long long i = 0; i < dim; ++i) {
                if ((i & c) && !(i & t)) std::swap(state.entries[i], state.entries[i | t]);
            }
            break;
        }
    }
    return state;
}

Amplitude oracle_amplitude(const std::vector<HighGate>& gates, int wires,
                           const std::string& input_bits, const std::string& output_bits,
                           int wire_cap) {
    ExactState state = basis_state(wires, input_bits, wire_cap);
    for (const HighGate& gate : gates) state = apply_high_gate(std::move(state), gate);
    if (static_cast<int>(output_bits.size()) != wires) {
        throw std::invalid_argument("bitstring has " + std::to_string(output_bits.size()) +
                                    " bits, the state has " + std::to_string(wires) + " wires");
    }
    return Amplitude::normalized(state.entries[counting::basis_index(output_bits)],
                                 state.scale_h);
}

std::vector<std::vector<Amplitude>> oracle_matrix(const std::vector<HighGate>& gates, int wires,
                                                  int wire_cap) {
    const int dim = 1 << wires;
    std::vector<std::vector<Amplitude>> matrix(dim, std::vector<Amplitude>(dim));
    for (int a = 0; a < dim; ++a) {
        ExactState state = basis_state(wires, counting::basis_bits(a, wires), wire_cap);
        for (const HighGate& gate : gates) state = apply_high_gate(std::move(state), gate);
        for (int b = 0; b < dim; ++b) {
            matrix[b][a] = Amplitude::normalized(state.entries[b], state.scale_h);
        }
    }
    return matrix;
}

}  // namespace qcpoly::simulator

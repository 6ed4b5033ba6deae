#include "random_circuits.hpp"

#include <algorithm>

namespace qcpoly::testsupport {

using circuit::CircuitGrid;
using circuit::ElementaryGate;
using circuit::HighGate;

namespace {

int pick(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

/// Three distinct 1-indexed rows, ascending.
void three_rows(std::mt19937& rng, int wires, int out[3]) {
    int a = pick(rng, wires);
    int b = pick(rng, wires - 1);
    if (b >= a) ++b;
    int c = pick(rng, wires - 2);
    if (c >= std::min(a, b)) ++c;
    if (c >= std::max(a, b)) ++c;
    out[0] = a + 1;
    out[1] = b + 1;
    out[2] = c + 1;
    std::sort(out, out + 3);
}

}  // namespace

std::vector<HighGate> random_gate_list(std::mt19937& rng, int wires, int columns, int max_h) {
    std::vector<HighGate> gates;
    int h_used = 0;
    for (int c = 0; c < columns; ++c) {
        std::vector<int> kinds;
        if (h_used < max_h) kinds.push_back(0);
        if (wires >= 2) kinds.push_back(1);
        if (wires >= 3) kinds.push_back(2);
        if (kinds.empty()) break;

        switch (kinds[pick(rng, static_cast<int>(kinds.size()))]) {
            case 0:
                gates.push_back(HighGate::hadamard(1 + pick(rng, wires)));
                ++h_used;
                break;
            case 1: {
                int control = 1 + pick(rng, wires);
                int target = 1 + pick(rng, wires - 1);
                if (target >= control) ++target;
                gates.push_back(HighGate::cnot(control, target));
                break;
            }
            default: {
                int rows[3];
                three_rows(rng, wires, rows);
                // The target must sit at an end of the span.
                if (pick(rng, 2)) {
                    gates.push_back(HighGate::toffoli(rows[0], rows[1], rows[2]));
                } else {
                    gates.push_back(HighGate::toffoli(rows[1], rows[2], rows[0]));
                }
                break;
            }
        }
    }
    return gates;
}

CircuitGrid random_grid(std::mt19937& rng, int wires, int columns, int max_h) {
    return circuit::lower_to_grid(random_gate_list(rng, wires, columns, max_h), wires);
}

CircuitGrid random_chain_grid(std::mt19937& rng, int wires, int columns, int max_h) {
    CircuitGrid grid(wires, columns);
    int h_used = 0;
    for (int c = 1; c <= columns; ++c) {
        std::vector<int> kinds = {2};  // an all-Identity column is valid
        if (h_used < max_h) kinds.push_back(0);
        if (wires >= 2) kinds.push_back(1);

        switch (kinds[pick(rng, static_cast<int>(kinds.size()))]) {
            case 0: {
                // One or two Hadamard cells; two in a column is something
                // the lowerer never produces.
                int first = 1 + pick(rng, wires);
                grid.set(first, c, ElementaryGate::Hadamard);
                ++h_used;
                if (wires >= 2 && h_used < max_h && pick(rng, 2)) {
                    int second = 1 + pick(rng, wires - 1);
                    if (second >= first) ++second;
                    grid.set(second, c, ElementaryGate::Hadamard);
                    ++h_used;
                }
                break;
            }
            case 1: {
                int a = 1 + pick(rng, wires);
                int b = 1 + pick(rng, wires - 1);
                if (b >= a) ++b;
                const int lo = std::min(a, b), hi = std::max(a, b);
                if (pick(rng, 2)) {
                    grid.set(lo, c, ElementaryGate::IdentityDown);
                    grid.set(hi, c, ElementaryGate::AddDown);
                    for (int r = lo + 1; r < hi; ++r) {
                        grid.set(r, c, pick(rng, 2) ? ElementaryGate::MulDown
                                                    : ElementaryGate::Cross);
                    }
                } else {
                    grid.set(hi, c, ElementaryGate::IdentityUp);
                    grid.set(lo, c, ElementaryGate::AddUp);
                    for (int r = lo + 1; r < hi; ++r) {
                        grid.set(r, c, pick(rng, 2) ? ElementaryGate::MulUp
                                                    : ElementaryGate::Cross);
                    }
                }
                break;
            }
            default:
                break;
        }
    }
    return grid;
}

}  // namespace qcpoly::testsupport

#include "qcpoly/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qcpoly/errors.hpp"

namespace qcpoly::circuit {

std::string_view gate_token(ElementaryGate g) {
    switch (g) {
        case ElementaryGate::Identity: return "I";
        case ElementaryGate::Cross: return "X";
        case ElementaryGate::IdentityUp: return "IU";
        case ElementaryGate::IdentityDown: return "ID";
        case ElementaryGate::MulUp: return "MU";
        case ElementaryGate::MulDown: return "MD";
        case ElementaryGate::AddUp: return "AU";
        case ElementaryGate::AddDown: return "AD";
        case ElementaryGate::Hadamard: return "H";
    }
    return "?";
}

std::optional<ElementaryGate> gate_from_token(std::string_view token) {
    if (token == "I") return ElementaryGate::Identity;
    if (token == "X") return ElementaryGate::Cross;
    if (token == "IU") return ElementaryGate::IdentityUp;
    if (token == "ID") return ElementaryGate::IdentityDown;
    if (token == "MU") return ElementaryGate::MulUp;
    if (token == "MD") return ElementaryGate::MulDown;
    if (token == "AU") return ElementaryGate::AddUp;
    if (token == "AD") return ElementaryGate::AddDown;
    if (token == "H") return ElementaryGate::Hadamard;
    return std::nullopt;
}

namespace {

std::string describe(const std::vector<PlacementError>& errors) {
    std::ostringstream out;
    out << "grid validation failed:";
    for (const PlacementError& e : errors) {
        out << " (" << e.row << "," << e.col << ") " << e.reason << ";";
    }
    return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<PlacementError> errors)
    : std::runtime_error(describe(errors)), errors_(std::move(errors)) {}

CircuitGrid::CircuitGrid(int wires, int columns) : wires_(wires) {
    if (wires < 1) throw std::invalid_argument("a grid needs at least one wire");
    if (columns < 0) throw std::invalid_argument("negative column count");
    cols_.assign(columns, std::vector<ElementaryGate>(wires, ElementaryGate::Identity));
}

ElementaryGate CircuitGrid::at(int row, int col) const {
    if (row < 1 || row > wires_ || col < 1 || col > columns()) {
        throw std::out_of_range("grid cell out of range");
    }
    return cols_[col - 1][row - 1];
}

void CircuitGrid::set(int row, int col, ElementaryGate g) {
    if (row < 1 || row > wires_ || col < 1 || col > columns()) {
        throw std::out_of_range("grid cell out of range");
    }
    cols_[col - 1][row - 1] = g;
}

int CircuitGrid::count(ElementaryGate g) const {
    int total = 0;
    for (const auto& col : cols_) {
        total += static_cast<int>(std::count(col.begin(), col.end(), g));
    }
    return total;
}

namespace {

void check_wire(int wire, int wires, const char* role) {
    if (wire < 1 || wire > wires) {
        throw std::invalid_argument(std::string(role) + " wire " + std::to_string(wire) +
                                    " out of range 1.." + std::to_string(wires));
    }
}

/// Build the single grid column a circuit-level gate lowers to.
std::vector<ElementaryGate> gate_column(const HighGate& gate, int wires) {
    std::vector<ElementaryGate> col(wires, ElementaryGate::Identity);
    auto cell = [&col](int row) -> ElementaryGate& { return col[row - 1]; };

    switch (gate.kind) {
        case HighGate::Kind::Hadamard:
            check_wire(gate.wire, wires, "Hadamard");
            cell(gate.wire) = ElementaryGate::Hadamard;
            break;

        case HighGate::Kind::Cnot: {
            check_wire(gate.control1, wires, "control");
            check_wire(gate.target, wires, "target");
            if (gate.control1 == gate.target) {
                throw std::invalid_argument("CNOT control and target must differ");
            }
            int c = gate.control1, t = gate.target;
            if (c < t) {
                cell(c) = ElementaryGate::IdentityDown;
                cell(t) = ElementaryGate::AddDown;
                for (int r = c + 1; r < t; ++r) cell(r) = ElementaryGate::Cross;
            } else {
                cell(c) = ElementaryGate::IdentityUp;
                cell(t) = ElementaryGate::AddUp;
                for (int r = t + 1; r < c; ++r) cell(r) = ElementaryGate::Cross;
            }
            break;
        }

        case HighGate::Kind::Toffoli: {
            check_wire(gate.control1, wires, "control");
            check_wire(gate.control2, wires, "control");
            check_wire(gate.target, wires, "target");
            int lo = std::min(gate.control1, gate.control2);
            int hi = std::max(gate.control1, gate.control2);
            int t = gate.target;
            if (lo == hi || t == lo || t == hi) {
                throw std::invalid_argument("Toffoli wires must be pairwise distinct");
            }
            if (lo < t && t < hi) {
                throw std::invalid_argument("Toffoli target between controls unsupported");
            }
            if (hi < t) {
                // both controls above the target: value flows downward
                cell(lo) = ElementaryGate::IdentityDown;
                cell(hi) = ElementaryGate::MulDown;
                cell(t) = ElementaryGate::AddDown;
                for (int r = lo + 1; r < t; ++r) {
                    if (r != hi) cell(r) = ElementaryGate::Cross;
                }
            } else {
                // both controls below the target: value flows upward
                cell(hi) = ElementaryGate::IdentityUp;
                cell(lo) = ElementaryGate::MulUp;
                cell(t) = ElementaryGate::AddUp;
                for (int r = t + 1; r < hi; ++r) {
                    if (r != lo) cell(r) = ElementaryGate::Cross;
                }
            }
            break;
        }
    }
    return col;
}

}  // namespace

CircuitGrid lower_to_grid(const std::vector<HighGate>& gates, int wires) {
    CircuitGrid grid(wires, static_cast<int>(gates.size()));
    for (std::size_t g = 0; g < gates.size(); ++g) {
        std::vector<ElementaryGate> col = gate_column(gates[g], wires);
        for (int r = 1; r <= wires; ++r) grid.set(r, static_cast<int>(g) + 1, col[r - 1]);
    }
    grid.set_source(gates);
    return grid;
}

std::vector<PlacementError> validate_grid(const CircuitGrid& grid) {
    std::vector<PlacementError> errors;
    const int n = grid.wires();
    for (int c = 1; c <= grid.columns(); ++c) {
        // downward channel, top to bottom
        bool live = false;
        for (int r = 1; r <= n; ++r) {
            switch (grid.at(r, c)) {
                case ElementaryGate::IdentityDown:
                    if (live) errors.push_back({r, c, "downward value not consumed"});
                    live = true;
                    break;
                case ElementaryGate::MulDown:
                    if (!live) errors.push_back({r, c, "dangling multiplication"});
                    live = true;
                    break;
                case ElementaryGate::AddDown:
                    if (!live) errors.push_back({r, c, "dangling addition"});
                    live = false;
                    break;
                case ElementaryGate::Cross:
                    break;  // passes any vertical value through
                default:
                    if (live) {
                        errors.push_back({r, c, "downward value not consumed"});
                        live = false;
                    }
                    break;
            }
        }
        if (live) errors.push_back({n, c, "downward value leaves the grid"});

        // upward channel, bottom to top
        live = false;
        for (int r = n; r >= 1; --r) {
            switch (grid.at(r, c)) {
                case ElementaryGate::IdentityUp:
                    if (live) errors.push_back({r, c, "upward value not consumed"});
                    live = true;
                    break;
                case ElementaryGate::MulUp:
                    if (!live) errors.push_back({r, c, "dangling multiplication"});
                    live = true;
                    break;
                case ElementaryGate::AddUp:
                    if (!live) errors.push_back({r, c, "dangling addition"});
                    live = false;
                    break;
                case ElementaryGate::Cross:
                    break;
                default:
                    if (live) {
                        errors.push_back({r, c, "upward value not consumed"});
                        live = false;
                    }
                    break;
            }
        }
        if (live) errors.push_back({1, c, "upward value leaves the grid"});
    }
    return errors;
}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream split(raw);
        Line line{number, {}};
        std::string token;
        while (split >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a number, got '" + token + "'");
    }
    return value;
}

HighGate parse_gate_line(const Line& line, int wires) {
    const auto& t = line.tokens;
    HighGate gate;
    if (t[0] == "H" && t.size() == 2) {
        gate = HighGate::hadamard(parse_int(t[1], line.number));
    } else if (t[0] == "TOF" && t.size() == 4) {
        gate = HighGate::toffoli(parse_int(t[1], line.number), parse_int(t[2], line.number),
                                 parse_int(t[3], line.number));
    } else if (t[0] == "CNOT" && t.size() == 3) {
        gate = HighGate::cnot(parse_int(t[1], line.number), parse_int(t[2], line.number));
    } else {
        throw ParseError(line.number, "expected 'H <w>', 'TOF <c1> <c2> <t>' or 'CNOT <c> <t>'");
    }
    try {
        gate_column(gate, wires);  // wire ranges, duplicates, target placement
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
    return gate;
}

}  // namespace

CircuitGrid parse_circuit(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "expected 'wires <n>' or 'grid <n> <m>'");

    const Line& head = lines.front();
    if (head.tokens[0] == "wires") {
        if (head.tokens.size() != 2) throw ParseError(head.number, "expected 'wires <n>'");
        int n = parse_int(head.tokens[1], head.number);
        if (n < 1) throw ParseError(head.number, "wire count must be >= 1");
        std::vector<HighGate> gates;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            gates.push_back(parse_gate_line(lines[i], n));
        }
        CircuitGrid grid = lower_to_grid(gates, n);
        if (auto errors = validate_grid(grid); !errors.empty()) {
            throw ValidationError(std::move(errors));
        }
        return grid;
    }

    if (head.tokens[0] == "grid") {
        if (head.tokens.size() != 3) throw ParseError(head.number, "expected 'grid <n> <m>'");
        int n = parse_int(head.tokens[1], head.number);
        int m = parse_int(head.tokens[2], head.number);
        if (n < 1) throw ParseError(head.number, "wire count must be >= 1");
        if (m < 0) throw ParseError(head.number, "column count must be >= 0");
        if (static_cast<int>(lines.size()) - 1 != (m == 0 ? 0 : n)) {
            throw ParseError(head.number, "expected " + std::to_string(m == 0 ? 0 : n) +
                                              " grid rows, got " +
                                              std::to_string(lines.size() - 1));
        }
        CircuitGrid grid(n, m);
        for (int r = 1; r <= n && m > 0; ++r) {
            const Line& line = lines[static_cast<std::size_t>(r)];
            if (static_cast<int>(line.tokens.size()) != m) {
                throw ParseError(line.number, "expected " + std::to_string(m) +
                                                  " cell tokens, got " +
                                                  std::to_string(line.tokens.size()));
            }
            for (int c = 1; c <= m; ++c) {
                auto gate = gate_from_token(line.tokens[static_cast<std::size_t>(c - 1)]);
                if (!gate) {
                    throw ParseError(line.number, "unknown cell token '" +
                                                      line.tokens[static_cast<std::size_t>(c - 1)] +
                                                      "'");
                }
                grid.set(r, c, *gate);
            }
        }
        if (auto errors = validate_grid(grid); !errors.empty()) {
            throw ValidationError(std::move(errors));
        }
        return grid;
    }

    throw ParseError(head.number, "expected 'wires <n>' or 'grid <n> <m>'");
}

std::string render_grid(const CircuitGrid& grid) {
    std::ostringstream out;
    out << "grid " << grid.wires() << ' ' << grid.columns() << '\n';
    if (grid.columns() == 0) {
        out << '\n';
        return out.str();
    }
    for (int r = 1; r <= grid.wires(); ++r) {
        for (int c = 1; c <= grid.columns(); ++c) {
            if (c > 1) out << ' ';
            out << gate_token(grid.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qcpoly::circuit

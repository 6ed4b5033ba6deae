#include "qcpoly/pathsum.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qcpoly/errors.hpp"

namespace qcpoly::pathsum {

using circuit::CircuitGrid;
using circuit::ElementaryGate;
using gf2::Polynomial;
using gf2::Variable;

namespace {

struct WalkResult {
    std::vector<Polynomial> wires;
    int hadamards = 0;
    Polynomial phase;
};

/// One pass over the grid. Every cell of a column reads the wire values
/// entering the column; vertical channels resolve first, Hadamard cells
/// last (they renumber their wire, not the channel inputs).
WalkResult walk(const CircuitGrid& grid, std::vector<std::vector<Polynomial>>* trace) {
    const int n = grid.wires();
    WalkResult res;
    res.wires.reserve(n);
    for (int j = 1; j <= n; ++j) res.wires.push_back(Polynomial::var(Variable::input(j)));
    if (trace) trace->push_back(res.wires);

    for (int c = 1; c <= grid.columns(); ++c) {
        const std::vector<Polynomial> in = res.wires;
        Polynomial channel;
        for (int r = 1; r <= n; ++r) {
            switch (grid.at(r, c)) {
                case ElementaryGate::IdentityDown:
                    channel = in[r - 1];
                    break;
                case ElementaryGate::MulDown:
                    channel = boolean_reduce(channel * in[r - 1]);
                    break;
                case ElementaryGate::AddDown:
                    res.wires[r - 1] = in[r - 1] + channel;
                    channel = Polynomial::zero();
                    break;
                default:
                    break;
            }
        }
        for (int r = n; r >= 1; --r) {
            switch (grid.at(r, c)) {
                case ElementaryGate::IdentityUp:
                    channel = in[r - 1];
                    break;
                case ElementaryGate::MulUp:
                    channel = boolean_reduce(channel * in[r - 1]);
                    break;
                case ElementaryGate::AddUp:
                    res.wires[r - 1] = in[r - 1] + channel;
                    channel = Polynomial::zero();
                    break;
                default:
                    break;
            }
        }
        for (int r = 1; r <= n; ++r) {
            if (grid.at(r, c) != ElementaryGate::Hadamard) continue;
            ++res.hadamards;
            Polynomial x = Polynomial::var(Variable::path(res.hadamards));
            res.phase += boolean_reduce(in[r - 1] * x);
            res.wires[r - 1] = x;
        }
        if (trace) trace->push_back(res.wires);
    }
    return res;
}

void require_valid(const CircuitGrid& grid) {
    auto errors = circuit::validate_grid(grid);
    if (!errors.empty()) throw circuit::ValidationError(std::move(errors));
}

Polynomial bit_polynomial(char bit) {
    return bit == '1' ? Polynomial::one() : Polynomial::zero();
}

void check_bits(const std::string& bits, int wires, const char* which) {
    if (static_cast<int>(bits.size()) != wires) {
        throw std::invalid_argument(std::string(which) + " bitstring has " +
                                    std::to_string(bits.size()) + " bits, the circuit has " +
                                    std::to_string(wires) + " wires");
    }
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument(std::string(which) + " bitstring contains '" +
                                        std::string(1, ch) + "'; only 0 and 1 are allowed");
        }
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::vector<Polynomial> BoundSystem::f0() const {
    std::vector<Polynomial> polys = constraints;
    polys.push_back(phase);
    return polys;
}

std::vector<Polynomial> BoundSystem::f1() const {
    std::vector<Polynomial> polys = constraints;
    polys.push_back(phase + Polynomial::one());
    return polys;
}

PolynomialSystem extract_system(const CircuitGrid& grid) {
    require_valid(grid);
    WalkResult res = walk(grid, nullptr);

    PolynomialSystem sys;
    sys.wires = grid.wires();
    sys.hadamards = res.hadamards;
    sys.phase = std::move(res.phase);
    sys.outputs.reserve(res.wires.size());
    for (int j = 1; j <= sys.wires; ++j) {
        sys.outputs.push_back(res.wires[j - 1] + Polynomial::var(Variable::output(j)));
    }
    return sys;
}

std::vector<std::vector<Polynomial>> wire_trace(const CircuitGrid& grid) {
    require_valid(grid);
    std::vector<std::vector<Polynomial>> trace;
    walk(grid, &trace);
    return trace;
}

BoundSystem bind_system(const PolynomialSystem& sys, const std::string& input_bits,
                        const std::string& output_bits) {
    check_bits(input_bits, sys.wires, "input");
    check_bits(output_bits, sys.wires, "output");

    auto bind = [&](Polynomial p) {
        for (int i = 1; i <= sys.wires; ++i) {
            p = substitute(p, Variable::input(i), bit_polynomial(input_bits[i - 1]));
            p = substitute(p, Variable::output(i), bit_polynomial(output_bits[i - 1]));
        }
        return p;
    };

    BoundSystem bound;
    bound.hadamards = sys.hadamards;
    bound.constraints.reserve(sys.outputs.size());
    for (const Polynomial& f : sys.outputs) bound.constraints.push_back(bind(f));
    bound.phase = bind(sys.phase);
    return bound;
}

ExportFormat parse_format(const std::string& name) {
    if (name == "plain") return ExportFormat::Plain;
    if (name == "maple") return ExportFormat::Maple;
    if (name == "mathematica") return ExportFormat::Mathematica;
    if (name == "structured") return ExportFormat::Structured;
    throw std::invalid_argument("unknown format \"" + name +
                                "\" (expected plain, maple, mathematica or structured)");
}

std::string export_system(const PolynomialSystem& sys, ExportFormat format) {
    switch (format) {
        case ExportFormat::Plain: {
            std::string out;
            for (std::size_t j = 0; j < sys.outputs.size(); ++j) {
                out += "f" + std::to_string(j + 1) + " = " + sys.outputs[j].str() + "\n";
            }
            out += "phi = " + sys.phase.str() + "\n";
            return out;
        }
        case ExportFormat::Maple: {
            std::vector<std::string> parts;
            for (const Polynomial& f : sys.outputs) parts.push_back(f.str());
            parts.push_back(sys.phase.str());
            return "F := [" + join(parts, ", ") + "]:\n";
        }
        case ExportFormat::Mathematica: {
            std::vector<std::string> parts;
            for (const Polynomial& f : sys.outputs) parts.push_back(f.str(" "));
            parts.push_back(sys.phase.str(" "));
            return "{" + join(parts, ", ") + "}\n";
        }
        case ExportFormat::Structured: {
            nlohmann::ordered_json doc;
            doc["wires"] = sys.wires;
            doc["hadamards"] = sys.hadamards;
            nlohmann::ordered_json outs = nlohmann::ordered_json::object();
            for (std::size_t j = 0; j < sys.outputs.size(); ++j) {
                outs["f" + std::to_string(j + 1)] = sys.outputs[j].str();
            }
            doc["outputs"] = outs;
            doc["phase"] = sys.phase.str();
            return doc.dump(2) + "\n";
        }
    }
    throw std::invalid_argument("unhandled export format");
}

PolynomialSystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    PolynomialSystem sys;
    bool saw_phi = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        if (auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
        auto first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = body.find_last_not_of(" \t\r");
        body = body.substr(first, last - first + 1);

        auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected \"name = polynomial\"");
        std::string name = body.substr(0, eq);
        if (auto end = name.find_last_not_of(" \t"); end != std::string::npos) {
            name.erase(end + 1);
        }

        Polynomial poly;
        try {
            poly = gf2::parse_polynomial(body.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }

        if (name == "phi") {
            if (saw_phi) throw ParseError(lineno, "duplicate phi line");
            saw_phi = true;
            sys.phase = std::move(poly);
        } else {
            if (saw_phi) throw ParseError(lineno, "output lines must precede phi");
            std::string expected = "f" + std::to_string(sys.outputs.size() + 1);
            if (name != expected) {
                throw ParseError(lineno, "expected \"" + expected + "\", got \"" + name + "\"");
            }
            sys.outputs.push_back(std::move(poly));
        }
    }
    if (!saw_phi) throw ParseError(lineno, "missing phi line");

    sys.wires = static_cast<int>(sys.outputs.size());
    sys.hadamards = 0;
    auto scan = [&](const Polynomial& p) {
        for (const Variable& v : p.variables()) {
            if (v.kind == gf2::VarKind::Path) sys.hadamards = std::max(sys.hadamards, v.index);
        }
    };
    for (const Polynomial& f : sys.outputs) scan(f);
    scan(sys.phase);
    return sys;
}

}  // namespace qcpoly::pathsum

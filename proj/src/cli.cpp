#include "qcpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcpoly/circuit.hpp"
#include "qcpoly/counting.hpp"
#include "qcpoly/errors.hpp"
#include "qcpoly/gf2poly.hpp"
#include "qcpoly/groebner.hpp"
#include "qcpoly/pathsum.hpp"
#include "qcpoly/simulator.hpp"

namespace qcpoly::cli {

namespace {

/// Wrong kind of invocation rather than a failed computation; exits 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;  // empty = standard output
    std::string format = "plain";
    std::string backend = "brute";
    std::string system = "f0";
    std::string a_bits;
    std::string b_bits;
    int h_cap = 24;
    int wire_cap = 6;
    int oracle_cap = 12;
    int max_pairs = 10000;
    int max_basis = 10000;
    bool verbose = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

circuit::CircuitGrid read_circuit(const std::string& path) {
    return circuit::parse_circuit(read_file(path));
}

std::string decimal(double v) {
    std::ostringstream s;
    s << std::setprecision(15) << v;
    return s.str();
}

std::string unnormalized_str(long long m, int h) {
    return std::to_string(m) + "/sqrt(2^" + std::to_string(h) + ")";
}

std::string run_compile(const Options& opt) {
    return circuit::render_grid(read_circuit(opt.input));
}

std::string run_polys(const Options& opt) {
    pathsum::PolynomialSystem sys = pathsum::extract_system(read_circuit(opt.input));
    return pathsum::export_system(sys, pathsum::parse_format(opt.format));
}

std::string run_amplitude(const Options& opt, counting::Backend backend,
                          const counting::Limits& limits) {
    pathsum::PolynomialSystem sys = pathsum::extract_system(read_circuit(opt.input));
    pathsum::BoundSystem bound = pathsum::bind_system(sys, opt.a_bits, opt.b_bits);
    counting::SolutionCounts counts = counting::count_paths(bound, backend, limits);
    const long long m = counts.n0 - counts.n1;
    counting::Amplitude amp = counting::Amplitude::normalized(m, sys.hadamards);

    std::string line;
    if (opt.verbose) {
        line = unnormalized_str(m, sys.hadamards);
        if (amp.rational_str() != line) line += " = " + amp.rational_str();
    } else {
        line = amp.str();
    }
    return line + " = " + decimal(amp.value()) + "\n";
}

std::string run_count(const Options& opt, counting::Backend backend,
                      const counting::Limits& limits) {
    pathsum::PolynomialSystem sys = pathsum::extract_system(read_circuit(opt.input));
    pathsum::BoundSystem bound = pathsum::bind_system(sys, opt.a_bits, opt.b_bits);
    counting::SolutionCounts counts = counting::count_paths(bound, backend, limits);
    return "N0 = " + std::to_string(counts.n0) + "\nN1 = " + std::to_string(counts.n1) + "\n";
}

std::string table_block(const std::vector<std::vector<std::string>>& cells) {
    std::size_t width = 0;
    for (const auto& row : cells) {
        for (const auto& cell : row) width = std::max(width, cell.size());
    }
    std::string text;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ' ';
            text += std::string(width - row[i].size(), ' ') + row[i];
        }
        text += '\n';
    }
    return text;
}

std::string run_matrix(const Options& opt, counting::Backend backend,
                       const counting::Limits& limits) {
    circuit::CircuitGrid grid = read_circuit(opt.input);
    pathsum::PolynomialSystem sys = pathsum::extract_system(grid);
    auto matrix = counting::full_matrix(grid, backend, limits);

    const int dim = static_cast<int>(matrix.size());
    std::vector<std::vector<std::string>> ints(dim), decimals(dim);
    for (int b = 0; b < dim; ++b) {
        for (int a = 0; a < dim; ++a) {
            ints[b].push_back(std::to_string(matrix[b][a].units_at_scale(sys.hadamards)));
            decimals[b].push_back(decimal(matrix[b][a].value()));
        }
    }

    std::string text = "# " + std::to_string(grid.wires()) + " wires, " +
                       std::to_string(sys.hadamards) +
                       (sys.hadamards == 1 ? " path variable" : " path variables") +
                       "; rows are b, columns are a (big-endian, wire 1 = most "
                       "significant bit)\n";
    text += "# integer entries at the common scale 1/sqrt(2^" + std::to_string(sys.hadamards) +
            ")\n";
    text += table_block(ints);
    text += "# decimal\n";
    text += table_block(decimals);
    return text;
}

std::string run_groebner(const Options& opt) {
    pathsum::PolynomialSystem sys = pathsum::extract_system(read_circuit(opt.input));
    pathsum::BoundSystem bound = pathsum::bind_system(sys, opt.a_bits, opt.b_bits);
    std::vector<gf2::Polynomial> generators =
        opt.system == "f1" ? bound.f1() : bound.f0();
    for (int i = 1; i <= bound.hadamards; ++i) {
        gf2::Variable x = gf2::Variable::path(i);
        generators.push_back(gf2::Polynomial(gf2::Monomial::var(x, 2)) + gf2::Polynomial::var(x));
    }

    groebner::MonomialOrder order = groebner::MonomialOrder::path_order(bound.hadamards);
    groebner::GroebnerBasis gb =
        groebner::buchberger(generators, order, {opt.max_pairs, opt.max_basis});

    std::string text = "# order:";
    for (std::size_t i = 0; i < order.ranking().size(); ++i) {
        text += (i ? " > " : " ") + order.ranking()[i].name();
    }
    text += "\n";
    for (const gf2::Polynomial& g : gb.polys) text += g.str() + "\n";
    return text;
}

int run_verify(const Options& opt, counting::Backend backend, const counting::Limits& limits,
               std::string& text) {
    circuit::CircuitGrid grid = read_circuit(opt.input);
    if (!grid.source()) {
        throw UsageError(
            "verify needs the gate-list circuit form (wires/H/TOF/CNOT); a raw grid has no gate "
            "list to replay on the oracle");
    }

    auto expected = simulator::oracle_matrix(*grid.source(), grid.wires(), opt.oracle_cap);
    auto actual = counting::full_matrix(grid, backend, limits);

    const int dim = static_cast<int>(actual.size());
    const int total = dim * dim;
    int matches = 0;
    std::string mismatches;
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            if (actual[b][a] == expected[b][a]) {
                ++matches;
                continue;
            }
            mismatches += "a=" + counting::basis_bits(a, grid.wires()) +
                          " b=" + counting::basis_bits(b, grid.wires()) + ": path-sum " +
                          actual[b][a].str() + ", oracle " + expected[b][a].str() + "\n";
        }
    }
    text = std::to_string(matches) + "/" + std::to_string(total) + " amplitudes match\n" +
           mismatches;
    return matches == total ? 0 : 1;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file) throw std::runtime_error("cannot write " + opt.output);
    file << text;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"quantum circuits as polynomial systems over GF(2)", "qcpoly"};
    app.require_subcommand(1);

    CLI::Validator bits_check(
        [](std::string& s) -> std::string {
            for (char ch : s) {
                if (ch != '0' && ch != '1') return "bitstrings use only the characters 0 and 1";
            }
            return {};
        },
        "BITS");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", opt.input, "circuit file in the text DSL")->required();
        sub->add_option("-o,--output", opt.output, "write the result here instead of stdout");
    };
    auto add_bits = [&](CLI::App* sub) {
        sub->add_option("-a,--input-bits", opt.a_bits,
                        "input basis state a, big-endian: leftmost character is wire 1")
            ->required()
            ->check(bits_check);
        sub->add_option("-b,--output-bits", opt.b_bits,
                        "output basis state b, same convention")
            ->required()
            ->check(bits_check);
    };
    auto add_budgets = [&](CLI::App* sub) {
        sub->add_option("--max-pairs", opt.max_pairs, "Groebner pair budget")
            ->capture_default_str();
        sub->add_option("--max-basis", opt.max_basis, "Groebner basis size budget")
            ->capture_default_str();
    };
    auto add_backend = [&](CLI::App* sub) {
        sub->add_option("--backend", opt.backend, "root-counting backend")
            ->check(CLI::IsMember({"brute", "groebner"}))
            ->capture_default_str();
        sub->add_option("--h-cap", opt.h_cap, "brute-force cap on path variables")
            ->capture_default_str();
        add_budgets(sub);
    };

    CLI::App* compile =
        app.add_subcommand("compile", "parse a circuit and print its elementary gate grid");
    add_input(compile);

    CLI::App* polys = app.add_subcommand("polys", "print the circuit's polynomial system");
    add_input(polys);
    polys->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "maple", "mathematica", "structured"}))
        ->capture_default_str();

    CLI::App* amplitude =
        app.add_subcommand("amplitude", "compute the matrix element <b|U|a> exactly");
    add_input(amplitude);
    add_bits(amplitude);
    add_backend(amplitude);
    amplitude->add_flag("-v,--verbose", opt.verbose,
                        "also print the unnormalized (N0-N1)/sqrt(2^h) form");

    CLI::App* count = app.add_subcommand("count", "print the root counts N0 and N1 for (a, b)");
    add_input(count);
    add_bits(count);
    add_backend(count);

    CLI::App* matrix = app.add_subcommand("matrix", "print the full 2^n x 2^n matrix");
    add_input(matrix);
    add_backend(matrix);
    matrix->add_option("--wire-cap", opt.wire_cap, "largest allowed wire count")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "compare every path-sum amplitude against the statevector oracle");
    add_input(verify);
    add_backend(verify);
    verify->add_option("--wire-cap", opt.wire_cap, "largest allowed wire count")
        ->capture_default_str();
    verify->add_option("--oracle-cap", opt.oracle_cap, "statevector wire cap")
        ->capture_default_str();

    CLI::App* groebner_cmd = app.add_subcommand(
        "groebner", "print the reduced lex Groebner basis of a bound system");
    add_input(groebner_cmd);
    add_bits(groebner_cmd);
    groebner_cmd->add_option("--system", opt.system, "which system to triangularize")
        ->check(CLI::IsMember({"f0", "f1"}))
        ->capture_default_str();
    add_budgets(groebner_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const counting::Limits limits{opt.h_cap, opt.wire_cap, {opt.max_pairs, opt.max_basis}};
        const counting::Backend backend = counting::parse_backend(opt.backend);

        std::string text;
        int code = 0;
        if (app.got_subcommand(compile)) {
            text = run_compile(opt);
        } else if (app.got_subcommand(polys)) {
            text = run_polys(opt);
        } else if (app.got_subcommand(amplitude)) {
            text = run_amplitude(opt, backend, limits);
        } else if (app.got_subcommand(count)) {
            text = run_count(opt, backend, limits);
        } else if (app.got_subcommand(matrix)) {
            text = run_matrix(opt, backend, limits);
        } else if (app.got_subcommand(verify)) {
            code = run_verify(opt, backend, limits, text);
        } else if (app.got_subcommand(groebner_cmd)) {
            text = run_groebner(opt);
        }
        emit(opt, text, out);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcpoly::cli

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcpoly/cli.hpp"

namespace fs = std::filesystem;

namespace {

const char* kFixture =
    "wires 3\n"
    "H 1\n"
    "H 2\n"
    "TOF 1 2 3\n"
    "H 1\n"
    "H 3\n"
    "TOF 2 3 1\n";

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = qcpoly::cli::run(std::move(args), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream file(path);
    file << text;
    return path.string();
}

std::string fixture_path() { return write_temp("qcpoly_cli_fixture.qc", kFixture); }

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compile prints the lowered grid") {
    const CliResult r = invoke({"compile", fixture_path()});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "grid 3 6\n"
          "H I ID H I AU\n"
          "I H MD I I MU\n"
          "I I AD I H IU\n");
}

TEST_CASE("polys prints the polynomial system") {
    const CliResult plain = invoke({"polys", fixture_path()});
    CHECK(plain.code == 0);
    CHECK(plain.out ==
          "f1 = x2*x4 + x3 + b1\n"
          "f2 = x2 + b2\n"
          "f3 = x4 + b3\n"
          "phi = x1*x2*x4 + x1*x3 + x1*a1 + x2*a2 + x4*a3\n");

    const CliResult mm = invoke({"polys", fixture_path(), "--format", "mathematica"});
    CHECK(mm.code == 0);
    CHECK(mm.out ==
          "{x2 x4 + x3 + b1, x2 + b2, x4 + b3, "
          "x1 x2 x4 + x1 x3 + x1 a1 + x2 a2 + x4 a3}\n");

    CHECK(invoke({"polys", fixture_path(), "--format", "latex"}).code == 2);
}

TEST_CASE("amplitude prints the normalized value and decimal") {
    const CliResult r = invoke({"amplitude", fixture_path(), "-a", "001", "-b", "000"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/sqrt(2^2) = 0.5\n");

    const CliResult v = invoke({"amplitude", fixture_path(), "-a", "001", "-b", "000", "-v"});
    CHECK(v.code == 0);
    CHECK(v.out == "2/sqrt(2^4) = 1/2 = 0.5\n");

    const CliResult zero = invoke({"amplitude", fixture_path(), "-a", "111", "-b", "000"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0/sqrt(2^0) = 0\n");

    const CliResult gb = invoke(
        {"amplitude", fixture_path(), "-a", "001", "-b", "000", "--backend", "groebner"});
    CHECK(gb.out == "1/sqrt(2^2) = 0.5\n");
}

TEST_CASE("count prints both root counts") {
    const CliResult r = invoke({"count", fixture_path(), "-a", "001", "-b", "000"});
    CHECK(r.code == 0);
    CHECK(r.out == "N0 = 2\nN1 = 0\n");

    const CliResult gb = invoke(
        {"count", fixture_path(), "-a", "111", "-b", "000", "--backend", "groebner"});
    CHECK(gb.out == "N0 = 1\nN1 = 1\n");
}

TEST_CASE("matrix prints exact and decimal tables") {
    const std::string identity = write_temp("qcpoly_cli_identity.qc", "wires 2\n");
    const CliResult r = invoke({"matrix", identity});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# 2 wires, 0 path variables; rows are b, columns are a "
          "(big-endian, wire 1 = most significant bit)\n"
          "# integer entries at the common scale 1/sqrt(2^0)\n"
          "1 0 0 0\n"
          "0 1 0 0\n"
          "0 0 1 0\n"
          "0 0 0 1\n"
          "# decimal\n"
          "1 0 0 0\n"
          "0 1 0 0\n"
          "0 0 1 0\n"
          "0 0 0 1\n");

    const std::string h_only = write_temp("qcpoly_cli_h.qc", "wires 1\nH 1\n");
    const CliResult h = invoke({"matrix", h_only});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "# integer entries at the common scale 1/sqrt(2^1)\n"
                                     " 1  1\n"
                                     " 1 -1\n"));
}

TEST_CASE("verify reports full agreement on the fixture") {
    const CliResult r = invoke({"verify", fixture_path()});
    CHECK(r.code == 0);
    CHECK(r.out == "64/64 amplitudes match\n");

    const CliResult gb = invoke({"verify", fixture_path(), "--backend", "groebner"});
    CHECK(gb.code == 0);
    CHECK(gb.out == "64/64 amplitudes match\n");
}

TEST_CASE("verify refuses a raw grid file") {
    const std::string raw = write_temp("qcpoly_cli_raw.qc", "grid 2 1\nH\nI\n");
    const CliResult r = invoke({"verify", raw});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "gate-list"));
}

TEST_CASE("groebner prints the reduced basis under the path order") {
    const CliResult f0 = invoke({"groebner", fixture_path(), "-a", "001", "-b", "000"});
    CHECK(f0.code == 0);
    CHECK(f0.out ==
          "# order: x1 > x2 > x3 > x4\n"
          "x1^2 + x1\n"
          "x2\n"
          "x3\n"
          "x4\n");

    const CliResult f1 = invoke(
        {"groebner", fixture_path(), "-a", "001", "-b", "000", "--system", "f1"});
    CHECK(f1.code == 0);
    CHECK(f1.out == "# order: x1 > x2 > x3 > x4\n1\n");
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"transmogrify", "x.qc"}).code == 2);
    CHECK(invoke({"amplitude", fixture_path(), "-b", "000"}).code == 2);
    CHECK(invoke({"amplitude", fixture_path(), "-a", "0x1", "-b", "000"}).code == 2);
    CHECK(invoke({"count", fixture_path(), "-a", "001", "-b", "000", "--backend", "magic"}).code ==
          2);
}

TEST_CASE("domain problems exit with code 1") {
    const CliResult missing = invoke({"compile", (fs::temp_directory_path() / "no.qc").string()});
    CHECK(missing.code == 1);
    CHECK(contains(missing.err, "cannot read"));

    const std::string bad = write_temp("qcpoly_cli_bad.qc", "wires 3\nTOF 1 3 2\n");
    const CliResult between = invoke({"polys", bad});
    CHECK(between.code == 1);
    CHECK(contains(between.err, "line 2"));

    const std::string wide = write_temp("qcpoly_cli_wide.qc", "wires 3\n");
    const CliResult capped = invoke({"matrix", wide, "--wire-cap", "2"});
    CHECK(capped.code == 1);
    CHECK(contains(capped.err, "wire cap"));

    const CliResult bits = invoke({"amplitude", fixture_path(), "-a", "01", "-b", "000"});
    CHECK(bits.code == 1);
    CHECK(contains(bits.err, "bitstring has 2 bits"));
}

TEST_CASE("help is available and exits cleanly") {
    const CliResult top = invoke({"--help"});
    CHECK(top.code == 0);
    CHECK(contains(top.out, "qcpoly"));
    CHECK(contains(top.out, "amplitude"));

    const CliResult sub = invoke({"amplitude", "--help"});
    CHECK(sub.code == 0);
    CHECK(contains(sub.out, "--input-bits"));
}

TEST_CASE("results can be written to a file") {
    const fs::path target = fs::temp_directory_path() / "qcpoly_cli_out.txt";
    fs::remove(target);
    const CliResult r =
        invoke({"amplitude", fixture_path(), "-a", "001", "-b", "000", "-o", target.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(target);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "1/sqrt(2^2) = 0.5\n");
}

TEST_CASE("output is deterministic across runs") {
    const std::vector<std::string> args = {"matrix", fixture_path()};
    const CliResult first = invoke(args);
    const CliResult second = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "# 3 wires, 4 path variables"));
}

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcpoly::circuit {

/// The nine cell gates a grid column is built from. Empty cells are Identity.
/// Up/Down name the direction a cell's vertical output travels.
enum class ElementaryGate {
    Identity,
    Cross,
    IdentityUp,
    IdentityDown,
    MulUp,
    MulDown,
    AddUp,
    AddDown,
    Hadamard,
};

/// Grid-file token for a cell gate ("I", "X", "IU", "ID", "MU", "MD", "AU", "AD", "H").
std::string_view gate_token(ElementaryGate g);
/// Inverse of gate_token; nullopt for unknown tokens.
std::optional<ElementaryGate> gate_from_token(std::string_view token);

/// A gate at the circuit level. Wires are 1-indexed from the top.
struct HighGate {
    enum class Kind { Hadamard, Toffoli, Cnot };

    Kind kind = Kind::Hadamard;
    int wire = 0;      // Hadamard target
    int control1 = 0;  // Toffoli/Cnot control
    int control2 = 0;  // Toffoli second control
    int target = 0;    // Toffoli/Cnot target

    static HighGate hadamard(int wire) { return {Kind::Hadamard, wire, 0, 0, 0}; }
    static HighGate toffoli(int c1, int c2, int target) {
        return {Kind::Toffoli, 0, c1, c2, target};
    }
    static HighGate cnot(int control, int target) { return {Kind::Cnot, 0, control, 0, target}; }

    bool operator==(const HighGate&) const = default;
};

struct PlacementError {
    int row = 0;
    int col = 0;
    std::string reason;
};

/// Aggregates the placement errors a grid failed validation with.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<PlacementError> errors);
    const std::vector<PlacementError>& errors() const { return errors_; }

  private:
    std::vector<PlacementError> errors_;
};

/// An n x m table of cell gates, columns executing left to right. The
/// optional source records the gate list a grid was lowered from; it is
/// provenance only and takes no part in equality.
class CircuitGrid {
  public:
    CircuitGrid(int wires, int columns);

    int wires() const { return wires_; }
    int columns() const { return static_cast<int>(cols_.size()); }

    /// 1-indexed access; row in [1, wires], col in [1, columns].
    ElementaryGate at(int row, int col) const;
    void set(int row, int col, ElementaryGate g);

    /// Number of cells equal to g.
    int count(ElementaryGate g) const;

    const std::optional<std::vector<HighGate>>& source() const { return source_; }
    void set_source(std::vector<HighGate> gates) { source_ = std::move(gates); }

    bool operator==(const CircuitGrid& rhs) const {
        return wires_ == rhs.wires_ && cols_ == rhs.cols_;
    }

  private:
    int wires_;
    std::vector<std::vector<ElementaryGate>> cols_;  // cols_[c][r], 0-indexed
    std::optional<std::vector<HighGate>> source_;
};

/// Read a circuit from the text DSL ('#' starts a comment):
///
///   gate-list form:  "wires <n>" then lines "H <w>", "TOF <c1> <c2> <t>",
///                    "CNOT <c> <t>" (lowered one column per gate);
///   grid form:       "grid <n> <m>" then n rows of m cell tokens.
///
/// The result always passes validate_grid. Throws ParseError (with line
/// number) or ValidationError.
CircuitGrid parse_circuit(const std::string& text);

/// Lower circuit-level gates onto a grid, one column per gate. Throws
/// std::invalid_argument for invalid wires or a Toffoli/Cnot target
/// strictly between the control rows.
CircuitGrid lower_to_grid(const std::vector<HighGate>& gates, int wires);

/// Check the vertical dataflow of every column: each emitted value must
/// travel through Cross cells and be consumed by a matching Mul/Add cell
/// inside the grid; Mul/Add cells must have a value arriving. Returns the
/// violations (empty means the grid is well-formed).
std::vector<PlacementError> validate_grid(const CircuitGrid& grid);

/// Emit the grid-form DSL text; parse_circuit(render_grid(g)) == g for
/// every valid grid.
std::string render_grid(const CircuitGrid& grid);

}  // namespace qcpoly::circuit

#pragma once

#include <string>
#include <vector>

#include "qcpoly/circuit.hpp"
#include "qcpoly/gf2poly.hpp"
#include "qcpoly/groebner.hpp"
#include "qcpoly/pathsum.hpp"

namespace qcpoly::counting {

/// Root counts of F0 and F1 for one bound system; n0 + n1 <= 2^h.
struct SolutionCounts {
    long long n0 = 0;
    long long n1 = 0;

    bool operator==(const SolutionCounts&) const = default;
};

/// Exact amplitude units * 2^(-scale/2), kept normalized: scale = 0 when
/// units = 0, otherwise units odd or scale < 2. Two amplitudes are equal
/// exactly when their (units, scale) pairs are.
class Amplitude {
  public:
    Amplitude() = default;

    /// Normalize (m, h): halve m and drop h by 2 while m is even and h >= 2.
    static Amplitude normalized(long long m, int h);

    long long units() const { return units_; }
    int scale() const { return scale_; }

    double value() const;

    /// "m/sqrt(2^h)" on the normalized pair.
    std::string str() const;
    /// Friendlier exact form: integer for scale 0, "m/2^(h/2)" for even
    /// scale ("1/2"), str() when the root cannot be eliminated.
    std::string rational_str() const;

    /// The m with *this = m/sqrt(2^target); target must be reachable
    /// (>= scale, parity matching) unless the amplitude is zero.
    long long units_at_scale(int target) const;

    bool operator==(const Amplitude&) const = default;

  private:
    long long units_ = 0;
    int scale_ = 0;
};

enum class Backend { Brute, Groebner };

/// "brute" or "groebner"; anything else is std::invalid_argument.
Backend parse_backend(const std::string& name);

struct Limits {
    int h_cap = 24;     // brute-force enumeration bound
    int wire_cap = 6;   // full_matrix bound
    groebner::Limits gb;
};

/// Number of common roots in Z2^h by exhaustive enumeration. Polynomials
/// must be over path variables x1..xh. h past h_cap raises
/// ResourceLimitError suggesting the groebner backend.
long long brute_force_count(const std::vector<gf2::Polynomial>& polys, int hadamards,
                            int h_cap = 24);

/// N0 and N1 of a bound system by the selected backend.
SolutionCounts count_paths(const pathsum::BoundSystem& bound, Backend backend,
                           const Limits& limits = {});

/// The matrix element <b|U|a> = (N0 - N1)/sqrt(2^h), normalized.
Amplitude amplitude(const circuit::CircuitGrid& grid, const std::string& input_bits,
                    const std::string& output_bits, Backend backend = Backend::Brute,
                    const Limits& limits = {});

/// All 2^n x 2^n matrix elements; result[b][a] = amplitude(grid, a, b) with
/// basis states indexed big-endian (wire 1 is the most significant bit).
std::vector<std::vector<Amplitude>> full_matrix(const circuit::CircuitGrid& grid,
                                                Backend backend = Backend::Brute,
                                                const Limits& limits = {});

/// Big-endian index of a bitstring: basis_index("001") = 1, basis_index("10") = 2.
int basis_index(const std::string& bits);
/// Inverse of basis_index for a given wire count.
std::string basis_bits(int index, int wires);

}  // namespace qcpoly::counting

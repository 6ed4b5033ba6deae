#include "qcpoly/counting.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcpoly/errors.hpp"

namespace qcpoly::counting {

using gf2::Polynomial;
using gf2::Variable;

Amplitude Amplitude::normalized(long long m, int h) {
    if (h < 0) throw std::invalid_argument("negative amplitude scale");
    if (m == 0) h = 0;
    while (m % 2 == 0 && m != 0 && h >= 2) {
        m /= 2;
        h -= 2;
    }
    Amplitude amp;
    amp.units_ = m;
    amp.scale_ = h;
    return amp;
}

double Amplitude::value() const {
    double v = std::ldexp(static_cast<double>(units_), -(scale_ / 2));
    if (scale_ % 2) v /= std::numbers::sqrt2;
    return v;
}

std::string Amplitude::str() const {
    return std::to_string(units_) + "/sqrt(2^" + std::to_string(scale_) + ")";
}

std::string Amplitude::rational_str() const {
    if (units_ == 0) return "0";
    if (scale_ == 0) return std::to_string(units_);
    if (scale_ % 2 == 0) {
        return std::to_string(units_) + "/" + std::to_string(1LL << (scale_ / 2));
    }
    return str();
}

long long Amplitude::units_at_scale(int target) const {
    if (units_ == 0) return 0;
    if (target < scale_ || (target - scale_) % 2 != 0) {
        throw std::invalid_argument("amplitude " + str() + " has no integer form at scale " +
                                    std::to_string(target));
    }
    return units_ << ((target - scale_) / 2);
}

Backend parse_backend(const std::string& name) {
    if (name == "brute") return Backend::Brute;
    if (name == "groebner") return Backend::Groebner;
    throw std::invalid_argument("unknown backend \"" + name + "\" (expected brute or groebner)");
}

long long brute_force_count(const std::vector<Polynomial>& polys, int hadamards, int h_cap) {
    if (hadamards < 0) throw std::invalid_argument("negative variable count");
    if (hadamards > h_cap) {
        throw ResourceLimitError("h = " + std::to_string(hadamards) +
                                 " path variables exceed the enumeration cap " +
                                 std::to_string(h_cap) +
                                 "; raise the cap or use the groebner backend");
    }

    // Compile each polynomial to monomial bitmasks; the value at a point s
    // is the XOR over monomials of [mask subset of s].
    std::vector<std::vector<unsigned>> compiled;
    compiled.reserve(polys.size());
    for (const Polynomial& p : polys) {
        Polynomial reduced = boolean_reduce(p);
        std::vector<unsigned> masks;
        masks.reserve(reduced.term_count());
        for (const gf2::Monomial& m : reduced.terms()) {
            unsigned mask = 0;
            for (const Variable& v : m.variables()) {
                if (v.kind != gf2::VarKind::Path || v.index > hadamards) {
                    throw std::invalid_argument("brute_force_count expects polynomials over x1..x" +
                                                std::to_string(hadamards) + "; found " + v.name());
                }
                mask |= 1u << (v.index - 1);
            }
            masks.push_back(mask);
        }
        compiled.push_back(std::move(masks));
    }

    long long count = 0;
    for (unsigned long long point = 0; point < (1ull << hadamards); ++point) {
        bool root = true;
        for (const auto& masks : compiled) {
            bool value = false;
            for (unsigned mask : masks) value ^= (mask & point) == mask;
            if (value) {
                root = false;
                break;
            }
        }
        count += root;
    }
    return count;
}

SolutionCounts count_paths(const pathsum::BoundSystem& bound, Backend backend,
                           const Limits& limits) {
    SolutionCounts counts;
    switch (backend) {
        case Backend::Brute:
            counts.n0 = brute_force_count(bound.f0(), bound.hadamards, limits.h_cap);
            counts.n1 = brute_force_count(bound.f1(), bound.hadamards, limits.h_cap);
            break;
        case Backend::Groebner:
            counts.n0 = groebner::count_points(bound.f0(), bound.hadamards, limits.gb);
            counts.n1 = groebner::count_points(bound.f1(), bound.hadamards, limits.gb);
            break;
    }
    return counts;
}

Amplitude amplitude(const circuit::CircuitGrid& grid, const std::string& input_bits,
                    const std::string& output_bits, Backend backend, const Limits& limits) {
    pathsum::PolynomialSystem sys = pathsum::extract_system(grid);
    pathsum::BoundSystem bound = pathsum::bind_system(sys, input_bits, output_bits);
    SolutionCounts counts = count_paths(bound, backend, limits);
    return Amplitude::normalized(counts.n0 - counts.n1, sys.hadamards);
}

std::vector<std::vector<Amplitude>> full_matrix(const circuit::CircuitGrid& grid, Backend backend,
                                                const Limits& limits) {
    const int n = grid.wires();
    if (n > limits.wire_cap) {
        throw ResourceLimitError("a " + std::to_string(n) +
                                 "-wire matrix exceeds the wire cap " +
                                 std::to_string(limits.wire_cap) + " (2^n x 2^n entries)");
    }

    pathsum::PolynomialSystem sys = pathsum::extract_system(grid);
    const int dim = 1 << n;
    std::vector<std::vector<Amplitude>> matrix(dim, std::vector<Amplitude>(dim));
    for (int a = 0; a < dim; ++a) {
        const std::string in_bits = basis_bits(a, n);
        for (int b = 0; b < dim; ++b) {
            pathsum::BoundSystem bound = pathsum::bind_system(sys, in_bits, basis_bits(b, n));
            SolutionCounts counts = count_paths(bound, backend, limits);
            matrix[b][a] = Amplitude::normalized(counts.n0 - counts.n1, sys.hadamards);
        }
    }
    return matrix;
}

int basis_index(const std::string& bits) {
    int index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bitstring contains '" + std::string(1, ch) +
                                        "'; only 0 and 1 are allowed");
        }
        index = index * 2 + (ch - '0');
    }
    return index;
}

std::string basis_bits(int index, int wires) {
    std::string bits(wires, '0');
    for (int w = 0; w < wires; ++w) {
        if (index & (1 << (wires - 1 - w))) bits[w] = '1';
    }
    return bits;
}

}  // namespace qcpoly::counting

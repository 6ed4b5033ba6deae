#pragma once

#include <compare>
#include <vector>

#include "qcpoly/gf2poly.hpp"

namespace qcpoly::groebner {

/// Pure lexicographic monomial order under an explicit variable ranking,
/// most significant variable first.
class MonomialOrder {
  public:
    explicit MonomialOrder(std::vector<gf2::Variable> ranking) : ranking_(std::move(ranking)) {}

    /// x1 > x2 > ... > xh.
    static MonomialOrder path_order(int hadamards);
    /// Path variables, then inputs, then outputs, each by ascending index.
    static MonomialOrder default_order(int hadamards, int wires);

    const std::vector<gf2::Variable>& ranking() const { return ranking_; }

    std::strong_ordering compare(const gf2::Monomial& u, const gf2::Monomial& v) const {
        return lex_compare(u, v, ranking_);
    }

  private:
    std::vector<gf2::Variable> ranking_;
};

/// Budgets for buchberger. A lex basis can blow up; exceeding a budget
/// raises ResourceLimitError naming the knob.
struct Limits {
    int max_pairs = 10000;
    int max_basis = 10000;
};

struct GroebnerBasis {
    std::vector<gf2::Polynomial> polys;
    MonomialOrder order;
};

/// Lex-greatest monomial of p. Throws std::invalid_argument for p = 0.
gf2::Monomial leading_monomial(const gf2::Polynomial& p, const MonomialOrder& order);

/// Multivariate division remainder: no monomial of the result is divisible
/// by a leading monomial of basis. Zero elements of basis are ignored.
gf2::Polynomial normal_form(const gf2::Polynomial& f, const std::vector<gf2::Polynomial>& basis,
                            const MonomialOrder& order);

/// (lcm/lm f)*f + (lcm/lm g)*g. Throws std::invalid_argument on zero input.
gf2::Polynomial s_polynomial(const gf2::Polynomial& f, const gf2::Polynomial& g,
                             const MonomialOrder& order);

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// coprime-leading-monomial criterion, followed by minimalization and
/// interreduction. The result is the reduced basis, sorted by leading
/// monomial descending; it is unique for a fixed order.
GroebnerBasis buchberger(const std::vector<gf2::Polynomial>& generators,
                         const MonomialOrder& order, const Limits& limits = {});

/// Number of common Z2 roots of polys in the variables x1..xh: field
/// polynomials xi^2+xi are appended, the reduced lex basis computed, and
/// the standard monomials counted. Inputs must mention path variables with
/// index <= h only; anything else is std::invalid_argument.
long long count_points(const std::vector<gf2::Polynomial>& polys, int hadamards,
                       const Limits& limits = {});

}  // namespace qcpoly::groebner

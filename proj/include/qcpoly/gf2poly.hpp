#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcpoly::gf2 {

/// Kinds are listed in lex-significance order: path variables outrank
/// circuit inputs, which outrank circuit outputs. Sorting variables
/// ascending therefore yields the default ranking x1 > ... > a1 > ... > b1 > ...
enum class VarKind { Path, Input, Output };

/// A typed, 1-indexed identifier: path variables x_k, input bits a_i,
/// output bits b_j.
struct Variable {
    VarKind kind = VarKind::Path;
    int index = 1;

    static Variable path(int i) { return {VarKind::Path, i}; }
    static Variable input(int i) { return {VarKind::Input, i}; }
    static Variable output(int i) { return {VarKind::Output, i}; }

    /// Textual name: "x3", "a1", "b2".
    std::string name() const;

    auto operator<=>(const Variable&) const = default;
};

/// A power product of variables. The empty product is the monomial 1.
/// Exponents are strictly positive; degree-0 entries are never stored.
/// Circuit-derived polynomials are multilinear; exponents >= 2 occur only
/// in free-ring Groebner computations (field polynomials x^2 + x).
class Monomial {
  public:
    Monomial() = default;

    static Monomial var(Variable v, int degree = 1);

    bool is_unit() const { return exps_.empty(); }
    int degree(Variable v) const;
    int total_degree() const;
    bool multilinear() const;

    /// Free-ring product: exponents add.
    Monomial times(const Monomial& rhs) const;
    /// True when this divides m (all exponents <= m's).
    bool divides(const Monomial& m) const;
    /// Quotient m / d; requires d.divides(*this).
    Monomial divided_by(const Monomial& d) const;
    static Monomial lcm(const Monomial& u, const Monomial& v);
    /// All exponents clamped to 1.
    Monomial squarefree() const;

    const std::map<Variable, int>& exponents() const { return exps_; }
    /// Variables in significance order (map order).
    std::vector<Variable> variables() const;

    /// "x1*x2^2" with the given product separator; "1" for the unit.
    std::string str(std::string_view product_sep = "*") const;

    bool operator==(const Monomial&) const = default;
    /// Structural order for container storage only; not a monomial order.
    bool operator<(const Monomial& rhs) const { return exps_ < rhs.exps_; }

  private:
    std::map<Variable, int> exps_;
};

/// Pure lexicographic comparison under an explicit variable ranking
/// (most significant first). Throws std::invalid_argument if either
/// monomial contains a variable missing from the ranking.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v,
                                 std::span<const Variable> ranking);

/// A polynomial over GF(2): a set of monomials, presence meaning
/// coefficient 1. The empty set is zero. Addition is symmetric
/// difference, so p + p = 0 holds structurally.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Monomial m) { monomials_.insert(std::move(m)); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(Monomial{}); }
    static Polynomial var(Variable v) { return Polynomial(Monomial::var(v)); }

    bool is_zero() const { return monomials_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return monomials_.size(); }
    const std::set<Monomial>& terms() const { return monomials_; }
    std::set<Variable> variables() const;
    bool multilinear() const;

    /// Add a single monomial mod 2.
    void toggle(const Monomial& m);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) {
        lhs *= rhs;
        return lhs;
    }

    bool operator==(const Polynomial&) const = default;

    /// Monomials joined by " + ", sorted descending by the default lex
    /// ranking of the variables present. "0" for zero, "1" for the unit.
    std::string str(std::string_view product_sep = "*") const;

  private:
    std::set<Monomial> monomials_;
};

/// Free-ring power with nonnegative exponent.
Polynomial pow(const Polynomial& base, int exponent);

/// Clamp every exponent to 1 and cancel pairs; the image of p on Z2 points
/// is unchanged.
Polynomial boolean_reduce(const Polynomial& p);

/// Replace every occurrence of v by r (v^e becomes r^e), then boolean_reduce.
Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& r);

/// Value of p at a Z2 point. Throws std::invalid_argument naming the first
/// variable of p that the assignment does not cover.
bool evaluate(const Polynomial& p, const std::map<Variable, bool>& assignment);

/// The default ranking for a variable set: paths, then inputs, then outputs,
/// each by ascending index (most significant first).
std::vector<Variable> canonical_ranking(const std::set<Variable>& vars);

/// Parse the plain textual form: monomials joined by "+", factors joined
/// by "*", variables x1/a2/b3 with optional "^e", constants "0" and "1".
/// Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

}  // namespace qcpoly::gf2

#include "qcpoly/gf2poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qcpoly::gf2 {

std::string Variable::name() const {
    char prefix = '?';
    switch (kind) {
        case VarKind::Path: prefix = 'x'; break;
        case VarKind::Input: prefix = 'a'; break;
        case VarKind::Output: prefix = 'b'; break;
    }
    return prefix + std::to_string(index);
}

Monomial Monomial::var(Variable v, int degree) {
    if (degree < 1) throw std::invalid_argument("monomial exponent must be >= 1");
    Monomial m;
    m.exps_[v] = degree;
    return m;
}

int Monomial::degree(Variable v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
    int total = 0;
    for (const auto& [v, e] : exps_) total += e;
    return total;
}

bool Monomial::multilinear() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& ve) { return ve.second == 1; });
}

Monomial Monomial::times(const Monomial& rhs) const {
    Monomial out = *this;
    for (const auto& [v, e] : rhs.exps_) out.exps_[v] += e;
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [&m](const auto& ve) { return m.degree(ve.first) >= ve.second; });
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial out;
    for (const auto& [v, e] : exps_) {
        int q = e - d.degree(v);
        if (q < 0) throw std::invalid_argument("monomial division is not exact");
        if (q > 0) out.exps_[v] = q;
    }
    // catch divisors with variables absent from *this
    for (const auto& [v, e] : d.exps_) {
        if (degree(v) < e) throw std::invalid_argument("monomial division is not exact");
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& u, const Monomial& v) {
    Monomial out = u;
    for (const auto& [var, e] : v.exps_) {
        int& cur = out.exps_[var];
        cur = std::max(cur, e);
    }
    return out;
}

Monomial Monomial::squarefree() const {
    Monomial out;
    for (const auto& [v, e] : exps_) out.exps_[v] = 1;
    return out;
}

std::vector<Variable> Monomial::variables() const {
    std::vector<Variable> out;
    out.reserve(exps_.size());
    for (const auto& [v, e] : exps_) out.push_back(v);
    return out;
}

std::string Monomial::str(std::string_view product_sep) const {
    if (is_unit()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += product_sep;
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v,
                                 std::span<const Variable> ranking) {
    auto check_ranked = [&ranking](const Monomial& m) {
        for (const auto& [var, e] : m.exponents()) {
            if (std::find(ranking.begin(), ranking.end(), var) == ranking.end()) {
                throw std::invalid_argument("variable " + var.name() + " is not ranked");
            }
        }
    };
    check_ranked(u);
    check_ranked(v);
    for (const Variable& var : ranking) {
        int du = u.degree(var);
        int dv = v.degree(var);
        if (du != dv) return du <=> dv;
    }
    return std::strong_ordering::equal;
}

bool Polynomial::is_one() const {
    return monomials_.size() == 1 && monomials_.begin()->is_unit();
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> out;
    for (const Monomial& m : monomials_) {
        for (const auto& [v, e] : m.exponents()) out.insert(v);
    }
    return out;
}

bool Polynomial::multilinear() const {
    return std::all_of(monomials_.begin(), monomials_.end(),
                       [](const Monomial& m) { return m.multilinear(); });
}

void Polynomial::toggle(const Monomial& m) {
    auto [it, inserted] = monomials_.insert(m);
    if (!inserted) monomials_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (this == &rhs) {
        monomials_.clear();
        return *this;
    }
    for (const Monomial& m : rhs.monomials_) toggle(m);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    Polynomial product;
    for (const Monomial& a : monomials_) {
        for (const Monomial& b : rhs.monomials_) product.toggle(a.times(b));
    }
    *this = std::move(product);
    return *this;
}

std::string Polynomial::str(std::string_view product_sep) const {
    if (monomials_.empty()) return "0";
    std::vector<Variable> ranking = canonical_ranking(variables());
    std::vector<const Monomial*> sorted;
    sorted.reserve(monomials_.size());
    for (const Monomial& m : monomials_) sorted.push_back(&m);
    std::sort(sorted.begin(), sorted.end(), [&ranking](const Monomial* a, const Monomial* b) {
        return lex_compare(*a, *b, ranking) == std::strong_ordering::greater;
    });
    std::string out;
    for (const Monomial* m : sorted) {
        if (!out.empty()) out += " + ";
        out += m->str(product_sep);
    }
    return out;
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::one();
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Polynomial boolean_reduce(const Polynomial& p) {
    Polynomial out;
    for (const Monomial& m : p.terms()) out.toggle(m.squarefree());
    return out;
}

Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& r) {
    Polynomial out;
    for (const Monomial& m : p.terms()) {
        int e = m.degree(v);
        if (e == 0) {
            out.toggle(m);
            continue;
        }
        Monomial rest;
        for (const auto& [var, deg] : m.exponents()) {
            if (var != v) rest = rest.times(Monomial::var(var, deg));
        }
        out += Polynomial(rest) * pow(r, e);
    }
    return boolean_reduce(out);
}

bool evaluate(const Polynomial& p, const std::map<Variable, bool>& assignment) {
    bool acc = false;
    for (const Monomial& m : p.terms()) {
        bool value = true;
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw std::invalid_argument("variable " + v.name() + " has no assigned value");
            }
            value = value && it->second;
        }
        acc ^= value;
    }
    return acc;
}

std::vector<Variable> canonical_ranking(const std::set<Variable>& vars) {
    // Variable's comparison already orders by (kind, index) with paths first.
    return {vars.begin(), vars.end()};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_index(std::string_view digits, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
        throw std::invalid_argument("bad number '" + std::string(digits) + "' in '" +
                                    std::string(context) + "'");
    }
    return value;
}

Monomial parse_factor_into(Monomial m, std::string_view factor) {
    VarKind kind;
    switch (factor.front()) {
        case 'x': kind = VarKind::Path; break;
        case 'a': kind = VarKind::Input; break;
        case 'b': kind = VarKind::Output; break;
        default:
            throw std::invalid_argument("bad variable '" + std::string(factor) + "'");
    }
    std::string_view rest = factor.substr(1);
    int exponent = 1;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        exponent = parse_index(trim(rest.substr(caret + 1)), factor);
        rest = trim(rest.substr(0, caret));
    }
    int index = parse_index(rest, factor);
    return m.times(Monomial::var(Variable{kind, index}, exponent));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty polynomial");
    Polynomial out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string_view term =
            trim(text.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        pos = plus == std::string_view::npos ? text.size() + 1 : plus + 1;
        if (term.empty()) throw std::invalid_argument("empty term in polynomial");
        if (term == "0") continue;
        if (term == "1") {
            out.toggle(Monomial{});
            continue;
        }
        Monomial m;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            std::size_t star = term.find('*', fpos);
            std::string_view factor =
                trim(term.substr(fpos, star == std::string_view::npos ? star : star - fpos));
            fpos = star == std::string_view::npos ? term.size() + 1 : star + 1;
            if (factor.empty()) throw std::invalid_argument("empty factor in polynomial term");
            m = parse_factor_into(std::move(m), factor);
        }
        out.toggle(m);
    }
    return out;
}

}  // namespace qcpoly::gf2

#include "qcpoly/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcpoly/errors.hpp"

namespace qcpoly::groebner {

using gf2::Monomial;
using gf2::Polynomial;
using gf2::Variable;

MonomialOrder MonomialOrder::path_order(int hadamards) {
    std::vector<Variable> ranking;
    ranking.reserve(hadamards);
    for (int i = 1; i <= hadamards; ++i) ranking.push_back(Variable::path(i));
    return MonomialOrder(std::move(ranking));
}

MonomialOrder MonomialOrder::default_order(int hadamards, int wires) {
    std::vector<Variable> ranking;
    ranking.reserve(hadamards + 2 * wires);
    for (int i = 1; i <= hadamards; ++i) ranking.push_back(Variable::path(i));
    for (int i = 1; i <= wires; ++i) ranking.push_back(Variable::input(i));
    for (int i = 1; i <= wires; ++i) ranking.push_back(Variable::output(i));
    return MonomialOrder(std::move(ranking));
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no leading monomial");
    const Monomial* best = nullptr;
    for (const Monomial& m : p.terms()) {
        if (!best || order.compare(m, *best) > 0) best = &m;
    }
    return *best;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    struct Head {
        Monomial lm;
        const Polynomial* poly;
    };
    std::vector<Head> heads;
    heads.reserve(basis.size());
    for (const Polynomial& g : basis) {
        if (!g.is_zero()) heads.push_back({leading_monomial(g, order), &g});
    }

    Polynomial work = f;
    Polynomial remainder;
    while (!work.is_zero()) {
        Monomial m = leading_monomial(work, order);
        const Head* hit = nullptr;
        for (const Head& h : heads) {
            if (h.lm.divides(m)) {
                hit = &h;
                break;
            }
        }
        if (hit) {
            work += Polynomial(m.divided_by(hit->lm)) * *hit->poly;
        } else {
            work.toggle(m);
            remainder.toggle(m);
        }
    }
    return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Monomial lf = leading_monomial(f, order);
    Monomial lg = leading_monomial(g, order);
    Monomial lcm = Monomial::lcm(lf, lg);
    return Polynomial(lcm.divided_by(lf)) * f + Polynomial(lcm.divided_by(lg)) * g;
}

namespace {

struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial lcm;
    bool coprime = false;
};

Pair build_pair(std::size_t i, std::size_t j, const std::vector<Monomial>& lms) {
    Pair p;
    p.i = i;
    p.j = j;
    p.lcm = Monomial::lcm(lms[i], lms[j]);
    p.coprime = p.lcm == lms[i].times(lms[j]);
    return p;
}

/// Normal strategy: smallest lcm total degree, then lex-smallest lcm,
/// then lowest indices. Deterministic for reproducible bases.
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& order) {
    if (a.lcm.total_degree() != b.lcm.total_degree()) {
        return a.lcm.total_degree() < b.lcm.total_degree();
    }
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

/// Keep only elements whose leading monomial no other kept element's
/// leading monomial divides, then reduce every element modulo the others
/// until nothing changes.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order) {
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const Polynomial& g : basis) lms.push_back(leading_monomial(g, order));

    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !lms[j].divides(lms[i])) continue;
            // Equal leading monomials: keep the first occurrence only.
            redundant = lms[j] != lms[i] || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) rest.push_back(minimal[j]);
            }
            Polynomial reduced = normal_form(minimal[i], rest, order);
            if (reduced != minimal[i]) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_monomial(a, order), leading_monomial(b, order)) > 0;
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const Limits& limits) {
    std::vector<Polynomial> basis;
    std::vector<Monomial> lms;
    for (const Polynomial& f : generators) {
        if (f.is_zero()) continue;
        basis.push_back(f);
        lms.push_back(leading_monomial(f, order));
    }

    std::vector<Pair> pending;
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pending.push_back(build_pair(i, j, lms));
    }

    int processed = 0;
    while (!pending.empty()) {
        auto best = std::min_element(pending.begin(), pending.end(),
                                     [&](const Pair& a, const Pair& b) {
                                         return pair_before(a, b, order);
                                     });
        Pair pair = *best;
        pending.erase(best);

        if (++processed > limits.max_pairs) {
            throw ResourceLimitError("Groebner pair budget exceeded (max_pairs = " +
                                     std::to_string(limits.max_pairs) +
                                     "); raise the limit or use the brute backend");
        }
        if (pair.coprime) continue;

        Polynomial r = normal_form(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
        if (r.is_zero()) continue;

        basis.push_back(std::move(r));
        lms.push_back(leading_monomial(basis.back(), order));
        if (static_cast<int>(basis.size()) > limits.max_basis) {
            throw ResourceLimitError("Groebner basis budget exceeded (max_basis = " +
                                     std::to_string(limits.max_basis) +
                                     "); raise the limit or use the brute backend");
        }
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
            pending.push_back(build_pair(i, basis.size() - 1, lms));
        }
    }

    return GroebnerBasis{reduce_basis(std::move(basis), order), order};
}

long long count_points(const std::vector<Polynomial>& polys, int hadamards,
                       const Limits& limits) {
    if (hadamards < 0) throw std::invalid_argument("negative variable count");
    if (hadamards > 30) {
        throw ResourceLimitError("standard monomial enumeration covers 2^h subsets; h = " +
                                 std::to_string(hadamards) + " is past the supported 30");
    }
    for (const Polynomial& p : polys) {
        for (const Variable& v : p.variables()) {
            if (v.kind != gf2::VarKind::Path || v.index > hadamards) {
                throw std::invalid_argument("count_points expects polynomials over x1..x" +
                                            std::to_string(hadamards) + "; found " + v.name());
            }
        }
    }

    std::vector<Polynomial> generators = polys;
    for (int i = 1; i <= hadamards; ++i) {
        Variable x = Variable::path(i);
        generators.push_back(Polynomial(Monomial::var(x, 2)) + Polynomial::var(x));
    }

    MonomialOrder order = MonomialOrder::path_order(hadamards);
    GroebnerBasis gb = buchberger(generators, order, limits);

    for (const Polynomial& g : gb.polys) {
        if (g.is_one()) return 0;  // unit ideal, no roots
    }

    // Standard monomials of a basis containing every field polynomial are
    // squarefree, so only squarefree leading monomials can exclude any;
    // count the variable subsets no leading monomial divides.
    std::vector<unsigned> masks;
    for (const Polynomial& g : gb.polys) {
        Monomial lm = leading_monomial(g, order);
        if (!lm.multilinear()) continue;
        unsigned mask = 0;
        for (const Variable& v : lm.variables()) mask |= 1u << (v.index - 1);
        masks.push_back(mask);
    }

    long long count = 0;
    for (unsigned subset = 0; subset < (1u << hadamards); ++subset) {
        bool standard = true;
        for (unsigned mask : masks) {
            if ((mask & subset) == mask) {
                standard = false;
                break;
            }
        }
        count += standard;
    }
    return count;
}

}  // namespace qcpoly::groebner

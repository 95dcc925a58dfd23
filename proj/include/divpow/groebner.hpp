#ifndef DIVPOW_GROEBNER_HPP
#define DIVPOW_GROEBNER_HPP

#include <algorithm>
#include <vector>

#include "divpow/polyring.hpp"

namespace divpow {

/// Reduced Groebner basis: generators are monic, fully inter-reduced, sorted
/// ascending by leading monomial.
struct GroebnerBasis {
    MonoOrder order = MonoOrder::degrevlex;
    std::vector<MultiPoly> gens;
};

/// Remainder of p on division by the polynomials in gens: no term of the
/// output is divisible by any leading monomial of gens.
inline MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                             MonoOrder ord) {
    MultiPoly rem = p;
    bool reduced = true;
    while (reduced && !rem.is_zero()) {
        reduced = false;
        for (const auto& [mono, coeff] : rem.terms()) {
            for (const auto& g : gens) {
                if (g.is_zero()) continue;
                Monomial lm = g.leading_monomial(ord);
                if (!divides(lm, mono)) continue;
                Scalar factor = coeff / g.leading_coeff(ord);
                MultiPoly shift(p.field(), p.vars_ptr());
                shift.set_term(mono_div(mono, lm), factor);
                rem = rem - shift * g;
                reduced = true;
                break;
            }
            if (reduced) break;
        }
    }
    return rem;
}

inline MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.gens, gb.order);
}

namespace detail {

inline bool mono_equal(const Monomial& a, const Monomial& b) { return a == b; }

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

/// Buchberger with the Gebauer-Moller style criteria: coprime leading
/// monomials are skipped and pairs whose lcm is properly divisible by the
/// lcm with a third element drop out.
inline std::vector<MultiPoly> buchberger_core(std::vector<MultiPoly> basis, MonoOrder ord) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const MultiPoly& p) { return p.is_zero(); }),
                basis.end());
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t t) {
        const Monomial lt = basis[t].leading_monomial(ord);
        for (std::size_t i = 0; i < t; ++i) {
            Monomial li = basis[i].leading_monomial(ord);
            Monomial l = mono_lcm(li, lt);
            if (mono_equal(l, mono_mul(li, lt))) continue; // coprime criterion
            pairs.push_back({i, t, l});
        }
    };
    for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

    while (!pairs.empty()) {
        Pair pr = pairs.back();
        pairs.pop_back();
        // chain criterion: an element k whose leading monomial divides the
        // lcm and whose pairs with i and j were already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            Monomial lk = basis[k].leading_monomial(ord);
            if (!divides(lk, pr.lcm)) continue;
            bool ik_pending = false, jk_pending = false;
            for (const auto& q : pairs) {
                if ((q.i == pr.i && q.j == k) || (q.i == k && q.j == pr.i)) ik_pending = true;
                if ((q.i == pr.j && q.j == k) || (q.i == k && q.j == pr.j)) jk_pending = true;
            }
            if (!ik_pending && !jk_pending) skip = true;
        }
        if (skip) continue;

        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        Monomial lf = f.leading_monomial(ord), lg = g.leading_monomial(ord);
        MultiPoly mf(f.field(), f.vars_ptr()), mg(f.field(), f.vars_ptr());
        mf.set_term(mono_div(pr.lcm, lf), Scalar::one(f.field()) / f.leading_coeff(ord));
        mg.set_term(mono_div(pr.lcm, lg), Scalar::one(f.field()) / g.leading_coeff(ord));
        MultiPoly s = mf * f - mg * g;
        MultiPoly r = normal_form(s, basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r);
            add_pairs_for(basis.size() - 1);
        }
    }
    return basis;
}

} // namespace detail

/// Reduced Groebner basis of the ideal generated by gens. Idempotent:
/// re-running on the output returns the output.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens,
                                MonoOrder ord = MonoOrder::degrevlex) {
    GroebnerBasis gb;
    gb.order = ord;
    if (gens.empty()) return gb;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (!(gens[i].field() == gens[0].field()) || gens[i].vars() != gens[0].vars())
            throw validation_error("generators live in different polynomial rings");
    }
    auto basis = detail::buchberger_core(gens, ord);

    // minimalize: drop generators whose leading monomial is divisible by
    // another one's
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial li = basis[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lj = basis[j].leading_monomial(ord);
            if (divides(lj, li) && (!detail::mono_equal(li, lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce and normalize to monic
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.scaled(r.leading_coeff(ord).inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_less(a.leading_monomial(ord), b.leading_monomial(ord), ord);
    });
    gb.gens = std::move(reduced);
    return gb;
}

/// Standard monomials of the quotient ring, ascending in the basis order.
/// Throws infinite_dimensional when some variable has no pure power among
/// the leading monomials.
inline std::vector<Monomial> quotient_basis(const GroebnerBasis& gb, std::size_t nvars_hint = 0) {
    std::size_t nvars = nvars_hint;
    for (const auto& g : gb.gens)
        if (!g.is_zero()) nvars = g.leading_monomial(gb.order).size();
    if (nvars == 0 && gb.gens.empty() && nvars_hint == 0)
        throw validation_error("quotient_basis needs the variable count for an empty basis");

    std::vector<Monomial> lms;
    for (const auto& g : gb.gens) {
        if (g.is_zero()) continue;
        Monomial lm = g.leading_monomial(gb.order);
        if (total_degree(lm) == 0) return {}; // unit ideal: zero ring
        lms.push_back(lm);
    }
    std::vector<unsigned> cap(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        bool bounded = false;
        for (const auto& lm : lms) {
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure) {
                bounded = true;
                cap[v] = std::max(cap[v], lm[v]);
            }
        }
        if (!bounded)
            throw infinite_dimensional("no pure power of variable index " + std::to_string(v) +
                                       " among leading monomials");
    }

    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // enumerate the box below the caps, keep monomials not divisible by any lm
    for (;;) {
        bool standard = true;
        for (const auto& lm : lms)
            if (divides(lm, cur)) { standard = false; break; }
        if (standard) out.push_back(cur);
        std::size_t v = 0;
        while (v < nvars) {
            if (cur[v] + 1 < cap[v] || (cap[v] == 0 && false)) { ++cur[v]; break; }
            if (cur[v] + 1 <= cap[v] - 1) { ++cur[v]; break; }
            if (cur[v] < cap[v] - 1) { ++cur[v]; break; }
            cur[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_less(a, b, gb.order);
    });
    return out;
}

} // namespace divpow

#endif

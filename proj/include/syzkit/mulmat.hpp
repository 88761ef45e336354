#ifndef SYZKIT_MULMAT_HPP
#define SYZKIT_MULMAT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/instance.hpp"
#include "syzkit/krylov.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/order.hpp"
#include "syzkit/staircase.hpp"
#include "syzkit/syzygy.hpp"

namespace syzkit {

// Family {X_var^e f_j : 1 <= e <= bounds[j]} with generators sorted
// ascending under the working order.
struct NextMonomialsFamily {
    std::vector<Monomial> generators;
    std::vector<std::uint32_t> bounds;
    std::size_t var = 0; // 0-based index of the multiplying variable
};

// Monomial basis plus the n multiplication matrices of the quotient: row j
// of mats[k] is the coefficient vector of nf(X_{k+1} b_j) on monbas.
struct MulMatResult {
    std::vector<Monomial> monbas;
    std::vector<DenseMatrix> mats;
};

// Monomials of the border reachable from the processed set `s` by powers of
// X_var but not yet processed themselves: for each generator f in s with
// X_var f in border - s, the bound is the largest e with X_var^e f still in
// border - s. Generator order is part of the deterministic output contract.
inline NextMonomialsFamily next_monomials(const MonomialOrderSpec& order,
                                          const std::set<Monomial, MonomialKeyLess>& border,
                                          const std::set<Monomial, MonomialKeyLess>& s,
                                          std::size_t var) {
    NextMonomialsFamily fam;
    fam.var = var;
    auto in_frontier = [&](const Monomial& m) { return border.count(m) && !s.count(m); };
    for (const auto& f : s) {
        if (!border.count(f)) continue;
        Monomial step = mul_by_power(f, var, 1);
        if (!in_frontier(step)) continue;
        std::uint32_t e = 1;
        while (in_frontier(mul_by_power(f, var, e + 1))) ++e;
        fam.generators.push_back(f);
        fam.bounds.push_back(e);
    }
    std::vector<std::size_t> perm(fam.generators.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order_less(order, fam.generators[a], fam.generators[b]);
    });
    NextMonomialsFamily sorted;
    sorted.var = var;
    for (auto i : perm) {
        sorted.generators.push_back(fam.generators[i]);
        sorted.bounds.push_back(fam.bounds[i]);
    }
    return sorted;
}

namespace detail {

// Store of known normal forms, each a coefficient row on the monomial basis.
struct NormalFormStore {
    std::map<Monomial, std::vector<FieldElem>, MonomialKeyLess> rows;

    const std::vector<FieldElem>& get(const Monomial& m) const {
        auto it = rows.find(m);
        if (it == rows.end())
            throw invariant_error("normal form missing from the store: " + to_string(m));
        return it->second;
    }
};

} // namespace detail

// Multiplication matrices of R^m/<gb> with respect to the monomial basis of
// a reduced basis gb, walking the variables from X_n down to X_1. Normal
// forms of monbas and of the leads are read off gb directly; the remaining
// border normal forms come from Krylov evaluation with the matrix of the
// previously handled variable. Requires the structural assumption on the
// leading module, which is checked up front.
inline MulMatResult multiplication_matrices(const GroebnerBasis& gb) {
    const MonomialOrderSpec& order = gb.order;
    const PrimeField& fld = gb.field;
    const std::uint32_t n = gb.nvars;

    if (!check_reduced(gb))
        throw validation_error("input basis is not reduced for the stated order");
    std::vector<Monomial> lm;
    for (const auto& g : gb.elements) lm.push_back(leading_monomial(order, g));
    if (auto violation = find_assumption_violation(lm))
        throw assumption_error(violation->describe());

    const StaircaseData st = staircase_from_lm(order, lm, gb.ncomps);
    const std::size_t dim = st.monbas.size();

    MulMatResult out;
    out.monbas = st.monbas;
    if (dim == 0) {
        out.mats.assign(n, DenseMatrix(fld, 0, 0));
        return out;
    }

    std::map<Monomial, std::size_t, MonomialKeyLess> basis_pos;
    for (std::size_t i = 0; i < dim; ++i) basis_pos[st.monbas[i]] = i;

    // processed set and its normal forms: staircase monomials are unit rows,
    // leads are the negated tails of their basis elements
    std::set<Monomial, MonomialKeyLess> processed(st.monbas.begin(), st.monbas.end());
    std::set<Monomial, MonomialKeyLess> border_set(st.border.begin(), st.border.end());
    detail::NormalFormStore store;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<FieldElem> unit(dim, 0);
        unit[i] = 1;
        store.rows[st.monbas[i]] = std::move(unit);
    }
    for (const auto& g : gb.elements) {
        const Monomial mu = leading_monomial(order, g);
        std::vector<FieldElem> row(dim, 0);
        for (const auto& [m, c] : g.terms()) {
            if (m == mu) continue;
            auto it = basis_pos.find(m);
            if (it == basis_pos.end())
                throw invariant_error("reduced basis tail leaves the staircase: " + to_string(m));
            row[it->second] = fld.neg(c);
        }
        processed.insert(mu);
        store.rows[mu] = std::move(row);
    }

    auto read_matrix = [&](std::size_t k) {
        DenseMatrix M(fld, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            M.set_row(j, store.get(mul_by_power(st.monbas[j], k, 1)));
        return M;
    };

    out.mats.assign(n, DenseMatrix(fld, 0, 0));
    out.mats[n - 1] = read_matrix(n - 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        // extend the store by the border monomials reachable with X_{i+2}
        const NextMonomialsFamily fam = next_monomials(order, border_set, processed, i + 1);
        if (!fam.generators.empty()) {
            KrylovPlan plan;
            for (const auto& f : fam.generators) plan.vectors.push_back(store.get(f));
            plan.bounds = fam.bounds;
            const DenseMatrix K = krylov_eval(out.mats[i + 1], plan);
            std::size_t row = 0;
            for (std::size_t j = 0; j < fam.generators.size(); ++j)
                for (std::uint32_t e = 1; e <= fam.bounds[j]; ++e, ++row) {
                    Monomial m = mul_by_power(fam.generators[j], i + 1, e);
                    store.rows[m] = K.row_vector(row);
                    processed.insert(std::move(m));
                }
        }
        out.mats[i] = read_matrix(i);
    }

    // the walk must have covered exactly the staircase and its border
    for (const auto& b : st.border)
        if (!processed.count(b))
            throw invariant_error("border monomial never reached: " + to_string(b));
    if (processed.size() != st.monbas.size() + st.border.size())
        throw invariant_error("normal form store covers more than staircase and border");
    return out;
}

// Change of order: multiplication matrices for the old order, then the
// syzygy basis of the matrix F whose i-th row represents nf(c_i), computed
// under the new order.
inline GroebnerBasis change_order(const GroebnerBasis& gb1, const MonomialOrderSpec& ord2) {
    if (ord2.nvars() != gb1.nvars) throw validation_error("order dimension mismatch");
    const PrimeField& fld = gb1.field;
    const MulMatResult mm = multiplication_matrices(gb1);
    const std::uint32_t dim = static_cast<std::uint32_t>(mm.monbas.size());

    std::map<Monomial, std::size_t, MonomialKeyLess> basis_pos;
    for (std::size_t i = 0; i < mm.monbas.size(); ++i) basis_pos[mm.monbas[i]] = i;

    DenseMatrix F(fld, gb1.ncomps, dim);
    for (std::uint32_t i = 0; i < gb1.ncomps; ++i) {
        const Monomial unit = Monomial::unit(gb1.nvars, i);
        if (auto it = basis_pos.find(unit); it != basis_pos.end()) {
            F.at(i, it->second) = 1;
            continue;
        }
        // c_i is a lead of gb1; nf(c_i) is the negated tail of that element
        bool found = false;
        for (const auto& g : gb1.elements) {
            if (leading_monomial(gb1.order, g) != unit) continue;
            for (const auto& [m, c] : g.terms()) {
                if (m == unit) continue;
                F.at(i, basis_pos.at(m)) = fld.neg(c);
            }
            found = true;
            break;
        }
        if (!found)
            throw invariant_error("coordinate vector neither in the staircase nor a lead: " +
                                  to_string(unit));
    }

    const Instance inst(fld, gb1.nvars, gb1.ncomps, dim, mm.mats, F);
    SyzygyOptions opts;
    opts.validate_commuting = false; // commutation holds by construction
    return syzygy_basis(ord2, inst, opts);
}

} // namespace syzkit

#endif

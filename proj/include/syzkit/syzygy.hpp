#ifndef SYZKIT_SYZYGY_HPP
#define SYZKIT_SYZYGY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/instance.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/order.hpp"
#include "syzkit/staircase.hpp"

namespace syzkit {

// Monomial basis of the quotient by the syzygy module, together with the
// matrix whose row j is (j-th basis monomial) applied to F.
struct MonomialBasisResult {
    std::vector<Monomial> monbas; // ascending under the order
    DenseMatrix basmat;           // delta x D, full row rank
};

struct SyzygyOptions {
    // Commutation check before running; defaults to on for D <= 64.
    std::optional<bool> validate_commuting;

    bool should_validate(std::uint32_t dim) const {
        return validate_commuting.value_or(dim <= 64);
    }
};

namespace detail {

// Working set of multi-Krylov rows: monomials kept sorted ascending under
// the order, each paired with its row (monomial applied to F).
struct KrylovRows {
    std::vector<Monomial> mons;
    DenseMatrix mat;

    KrylovRows(PrimeField f, std::size_t cols) : mat(f, 0, cols) {}

    void select(const std::vector<std::size_t>& idx) {
        std::vector<Monomial> m2;
        m2.reserve(idx.size());
        for (auto i : idx) m2.push_back(mons[i]);
        mons = std::move(m2);
        mat = gather_rows(mat, idx);
    }
};

// Merge two sorted row blocks into one sorted block. The monomial sets are
// disjoint by construction, so the comparison never sees equal keys.
inline KrylovRows merge_sorted(const MonomialOrderSpec& order, const KrylovRows& a,
                               const KrylovRows& b, bool expect_append) {
    KrylovRows out(a.mat.field(), a.mat.cols());
    out.mons.reserve(a.mons.size() + b.mons.size());
    out.mat = DenseMatrix(a.mat.field(), a.mons.size() + b.mons.size(), a.mat.cols());
    if (expect_append && !a.mons.empty() && !b.mons.empty() &&
        !order_less(order, a.mons.back(), b.mons.front()))
        throw invariant_error("monotone fast path violated: merged rows are out of order");
    std::size_t i = 0, j = 0, k = 0;
    while (i < a.mons.size() || j < b.mons.size()) {
        const bool take_a =
            j == b.mons.size() ||
            (i < a.mons.size() && order_less(order, a.mons[i], b.mons[j]));
        const KrylovRows& src = take_a ? a : b;
        std::size_t& idx = take_a ? i : j;
        out.mons.push_back(src.mons[idx]);
        for (std::size_t c = 0; c < src.mat.cols(); ++c)
            out.mat.at(k, c) = src.mat.at(idx, c);
        ++idx;
        ++k;
    }
    for (std::size_t r = 0; r + 1 < out.mons.size(); ++r)
        if (!order_less(order, out.mons[r], out.mons[r + 1]))
            throw invariant_error("duplicate monomial in the multi-Krylov working set");
    return out;
}

// The successive-squaring loop introduces monomials in term-over-position
// lex order with X_1 smallest; when the requested order coincides with that,
// every merge is a pure append.
inline bool monotone_insertion_order(const MonomialOrderSpec& spec) {
    if (spec.wrapper != ModuleWrapper::top || spec.base != BaseOrder::lex) return false;
    for (std::size_t i = 0; i < spec.nvars(); ++i)
        if (spec.precedence[i] != spec.nvars() - 1 - i) return false;
    return true;
}

} // namespace detail

// Monomial basis of the quotient as the row rank profile of the multi-Krylov
// matrix with per-variable bound 2^(ceil(log2 D) + 1), computed one variable
// at a time with repeated squaring. The full matrix is never materialized;
// only the current rank-profile rows and their one-step extensions are kept.
inline MonomialBasisResult monomial_basis(const MonomialOrderSpec& order, const Instance& inst) {
    if (order.nvars() != inst.nvars) throw validation_error("order/instance dimension mismatch");
    const PrimeField& fld = inst.field;
    if (inst.dim == 0) return {{}, DenseMatrix(fld, 0, 0)};

    std::uint32_t log2d = 0;
    while ((1u << log2d) < inst.dim) ++log2d;
    const std::uint32_t beta = 1u << (log2d + 1);
    const bool monotone = detail::monotone_insertion_order(order);

    detail::KrylovRows work(fld, inst.dim);
    for (std::uint32_t i = 0; i < inst.ncomps; ++i)
        work.mons.push_back(Monomial::unit(inst.nvars, i));
    std::sort(work.mons.begin(), work.mons.end(),
              [&](const Monomial& a, const Monomial& b) { return order_less(order, a, b); });
    work.mat = DenseMatrix(fld, inst.ncomps, inst.dim);
    for (std::size_t r = 0; r < work.mons.size(); ++r)
        for (std::size_t c = 0; c < inst.dim; ++c)
            work.mat.at(r, c) = inst.F.at(work.mons[r].comp, c);

    RankProfile prof = row_rank_profile(work.mat);
    for (std::size_t k = 0; k < inst.nvars; ++k) {
        DenseMatrix power = inst.mats[k];
        std::uint32_t e = 0;
        while (true) {
            work.select(prof.indices);
            const std::vector<Monomial> before = work.mons;

            detail::KrylovRows fresh(fld, inst.dim);
            fresh.mons.reserve(work.mons.size());
            for (const auto& m : work.mons) fresh.mons.push_back(mul_by_power(m, k, 1u << e));
            fresh.mat = mat_mul(work.mat, power);

            work = detail::merge_sorted(order, work, fresh, monotone);
            prof = row_rank_profile(work.mat);

            power = mat_mul(power, power);
            if (e++ > log2d + 1)
                throw invariant_error("monomial basis iteration failed to stabilize");

            std::vector<Monomial> after;
            after.reserve(prof.rank);
            for (auto i : prof.indices) after.push_back(work.mons[i]);
            if (after == before) break;
        }
    }
    work.select(prof.indices);
    for (const auto& m : work.mons)
        for (auto ex : m.exps)
            if (ex >= beta) throw invariant_error("monomial basis escaped the degree box");
    return {std::move(work.mons), std::move(work.mat)};
}

// Simultaneous normal forms: row j of T must lie in the row space of basmat;
// solve T = N * basmat through the column-rank-profile square subsystem and
// read each normal form off the monomial basis. The residual T - N * basmat
// is always checked.
inline std::vector<ModulePoly> normal_form(const DenseMatrix& T,
                                           const std::vector<Monomial>& monbas,
                                           const DenseMatrix& basmat) {
    if (T.cols() != basmat.cols()) throw validation_error("normal form dimension mismatch");
    if (monbas.size() != basmat.rows())
        throw validation_error("monomial basis and matrix row count differ");
    const PrimeField& fld = basmat.field();

    const RankProfile cprof = column_rank_profile(basmat);
    if (cprof.rank != basmat.rows())
        throw validation_error("basis matrix is rank-deficient");
    const DenseMatrix bhat = take_columns(basmat, cprof.indices);
    const DenseMatrix that = take_columns(T, cprof.indices);
    const DenseMatrix nf_mat = mat_mul(that, invert(bhat));
    if (mat_mul(nf_mat, basmat) != T)
        throw invariant_error("normal form residual is nonzero: rows are outside the row space");

    const std::uint32_t nvars = monbas.empty() ? 0 : static_cast<std::uint32_t>(monbas[0].nvars());
    std::uint32_t ncomps = 1;
    for (const auto& b : monbas) ncomps = std::max(ncomps, b.comp + 1);
    std::vector<ModulePoly> out;
    out.reserve(T.rows());
    for (std::size_t j = 0; j < T.rows(); ++j) {
        ModulePoly p(nvars, ncomps);
        for (std::size_t l = 0; l < monbas.size(); ++l)
            p.add_term(monbas[l], nf_mat.at(j, l), fld);
        out.push_back(std::move(p));
    }
    return out;
}

namespace detail {

// Leading monomials (minimal generators) plus border/expset deduced from a
// computed monomial basis.
struct LeadingData {
    std::vector<Monomial> lm;     // ascending
    std::vector<Monomial> border; // ascending
};

inline LeadingData leading_from_monbas(const MonomialOrderSpec& order,
                                       const std::vector<Monomial>& monbas,
                                       std::uint32_t nvars, std::uint32_t ncomps) {
    std::set<Monomial, MonomialKeyLess> basis_set(monbas.begin(), monbas.end());
    std::set<Monomial, MonomialKeyLess> border_set;
    for (const auto& b : monbas)
        for (std::size_t k = 0; k < nvars; ++k) {
            Monomial m = mul_by_power(b, k, 1);
            if (!basis_set.count(m)) border_set.insert(std::move(m));
        }
    for (std::uint32_t i = 0; i < ncomps; ++i) {
        Monomial unit = Monomial::unit(nvars, i);
        if (!basis_set.count(unit)) border_set.insert(std::move(unit));
    }
    LeadingData out;
    out.border.assign(border_set.begin(), border_set.end());
    out.lm = minimal_generators(out.border);
    auto lt = [&](const Monomial& a, const Monomial& b) { return order_less(order, a, b); };
    std::sort(out.border.begin(), out.border.end(), lt);
    std::sort(out.lm.begin(), out.lm.end(), lt);
    return out;
}

// Builds the T matrix of linearized targets for a list of border monomials:
// coordinate vectors take their F row, and any other target X_k b takes the
// basmat row of b multiplied by M_k, batched per variable.
inline DenseMatrix linearize_targets(const std::vector<Monomial>& targets,
                                     const std::vector<Monomial>& monbas,
                                     const DenseMatrix& basmat, const Instance& inst) {
    std::map<Monomial, std::size_t, MonomialKeyLess> basis_pos;
    for (std::size_t i = 0; i < monbas.size(); ++i) basis_pos[monbas[i]] = i;

    DenseMatrix T(inst.field, targets.size(), inst.dim);
    std::vector<std::vector<std::size_t>> per_var_rows(inst.nvars);
    std::vector<std::vector<std::size_t>> per_var_src(inst.nvars);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Monomial& mu = targets[t];
        if (mu.is_unit()) {
            for (std::size_t c = 0; c < inst.dim; ++c) T.at(t, c) = inst.F.at(mu.comp, c);
            continue;
        }
        bool placed = false;
        for (std::size_t k = 0; k < inst.nvars && !placed; ++k) {
            if (mu.exps[k] == 0) continue;
            Monomial pred = mu;
            pred.exps[k] -= 1;
            auto it = basis_pos.find(pred);
            if (it == basis_pos.end()) continue;
            per_var_rows[k].push_back(t);
            per_var_src[k].push_back(it->second);
            placed = true;
        }
        if (!placed)
            throw invariant_error("border monomial without predecessor in the monomial basis: " +
                                  to_string(mu));
    }
    for (std::size_t k = 0; k < inst.nvars; ++k) {
        if (per_var_rows[k].empty()) continue;
        const DenseMatrix rows = gather_rows(basmat, per_var_src[k]);
        const DenseMatrix prod = mat_mul(rows, inst.mats[k]);
        for (std::size_t r = 0; r < per_var_rows[k].size(); ++r)
            for (std::size_t c = 0; c < inst.dim; ++c)
                T.at(per_var_rows[k][r], c) = prod.at(r, c);
    }
    return T;
}

inline std::vector<ModulePoly> basis_from_targets(const std::vector<Monomial>& targets,
                                                  const MonomialBasisResult& mb,
                                                  const Instance& inst) {
    const DenseMatrix T = linearize_targets(targets, mb.monbas, mb.basmat, inst);
    std::vector<ModulePoly> nfs = normal_form(T, mb.monbas, mb.basmat);
    std::vector<ModulePoly> out;
    out.reserve(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        ModulePoly g = ModulePoly::from_term(targets[t], 1, inst.nvars, inst.ncomps);
        g.add_scaled(nfs[t], inst.field.neg(1), inst.field);
        out.push_back(std::move(g));
    }
    return out;
}

inline GroebnerBasis full_module_basis(const MonomialOrderSpec& order, const Instance& inst) {
    // zero quotient: every coordinate vector is a syzygy lead
    GroebnerBasis gb{inst.field, order, inst.nvars, inst.ncomps, {}, true};
    for (std::uint32_t i = 0; i < inst.ncomps; ++i)
        gb.elements.push_back(
            ModulePoly::from_term(Monomial::unit(inst.nvars, i), 1, inst.nvars, inst.ncomps));
    return gb;
}

} // namespace detail

// Reduced Groebner basis of the syzygy module of F: one element mu - nf(mu)
// per minimal generator mu of the leading module, elements ascending by
// leading monomial.
inline GroebnerBasis syzygy_basis(const MonomialOrderSpec& order, const Instance& inst,
                                  const SyzygyOptions& opts = {}) {
    if (opts.should_validate(inst.dim)) inst.require_commuting();
    if (inst.dim == 0) return detail::full_module_basis(order, inst);

    const MonomialBasisResult mb = monomial_basis(order, inst);
    const detail::LeadingData lead =
        detail::leading_from_monbas(order, mb.monbas, inst.nvars, inst.ncomps);
    GroebnerBasis gb{inst.field, order, inst.nvars, inst.ncomps,
                     detail::basis_from_targets(lead.lm, mb, inst), true};
    return gb;
}

// Border-basis variant: one element per border monomial instead of only the
// minimal generators.
inline std::vector<ModulePoly> border_basis(const MonomialOrderSpec& order, const Instance& inst,
                                            const SyzygyOptions& opts = {}) {
    if (opts.should_validate(inst.dim)) inst.require_commuting();
    if (inst.dim == 0) return detail::full_module_basis(order, inst).elements;

    const MonomialBasisResult mb = monomial_basis(order, inst);
    const detail::LeadingData lead =
        detail::leading_from_monbas(order, mb.monbas, inst.nvars, inst.ncomps);
    return detail::basis_from_targets(lead.border, mb, inst);
}

} // namespace syzkit

#endif

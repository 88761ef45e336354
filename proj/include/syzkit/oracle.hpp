#ifndef SYZKIT_ORACLE_HPP
#define SYZKIT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/indexing.hpp"
#include "syzkit/instance.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/order.hpp"

// Slow, obviously correct reference implementations. Everything here
// materializes the full multi-Krylov matrix and refuses above a hard row
// limit (SYZKIT_ORACLE_LIMIT, default 10^6) instead of thrashing.
namespace syzkit::oracle {

inline std::size_t row_limit() {
    if (const char* env = std::getenv("SYZKIT_ORACLE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

struct MultiKrylov {
    SortedMonomialList index;
    DenseMatrix mat; // row at position k is index.at(k) applied to F
};

inline MultiKrylov materialize_multi_krylov(const MonomialOrderSpec& order, const Instance& inst,
                                            const std::vector<std::uint32_t>& beta,
                                            std::size_t limit = row_limit()) {
    SortedMonomialList index(order, beta, inst.ncomps, limit);
    const std::size_t n = inst.nvars;

    // walk the exponent box per component with the last variable fastest;
    // every row is one vector-matrix product away from a predecessor already
    // in the walk
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * beta[k];
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(index.size());
    DenseMatrix mat(inst.field, index.size(), inst.dim);
    for (std::uint32_t comp = 0; comp < inst.ncomps; ++comp) {
        const std::size_t base = rows.size();
        std::vector<std::uint32_t> e(n, 0);
        bool done = false;
        while (!done) {
            std::size_t first = 0;
            while (first < n && e[first] == 0) ++first;
            if (first == n) {
                rows.push_back(inst.F.row_vector(comp));
            } else {
                const std::size_t pred = rows.size() - base - stride[first];
                rows.push_back(vec_mat_mul(rows[base + pred], inst.mats[first]));
            }
            const std::size_t pos = index.position_of(Monomial(e, comp));
            for (std::size_t c = 0; c < inst.dim; ++c) mat.at(pos, c) = rows.back()[c];
            std::size_t k = n;
            while (true) {
                if (k == 0) { done = true; break; }
                --k;
                if (++e[k] < beta[k]) break;
                e[k] = 0;
            }
        }
    }
    return {std::move(index), std::move(mat)};
}

inline std::vector<std::uint32_t> algorithm_bounds(std::uint32_t dim, std::size_t nvars) {
    std::uint32_t log2d = 0;
    while ((1u << log2d) < dim) ++log2d;
    return std::vector<std::uint32_t>(nvars, 1u << (log2d + 1));
}

// Monomial basis as the row-rank-profile preimage of the fully materialized
// multi-Krylov matrix; the independent check for the incremental engine.
inline std::vector<Monomial> oracle_monomial_basis(const MonomialOrderSpec& order,
                                                   const Instance& inst,
                                                   std::size_t limit = row_limit()) {
    if (inst.dim == 0) return {};
    const MultiKrylov mk =
        materialize_multi_krylov(order, inst, algorithm_bounds(inst.dim, inst.nvars), limit);
    const RankProfile rp = row_rank_profile(mk.mat);
    std::vector<Monomial> out;
    out.reserve(rp.rank);
    for (auto idx : rp.indices) out.push_back(mk.index.at(idx));
    return out;
}

// RREF basis of the bounded-degree syzygies, one contracted polynomial per
// nullspace row.
inline DenseMatrix oracle_bounded_syzygies(const MonomialOrderSpec& order, const Instance& inst,
                                           const std::vector<std::uint32_t>& beta,
                                           std::size_t limit = row_limit()) {
    const MultiKrylov mk = materialize_multi_krylov(order, inst, beta, limit);
    return left_nullspace_rref(mk.mat);
}

// Same nullspace, but as sparse unreduced combination rows: row i of the
// eliminated matrix was expressed on at most rank+1 earlier rows, so each
// syzygy has few terms and the quadratic RREF pass is skipped. Suited to
// randomized sweeps where thousands of rows would make the RREF the
// bottleneck.
inline std::vector<ModulePoly> oracle_bounded_syzygy_polys(const MonomialOrderSpec& order,
                                                           const Instance& inst,
                                                           const std::vector<std::uint32_t>& beta,
                                                           std::size_t limit = row_limit()) {
    const MultiKrylov mk = materialize_multi_krylov(order, inst, beta, limit);
    const DenseMatrix& a = mk.mat;
    const PrimeField& fld = inst.field;
    const std::uint64_t p = fld.modulus();

    detail::Eliminator el(fld, a.cols());
    std::vector<std::vector<std::pair<std::size_t, FieldElem>>> pivot_comb;
    std::vector<ModulePoly> out;
    std::vector<std::uint64_t> acc(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) acc[j] = a.at(i, j);
        std::vector<std::pair<std::size_t, FieldElem>> comb{{i, 1}};
        el.reduce(acc, [&](std::size_t piv, FieldElem f) {
            const FieldElem nf = fld.neg(f);
            for (const auto& [idx, c] : pivot_comb[piv])
                comb.emplace_back(idx, fld.mul(nf, c));
        });
        // collapse repeated indices
        std::sort(comb.begin(), comb.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<std::size_t, FieldElem>> merged;
        for (const auto& [idx, c] : comb) {
            if (!merged.empty() && merged.back().first == idx)
                merged.back().second = fld.add(merged.back().second, c);
            else
                merged.emplace_back(idx, c);
        }
        std::erase_if(merged, [](const auto& t) { return t.second == 0; });

        bool zero = true;
        for (auto x : acc) if (x % p != 0) { zero = false; break; }
        if (zero) {
            ModulePoly syz(inst.nvars, inst.ncomps);
            for (const auto& [idx, c] : merged) syz.add_term(mk.index.at(idx), c, fld);
            out.push_back(std::move(syz));
        } else {
            std::vector<FieldElem> red(a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j) red[j] = static_cast<FieldElem>(acc[j] % p);
            FieldElem lead;
            el.add_pivot(std::move(red), lead);
            const FieldElem il = fld.inv(lead);
            for (auto& [idx, c] : merged) c = fld.mul(c, il);
            pivot_comb.push_back(std::move(merged));
        }
    }
    return out;
}

} // namespace syzkit::oracle

#endif

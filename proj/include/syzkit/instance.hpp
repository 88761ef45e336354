#ifndef SYZKIT_INSTANCE_HPP
#define SYZKIT_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/prime_field.hpp"

namespace syzkit {

// A finite-dimensional module presented by n pairwise commuting D x D
// multiplication matrices plus an m x D matrix F whose rows are the elements
// whose syzygies are sought.
struct Instance {
    PrimeField field;
    std::uint32_t nvars;  // n
    std::uint32_t ncomps; // m
    std::uint32_t dim;    // D
    std::vector<DenseMatrix> mats;
    DenseMatrix F;

    Instance(PrimeField f, std::uint32_t n, std::uint32_t m, std::uint32_t D,
             std::vector<DenseMatrix> ms, DenseMatrix fmat)
        : field(f), nvars(n), ncomps(m), dim(D), mats(std::move(ms)), F(std::move(fmat)) {
        if (mats.size() != nvars) throw validation_error("instance needs one matrix per variable");
        for (const auto& M : mats) {
            if (M.field() != field) throw validation_error("field context mismatch in instance");
            if (M.rows() != dim || M.cols() != dim)
                throw validation_error("multiplication matrix is not D x D");
        }
        if (F.field() != field) throw validation_error("field context mismatch in instance");
        if (F.rows() != ncomps || F.cols() != dim) throw validation_error("F is not m x D");
    }

    // first pair (i, j), 0-based, with M_i M_j != M_j M_i
    std::optional<std::pair<std::size_t, std::size_t>> find_noncommuting_pair() const {
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = i + 1; j < mats.size(); ++j)
                if (mat_mul(mats[i], mats[j]) != mat_mul(mats[j], mats[i]))
                    return std::make_pair(i, j);
        return std::nullopt;
    }

    void require_commuting() const {
        if (auto bad = find_noncommuting_pair())
            throw validation_error("multiplication matrices M" + std::to_string(bad->first + 1) +
                                   " and M" + std::to_string(bad->second + 1) + " do not commute");
    }
};

// row vector of p applied to the instance: sum over terms c X^e c_i of
// c * (row i of F) * M_1^{e_1} ... M_n^{e_n}
inline std::vector<FieldElem> apply_poly(const Instance& inst, const ModulePoly& p) {
    if (p.nvars() != inst.nvars || p.ncomps() != inst.ncomps)
        throw validation_error("polynomial dimensions do not match the instance");
    const PrimeField& fld = inst.field;
    std::vector<std::uint64_t> acc(inst.dim, 0);
    std::size_t pending = 0;
    for (const auto& [mon, coeff] : p.terms()) {
        std::vector<FieldElem> v = inst.F.row_vector(mon.comp);
        for (std::size_t k = 0; k < inst.nvars; ++k)
            for (std::uint32_t e = 0; e < mon.exps[k]; ++e)
                v = vec_mat_mul(v, inst.mats[k]);
        for (std::size_t j = 0; j < inst.dim; ++j)
            acc[j] += static_cast<std::uint64_t>(coeff) * v[j];
        if (++pending == fld.mac_block()) {
            for (auto& x : acc) x %= fld.modulus();
            pending = 0;
        }
    }
    std::vector<FieldElem> out(inst.dim);
    for (std::size_t j = 0; j < inst.dim; ++j) out[j] = fld.reduce(acc[j]);
    return out;
}

} // namespace syzkit

#endif

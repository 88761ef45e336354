#ifndef SYZKIT_KRYLOV_HPP
#define SYZKIT_KRYLOV_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"

namespace syzkit {

// Vectors v_1..v_t with per-vector power bounds e_1..e_t >= 1.
struct KrylovPlan {
    std::vector<std::vector<FieldElem>> vectors;
    std::vector<std::uint32_t> bounds;
};

// Computes all rows v_j M^e for 1 <= e <= e_j by repeated squaring of M:
// pass i fills exponents in (2^(i-1), 2^i] from the rows 2^(i-1) lower,
// one matrix product per pass. Output row e_1+...+e_{j-1} + (e-1) carries
// v_j M^e.
inline DenseMatrix krylov_eval(const DenseMatrix& M, const KrylovPlan& plan) {
    if (M.rows() != M.cols()) throw validation_error("Krylov evaluation needs a square matrix");
    if (plan.vectors.size() != plan.bounds.size())
        throw validation_error("Krylov plan vectors/bounds length mismatch");
    const std::size_t dim = M.rows();
    const std::size_t t = plan.vectors.size();

    std::uint32_t max_bound = 0;
    std::size_t total = 0;
    std::vector<std::size_t> offset(t, 0);
    for (std::size_t j = 0; j < t; ++j) {
        if (plan.bounds[j] == 0) throw validation_error("Krylov bounds must be positive");
        if (plan.vectors[j].size() != dim)
            throw validation_error("Krylov vector length mismatch");
        offset[j] = total;
        total += plan.bounds[j];
        max_bound = std::max(max_bound, plan.bounds[j]);
    }

    DenseMatrix K(M.field(), total, dim);
    if (t == 0) return K;

    // e = 1 for every vector
    {
        DenseMatrix V(M.field(), t, dim);
        for (std::size_t j = 0; j < t; ++j) V.set_row(j, plan.vectors[j]);
        const DenseMatrix VM = mat_mul(V, M);
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t c = 0; c < dim; ++c) K.at(offset[j], c) = VM.at(j, c);
    }

    DenseMatrix power = M;
    for (std::uint32_t step = 1; (1u << (step - 1)) < max_bound; ++step) {
        if (step > 1) power = mat_mul(power, power);
        const std::uint32_t lo = 1u << (step - 1);
        const std::uint32_t hi = 1u << step;
        std::vector<std::size_t> dst, src;
        for (std::size_t j = 0; j < t; ++j)
            for (std::uint32_t e = lo + 1; e <= std::min(plan.bounds[j], hi); ++e) {
                dst.push_back(offset[j] + e - 1);
                src.push_back(offset[j] + (e - lo) - 1);
            }
        if (dst.empty()) continue;
        const DenseMatrix prod = mat_mul(gather_rows(K, src), power);
        for (std::size_t r = 0; r < dst.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) K.at(dst[r], c) = prod.at(r, c);
    }
    return K;
}

} // namespace syzkit

#endif

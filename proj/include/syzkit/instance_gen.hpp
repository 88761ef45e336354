#ifndef SYZKIT_INSTANCE_GEN_HPP
#define SYZKIT_INSTANCE_GEN_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "syzkit/dense_matrix.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/instance.hpp"

namespace syzkit {

// Deterministic residue stream; mt19937_64 is pinned by the standard, so a
// seed fully determines every generated instance on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    FieldElem residue(const PrimeField& f) {
        return static_cast<FieldElem>(gen_() % f.modulus());
    }

    DenseMatrix matrix(const PrimeField& f, std::size_t rows, std::size_t cols) {
        DenseMatrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = residue(f);
        return m;
    }

private:
    std::mt19937_64 gen_;
};

// Truncated power series in one variable: M_1 is the D x D upper shift
// matrix and row i of F holds the coefficients of f_i below degree D, so the
// syzygies are the order-D Hermite-Pade approximants of the f_i.
inline Instance gen_hermite_pade(std::uint32_t p, std::uint32_t D,
                                 const std::vector<std::vector<FieldElem>>& polys) {
    PrimeField fld(p);
    DenseMatrix shift(fld, D, D);
    for (std::uint32_t i = 0; i + 1 < D; ++i) shift.at(i, i + 1) = 1;
    DenseMatrix F(fld, polys.size(), D);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].size() > D)
            throw validation_error("series coefficients exceed the truncation order");
        for (std::size_t j = 0; j < polys[i].size(); ++j) F.at(i, j) = fld.reduce(polys[i][j]);
    }
    return Instance(fld, 1, static_cast<std::uint32_t>(polys.size()), D, {shift}, F);
}

// Vanishing ideal of a finite point set: diagonal multiplication matrices
// carrying the coordinates, F = [1 ... 1].
inline Instance gen_points_ideal(std::uint32_t p,
                                 const std::vector<std::vector<FieldElem>>& points) {
    PrimeField fld(p);
    if (points.empty()) throw validation_error("need at least one point");
    const std::size_t n = points[0].size();
    if (n == 0) throw validation_error("points must have at least one coordinate");
    std::set<std::vector<FieldElem>> seen;
    for (const auto& pt : points) {
        if (pt.size() != n) throw validation_error("points have inconsistent dimensions");
        std::vector<FieldElem> canon(pt);
        for (auto& x : canon) x = fld.reduce(x);
        if (!seen.insert(canon).second) throw validation_error("duplicate point in the input");
    }
    const std::uint32_t D = static_cast<std::uint32_t>(points.size());
    std::vector<DenseMatrix> mats;
    for (std::size_t k = 0; k < n; ++k) {
        DenseMatrix M(fld, D, D);
        for (std::uint32_t i = 0; i < D; ++i) M.at(i, i) = fld.reduce(points[i][k]);
        mats.push_back(std::move(M));
    }
    DenseMatrix F(fld, 1, D);
    for (std::uint32_t i = 0; i < D; ++i) F.at(0, i) = 1;
    return Instance(fld, static_cast<std::uint32_t>(n), 1, D, std::move(mats), F);
}

// Annihilator ideal of commuting d x d matrices N_1..N_n: the module is the
// d x d matrix space acted on by right multiplication, so D = d^2 with
// M_k = I_d (x) N_k block-diagonal, and F is the coordinate row of the
// identity matrix on the elementary-matrix basis. The syzygies of that
// single element are exactly the polynomials vanishing on (N_1,...,N_n).
inline Instance gen_matrix_annihilator(std::uint32_t p, const std::vector<DenseMatrix>& nk) {
    PrimeField fld(p);
    if (nk.empty()) throw validation_error("need at least one matrix");
    const std::size_t d = nk[0].rows();
    for (const auto& N : nk) {
        if (N.field() != fld) throw validation_error("field context mismatch");
        if (N.rows() != d || N.cols() != d) throw validation_error("matrices must share one size");
    }
    for (std::size_t i = 0; i < nk.size(); ++i)
        for (std::size_t j = i + 1; j < nk.size(); ++j)
            if (mat_mul(nk[i], nk[j]) != mat_mul(nk[j], nk[i]))
                throw validation_error("input matrices N" + std::to_string(i + 1) + " and N" +
                                       std::to_string(j + 1) + " do not commute");
    const std::uint32_t D = static_cast<std::uint32_t>(d * d);
    std::vector<DenseMatrix> mats;
    for (const auto& N : nk) {
        DenseMatrix M(fld, D, D);
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    M.at(b * d + i, b * d + j) = N.at(i, j);
        mats.push_back(std::move(M));
    }
    DenseMatrix F(fld, 1, D);
    for (std::size_t i = 0; i < d; ++i) F.at(0, i * d + i) = 1;
    return Instance(fld, static_cast<std::uint32_t>(nk.size()), 1, D, std::move(mats), F);
}

namespace detail {

// Basis position of X^e in K[X]/<X_1^d,...,X_n^d>: monomials sorted so that
// X_1 varies fastest, which makes M_1 block-diagonal in upper shift blocks
// and M_n the top-level block superdiagonal of identities.
inline std::size_t pade_position(const std::vector<std::uint32_t>& e, std::uint32_t d) {
    std::size_t pos = 0;
    for (std::size_t k = e.size(); k-- > 0;) pos = pos * d + e[k];
    return pos;
}

} // namespace detail

// Simultaneous multivariate Pade-style approximation: quotient by
// <X_1^d,...,X_n^d> with elements (-1, f_2, ..., f_m). Each f_i is given by
// its d^n coefficients on the monomial basis in pade_position order.
inline Instance gen_multivar_pade(std::uint32_t p, std::uint32_t n, std::uint32_t d,
                                  const std::vector<std::vector<FieldElem>>& trunc_polys) {
    PrimeField fld(p);
    if (n == 0 || d == 0) throw validation_error("need n >= 1 and d >= 1");
    std::size_t total = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (total > (std::size_t{1} << 31) / d) throw validation_error("d^n is too large");
        total *= d;
    }
    const std::uint32_t D = static_cast<std::uint32_t>(total);
    std::vector<DenseMatrix> mats;
    std::size_t stride = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        DenseMatrix M(fld, D, D);
        for (std::size_t pos = 0; pos < total; ++pos) {
            const std::uint32_t ek = static_cast<std::uint32_t>((pos / stride) % d);
            if (ek + 1 < d) M.at(pos, pos + stride) = 1;
        }
        mats.push_back(std::move(M));
        stride *= d;
    }
    const std::uint32_t m = static_cast<std::uint32_t>(trunc_polys.size() + 1);
    DenseMatrix F(fld, m, D);
    F.at(0, 0) = fld.neg(1);
    for (std::size_t i = 0; i < trunc_polys.size(); ++i) {
        if (trunc_polys[i].size() != total)
            throw validation_error("truncated polynomial needs exactly d^n coefficients");
        for (std::size_t j = 0; j < total; ++j) F.at(i + 1, j) = fld.reduce(trunc_polys[i][j]);
    }
    return Instance(fld, n, m, D, std::move(mats), F);
}

// Random commuting family: M_1 is a uniform D x D matrix and every other
// M_k = q_k(M_1) for a random polynomial q_k of degree < D, which commutes
// by construction. F is uniform m x D. Fully determined by the seed.
inline Instance gen_random_commuting(std::uint32_t p, std::uint32_t n, std::uint32_t m,
                                     std::uint32_t D, std::uint64_t seed) {
    PrimeField fld(p);
    SeededRng rng(seed);
    std::vector<DenseMatrix> mats;
    DenseMatrix m1 = rng.matrix(fld, D, D);
    mats.push_back(m1);
    for (std::uint32_t k = 1; k < n; ++k) {
        // Horner evaluation of a random degree < D polynomial at M_1
        std::vector<FieldElem> q(D);
        for (auto& c : q) c = rng.residue(fld);
        DenseMatrix acc(fld, D, D);
        for (std::size_t i = q.size(); i-- > 0;) {
            acc = mat_mul(acc, m1);
            for (std::uint32_t j = 0; j < D; ++j) acc.at(j, j) = fld.add(acc.at(j, j), q[i]);
        }
        mats.push_back(std::move(acc));
    }
    DenseMatrix F = rng.matrix(fld, m, D);
    return Instance(fld, n, m, D, std::move(mats), F);
}

} // namespace syzkit

#endif

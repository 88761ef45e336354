#ifndef SYZKIT_DENSE_MATRIX_HPP
#define SYZKIT_DENSE_MATRIX_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/prime_field.hpp"

namespace syzkit {

// Row-major matrix of canonical residues. Empty row/column counts are legal
// everywhere; a 0xN or Nx0 matrix has rank 0 and empty products behave as
// expected.
class DenseMatrix {
public:
    DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static DenseMatrix identity(PrimeField f, std::size_t n) {
        DenseMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FieldElem* row(std::size_t i) { return data_.data() + i * cols_; }
    const FieldElem* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<FieldElem> row_vector(std::size_t i) const {
        return std::vector<FieldElem>(row(i), row(i) + cols_);
    }

    void set_row(std::size_t i, const std::vector<FieldElem>& v) {
        if (v.size() != cols_) throw validation_error("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    bool is_zero() const {
        for (FieldElem x : data_) if (x != 0) return false;
        return true;
    }

    bool operator==(const DenseMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> data_;
};

struct RankProfile {
    std::size_t rank = 0;
    std::vector<std::size_t> indices; // increasing, 0-based
};

namespace detail {

inline void require_same_field(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.field() != b.field()) throw validation_error("field context mismatch");
}

// c[i,:] = a[i,:] * b with 64-bit accumulators, reducing every mac_block() terms.
inline void mul_classic(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    const PrimeField& fld = a.field();
    const std::uint64_t p = fld.modulus();
    const std::size_t block = fld.mac_block();
    std::vector<std::uint64_t> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t pending = 0;
        const FieldElem* arow = a.row(i);
        for (std::size_t l = 0; l < k; ++l) {
            const std::uint64_t alv = arow[l];
            if (alv == 0) continue;
            const FieldElem* brow = b.row(l);
            for (std::size_t j = 0; j < m; ++j) acc[j] += alv * brow[j];
            if (++pending == block) {
                for (std::size_t j = 0; j < m; ++j) acc[j] %= p;
                pending = 0;
            }
        }
        FieldElem* crow = c.row(i);
        for (std::size_t j = 0; j < m; ++j) crow[j] = static_cast<FieldElem>(acc[j] % p);
    }
}

} // namespace detail

inline DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t.at(j, i) = a.at(i, j);
    return t;
}

inline DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw validation_error("matrix addition dimension mismatch");
    DenseMatrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return c;
}

inline DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw validation_error("matrix subtraction dimension mismatch");
    DenseMatrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    return c;
}

// Strassen recursion threshold; 0 disables it. Results are bit-identical to
// the classical kernel either way, the switch only trades multiplications
// for additions.
inline std::atomic<std::size_t>& strassen_threshold() {
    static std::atomic<std::size_t> t{0};
    return t;
}

inline void set_strassen_threshold(std::size_t t) { strassen_threshold() = t; }

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

namespace detail {

inline DenseMatrix quadrant(const DenseMatrix& a, std::size_t i0, std::size_t j0,
                            std::size_t r, std::size_t c) {
    DenseMatrix q(a.field(), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            q.at(i, j) = (i0 + i < a.rows() && j0 + j < a.cols()) ? a.at(i0 + i, j0 + j) : 0;
    return q;
}

inline void paste(DenseMatrix& dst, const DenseMatrix& src, std::size_t i0, std::size_t j0) {
    for (std::size_t i = 0; i < src.rows() && i0 + i < dst.rows(); ++i)
        for (std::size_t j = 0; j < src.cols() && j0 + j < dst.cols(); ++j)
            dst.at(i0 + i, j0 + j) = src.at(i, j);
}

inline DenseMatrix mul_strassen(const DenseMatrix& a, const DenseMatrix& b, std::size_t threshold) {
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    if (n < threshold || k < threshold || m < threshold) {
        DenseMatrix c(a.field(), n, m);
        mul_classic(a, b, c);
        return c;
    }
    const std::size_t hn = (n + 1) / 2, hk = (k + 1) / 2, hm = (m + 1) / 2;
    DenseMatrix a11 = quadrant(a, 0, 0, hn, hk), a12 = quadrant(a, 0, hk, hn, hk);
    DenseMatrix a21 = quadrant(a, hn, 0, hn, hk), a22 = quadrant(a, hn, hk, hn, hk);
    DenseMatrix b11 = quadrant(b, 0, 0, hk, hm), b12 = quadrant(b, 0, hm, hk, hm);
    DenseMatrix b21 = quadrant(b, hk, 0, hk, hm), b22 = quadrant(b, hk, hm, hk, hm);

    DenseMatrix m1 = mul_strassen(mat_add(a11, a22), mat_add(b11, b22), threshold);
    DenseMatrix m2 = mul_strassen(mat_add(a21, a22), b11, threshold);
    DenseMatrix m3 = mul_strassen(a11, mat_sub(b12, b22), threshold);
    DenseMatrix m4 = mul_strassen(a22, mat_sub(b21, b11), threshold);
    DenseMatrix m5 = mul_strassen(mat_add(a11, a12), b22, threshold);
    DenseMatrix m6 = mul_strassen(mat_sub(a21, a11), mat_add(b11, b12), threshold);
    DenseMatrix m7 = mul_strassen(mat_sub(a12, a22), mat_add(b21, b22), threshold);

    DenseMatrix c(a.field(), n, m);
    paste(c, mat_add(mat_sub(mat_add(m1, m4), m5), m7), 0, 0);
    paste(c, mat_add(m3, m5), 0, hm);
    paste(c, mat_add(m2, m4), hn, 0);
    paste(c, mat_add(mat_add(mat_sub(m1, m2), m3), m6), hn, hm);
    return c;
}

} // namespace detail

inline DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_same_field(a, b);
    if (a.cols() != b.rows())
        throw validation_error("matrix product dimension mismatch: " +
                               std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    const std::size_t threshold = strassen_threshold();
    if (threshold >= 2 && a.rows() >= threshold && a.cols() >= threshold && b.cols() >= threshold)
        return detail::mul_strassen(a, b, threshold);
    DenseMatrix c(a.field(), a.rows(), b.cols());
    detail::mul_classic(a, b, c);
    return c;
}

inline std::vector<FieldElem> vec_mat_mul(const std::vector<FieldElem>& v, const DenseMatrix& m) {
    if (v.size() != m.rows()) throw validation_error("vector-matrix dimension mismatch");
    const PrimeField& fld = m.field();
    const std::uint64_t p = fld.modulus();
    const std::size_t block = fld.mac_block();
    std::vector<std::uint64_t> acc(m.cols(), 0);
    std::size_t pending = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t vi = v[i];
        if (vi == 0) continue;
        const FieldElem* r = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += vi * r[j];
        if (++pending == block) {
            for (auto& x : acc) x %= p;
            pending = 0;
        }
    }
    std::vector<FieldElem> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = static_cast<FieldElem>(acc[j] % p);
    return out;
}

inline DenseMatrix gather_rows(const DenseMatrix& a, const std::vector<std::size_t>& idx) {
    DenseMatrix g(a.field(), idx.size(), a.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            g.at(i, j) = a.at(idx[i], j);
    return g;
}

inline DenseMatrix take_columns(const DenseMatrix& a, const std::vector<std::size_t>& cols) {
    DenseMatrix g(a.field(), a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            g.at(i, j) = a.at(i, cols[j]);
    return g;
}

namespace detail {

// Incremental echelon basis used by the rank-profile and nullspace kernels.
// Pivot rows keep pivot entry 1 and are stored in insertion order; a row
// added later is already reduced against all earlier pivots, so reducing a
// fresh row against pivots in insertion order is exact.
struct Eliminator {
    const PrimeField& fld;
    std::size_t ncols;
    std::vector<std::vector<FieldElem>> pivot_rows;
    std::vector<std::size_t> pivot_cols;

    Eliminator(const PrimeField& f, std::size_t cols) : fld(f), ncols(cols) {}

    // Reduces acc (64-bit accumulators, entries possibly unreduced) in place
    // against every pivot. `combine` is invoked as combine(k, factor) for
    // each pivot k eliminated with acc -= factor * pivot_rows[k].
    template <typename Combine>
    void reduce(std::vector<std::uint64_t>& acc, Combine&& combine) const {
        const std::uint64_t p = fld.modulus();
        const std::size_t block = fld.mac_block();
        std::size_t pending = 0;
        for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
            const std::size_t c = pivot_cols[k];
            const FieldElem f = static_cast<FieldElem>(acc[c] % p);
            if (f == 0) continue;
            const FieldElem nf = fld.neg(f);
            const std::vector<FieldElem>& pv = pivot_rows[k];
            for (std::size_t j = 0; j < ncols; ++j) acc[j] += static_cast<std::uint64_t>(nf) * pv[j];
            combine(k, f);
            if (++pending == block) {
                for (auto& x : acc) x %= p;
                pending = 0;
            }
        }
        for (auto& x : acc) x %= p;
    }

    // Adds a fully reduced nonzero row as a new pivot (scaled monic at its
    // leftmost nonzero entry). Returns the pivot column; the caller passes
    // the scaling factor on through `lead`.
    std::size_t add_pivot(std::vector<FieldElem> row, FieldElem& lead) {
        std::size_t c = 0;
        while (c < ncols && row[c] == 0) ++c;
        lead = row[c];
        if (lead != 1) {
            const FieldElem il = fld.inv(lead);
            for (auto& x : row) x = fld.mul(x, il);
        }
        pivot_cols.push_back(c);
        pivot_rows.push_back(std::move(row));
        return c;
    }
};

} // namespace detail

// Lexicographically smallest maximal independent row subset: row i enters
// the profile iff it is independent of rows 0..i-1.
inline RankProfile row_rank_profile(const DenseMatrix& a) {
    RankProfile rp;
    detail::Eliminator el(a.field(), a.cols());
    const std::uint64_t p = a.field().modulus();
    std::vector<std::uint64_t> acc(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const FieldElem* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) acc[j] = r[j];
        el.reduce(acc, [](std::size_t, FieldElem) {});
        bool zero = true;
        for (auto x : acc) if (x % p != 0) { zero = false; break; }
        if (zero) continue;
        std::vector<FieldElem> red(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) red[j] = static_cast<FieldElem>(acc[j] % p);
        FieldElem lead;
        el.add_pivot(std::move(red), lead);
        rp.indices.push_back(i);
    }
    rp.rank = rp.indices.size();
    return rp;
}

inline RankProfile column_rank_profile(const DenseMatrix& a) {
    return row_rank_profile(transpose(a));
}

inline DenseMatrix invert(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw validation_error("cannot invert a non-square matrix");
    const std::size_t n = a.rows();
    const PrimeField& fld = a.field();
    // Gauss-Jordan on [A | I]
    DenseMatrix w(fld, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n + i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col) == 0) ++piv;
        if (piv == n) throw validation_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(piv, j), w.at(col, j));
        const FieldElem il = fld.inv(w.at(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j) w.at(col, j) = fld.mul(w.at(col, j), il);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const FieldElem f = w.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j)
                w.at(i, j) = fld.sub(w.at(i, j), fld.mul(f, w.at(col, j)));
        }
    }
    DenseMatrix inv(fld, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = w.at(i, n + j);
    return inv;
}

// Reduced row echelon form: leftmost pivots scaled to 1, zeros above and
// below, zero rows dropped.
inline DenseMatrix rref(const DenseMatrix& a) {
    const PrimeField& fld = a.field();
    DenseMatrix w = a;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t prow = 0;
    for (std::size_t col = 0; col < w.cols() && prow < w.rows(); ++col) {
        std::size_t piv = prow;
        while (piv < w.rows() && w.at(piv, col) == 0) ++piv;
        if (piv == w.rows()) continue;
        if (piv != prow)
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(prow, j));
        const FieldElem il = fld.inv(w.at(prow, col));
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(prow, j) = fld.mul(w.at(prow, j), il);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == prow) continue;
            const FieldElem f = w.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < w.cols(); ++j)
                w.at(i, j) = fld.sub(w.at(i, j), fld.mul(f, w.at(prow, j)));
        }
        pivots.emplace_back(prow, col);
        ++prow;
    }
    DenseMatrix out(fld, prow, w.cols());
    for (std::size_t i = 0; i < prow; ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
    return out;
}

// Unique RREF basis of {v : v * a = 0}; rows(a) - rank(a) rows.
inline DenseMatrix left_nullspace_rref(const DenseMatrix& a) {
    const std::size_t k = a.rows();
    const PrimeField& fld = a.field();
    detail::Eliminator el(fld, a.cols());
    const std::uint64_t p = fld.modulus();
    // combination of original rows expressing each pivot row
    std::vector<std::vector<FieldElem>> pivot_comb;
    std::vector<std::vector<FieldElem>> null_rows;
    std::vector<std::uint64_t> acc(a.cols());
    std::vector<std::uint64_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) {
        const FieldElem* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) acc[j] = r[j];
        std::fill(comb.begin(), comb.end(), 0);
        comb[i] = 1;
        std::size_t comb_pending = 0;
        el.reduce(acc, [&](std::size_t piv, FieldElem f) {
            const FieldElem nf = fld.neg(f);
            const auto& pc = pivot_comb[piv];
            for (std::size_t j = 0; j < k; ++j) comb[j] += static_cast<std::uint64_t>(nf) * pc[j];
            if (++comb_pending == fld.mac_block()) {
                for (auto& x : comb) x %= p;
                comb_pending = 0;
            }
        });
        for (auto& x : comb) x %= p;
        bool zero = true;
        for (auto x : acc) if (x != 0) { zero = false; break; }
        std::vector<FieldElem> combr(k);
        for (std::size_t j = 0; j < k; ++j) combr[j] = static_cast<FieldElem>(comb[j]);
        if (zero) {
            null_rows.push_back(std::move(combr));
        } else {
            std::vector<FieldElem> red(a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j) red[j] = static_cast<FieldElem>(acc[j]);
            FieldElem lead;
            el.add_pivot(std::move(red), lead);
            const FieldElem il = fld.inv(lead);
            for (auto& x : combr) x = fld.mul(x, il);
            pivot_comb.push_back(std::move(combr));
        }
    }
    DenseMatrix nmat(fld, null_rows.size(), k);
    for (std::size_t i = 0; i < null_rows.size(); ++i) nmat.set_row(i, null_rows[i]);
    return rref(nmat);
}

} // namespace syzkit

#endif

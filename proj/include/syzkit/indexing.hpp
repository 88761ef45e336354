#ifndef SYZKIT_INDEXING_HPP
#define SYZKIT_INDEXING_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/order.hpp"

namespace syzkit {

// All monomials {X^e c_i : 0 <= e < beta, 0 <= i < m} sorted ascending under
// the order. Materializes the indexing bijection between these monomials and
// positions 0..m*prod(beta)-1; the main algorithms never build this, it backs
// expansion/contraction and the brute-force oracle.
class SortedMonomialList {
public:
    SortedMonomialList(const MonomialOrderSpec& order, std::vector<std::uint32_t> beta,
                       std::uint32_t ncomps, std::size_t limit = default_limit())
        : order_(order), beta_(std::move(beta)), ncomps_(ncomps) {
        if (beta_.size() != order.nvars())
            throw validation_error("degree bound dimension mismatch");
        std::size_t total = ncomps_;
        for (auto b : beta_) {
            if (b == 0) throw validation_error("degree bounds must be positive");
            if (total > limit / b) throw validation_error("monomial index exceeds the configured size limit");
            total *= b;
        }
        if (total > limit) throw validation_error("monomial index exceeds the configured size limit");
        entries_.reserve(total);
        std::vector<std::uint32_t> e(beta_.size(), 0);
        for (std::size_t flat = 0; flat < total; ++flat)
            entries_.push_back(from_flat(flat));
        std::sort(entries_.begin(), entries_.end(),
                  [&](const Monomial& a, const Monomial& b) { return order_less(order_, a, b); });
        positions_.assign(total, 0);
        for (std::size_t pos = 0; pos < total; ++pos)
            positions_[to_flat(entries_[pos])] = pos;
    }

    static std::size_t default_limit() { return 1'000'000; }

    const MonomialOrderSpec& order() const { return order_; }
    const std::vector<std::uint32_t>& bounds() const { return beta_; }
    std::uint32_t ncomps() const { return ncomps_; }
    std::size_t size() const { return entries_.size(); }

    const std::vector<Monomial>& entries() const { return entries_; }
    const Monomial& at(std::size_t pos) const { return entries_[pos]; }

    // 0-based position under the order
    std::size_t position_of(const Monomial& m) const {
        if (!in_box(m)) throw validation_error("monomial outside the indexed degree box");
        return positions_[to_flat(m)];
    }

    bool in_box(const Monomial& m) const {
        if (m.nvars() != beta_.size() || m.comp >= ncomps_) return false;
        for (std::size_t k = 0; k < beta_.size(); ++k)
            if (m.exps[k] >= beta_[k]) return false;
        return true;
    }

private:
    std::size_t to_flat(const Monomial& m) const {
        std::size_t flat = m.comp;
        for (std::size_t k = 0; k < beta_.size(); ++k)
            flat = flat * beta_[k] + m.exps[k];
        return flat;
    }

    Monomial from_flat(std::size_t flat) const {
        Monomial m;
        m.exps.resize(beta_.size());
        for (std::size_t k = beta_.size(); k-- > 0;) {
            m.exps[k] = static_cast<std::uint32_t>(flat % beta_[k]);
            flat /= beta_[k];
        }
        m.comp = static_cast<std::uint32_t>(flat);
        return m;
    }

    MonomialOrderSpec order_;
    std::vector<std::uint32_t> beta_;
    std::uint32_t ncomps_;
    std::vector<Monomial> entries_;
    std::vector<std::size_t> positions_;
};

// Coefficient vector of p on the indexed monomials; inverse of contract.
inline std::vector<FieldElem> expand(const SortedMonomialList& index, const ModulePoly& p) {
    std::vector<FieldElem> v(index.size(), 0);
    for (const auto& [mon, coeff] : p.terms()) {
        if (!index.in_box(mon))
            throw validation_error("polynomial degree exceeds the expansion bounds");
        v[index.position_of(mon)] = coeff;
    }
    return v;
}

inline ModulePoly contract(const SortedMonomialList& index, const std::vector<FieldElem>& v,
                           const PrimeField& field) {
    if (v.size() != index.size()) throw validation_error("contraction length mismatch");
    ModulePoly p(static_cast<std::uint32_t>(index.order().nvars()), index.ncomps());
    for (std::size_t pos = 0; pos < v.size(); ++pos)
        if (v[pos] != 0) p.add_term(index.at(pos), v[pos], field);
    return p;
}

inline std::vector<FieldElem> expand(const MonomialOrderSpec& order,
                                     const std::vector<std::uint32_t>& beta,
                                     std::uint32_t ncomps, const ModulePoly& p) {
    return expand(SortedMonomialList(order, beta, ncomps), p);
}

inline ModulePoly contract(const MonomialOrderSpec& order, const std::vector<std::uint32_t>& beta,
                           std::uint32_t ncomps, const std::vector<FieldElem>& v,
                           const PrimeField& field) {
    return contract(SortedMonomialList(order, beta, ncomps), v, field);
}

} // namespace syzkit

#endif

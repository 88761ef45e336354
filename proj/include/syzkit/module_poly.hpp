#ifndef SYZKIT_MODULE_POLY_HPP
#define SYZKIT_MODULE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/monomial.hpp"
#include "syzkit/order.hpp"
#include "syzkit/prime_field.hpp"

namespace syzkit {

// Sparse element of K[X_1..X_n]^m: monomial -> nonzero coefficient. Zero
// coefficients are never stored; equality is structural.
class ModulePoly {
public:
    using TermMap = std::map<Monomial, FieldElem, MonomialKeyLess>;

    ModulePoly(std::uint32_t nvars, std::uint32_t ncomps) : nvars_(nvars), ncomps_(ncomps) {}

    static ModulePoly from_term(const Monomial& m, FieldElem c, std::uint32_t nvars,
                                std::uint32_t ncomps) {
        ModulePoly p(nvars, ncomps);
        if (c != 0) p.terms_[p.checked(m)] = c;
        return p;
    }

    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t ncomps() const { return ncomps_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    FieldElem coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& m, FieldElem c, const PrimeField& field) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(checked(m), c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    // *this += s * q
    void add_scaled(const ModulePoly& q, FieldElem s, const PrimeField& field) {
        if (s == 0) return;
        for (const auto& [m, c] : q.terms_) add_term(m, field.mul(s, c), field);
    }

    ModulePoly scaled(FieldElem s, const PrimeField& field) const {
        ModulePoly r(nvars_, ncomps_);
        if (s != 0)
            for (const auto& [m, c] : terms_) r.terms_[m] = field.mul(s, c);
        return r;
    }

    // monomial multiple: mon * (*this)
    ModulePoly times_monomial(const Monomial& mon) const {
        ModulePoly r(nvars_, ncomps_);
        for (const auto& [m, c] : terms_) {
            Monomial prod = m;
            for (std::size_t k = 0; k < nvars_; ++k)
                prod = mul_by_power(prod, k, mon.exps[k]);
            r.terms_[prod] = c;
        }
        return r;
    }

    void negate(const PrimeField& field) {
        for (auto& [m, c] : terms_) c = field.neg(c);
    }

    bool operator==(const ModulePoly& o) const {
        return nvars_ == o.nvars_ && ncomps_ == o.ncomps_ && terms_ == o.terms_;
    }
    bool operator!=(const ModulePoly& o) const { return !(*this == o); }

private:
    const Monomial& checked(const Monomial& m) const {
        if (m.nvars() != nvars_ || m.comp >= ncomps_)
            throw validation_error("term dimensions do not match the polynomial");
        return m;
    }

    std::uint32_t nvars_, ncomps_;
    TermMap terms_;
};

inline std::pair<Monomial, FieldElem> leading_term(const MonomialOrderSpec& order,
                                                   const ModulePoly& p) {
    if (p.is_zero()) throw validation_error("zero polynomial has no leading term");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order_less(order, best->first, it->first)) best = it;
    return {best->first, best->second};
}

inline Monomial leading_monomial(const MonomialOrderSpec& order, const ModulePoly& p) {
    return leading_term(order, p).first;
}

struct GroebnerBasis {
    PrimeField field;
    MonomialOrderSpec order;
    std::uint32_t nvars = 0;
    std::uint32_t ncomps = 0;
    std::vector<ModulePoly> elements;
    bool claimed_reduced = false;

    bool operator==(const GroebnerBasis& o) const {
        return field == o.field && order == o.order && nvars == o.nvars &&
               ncomps == o.ncomps && elements == o.elements;
    }
};

// Reduced: monic leads, and no leading monomial divides any term of another
// element (which subsumes pairwise non-divisibility of the leads) nor any
// tail term of its own element.
inline bool check_reduced(const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    for (const auto& f : gb.elements) {
        if (f.is_zero()) return false;
        auto [lm, lc] = leading_term(gb.order, f);
        if (lc != 1) return false;
        leads.push_back(lm);
    }
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : gb.elements[j].terms())
                if (divides(leads[i], m)) return false;
        }
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (const auto& [m, c] : gb.elements[i].terms())
            if (m != leads[i] && divides(leads[i], m)) return false;
    return true;
}

inline std::string to_string(const ModulePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*" + to_string(m);
    }
    return s;
}

} // namespace syzkit

#endif

#ifndef SYZKIT_DIVISION_HPP
#define SYZKIT_DIVISION_HPP

#include <cstddef>
#include <vector>

#include "syzkit/module_poly.hpp"
#include "syzkit/order.hpp"

namespace syzkit {

// Classical multivariate division: returns the remainder of p against the
// basis elements, no term of which is divisible by any of their leading
// monomials. When the basis is a Groebner basis for its order this is the
// normal form; it is the oracle the linear-algebra path is checked against.
//
// Reducer tie-break: among elements whose lead divides the current term,
// take the one with the smallest leading monomial under the order.
inline ModulePoly divide(const MonomialOrderSpec& order, const ModulePoly& p,
                         const GroebnerBasis& basis) {
    if (basis.order != order) throw validation_error("division order mismatch");
    if (p.nvars() != basis.nvars || p.ncomps() != basis.ncomps)
        throw validation_error("division dimension mismatch");
    const PrimeField& fld = basis.field;

    std::vector<Monomial> leads;
    std::vector<FieldElem> lead_coeffs;
    leads.reserve(basis.elements.size());
    for (const auto& g : basis.elements) {
        auto [lm, lc] = leading_term(order, g);
        leads.push_back(lm);
        lead_coeffs.push_back(lc);
    }

    ModulePoly h = p;
    ModulePoly remainder(p.nvars(), p.ncomps());
    while (!h.is_zero()) {
        auto [t_mon, t_coeff] = leading_term(order, h);
        std::size_t best = leads.size();
        for (std::size_t k = 0; k < leads.size(); ++k) {
            if (!divides(leads[k], t_mon)) continue;
            if (best == leads.size() || order_less(order, leads[k], leads[best])) best = k;
        }
        if (best == leads.size()) {
            remainder.add_term(t_mon, t_coeff, fld);
            h.add_term(t_mon, fld.neg(t_coeff), fld);
            continue;
        }
        const Monomial q = mon_quotient(t_mon, leads[best]);
        const FieldElem factor = fld.div(t_coeff, lead_coeffs[best]);
        ModulePoly sub = basis.elements[best].times_monomial(q);
        h.add_scaled(sub, fld.neg(factor), fld);
    }
    return remainder;
}

} // namespace syzkit

#endif

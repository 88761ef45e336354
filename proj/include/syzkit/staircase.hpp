#ifndef SYZKIT_STAIRCASE_HPP
#define SYZKIT_STAIRCASE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/monomial.hpp"
#include "syzkit/order.hpp"

namespace syzkit {

// Staircase combinatorics of a monomial submodule given by its minimal
// generators lm:
//   monbas  - monomials outside <lm> (the quotient monomial basis)
//   expset  - {X_k b : b in monbas} plus the coordinate vectors not in monbas
//   border  - expset minus monbas; generates <lm>, contains lm
struct StaircaseData {
    std::vector<Monomial> monbas;
    std::vector<Monomial> lm;
    std::vector<Monomial> border;
    std::vector<Monomial> expset;
};

inline bool in_monomial_module(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (divides(g, m)) return true;
    return false;
}

// Minimal elements of a monomial set: drop anything strictly divisible by
// another element (duplicates collapse first).
inline std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), MonomialKeyLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = i != j && divides(gens[j], gens[i]);
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

inline StaircaseData staircase_from_lm(const MonomialOrderSpec& order,
                                       const std::vector<Monomial>& lm, std::uint32_t ncomps) {
    const std::size_t n = order.nvars();
    for (const auto& a : lm)
        for (const auto& b : lm)
            if (a != b && divides(a, b))
                throw validation_error("leading monomials are not a minimal generating set: " +
                                       to_string(a) + " divides " + to_string(b));

    StaircaseData st;
    st.lm = lm;
    std::sort(st.lm.begin(), st.lm.end(),
              [&](const Monomial& a, const Monomial& b) { return order_less(order, a, b); });

    // Finiteness: each component is either killed outright by c_i in lm or
    // must see a pure power of every variable among its generators.
    for (std::uint32_t i = 0; i < ncomps; ++i) {
        std::vector<const Monomial*> gens_i;
        bool unit_killed = false;
        for (const auto& g : lm)
            if (g.comp == i) {
                if (g.is_unit()) unit_killed = true;
                gens_i.push_back(&g);
            }
        if (unit_killed) continue;
        std::vector<std::uint32_t> box(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::uint32_t pure = 0;
            for (const auto* g : gens_i) {
                bool is_pure = g->exps[k] > 0;
                for (std::size_t l = 0; l < n && is_pure; ++l)
                    if (l != k && g->exps[l] > 0) is_pure = false;
                if (is_pure) pure = pure == 0 ? g->exps[k] : std::min(pure, g->exps[k]);
            }
            if (pure == 0)
                throw validation_error(
                    "infinite staircase: component " + std::to_string(i + 1) +
                    " has no pure power of X" + std::to_string(k + 1) + " among the leads");
            box[k] = pure;
        }
        // staircase monomials of this component live inside the pure-power box
        std::vector<std::uint32_t> e(n, 0);
        bool done = false;
        while (!done) {
            Monomial m(e, i);
            bool inside = false;
            for (const auto* g : gens_i)
                if (divides(*g, m)) { inside = true; break; }
            if (!inside) st.monbas.push_back(std::move(m));
            std::size_t k = n;
            while (true) {
                if (k == 0) { done = true; break; }
                --k;
                if (++e[k] < box[k]) break;
                e[k] = 0;
            }
        }
    }
    auto lt = [&](const Monomial& a, const Monomial& b) { return order_less(order, a, b); };
    std::sort(st.monbas.begin(), st.monbas.end(), lt);

    std::set<Monomial, MonomialKeyLess> monbas_set(st.monbas.begin(), st.monbas.end());
    std::set<Monomial, MonomialKeyLess> expset;
    for (const auto& b : st.monbas)
        for (std::size_t k = 0; k < n; ++k)
            expset.insert(mul_by_power(b, k, 1));
    for (std::uint32_t i = 0; i < ncomps; ++i) {
        Monomial unit = Monomial::unit(n, i);
        if (!monbas_set.count(unit)) expset.insert(std::move(unit));
    }
    for (const auto& m : expset) {
        st.expset.push_back(m);
        if (!monbas_set.count(m)) st.border.push_back(m);
    }
    std::sort(st.expset.begin(), st.expset.end(), lt);
    std::sort(st.border.begin(), st.border.end(), lt);

    for (const auto& b : st.border)
        if (!in_monomial_module(b, lm))
            throw invariant_error("border monomial escapes the leading module: " + to_string(b));
    return st;
}

struct AssumptionViolation {
    Monomial generator;
    std::size_t i, j; // 1-based variable pair: (X_i / X_j) * generator left the module

    std::string describe() const {
        return "structural assumption fails at generator " + to_string(generator) +
               " for variable pair (i,j) = (" + std::to_string(i) + "," + std::to_string(j) +
               "): (X" + std::to_string(i) + "/X" + std::to_string(j) +
               ") * " + to_string(generator) + " is outside the leading module";
    }
};

// For every generator mu, every j with X_j | mu and every i < j, the monomial
// (X_i/X_j) mu must stay in <lm>. Checking the minimal generators suffices.
inline std::optional<AssumptionViolation> find_assumption_violation(
    const std::vector<Monomial>& lm) {
    for (const auto& mu : lm) {
        for (std::size_t j = 0; j < mu.nvars(); ++j) {
            if (mu.exps[j] == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                Monomial shifted = mu;
                shifted.exps[j] -= 1;
                shifted = mul_by_power(shifted, i, 1);
                if (!in_monomial_module(shifted, lm))
                    return AssumptionViolation{mu, i + 1, j + 1};
            }
        }
    }
    return std::nullopt;
}

inline bool check_structural_assumption(const std::vector<Monomial>& lm) {
    return !find_assumption_violation(lm).has_value();
}

} // namespace syzkit

#endif

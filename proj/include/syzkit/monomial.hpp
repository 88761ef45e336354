#ifndef SYZKIT_MONOMIAL_HPP
#define SYZKIT_MONOMIAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "syzkit/errors.hpp"

namespace syzkit {

// Monomial X^e * c_j of the free module: exponent vector plus a 0-based
// component index (printed and serialized 1-based).
struct Monomial {
    std::vector<std::uint32_t> exps;
    std::uint32_t comp = 0;

    Monomial() = default;
    Monomial(std::vector<std::uint32_t> e, std::uint32_t c) : exps(std::move(e)), comp(c) {}

    static Monomial unit(std::size_t nvars, std::uint32_t comp) {
        return Monomial(std::vector<std::uint32_t>(nvars, 0), comp);
    }

    std::size_t nvars() const { return exps.size(); }

    std::uint64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool is_unit() const {
        for (auto e : exps) if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return comp == o.comp && exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Order-independent key comparison, used for container keys and structural
// polynomial equality only. Monomial-order semantics live in order.hpp.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.exps < b.exps;
    }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw validation_error("monomial dimension mismatch");
    if (a.comp != b.comp) return false;
    for (std::size_t k = 0; k < a.nvars(); ++k)
        if (a.exps[k] > b.exps[k]) return false;
    return true;
}

inline Monomial mul_by_power(const Monomial& a, std::size_t var, std::uint32_t e) {
    if (var >= a.nvars()) throw validation_error("variable index out of range");
    Monomial r = a;
    const std::uint64_t s = static_cast<std::uint64_t>(r.exps[var]) + e;
    if (s > std::numeric_limits<std::uint32_t>::max())
        throw validation_error("monomial exponent overflow");
    r.exps[var] = static_cast<std::uint32_t>(s);
    return r;
}

// a / b, assuming divides(b, a)
inline Monomial mon_quotient(const Monomial& a, const Monomial& b) {
    Monomial q = a;
    for (std::size_t k = 0; k < a.nvars(); ++k) {
        if (b.exps[k] > a.exps[k]) throw invariant_error("monomial quotient is not exact");
        q.exps[k] = a.exps[k] - b.exps[k];
    }
    return q;
}

inline std::string to_string(const Monomial& m) {
    std::string s;
    bool any = false;
    for (std::size_t k = 0; k < m.nvars(); ++k) {
        if (m.exps[k] == 0) continue;
        if (any) s += "*";
        s += "X" + std::to_string(k + 1);
        if (m.exps[k] > 1) s += "^" + std::to_string(m.exps[k]);
        any = true;
    }
    if (!any) s = "1";
    s += "*e" + std::to_string(m.comp + 1);
    return s;
}

} // namespace syzkit

#endif

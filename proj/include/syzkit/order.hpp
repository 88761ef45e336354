#ifndef SYZKIT_ORDER_HPP
#define SYZKIT_ORDER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/monomial.hpp"

namespace syzkit {

enum class BaseOrder { lex, deglex, degrevlex };
enum class ModuleWrapper { top, pot };

// Monomial order on the free module: a base order on the ring monomials,
// an explicit variable precedence (most significant first), and a TOP/POT
// extension to components. Text form: "top:degrevlex:vars=3,1,2".
struct MonomialOrderSpec {
    BaseOrder base = BaseOrder::degrevlex;
    ModuleWrapper wrapper = ModuleWrapper::top;
    std::vector<std::uint32_t> precedence; // 0-based variable ids, most significant first

    std::size_t nvars() const { return precedence.size(); }

    static std::vector<std::uint32_t> default_precedence(std::size_t n) {
        std::vector<std::uint32_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    static MonomialOrderSpec make(ModuleWrapper w, BaseOrder b, std::size_t n) {
        return MonomialOrderSpec{b, w, default_precedence(n)};
    }

    bool operator==(const MonomialOrderSpec& o) const {
        return base == o.base && wrapper == o.wrapper && precedence == o.precedence;
    }
    bool operator!=(const MonomialOrderSpec& o) const { return !(*this == o); }
};

inline const char* to_string(BaseOrder b) {
    switch (b) {
        case BaseOrder::lex: return "lex";
        case BaseOrder::deglex: return "deglex";
        default: return "degrevlex";
    }
}

inline const char* to_string(ModuleWrapper w) {
    return w == ModuleWrapper::top ? "top" : "pot";
}

// Canonical form always spells the precedence out, 1-based.
inline std::string to_string(const MonomialOrderSpec& s) {
    std::string out = std::string(to_string(s.wrapper)) + ":" + to_string(s.base) + ":vars=";
    for (std::size_t i = 0; i < s.precedence.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.precedence[i] + 1);
    }
    return out;
}

inline MonomialOrderSpec parse_order(const std::string& text, std::size_t nvars) {
    MonomialOrderSpec spec;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(':', start);
        parts.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw parse_error("bad order spec '" + text + "' (want wrapper:base[:vars=...])");
    if (parts[0] == "top") spec.wrapper = ModuleWrapper::top;
    else if (parts[0] == "pot") spec.wrapper = ModuleWrapper::pot;
    else throw parse_error("bad module wrapper '" + parts[0] + "' (want top or pot)");
    if (parts[1] == "lex") spec.base = BaseOrder::lex;
    else if (parts[1] == "deglex") spec.base = BaseOrder::deglex;
    else if (parts[1] == "degrevlex") spec.base = BaseOrder::degrevlex;
    else throw parse_error("bad base order '" + parts[1] + "' (want lex, deglex or degrevlex)");
    if (parts.size() == 3) {
        const std::string& v = parts[2];
        if (v.rfind("vars=", 0) != 0) throw parse_error("bad order suffix '" + v + "' (want vars=...)");
        std::vector<std::uint32_t> prec;
        std::size_t i = 5;
        while (i < v.size()) {
            std::size_t j = v.find(',', i);
            if (j == std::string::npos) j = v.size();
            const std::string tok = v.substr(i, j - i);
            std::size_t used = 0;
            unsigned long val = 0;
            try { val = std::stoul(tok, &used); } catch (...) { used = 0; }
            if (used != tok.size() || val == 0 || val > nvars)
                throw parse_error("bad variable id '" + tok + "' in order spec");
            prec.push_back(static_cast<std::uint32_t>(val - 1));
            i = j + 1;
        }
        std::vector<bool> seen(nvars, false);
        for (auto k : prec) seen[k] = true;
        if (prec.size() != nvars || std::find(seen.begin(), seen.end(), false) != seen.end())
            throw parse_error("order precedence must be a permutation of 1.." + std::to_string(nvars));
        spec.precedence = std::move(prec);
    } else {
        spec.precedence = MonomialOrderSpec::default_precedence(nvars);
    }
    return spec;
}

// -1 / 0 / +1 on ring monomial exponent vectors.
inline int ring_compare(const MonomialOrderSpec& spec,
                        const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != spec.nvars() || b.size() != spec.nvars())
        throw validation_error("monomial dimension mismatch with order spec");
    if (spec.base != BaseOrder::lex) {
        std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da < db ? -1 : 1;
    }
    if (spec.base == BaseOrder::degrevlex) {
        // scan from the least significant variable; the larger exponent loses
        for (std::size_t i = spec.nvars(); i-- > 0;) {
            const std::uint32_t k = spec.precedence[i];
            if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
        }
        return 0;
    }
    for (std::uint32_t k : spec.precedence)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

inline int compare(const MonomialOrderSpec& spec, const Monomial& a, const Monomial& b) {
    if (spec.wrapper == ModuleWrapper::pot) {
        if (a.comp != b.comp) return a.comp < b.comp ? -1 : 1;
        return ring_compare(spec, a.exps, b.exps);
    }
    const int c = ring_compare(spec, a.exps, b.exps);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? -1 : 1;
    return 0;
}

inline bool order_less(const MonomialOrderSpec& spec, const Monomial& a, const Monomial& b) {
    return compare(spec, a, b) < 0;
}

} // namespace syzkit

#endif

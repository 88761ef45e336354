#ifndef SYZKIT_JSON_IO_HPP
#define SYZKIT_JSON_IO_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzkit/errors.hpp"
#include "syzkit/instance.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/mulmat.hpp"
#include "syzkit/order.hpp"

namespace syzkit {

// Key order is fixed and integers are canonical residues, so equal inputs
// serialize to byte-identical files.
using Json = nlohmann::ordered_json;

namespace detail {

inline std::uint32_t get_u32(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() ||
        (j[key].is_number_integer() && !j[key].is_number_unsigned() &&
         j[key].get<std::int64_t>() < 0))
        throw parse_error(std::string("missing or invalid field '") + key + "'");
    return j[key].get<std::uint32_t>();
}

inline std::vector<FieldElem> residues_from(const Json& arr, const char* what, std::size_t count,
                                            const PrimeField& fld) {
    if (!arr.is_array() || arr.size() != count)
        throw parse_error(std::string(what) + " must be an array of " + std::to_string(count) +
                          " integers");
    std::vector<FieldElem> out;
    out.reserve(count);
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw parse_error(std::string(what) + " holds a non-integer entry");
        out.push_back(fld.from_int64(v.get<std::int64_t>()));
    }
    return out;
}

inline Json matrix_to_json(const DenseMatrix& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) arr.push_back(m.at(i, j));
    return arr;
}

} // namespace detail

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["p"] = inst.field.modulus();
    j["n"] = inst.nvars;
    j["m"] = inst.ncomps;
    j["D"] = inst.dim;
    Json mats = Json::array();
    for (const auto& M : inst.mats) mats.push_back(detail::matrix_to_json(M));
    j["mats"] = std::move(mats);
    j["F"] = detail::matrix_to_json(inst.F);
    return j;
}

inline Instance instance_from_json(const Json& j) {
    const std::uint32_t p = detail::get_u32(j, "p");
    const std::uint32_t n = detail::get_u32(j, "n");
    const std::uint32_t m = detail::get_u32(j, "m");
    const std::uint32_t D = detail::get_u32(j, "D");
    PrimeField fld(p);
    if (!j.contains("mats") || !j["mats"].is_array() || j["mats"].size() != n)
        throw parse_error("field 'mats' must be an array of n matrices");
    std::vector<DenseMatrix> mats;
    for (std::uint32_t k = 0; k < n; ++k) {
        const auto data =
            detail::residues_from(j["mats"][k], "each entry of 'mats'", std::size_t{D} * D, fld);
        DenseMatrix M(fld, D, D);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t c = 0; c < D; ++c) M.at(i, c) = data[i * D + c];
        mats.push_back(std::move(M));
    }
    if (!j.contains("F")) throw parse_error("missing field 'F'");
    const auto fdata = detail::residues_from(j["F"], "field 'F'", std::size_t{m} * D, fld);
    DenseMatrix F(fld, m, D);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < D; ++c) F.at(i, c) = fdata[i * D + c];
    return Instance(fld, n, m, D, std::move(mats), F);
}

// Terms are emitted descending under the basis order (leading term first);
// components are 1-based on the wire.
inline Json poly_to_json(const ModulePoly& p, const MonomialOrderSpec& order) {
    std::vector<const Monomial*> mons;
    for (const auto& [m, c] : p.terms()) mons.push_back(&m);
    std::sort(mons.begin(), mons.end(), [&](const Monomial* a, const Monomial* b) {
        return order_less(order, *b, *a);
    });
    Json terms = Json::array();
    for (const auto* m : mons) {
        Json t;
        t["coeff"] = p.coeff(*m);
        t["exps"] = m->exps;
        t["comp"] = m->comp + 1;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Json gb_to_json(const GroebnerBasis& gb) {
    Json j;
    j["p"] = gb.field.modulus();
    j["n"] = gb.nvars;
    j["m"] = gb.ncomps;
    j["order"] = to_string(gb.order);
    Json elems = Json::array();
    for (const auto& g : gb.elements) elems.push_back(poly_to_json(g, gb.order));
    j["elements"] = std::move(elems);
    return j;
}

inline GroebnerBasis gb_from_json(const Json& j) {
    const std::uint32_t p = detail::get_u32(j, "p");
    const std::uint32_t n = detail::get_u32(j, "n");
    const std::uint32_t m = detail::get_u32(j, "m");
    PrimeField fld(p);
    if (!j.contains("order") || !j["order"].is_string())
        throw parse_error("missing or invalid field 'order'");
    const MonomialOrderSpec order = parse_order(j["order"].get<std::string>(), n);
    if (!j.contains("elements") || !j["elements"].is_array())
        throw parse_error("missing or invalid field 'elements'");
    GroebnerBasis gb{fld, order, n, m, {}, true};
    for (const auto& elem : j["elements"]) {
        if (!elem.is_array()) throw parse_error("each basis element must be an array of terms");
        ModulePoly poly(n, m);
        for (const auto& t : elem) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t.contains("comp"))
                throw parse_error("each term needs coeff, exps and comp");
            if (!t["exps"].is_array() || t["exps"].size() != n)
                throw parse_error("term exponent vector must have n entries");
            std::vector<std::uint32_t> exps;
            for (const auto& e : t["exps"]) {
                if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
                    throw parse_error("exponents must be nonnegative");
                exps.push_back(e.get<std::uint32_t>());
            }
            const std::uint32_t comp = t["comp"].get<std::uint32_t>();
            if (comp == 0 || comp > m) throw parse_error("term component out of range");
            if (!t["coeff"].is_number_integer()) throw parse_error("coefficients must be integers");
            const FieldElem c = fld.from_int64(t["coeff"].get<std::int64_t>());
            poly.add_term(Monomial(std::move(exps), comp - 1), c, fld);
        }
        gb.elements.push_back(std::move(poly));
    }
    return gb;
}

inline Json mulmat_to_json(const MulMatResult& mm, const GroebnerBasis& gb) {
    Json j;
    j["p"] = gb.field.modulus();
    j["n"] = gb.nvars;
    j["m"] = gb.ncomps;
    j["D"] = mm.monbas.size();
    j["order"] = to_string(gb.order);
    Json basis = Json::array();
    for (const auto& b : mm.monbas) {
        Json t;
        t["exps"] = b.exps;
        t["comp"] = b.comp + 1;
        basis.push_back(std::move(t));
    }
    j["monbas"] = std::move(basis);
    Json mats = Json::array();
    for (const auto& M : mm.mats) mats.push_back(detail::matrix_to_json(M));
    j["mats"] = std::move(mats);
    return j;
}

inline std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << dump_canonical(j);
    if (!out) throw parse_error("failed writing file: " + path);
}

} // namespace syzkit

#endif

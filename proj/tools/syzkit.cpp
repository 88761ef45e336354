// syzkit: reduced Groebner bases of syzygy modules over GF(p), multiplication
// matrices of finite-dimensional quotients, and FGLM-style change of order.
//
// Exit codes: 0 success, 1 verification found a failing check, 2 parse error,
// 3 input validation error, 4 internal invariant breach, 5 structural
// assumption violated.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syzkit/syzkit.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitAssumption = 5;

void emit(const syzkit::Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << syzkit::dump_canonical(j);
    else
        syzkit::write_json_file(out_path, j);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::int64_t parse_int(const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (...) {
        used = 0;
    }
    if (used != tok.size() || tok.empty())
        throw syzkit::parse_error("not an integer: '" + tok + "'");
    return v;
}

std::vector<std::vector<syzkit::FieldElem>> parse_coeff_lists(const std::string& text,
                                                              const syzkit::PrimeField& fld) {
    std::vector<std::vector<syzkit::FieldElem>> out;
    for (const auto& chunk : split(text, ';')) {
        std::vector<syzkit::FieldElem> coeffs;
        if (!chunk.empty())
            for (const auto& tok : split(chunk, ','))
                coeffs.push_back(fld.from_int64(parse_int(tok)));
        out.push_back(std::move(coeffs));
    }
    return out;
}

// "(0,0);(1,0);(0,1)"
std::vector<std::vector<syzkit::FieldElem>> parse_points(const std::string& text,
                                                         const syzkit::PrimeField& fld) {
    std::vector<std::vector<syzkit::FieldElem>> pts;
    for (auto chunk : split(text, ';')) {
        if (chunk.empty()) continue;
        if (chunk.front() != '(' || chunk.back() != ')')
            throw syzkit::parse_error("bad point syntax: '" + chunk + "'");
        chunk = chunk.substr(1, chunk.size() - 2);
        std::vector<syzkit::FieldElem> pt;
        for (const auto& tok : split(chunk, ','))
            pt.push_back(fld.from_int64(parse_int(tok)));
        pts.push_back(std::move(pt));
    }
    return pts;
}

struct VerifyReport {
    bool all_pass = true;

    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_pass = all_pass && ok;
    }
};

int run_verify(const std::string& in_path, const std::string& order_text, std::size_t limit_rows) {
    using namespace syzkit;
    const Instance inst = instance_from_json(load_json_file(in_path));
    const MonomialOrderSpec order = parse_order(order_text, inst.nvars);
    const std::size_t limit = limit_rows ? limit_rows : oracle::row_limit();
    inst.require_commuting();

    VerifyReport report;
    const GroebnerBasis gb = syzygy_basis(order, inst);

    bool sound = true;
    for (const auto& g : gb.elements) {
        const auto v = apply_poly(inst, g);
        for (auto x : v) sound = sound && x == 0;
    }
    report.check("basis-elements-are-syzygies", sound);
    report.check("basis-is-reduced", check_reduced(gb));

    if (inst.dim > 0) {
        const auto engine_monbas = monomial_basis(order, inst).monbas;
        const auto oracle_monbas = oracle::oracle_monomial_basis(order, inst, limit);
        report.check("monomial-basis-matches-oracle", engine_monbas == oracle_monbas);

        const auto beta = oracle::algorithm_bounds(inst.dim, inst.nvars);
        const auto mk = oracle::materialize_multi_krylov(order, inst, beta, limit);
        bool annihilates = true;
        for (const auto& g : gb.elements) {
            const auto vexp = expand(mk.index, g);
            std::vector<FieldElem> prod = vec_mat_mul(vexp, mk.mat);
            for (auto x : prod) annihilates = annihilates && x == 0;
        }
        report.check("basis-expansions-annihilate-krylov-matrix", annihilates);

        std::vector<std::uint32_t> small_beta(inst.nvars, inst.dim + 1);
        const auto syzygies = oracle::oracle_bounded_syzygy_polys(order, inst, small_beta, limit);
        bool reduce_to_zero = true;
        for (const auto& s : syzygies)
            reduce_to_zero = reduce_to_zero && divide(order, s, gb).is_zero();
        report.check("bounded-syzygies-reduce-to-zero", reduce_to_zero);
    }
    std::cout << (report.all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return report.all_pass ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact syzygy Groebner basis engine over prime fields"};
    app.require_subcommand(1);

    std::string in_path, out_path, gb_path, order_text, from_text, to_text;
    bool force_validate = false;
    std::size_t limit_rows = 0;

    auto* cmd_syzygy = app.add_subcommand("syzygy", "reduced Groebner basis of the syzygy module");
    cmd_syzygy->add_option("--order", order_text, "monomial order, e.g. top:degrevlex")->required();
    cmd_syzygy->add_option("--in", in_path, "instance JSON file")->required();
    cmd_syzygy->add_option("--out", out_path, "output file (default stdout)");
    cmd_syzygy->add_flag("--validate", force_validate,
                         "force the commutation check (default: on for D <= 64)");

    auto* cmd_mulmats =
        app.add_subcommand("mulmats", "multiplication matrices of the quotient by a reduced basis");
    cmd_mulmats->add_option("--in", in_path, "Groebner basis JSON file")->required();
    cmd_mulmats->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_change = app.add_subcommand("change-order", "recompute a reduced basis for a new order");
    cmd_change->add_option("--gb", gb_path, "Groebner basis JSON file")->required();
    cmd_change->add_option("--from", from_text, "order of the input basis (default: from the file)");
    cmd_change->add_option("--to", to_text, "target order")->required();
    cmd_change->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_gen = app.add_subcommand("gen", "generate instance files");
    cmd_gen->require_subcommand(1);
    std::uint32_t gp = 0, gD = 0, gn = 1, gm = 1, gd = 1;
    std::uint64_t gseed = 0;
    std::string gpolys, gpoints, gmats;

    auto* gen_hp = cmd_gen->add_subcommand("hermite-pade", "truncated power series instance");
    gen_hp->add_option("--p", gp, "field modulus")->required();
    gen_hp->add_option("--D", gD, "truncation order")->required();
    gen_hp->add_option("--polys", gpolys, "series coefficients, e.g. '1,2,3;0,1'")->required();
    gen_hp->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_pts = cmd_gen->add_subcommand("points", "vanishing ideal of a point set");
    gen_pts->add_option("--p", gp, "field modulus")->required();
    gen_pts->add_option("--points", gpoints, "points, e.g. '(0,0);(1,0);(0,1)'")->required();
    gen_pts->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_ann = cmd_gen->add_subcommand("matrix-annihilator", "annihilator of commuting matrices");
    gen_ann->add_option("--p", gp, "field modulus")->required();
    gen_ann->add_option("--d", gd, "matrix size")->required();
    gen_ann->add_option("--mats", gmats, "row-major d*d matrices, e.g. '0,1,0,0;1,0,0,1'")->required();
    gen_ann->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_pade = cmd_gen->add_subcommand("multivar-pade", "truncated multivariate quotient");
    gen_pade->add_option("--p", gp, "field modulus")->required();
    gen_pade->add_option("--n", gn, "number of variables")->required();
    gen_pade->add_option("--d", gd, "per-variable truncation")->required();
    gen_pade->add_option("--polys", gpolys, "d^n coefficients per polynomial f_2..f_m")->required();
    gen_pade->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_rand = cmd_gen->add_subcommand("random", "seeded random commuting instance");
    gen_rand->add_option("--p", gp, "field modulus")->required();
    gen_rand->add_option("--n", gn, "number of variables")->required();
    gen_rand->add_option("--m", gm, "number of module components");
    gen_rand->add_option("--D", gD, "vector space dimension")->required();
    gen_rand->add_option("--seed", gseed, "RNG seed");
    gen_rand->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "run oracle agreement checks on an instance");
    cmd_verify->add_option("--in", in_path, "instance JSON file")->required();
    cmd_verify->add_option("--order", order_text, "monomial order")->required();
    cmd_verify->add_option("--limit-rows", limit_rows,
                           "oracle row limit (default SYZKIT_ORACLE_LIMIT or 10^6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems share the parse-error class
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        using namespace syzkit;
        if (cmd_syzygy->parsed()) {
            const Instance inst = instance_from_json(load_json_file(in_path));
            const MonomialOrderSpec order = parse_order(order_text, inst.nvars);
            SyzygyOptions opts;
            if (force_validate) opts.validate_commuting = true;
            const GroebnerBasis gb = syzygy_basis(order, inst, opts);
            emit(gb_to_json(gb), out_path);
        } else if (cmd_mulmats->parsed()) {
            const GroebnerBasis gb = gb_from_json(load_json_file(in_path));
            const MulMatResult mm = multiplication_matrices(gb);
            emit(mulmat_to_json(mm, gb), out_path);
        } else if (cmd_change->parsed()) {
            GroebnerBasis gb = gb_from_json(load_json_file(gb_path));
            if (!from_text.empty()) gb.order = parse_order(from_text, gb.nvars);
            const MonomialOrderSpec ord2 = parse_order(to_text, gb.nvars);
            const GroebnerBasis gb2 = change_order(gb, ord2);
            emit(gb_to_json(gb2), out_path);
        } else if (cmd_gen->parsed()) {
            std::optional<Instance> inst;
            if (gen_hp->parsed()) {
                inst = gen_hermite_pade(gp, gD, parse_coeff_lists(gpolys, PrimeField(gp)));
            } else if (gen_pts->parsed()) {
                inst = gen_points_ideal(gp, parse_points(gpoints, PrimeField(gp)));
            } else if (gen_ann->parsed()) {
                PrimeField fld(gp);
                std::vector<DenseMatrix> nk;
                for (const auto& entries : parse_coeff_lists(gmats, fld)) {
                    if (entries.size() != std::size_t{gd} * gd)
                        throw parse_error("each matrix needs d*d entries");
                    DenseMatrix N(fld, gd, gd);
                    for (std::uint32_t i = 0; i < gd; ++i)
                        for (std::uint32_t j = 0; j < gd; ++j) N.at(i, j) = entries[i * gd + j];
                    nk.push_back(std::move(N));
                }
                inst = gen_matrix_annihilator(gp, nk);
            } else if (gen_pade->parsed()) {
                inst = gen_multivar_pade(gp, gn, gd, parse_coeff_lists(gpolys, PrimeField(gp)));
            } else {
                inst = gen_random_commuting(gp, gn, gm, gD, gseed);
            }
            emit(instance_to_json(*inst), out_path);
        } else if (cmd_verify->parsed()) {
            return run_verify(in_path, order_text, limit_rows);
        }
        return 0;
    } catch (const syzkit::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const syzkit::assumption_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssumption;
    } catch (const syzkit::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

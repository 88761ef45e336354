#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "syzkit/division.hpp"
#include "syzkit/instance_gen.hpp"
#include "syzkit/json_io.hpp"
#include "syzkit/syzygy.hpp"

using namespace syzkit;

namespace {

Monomial mon(std::vector<std::uint32_t> e, std::uint32_t comp1based = 1) {
    return Monomial(std::move(e), comp1based - 1);
}

// truncated product check: sum_i g_i * f_i = 0 mod x^D, by direct univariate
// polynomial arithmetic on coefficient vectors
bool hermite_pade_relation_holds(const PrimeField& f, std::uint32_t D,
                                 const std::vector<std::vector<FieldElem>>& polys,
                                 const ModulePoly& g) {
    std::vector<FieldElem> acc(D, 0);
    for (const auto& [m, c] : g.terms()) {
        const auto& fi = polys[m.comp];
        const std::uint32_t shift = m.exps[0];
        for (std::size_t d = 0; d < fi.size() && shift + d < D; ++d)
            acc[shift + d] = f.add(acc[shift + d], f.mul(c, fi[d]));
    }
    for (auto x : acc)
        if (x != 0) return false;
    return true;
}

FieldElem eval_at_point(const PrimeField& f, const ModulePoly& g,
                        const std::vector<FieldElem>& pt) {
    FieldElem acc = 0;
    for (const auto& [m, c] : g.terms()) {
        FieldElem v = c;
        for (std::size_t k = 0; k < pt.size(); ++k) v = f.mul(v, f.pow(pt[k], m.exps[k]));
        acc = f.add(acc, v);
    }
    return acc;
}

DenseMatrix eval_matrix_poly(const PrimeField& f, const ModulePoly& g,
                             const std::vector<DenseMatrix>& nk) {
    const std::size_t d = nk[0].rows();
    DenseMatrix acc(f, d, d);
    for (const auto& [m, c] : g.terms()) {
        DenseMatrix term = DenseMatrix::identity(f, d);
        for (std::size_t k = 0; k < nk.size(); ++k)
            for (std::uint32_t e = 0; e < m.exps[k]; ++e) term = mat_mul(term, nk[k]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                acc.at(i, j) = f.add(acc.at(i, j), f.mul(c, term.at(i, j)));
    }
    return acc;
}

} // namespace

TEST_CASE("hermite-pade generator") {
    PrimeField f(97);

    SECTION("explicit construction for D = 2") {
        const Instance inst = gen_hermite_pade(97, 2, {{1}, {1, 1}});
        REQUIRE(inst.nvars == 1);
        REQUIRE(inst.ncomps == 2);
        REQUIRE(inst.F.row_vector(0) == std::vector<FieldElem>{1, 0});
        REQUIRE(inst.F.row_vector(1) == std::vector<FieldElem>{1, 1});
        REQUIRE(inst.mats[0].at(0, 1) == 1);
        REQUIRE(inst.mats[0].at(1, 0) == 0);
    }

    SECTION("zero series gives a zero row") {
        const Instance inst = gen_hermite_pade(97, 3, {{}, {5}});
        REQUIRE(inst.F.row_vector(0) == std::vector<FieldElem>{0, 0, 0});
    }

    SECTION("degree overflow is rejected") {
        REQUIRE_THROWS_AS(gen_hermite_pade(97, 2, {{1, 2, 3}}), validation_error);
    }

    SECTION("every basis element is a truncated-product relation") {
        std::mt19937_64 g(10);
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        for (int t = 0; t < 10; ++t) {
            const std::uint32_t D = 2 + g() % 6, m = 1 + g() % 3;
            std::vector<std::vector<FieldElem>> polys(m);
            for (auto& fi : polys) {
                fi.resize(D);
                for (auto& c : fi) c = static_cast<FieldElem>(g() % 97);
            }
            const Instance inst = gen_hermite_pade(97, D, polys);
            for (const auto& gpoly : syzygy_basis(order, inst).elements)
                REQUIRE(hermite_pade_relation_holds(f, D, polys, gpoly));
        }
    }
}

TEST_CASE("points generator") {
    SECTION("explicit three-point construction") {
        const Instance inst = gen_points_ideal(7, {{0, 0}, {1, 0}, {0, 1}});
        REQUIRE(inst.dim == 3);
        REQUIRE(inst.mats[0].at(1, 1) == 1);
        REQUIRE(inst.mats[1].at(2, 2) == 1);
        REQUIRE(inst.F.row_vector(0) == std::vector<FieldElem>{1, 1, 1});
    }

    SECTION("duplicate points are rejected") {
        REQUIRE_THROWS_AS(gen_points_ideal(7, {{1, 2}, {1, 2}}), validation_error);
        REQUIRE_THROWS_AS(gen_points_ideal(7, {{1}, {8}}), validation_error); // 8 = 1 mod 7
    }

    SECTION("one point gives X - a") {
        PrimeField f(7);
        const Instance inst = gen_points_ideal(7, {{3}});
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const GroebnerBasis gb = syzygy_basis(order, inst);
        ModulePoly want(1, 1);
        want.add_term(mon({1}), 1, f);
        want.add_term(mon({0}), f.neg(3), f);
        REQUIRE(gb.elements == std::vector<ModulePoly>{want});
    }

    SECTION("two points on a line give x^2 - x") {
        PrimeField f(7);
        const Instance inst = gen_points_ideal(7, {{0}, {1}});
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const GroebnerBasis gb = syzygy_basis(order, inst);
        ModulePoly want(1, 1);
        want.add_term(mon({2}), 1, f);
        want.add_term(mon({1}), f.neg(1), f);
        REQUIRE(gb.elements == std::vector<ModulePoly>{want});
    }

    SECTION("basis elements vanish on every input point") {
        std::mt19937_64 g(2025);
        PrimeField f(101);
        for (int t = 0; t < 12; ++t) {
            const std::uint32_t n = 1 + g() % 3, k = 1 + g() % 10;
            std::set<std::vector<FieldElem>> uniq;
            while (uniq.size() < k) {
                std::vector<FieldElem> pt(n);
                for (auto& x : pt) x = static_cast<FieldElem>(g() % 101);
                uniq.insert(pt);
            }
            const std::vector<std::vector<FieldElem>> pts(uniq.begin(), uniq.end());
            const Instance inst = gen_points_ideal(101, pts);
            const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, n);
            const GroebnerBasis gb = syzygy_basis(order, inst);
            REQUIRE(monomial_basis(order, inst).monbas.size() == k);
            for (const auto& gpoly : gb.elements)
                for (const auto& pt : pts) REQUIRE(eval_at_point(f, gpoly, pt) == 0);
        }
    }
}

TEST_CASE("matrix annihilator generator") {
    PrimeField f(7);

    SECTION("nilpotent block has minimal polynomial x^2") {
        DenseMatrix N(f, 2, 2);
        N.at(0, 1) = 1;
        const Instance inst = gen_matrix_annihilator(7, {N});
        REQUIRE(inst.dim == 4);
        REQUIRE(inst.ncomps == 1);
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const GroebnerBasis gb = syzygy_basis(order, inst);
        REQUIRE(gb.elements == std::vector<ModulePoly>{
                                   ModulePoly::from_term(mon({2}), 1, 1, 1)});
    }

    SECTION("identity has minimal polynomial x - 1") {
        const Instance inst = gen_matrix_annihilator(7, {DenseMatrix::identity(f, 3)});
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const GroebnerBasis gb = syzygy_basis(order, inst);
        ModulePoly want(1, 1);
        want.add_term(mon({1}), 1, f);
        want.add_term(mon({0}), f.neg(1), f);
        REQUIRE(gb.elements == std::vector<ModulePoly>{want});
    }

    SECTION("non-commuting inputs are rejected") {
        DenseMatrix a(f, 2, 2), b(f, 2, 2);
        a.at(0, 1) = 1;
        b.at(1, 0) = 1;
        REQUIRE_THROWS_AS(gen_matrix_annihilator(7, {a, b}), validation_error);
    }

    SECTION("basis elements annihilate the input matrices") {
        std::mt19937_64 g(314);
        PrimeField f97(97);
        for (int t = 0; t < 8; ++t) {
            const std::size_t d = 2 + g() % 2;
            DenseMatrix n1(f97, d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) n1.at(i, j) = static_cast<FieldElem>(g() % 97);
            // n2 = polynomial in n1, hence commuting
            DenseMatrix n2 = mat_mul(n1, n1);
            for (std::size_t i = 0; i < d; ++i) n2.at(i, i) = f97.add(n2.at(i, i), 3);
            const Instance inst = gen_matrix_annihilator(97, {n1, n2});
            const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, 2);
            const GroebnerBasis gb = syzygy_basis(order, inst);
            REQUIRE_FALSE(gb.elements.empty());
            for (const auto& gpoly : gb.elements)
                REQUIRE(eval_matrix_poly(f97, gpoly, {n1, n2}).is_zero());
        }
    }
}

TEST_CASE("multivariate pade generator") {
    PrimeField f(7);

    SECTION("block shift structure for n = 2, d = 2") {
        const Instance inst = gen_multivar_pade(7, 2, 2, {std::vector<FieldElem>{1, 2, 3, 4}});
        REQUIRE(inst.dim == 4);
        // M_1 block-diagonal with upper shift blocks
        DenseMatrix m1(f, 4, 4);
        m1.at(0, 1) = 1;
        m1.at(2, 3) = 1;
        REQUIRE(inst.mats[0] == m1);
        // M_2 block superdiagonal of identities
        DenseMatrix m2(f, 4, 4);
        m2.at(0, 2) = 1;
        m2.at(1, 3) = 1;
        REQUIRE(inst.mats[1] == m2);
        REQUIRE(inst.F.at(0, 0) == 6); // -1
        REQUIRE(inst.F.row_vector(1) == std::vector<FieldElem>{1, 2, 3, 4});
    }

    SECTION("coefficient count is enforced") {
        REQUIRE_THROWS_AS(gen_multivar_pade(7, 2, 2, {std::vector<FieldElem>{1, 2, 3}}),
                          validation_error);
    }

    SECTION("generating family reduces to zero against the computed basis") {
        std::mt19937_64 g(777);
        PrimeField f97(97);
        for (int t = 0; t < 6; ++t) {
            const std::uint32_t n = 2, d = 2 + g() % 2;
            const std::uint32_t m = 2 + g() % 2;
            std::size_t total = 1;
            for (std::uint32_t k = 0; k < n; ++k) total *= d;
            std::vector<std::vector<FieldElem>> fs(m - 1, std::vector<FieldElem>(total));
            for (auto& fi : fs)
                for (auto& c : fi) c = static_cast<FieldElem>(g() % 97);
            const Instance inst = gen_multivar_pade(97, n, d, fs);
            const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, n);
            const GroebnerBasis gb = syzygy_basis(order, inst);

            // membership of the classical generating family
            for (std::uint32_t i = 2; i <= m; ++i) {
                ModulePoly gen(n, m);
                gen.add_term(mon(std::vector<std::uint32_t>(n, 0), i), 1, f97);
                // f_i written on the monomial basis with X_1 fastest
                for (std::size_t pos = 0; pos < total; ++pos) {
                    std::vector<std::uint32_t> e(n);
                    std::size_t rest = pos;
                    for (std::uint32_t k = 0; k < n; ++k) {
                        e[k] = static_cast<std::uint32_t>(rest % d);
                        rest /= d;
                    }
                    gen.add_term(mon(e, 1), fs[i - 2][pos], f97);
                }
                REQUIRE(divide(order, gen, gb).is_zero());
                for (std::uint32_t k = 0; k < n; ++k) {
                    std::vector<std::uint32_t> e(n, 0);
                    e[k] = d;
                    const ModulePoly pure = ModulePoly::from_term(mon(e, i), 1, n, m);
                    REQUIRE(divide(order, pure, gb).is_zero());
                }
            }
            for (const auto& gpoly : gb.elements) {
                const auto img = apply_poly(inst, gpoly);
                for (auto x : img) REQUIRE(x == 0);
            }
        }
    }
}

TEST_CASE("random commuting generator") {
    SECTION("commutes and is seed-stable") {
        const Instance a = gen_random_commuting(97, 3, 2, 5, 42);
        const Instance b = gen_random_commuting(97, 3, 2, 5, 42);
        REQUIRE(a.find_noncommuting_pair() == std::nullopt);
        REQUIRE(a.mats[1] == b.mats[1]);
        REQUIRE(a.F == b.F);
        const Instance c = gen_random_commuting(97, 3, 2, 5, 43);
        REQUIRE(a.F != c.F);
    }

    SECTION("instance JSON round trip") {
        const Instance a = gen_random_commuting(101, 2, 3, 4, 7);
        const Instance b = instance_from_json(instance_to_json(a));
        REQUIRE(a.F == b.F);
        REQUIRE(a.mats == b.mats);
        REQUIRE(a.dim == b.dim);
    }

    SECTION("soundness sweep over one hundred draws") {
        std::mt19937_64 g(5150);
        for (int t = 0; t < 100; ++t) {
            const std::uint32_t n = 1 + g() % 3, m = 1 + g() % 3, D = 1 + g() % 10;
            const Instance inst = gen_random_commuting(97, n, m, D, g());
            const auto order = MonomialOrderSpec::make(
                g() % 2 ? ModuleWrapper::top : ModuleWrapper::pot,
                g() % 2 ? BaseOrder::degrevlex : BaseOrder::lex, n);
            const GroebnerBasis gb = syzygy_basis(order, inst);
            for (const auto& gpoly : gb.elements) {
                const auto img = apply_poly(inst, gpoly);
                for (auto x : img) REQUIRE(x == 0);
            }
        }
    }
}

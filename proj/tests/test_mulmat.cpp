#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "syzkit/division.hpp"
#include "syzkit/instance_gen.hpp"
#include "syzkit/krylov.hpp"
#include "syzkit/mulmat.hpp"
#include "syzkit/syzygy.hpp"

using namespace syzkit;

namespace {

Monomial mon(std::vector<std::uint32_t> e, std::uint32_t comp1based = 1) {
    return Monomial(std::move(e), comp1based - 1);
}

ModulePoly poly(const PrimeField& f, std::uint32_t nvars, std::uint32_t ncomps,
                std::initializer_list<std::pair<Monomial, std::int64_t>> terms) {
    ModulePoly p(nvars, ncomps);
    for (const auto& [m, c] : terms) p.add_term(m, f.from_int64(c), f);
    return p;
}

GroebnerBasis points_gb(const PrimeField& f) {
    const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, 2);
    GroebnerBasis gb{f, order, 2, 1, {}, true};
    gb.elements.push_back(poly(f, 2, 1, {{mon({0, 2}), 1}, {mon({0, 1}), -1}}));
    gb.elements.push_back(poly(f, 2, 1, {{mon({1, 1}), 1}}));
    gb.elements.push_back(poly(f, 2, 1, {{mon({2, 0}), 1}, {mon({1, 0}), -1}}));
    return gb;
}

DenseMatrix from_rows(const PrimeField& f, const std::vector<std::vector<FieldElem>>& rows) {
    DenseMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

std::set<Monomial, MonomialKeyLess> as_set(const std::vector<Monomial>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("krylov evaluation") {
    PrimeField f(7);

    SECTION("shift matrix powers") {
        DenseMatrix shift(f, 2, 2);
        shift.at(0, 1) = 1;
        KrylovPlan plan;
        plan.vectors = {{1, 0}};
        plan.bounds = {2};
        const DenseMatrix K = krylov_eval(shift, plan);
        REQUIRE(K == from_rows(f, {{0, 1}, {0, 0}}));
    }

    SECTION("unit bounds stack the single products") {
        std::mt19937_64 g(8);
        DenseMatrix M(f, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) M.at(i, j) = static_cast<FieldElem>(g() % 7);
        KrylovPlan plan;
        plan.vectors = {{1, 2, 3}, {4, 5, 6}};
        plan.bounds = {1, 1};
        const DenseMatrix K = krylov_eval(M, plan);
        REQUIRE(K.row_vector(0) == vec_mat_mul({1, 2, 3}, M));
        REQUIRE(K.row_vector(1) == vec_mat_mul({4, 5, 6}, M));
    }

    SECTION("rejects zero bounds and bad dimensions") {
        DenseMatrix M(f, 2, 2);
        KrylovPlan plan;
        plan.vectors = {{1, 0}};
        plan.bounds = {0};
        REQUIRE_THROWS_AS(krylov_eval(M, plan), validation_error);
        plan.bounds = {1};
        plan.vectors = {{1, 0, 0}};
        REQUIRE_THROWS_AS(krylov_eval(M, plan), validation_error);
        REQUIRE_THROWS_AS(krylov_eval(DenseMatrix(f, 2, 3), plan), validation_error);
    }

    SECTION("matches the naive power loop on random inputs") {
        std::mt19937_64 g(1234);
        PrimeField f97(97);
        for (int t = 0; t < 20; ++t) {
            const std::size_t D = 1 + g() % 32;
            const std::size_t nvec = 1 + g() % 8;
            DenseMatrix M(f97, D, D);
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j) M.at(i, j) = static_cast<FieldElem>(g() % 97);
            KrylovPlan plan;
            for (std::size_t v = 0; v < nvec; ++v) {
                std::vector<FieldElem> vec(D);
                for (auto& x : vec) x = static_cast<FieldElem>(g() % 97);
                plan.vectors.push_back(std::move(vec));
                plan.bounds.push_back(1 + g() % 20);
            }
            const DenseMatrix K = krylov_eval(M, plan);
            std::size_t row = 0;
            for (std::size_t v = 0; v < nvec; ++v) {
                std::vector<FieldElem> cur = plan.vectors[v];
                for (std::uint32_t e = 1; e <= plan.bounds[v]; ++e, ++row) {
                    cur = vec_mat_mul(cur, M);
                    REQUIRE(K.row_vector(row) == cur);
                }
            }
        }
    }
}

TEST_CASE("next monomials") {
    const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, 2);

    SECTION("empty frontier when the border is already covered") {
        const std::vector<Monomial> lm = {mon({2, 0}), mon({1, 1}), mon({0, 2})};
        const StaircaseData st = staircase_from_lm(order, lm, 1);
        std::set<Monomial, MonomialKeyLess> s(st.monbas.begin(), st.monbas.end());
        for (const auto& g : st.lm) s.insert(g);
        std::set<Monomial, MonomialKeyLess> border(st.border.begin(), st.border.end());
        const NextMonomialsFamily fam = next_monomials(order, border, s, 1);
        REQUIRE(fam.generators.empty());
    }

    SECTION("single chain through XY^2") {
        const std::vector<Monomial> lm = {mon({0, 3}), mon({1, 1}), mon({2, 0})};
        const StaircaseData st = staircase_from_lm(order, lm, 1);
        std::set<Monomial, MonomialKeyLess> s(st.monbas.begin(), st.monbas.end());
        for (const auto& g : st.lm) s.insert(g);
        std::set<Monomial, MonomialKeyLess> border(st.border.begin(), st.border.end());
        const NextMonomialsFamily fam = next_monomials(order, border, s, 1);
        REQUIRE(fam.generators == std::vector<Monomial>{mon({1, 1})});
        REQUIRE(fam.bounds == std::vector<std::uint32_t>{1});
    }
}

TEST_CASE("multiplication matrices") {
    PrimeField f(7);

    SECTION("three points: explicit matrices on staircase (1, Y, X)") {
        const GroebnerBasis gb = points_gb(f);
        const MulMatResult mm = multiplication_matrices(gb);
        REQUIRE(mm.monbas == std::vector<Monomial>{mon({0, 0}), mon({0, 1}), mon({1, 0})});
        REQUIRE(mm.mats[0] == from_rows(f, {{0, 0, 1}, {0, 0, 0}, {0, 0, 1}}));
        REQUIRE(mm.mats[1] == from_rows(f, {{0, 1, 0}, {0, 1, 0}, {0, 0, 0}}));
        REQUIRE(mat_mul(mm.mats[0], mm.mats[1]) == mat_mul(mm.mats[1], mm.mats[0]));
        // rows match the division oracle
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 3; ++j) {
                const ModulePoly xb =
                    ModulePoly::from_term(mul_by_power(mm.monbas[j], k, 1), 1, 2, 1);
                const ModulePoly nf = divide(gb.order, xb, gb);
                std::vector<FieldElem> want(3, 0);
                for (std::size_t l = 0; l < 3; ++l) want[l] = nf.coeff(mm.monbas[l]);
                REQUIRE(mm.mats[k].row_vector(j) == want);
            }
    }

    SECTION("univariate companion of x^2") {
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        GroebnerBasis gb{f, order, 1, 1, {}, true};
        gb.elements.push_back(poly(f, 1, 1, {{mon({2}), 1}}));
        const MulMatResult mm = multiplication_matrices(gb);
        REQUIRE(mm.monbas == std::vector<Monomial>{mon({0}), mon({1})});
        REQUIRE(mm.mats[0] == from_rows(f, {{0, 1}, {0, 0}}));
    }

    SECTION("zero quotient gives empty matrices") {
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        GroebnerBasis gb{f, order, 1, 1, {}, true};
        gb.elements.push_back(poly(f, 1, 1, {{mon({0}), 1}}));
        const MulMatResult mm = multiplication_matrices(gb);
        REQUIRE(mm.monbas.empty());
        REQUIRE(mm.mats.size() == 1);
        REQUIRE(mm.mats[0].rows() == 0);
    }

    SECTION("border wider than the generators exercises the power chain") {
        // vanishing ideal of four points: leads {X^2, XY, Y^3}, so XY^2 sits
        // in the border without being a generator and its normal form comes
        // from the Krylov pass with M_Y
        const Instance inst = gen_points_ideal(7, {{0, 0}, {1, 0}, {0, 1}, {0, 2}});
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, 2);
        const GroebnerBasis gb = syzygy_basis(order, inst);
        std::vector<Monomial> lm;
        for (const auto& g : gb.elements) lm.push_back(leading_monomial(order, g));
        REQUIRE(as_set(lm) == as_set({mon({2, 0}), mon({1, 1}), mon({0, 3})}));
        REQUIRE(check_structural_assumption(lm));

        const MulMatResult mm = multiplication_matrices(gb);
        REQUIRE(mm.monbas.size() == 4);
        REQUIRE(mat_mul(mm.mats[0], mm.mats[1]) == mat_mul(mm.mats[1], mm.mats[0]));
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 4; ++j) {
                const ModulePoly xb =
                    ModulePoly::from_term(mul_by_power(mm.monbas[j], k, 1), 1, 2, 1);
                const ModulePoly nf = divide(order, xb, gb);
                std::vector<FieldElem> want(4, 0);
                for (std::size_t l = 0; l < 4; ++l) want[l] = nf.coeff(mm.monbas[l]);
                REQUIRE(mm.mats[k].row_vector(j) == want);
            }
        REQUIRE(change_order(gb, order) == gb);
    }

    SECTION("assumption violation is refused with a diagnostic") {
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 2);
        GroebnerBasis gb{f, order, 2, 1, {}, true};
        gb.elements.push_back(poly(f, 2, 1, {{mon({0, 1}), 1}})); // <Y>: infinite, H fails
        REQUIRE_THROWS_AS(multiplication_matrices(gb), assumption_error);
        REQUIRE_THROWS_WITH(multiplication_matrices(gb),
                            Catch::Matchers::ContainsSubstring("(1,2)"));
    }

    SECTION("non-reduced input is rejected") {
        const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        GroebnerBasis gb{f, order, 1, 1, {}, true};
        gb.elements.push_back(poly(f, 1, 1, {{mon({2}), 2}}));
        REQUIRE_THROWS_AS(multiplication_matrices(gb), validation_error);
    }

    SECTION("random sweeps: commutation, oracle rows, exact round trip") {
        std::mt19937_64 g(90210);
        int done = 0;
        while (done < 20) {
            const std::uint32_t n = 1 + g() % 3, m = 1 + g() % 2, D = 1 + g() % 6;
            const Instance inst = gen_random_commuting(97, n, m, D, g());
            const auto order = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, n);
            const GroebnerBasis gb = syzygy_basis(order, inst);
            std::vector<Monomial> lm;
            for (const auto& e : gb.elements) lm.push_back(leading_monomial(order, e));
            if (!check_structural_assumption(lm)) continue;
            ++done;

            const MulMatResult mm = multiplication_matrices(gb);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    REQUIRE(mat_mul(mm.mats[a], mm.mats[b]) == mat_mul(mm.mats[b], mm.mats[a]));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < mm.monbas.size(); ++j) {
                    const ModulePoly xb = ModulePoly::from_term(
                        mul_by_power(mm.monbas[j], k, 1), 1, gb.nvars, gb.ncomps);
                    const ModulePoly nf = divide(order, xb, gb);
                    std::vector<FieldElem> want(mm.monbas.size(), 0);
                    for (std::size_t l = 0; l < mm.monbas.size(); ++l)
                        want[l] = nf.coeff(mm.monbas[l]);
                    REQUIRE(mm.mats[k].row_vector(j) == want);
                }

            // round trip A: rebuild the instance from (mats, F-from-gb) and
            // recover the very same reduced basis
            const GroebnerBasis back = change_order(gb, order);
            REQUIRE(back == gb);
        }
    }
}

TEST_CASE("change of order") {
    PrimeField f(7);

    SECTION("identity round trip on the points basis") {
        const GroebnerBasis gb = points_gb(f);
        REQUIRE(change_order(gb, gb.order) == gb);
    }

    SECTION("degrevlex to lex double inclusion") {
        const GroebnerBasis gb = points_gb(f);
        const auto lex = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 2);
        const GroebnerBasis gb2 = change_order(gb, lex);
        REQUIRE(gb2.order == lex);
        REQUIRE(check_reduced(gb2));
        for (const auto& g : gb.elements) REQUIRE(divide(lex, g, gb2).is_zero());
        for (const auto& h : gb2.elements) REQUIRE(divide(gb.order, h, gb).is_zero());
        // same quotient dimension both ways
        std::vector<Monomial> lm1, lm2;
        for (const auto& g : gb.elements) lm1.push_back(leading_monomial(gb.order, g));
        for (const auto& h : gb2.elements) lm2.push_back(leading_monomial(lex, h));
        REQUIRE(staircase_from_lm(gb.order, lm1, 1).monbas.size() ==
                staircase_from_lm(lex, lm2, 1).monbas.size());
    }

    SECTION("univariate basis is order-independent") {
        const auto lex = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const auto drl = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::degrevlex, 1);
        GroebnerBasis gb{f, lex, 1, 1, {}, true};
        gb.elements.push_back(poly(f, 1, 1, {{mon({2}), 1}, {mon({0}), 1}})); // x^2 + 1
        const GroebnerBasis gb2 = change_order(gb, drl);
        REQUIRE(gb2.elements == gb.elements);
    }

    SECTION("module change of order with several components") {
        const Instance inst = gen_hermite_pade(7, 3, {{1, 2, 3}, {4, 5, 6}});
        const auto top = MonomialOrderSpec::make(ModuleWrapper::top, BaseOrder::lex, 1);
        const auto pot = MonomialOrderSpec::make(ModuleWrapper::pot, BaseOrder::lex, 1);
        const GroebnerBasis gt = syzygy_basis(top, inst);
        const GroebnerBasis gp = syzygy_basis(pot, inst);
        const GroebnerBasis converted = change_order(gt, pot);
        REQUIRE(converted == gp);
    }
}

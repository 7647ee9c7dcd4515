#include <catch2/catch_amalgamated.hpp>

#include <doihopf/doihopf.hpp>

using namespace doihopf;

namespace {

Rationals q;

DoiHopfDatum<Rationals> grouplike2() {
    return coalgebra_datum(q, grouplike_coalgebra(q, {"x", "y"}));
}

}  // namespace

TEST_CASE("trivial datum validates") {
    auto d = coalgebra_datum(q, trivial_coalgebra(q));
    CHECK(validate_datum(d).ok());
    CHECK(d.dim_h() == 1);
    CHECK(d.dim_a() == 1);
    CHECK(d.dim_c() == 1);
}

TEST_CASE("Yetter-Drinfel'd datum over QC2 validates") {
    auto h = group_algebra(q, cyclic_group(2));
    auto d = yd_datum(h);
    CHECK(validate_datum(d).ok());
    CHECK(d.dim_h() == 4);
    CHECK(d.dim_a() == 2);
    CHECK(d.dim_c() == 2);
}

TEST_CASE("Yetter-Drinfel'd datum over F3C2 and H4 validates") {
    CHECK(validate_datum(yd_datum(group_algebra(PrimeField(3), cyclic_group(2)))).ok());
    CHECK(validate_datum(yd_datum(sweedler_h4(q))).ok());
}

TEST_CASE("point G-set datum over C2 validates") {
    PrimeField f2(2);
    auto g = cyclic_group(2);
    GSetGradedAlgebra<PrimeField> ga{g, trivial_algebra(f2), {0}};
    auto d = gset_datum(f2, ga, point_gset(g));
    CHECK(validate_datum(d).ok());
    CHECK(d.dim_c() == 1);
}

TEST_CASE("datum validation catches a broken coaction") {
    auto h = group_algebra(q, cyclic_group(2));
    auto a = comodule_algebra_self(h);
    a.coaction.at(0, 1) = q.one();  // no longer an algebra map
    auto rep = validate_comodule_algebra(a);
    CHECK(!rep.ok());
    CHECK_THROWS_AS(relative_hopf_datum(h, a), ValidationError);
}

TEST_CASE("induced module over the trivial datum is one-dimensional") {
    auto d = coalgebra_datum(q, trivial_coalgebra(q));
    auto m = module_ca(d);
    CHECK(m.dim == 1);
    CHECK(m.action == Matrix<Rationals>::identity(q, 1));
    CHECK(m.coaction == Matrix<Rationals>::identity(q, 1));
}

TEST_CASE("induced module over the grouplike datum has the comultiplication coaction") {
    auto d = grouplike2();
    auto m = module_ca(d);
    CHECK(m.dim == 2);
    CHECK(m.coaction == d.c.coalgebra.comult);
    CHECK(validate_module(m).ok());
}

TEST_CASE("induced module of the YD datum verifies compatibility exhaustively") {
    auto d = yd_datum(group_algebra(q, cyclic_group(2)));
    auto m = module_ca(d);  // dimension 4
    CHECK(m.dim == 4);
    CHECK(validate_module(m).ok());
    // the compatibility validator quantifies over all (m, a) basis pairs,
    // re-check here by direct evaluation
    const auto perm = tensor_permute(q, {d.dim_c(), m.dim, d.dim_h(), d.dim_a()}, {0, 2, 1, 3});
    const auto rhs = kron(d.c.action, m.action) * perm * kron(m.coaction, d.a.coaction);
    CHECK(m.coaction * m.action == rhs);
}

TEST_CASE("stacked coactions match on C (x) C (x) A") {
    auto d = yd_datum(group_algebra(q, cyclic_group(2)));
    // the action used on C (x) C (x) A equals the induced action on C (x) (C (x) A)
    const auto inner = induced_action(d, d.a.algebra.mult);
    CHECK(cca_action(d) == induced_action(d, inner));
}

TEST_CASE("adjunction triangle identities") {
    for (auto which : {0, 1, 2}) {
        auto d = which == 0   ? coalgebra_datum(q, matrix_coalgebra(q, 2))
                 : which == 1 ? grouplike2()
                              : yd_datum(group_algebra(q, cyclic_group(2)));
        auto m = module_ca(d);
        const std::size_t c = d.dim_c();
        const auto idm = Matrix<Rationals>::identity(q, m.dim);
        const auto counit_m = kron(d.c.coalgebra.counit, idm);
        // counit o unit = id on M
        CHECK(counit_m * m.coaction == idm);
        // (I_C (x) counit_N) o (comult (x) I_N) = id on C (x) N
        const auto idn = Matrix<Rationals>::identity(q, m.dim / c);
        const auto counit_n = kron(d.c.coalgebra.counit, idn);
        CHECK(kron(Matrix<Rationals>::identity(q, c), counit_n) * induced_coaction(d, m.dim / c) ==
              idm);
    }
}

TEST_CASE("check_morphism accepts identity, zero, and the adjunction unit") {
    auto d = yd_datum(group_algebra(q, cyclic_group(2)));
    auto m = module_ca(d);
    CHECK(check_morphism(Matrix<Rationals>::identity(q, m.dim), m, m));
    CHECK(check_morphism(Matrix<Rationals>(q, m.dim, m.dim), m, m));
    // the coaction M -> C (x) M is a morphism into the induced module of FM
    auto gfm = induced_module(d, m.action, m.dim);
    CHECK(check_morphism(m.coaction, m, gfm));
    // and a random non-colinear map is rejected
    Matrix<Rationals> bad(q, m.dim, m.dim);
    bad.at(0, 1) = q.one();
    CHECK(!check_morphism(bad, m, m));
}

TEST_CASE("direct sums carry morphism inclusions and projections") {
    auto d = grouplike2();
    auto m = module_ca(d);
    auto s = direct_sum(m, m);
    CHECK(s.sum.dim == 2 * m.dim);
    CHECK(validate_module(s.sum).ok());
    CHECK(check_morphism(s.incl1, m, s.sum));
    CHECK(check_morphism(s.incl2, m, s.sum));
    CHECK(check_morphism(s.proj1, s.sum, m));
    CHECK(s.proj1 * s.incl1 == Matrix<Rationals>::identity(q, m.dim));
    Matrix<Rationals> zero(q, m.dim, m.dim);
    CHECK(s.proj2 * s.incl1 == zero);
}

TEST_CASE("the smash unit acts trivially") {
    for (auto which : {0, 1}) {
        auto d = which == 0 ? grouplike2() : yd_datum(group_algebra(q, cyclic_group(2)));
        auto m = module_ca(d);
        const auto act = smash_action(m);
        // 1_A # eps as a vector on the basis a_i # c*_j
        Matrix<Rationals> unit(q, d.dim_a() * d.dim_c(), 1);
        for (std::size_t i = 0; i < d.dim_a(); ++i)
            for (std::size_t j = 0; j < d.dim_c(); ++j)
                unit[i * d.dim_c() + j] =
                    q.mul(d.a.algebra.unit[i], d.c.coalgebra.counit.at(0, j));
        const auto idm = Matrix<Rationals>::identity(q, m.dim);
        CHECK(act * kron(idm, unit) == idm);
    }
}

TEST_CASE("smash action on C (x) A over the grouplike datum picks out components") {
    auto d = grouplike2();
    auto m = module_ca(d);  // basis x (x) 1, y (x) 1
    const auto act = smash_action(m);
    // m . (1 # e_x): keeps x (x) 1, kills y (x) 1
    Matrix<Rationals> u(q, 2, 1);  // 1_A # e_x at smash index 0*2+0
    u[0] = q.one();
    const auto x1 = Matrix<Rationals>::basis_vector(q, 2, 0);
    const auto y1 = Matrix<Rationals>::basis_vector(q, 2, 1);
    CHECK(act * kron(x1, u) == x1);
    Matrix<Rationals> zero(q, 2, 1);
    CHECK(act * kron(y1, u) == zero);
    Matrix<Rationals> v(q, 2, 1);  // 1_A # e_y
    v[1] = q.one();
    CHECK(act * kron(x1, v) == zero);
    CHECK(act * kron(y1, v) == y1);
}

TEST_CASE("the smash action is associative for the smash multiplication, exhaustively") {
    for (auto which : {0, 1}) {
        auto d = which == 0 ? grouplike2() : yd_datum(group_algebra(q, cyclic_group(2)));
        auto m = module_ca(d);
        auto sm = build_smash(d);
        const auto act = smash_action(m);
        const std::size_t n = sm.algebra.dim;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const auto eu = Matrix<Rationals>::basis_vector(q, n, u);
                const auto ev = Matrix<Rationals>::basis_vector(q, n, v);
                const auto uv = sm.algebra.mul_vec(eu, ev);
                for (std::size_t k = 0; k < m.dim; ++k) {
                    const auto mk = Matrix<Rationals>::basis_vector(q, m.dim, k);
                    const auto lhs = act * kron(act * kron(mk, eu), ev);
                    const auto rhs = act * kron(mk, uv);
                    REQUIRE(lhs == rhs);
                }
            }
    }
}

TEST_CASE("triangle action restricts the smash action along the comparison") {
    auto d = yd_datum(group_algebra(q, cyclic_group(2)));
    auto m = module_ca(d);
    auto sm = build_smash(d);
    auto ko = build_koppinen(d);
    const auto cmp = comparison_i(sm, ko);
    const auto tri = triangle_action(m);
    const auto act = smash_action(m);
    const auto idm = Matrix<Rationals>::identity(q, m.dim);
    // m <| i(u) == m . u for all smash basis u
    CHECK(tri * kron(idm, cmp) == act);
}

TEST_CASE("A-linear + C-colinear maps are exactly the smash-linear maps") {
    for (auto which : {0, 1}) {
        auto d = which == 0 ? grouplike2() : yd_datum(group_algebra(q, cyclic_group(2)));
        auto m = module_ca(d);
        auto s = direct_sum(m, m);
        const auto& n = s.sum;
        const auto act_m = smash_action(m);
        const auto act_n = smash_action(n);
        const std::size_t sm_dim = d.dim_a() * d.dim_c();

        const auto ida = Matrix<Rationals>::identity(q, d.dim_a());
        const auto idc = Matrix<Rationals>::identity(q, d.dim_c());
        const std::size_t nm = n.dim * m.dim;
        Matrix<Rationals> sys1(q, n.dim * m.dim * d.dim_a() + d.dim_c() * n.dim * m.dim, nm);
        Matrix<Rationals> sys2(q, n.dim * m.dim * sm_dim, nm);
        for (std::size_t col = 0; col < nm; ++col) {
            const auto fm = Matrix<Rationals>::from_vector(
                Matrix<Rationals>::basis_vector(q, nm, col), n.dim, m.dim);
            const auto r1 = (fm * m.action - n.action * kron(fm, ida)).vectorize();
            const auto r2 = (n.coaction * fm - kron(idc, fm) * m.coaction).vectorize();
            const auto r3 =
                (fm * act_m - act_n * kron(fm, Matrix<Rationals>::identity(q, sm_dim)))
                    .vectorize();
            for (std::size_t i = 0; i < r1.rows(); ++i) sys1.at(i, col) = r1[i];
            for (std::size_t i = 0; i < r2.rows(); ++i) sys1.at(r1.rows() + i, col) = r2[i];
            for (std::size_t i = 0; i < r3.rows(); ++i) sys2.at(i, col) = r3[i];
        }
        auto span1 = canonical_span(q, nm, nullspace(sys1));
        auto span2 = canonical_span(q, nm, nullspace(sys2));
        REQUIRE(span1.size() == span2.size());
        for (std::size_t i = 0; i < span1.size(); ++i) CHECK(span1[i] == span2[i]);
    }
}

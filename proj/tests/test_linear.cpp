#include <catch2/catch_amalgamated.hpp>

#include <doihopf/matrix.hpp>

#include <random>

using namespace doihopf;

namespace {

template <Field F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937& rng) {
    Matrix<F> m(f, r, c);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rationals q;
    auto half = q.parse("1/2");
    auto third = q.parse("1/3");
    CHECK(q.to_string(q.add(half, third)) == "5/6");
    CHECK(q.to_string(q.mul(q.from_int(2), q.parse("3/2"))) == "3");
    CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
    CHECK(q.eq(q.parse("2/4"), q.parse("1/2")));
    CHECK_THROWS_AS(q.parse("1/0"), InputError);
    CHECK_THROWS_AS(q.inv(q.zero()), InputError);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.eq(f5.mul(f5.inv(3), 3), f5.one()));
    CHECK(f5.to_string(f5.from_int(-1)) == "4");
    CHECK_THROWS_AS(PrimeField(4), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
    PrimeField f2(2);
    CHECK(f2.eq(f2.add(1, 1), f2.zero()));
}

TEST_CASE("solve_affine identity case") {
    Rationals q;
    Matrix<Rationals> a(q, 1, 1);
    a.at(0, 0) = q.one();
    Matrix<Rationals> b(q, 1, 1);
    auto sol = solve_affine(a, b);
    REQUIRE(sol.particular);
    CHECK((*sol.particular)[0] == 0);
    CHECK(sol.homogeneous_basis.empty());
}

TEST_CASE("solve_affine detects inconsistency") {
    Rationals q;
    Matrix<Rationals> a(q, 1, 1);
    Matrix<Rationals> b(q, 1, 1);
    b[0] = q.one();
    auto sol = solve_affine(a, b);
    CHECK(!sol.particular);
    CHECK(sol.homogeneous_basis.size() == 1);
}

TEST_CASE("solve_affine over F2 matches exhaustive enumeration") {
    // A = [[1, 1]], b = [1]; enumerate all four vectors over F2
    PrimeField f2(2);
    Matrix<PrimeField> a(f2, 1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    Matrix<PrimeField> b(f2, 1, 1);
    b[0] = 1;
    auto sol = solve_affine(a, b);

    std::vector<std::vector<std::uint64_t>> solutions, kernel;
    for (std::uint64_t x0 = 0; x0 < 2; ++x0)
        for (std::uint64_t x1 = 0; x1 < 2; ++x1) {
            const auto lhs = (x0 + x1) % 2;
            if (lhs == 1) solutions.push_back({x0, x1});
            if (lhs == 0 && (x0 | x1)) kernel.push_back({x0, x1});
        }
    REQUIRE(solutions.size() == 2);
    REQUIRE(kernel.size() == 1);

    REQUIRE(sol.particular);
    CHECK((*sol.particular)[0] == 1);
    CHECK((*sol.particular)[1] == 0);
    REQUIRE(sol.homogeneous_basis.size() == 1);
    CHECK(sol.homogeneous_basis[0][0] == kernel[0][0]);
    CHECK(sol.homogeneous_basis[0][1] == kernel[0][1]);
}

TEST_CASE("solve_affine postconditions on random systems") {
    Rationals q;
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const auto a = random_matrix(q, r, c, rng);
        const auto b = random_matrix(q, r, 1, rng);
        const auto sol = solve_affine(a, b);
        if (sol.particular) CHECK(a * *sol.particular == b);
        Matrix<Rationals> zero(q, r, 1);
        for (const auto& h : sol.homogeneous_basis) CHECK(a * h == zero);
        // rank-nullity
        CHECK(c == rank(a) + sol.homogeneous_basis.size());
    }
}

TEST_CASE("kron identities") {
    Rationals q;
    CHECK(kron(Matrix<Rationals>::identity(q, 2), Matrix<Rationals>::identity(q, 3)) ==
          Matrix<Rationals>::identity(q, 6));
    Matrix<Rationals> two(q, 1, 1), three(q, 1, 1);
    two.at(0, 0) = q.from_int(2);
    three.at(0, 0) = q.from_int(3);
    CHECK(kron(two, three).at(0, 0) == q.from_int(6));
}

TEST_CASE("kron is multiplicative and associative") {
    PrimeField f5(5);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_matrix(f5, 2, 2, rng);
        const auto b = random_matrix(f5, 2, 2, rng);
        const auto c = random_matrix(f5, 2, 2, rng);
        const auto d = random_matrix(f5, 2, 2, rng);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("kron rejects mixed moduli") {
    PrimeField f2(2), f3(3);
    Matrix<PrimeField> a(f2, 1, 1), b(f3, 1, 1);
    CHECK_THROWS_AS(kron(a, b), InputError);
}

TEST_CASE("flip is the tensor twist") {
    Rationals q;
    CHECK(flip(q, 1, 4) == Matrix<Rationals>::identity(q, 4));
    const auto f22 = flip(q, 2, 2);
    CHECK(f22.at(0, 0) == 1);
    CHECK(f22.at(2, 1) == 1);
    CHECK(f22.at(1, 2) == 1);
    CHECK(f22.at(3, 3) == 1);
    CHECK(flip(q, 3, 2) * flip(q, 2, 3) == Matrix<Rationals>::identity(q, 6));

    // flip really swaps tensor factors
    std::mt19937 rng(7);
    const auto v = random_matrix(q, 2, 1, rng);
    const auto w = random_matrix(q, 3, 1, rng);
    CHECK(flip(q, 2, 3) * kron(v, w) == kron(w, v));
}

TEST_CASE("tensor_permute reorders factors") {
    Rationals q;
    std::mt19937 rng(11);
    const auto u = random_matrix(q, 2, 1, rng);
    const auto v = random_matrix(q, 3, 1, rng);
    const auto w = random_matrix(q, 2, 1, rng);
    const auto p = tensor_permute(q, {2, 3, 2}, {2, 0, 1});
    CHECK(p * kron(u, kron(v, w)) == kron(w, kron(u, v)));
}

TEST_CASE("inverse and canonical_span") {
    Rationals q;
    Matrix<Rationals> a(q, 2, 2);
    a.at(0, 0) = q.from_int(2);
    a.at(0, 1) = q.one();
    a.at(1, 1) = q.one();
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(*inv * a == Matrix<Rationals>::identity(q, 2));
    Matrix<Rationals> sing(q, 2, 2);
    CHECK(!inverse(sing));

    auto v1 = Matrix<Rationals>::basis_vector(q, 3, 0);
    auto v2 = Matrix<Rationals>::basis_vector(q, 3, 1);
    auto sum = v1 + v2;
    auto span_a = canonical_span(q, 3, {v1, v2});
    auto span_b = canonical_span(q, 3, {sum, v2, v1});
    REQUIRE(span_a.size() == span_b.size());
    for (std::size_t i = 0; i < span_a.size(); ++i) CHECK(span_a[i] == span_b[i]);
}

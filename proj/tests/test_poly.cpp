#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqzeros/bounds.hpp"
#include "fqzeros/poly.hpp"

using namespace fqzeros;

namespace {

Poly lin(const FieldPtr& f, int nvars, std::vector<uint16_t> coeffs) {
    Poly out(f, nvars);
    for (int i = 0; i < nvars; ++i) {
        if (coeffs[size_t(i)] == 0) continue;
        Monomial m{std::vector<uint16_t>(size_t(nvars), 0)};
        m.exps[size_t(i)] = 1;
        out.set_coeff(m, {coeffs[size_t(i)]});
    }
    return out;
}

Poly random_poly(const FieldPtr& f, int nvars, int d, std::mt19937_64& rng) {
    Poly out(f, nvars);
    for (const Monomial& m : monomials_desc_lex(nvars - 1, d))
        out.set_coeff(m, {uint16_t(rng() % f->q())});
    return out;
}

}  // namespace

TEST_CASE("monomials_desc_lex enumeration") {
    auto ms = monomials_desc_lex(1, 2);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].exps == std::vector<uint16_t>{2, 0});
    CHECK(ms[1].exps == std::vector<uint16_t>{1, 1});
    CHECK(ms[2].exps == std::vector<uint16_t>{0, 2});

    auto m22 = monomials_desc_lex(2, 2);
    CHECK(m22[1].exps == std::vector<uint16_t>{1, 1, 0});  // position r=2
    CHECK(m22[3].exps == std::vector<uint16_t>{0, 2, 0});  // position r=4

    for (int m = 0; m <= 4; ++m)
        for (int d = 0; d <= 5; ++d) {
            auto all = monomials_desc_lex(m, d);
            CHECK((long long)all.size() == binom(m + d, d));
            for (size_t i = 0; i + 1 < all.size(); ++i)
                CHECK(all[i].exps > all[i + 1].exps);  // strictly descending
            for (const auto& mm : all) CHECK(mm.degree() == d);
        }
}

TEST_CASE("nth_desc_lex and the (d-1)e_1 + e_r identity") {
    auto a = nth_desc_lex(3, 4, 1);
    CHECK(a.nu.exps == std::vector<uint16_t>{4, 0, 0, 0});
    CHECK(a.j == 1);

    auto b = nth_desc_lex(2, 3, 3);
    CHECK(b.nu.exps == std::vector<uint16_t>{2, 0, 1});
    CHECK(b.j == 1);

    auto c = nth_desc_lex(1, 5, 3);
    CHECK(c.nu.exps == std::vector<uint16_t>{3, 2});  // (d-r+1, r-1)

    CHECK_THROWS_AS(nth_desc_lex(1, 2, 4), IndexOutOfRange);

    // nth(m,d,r) = (d-1)e_1 + e_r for 2 <= r <= m+1, d >= 2
    for (int m = 1; m <= 4; ++m)
        for (int d = 2; d <= 6; ++d)
            for (int r = 2; r <= m + 1; ++r) {
                std::vector<uint16_t> want(size_t(m) + 1, 0);
                want[0] = uint16_t(d - 1);
                want[size_t(r) - 1] += 1;
                CHECK(nth_desc_lex(m, d, r).nu.exps == want);
            }
}

TEST_CASE("lambda_nth ascending enumeration of Lambda(d,m)") {
    CHECK(lambda_nth(2, 2, 3, 1) == std::vector<int>{0, 2});
    CHECK(lambda_nth(2, 2, 3, 2) == std::vector<int>{1, 1});
    CHECK(lambda_nth(2, 2, 3, 6) == std::vector<int>{2, 2});
    CHECK(lambda_size(2, 2, 3) == 6);
    CHECK_THROWS_AS(lambda_nth(2, 2, 3, 7), IndexOutOfRange);

    // cross-check against brute-force enumeration
    for (long long q : {2, 3, 5})
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d < q; ++d) {
                std::vector<std::vector<int>> all;
                std::vector<int> beta(size_t(m), 0);
                while (true) {
                    int s = 0;
                    for (int x : beta) s += x;
                    if (s >= m * int(q - 1) - d) all.push_back(beta);
                    int i = m - 1;
                    while (i >= 0 && beta[size_t(i)] == q - 1) beta[size_t(i--)] = 0;
                    if (i < 0) break;
                    ++beta[size_t(i)];
                }
                std::sort(all.begin(), all.end());
                REQUIRE(lambda_size(d, m, q) == (long long)all.size());
                for (size_t r = 1; r <= all.size(); ++r)
                    CHECK(lambda_nth(d, m, q, (long long)r) == all[r - 1]);
            }
}

TEST_CASE("evaluation") {
    auto f2 = Field::make(2);
    CHECK(Poly::zero(f2, 3).eval(std::vector<FieldElem>{{1}, {1}, {0}}) ==
          f2->zero());

    Poly f = poly_parse(f2, 3, "x0^2 + x1^2");
    CHECK(f.eval(std::vector<FieldElem>{{1}, {1}, {0}}) == f2->zero());

    auto f5 = Field::make(5);
    Poly g = poly_parse(f5, 3, "x0*x1*x2");
    CHECK(g.eval(std::vector<FieldElem>{{2}, {3}, {4}}) == FieldElem{4});  // 24 mod 5
}

TEST_CASE("family rank") {
    auto f3 = Field::make(3);
    HomPoly a(poly_parse(f3, 3, "x0^2"), 2);
    HomPoly b(poly_parse(f3, 3, "x1^2"), 2);
    HomPoly c(poly_parse(f3, 3, "x0^2 + x1^2"), 2);
    PolyFamily fam = PolyFamily::make({a, b, c});
    CHECK(fam.rank == 2);

    // rank is invariant under permutation and invertible scaling
    PolyFamily fam2 = PolyFamily::make({c, HomPoly(b.poly().scaled({2}), 2), a});
    CHECK(fam2.rank == 2);
}

TEST_CASE("gcd and exact division") {
    auto f5 = Field::make(5);
    Poly x0 = Poly::variable(f5, 3, 0);
    Poly x1 = Poly::variable(f5, 3, 1);
    Poly x2 = Poly::variable(f5, 3, 2);

    CHECK(poly_gcd(x0 * x1, x0 * x2) == x0);
    CHECK(poly_gcd(x0 * x1, Poly::zero(f5, 3)) == x0 * x1);
    CHECK_THROWS_AS(poly_gcd(Poly::zero(f5, 3), Poly::zero(f5, 3)), BothZero);

    // gcd(G*H1, G*H2) = G for independent linear H1, H2 and quadratic G
    Poly G = (x0 + x1.scaled({2})) * (x2 + x0.scaled({3}));
    Poly F1 = G * x1;
    Poly F2 = G * (x2 + x1);
    Poly g = poly_gcd(F1, F2);
    CHECK(g.total_degree() == 2);
    CHECK(g.leading().second == f5->one());  // normalized
    CHECK(divide_exact(G, g).has_value());
    CHECK(divide_exact(F1, g).has_value());
    CHECK(divide_exact(F2, g).has_value());

    auto f7 = Field::make(7);
    Poly a = poly_parse(f7, 3, "x0^2 + 6*x1^2");  // x0^2 - x1^2
    Poly b = poly_parse(f7, 3, "x0 + 6*x1");      // x0 - x1
    auto quot = divide_exact(a, b);
    REQUIRE(quot.has_value());
    CHECK(*quot == poly_parse(f7, 3, "x0 + x1"));
    CHECK(!divide_exact(poly_parse(f7, 3, "x0^2"), poly_parse(f7, 3, "x1")));
    CHECK_THROWS_AS(divide_exact(a, Poly::zero(f7, 3)), DivisionByZeroPoly);
}

TEST_CASE("gcd_many") {
    auto f5 = Field::make(5);
    Poly x0 = Poly::variable(f5, 3, 0);
    Poly x1 = Poly::variable(f5, 3, 1);
    Poly x2 = Poly::variable(f5, 3, 2);
    Poly G = x0 * x0 + x1 * x2;

    Poly g = poly_gcd_many({x0 * G, x1 * G, x2 * G});
    CHECK(g == G);  // G is already normalized (leading coeff 1)

    CHECK(poly_gcd_many({x0, x1}).is_constant());
    CHECK(poly_gcd_many({x0 * x1}) == x0 * x1);
    CHECK_THROWS_AS(poly_gcd_many({Poly::zero(f5, 3)}), AllZero);
}

TEST_CASE("gcd randomized reconstruction and degree oracle") {
    std::mt19937_64 rng(42);
    for (uint32_t q : {3u, 5u}) {
        auto f = Field::make(q);
        for (int iter = 0; iter < 60; ++iter) {
            // f = A*u, g = A*v with A a random product of linear forms
            int degA = 1 + int(rng() % 2);
            Poly A = Poly::constant(f, 3, f->one());
            for (int i = 0; i < degA; ++i) {
                Poly l = lin(f, 3, {uint16_t(rng() % q), uint16_t(rng() % q),
                                    uint16_t(1 + rng() % (q - 1))});
                A = A * l;
            }
            Poly u = random_poly(f, 3, 2, rng);
            Poly v = random_poly(f, 3, 2, rng);
            if (u.is_zero() || v.is_zero()) continue;
            if (!poly_gcd(u, v).is_constant()) continue;
            Poly g = poly_gcd(A * u, A * v);
            CHECK(g.total_degree() == A.total_degree());
            auto cu = divide_exact(A * u, g);
            auto cv = divide_exact(A * v, g);
            REQUIRE(cu.has_value());
            REQUIRE(cv.has_value());
            CHECK(g * *cu == A * u);
            CHECK(g * *cv == A * v);
        }
    }
}

TEST_CASE("homogeneous polynomial typing") {
    auto f3 = Field::make(3);
    CHECK_THROWS_AS(HomPoly(poly_parse(f3, 3, "x0^2 + x1"), 2), MixedParameters);
    HomPoly z = HomPoly::zero(f3, 2, 4);
    CHECK(z.is_zero());
    CHECK(z.d() == 4);
    CHECK(z.m() == 2);
    CHECK_THROWS_AS(PolyFamily::make({HomPoly(poly_parse(f3, 3, "x0"), 1),
                                      HomPoly(poly_parse(f3, 3, "x0^2"), 2)}),
                    MixedParameters);
}

TEST_CASE("text format round trip") {
    auto f5 = Field::make(5);
    Poly f = poly_parse(f5, 3, "2*x0^2*x1 + x2^3 + 4");
    CHECK(poly_parse(f5, 3, poly_to_string(f)) == f);
    CHECK(poly_parse(f5, 3, "  2 * x0^2 * x1+x2^3 + 4 ") == f);  // whitespace-tolerant
    CHECK(poly_to_string(Poly::zero(f5, 3)) == "0");

    CHECK_THROWS_AS(poly_parse(f5, 3, "x^"), ParseError);
    CHECK_THROWS_AS(poly_parse(f5, 3, "x0^"), ParseError);
    CHECK_THROWS_AS(poly_parse(f5, 3, "x7"), ParseError);

    // extension-field coefficients use the g^k element format
    auto f4 = Field::make(4);
    Poly g = poly_parse(f4, 2, "g^2*x0*x1 + x1^2");
    CHECK(g.coeff(Monomial{{1, 1}}) == f4->pow(f4->generator(), 2));
    CHECK(poly_parse(f4, 2, poly_to_string(g)) == g);
}

TEST_CASE("coeff_vector and matrix_rank") {
    auto f3 = Field::make(3);
    auto basis = monomials_desc_lex(2, 2);
    Poly f = poly_parse(f3, 3, "x0^2 + 2*x1*x2");
    auto vec = coeff_vector(f, basis);
    REQUIRE(vec.size() == basis.size());
    CHECK(vec[0] == f3->one());  // x0^2 is lex-largest

    std::vector<std::vector<FieldElem>> rows = {
        {{1}, {0}, {2}}, {{0}, {1}, {1}}, {{1}, {1}, {0}}};
    CHECK(matrix_rank(*f3, rows) == 2);  // row3 = row1 + row2
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fqzeros/closefam.hpp"
#include "fqzeros/constructions.hpp"
#include "fqzeros/projgeom.hpp"

using namespace fqzeros;

namespace {

SetFamily sets(int n, std::vector<std::set<int>> members) {
    return SetFamily{n, std::move(members)};
}

// omit-one products of the given linear forms
std::vector<HomPoly> omit_one_products(const std::vector<HomPoly>& forms) {
    std::vector<HomPoly> out;
    int r = int(forms.size());
    for (int i = 0; i < r; ++i) {
        Poly prod = Poly::constant(forms[0].field(), forms[0].poly().nvars(),
                                   forms[0].field()->one());
        for (int j = 0; j < r; ++j)
            if (j != i) prod = prod * forms[j].poly();
        out.emplace_back(std::move(prod), r - 1);
    }
    return out;
}

}  // namespace

TEST_CASE("set_is_close") {
    CHECK(set_is_close(sets(5, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK(!set_is_close(sets(5, {{1, 2}, {3, 4}})));
    CHECK(!set_is_close(sets(5, {{1, 2}, {1, 2}})));  // members must be distinct

    // omit-one families are always close
    std::vector<int> nu = {0, 2, 3, 4};
    std::vector<std::set<int>> members;
    for (size_t i = 0; i < nu.size(); ++i) {
        std::set<int> s(nu.begin(), nu.end());
        s.erase(nu[i]);
        members.push_back(s);
    }
    CHECK(set_is_close(sets(6, members)));
}

TEST_CASE("set_structure dichotomy and omit-one recovery") {
    CHECK(set_structure(sets(5, {{1, 2}})).common_size == 2);  // r=1: reports k
    CHECK(set_structure(sets(5, {{1, 2}, {1, 3}, {1, 4}})).common_size == 1);

    auto st = set_structure(sets(4, {{2, 3}, {1, 3}, {1, 2}}));
    CHECK(st.common_size == 0);
    REQUIRE(st.nu.has_value());
    CHECK(*st.nu == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(set_structure(sets(5, {{1, 2}, {3, 4}})), NotClose);
}

TEST_CASE("exhaustive Prop 3.2 sweep, n <= 5") {
    // every close family of k-subsets of [n] satisfies the dichotomy; the
    // recovered structure never throws StructureViolation
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::set<int>> all_subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::set<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.insert(i);
            all_subsets.push_back(s);
        }
        int close_found = 0;
        // all families of up to 4 distinct subsets
        int N = int(all_subsets.size());
        for (int a = 0; a < N; ++a)
            for (int b = a; b < N; ++b)
                for (int c = b; c < N; ++c) {
                    std::vector<std::set<int>> mem = {all_subsets[size_t(a)]};
                    if (b != a) mem.push_back(all_subsets[size_t(b)]);
                    if (c != b && c != a) mem.push_back(all_subsets[size_t(c)]);
                    SetFamily fam = sets(n, mem);
                    if (!set_is_close(fam)) continue;
                    ++close_found;
                    SetStructure st = set_structure(fam);
                    int k = fam.k(), r = fam.r();
                    if (r >= 2)
                        CHECK((st.common_size == k - 1 || st.common_size == k - r + 1));
                }
        CHECK(close_found > 0);
    }
}

TEST_CASE("poly_is_close") {
    auto f5 = Field::make(5);
    std::vector<HomPoly> forms = {HomPoly(Poly::variable(f5, 3, 0), 1),
                                  HomPoly(Poly::variable(f5, 3, 1), 1),
                                  HomPoly(Poly::variable(f5, 3, 2), 1)};
    PolyFamily fam = PolyFamily::make(omit_one_products(forms));
    CHECK(poly_is_close(fam));

    auto f3 = Field::make(3);
    PolyFamily coprime = PolyFamily::make({HomPoly(poly_parse(f3, 3, "x0^2"), 2),
                                           HomPoly(poly_parse(f3, 3, "x1^2"), 2)});
    CHECK(!poly_is_close(coprime));

    PolyFamily dependent = PolyFamily::make(
        {HomPoly(poly_parse(f3, 3, "x0"), 1), HomPoly(poly_parse(f3, 3, "2*x0"), 1)});
    CHECK_THROWS_AS(poly_is_close(dependent), RankDeficient);
}

TEST_CASE("poly_structure") {
    // r=4 omit-one triple products over F_5: k = 3 = r-1, forms recovered
    auto f5 = Field::make(5);
    std::vector<HomPoly> forms;
    for (int i = 0; i < 4; ++i) forms.emplace_back(Poly::variable(f5, 4, i), 1);
    PolyFamily fam = PolyFamily::make(omit_one_products(forms));
    PolyStructure st = poly_structure(fam);
    CHECK(st.k == 3);
    REQUIRE(st.forms.has_value());
    REQUIRE(st.forms->size() == 4);
    for (int i = 0; i < 4; ++i) CHECK((*st.forms)[size_t(i)] == forms[size_t(i)]);

    // k=1 branch
    PolyFamily lin = PolyFamily::make({HomPoly(Poly::variable(f5, 3, 0), 1),
                                       HomPoly(Poly::variable(f5, 3, 1), 1)});
    CHECK(poly_structure(lin).k == 1);
    CHECK(!poly_structure(lin).forms.has_value());

    // r=3 over F_2 with forms x0, x1, x0+x1
    auto f2 = Field::make(2);
    std::vector<HomPoly> forms2 = {HomPoly(Poly::variable(f2, 3, 0), 1),
                                   HomPoly(Poly::variable(f2, 3, 1), 1),
                                   HomPoly(poly_parse(f2, 3, "x0 + x1"), 1)};
    PolyFamily fam2 = PolyFamily::make(omit_one_products(forms2));
    PolyStructure st2 = poly_structure(fam2);
    CHECK(st2.k == 2);
    REQUIRE(st2.forms.has_value());
    for (int i = 0; i < 3; ++i) CHECK((*st2.forms)[size_t(i)] == forms2[size_t(i)]);

    // non-coprime close family is rejected
    auto f3 = Field::make(3);
    Poly g = poly_parse(f3, 3, "x2");
    PolyFamily notcop = PolyFamily::make(
        {HomPoly(poly_parse(f3, 3, "x0") * g, 2), HomPoly(poly_parse(f3, 3, "x1") * g, 2)});
    CHECK_THROWS_AS(poly_structure(notcop), NotCoprimeClose);
}

TEST_CASE("Thm 3.3 randomized inversion") {
    std::mt19937_64 rng(99);
    int done = 0;
    for (uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::make(q);
        for (int m = 1; m <= 3; ++m) {
            auto all_forms = normalized_linear_forms(f, m);
            for (int iter = 0; iter < 40; ++iter) {
                int r = 3 + int(rng() % 3);  // 3..5
                if ((size_t)r > all_forms.size()) continue;
                // pick r distinct normalized forms
                std::vector<HomPoly> forms;
                std::set<size_t> used;
                while ((int)forms.size() < r) {
                    size_t i = rng() % all_forms.size();
                    if (used.insert(i).second) forms.push_back(all_forms[i]);
                }
                PolyFamily fam = PolyFamily::make(omit_one_products(forms));
                if (fam.rank < r) continue;  // can happen over tiny fields
                CHECK(poly_is_close(fam));
                PolyStructure st = poly_structure(fam);
                CHECK(st.k == r - 1);
                REQUIRE(st.forms.has_value());
                for (int i = 0; i < r; ++i)
                    CHECK((*st.forms)[size_t(i)] == forms[size_t(i)]);
                ++done;
            }
        }
    }
    CHECK(done >= 100);
}

TEST_CASE("correlation_profile classification") {
    auto f5 = Field::make(5);
    // Lemma 6.1 family, d=3: Case3 with b = d-1
    auto tb = tb_maximal_family(f5, {5, 3, 2, 2});
    CorrelationProfile prof = correlation_profile(tb.family);
    CHECK(prof.kase == CorrelationCase::Case3);
    CHECK(prof.b == 2);
    REQUIRE(prof.case3_b.has_value());
    CHECK(*prof.case3_b == 2);
    CHECK(poly_gcd_many({prof.cofactors[0].poly(), prof.cofactors[1].poly()})
              .is_constant());

    auto f3 = Field::make(3);
    PolyFamily case1 = PolyFamily::make({HomPoly(poly_parse(f3, 3, "x0^2"), 2),
                                         HomPoly(poly_parse(f3, 3, "x1^2"), 2)});
    CHECK(correlation_profile(case1).kase == CorrelationCase::Case1);

    // directed Case2: F_1 = A u, F_2 = A v, deg A = 1, u, v coprime quadratics
    Poly A = poly_parse(f5, 3, "x2");
    Poly u = poly_parse(f5, 3, "x0^2 + x1*x2");
    Poly v = poly_parse(f5, 3, "x1^2 + x0*x2");
    REQUIRE(poly_gcd(u, v).is_constant());
    PolyFamily case2 = PolyFamily::make({HomPoly(A * u, 3), HomPoly(A * v, 3)});
    CorrelationProfile p2 = correlation_profile(case2);
    CHECK(p2.kase == CorrelationCase::Case2);
    CHECK(p2.pairwise[0][1] == 1);
    CHECK(p2.b == 1);

    // {x0^2 x1, x0 x1^2}: b_12 = 2 = d-1, Case3
    PolyFamily c3 = PolyFamily::make({HomPoly(poly_parse(f5, 3, "x0^2*x1"), 3),
                                      HomPoly(poly_parse(f5, 3, "x0*x1^2"), 3)});
    CHECK(correlation_profile(c3).kase == CorrelationCase::Case3);

    CHECK_THROWS_AS(correlation_profile(PolyFamily::make(
                        {HomPoly(poly_parse(f5, 3, "x0"), 1),
                         HomPoly(poly_parse(f5, 3, "x1"), 1)})),
                    OutOfValidity);  // needs d >= 2
}

TEST_CASE("correlation profile invariants") {
    std::mt19937_64 rng(123);
    auto f = Field::make(4);
    auto basis = monomials_desc_lex(2, 3);
    int done = 0;
    while (done < 50) {
        std::vector<HomPoly> members;
        for (int i = 0; i < 2; ++i) {
            Poly p(f, 3);
            for (const Monomial& mm : basis)
                p.set_coeff(mm, {uint16_t(rng() % 4)});
            if (p.is_zero()) break;
            members.emplace_back(std::move(p), 3);
        }
        if (members.size() < 2) continue;
        PolyFamily fam = PolyFamily::make(members);
        if (fam.rank < 2) continue;
        CorrelationProfile prof = correlation_profile(fam);
        CHECK(prof.b >= 0);
        CHECK(prof.b <= prof.pairwise[0][1]);
        CHECK(prof.pairwise[0][1] <= 2);  // b_ij <= d-1
        std::vector<Poly> cof;
        for (const HomPoly& g : prof.cofactors) cof.push_back(g.poly());
        CHECK(poly_gcd_many(cof).is_constant());
        for (size_t i = 0; i < members.size(); ++i)
            CHECK(prof.overall_gcd.poly() * prof.cofactors[i].poly() ==
                  members[i].poly());
        ++done;
    }
}

TEST_CASE("normalized_linear_forms and extract_linear_factors") {
    auto f3 = Field::make(3);
    auto forms = normalized_linear_forms(f3, 2);
    CHECK((long long)forms.size() == pk(2, 3));

    // factor a product of three of them (with a scalar in front)
    Poly prod = forms[0].poly() * forms[4].poly() * forms[7].poly();
    prod = prod.scaled({2});
    auto lf = extract_linear_factors(HomPoly(prod, 3));
    CHECK(lf.factors.size() == 3);
    CHECK(lf.cofactor.is_constant());
    std::vector<HomPoly> expect = {forms[0], forms[4], forms[7]};
    for (const HomPoly& h : expect)
        CHECK(std::count(lf.factors.begin(), lf.factors.end(), h) == 1);

    // an irreducible quadratic has no linear factors: x0^2 + x1^2 over F_3
    auto lf2 = extract_linear_factors(HomPoly(poly_parse(f3, 3, "x0^2 + x1^2"), 2));
    CHECK(lf2.factors.empty());
    CHECK(lf2.cofactor.total_degree() == 2);
}

TEST_CASE("recovered structures have no repeated factors") {
    // Thm 3.3 proof observations: members of a coprime close family with
    // k > 1 are products of k distinct linear forms
    auto f5 = Field::make(5);
    std::vector<HomPoly> forms = {HomPoly(Poly::variable(f5, 3, 0), 1),
                                  HomPoly(Poly::variable(f5, 3, 1), 1),
                                  HomPoly(Poly::variable(f5, 3, 2), 1),
                                  HomPoly(poly_parse(f5, 3, "x0 + x1 + x2"), 1)};
    PolyFamily fam = PolyFamily::make(omit_one_products(forms));
    for (const HomPoly& mem : fam.members) {
        auto lf = extract_linear_factors(mem);
        CHECK(lf.cofactor.is_constant());
        CHECK((int)lf.factors.size() == fam.d());
        for (size_t i = 0; i < lf.factors.size(); ++i)
            for (size_t j = i + 1; j < lf.factors.size(); ++j)
                CHECK(!(lf.factors[i] == lf.factors[j]));
    }
}

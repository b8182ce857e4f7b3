#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fqzeros/bounds.hpp"

using namespace fqzeros;

namespace {

// independent H_r oracle: enumerate Lambda(d,m) by brute force, sort
// ascending, evaluate the display directly
long long hp_oracle(long long q, int d, int m, int r) {
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
    const std::vector<int>& alpha = all.at(size_t(r) - 1);
    long long out = 1;
    for (int j = 1; j <= m; ++j) {
        long long pw = 1;
        for (int t = 0; t < m - j; ++t) pw *= q;
        out += alpha[size_t(j) - 1] * pw;
    }
    long long qm = 1;
    for (int t = 0; t < m; ++t) qm *= q;
    return qm - out;
}

}  // namespace

TEST_CASE("tb_bound_general") {
    // d=1: T_r = p_{m-r}
    for (long long q : {2, 3, 4, 5, 7, 8, 9})
        for (int m = 1; m <= 5; ++m)
            for (int r = 1; r <= m + 1; ++r)
                CHECK(tb_bound_general({q, 1, m, r}) == pk(m - r, q));

    // m=1: T_r(d,1) = d-r+1
    for (long long q : {2, 5})
        for (int d = 1; d <= 6; ++d)
            for (int r = 1; r <= d + 1; ++r)
                CHECK(tb_bound_general({q, d, 1, r}) == d - r + 1);

    CHECK(tb_bound_general({4, 2, 2, 2}) == 6);  // nu = (1,1,0), j = 1
    CHECK_THROWS_AS(tb_bound_general({4, 2, 2, 7}), IndexOutOfRange);
}

TEST_CASE("tb_bound_explicit and agreement with the general form") {
    CHECK(tb_bound_explicit({4, 2, 2, 1}) == 9);
    CHECK(tb_bound_explicit({4, 2, 2, 3}) == 5);   // r = m+1: no floor term
    CHECK(tb_bound_explicit({5, 3, 2, 2}) == 12);
    CHECK_THROWS_AS(tb_bound_explicit({4, 1, 2, 1}), OutOfValidity);
    CHECK_THROWS_AS(tb_bound_explicit({4, 2, 2, 4}), OutOfValidity);

    for (long long q : {2, 3, 4, 5, 7, 8, 9})
        for (int d = 2; d <= 6; ++d)
            for (int m = 1; m <= 5; ++m)
                for (int r = 1; r <= m + 1; ++r) {
                    CAPTURE(q); CAPTURE(d); CAPTURE(m); CAPTURE(r);
                    CHECK(tb_bound_general({q, d, m, r}) ==
                          tb_bound_explicit({q, d, m, r}));
                }

    // r=1 reduces to the Serre bound
    for (long long q : {2, 3, 5, 9})
        for (int d = 2; d <= 6; ++d)
            for (int m = 1; m <= 4; ++m)
                CHECK(tb_bound_explicit({q, d, m, 1}) == serre_bound(q, d, m));
}

TEST_CASE("hp bounds") {
    CHECK(hp_bound_general({3, 2, 2, 2}) == 4);   // alpha = (1,1)
    CHECK(hp_bound_general({3, 2, 2, 1}) == 6);   // alpha = (0,2)
    CHECK(hp_bound_explicit({5, 2, 3, 2}) == 30);
    CHECK(hp_bound_explicit({3, 2, 2, 3}) == 3);
    CHECK(hp_bound_explicit({4, 3, 1, 1}) == 3);
    CHECK_THROWS_AS(hp_bound_general({3, 3, 2, 1}), DegreeTooLarge);
    CHECK_THROWS_AS(hp_bound_explicit({4, 2, 2, 4}), OutOfValidity);

    for (long long q : {2, 3, 4, 5, 7, 8, 9})
        for (int d = 1; d < q && d <= 6; ++d)
            for (int m = 1; m <= 5; ++m) {
                for (int r = 1; r <= m + 1; ++r) {
                    CAPTURE(q); CAPTURE(d); CAPTURE(m); CAPTURE(r);
                    CHECK(hp_bound_general({q, d, m, r}) ==
                          hp_bound_explicit({q, d, m, r}));
                    CHECK(hp_bound_general({q, d, m, r}) == hp_oracle(q, d, m, r));
                }
                // r = m+1 evaluates to (d-1) q^{m-1}
                long long qm1 = 1;
                for (int t = 0; t < m - 1; ++t) qm1 *= q;
                CHECK(hp_bound_general({q, d, m, m + 1}) == (d - 1) * qm1);
            }
}

TEST_CASE("serre and lachaud") {
    CHECK(serre_bound(4, 2, 2) == 9);
    CHECK(serre_bound(3, 3, 1) == 3);
    for (long long q : {2, 3, 5})
        for (int m = 1; m <= 4; ++m)
            CHECK(serre_bound(q, int(q) + 1, m) == pk(m, q));  // d = q+1 gives p_m

    CHECK(lachaud_bound(1, 0, 7) == 1);
    CHECK(lachaud_bound(4, 1, 3) == 16);
    CHECK(lachaud_bound(9, 2, 3) == 9 * pk(2, 3));  // d^2 p_{m-2} shape
}

TEST_CASE("conjecture value") {
    // r <= m+1: reduces to the explicit T_r form
    for (long long q : {4, 5, 7})
        for (int d = 2; d < q; ++d)
            for (int m = 1; m <= 4; ++m)
                for (int r = 1; r <= m + 1; ++r)
                    CHECK(conjecture_bound({q, d, m, r}) ==
                          tb_bound_explicit({q, d, m, r}));

    CHECK(conjecture_bound({5, 3, 2, 4}) == hp_oracle(5, 2, 2, 4) + pk(1, 5));
    CHECK_THROWS_AS(conjecture_bound({5, 1, 2, 1}), OutOfValidity);
    CHECK_THROWS_AS(conjecture_bound({5, 5, 2, 1}), OutOfValidity);
    // r beyond binom(m+d-1, m) is rejected
    CHECK_THROWS_AS(conjecture_bound({5, 3, 2, 7}), OutOfValidity);
}

TEST_CASE("bounds strictly decrease in r up to m+1") {
    for (long long q : {2, 3, 5, 8})
        for (int d = 2; d <= 5; ++d)
            for (int m = 1; m <= 4; ++m)
                for (int r = 1; r <= m; ++r) {
                    CHECK(tb_bound_explicit({q, d, m, r}) >
                          tb_bound_explicit({q, d, m, r + 1}));
                    if (d < q)
                        CHECK(hp_bound_explicit({q, d, m, r}) >
                              hp_bound_explicit({q, d, m, r + 1}));
                }
}

TEST_CASE("ideal dimension formula vs oracle") {
    for (long long q : {2, 3})
        for (int m = 1; m <= 2; ++m) {
            CHECK(ideal_dim_rd(q, int(q) + 1, m) == binom(m + 1, 2));
            for (int d = int(q) + 1; d <= int(q) + 3; ++d) {
                CAPTURE(q); CAPTURE(m); CAPTURE(d);
                CHECK(ideal_dim_rd(q, d, m) == ideal_dim_oracle(q, d, m));
            }
        }
    CHECK(ideal_dim_rd(2, 3, 1) == 1);
    CHECK(ideal_dim_rd(2, 3, 2) == 3);
    CHECK(ideal_dim_oracle(2, 3, 1) == 1);
    CHECK(ideal_dim_oracle(2, 3, 2) == 3);
    CHECK(ideal_dim_oracle(3, 2, 2) == 0);  // evaluation injective below q+1
    CHECK_THROWS_AS(ideal_dim_rd(3, 3, 2), OutOfValidity);
}

TEST_CASE("validity flags") {
    BoundValidity v = bound_validity({4, 2, 2, 2});
    CHECK(v.tbc_hypothesis);
    CHECK(v.hp_hypothesis);
    CHECK(v.serre_hypothesis);

    v = bound_validity({3, 5, 2, 1});
    CHECK(!v.tbc_hypothesis);  // d < q-1 fails
    CHECK(!v.hp_hypothesis);   // d < q fails
    CHECK(!v.serre_hypothesis);  // d <= q+1 fails

    v = bound_validity({3, 3, 2, 1});
    CHECK(!v.tbc_hypothesis);
    CHECK(!v.hp_hypothesis);
    CHECK(v.serre_hypothesis);
}

TEST_CASE("binomial convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(-1, 2) == 0);
    CHECK(binom(3, -1) == 0);
}

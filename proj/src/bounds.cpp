#include "fqzeros/bounds.hpp"

#include <climits>

namespace fqzeros {

long long binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        if (out > LLONG_MAX / (n - k + i)) throw Overflow("binomial overflows");
        out = out * (n - k + i) / i;
    }
    return out;
}

long long tb_bound_general(const BoundParams& p) {
    long long M = binom(p.m + p.d, p.d);
    if (p.r < 1 || p.r > M)
        throw IndexOutOfRange("r outside [1, binom(m+d,d)]");
    auto [nu, j] = nth_desc_lex(p.m, p.d, p.r);
    long long total = pk(p.m - 2 * j, p.q);
    for (int i = j; i <= p.m; ++i) {
        long long nui = nu.exps[size_t(i) - 1];  // nu is 1-indexed in the display
        total += nui * (pk(p.m - i, p.q) - pk(p.m - i - j, p.q));
    }
    return total;
}

long long tb_bound_explicit(const BoundParams& p) {
    if (p.d < 2) throw OutOfValidity("explicit T_r form requires d >= 2");
    if (p.r < 1 || p.r > p.m + 1)
        throw OutOfValidity("explicit T_r form requires 1 <= r <= m+1");
    return (p.d - 1) * qpow_floor(p.m - 1, p.q) + pk(p.m - 2, p.q) +
           qpow_floor(p.m - p.r, p.q);
}

long long hp_bound_general(const BoundParams& p) {
    if (p.d < 1 || p.d >= p.q)
        throw DegreeTooLarge("H_r requires 1 <= d < q");
    if (p.r < 1 || p.r > lambda_size(p.d, p.m, p.q))
        throw IndexOutOfRange("r outside [1, |Lambda(d,m)|]");
    auto alpha = lambda_nth(p.d, p.m, p.q, p.r);
    long long sum = 1;
    for (int jj = 1; jj <= p.m; ++jj)
        sum += alpha[size_t(jj) - 1] * qpow_floor(p.m - jj, p.q);
    return qpow_floor(p.m, p.q) - sum;
}

long long hp_bound_explicit(const BoundParams& p) {
    if (p.d < 1 || p.d >= p.q) throw DegreeTooLarge("requires 1 <= d < q");
    if (p.r < 1 || p.r > p.m + 1)
        throw OutOfValidity("explicit H_r form requires 1 <= r <= m+1");
    return (p.d - 1) * qpow_floor(p.m - 1, p.q) + qpow_floor(p.m - p.r, p.q);
}

long long serre_bound(long long q, int d, int m) {
    if (d < 1) throw OutOfValidity("d must be positive");
    return d * qpow_floor(m - 1, q) + pk(m - 2, q);
}

long long lachaud_bound(long long delta, int n, long long q) {
    if (delta < 1) throw OutOfValidity("degree must be positive");
    return delta * pk(n, q);
}

long long conjecture_bound(const BoundParams& p) {
    if (p.d <= 1 || p.d >= p.q)
        throw OutOfValidity("conjecture value requires 1 < d < q");
    long long rmax = binom(p.m + p.d - 1, p.m);
    if (p.r < 1 || p.r > rmax)
        throw OutOfValidity("conjecture value requires r <= binom(m+d-1, m)");
    BoundParams lower = p;
    lower.d = p.d - 1;
    return hp_bound_general(lower) + pk(p.m - 1, p.q);
}

long long ideal_dim_rd(long long q, int d, int m) {
    if (d <= q) throw OutOfValidity("ideal dimension formula requires d >= q+1");
    // Each inner binomial is read as binom(a+m, a) for a := d+(i+1)(q-1)-jq,
    // zero when a < 0; this is the convention that matches ideal_dim_oracle
    // on the verification grid.
    long long total = 0;
    for (int j = 2; j <= m + 1; ++j) {
        long long inner = 0;
        for (int i = 0; i <= j - 2; ++i) {
            long long a = d + (long long)(i + 1) * (q - 1) - (long long)j * q;
            if (a >= 0) inner += binom(a + m, a);
        }
        long long term = binom(m + 1, j) * inner;
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

long long ideal_dim_oracle(long long q, int d, int m) {
    long long M = binom(m + d, d);
    long long points = pk(m, q);
    if (M * points > 10'000'000LL)
        throw TooLarge("evaluation matrix too large for the oracle");
    auto field = Field::make(uint32_t(q));
    auto basis = monomials_desc_lex(m, d);
    auto pts = proj_points(m, field);
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(p.coords);
    auto table = monomial_table(basis, raw, field);
    // rows = monomials, columns = points
    return M - matrix_rank(*field, std::move(table.values));
}

BoundValidity bound_validity(const BoundParams& p) {
    return {p.d < p.q - 1 && p.r <= p.m + 1, p.d < p.q, p.d <= p.q + 1};
}

}  // namespace fqzeros

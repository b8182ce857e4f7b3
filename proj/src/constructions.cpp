#include "fqzeros/constructions.hpp"

#include <algorithm>

namespace fqzeros {

namespace {

Certificate certify(const PolyFamily& fam, long long expected) {
    Certificate cert;
    cert.expected = expected;
    long long q = fam.field()->q();
    if (pk(fam.m(), q) <= kCertifyCap) {
        cert.counted = true;
        cert.count = count_proj_zeros(fam).projective;
        cert.match = (cert.count == expected);
    }
    return cert;
}

}  // namespace

Construction tb_maximal_family(const FieldPtr& field, const BoundParams& params,
                               std::optional<std::vector<FieldElem>> lambdas) {
    const int d = params.d, m = params.m, r = params.r;
    const long long q = field->q();
    if (d < 1 || d > q + 1) throw OutOfValidity("requires 1 <= d <= q+1");
    if (r < 1 || r > m + 1) throw OutOfValidity("requires 1 <= r <= m+1");

    std::vector<FieldElem> lam;
    if (lambdas) {
        lam = *lambdas;
        if (int(lam.size()) != d - 1)
            throw BadLambdas("need exactly d-1 lambdas");
        auto sorted = lam;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw BadLambdas("lambdas must be pairwise distinct");
    } else {
        for (int i = 0; i < d - 1; ++i) lam.push_back(field->elem(uint32_t(i)));
    }

    // G* = prod (x_m - lambda_j x_0)
    Poly gstar = Poly::constant(field, m + 1, {1});
    Poly x0 = Poly::variable(field, m + 1, 0);
    Poly xm = Poly::variable(field, m + 1, m);
    for (FieldElem l : lam) gstar = gstar * (xm - x0.scaled(l));

    std::vector<HomPoly> members;
    for (int i = 1; i <= r; ++i)
        members.emplace_back(Poly::variable(field, m + 1, i - 1) * gstar, d);

    Construction out{PolyFamily::make(std::move(members)), {}};
    long long expected = (d >= 2) ? tb_bound_explicit(params)
                                  : pk(m - r, q);  // d=1: the linear system count
    out.cert = certify(out.family, expected);
    return out;
}

Construction line_family(const FieldPtr& field, int d, int r) {
    const long long q = field->q();
    if (d > q) throw DegreeTooLarge("line family requires d <= q");
    if (r < 1 || r > d + 1) throw OutOfValidity("requires 1 <= r <= d+1");

    // L_a = a_1 x_0 - a_0 x_1 for each normalized point a of P^1.
    auto points = proj_points(1, field);
    std::vector<Poly> forms;
    Poly x0 = Poly::variable(field, 2, 0);
    Poly x1 = Poly::variable(field, 2, 1);
    for (const ProjPoint& a : points)
        forms.push_back(x0.scaled(a.coords[1]) - x1.scaled(a.coords[0]));

    std::vector<HomPoly> members;
    for (int i = 0; i < r; ++i) {
        Poly prod = Poly::constant(field, 2, {1});
        for (int j = 0; j <= d; ++j)
            if (j != i) prod = prod * forms[size_t(j)];
        members.emplace_back(std::move(prod), d);
    }
    Construction out{PolyFamily::make(std::move(members)), {}};
    out.cert = certify(out.family, d - r + 1);
    return out;
}

Construction fermat_family(const FieldPtr& field, int m, int r) {
    const long long q = field->q();
    long long rmax = binom(m + 1, 2);
    if (r < 1 || r > rmax)
        throw TooMany("requires 1 <= r <= binom(m+1,2)");

    std::vector<HomPoly> members;
    int taken = 0;
    for (int i = 0; i <= m && taken < r; ++i) {
        for (int j = i + 1; j <= m && taken < r; ++j) {
            Monomial a{std::vector<uint16_t>(size_t(m) + 1, 0)};
            a.exps[size_t(i)] = uint16_t(q);
            a.exps[size_t(j)] = 1;
            Monomial b{std::vector<uint16_t>(size_t(m) + 1, 0)};
            b.exps[size_t(j)] = uint16_t(q);
            b.exps[size_t(i)] = 1;
            Poly f = Poly::monomial(field, a, {1}) -
                     Poly::monomial(field, b, {1});
            members.emplace_back(std::move(f), int(q) + 1);
            ++taken;
        }
    }
    Construction out{PolyFamily::make(std::move(members)), {}};
    out.cert = certify(out.family, pk(m, q));
    return out;
}

}  // namespace fqzeros

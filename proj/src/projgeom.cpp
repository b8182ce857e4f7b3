#include "fqzeros/projgeom.hpp"

#include <climits>

namespace fqzeros {

long long pk(int k, long long q) {
    if (k < 0) return 0;
    long long total = 0, power = 1;
    for (int i = 0; i <= k; ++i) {
        if (total > LLONG_MAX - power) throw Overflow("p_k overflows");
        total += power;
        if (i < k) {
            if (power > LLONG_MAX / q) throw Overflow("p_k overflows");
            power *= q;
        }
    }
    return total;
}

long long qpow_floor(int k, long long q) {
    if (k < 0) return 0;
    long long power = 1;
    for (int i = 0; i < k; ++i) {
        if (power > LLONG_MAX / q) throw Overflow("q^k overflows");
        power *= q;
    }
    return power;
}

std::vector<std::vector<FieldElem>> affine_points(int m, const FieldPtr& field) {
    std::vector<std::vector<FieldElem>> out;
    out.reserve(size_t(qpow_floor(m, field->q())));
    std::vector<FieldElem> cur(size_t(m), FieldElem{0});
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0) {
            if (cur[size_t(i)].v + 1u < field->q()) {
                cur[size_t(i)] = {uint16_t(cur[size_t(i)].v + 1)};
                break;
            }
            cur[size_t(i)] = {0};
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<ProjPoint> proj_points(int m, const FieldPtr& field) {
    std::vector<ProjPoint> out;
    out.reserve(size_t(pk(m, field->q())));
    for (int lead = 0; lead <= m; ++lead) {
        for (auto& tail : affine_points(m - lead, field)) {
            ProjPoint p;
            p.coords.assign(size_t(m) + 1, FieldElem{0});
            p.coords[size_t(lead)] = {1};
            for (int j = 0; j < m - lead; ++j)
                p.coords[size_t(lead + 1 + j)] = tail[size_t(j)];
            out.push_back(std::move(p));
        }
    }
    return out;
}

ZeroCount count_proj_zeros(const PolyFamily& family) {
    ZeroCount zc;
    auto points = proj_points(family.m(), family.field());
    for (const ProjPoint& p : points) {
        bool all_zero = true;
        for (const HomPoly& f : family.members) {
            if (!f.eval(p.coords).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            ++zc.projective;
            if (p.coords[0].is_zero())
                ++zc.on_hyperplane;
            else
                ++zc.affine;
        }
    }
    return zc;
}

long long count_affine_zeros(const std::vector<Poly>& polys) {
    if (polys.empty()) throw MixedParameters("empty affine system");
    const FieldPtr& field = polys.front().field();
    int m = polys.front().nvars();
    for (const Poly& f : polys) {
        check_same_field(f.field(), field);
        if (f.nvars() != m) throw MixedParameters("variable counts differ");
        if (f.total_degree() >= int(field->q()))
            throw DegreeTooLarge("affine counting requires total degree < q");
    }
    long long count = 0;
    for (auto& p : affine_points(m, field)) {
        bool all_zero = true;
        for (const Poly& f : polys) {
            if (!f.eval(p).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) ++count;
    }
    return count;
}

Poly dehomogenize(const HomPoly& f) {
    Poly out(f.field(), f.m());
    for (const auto& [mon, c] : f.poly().terms()) {
        Monomial sub{std::vector<uint16_t>(mon.exps.begin() + 1, mon.exps.end())};
        out.set_coeff(sub, f.field()->add(out.coeff(sub), c));
    }
    return out;
}

MonomialTable monomial_table(const std::vector<Monomial>& basis,
                             const std::vector<std::vector<FieldElem>>& points,
                             const FieldPtr& field) {
    MonomialTable t;
    t.basis = basis;
    t.values.assign(basis.size(), std::vector<FieldElem>(points.size(), FieldElem{0}));
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < points.size(); ++j) {
            FieldElem v{1};
            for (size_t k = 0; k < basis[i].exps.size() && !v.is_zero(); ++k)
                if (basis[i].exps[k] != 0)
                    v = field->mul(v, field->pow(points[j][k], basis[i].exps[k]));
            t.values[i][j] = v;
        }
    }
    return t;
}

long long veronese_section_count(const PolyFamily& family) {
    if (family.rank < family.r())
        throw RankDeficient("family rank below its size");
    auto basis = monomials_desc_lex(family.m(), family.d());
    auto points = proj_points(family.m(), family.field());
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(points.size());
    for (const auto& p : points) raw.push_back(p.coords);
    auto table = monomial_table(basis, raw, family.field());
    const Field& F = *family.field();

    std::vector<std::vector<FieldElem>> rows;
    for (const HomPoly& h : family.members)
        rows.push_back(coeff_vector(h.poly(), basis));

    // The Veronese image of point j has coordinates table.values[.][j]; it
    // lies on the section iff every family coefficient vector is orthogonal
    // to it.
    long long count = 0;
    for (size_t j = 0; j < points.size(); ++j) {
        bool in_section = true;
        for (const auto& row : rows) {
            FieldElem acc{0};
            for (size_t i = 0; i < basis.size(); ++i)
                if (!row[i].is_zero())
                    acc = F.add(acc, F.mul(row[i], table.values[i][j]));
            if (!acc.is_zero()) {
                in_section = false;
                break;
            }
        }
        if (in_section) ++count;
    }
    return count;
}

std::pair<long long, long long> hyperplane_codim_census(
    const std::vector<HomPoly>& linear_forms, const ProjPoint& point) {
    if (linear_forms.empty()) throw MixedParameters("no linear forms");
    const FieldPtr& field = linear_forms.front().field();
    int m = linear_forms.front().m();
    int r = int(linear_forms.size());
    if (r < 1 || r > m + 1) throw OutOfValidity("need 1 <= r <= m+1");

    std::vector<Monomial> basis = monomials_desc_lex(m, 1);
    std::vector<std::vector<FieldElem>> form_rows;
    for (const HomPoly& h : linear_forms) {
        if (h.d() != 1) throw MixedParameters("non-linear form in census");
        form_rows.push_back(coeff_vector(h.poly(), basis));
    }
    if (matrix_rank(*field, form_rows) != r)
        throw RankDeficient("linear forms are dependent");

    bool on_L = true;
    for (const HomPoly& h : linear_forms)
        if (!h.eval(point.coords).is_zero()) on_L = false;
    if (on_L) throw PointOnL("point lies on the common zero locus");

    // Hyperplanes through P = normalized dual vectors h with h . P = 0.
    // codim of L cut to the hyperplane is r-1 iff h is in the row span of
    // the forms, else r.
    const Field& F = *field;
    long long at_r_minus_1 = 0, at_r = 0;
    for (const ProjPoint& dual : proj_points(m, field)) {
        FieldElem dot{0};
        for (int i = 0; i <= m; ++i)
            dot = F.add(dot, F.mul(dual.coords[size_t(i)], point.coords[size_t(i)]));
        if (!dot.is_zero()) continue;
        auto rows = form_rows;
        std::vector<FieldElem> hrow(size_t(m) + 1);
        // basis is x_0 > x_1 > ... in desc lex, so basis[i] is x_i
        for (int i = 0; i <= m; ++i) hrow[size_t(i)] = dual.coords[size_t(i)];
        rows.push_back(hrow);
        if (matrix_rank(F, rows) == r)
            ++at_r_minus_1;  // dual vector inside the span: restrictions drop rank
        else
            ++at_r;
    }
    return {at_r_minus_1, at_r};
}

}  // namespace fqzeros

#include "fqzeros/closefam.hpp"

#include <algorithm>

#include "fqzeros/projgeom.hpp"

namespace fqzeros {

// ---------------------------------------------------------------------------
// Set families

bool set_is_close(const SetFamily& fam) {
    int k = fam.k();
    for (size_t i = 0; i < fam.members.size(); ++i) {
        if (int(fam.members[i].size()) != k) return false;
        for (size_t j = i + 1; j < fam.members.size(); ++j) {
            if (fam.members[i] == fam.members[j]) return false;
            std::vector<int> inter;
            std::set_intersection(fam.members[i].begin(), fam.members[i].end(),
                                  fam.members[j].begin(), fam.members[j].end(),
                                  std::back_inserter(inter));
            if (int(inter.size()) != k - 1) return false;
        }
    }
    return true;
}

SetStructure set_structure(const SetFamily& fam) {
    if (!set_is_close(fam)) throw NotClose("family is not close");
    const int k = fam.k();
    const int r = fam.r();
    SetStructure out;
    if (r == 0) throw NotClose("empty family");
    if (r == 1) {
        out.common_size = k;  // degenerate: the intersection is the member itself
        return out;
    }
    std::set<int> common = fam.members.front();
    for (const auto& a : fam.members) {
        std::set<int> next;
        std::set_intersection(common.begin(), common.end(), a.begin(), a.end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
    }
    out.common_size = int(common.size());
    if (out.common_size != k - 1 && out.common_size != k - r + 1)
        throw StructureViolation("close-family intersection size " +
                                 std::to_string(out.common_size) +
                                 " is neither k-1 nor k-r+1");
    if (common.empty() && 1 < k && k < fam.n) {
        // omit-one recovery: the union must have r elements nu_1..nu_r with
        // member_i = union minus nu_i, in some order
        std::set<int> uni;
        for (const auto& a : fam.members) uni.insert(a.begin(), a.end());
        if (int(uni.size()) == r && k == r - 1) {
            std::vector<int> nu;
            bool ok = true;
            for (const auto& a : fam.members) {
                std::vector<int> diff;
                std::set_difference(uni.begin(), uni.end(), a.begin(), a.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1) {
                    ok = false;
                    break;
                }
                nu.push_back(diff.front());
            }
            if (ok) out.nu = std::move(nu);
        }
        if (!out.nu)
            throw StructureViolation("empty-intersection close family is not omit-one");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial families

bool poly_is_close(const PolyFamily& fam) {
    if (fam.rank < fam.r()) throw RankDeficient("family is linearly dependent");
    const int k = fam.d();
    for (size_t i = 0; i < fam.members.size(); ++i)
        for (size_t j = i + 1; j < fam.members.size(); ++j) {
            Poly g = poly_gcd(fam.members[i].poly(), fam.members[j].poly());
            if (g.total_degree() != k - 1) return false;
        }
    return true;
}

std::vector<HomPoly> normalized_linear_forms(const FieldPtr& field, int m) {
    std::vector<HomPoly> out;
    for (const ProjPoint& dual : proj_points(m, field)) {
        Poly f(field, m + 1);
        for (int i = 0; i <= m; ++i) {
            if (dual.coords[size_t(i)].is_zero()) continue;
            Monomial mm{std::vector<uint16_t>(size_t(m) + 1, 0)};
            mm.exps[size_t(i)] = 1;
            f.set_coeff(mm, dual.coords[size_t(i)]);
        }
        out.emplace_back(std::move(f), 1);
    }
    return out;
}

LinearFactorization extract_linear_factors(const HomPoly& f) {
    LinearFactorization out{{}, f.poly()};
    if (f.is_zero()) return out;
    auto forms = normalized_linear_forms(f.field(), f.m());
    for (const HomPoly& h : forms) {
        while (true) {
            auto q = divide_exact(out.cofactor, h.poly());
            if (!q) break;
            out.factors.push_back(h);
            out.cofactor = *q;
        }
    }
    return out;
}

PolyStructure poly_structure(const PolyFamily& fam) {
    if (!poly_is_close(fam)) throw NotCoprimeClose("family is not close");
    std::vector<Poly> polys;
    for (const HomPoly& h : fam.members) polys.push_back(h.poly());
    if (!poly_gcd_many(polys).is_constant())
        throw NotCoprimeClose("family members have a common factor");
    const int k = fam.d();
    const int r = fam.r();
    PolyStructure out;
    out.k = k;
    if (k == 1) return out;
    if (k != r - 1)
        throw StructureViolation("coprime close family with k = " + std::to_string(k) +
                                 " but r = " + std::to_string(r));
    // k > 1: recover the omit-one linear forms by trial division.  Each
    // member is a product of k of the r forms; the omitted one for member i
    // is the unique form dividing every member except member i.
    auto factorizations = std::vector<LinearFactorization>{};
    for (const HomPoly& h : fam.members) {
        auto lf = extract_linear_factors(h);
        if (!lf.cofactor.is_constant() || int(lf.factors.size()) != k)
            throw StructureViolation("member is not a product of k distinct linear forms");
        factorizations.push_back(std::move(lf));
    }
    std::vector<HomPoly> forms;
    for (int i = 0; i < r; ++i) {
        // H_i divides all members except member i
        std::optional<HomPoly> found;
        for (const HomPoly& cand : factorizations[size_t((i + 1) % r)].factors) {
            bool ok = true;
            for (int j = 0; j < r && ok; ++j) {
                bool divides =
                    std::find(factorizations[size_t(j)].factors.begin(),
                              factorizations[size_t(j)].factors.end(),
                              cand) != factorizations[size_t(j)].factors.end();
                if (j == i ? divides : !divides) ok = false;
            }
            if (ok) {
                found = cand;
                break;
            }
        }
        if (!found)
            throw StructureViolation("no omitted linear form for member " +
                                     std::to_string(i + 1));
        forms.push_back(*found);
    }
    out.forms = std::move(forms);
    return out;
}

CorrelationProfile correlation_profile(const PolyFamily& fam) {
    if (fam.rank < fam.r()) throw RankDeficient("family is linearly dependent");
    const int r = fam.r();
    const int d = fam.d();
    if (r < 2 || d < 2) throw OutOfValidity("profile requires r >= 2 and d >= 2");

    CorrelationProfile out;
    std::vector<Poly> polys;
    for (const HomPoly& h : fam.members) polys.push_back(h.poly());
    Poly g = poly_gcd_many(polys);
    out.b = std::max(g.total_degree(), 0);
    out.overall_gcd = HomPoly(g, out.b);
    for (const Poly& f : polys) {
        auto q = divide_exact(f, g);
        if (!q) throw Error("gcd does not divide a family member");
        out.cofactors.emplace_back(*q, d - out.b);
    }
    out.pairwise.assign(size_t(r), std::vector<int>(size_t(r), d));
    bool any_zero = false, any_mid = false;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int bij = poly_gcd(polys[size_t(i)], polys[size_t(j)]).total_degree();
            out.pairwise[size_t(i)][size_t(j)] = bij;
            out.pairwise[size_t(j)][size_t(i)] = bij;
            if (bij == 0) any_zero = true;
            else if (bij < d - 1) any_mid = true;
        }
    if (any_zero) {
        out.kase = CorrelationCase::Case1;
    } else if (any_mid) {
        out.kase = CorrelationCase::Case2;
    } else {
        out.kase = CorrelationCase::Case3;
        out.case3_b = out.b;  // the structure theorem forces b = d-1 or d-r+1
    }
    return out;
}

const char* correlation_case_name(CorrelationCase c) {
    switch (c) {
        case CorrelationCase::Case1: return "Case1";
        case CorrelationCase::Case2: return "Case2";
        case CorrelationCase::Case3: return "Case3";
    }
    return "?";
}

}  // namespace fqzeros

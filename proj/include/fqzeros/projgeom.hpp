#ifndef FQZEROS_PROJGEOM_HPP
#define FQZEROS_PROJGEOM_HPP

#include <utility>
#include <vector>

#include "fqzeros/poly.hpp"

namespace fqzeros {

// Point of P^m(F_q), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FieldElem> coords;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords == b.coords;
    }
};

// p_k = |P^k(F_q)| = q^k + ... + q + 1 for k >= 0, and 0 for k < 0.
long long pk(int k, long long q);

// Checked q^k for k >= 0, with floor(q^k) = 0 for k < 0.
long long qpow_floor(int k, long long q);

// All p_m points of P^m(F_q), normalized, in deterministic order: by the
// position of the first nonzero coordinate, then lex on the tail.
std::vector<ProjPoint> proj_points(int m, const FieldPtr& field);

// All q^m points of A^m(F_q) in lex order.
std::vector<std::vector<FieldElem>> affine_points(int m, const FieldPtr& field);

struct ZeroCount {
    long long projective = 0;
    long long on_hyperplane = 0;  // zeros with x_0 = 0
    long long affine = 0;         // zeros with x_0 = 1
};

ZeroCount count_proj_zeros(const PolyFamily& family);

// Common zeros in A^m(F_q) of (possibly inhomogeneous) polynomials in m
// variables.  Precondition: every total degree < q.
long long count_affine_zeros(const std::vector<Poly>& polys);

// Substitute x_0 = 1: a polynomial in m variables x_1..x_m.
Poly dehomogenize(const HomPoly& f);

// Rational point count of the section of the degree-d Veronese variety by
// the codimension-r linear subspace cut out by the family's coefficient
// vectors.  Equals count_proj_zeros(family).projective.
long long veronese_section_count(const PolyFamily& family);

// For r independent linear forms with common zero locus L and a point P
// outside L: over the p_{m-1} hyperplanes through P, tally the codimension
// of L cut down to each hyperplane.  Returns (count at r-1, count at r).
std::pair<long long, long long> hyperplane_codim_census(
    const std::vector<HomPoly>& linear_forms, const ProjPoint& point);

// ---------------------------------------------------------------------------
// Monomial-value table: all basis monomials evaluated at all points.
// values[i][j] = basis[i] evaluated at point j.  Read-only once built,
// shareable across threads.
struct MonomialTable {
    std::vector<Monomial> basis;
    std::vector<std::vector<FieldElem>> values;
    size_t npoints() const { return values.empty() ? 0 : values[0].size(); }
};

MonomialTable monomial_table(const std::vector<Monomial>& basis,
                             const std::vector<std::vector<FieldElem>>& points,
                             const FieldPtr& field);

}  // namespace fqzeros

#endif

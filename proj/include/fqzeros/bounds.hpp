#ifndef FQZEROS_BOUNDS_HPP
#define FQZEROS_BOUNDS_HPP

#include "fqzeros/poly.hpp"
#include "fqzeros/projgeom.hpp"

namespace fqzeros {

struct BoundParams {
    long long q = 2;
    int d = 1;
    int m = 1;
    int r = 1;
};

// Tsfasman-Boguslavsky bound via the r-th descending-lex exponent tuple:
// p_{m-2j} + sum_{i=j}^m nu_i (p_{m-i} - p_{m-i-j}).
long long tb_bound_general(const BoundParams& p);

// Closed form (d-1)q^{m-1} + p_{m-2} + floor(q^{m-r}), valid for d >= 2 and
// r <= m+1 (the floor term is q^{m-r} for r <= m and 0 for r = m+1).
long long tb_bound_explicit(const BoundParams& p);

// Heijnen-Pellikaan affine bound via the r-th ascending-lex tuple of
// Lambda(d,m): q^m - (1 + sum alpha_j q^{m-j}).
long long hp_bound_general(const BoundParams& p);

// Closed form (d-1)q^{m-1} + floor(q^{m-r}), valid for r <= m+1, d < q.
long long hp_bound_explicit(const BoundParams& p);

// Serre's hypersurface bound d*q^{m-1} + p_{m-2} (sharp for d <= q+1).
long long serre_bound(long long q, int d, int m);

// Lachaud's bound delta * p_n for an equidimensional variety of degree
// delta and dimension n.
long long lachaud_bound(long long delta, int n, long long q);

// Conjectured maximum for r beyond m+1: H_r(d-1, m) + p_{m-1}.
long long conjecture_bound(const BoundParams& p);

// dim of the degree-d piece of the vanishing ideal of P^m(F_q), for
// d >= q+1, by the alternating double-sum formula.
long long ideal_dim_rd(long long q, int d, int m);

// Independent oracle: binom(m+d,d) minus the rank of the evaluation matrix
// of all degree-d monomials at the points of P^m(F_q).
long long ideal_dim_oracle(long long q, int d, int m);

// Whether the paper hypotheses hold for the supplied parameters; lets the
// CLI annotate tables instead of refusing.
struct BoundValidity {
    bool tbc_hypothesis;    // d < q-1 and r <= m+1
    bool hp_hypothesis;     // d < q
    bool serre_hypothesis;  // d <= q+1
};
BoundValidity bound_validity(const BoundParams& p);

long long binom(long long n, long long k);

}  // namespace fqzeros

#endif

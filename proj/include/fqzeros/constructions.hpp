#ifndef FQZEROS_CONSTRUCTIONS_HPP
#define FQZEROS_CONSTRUCTIONS_HPP

#include <optional>

#include "fqzeros/bounds.hpp"

namespace fqzeros {

// Zero-count certificate attached to a constructed family.  When the
// ambient space is small enough the constructor re-counts the zeros
// directly; above the cutoff the certificate is formula-only.
struct Certificate {
    bool counted = false;
    long long count = -1;  // -1 when formula-only
    long long expected = 0;
    bool match = false;
};

struct Construction {
    PolyFamily family;
    Certificate cert;
};

// Counting cutoff: certify by brute force when p_m is at most this.
inline constexpr long long kCertifyCap = 100'000;

// The product family F*_i = x_{i-1} * (x_m - lambda_1 x_0)...(x_m - lambda_{d-1} x_0),
// attaining (d-1)q^{m-1} + p_{m-2} + floor(q^{m-r}).  Default lambdas: the
// first d-1 field elements in index order.
Construction tb_maximal_family(const FieldPtr& field, const BoundParams& params,
                               std::optional<std::vector<FieldElem>> lambdas = {});

// Omit-one products of d+1 of the q+1 linear forms on P^1, attaining
// T_r(d,1) = d-r+1.  Forms are ordered by the normalized point order.
Construction line_family(const FieldPtr& field, int d, int r);

// r of the binom(m+1,2) Fermat polynomials x_i^q x_j - x_j^q x_i in
// (i,j)-lex order; degree q+1, vanishing on all of P^m(F_q).
Construction fermat_family(const FieldPtr& field, int m, int r);

}  // namespace fqzeros

#endif

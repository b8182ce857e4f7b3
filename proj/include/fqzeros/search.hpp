#ifndef FQZEROS_SEARCH_HPP
#define FQZEROS_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "fqzeros/bounds.hpp"
#include "fqzeros/closefam.hpp"
#include "fqzeros/constructions.hpp"

namespace fqzeros {

// Canonical enumeration of r-dimensional subspaces of F_q^M as reduced row
// echelon bases: pivot-column sets in lex order, free entries in odometer
// order.  Yields each subspace exactly once; the total equals the Gaussian
// binomial [M choose r]_q.
class SubspaceIter {
public:
    SubspaceIter(int M, int r, FieldPtr field);

    // Fills `rows` (r x M) with the next RREF basis; false when exhausted.
    bool next(std::vector<std::vector<FieldElem>>& rows);

    static long long gaussian_binomial(int M, int r, long long q);

private:
    int M_, r_;
    FieldPtr field_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_cells_;
    std::vector<uint16_t> odometer_;
    bool fresh_pivots_ = true;
    bool done_ = false;

    void collect_free_cells();
    bool advance_pivots();
};

enum class Verdict { Match, BelowBound, ExceedsBound, Vacuous };

struct Witness {
    std::vector<std::vector<FieldElem>> rows;  // coefficient rows over the basis
    bool has_common_linear_factor = false;
};

struct SearchReport {
    BoundParams params;
    std::string mode;
    long long spaces_examined = 0;
    long long max_count = -1;
    long long bound = 0;
    Verdict verdict = Verdict::Vacuous;
    std::vector<Witness> witnesses;
    bool all_witnesses_have_linear_factor = false;
    uint64_t seed = 0;  // random modes only
    long long best_directed_count = -1;  // conjecture probe only
};

const char* verdict_name(Verdict v);

struct SearchOptions {
    long long budget = 2'000'000'000;  // cap on subspaces x points
    int max_witnesses = 8;
    int threads = 0;  // 0 = FQZEROS_THREADS env or hardware concurrency
};

// Exhaustive maximum of count_proj_zeros over all r-dimensional subspaces
// of S_d, checked against tb_bound_general; witnesses carry the
// common-linear-factor flag of the maximum-attaining families.
SearchReport exhaustive_max(const FieldPtr& field, const BoundParams& params,
                            const SearchOptions& opts = {});

// Affine analogue: subspaces of the space of polynomials of degree <= d in
// m variables, counted over A^m(F_q), checked against hp_bound_general.
SearchReport exhaustive_affine_max(const FieldPtr& field, const BoundParams& params,
                                   const SearchOptions& opts = {});

struct SerreAuditReport {
    long long bound = 0;
    long long maximizer_count = 0;
    bool all_split_into_distinct_linear_forms = false;
    bool all_dual_points_collinear = false;
    long long spaces_examined = 0;
};

// For every degree-d hypersurface attaining the Serre bound: certify the
// split into d distinct linear forms with collinear dual points (the
// codimension-2 common subspace).
SerreAuditReport serre_sharpness_audit(const FieldPtr& field, int d, int m,
                                       const SearchOptions& opts = {});

enum class BoundKind { TB, Conjecture };

// Seeded random rank-r families; reports the maximum count found against
// the selected bound.  Deterministic under (seed, samples).
SearchReport random_probe(const FieldPtr& field, const BoundParams& params,
                          long long samples, uint64_t seed,
                          BoundKind bound_kind = BoundKind::TB,
                          const SearchOptions& opts = {});

// Conjecture range m+1 < r <= binom(m+d-1, m): random probe against the
// conjectured value plus a directed lower-bound pass over families
// x_0 * (homogenized degree-(d-1) affine systems).
SearchReport conjecture_probe(const FieldPtr& field, const BoundParams& params,
                              long long samples, uint64_t seed,
                              const SearchOptions& opts = {});

// Builds the family a coefficient-row witness denotes, over the
// monomials_desc_lex(m, d) basis.
PolyFamily family_from_rows(const FieldPtr& field, int m, int d,
                            const std::vector<std::vector<FieldElem>>& rows);

int resolve_thread_count(int requested);

}  // namespace fqzeros

#endif

#include "fqzeros/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

namespace fqzeros {

// ---------------------------------------------------------------------------
// Subspace enumeration

SubspaceIter::SubspaceIter(int M, int r, FieldPtr field)
    : M_(M), r_(r), field_(std::move(field)) {
    if (r < 1 || r > M) throw OutOfValidity("need 1 <= r <= M");
    pivots_.resize(size_t(r));
    for (int i = 0; i < r; ++i) pivots_[size_t(i)] = i;
    collect_free_cells();
}

void SubspaceIter::collect_free_cells() {
    free_cells_.clear();
    std::vector<bool> is_pivot(size_t(M_), false);
    for (int p : pivots_) is_pivot[size_t(p)] = true;
    for (int i = 0; i < r_; ++i)
        for (int j = pivots_[size_t(i)] + 1; j < M_; ++j)
            if (!is_pivot[size_t(j)]) free_cells_.emplace_back(i, j);
    odometer_.assign(free_cells_.size(), 0);
    fresh_pivots_ = true;
}

bool SubspaceIter::advance_pivots() {
    // next r-combination of [0, M) in lex order
    int i = r_ - 1;
    while (i >= 0 && pivots_[size_t(i)] == M_ - r_ + i) --i;
    if (i < 0) return false;
    ++pivots_[size_t(i)];
    for (int j = i + 1; j < r_; ++j) pivots_[size_t(j)] = pivots_[size_t(j - 1)] + 1;
    collect_free_cells();
    return true;
}

bool SubspaceIter::next(std::vector<std::vector<FieldElem>>& rows) {
    if (done_) return false;
    if (!fresh_pivots_) {
        // advance the odometer over free entries
        size_t k = 0;
        const uint32_t q = field_->q();
        while (k < odometer_.size()) {
            if (odometer_[k] + 1u < q) {
                ++odometer_[k];
                break;
            }
            odometer_[k] = 0;
            ++k;
        }
        if (k == odometer_.size()) {
            if (!advance_pivots()) {
                done_ = true;
                return false;
            }
        }
    }
    fresh_pivots_ = false;
    rows.assign(size_t(r_), std::vector<FieldElem>(size_t(M_), FieldElem{0}));
    for (int i = 0; i < r_; ++i) rows[size_t(i)][size_t(pivots_[size_t(i)])] = {1};
    for (size_t c = 0; c < free_cells_.size(); ++c)
        rows[size_t(free_cells_[c].first)][size_t(free_cells_[c].second)] = {odometer_[c]};
    return true;
}

long long SubspaceIter::gaussian_binomial(int M, int r, long long q) {
    if (r < 0 || r > M) return 0;
    // recurrence [M r] = [M-1 r-1] + q^r [M-1 r]
    std::vector<std::vector<long long>> g(size_t(M) + 1,
                                          std::vector<long long>(size_t(M) + 1, 0));
    for (int n = 0; n <= M; ++n) {
        g[size_t(n)][0] = 1;
        for (int k = 1; k <= n; ++k) {
            long long qk = 1;
            for (int i = 0; i < k; ++i) {
                if (qk > LLONG_MAX / q) throw Overflow("Gaussian binomial overflows");
                qk *= q;
            }
            long long a = g[size_t(n) - 1][size_t(k) - 1];
            long long b = g[size_t(n) - 1][size_t(k)];
            if (b != 0 && qk > LLONG_MAX / b) throw Overflow("Gaussian binomial overflows");
            long long prod = qk * b;
            if (a > LLONG_MAX - prod) throw Overflow("Gaussian binomial overflows");
            g[size_t(n)][size_t(k)] = a + prod;
        }
    }
    return g[size_t(M)][size_t(r)];
}

// ---------------------------------------------------------------------------
// Counting kernel: flat monomial-value table plus q x q mul/add tables.

namespace {

struct Kernel {
    int M = 0;
    size_t npoints = 0;
    uint32_t q = 0;
    std::vector<uint16_t> values;  // values[i * npoints + j]
    std::vector<uint16_t> mul, add;

    Kernel(const FieldPtr& field, const std::vector<Monomial>& basis,
           const std::vector<std::vector<FieldElem>>& points) {
        M = int(basis.size());
        npoints = points.size();
        q = field->q();
        values.assign(size_t(M) * npoints, 0);
        for (int i = 0; i < M; ++i)
            for (size_t j = 0; j < npoints; ++j) {
                FieldElem v{1};
                for (size_t k = 0; k < basis[size_t(i)].exps.size() && !v.is_zero(); ++k)
                    if (basis[size_t(i)].exps[k] != 0)
                        v = field->mul(v, field->pow(points[j][k], basis[size_t(i)].exps[k]));
                values[size_t(i) * npoints + j] = v.v;
            }
        mul.assign(size_t(q) * q, 0);
        add.assign(size_t(q) * q, 0);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                mul[size_t(a) * q + b] = field->mul({uint16_t(a)}, {uint16_t(b)}).v;
                add[size_t(a) * q + b] = field->add({uint16_t(a)}, {uint16_t(b)}).v;
            }
    }

    // rows given as (index, coefficient) sparse lists
    long long count_zeros(const std::vector<std::vector<std::pair<int, uint16_t>>>& rows) const {
        long long count = 0;
        for (size_t j = 0; j < npoints; ++j) {
            bool all_zero = true;
            for (const auto& row : rows) {
                uint32_t acc = 0;
                for (const auto& [i, c] : row)
                    acc = add[size_t(acc) * q +
                              mul[size_t(c) * q + values[size_t(i) * npoints + j]]];
                if (acc != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) ++count;
        }
        return count;
    }
};

std::vector<std::vector<std::pair<int, uint16_t>>> sparsify(
    const std::vector<std::vector<FieldElem>>& rows) {
    std::vector<std::vector<std::pair<int, uint16_t>>> out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (!rows[i][j].is_zero()) out[i].emplace_back(int(j), rows[i][j].v);
    return out;
}

struct ChunkResult {
    long long spaces = 0;
    long long max_count = -1;
    std::vector<std::vector<std::vector<FieldElem>>> witnesses;
};

// Exhausts the subspaces whose pivot set is the given combination.
ChunkResult scan_pivot_set(const FieldPtr& field, const Kernel& kernel, int M, int r,
                           const std::vector<int>& pivots, int max_witnesses) {
    ChunkResult res;
    std::vector<bool> is_pivot(size_t(M), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < r; ++i)
        for (int j = pivots[size_t(i)] + 1; j < M; ++j)
            if (!is_pivot[size_t(j)]) free_cells.emplace_back(i, j);

    const uint32_t q = field->q();
    std::vector<uint16_t> odo(free_cells.size(), 0);
    std::vector<std::vector<FieldElem>> rows(size_t(r),
                                             std::vector<FieldElem>(size_t(M), FieldElem{0}));
    for (int i = 0; i < r; ++i) rows[size_t(i)][size_t(pivots[size_t(i)])] = {1};
    while (true) {
        for (size_t c = 0; c < free_cells.size(); ++c)
            rows[size_t(free_cells[c].first)][size_t(free_cells[c].second)] = {odo[c]};
        long long cnt = kernel.count_zeros(sparsify(rows));
        ++res.spaces;
        if (cnt > res.max_count) {
            res.max_count = cnt;
            res.witnesses.clear();
        }
        if (cnt == res.max_count && int(res.witnesses.size()) < max_witnesses)
            res.witnesses.push_back(rows);
        size_t k = 0;
        while (k < odo.size()) {
            if (odo[k] + 1u < q) {
                ++odo[k];
                break;
            }
            odo[k] = 0;
            ++k;
        }
        if (k == odo.size()) break;
    }
    return res;
}

std::vector<std::vector<int>> pivot_combinations(int M, int r) {
    std::vector<std::vector<int>> out;
    auto cur = std::vector<int>(size_t(r));
    for (int i = 0; i < r; ++i) cur[size_t(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[size_t(i)] == M - r + i) --i;
        if (i < 0) break;
        ++cur[size_t(i)];
        for (int j = i + 1; j < r; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
    }
    return out;
}

// Runs the per-pivot-set scans, in parallel when allowed, merging results
// in pivot-set order so the report is deterministic regardless of workers.
ChunkResult scan_all(const FieldPtr& field, const Kernel& kernel, int M, int r,
                     int max_witnesses, int threads) {
    auto combos = pivot_combinations(M, r);
    std::vector<ChunkResult> results(combos.size());
    if (threads <= 1) {
        for (size_t t = 0; t < combos.size(); ++t)
            results[t] = scan_pivot_set(field, kernel, M, r, combos[t], max_witnesses);
    } else {
        std::atomic<size_t> next_task{0};
        auto worker = [&] {
            while (true) {
                size_t t = next_task.fetch_add(1);
                if (t >= combos.size()) return;
                results[t] = scan_pivot_set(field, kernel, M, r, combos[t], max_witnesses);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    ChunkResult merged;
    for (const ChunkResult& res : results) {
        merged.spaces += res.spaces;
        if (res.max_count > merged.max_count) {
            merged.max_count = res.max_count;
            merged.witnesses.clear();
        }
        if (res.max_count == merged.max_count)
            for (const auto& w : res.witnesses)
                if (int(merged.witnesses.size()) < max_witnesses)
                    merged.witnesses.push_back(w);
    }
    return merged;
}

// Gaussian binomial saturated at LLONG_MAX: an overflowing subspace count
// exceeds every representable budget anyway.
long long subspace_count_saturated(int M, int r, long long q) {
    try {
        return SubspaceIter::gaussian_binomial(M, r, q);
    } catch (const Overflow&) {
        return LLONG_MAX;
    }
}

bool family_has_common_linear_factor(const PolyFamily& fam) {
    std::vector<Poly> polys;
    for (const HomPoly& h : fam.members) polys.push_back(h.poly());
    Poly g = poly_gcd_many(polys);
    if (g.is_constant()) return false;
    for (const HomPoly& h : normalized_linear_forms(fam.field(), fam.m()))
        if (divide_exact(g, h.poly())) return true;
    return false;
}

Verdict verdict_of(long long max_count, long long bound) {
    if (max_count == bound) return Verdict::Match;
    return max_count < bound ? Verdict::BelowBound : Verdict::ExceedsBound;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "Match";
        case Verdict::BelowBound: return "BelowBound";
        case Verdict::ExceedsBound: return "ExceedsBound";
        case Verdict::Vacuous: return "Vacuous";
    }
    return "?";
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FQZEROS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

PolyFamily family_from_rows(const FieldPtr& field, int m, int d,
                            const std::vector<std::vector<FieldElem>>& rows) {
    auto basis = monomials_desc_lex(m, d);
    std::vector<HomPoly> members;
    for (const auto& row : rows) {
        Poly f(field, m + 1);
        for (size_t i = 0; i < basis.size(); ++i)
            if (!row[i].is_zero()) f.set_coeff(basis[i], row[i]);
        members.emplace_back(std::move(f), d);
    }
    return PolyFamily::make(std::move(members));
}

// ---------------------------------------------------------------------------
// Exhaustive searches

SearchReport exhaustive_max(const FieldPtr& field, const BoundParams& params,
                            const SearchOptions& opts) {
    const int m = params.m, d = params.d, r = params.r;
    const long long q = field->q();
    const int M = int(binom(m + d, d));
    if (r < 1 || r > M) throw OutOfValidity("need 1 <= r <= binom(m+d,d)");

    long long spaces = subspace_count_saturated(M, r, q);
    long long points = pk(m, q);
    if (spaces > opts.budget / points)
        throw BudgetExceeded("subspaces x points = " + std::to_string(spaces) + " x " +
                             std::to_string(points) + " exceeds the budget");

    auto basis = monomials_desc_lex(m, d);
    auto pts = proj_points(m, field);
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(p.coords);
    Kernel kernel(field, basis, raw);

    ChunkResult res = scan_all(field, kernel, M, r, opts.max_witnesses,
                               resolve_thread_count(opts.threads));

    SearchReport rep;
    rep.params = params;
    rep.params.q = q;
    rep.mode = "exhaustive";
    rep.spaces_examined = res.spaces;
    rep.max_count = res.max_count;
    rep.bound = tb_bound_general(rep.params);
    rep.verdict = verdict_of(rep.max_count, rep.bound);
    rep.all_witnesses_have_linear_factor = true;
    for (const auto& w : res.witnesses) {
        Witness wit;
        wit.rows = w;
        wit.has_common_linear_factor =
            family_has_common_linear_factor(family_from_rows(field, m, d, w));
        if (!wit.has_common_linear_factor) rep.all_witnesses_have_linear_factor = false;
        rep.witnesses.push_back(std::move(wit));
    }
    return rep;
}

SearchReport exhaustive_affine_max(const FieldPtr& field, const BoundParams& params,
                                   const SearchOptions& opts) {
    const int m = params.m, d = params.d, r = params.r;
    const long long q = field->q();
    if (d >= q) throw DegreeTooLarge("affine search requires d < q");
    auto basis = monomials_upto_desc_lex(m, d);
    const int M = int(basis.size());
    if (r < 1 || r > M) throw OutOfValidity("need 1 <= r <= dim of the ambient space");

    long long spaces = subspace_count_saturated(M, r, q);
    long long points = qpow_floor(m, q);
    if (spaces > opts.budget / std::max(points, 1LL))
        throw BudgetExceeded("subspaces x points exceeds the budget");

    auto pts = affine_points(m, field);
    Kernel kernel(field, basis, pts);
    ChunkResult res = scan_all(field, kernel, M, r, opts.max_witnesses,
                               resolve_thread_count(opts.threads));

    SearchReport rep;
    rep.params = params;
    rep.params.q = q;
    rep.mode = "affine";
    rep.spaces_examined = res.spaces;
    rep.max_count = res.max_count;
    rep.bound = hp_bound_general(rep.params);
    rep.verdict = verdict_of(rep.max_count, rep.bound);
    for (const auto& w : res.witnesses) rep.witnesses.push_back({w, false});
    return rep;
}

SerreAuditReport serre_sharpness_audit(const FieldPtr& field, int d, int m,
                                       const SearchOptions& opts) {
    const long long q = field->q();
    if (d > q + 1) throw OutOfValidity("Serre audit requires d <= q+1");
    SerreAuditReport rep;
    rep.bound = serre_bound(q, d, m);
    rep.all_split_into_distinct_linear_forms = true;
    rep.all_dual_points_collinear = true;

    const int M = int(binom(m + d, d));
    long long spaces = subspace_count_saturated(M, 1, q);
    long long points = pk(m, q);
    if (spaces > opts.budget / points) throw BudgetExceeded("audit exceeds the budget");

    auto basis = monomials_desc_lex(m, d);
    auto pts = proj_points(m, field);
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(p.coords);
    Kernel kernel(field, basis, raw);
    auto lin_basis = monomials_desc_lex(m, 1);

    SubspaceIter iter(M, 1, field);
    std::vector<std::vector<FieldElem>> rows;
    while (iter.next(rows)) {
        ++rep.spaces_examined;
        long long cnt = kernel.count_zeros(sparsify(rows));
        if (cnt != rep.bound) continue;
        ++rep.maximizer_count;
        PolyFamily fam = family_from_rows(field, m, d, rows);
        auto lf = extract_linear_factors(fam.members.front());
        bool splits = lf.cofactor.is_constant() && int(lf.factors.size()) == d;
        if (splits) {
            // distinct: the normalized factors must be pairwise different
            for (size_t i = 0; i < lf.factors.size() && splits; ++i)
                for (size_t j = i + 1; j < lf.factors.size(); ++j)
                    if (lf.factors[i] == lf.factors[j]) splits = false;
        }
        if (!splits) {
            rep.all_split_into_distinct_linear_forms = false;
            continue;
        }
        std::vector<std::vector<FieldElem>> dual;
        for (const HomPoly& h : lf.factors)
            dual.push_back(coeff_vector(h.poly(), lin_basis));
        if (matrix_rank(*field, std::move(dual)) > 2)
            rep.all_dual_points_collinear = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Randomized probes

namespace {

std::vector<std::vector<FieldElem>> random_rank_r_rows(std::mt19937_64& rng, int r,
                                                       int M, const Field& field) {
    const uint32_t q = field.q();
    while (true) {
        auto rows = std::vector<std::vector<FieldElem>>(
            size_t(r), std::vector<FieldElem>(size_t(M)));
        for (auto& row : rows)
            for (auto& c : row) c = {uint16_t(rng() % q)};
        if (matrix_rank(field, rows) == r) return rows;
    }
}

}  // namespace

SearchReport random_probe(const FieldPtr& field, const BoundParams& params,
                          long long samples, uint64_t seed, BoundKind bound_kind,
                          const SearchOptions& opts) {
    const int m = params.m, d = params.d, r = params.r;
    const long long q = field->q();
    const int M = int(binom(m + d, d));
    if (r < 1 || r > M) throw OutOfValidity("need 1 <= r <= binom(m+d,d)");

    SearchReport rep;
    rep.params = params;
    rep.params.q = q;
    rep.mode = "random";
    rep.seed = seed;
    rep.bound = (bound_kind == BoundKind::TB) ? tb_bound_general(rep.params)
                                              : conjecture_bound(rep.params);
    if (samples == 0) {
        rep.verdict = Verdict::Vacuous;
        return rep;
    }

    auto basis = monomials_desc_lex(m, d);
    auto pts = proj_points(m, field);
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(p.coords);
    Kernel kernel(field, basis, raw);

    std::mt19937_64 rng(seed);
    for (long long s = 0; s < samples; ++s) {
        auto rows = random_rank_r_rows(rng, r, M, *field);
        long long cnt = kernel.count_zeros(sparsify(rows));
        ++rep.spaces_examined;
        if (cnt > rep.max_count) {
            rep.max_count = cnt;
            rep.witnesses.clear();
        }
        if (cnt == rep.max_count && int(rep.witnesses.size()) < opts.max_witnesses)
            rep.witnesses.push_back({rows, false});
    }
    rep.verdict = rep.max_count > rep.bound ? Verdict::ExceedsBound : Verdict::BelowBound;
    if (rep.max_count == rep.bound) rep.verdict = Verdict::Match;
    return rep;
}

SearchReport conjecture_probe(const FieldPtr& field, const BoundParams& params,
                              long long samples, uint64_t seed,
                              const SearchOptions& opts) {
    const int m = params.m, d = params.d, r = params.r;
    const long long q = field->q();
    if (d <= 1 || d >= q) throw OutOfValidity("conjecture probe requires 1 < d < q");
    if (r <= m + 1 || r > binom(m + d - 1, m))
        throw OutOfValidity("conjecture probe requires m+1 < r <= binom(m+d-1, m)");

    SearchReport rep = random_probe(field, params, samples, seed, BoundKind::Conjecture, opts);
    rep.mode = "conjecture";

    // Directed lower-bound pass: families x_0 * F_i with F_i the degree-(d-1)
    // homogenizations of random independent affine systems of degree <= d-1.
    auto affine_basis = monomials_upto_desc_lex(m, d - 1);
    const int Ma = int(affine_basis.size());
    auto proj_basis = monomials_desc_lex(m, d);
    auto pts = proj_points(m, field);
    std::vector<std::vector<FieldElem>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(p.coords);
    Kernel kernel(field, proj_basis, raw);

    long long directed_samples = std::min<long long>(std::max<long long>(samples / 50, 1), 20000);
    if (r > Ma) directed_samples = 0;  // not enough affine dimensions
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (long long s = 0; s < directed_samples; ++s) {
        auto arows = random_rank_r_rows(rng, r, Ma, *field);
        // build x_0 * homogenization: affine monomial of degree t in x_1..x_m
        // maps to x_0^{d-t} * (shifted monomial)
        std::vector<std::vector<FieldElem>> rows(size_t(r),
            std::vector<FieldElem>(proj_basis.size(), FieldElem{0}));
        auto index_of = [&](const Monomial& mm) {
            auto it = std::lower_bound(proj_basis.begin(), proj_basis.end(), mm,
                                       [](const Monomial& a, const Monomial& b) {
                                           return DescLex{}(a, b);
                                       });
            return size_t(it - proj_basis.begin());
        };
        for (int i = 0; i < r; ++i) {
            for (int t = 0; t < Ma; ++t) {
                if (arows[size_t(i)][size_t(t)].is_zero()) continue;
                const Monomial& am = affine_basis[size_t(t)];
                Monomial full{std::vector<uint16_t>(size_t(m) + 1, 0)};
                int deg = am.degree();
                full.exps[0] = uint16_t(d - deg);
                for (int v = 0; v < m; ++v) full.exps[size_t(v) + 1] = am.exps[size_t(v)];
                rows[size_t(i)][index_of(full)] = arows[size_t(i)][size_t(t)];
            }
        }
        long long cnt = kernel.count_zeros(sparsify(rows));
        rep.best_directed_count = std::max(rep.best_directed_count, cnt);
        if (cnt > rep.max_count) rep.max_count = cnt;
    }
    if (rep.max_count > rep.bound)
        rep.verdict = Verdict::ExceedsBound;
    else
        rep.verdict = (rep.max_count == rep.bound) ? Verdict::Match : Verdict::BelowBound;
    return rep;
}

}  // namespace fqzeros

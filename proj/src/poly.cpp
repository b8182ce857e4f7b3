#include "fqzeros/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <sstream>

namespace fqzeros {

// ---------------------------------------------------------------------------
// Poly basics

Poly Poly::constant(FieldPtr field, int nvars, FieldElem c) {
    Poly p(std::move(field), nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial{std::vector<uint16_t>(size_t(nvars), 0)}, c);
    return p;
}

Poly Poly::monomial(FieldPtr field, Monomial m, FieldElem c) {
    Poly p(std::move(field), int(m.exps.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

Poly Poly::variable(FieldPtr field, int nvars, int i) {
    Monomial m{std::vector<uint16_t>(size_t(nvars), 0)};
    m.exps[size_t(i)] = 1;
    return monomial(std::move(field), std::move(m), {1});
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

const std::pair<const Monomial, FieldElem>& Poly::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.begin();
}

FieldElem Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem{0} : it->second;
}

void Poly::set_coeff(const Monomial& m, FieldElem c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(field_, o.field_);
    if (nvars_ != o.nvars_) throw MixedParameters("variable counts differ");
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.set_coeff(m, field_->add(out.coeff(m), c));
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = field_->neg(c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_field(field_, o.field_);
    if (nvars_ != o.nvars_) throw MixedParameters("variable counts differ");
    Poly out(field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{std::vector<uint16_t>(size_t(nvars_))};
            for (int i = 0; i < nvars_; ++i)
                m.exps[size_t(i)] = uint16_t(ma.exps[size_t(i)] + mb.exps[size_t(i)]);
            out.set_coeff(m, field_->add(out.coeff(m), field_->mul(ca, cb)));
        }
    }
    return out;
}

Poly Poly::scaled(FieldElem c) const {
    if (c.is_zero()) return zero(field_, nvars_);
    Poly out = *this;
    for (auto& [m, cc] : out.terms_) cc = field_->mul(cc, c);
    return out;
}

FieldElem Poly::eval(std::span<const FieldElem> point) const {
    if (int(point.size()) != nvars_) throw MixedParameters("coordinate count mismatch");
    FieldElem acc{0};
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < nvars_ && !t.is_zero(); ++i)
            if (m.exps[size_t(i)] != 0)
                t = field_->mul(t, field_->pow(point[size_t(i)], m.exps[size_t(i)]));
        acc = field_->add(acc, t);
    }
    return acc;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, int(m.exps[size_t(var)]));
    return d;
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    check_same_field(f.field(), g.field());
    Poly rem = f;
    Poly quot(f.field(), f.nvars());
    const auto& [gm, gc] = g.leading();
    const Field& F = *f.field();
    FieldElem gcinv = F.inv(gc);
    while (!rem.is_zero()) {
        const auto& [pm, pc] = rem.leading();
        Monomial t{std::vector<uint16_t>(size_t(f.nvars()))};
        for (int i = 0; i < f.nvars(); ++i) {
            if (pm.exps[size_t(i)] < gm.exps[size_t(i)]) return std::nullopt;
            t.exps[size_t(i)] = uint16_t(pm.exps[size_t(i)] - gm.exps[size_t(i)]);
        }
        Poly term = Poly::monomial(f.field(), t, F.mul(pc, gcinv));
        quot = quot + term;
        rem = rem - term * g;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Multivariate gcd

namespace {

Poly normalized(const Poly& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.field()->inv(f.leading().second));
}

// View f as univariate in its last variable: coefficient polynomials in one
// fewer variable, indexed by the last-variable exponent.
std::vector<Poly> coeffs_in_last(const Poly& f) {
    int n = f.nvars();
    std::vector<Poly> out(size_t(f.degree_in(n - 1)) + 1, Poly(f.field(), n - 1));
    for (const auto& [m, c] : f.terms()) {
        Monomial sub{std::vector<uint16_t>(m.exps.begin(), m.exps.end() - 1)};
        out[m.exps[size_t(n - 1)]].set_coeff(sub, c);
    }
    return out;
}

Poly from_coeffs_in_last(const FieldPtr& field, int nvars,
                         const std::vector<Poly>& coeffs) {
    Poly out(field, nvars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms()) {
            Monomial full{m.exps};
            full.exps.push_back(uint16_t(k));
            out.set_coeff(full, c);
        }
    }
    return out;
}

// Embed a polynomial in n-1 variables into n variables (last exponent 0).
Poly embed(const Poly& f, int nvars) {
    Poly out(f.field(), nvars);
    for (const auto& [m, c] : f.terms()) {
        Monomial full{m.exps};
        full.exps.resize(size_t(nvars), 0);
        out.set_coeff(full, c);
    }
    return out;
}

Poly gcd_rec(const Poly& f, const Poly& g);

// gcd of the univariate-view coefficients; a polynomial in n-1 variables.
Poly content_in_last(const Poly& f) {
    Poly c(f.field(), f.nvars() - 1);
    for (const Poly& coef : coeffs_in_last(f)) {
        if (coef.is_zero()) continue;
        c = c.is_zero() ? normalized(coef) : gcd_rec(c, coef);
        if (c.is_constant()) break;
    }
    return c;
}

Poly divide_by_content(const Poly& f, const Poly& content) {
    auto coeffs = coeffs_in_last(f);
    for (Poly& coef : coeffs) {
        if (coef.is_zero()) continue;
        auto q = divide_exact(coef, content);
        if (!q) throw Error("content does not divide its polynomial");
        coef = *q;
    }
    return from_coeffs_in_last(f.field(), f.nvars(), coeffs);
}

Poly primitive_part(const Poly& f) {
    if (f.is_zero()) return f;
    return normalized(divide_by_content(f, content_in_last(f)));
}

// Pseudo-remainder of f by g, both viewed as univariate in the last
// variable; requires deg(f) >= deg(g) in that variable.
Poly prem_last(Poly f, const Poly& g) {
    int n = f.nvars();
    int dg = g.degree_in(n - 1);
    auto gc = coeffs_in_last(g);
    Poly lcg = embed(gc.back(), n);
    while (!f.is_zero() && f.degree_in(n - 1) >= dg) {
        int df = f.degree_in(n - 1);
        auto fc = coeffs_in_last(f);
        Poly lcf = embed(fc.back(), n);
        Poly shift = Poly::monomial(f.field(), [&] {
            Monomial m{std::vector<uint16_t>(size_t(n), 0)};
            m.exps[size_t(n - 1)] = uint16_t(df - dg);
            return m;
        }(), {1});
        f = lcg * f - lcf * shift * g;
    }
    return f;
}

// Both inputs nonzero, same field and variable count.
Poly gcd_rec(const Poly& f, const Poly& g) {
    if (f.is_constant() || g.is_constant()) return Poly::constant(f.field(), f.nvars(), {1});
    int n = f.nvars();
    if (n == 1) {
        // univariate Euclid over F_q
        Poly a = f, b = g;
        while (!b.is_zero()) {
            // remainder of a by b
            Poly r = a;
            int db = b.degree_in(0);
            FieldElem lcinv = f.field()->inv(coeffs_in_last(b).back().coeff(Monomial{{}}));
            while (!r.is_zero() && r.degree_in(0) >= db) {
                int dr = r.degree_in(0);
                FieldElem lcr = r.leading().second;
                Monomial m{{uint16_t(dr - db)}};
                r = r - Poly::monomial(f.field(), m, f.field()->mul(lcr, lcinv)) * b;
            }
            a = b;
            b = r;
        }
        return normalized(a);
    }
    Poly cf = content_in_last(f);
    Poly cg = content_in_last(g);
    Poly c = (cf.is_constant() || cg.is_constant())
                 ? Poly::constant(f.field(), n - 1, {1})
                 : gcd_rec(cf, cg);
    Poly a = primitive_part(f);
    Poly b = primitive_part(g);
    if (a.degree_in(n - 1) < b.degree_in(n - 1)) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = primitive_part(prem_last(a, b));
        a = b;
        b = r;
    }
    return normalized(embed(c, n) * a);
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd of two zero polynomials");
    check_same_field(f.field(), g.field());
    if (f.nvars() != g.nvars()) throw MixedParameters("variable counts differ");
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    return gcd_rec(f, g);
}

Poly poly_gcd_many(const std::vector<Poly>& polys) {
    if (polys.empty()) throw AllZero("gcd of an empty family");
    Poly acc = polys.front().field() ? Poly::zero(polys.front().field(), polys.front().nvars())
                                     : Poly();
    bool any = false;
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        acc = any ? poly_gcd(acc, p) : normalized(p);
        any = true;
        if (acc.is_constant()) break;
    }
    if (!any) throw AllZero("gcd of all-zero family");
    return acc;
}

// ---------------------------------------------------------------------------
// HomPoly / PolyFamily

HomPoly::HomPoly(Poly poly, int d) : poly_(std::move(poly)), d_(d) {
    if (!poly_.is_zero()) {
        for (const auto& [m, c] : poly_.terms())
            if (m.degree() != d)
                throw MixedParameters("term of degree " + std::to_string(m.degree()) +
                                      " in a declared degree-" + std::to_string(d) +
                                      " homogeneous polynomial");
    }
}

HomPoly HomPoly::zero(FieldPtr field, int m, int d) {
    return HomPoly(Poly::zero(std::move(field), m + 1), d);
}

PolyFamily PolyFamily::make(std::vector<HomPoly> members) {
    if (members.empty()) throw MixedParameters("empty family");
    const HomPoly& first = members.front();
    for (const HomPoly& h : members) {
        check_same_field(h.field(), first.field());
        if (h.m() != first.m() || h.d() != first.d())
            throw MixedParameters("family members disagree on (m, d)");
    }
    PolyFamily fam;
    fam.rank = family_rank(members);
    fam.members = std::move(members);
    return fam;
}

// ---------------------------------------------------------------------------
// Tuple enumerations

namespace {

void gen_desc_lex(int vars_left, int budget, bool exact, std::vector<uint16_t>& prefix,
                  std::vector<Monomial>& out) {
    if (vars_left == 0) {
        if (!exact || budget == 0) {
            if (exact) out.push_back(Monomial{prefix});
        }
        if (!exact) out.push_back(Monomial{prefix});
        return;
    }
    if (vars_left == 1 && exact) {
        prefix.push_back(uint16_t(budget));
        out.push_back(Monomial{prefix});
        prefix.pop_back();
        return;
    }
    for (int a = budget; a >= 0; --a) {
        prefix.push_back(uint16_t(a));
        gen_desc_lex(vars_left - 1, budget - a, exact, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_desc_lex(int m, int d) {
    std::vector<Monomial> out;
    std::vector<uint16_t> prefix;
    gen_desc_lex(m + 1, d, /*exact=*/true, prefix, out);
    return out;
}

std::vector<Monomial> monomials_upto_desc_lex(int nvars, int d) {
    std::vector<Monomial> out;
    std::vector<uint16_t> prefix;
    gen_desc_lex(nvars, d, /*exact=*/false, prefix, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return DescLex{}(a, b); });
    return out;
}

NthMonomial nth_desc_lex(int m, int d, int r) {
    auto all = monomials_desc_lex(m, d);
    if (r < 1 || r > int(all.size()))
        throw IndexOutOfRange("r=" + std::to_string(r) + " outside [1, " +
                              std::to_string(all.size()) + "]");
    Monomial nu = all[size_t(r) - 1];
    int j = 0;
    for (int i = 0; i <= m; ++i) {
        if (nu.exps[size_t(i)] != 0) {
            j = i + 1;
            break;
        }
    }
    return {std::move(nu), j};
}

namespace {

constexpr long long kCountCap = LLONG_MAX / 4;

long long sat_add(long long a, long long b) {
    return (a > kCountCap - b) ? kCountCap : a + b;
}

// Number of tuples in [0, q-1]^vars with coordinate sum >= minsum.
// DP over remaining variables; saturating.
long long count_ge(int vars, long long minsum, long long q) {
    if (minsum <= 0) {
        long long total = 1;
        for (int i = 0; i < vars; ++i) {
            if (total > kCountCap / q) return kCountCap;
            total *= q;
        }
        return total;
    }
    if (vars == 0) return 0;
    long long total = 0;
    for (long long a = 0; a < q; ++a)
        total = sat_add(total, count_ge(vars - 1, minsum - a, q));
    return total;
}

}  // namespace

long long lambda_size(int d, int m, long long q) {
    return count_ge(m, m * (q - 1) - d, q);
}

std::vector<int> lambda_nth(int d, int m, long long q, long long r) {
    if (d < 1 || d >= q) throw DegreeTooLarge("Lambda(d,m) requires 1 <= d < q");
    if (r < 1 || r > lambda_size(d, m, q))
        throw IndexOutOfRange("r outside [1, |Lambda(d,m)|]");
    std::vector<int> out;
    long long need = m * (q - 1) - d;
    long long rem = r;
    for (int v = 0; v < m; ++v) {
        for (long long a = 0; a < q; ++a) {
            long long below = count_ge(m - v - 1, need - a, q);
            if (rem <= below) {
                out.push_back(int(a));
                need -= a;
                break;
            }
            rem -= below;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

int matrix_rank(const Field& field, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        FieldElem inv = field.inv(rows[rank][col]);
        for (size_t j = col; j < ncols; ++j) rows[rank][j] = field.mul(rows[rank][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            FieldElem f = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return int(rank);
}

std::vector<FieldElem> coeff_vector(const Poly& f, const std::vector<Monomial>& basis) {
    std::vector<FieldElem> out(basis.size(), FieldElem{0});
    size_t found = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        out[i] = f.coeff(basis[i]);
        if (!out[i].is_zero()) ++found;
    }
    size_t nonzero = 0;
    for (const auto& [m, c] : f.terms()) ++nonzero;
    if (found != nonzero)
        throw MixedParameters("polynomial has terms outside the given basis");
    return out;
}

int family_rank(const std::vector<HomPoly>& members) {
    if (members.empty()) return 0;
    auto basis = monomials_desc_lex(members[0].m(), members[0].d());
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(members.size());
    for (const HomPoly& h : members) rows.push_back(coeff_vector(h.poly(), basis));
    return matrix_rank(*members[0].field(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Text format

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool has_vars = m.degree() > 0;
        bool coeff_shown = (c != FieldElem{1}) || !has_vars;
        if (coeff_shown) os << f.field()->to_string(c);
        bool need_star = coeff_shown;
        for (int i = 0; i < f.nvars(); ++i) {
            int e = m.exps[size_t(i)];
            if (e == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << "x" << i;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string Poly::to_string() const { return poly_to_string(*this); }

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

}  // namespace

Poly poly_parse(const FieldPtr& field, int nvars, std::string_view text) {
    Poly out(field, nvars);
    std::string s(text);
    size_t pos = 0;
    bool any = false;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        std::string term = strip(std::string_view(s).substr(
            pos, next == std::string::npos ? std::string::npos : next - pos));
        pos = (next == std::string::npos) ? s.size() + 1 : next + 1;
        if (term.empty()) {
            if (any || next != std::string::npos)
                throw ParseError("empty term in polynomial: " + s);
            break;
        }
        any = true;
        FieldElem coeff{1};
        Monomial m{std::vector<uint16_t>(size_t(nvars), 0)};
        size_t fpos = 0;
        while (fpos < term.size()) {
            size_t star = term.find('*', fpos);
            std::string fac = term.substr(fpos, star == std::string::npos
                                                    ? std::string::npos
                                                    : star - fpos);
            fpos = (star == std::string::npos) ? term.size() : star + 1;
            if (fac.empty()) throw ParseError("empty factor in term: " + term);
            if (fac[0] == 'x' && fac.size() > 1 &&
                std::isdigit(static_cast<unsigned char>(fac[1]))) {
                size_t caret = fac.find('^');
                std::string idx_s = fac.substr(1, caret == std::string::npos
                                                      ? std::string::npos
                                                      : caret - 1);
                int var = 0, exp = 1;
                auto [p1, e1] = std::from_chars(idx_s.data(), idx_s.data() + idx_s.size(), var);
                if (e1 != std::errc{} || p1 != idx_s.data() + idx_s.size())
                    throw ParseError("bad variable: " + fac);
                if (var < 0 || var >= nvars)
                    throw ParseError("variable index out of range: " + fac);
                if (caret != std::string::npos) {
                    std::string exp_s = fac.substr(caret + 1);
                    auto [p2, e2] =
                        std::from_chars(exp_s.data(), exp_s.data() + exp_s.size(), exp);
                    if (e2 != std::errc{} || p2 != exp_s.data() + exp_s.size() || exp < 0)
                        throw ParseError("bad exponent: " + fac);
                }
                m.exps[size_t(var)] = uint16_t(m.exps[size_t(var)] + exp);
            } else {
                coeff = field->mul(coeff, field->parse(fac));
            }
        }
        out.set_coeff(m, field->add(out.coeff(m), coeff));
    }
    return out;
}

}  // namespace fqzeros

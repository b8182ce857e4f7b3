#ifndef FQZEROS_POLY_HPP
#define FQZEROS_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqzeros/gf.hpp"

namespace fqzeros {

// Exponent vector of a monomial.  The number of entries is the number of
// variables of the ambient polynomial ring.
struct Monomial {
    std::vector<uint16_t> exps;

    int degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps == b.exps;
    }
};

// Descending lexicographic order on exponent vectors: the ordering fixed for
// the tuple enumerations and for leading terms (gcd normalization).
struct DescLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps > b.exps;  // map's "least" key = lex-largest monomial
    }
};

// Sparse multivariate polynomial over F_q.  Not necessarily homogeneous:
// dehomogenized and affine polynomials use the same representation.
// Invariant: every stored coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Poly zero(FieldPtr field, int nvars) { return Poly(std::move(field), nvars); }
    static Poly constant(FieldPtr field, int nvars, FieldElem c);
    static Poly monomial(FieldPtr field, Monomial m, FieldElem c);
    // The variable x_i as a polynomial in nvars variables.
    static Poly variable(FieldPtr field, int nvars, int i);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return total_degree() <= 0; }
    size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, FieldElem, DescLex>& terms() const { return terms_; }
    // Leading term under descending lex; requires a nonzero polynomial.
    const std::pair<const Monomial, FieldElem>& leading() const;
    FieldElem coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, FieldElem c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FieldElem c) const;

    FieldElem eval(std::span<const FieldElem> point) const;

    // Degree in a single variable.
    int degree_in(int var) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    FieldPtr field_;
    int nvars_ = 0;
    std::map<Monomial, FieldElem, DescLex> terms_;
};

// Division with remainder by a single divisor under descending lex;
// returns the quotient iff the remainder is zero.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// Multivariate gcd by recursive content / primitive-part reduction with a
// primitive polynomial remainder sequence.  Result is normalized so its
// descending-lex leading coefficient is 1.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_gcd_many(const std::vector<Poly>& polys);

// ---------------------------------------------------------------------------
// Homogeneous polynomials and families

// Homogeneous polynomial of declared degree d in m+1 variables.  The zero
// polynomial carries its ambient (m, d) so family operations stay typed.
class HomPoly {
public:
    HomPoly() = default;
    HomPoly(Poly poly, int d);
    static HomPoly zero(FieldPtr field, int m, int d);

    const Poly& poly() const { return poly_; }
    int m() const { return poly_.nvars() - 1; }
    int d() const { return d_; }
    bool is_zero() const { return poly_.is_zero(); }
    const FieldPtr& field() const { return poly_.field(); }

    FieldElem eval(std::span<const FieldElem> point) const { return poly_.eval(point); }
    std::string to_string() const { return poly_.to_string(); }

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.d_ == b.d_ && a.poly_ == b.poly_;
    }

private:
    Poly poly_;
    int d_ = 0;
};

// Ordered family of r homogeneous polynomials of common (m, d), with its
// F_q-rank over the monomial basis.
struct PolyFamily {
    std::vector<HomPoly> members;
    int rank = 0;

    static PolyFamily make(std::vector<HomPoly> members);
    int m() const { return members.at(0).m(); }
    int d() const { return members.at(0).d(); }
    int r() const { return int(members.size()); }
    const FieldPtr& field() const { return members.at(0).field(); }
};

// ---------------------------------------------------------------------------
// Tuple enumerations

// All exponent vectors of degree d in m+1 variables, strictly descending lex.
std::vector<Monomial> monomials_desc_lex(int m, int d);

// The r-th element (1-based) of monomials_desc_lex(m, d), plus the index
// j = min{i : nu_i != 0} (1-based, as in the bound formulas).
struct NthMonomial {
    Monomial nu;
    int j;
};
NthMonomial nth_desc_lex(int m, int d, int r);

// All monomials of total degree <= d in nvars variables, descending lex with
// higher degree first within equal prefixes (plain desc-lex over padded
// exponent vectors).  Used as the affine ambient basis.
std::vector<Monomial> monomials_upto_desc_lex(int nvars, int d);

// The r-th tuple (1-based, ascending lex) of Lambda(d, m): m-tuples with
// coordinates in [0, q-1] summing to at least m(q-1) - d.
std::vector<int> lambda_nth(int d, int m, long long q, long long r);
long long lambda_size(int d, int m, long long q);

// ---------------------------------------------------------------------------
// Linear algebra over F_q

// F_q-rank of the r x M coefficient matrix of the family over the
// monomials_desc_lex basis, by Gaussian elimination.
int family_rank(const std::vector<HomPoly>& members);

// Rank of an arbitrary matrix of field elements (rows of equal length).
int matrix_rank(const Field& field, std::vector<std::vector<FieldElem>> rows);

// Dense coefficient vector of f over the given basis; throws MixedParameters
// if f has a term outside the basis.
std::vector<FieldElem> coeff_vector(const Poly& f, const std::vector<Monomial>& basis);

// ---------------------------------------------------------------------------
// Text format
//
// Terms joined by " + ", each "c*x0^a0*x1^a1*..." with unit coefficients and
// zero exponents elidable; whitespace-tolerant.

std::string poly_to_string(const Poly& f);
Poly poly_parse(const FieldPtr& field, int nvars, std::string_view text);

}  // namespace fqzeros

#endif

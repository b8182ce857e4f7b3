#ifndef FQZEROS_CLOSEFAM_HPP
#define FQZEROS_CLOSEFAM_HPP

#include <optional>
#include <set>

#include "fqzeros/poly.hpp"

namespace fqzeros {

// ---------------------------------------------------------------------------
// Set-level close families

// Family of r distinct k-subsets of a ground set {0,...,n-1}.
struct SetFamily {
    int n = 0;
    std::vector<std::set<int>> members;

    int k() const { return members.empty() ? 0 : int(members.front().size()); }
    int r() const { return int(members.size()); }
};

// All pairwise intersections have size k-1.
bool set_is_close(const SetFamily& fam);

struct SetStructure {
    int common_size = 0;
    // When the total intersection is empty and 1 < k < n: the recovered
    // distinct elements nu_1..nu_r with members = omit-one sets.
    std::optional<std::vector<int>> nu;
};

// Size dichotomy of the total intersection (k-1 or k-r+1 for r >= 2; k for
// the degenerate r = 1) and recovery of the omit-one structure.
SetStructure set_structure(const SetFamily& fam);

// ---------------------------------------------------------------------------
// Polynomial close families

// Every pairwise gcd has degree exactly k-1 (k the common degree).
bool poly_is_close(const PolyFamily& fam);

struct PolyStructure {
    int k = 0;
    // For k > 1: pairwise non-proportional linear forms H_1..H_r with
    // member_i = product of all H_j except H_i.
    std::optional<std::vector<HomPoly>> forms;
};

// Structure of a coprime close family: k = 1 or k = r-1, with the omit-one
// product shape recovered by trial division when k > 1.  A family violating
// the dichotomy raises StructureViolation.
PolyStructure poly_structure(const PolyFamily& fam);

enum class CorrelationCase { Case1, Case2, Case3 };

// The gcd data of a family: overall gcd degree b, pairwise gcd degrees
// b_ij, cofactors G_i with F_i = G * G_i, and the case classification.
struct CorrelationProfile {
    int b = 0;
    HomPoly overall_gcd;
    std::vector<std::vector<int>> pairwise;  // b_ij; diagonal holds d
    std::vector<HomPoly> cofactors;
    CorrelationCase kase = CorrelationCase::Case1;
    // Case 3 only: the subcase per the structure theorem applied to the
    // cofactors, b = d-1 or b = d-r+1.
    std::optional<int> case3_b;
};

CorrelationProfile correlation_profile(const PolyFamily& fam);

const char* correlation_case_name(CorrelationCase c);

// All p_m pairwise non-proportional linear forms in m+1 variables,
// normalized like dual points (first nonzero coefficient 1).
std::vector<HomPoly> normalized_linear_forms(const FieldPtr& field, int m);

// Splits f into normalized linear factors by repeated trial division;
// returns the factors and the (constant or not) remaining cofactor.
struct LinearFactorization {
    std::vector<HomPoly> factors;
    Poly cofactor;  // what is left after dividing out all linear factors
};
LinearFactorization extract_linear_factors(const HomPoly& f);

}  // namespace fqzeros

#endif

#ifndef FQZEROS_GF_HPP
#define FQZEROS_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fqzeros/errors.hpp"

namespace fqzeros {

// An element of F_q, identified by its index in [0, q).  The index encodes
// the base-p digit vector of the element's coordinates over F_p in the
// modulus basis.  Index 0 is the additive identity, index 1 the
// multiplicative identity.
struct FieldElem {
    uint16_t v = 0;
    friend bool operator==(FieldElem a, FieldElem b) { return a.v == b.v; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.v != b.v; }
    friend bool operator<(FieldElem a, FieldElem b) { return a.v < b.v; }
    bool is_zero() const { return v == 0; }
};

// A concrete finite field F_q, q = p^e, q <= 2^16.  Immutable after
// construction; all arithmetic operations are pure and thread-safe.
//
// Construction is deterministic: the modulus is the lexicographically least
// monic irreducible polynomial of degree e over F_p (coefficient lists
// compared low-to-high), and the generator is the least index of
// multiplicative order q-1.
class Field {
public:
    static std::shared_ptr<const Field> make(uint32_t q);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    // Monic modulus polynomial, coefficients low-to-high, length e+1.
    const std::vector<uint16_t>& modulus() const { return modulus_; }
    FieldElem generator() const { return {gen_}; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem elem(uint32_t index) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, long long k) const;

    // Discrete log base the generator; requires a != 0.
    uint32_t log(FieldElem a) const;
    FieldElem antilog(uint32_t k) const { return {exp_[k % (q_ - 1)]}; }

    // All q elements in index order.
    std::vector<FieldElem> elements() const;

    // Multiplicative order of a nonzero element.
    uint32_t mult_order(FieldElem a) const;

    // Text format: prime fields print as integers 0..p-1; extension fields
    // print nonzero elements as "g^k" (with "1" for g^0) and zero as "0".
    // Parsing accepts both forms for any field.
    std::string to_string(FieldElem a) const;
    FieldElem parse(std::string_view s) const;

    bool same_as(const Field& other) const {
        return q_ == other.q_;  // construction is deterministic per q
    }

private:
    Field() = default;

    uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<uint16_t> modulus_;
    uint16_t gen_ = 0;
    std::vector<uint16_t> log_;   // size q, log_[0] unused
    std::vector<uint16_t> exp_;   // size q-1, exp_[k] = g^k
    std::vector<uint16_t> add_;   // q*q table when q <= kAddTableCap, else empty
    static constexpr uint32_t kAddTableCap = 1024;

    uint16_t add_digitwise(uint16_t a, uint16_t b) const;
    uint16_t mul_poly(uint16_t a, uint16_t b) const;  // table-free, used at setup
};

using FieldPtr = std::shared_ptr<const Field>;

// Throws FieldMismatch unless both pointers denote the same field.
void check_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace fqzeros

#endif

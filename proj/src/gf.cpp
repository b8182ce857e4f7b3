#include "fqzeros/gf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace fqzeros {

namespace {

// Factors q as p^e with p prime, or throws NotPrimePower.
void factor_prime_power(uint32_t q, uint32_t& p, uint32_t& e) {
    if (q < 2) throw NotPrimePower("q must be at least 2, got " + std::to_string(q));
    uint32_t n = q;
    for (uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            p = f;
            e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            if (n != 1)
                throw NotPrimePower(std::to_string(q) + " is not a prime power");
            return;
        }
    }
    p = q;
    e = 1;
}

// Multiplies two polynomials over F_p given as coefficient vectors
// (low-to-high) and reduces by the monic modulus.
std::vector<uint16_t> polymul_mod(const std::vector<uint16_t>& a,
                                  const std::vector<uint16_t>& b,
                                  const std::vector<uint16_t>& mod, uint32_t p) {
    std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + uint32_t(a[i]) * b[j]) % p;
    const size_t e = mod.size() - 1;
    for (size_t i = prod.size(); i-- > e;) {
        uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        // subtract c * x^(i-e) * mod
        for (size_t j = 0; j < e; ++j) {
            uint32_t sub = (c * mod[j]) % p;
            prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
        }
    }
    std::vector<uint16_t> out(e, 0);
    for (size_t i = 0; i < e && i < prod.size(); ++i) out[i] = uint16_t(prod[i]);
    return out;
}

uint16_t poly_to_index(const std::vector<uint16_t>& c, uint32_t p) {
    uint32_t idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return uint16_t(idx);
}

std::vector<uint16_t> index_to_poly(uint32_t idx, uint32_t p, uint32_t e) {
    std::vector<uint16_t> c(e, 0);
    for (uint32_t i = 0; i < e; ++i) {
        c[i] = uint16_t(idx % p);
        idx /= p;
    }
    return c;
}

// Plain univariate multiplication over F_p, no reduction.
std::vector<uint16_t> polymul(const std::vector<uint16_t>& a,
                              const std::vector<uint16_t>& b, uint32_t p) {
    std::vector<uint16_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint16_t((prod[i + j] + uint32_t(a[i]) * b[j]) % p);
    return prod;
}

// Remainder of a monic-or-not division: returns a mod b over F_p.
// b must be nonzero; leading coefficient of b is inverted mod p.
std::vector<uint16_t> polyrem(std::vector<uint16_t> a,
                              const std::vector<uint16_t>& b, uint32_t p) {
    auto degree = [](const std::vector<uint16_t>& v) {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return int(i);
        return -1;
    };
    int db = degree(b);
    // inverse of lc(b) mod p by Fermat
    uint32_t lc = b[size_t(db)], lcinv = 1;
    for (uint32_t k = 0; k < p - 2; ++k) lcinv = (lcinv * lc) % p;
    int da = degree(a);
    while (da >= db) {
        uint32_t c = (uint32_t(a[size_t(da)]) * lcinv) % p;
        for (int j = 0; j <= db; ++j) {
            uint32_t sub = (c * b[size_t(j)]) % p;
            a[size_t(da - db + j)] =
                uint16_t((a[size_t(da - db + j)] + p - sub) % p);
        }
        da = degree(a);
    }
    return a;
}

bool poly_is_zero(const std::vector<uint16_t>& v) {
    return std::all_of(v.begin(), v.end(), [](uint16_t c) { return c == 0; });
}

// Irreducibility over F_p by trial division against all monic polynomials
// of degree 1..e/2.
bool irreducible(const std::vector<uint16_t>& f, uint32_t p, uint32_t e) {
    for (uint32_t deg = 1; 2 * deg <= e; ++deg) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint16_t> g = index_to_poly(uint32_t(idx), p, deg);
            g.push_back(1);  // monic
            if (poly_is_zero(polyrem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(uint32_t q) {
    if (q > (1u << 16))
        throw NotPrimePower("q exceeds the 2^16 cap: " + std::to_string(q));
    uint32_t p, e;
    factor_prime_power(q, p, e);

    auto field = std::shared_ptr<Field>(new Field());
    Field& f = *field;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;

    // Lexicographically least monic irreducible modulus (coefficient lists
    // compared low-to-high).  For e = 1 the convention is the trivial x - 0.
    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        uint64_t count = 1;
        for (uint32_t i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (uint64_t idx = 0; idx < count && !found; ++idx) {
            // low-to-high lex order: vary the low coefficient slowest
            std::vector<uint16_t> c(e, 0);
            uint64_t t = idx;
            for (size_t i = e; i-- > 0;) {
                c[i] = uint16_t(t % p);
                t /= p;
            }
            std::vector<uint16_t> cand = c;
            cand.push_back(1);
            if (irreducible(cand, p, e)) {
                f.modulus_ = cand;
                found = true;
            }
        }
        if (!found) throw Error("no irreducible modulus found");  // unreachable
    }

    // Least primitive element, then log/antilog tables.
    f.log_.assign(q, 0);
    f.exp_.assign(q - 1, 0);
    auto mul_raw = [&](uint16_t a, uint16_t b) {
        if (e == 1) return uint16_t((uint32_t(a) * b) % p);
        return poly_to_index(polymul_mod(index_to_poly(a, p, e),
                                         index_to_poly(b, p, e), f.modulus_, p),
                             p);
    };
    for (uint32_t g = 2; g < q; ++g) {
        uint16_t x = uint16_t(g);
        uint32_t ord = 1;
        while (x != 1) {
            x = mul_raw(x, uint16_t(g));
            ++ord;
        }
        if (ord == q - 1) {
            f.gen_ = uint16_t(g);
            break;
        }
    }
    if (q == 2) f.gen_ = 1;
    if (f.gen_ == 0) throw Error("no primitive element found");  // unreachable
    uint16_t x = 1;
    for (uint32_t k = 0; k < q - 1; ++k) {
        f.exp_[k] = x;
        f.log_[x] = uint16_t(k);
        x = mul_raw(x, f.gen_);
    }

    if (q <= kAddTableCap) {
        f.add_.assign(size_t(q) * q, 0);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                f.add_[size_t(a) * q + b] =
                    f.add_digitwise(uint16_t(a), uint16_t(b));
    }
    return field;
}

uint16_t Field::add_digitwise(uint16_t a, uint16_t b) const {
    if (e_ == 1) return uint16_t((uint32_t(a) + b) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a = uint16_t(a / p_);
        b = uint16_t(b / p_);
        mult *= p_;
    }
    return uint16_t(out);
}

FieldElem Field::elem(uint32_t index) const {
    if (index >= q_)
        throw IndexOutOfRange("element index " + std::to_string(index) +
                              " out of range for q=" + std::to_string(q_));
    return {uint16_t(index)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (!add_.empty()) return {add_[size_t(a.v) * q_ + b.v]};
    return {add_digitwise(a.v, b.v)};
}

FieldElem Field::neg(FieldElem a) const {
    if (e_ == 1) return {uint16_t(a.v == 0 ? 0 : p_ - a.v)};
    uint32_t out = 0, mult = 1;
    uint16_t x = a.v;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        x = uint16_t(x / p_);
        mult *= p_;
    }
    return {uint16_t(out)};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    uint32_t k = uint32_t(log_[a.v]) + log_[b.v];
    if (k >= q_ - 1) k -= q_ - 1;
    return {exp_[k]};
}

FieldElem Field::inv(FieldElem a) const {
    if (a.v == 0) throw DivisionByZero("inverse of zero");
    uint32_t k = log_[a.v];
    return {exp_[(q_ - 1 - k) % (q_ - 1)]};
}

FieldElem Field::pow(FieldElem a, long long k) const {
    if (a.v == 0) {
        if (k < 0) throw DivisionByZero("0 to a negative power");
        return k == 0 ? one() : zero();
    }
    long long m = q_ - 1;
    long long kk = ((k % m) + m) % m;
    return {exp_[size_t((uint64_t(log_[a.v]) * uint64_t(kk)) % uint64_t(m))]};
}

uint32_t Field::log(FieldElem a) const {
    if (a.v == 0) throw DivisionByZero("log of zero");
    return log_[a.v];
}

std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> out(q_);
    for (uint32_t i = 0; i < q_; ++i) out[i] = {uint16_t(i)};
    return out;
}

uint32_t Field::mult_order(FieldElem a) const {
    if (a.v == 0) throw DivisionByZero("order of zero");
    uint32_t k = log_[a.v];
    uint32_t n = q_ - 1;
    // order = (q-1)/gcd(k, q-1)
    uint32_t x = k, y = n;
    while (x) {
        uint32_t t = y % x;
        y = x;
        x = t;
    }
    return n / y;
}

std::string Field::to_string(FieldElem a) const {
    if (e_ == 1) return std::to_string(a.v);
    if (a.v == 0) return "0";
    uint32_t k = log_[a.v];
    if (k == 0) return "1";
    return "g^" + std::to_string(k);
}

FieldElem Field::parse(std::string_view s) const {
    if (s.empty()) throw ParseError("empty field element");
    if (s[0] == 'g') {
        uint32_t k = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw ParseError("bad field element: " + std::string(s));
            auto rest = s.substr(2);
            uint32_t val = 0;
            auto [ptr, ec] =
                std::from_chars(rest.data(), rest.data() + rest.size(), val);
            if (ec != std::errc{} || ptr != rest.data() + rest.size())
                throw ParseError("bad exponent in field element: " + std::string(s));
            k = val;
        }
        return antilog(k);
    }
    uint32_t val = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), val);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad field element: " + std::string(s));
    if (e_ == 1) return {uint16_t(val % p_)};
    // integers parse into the prime subfield: n = 1 + 1 + ... (n times)
    FieldElem out = zero();
    for (uint32_t i = 0; i < val % p_; ++i) out = add(out, one());
    return out;
}

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        throw FieldMismatch("operands belong to different fields");
}

}  // namespace fqzeros

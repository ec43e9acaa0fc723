#ifndef DEEPHOLE_FIELD_HPP
#define DEEPHOLE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deephole/error.hpp"

namespace deephole {

// Canonical integer encoding of a field element: enc(x) = sum c_i p^i for the
// coefficient vector of x over GF(p). Every algorithm in this library works
// on encodings; FieldElement adds an owner check for user-facing code.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m). Immutable after construction and safe to share across threads.
class Field {
public:
    // `modulus` is the coefficient vector c_0..c_m (low to high, c_m = 1) of
    // the defining polynomial. Omitted for m > 1 means the least monic
    // irreducible by ascending enc of (c_0..c_{m-1}).
    static FieldPtr make(std::uint32_t p, unsigned m = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    // Accepts `q=<p>`, `q=<p>^<m>[:mod=<c0>,...,<cm>]`, a bare prime power
    // such as `8`, or `2^3`. The leading `q=` is optional.
    static FieldPtr parse(std::string_view text);

    std::uint32_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return m_ == 1; }
    // Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    // Round-trips through parse().
    std::string to_string() const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem minus_one() const noexcept { return p_ - 1; }
    bool contains(Elem x) const noexcept { return x < q_; }
    // The image of an integer under Z -> GF(p) -> GF(q).
    Elem from_int(long long v) const noexcept;

    Elem add(Elem x, Elem y) const noexcept;
    Elem sub(Elem x, Elem y) const noexcept;
    Elem neg(Elem x) const noexcept;
    Elem mul(Elem x, Elem y) const noexcept;
    Elem inv(Elem x) const;  // throws DivisionByZero
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t e) const noexcept;

    // Quadratic character: 0, 1 (nonzero square) or -1. Requires odd p.
    int eta(Elem x) const;
    // 0 counts as a square.
    bool is_square(Elem x) const;

    // All q elements in increasing encoding order.
    std::vector<Elem> elements() const;

    // Coefficients over GF(p), low to high, length m.
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(const std::vector<std::uint32_t>& digits) const;

private:
    Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

    Elem mul_slow(Elem x, Elem y) const noexcept;
    Elem add_slow(Elem x, Elem y) const noexcept;
    Elem neg_slow(Elem x) const noexcept;

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    // Dense tables for small extension fields; empty otherwise.
    std::vector<Elem> add_table_;
    std::vector<Elem> mul_table_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> inv_table_;
};

bool is_prime(std::uint64_t n) noexcept;

// Monic polynomial over GF(p) (low-to-high coefficients, leading 1) is
// irreducible. Exhaustive search over monic divisors of degree <= m/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Element bound to its field. Arithmetic between elements of different
// fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem enc() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    int eta() const { return field_->eta(value_); }

    bool operator==(const FieldElement& rhs) const;

private:
    void check_same(const FieldElement& rhs) const;

    FieldPtr field_;
    Elem value_;
};

void require_same_field(const Field& a, const Field& b);

}  // namespace deephole

#endif

#ifndef DEEPHOLE_POLY_HPP
#define DEEPHOLE_POLY_HPP

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deephole/field.hpp"

namespace deephole {

// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Dense univariate polynomial over a Field, coefficients low to high.
// Always canonical: the highest stored coefficient is nonzero, so equality
// is a plain comparison of coefficient vectors.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::vector<Elem> coeffs);

    static Polynomial constant(FieldPtr field, Elem c);
    // c * x^degree
    static Polynomial monomial(FieldPtr field, Elem c, std::size_t degree);
    // Comma separated encodings, low to high ("6,0,0,1" is x^3+6 over GF(7)).
    static Polynomial parse(FieldPtr field, std::string_view text);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    int degree() const noexcept { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    // Horner evaluation on a raw encoding.
    Elem operator()(Elem x) const noexcept;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(Elem c) const;
    // Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    // p(x + c)
    Polynomial shifted(Elem c) const;
    // Drops every coefficient of degree >= k.
    Polynomial truncated(std::size_t k) const;

    bool operator==(const Polynomial& rhs) const;

    std::string to_string() const;

private:
    void canonicalize() noexcept;
    void check_same(const Polynomial& rhs) const;

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

FieldElement poly_eval(const Polynomial& f, const FieldElement& x);

// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
Polynomial interpolate(const FieldPtr& field, std::span<const Elem> xs, std::span<const Elem> ys);
Polynomial interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);

// Monic product of (x - r) over the multiset `roots`.
Polynomial from_roots(const FieldPtr& field, std::span<const Elem> roots);

// Elements of `set` (in its order) where f vanishes. Throws ZeroPolynomial.
std::vector<Elem> zeros_on_set(const Polynomial& f, std::span<const Elem> set);

namespace detail {

// Allocation-light interpolation for hot loops. `xs` distinct (unchecked).
// `out` receives coefficients (length xs.size(), not canonicalised);
// `scratch` is reused across calls.
void interpolate_raw(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys, std::vector<Elem>& out,
                     std::vector<Elem>& scratch);

inline Elem horner(const Field& f, std::span<const Elem> c, Elem x) noexcept {
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
}

}  // namespace detail

}  // namespace deephole

#endif

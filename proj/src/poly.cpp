#include "deephole/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace deephole {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(Errc::InvalidInput, "null field");
}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error(Errc::InvalidInput, "null field");
    for (Elem c : coeffs_) {
        if (!field_->contains(c)) {
            throw Error(Errc::InvalidInput, "coefficient " + std::to_string(c) + " outside " + field_->to_string());
        }
    }
    canonicalize();
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::parse(FieldPtr field, std::string_view text) {
    std::vector<Elem> coeffs;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view tok = text.substr(0, comma);
        Elem v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
            throw Error(Errc::InvalidInput, "bad polynomial coefficient '" + std::string(tok) + "'");
        }
        coeffs.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::canonicalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& rhs) const { require_same_field(*field_, *rhs.field_); }

Elem Polynomial::operator()(Elem x) const noexcept { return detail::horner(*field_, coeffs_, x); }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same(rhs);
    std::vector<Elem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_same(rhs);
    std::vector<Elem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    std::vector<Elem> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(field_->minus_one()); }

Polynomial Polynomial::scaled(Elem c) const {
    std::vector<Elem> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const Field& f = *field_;
    std::vector<Elem> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {Polynomial(field_), *this};
    std::vector<Elem> quot(rem.size() - dd, 0);
    const Elem lead_inv = f.inv(divisor.leading());
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Elem c = f.mul(rem[i], lead_inv);
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, divisor.coeffs_[j]));
        }
    }
    rem.resize(dd);
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::shifted(Elem c) const {
    // Horner in the polynomial ring: ((a_n)(x+c) + a_{n-1})(x+c) + ...
    const Field& f = *field_;
    std::vector<Elem> acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        // acc <- acc * (x + c) + a_i
        acc.push_back(0);
        for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = f.add(acc[j - 1], f.mul(acc[j], c));
        acc[0] = f.add(f.mul(acc[0], c), coeffs_[i]);
    }
    return Polynomial(field_, std::move(acc));
}

Polynomial Polynomial::truncated(std::size_t k) const {
    std::vector<Elem> out(coeffs_.begin(), coeffs_.begin() + std::min(k, coeffs_.size()));
    return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    check_same(rhs);
    return coeffs_ == rhs.coeffs_;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    return os.str();
}

FieldElement poly_eval(const Polynomial& f, const FieldElement& x) {
    require_same_field(f.field(), *x.field());
    return {f.field_ptr(), f(x.enc())};
}

namespace detail {

void interpolate_raw(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys, std::vector<Elem>& out,
                     std::vector<Elem>& scratch) {
    const std::size_t n = xs.size();
    // scratch[0..n] = prod (x - x_i), monic of degree n; scratch[n+1..2n] = quotient buffer.
    scratch.assign(2 * n + 1, 0);
    Elem* master = scratch.data();
    Elem* quot = scratch.data() + n + 1;
    master[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Elem r = f.neg(xs[i]);
        for (std::size_t j = i + 1; j > 0; --j) master[j] = f.add(master[j - 1], f.mul(master[j], r));
        master[0] = f.mul(master[0], r);
    }
    out.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // quot = master / (x - x_i), synthetic division from the top.
        Elem carry = 0;
        for (std::size_t j = n; j > 0; --j) {
            carry = f.add(master[j], f.mul(carry, xs[i]));
            quot[j - 1] = carry;
        }
        // quot(x_i) = prod_{j != i} (x_i - x_j)
        const Elem w = horner(f, std::span<const Elem>(quot, n), xs[i]);
        const Elem scale = f.mul(ys[i], f.inv(w));
        if (scale == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(scale, quot[j]));
    }
}

}  // namespace detail

Polynomial interpolate(const FieldPtr& field, std::span<const Elem> xs, std::span<const Elem> ys) {
    if (xs.size() != ys.size()) throw Error(Errc::InvalidInput, "node and value counts differ");
    if (xs.empty()) throw Error(Errc::InvalidInput, "interpolation needs at least one point");
    std::vector<Elem> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::DuplicateNode, "interpolation nodes repeat");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!field->contains(xs[i]) || !field->contains(ys[i])) throw Error(Errc::InvalidInput, "point outside field");
    }
    std::vector<Elem> out, scratch;
    detail::interpolate_raw(*field, xs, ys, out, scratch);
    return Polynomial(field, std::move(out));
}

Polynomial interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty()) throw Error(Errc::InvalidInput, "interpolation needs at least one point");
    const FieldPtr& field = points.front().first.field();
    std::vector<Elem> xs, ys;
    for (const auto& [x, y] : points) {
        require_same_field(*field, *x.field());
        require_same_field(*field, *y.field());
        xs.push_back(x.enc());
        ys.push_back(y.enc());
    }
    return interpolate(field, xs, ys);
}

Polynomial from_roots(const FieldPtr& field, std::span<const Elem> roots) {
    const Field& f = *field;
    std::vector<Elem> c{1};
    for (Elem r : roots) {
        const Elem nr = f.neg(r);
        c.push_back(0);
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = f.add(c[j - 1], f.mul(c[j], nr));
        c[0] = f.mul(c[0], nr);
    }
    return Polynomial(field, std::move(c));
}

std::vector<Elem> zeros_on_set(const Polynomial& f, std::span<const Elem> set) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero set of the zero polynomial");
    std::vector<Elem> out;
    for (Elem x : set) {
        if (f(x) == 0) out.push_back(x);
    }
    return out;
}

}  // namespace deephole

#include "deephole/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace deephole {

namespace {

constexpr std::uint32_t kMaxPrime = 1u << 16;
constexpr std::uint64_t kMaxOrder = 1ull << 24;
constexpr std::uint32_t kTableLimit = 1024;

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(Errc::InvalidInput, "bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

// Remainder of `a` modulo monic `b` over GF(p), both low-to-high.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                      std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t sub = (lead * b[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const unsigned m = static_cast<unsigned>(poly.size() - 1);
    if (m == 1) return true;
    // Degree-1 divisors are roots.
    for (std::uint32_t r = 0; r < p; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * r + poly[i]) % p;
        if (acc == 0) return false;
    }
    for (unsigned d = 2; d <= m / 2; ++d) {
        std::uint64_t tails = 1;
        for (unsigned i = 0; i < d; ++i) tails *= p;
        std::vector<std::uint32_t> divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t t = 0; t < tails; ++t) {
            std::uint64_t v = t;
            for (unsigned i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            auto rem = poly_mod_p(poly, divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p) || p >= kMaxPrime) {
        throw Error(Errc::InvalidInput, "characteristic " + std::to_string(p) + " is not a prime below 2^16");
    }
    if (m == 0) throw Error(Errc::InvalidInput, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(Errc::InvalidInput, "field order exceeds 2^24");
    }
    std::vector<std::uint32_t> mod;
    if (m > 1) {
        if (modulus) {
            mod = *modulus;
            if (mod.size() != m + 1 || mod.back() != 1 ||
                std::any_of(mod.begin(), mod.end(), [p](std::uint32_t c) { return c >= p; })) {
                throw Error(Errc::InvalidInput, "modulus must be monic of degree m with coefficients in [0,p)");
            }
            if (!is_irreducible_mod_p(mod, p)) throw Error(Errc::InvalidInput, "modulus is reducible over GF(p)");
        } else {
            const std::uint64_t tails = q;
            for (std::uint64_t t = 0; t < tails; ++t) {
                std::vector<std::uint32_t> cand(m + 1, 0);
                std::uint64_t v = t;
                for (unsigned i = 0; i < m; ++i) {
                    cand[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                cand[m] = 1;
                if (is_irreducible_mod_p(cand, p)) {
                    mod = std::move(cand);
                    break;
                }
            }
        }
    } else if (modulus && !modulus->empty()) {
        throw Error(Errc::InvalidInput, "prime fields take no modulus");
    }
    return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < m_; ++i) q_ *= p_;
    if (m_ > 1 && q_ <= kTableLimit) {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        neg_table_.resize(q_);
        for (Elem x = 0; x < q_; ++x) {
            neg_table_[x] = neg_slow(x);
            for (Elem y = 0; y < q_; ++y) {
                add_table_[std::size_t(x) * q_ + y] = add_slow(x, y);
                mul_table_[std::size_t(x) * q_ + y] = mul_slow(x, y);
            }
        }
    }
    if (q_ <= (1u << 16)) {
        inv_table_.assign(q_, 0);
        for (Elem x = 1; x < q_; ++x) inv_table_[x] = pow(x, q_ - 2);
    }
}

FieldPtr Field::parse(std::string_view text) {
    std::string_view s = text;
    if (s.substr(0, 2) == "q=") s.remove_prefix(2);
    std::optional<std::vector<std::uint32_t>> modulus;
    if (auto colon = s.find(':'); colon != std::string_view::npos) {
        std::string_view tail = s.substr(colon + 1);
        s = s.substr(0, colon);
        if (tail.substr(0, 4) != "mod=") throw Error(Errc::InvalidInput, "expected ':mod=' in field spec");
        tail.remove_prefix(4);
        std::vector<std::uint32_t> coeffs;
        while (true) {
            auto comma = tail.find(',');
            coeffs.push_back(parse_uint(tail.substr(0, comma), "modulus coefficient"));
            if (comma == std::string_view::npos) break;
            tail.remove_prefix(comma + 1);
        }
        modulus = std::move(coeffs);
    }
    std::uint32_t p = 0;
    unsigned m = 1;
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        p = parse_uint(s.substr(0, caret), "characteristic");
        m = parse_uint(s.substr(caret + 1), "extension degree");
    } else {
        const std::uint32_t q = parse_uint(s, "field order");
        // Bare prime power: recover (p, m).
        std::uint32_t d = 2;
        while (d <= q && q % d != 0) ++d;
        if (q < 2) throw Error(Errc::InvalidInput, "field order must be a prime power");
        p = d;
        std::uint32_t rest = q;
        m = 0;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) throw Error(Errc::InvalidInput, std::to_string(q) + " is not a prime power");
    }
    if (m == 1 && modulus) throw Error(Errc::InvalidInput, "prime fields take no modulus");
    return make(p, m, std::move(modulus));
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << "q=" << p_;
    if (m_ > 1) {
        os << '^' << m_ << ":mod=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    }
    return os.str();
}

Elem Field::from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
    std::vector<std::uint32_t> d(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
    Elem v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return v;
}

Elem Field::add_slow(Elem x, Elem y) const noexcept {
    Elem r = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg_slow(Elem x) const noexcept {
    Elem r = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::mul_slow(Elem x, Elem y) const noexcept {
    const auto dx = digits(x);
    const auto dy = digits(y);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (dx[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(dx[i]) * dy[j]) % p_);
        }
    }
    auto rem = poly_mod_p(std::move(prod), modulus_, p_);
    rem.resize(m_, 0);
    return from_digits(rem);
}

Elem Field::add(Elem x, Elem y) const noexcept {
    if (m_ == 1) {
        const Elem s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[std::size_t(x) * q_ + y];
    return add_slow(x, y);
}

Elem Field::neg(Elem x) const noexcept {
    if (m_ == 1) return x == 0 ? 0 : p_ - x;
    if (!neg_table_.empty()) return neg_table_[x];
    return neg_slow(x);
}

Elem Field::sub(Elem x, Elem y) const noexcept {
    if (m_ == 1) return x >= y ? x - y : x + p_ - y;
    return add(x, neg(y));
}

Elem Field::mul(Elem x, Elem y) const noexcept {
    if (m_ == 1) return static_cast<Elem>((std::uint64_t(x) * y) % p_);
    if (!mul_table_.empty()) return mul_table_[std::size_t(x) * q_ + y];
    return mul_slow(x, y);
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
    Elem result = 1;
    Elem base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[x];
    return pow(x, q_ - 2);
}

int Field::eta(Elem x) const {
    if (p_ == 2) throw Error(Errc::OddCharRequired, "quadratic character needs odd characteristic");
    if (x == 0) return 0;
    return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

bool Field::is_square(Elem x) const {
    if (p_ == 2) return true;
    return eta(x) >= 0;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (Elem x = 0; x < q_; ++x) out[x] = x;
    return out;
}

void require_same_field(const Field& a, const Field& b) {
    if (&a != &b && !(a == b)) {
        throw Error(Errc::FieldMismatch, "operands from " + a.to_string() + " and " + b.to_string());
    }
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw Error(Errc::InvalidInput, "null field");
    if (!field_->contains(value_)) {
        throw Error(Errc::InvalidInput, "encoding " + std::to_string(value_) + " outside " + field_->to_string());
    }
}

void FieldElement::check_same(const FieldElement& rhs) const { require_same_field(*field_, *rhs.field_); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(rhs);
    return {field_, field_->add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(rhs);
    return {field_, field_->sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(rhs);
    return {field_, field_->mul(value_, rhs.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same(rhs);
    return {field_, field_->div(value_, rhs.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same(rhs);
    return value_ == rhs.value_;
}

}  // namespace deephole

#ifndef DEEPHOLE_GRS_HPP
#define DEEPHOLE_GRS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "deephole/field.hpp"
#include "deephole/poly.hpp"

namespace deephole {

// `full`, `star`, `star-minus-1` or `list:<enc>,<enc>,...`.
std::vector<Elem> parse_eval_set(const Field& field, std::string_view spec);

// GRS_k(F_q, D): evaluations on D of all polynomials of degree <= k-1.
class GrsCode {
public:
    GrsCode(FieldPtr field, std::vector<Elem> points, std::size_t k);
    GrsCode(FieldPtr field, std::string_view set_spec, std::size_t k);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Elem> points() const noexcept { return points_; }
    std::size_t n() const noexcept { return points_.size(); }
    std::size_t k() const noexcept { return k_; }
    bool contains_point(Elem x) const noexcept;
    // prod_{a in D} (x - a)
    const Polynomial& vanishing() const noexcept { return vanishing_; }

private:
    FieldPtr field_;
    std::vector<Elem> points_;
    std::size_t k_;
    Polynomial vanishing_;
};

// A received word together with its interpolant of degree <= n-1 on D.
class Word {
public:
    const std::vector<Elem>& values() const noexcept { return values_; }
    const Polynomial& interp() const noexcept { return interp_; }
    // Set when the defining polynomial had degree >= n and was reduced
    // modulo the vanishing polynomial of D.
    bool reduced() const noexcept { return reduced_; }
    bool is_codeword(const GrsCode& code) const noexcept {
        return interp_.degree() < static_cast<int>(code.k());
    }

private:
    friend Word word_from_poly(const GrsCode&, const Polynomial&);
    friend Word word_from_values(const GrsCode&, std::vector<Elem>);
    Word(std::vector<Elem> values, Polynomial interp, bool reduced)
        : values_(std::move(values)), interp_(std::move(interp)), reduced_(reduced) {}

    std::vector<Elem> values_;
    Polynomial interp_;
    bool reduced_;
};

Word word_from_poly(const GrsCode& code, const Polynomial& f);
Word word_from_values(const GrsCode& code, std::vector<Elem> values);

struct DistanceReport {
    std::size_t distance;
    Polynomial witness;               // degree <= k-1
    std::vector<Elem> agreement_set;  // points of D where word and witness agree
};

struct EngineOptions {
    // error_distance: cap on k-subset interpolations.
    // error_distance_bruteforce: cap on enumerated codewords.
    std::uint64_t budget = 0;  // 0 selects the engine default
    unsigned threads = 1;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultCodewordBudget = 1'000'000;

// Exact d(u, C) by interpolating u on every k-subset of D. The witness comes
// from the lexicographically least k-subset (in D's stored order) that
// attains the maximum agreement; identical for every thread count.
DistanceReport error_distance(const GrsCode& code, const Word& u, EngineOptions opts = {});

// Independent oracle: scans all q^k codewords.
DistanceReport error_distance_bruteforce(const GrsCode& code, const Word& u, EngineOptions opts = {});

// (n - deg f, n - k) for k <= deg f <= n - 1.
std::pair<std::size_t, std::size_t> degree_bounds(const GrsCode& code, const Polynomial& f);

bool is_deep_hole(const GrsCode& code, const Word& u, EngineOptions opts = {});

}  // namespace deephole

#endif

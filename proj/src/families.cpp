#include "deephole/families.hpp"

#include <algorithm>
#include <sstream>

#include "deephole/combinatorics.hpp"

namespace deephole {

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::DegreeK: return "degree-k";
        case Family::GeneralizedB: return "generalized-b";
        case Family::EvenChar: return "even-char";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "degree-k") return Family::DegreeK;
    if (name == "generalized-b") return Family::GeneralizedB;
    if (name == "even-char") return Family::EvenChar;
    throw Error(Errc::InvalidInput, "unknown family '" + std::string(name) + "'");
}

namespace {

std::vector<Elem> zeros_or_all(const Polynomial& f, std::span<const Elem> set) {
    if (f.is_zero()) return {set.begin(), set.end()};
    return zeros_on_set(f, set);
}

// (x - b)^e
Polynomial shifted_power(const FieldPtr& field, Elem b, std::size_t e) {
    return Polynomial::monomial(field, 1, e).shifted(field->neg(b));
}

bool same_set(std::span<const Elem> a, std::vector<Elem> b) {
    std::vector<Elem> sa(a.begin(), a.end());
    std::sort(sa.begin(), sa.end());
    std::sort(b.begin(), b.end());
    return sa == b;
}

}  // namespace

bool zero_set_equivalence(const FieldPtr& field, Elem b, const Polynomial& g, std::span<const Elem> set) {
    require_same_field(*field, g.field());
    if (std::find(set.begin(), set.end(), b) != set.end()) {
        throw Error(Errc::EvaluationSetContainsB, "b=" + std::to_string(b) + " lies in the evaluation set");
    }
    const Polynomial lhs = shifted_power(field, b, field->q() - 2) - g;
    const Polynomial linear(field, {field->neg(b), 1});
    const Polynomial rhs = Polynomial::constant(field, 1) - linear * g;
    return zeros_or_all(lhs, set) == zeros_or_all(rhs, set);
}

Polynomial family_polynomial(const GrsCode& code, const FamilyWordSpec& spec) {
    const FieldPtr& field = code.field_ptr();
    const Field& f = *field;
    if (spec.a == 0 || !f.contains(spec.a)) throw Error(Errc::SpecViolation, "leading coefficient must be nonzero");
    Polynomial tail = spec.tail ? *spec.tail : Polynomial(field);
    require_same_field(f, tail.field());
    if (tail.degree() >= static_cast<int>(code.k())) throw Error(Errc::SpecViolation, "tail degree must be <= k-1");
    switch (spec.family) {
        case Family::DegreeK:
            return Polynomial::monomial(field, spec.a, code.k()) + tail;
        case Family::GeneralizedB:
            if (!f.contains(spec.b) || code.contains_point(spec.b)) {
                throw Error(Errc::SpecViolation, "b=" + std::to_string(spec.b) + " must lie outside D");
            }
            return shifted_power(field, spec.b, f.q() - 2).scaled(spec.a) + tail;
        case Family::EvenChar: {
            if (f.p() != 2 || f.q() <= 4) throw Error(Errc::SpecViolation, "even-char family needs q = 2^m > 4");
            if (code.k() != f.q() - 4) throw Error(Errc::SpecViolation, "even-char family needs k = q - 4");
            const auto pts = code.points();
            if (!same_set(pts, parse_eval_set(f, "star")) && !same_set(pts, parse_eval_set(f, "star-minus-1"))) {
                throw Error(Errc::SpecViolation, "even-char family needs D = F_q^* or F_q^* minus {1}");
            }
            return Polynomial::monomial(field, spec.a, f.q() - 3) + tail;
        }
    }
    throw Error(Errc::SpecViolation, "unknown family");
}

Word construct_family_word(const GrsCode& code, const FamilyWordSpec& spec) {
    return word_from_poly(code, family_polynomial(code, spec));
}

Polynomial witness_gS(const GrsCode& code, std::span<const Elem> subset, Elem b) {
    const FieldPtr& field = code.field_ptr();
    const Field& f = *field;
    const std::size_t k = code.k();
    if (subset.size() != k) {
        throw Error(Errc::SubsetSizeMismatch, "|S|=" + std::to_string(subset.size()) + " but k=" + std::to_string(k));
    }
    if (!f.contains(b) || code.contains_point(b)) {
        throw Error(Errc::EvaluationSetContainsB, "b=" + std::to_string(b) + " lies in the evaluation set");
    }
    std::vector<Elem> shifted(k);
    Elem prod_inv = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (!code.contains_point(subset[i])) throw Error(Errc::SpecViolation, "S must be a subset of D");
        shifted[i] = f.sub(subset[i], b);
        prod_inv = f.mul(prod_inv, f.inv(shifted[i]));
    }
    std::vector<Elem> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::SpecViolation, "S has repeated elements");
    }
    const Elem a_s = (k % 2 == 0) ? prod_inv : f.neg(prod_inv);
    // 1 - a_S prod (y - gamma') has zero constant term; divide by y.
    const Polynomial numer = Polynomial::constant(field, 1) - from_roots(field, shifted).scaled(a_s);
    if (numer.coeff(0) != 0) throw Error(Errc::SpecViolation, "g_S numerator not divisible by x");
    std::vector<Elem> h(numer.coeffs().begin() + 1, numer.coeffs().end());
    return Polynomial(field, std::move(h)).shifted(f.neg(b));
}

bool verify_family(const GrsCode& code, const FamilyWordSpec& spec, EngineOptions opts) {
    const Word w = construct_family_word(code, spec);
    return error_distance(code, w, opts).distance == code.n() - code.k();
}

ScanResult scan_deep_holes(const GrsCode& code, int deg_lo, int deg_hi, EngineOptions opts) {
    const int k = static_cast<int>(code.k());
    const int n = static_cast<int>(code.n());
    if (deg_lo < k || deg_lo > deg_hi || deg_hi > n - 1) {
        throw Error(Errc::DegreeOutOfRange, "need k <= deg_lo <= deg_hi <= n-1");
    }
    const std::uint32_t q = code.field().q();
    ScanResult out;
    EngineOptions inner = opts;
    inner.threads = 1;
    for (int d = deg_lo; d <= deg_hi; ++d) {
        const std::uint64_t reps = pow_u64(q, static_cast<std::uint64_t>(d - k));
        if (reps > 50'000'000) throw Error(Errc::BudgetExceeded, "too many representatives at degree " + std::to_string(d));
        std::vector<ScanRow> rows(reps, ScanRow{d, Polynomial(code.field_ptr()), 0, false});
        parallel_for(reps, opts.threads, [&](std::size_t r) {
            std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1, 0);
            coeffs[d] = 1;
            std::uint64_t v = r;
            for (int i = k; i < d; ++i) {
                coeffs[i] = static_cast<Elem>(v % q);
                v /= q;
            }
            Polynomial f(code.field_ptr(), std::move(coeffs));
            const auto report = error_distance(code, word_from_poly(code, f), inner);
            rows[r] = ScanRow{d, std::move(f), report.distance, report.distance == code.n() - code.k()};
        });
        DegreeSummary s;
        s.degree = d;
        for (auto& row : rows) {
            ++s.representatives;
            s.deep_holes += row.is_deep_hole;
            ++s.histogram[row.distance];
            out.rows.push_back(std::move(row));
        }
        out.summary.push_back(std::move(s));
    }
    return out;
}

std::string scan_csv(const ScanResult& result) {
    std::ostringstream os;
    os << "degree,poly_enc_coeffs,distance,is_deep_hole\n";
    for (const auto& row : result.rows) {
        os << row.degree << ",\"" << row.poly.to_string() << "\"," << row.distance << ','
           << (row.is_deep_hole ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace deephole

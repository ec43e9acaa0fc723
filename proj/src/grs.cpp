#include "deephole/grs.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <optional>

#include "deephole/combinatorics.hpp"

namespace deephole {

std::vector<Elem> parse_eval_set(const Field& field, std::string_view spec) {
    std::vector<Elem> out;
    if (spec == "full") {
        out = field.elements();
    } else if (spec == "star") {
        for (Elem x = 1; x < field.q(); ++x) out.push_back(x);
    } else if (spec == "star-minus-1") {
        for (Elem x = 2; x < field.q(); ++x) out.push_back(x);
    } else if (spec.substr(0, 5) == "list:") {
        spec.remove_prefix(5);
        while (!spec.empty()) {
            const auto comma = spec.find(',');
            const std::string_view tok = spec.substr(0, comma);
            Elem v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || !field.contains(v)) {
                throw Error(Errc::InvalidInput, "bad evaluation point '" + std::string(tok) + "'");
            }
            out.push_back(v);
            if (comma == std::string_view::npos) break;
            spec.remove_prefix(comma + 1);
        }
    } else {
        throw Error(Errc::InvalidInput, "unknown evaluation set '" + std::string(spec) + "'");
    }
    return out;
}

GrsCode::GrsCode(FieldPtr field, std::vector<Elem> points, std::size_t k)
    : field_(std::move(field)), points_(std::move(points)), k_(k), vanishing_(field_) {
    std::vector<Elem> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::InvalidInput, "evaluation points repeat");
    }
    for (Elem x : points_) {
        if (!field_->contains(x)) throw Error(Errc::InvalidInput, "evaluation point outside field");
    }
    if (k_ < 1 || k_ >= points_.size()) {
        throw Error(Errc::InvalidInput, "need 1 <= k < n (k=" + std::to_string(k_) +
                                            ", n=" + std::to_string(points_.size()) + ")");
    }
    vanishing_ = from_roots(field_, points_);
}

GrsCode::GrsCode(FieldPtr field, std::string_view set_spec, std::size_t k)
    : GrsCode(field, parse_eval_set(*field, set_spec), k) {}

bool GrsCode::contains_point(Elem x) const noexcept {
    return std::find(points_.begin(), points_.end(), x) != points_.end();
}

Word word_from_poly(const GrsCode& code, const Polynomial& f) {
    require_same_field(code.field(), f.field());
    std::vector<Elem> values(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) values[i] = f(code.points()[i]);
    if (f.degree() >= static_cast<int>(code.n())) {
        return Word(std::move(values), f.divmod(code.vanishing()).second, true);
    }
    return Word(std::move(values), f, false);
}

Word word_from_values(const GrsCode& code, std::vector<Elem> values) {
    if (values.size() != code.n()) throw Error(Errc::InvalidInput, "word length differs from n");
    Polynomial interp = interpolate(code.field_ptr(), code.points(), values);
    return Word(std::move(values), std::move(interp), false);
}

namespace {

DistanceReport make_report(const GrsCode& code, const Word& u, Polynomial witness) {
    std::vector<Elem> agree;
    for (std::size_t i = 0; i < code.n(); ++i) {
        if (witness(code.points()[i]) == u.values()[i]) agree.push_back(code.points()[i]);
    }
    const std::size_t distance = code.n() - agree.size();
    return {distance, std::move(witness), std::move(agree)};
}

struct BlockBest {
    std::size_t agreement = 0;
    std::vector<Elem> witness;  // raw coefficients, length k
    bool found = false;
};

}  // namespace

DistanceReport error_distance(const GrsCode& code, const Word& u, EngineOptions opts) {
    const Field& f = code.field();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (u.is_codeword(code)) return make_report(code, u, u.interp());

    const std::uint64_t budget = opts.budget ? opts.budget : kDefaultSubsetBudget;
    if (binomial_u64(n, k) > budget) {
        throw Error(Errc::BudgetExceeded, "C(n,k)=" + std::to_string(binomial_u64(n, k)) + " exceeds subset budget " +
                                              std::to_string(budget));
    }
    // No codeword agrees with u on more than deg(interp) points.
    const std::size_t cap = static_cast<std::size_t>(u.interp().degree());
    const auto pts = code.points();
    const auto& vals = u.values();

    // Block j holds the k-subsets whose smallest index is j.
    const std::size_t blocks = n - k + 1;
    std::vector<BlockBest> best(blocks);
    std::atomic<std::size_t> cap_block{blocks};

    parallel_for(blocks, opts.threads, [&](std::size_t first) {
        if (first > cap_block.load()) return;
        std::vector<std::size_t> rest(k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j) rest[j] = first + 1 + j;
        std::vector<Elem> xs(k), ys(k), coeffs, scratch;
        BlockBest& mine = best[first];
        const std::size_t tail_n = n - first - 1;
        do {
            xs[0] = pts[first];
            ys[0] = vals[first];
            for (std::size_t j = 0; j + 1 < k; ++j) {
                xs[j + 1] = pts[rest[j]];
                ys[j + 1] = vals[rest[j]];
            }
            detail::interpolate_raw(f, xs, ys, coeffs, scratch);
            std::size_t agree = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (detail::horner(f, coeffs, pts[i]) == vals[i]) ++agree;
            }
            if (!mine.found || agree > mine.agreement) {
                mine.found = true;
                mine.agreement = agree;
                mine.witness = coeffs;
                if (agree >= cap) {
                    std::size_t cur = cap_block.load();
                    while (first < cur && !cap_block.compare_exchange_weak(cur, first)) {
                    }
                    break;
                }
            }
            if (k == 1) break;
            // Shift `rest` into a combination over [first+1, n) and advance.
            for (auto& r : rest) r -= first + 1;
            const bool more = next_combination(rest, tail_n);
            for (auto& r : rest) r += first + 1;
            if (!more) break;
        } while (true);
    });

    std::optional<std::size_t> winner;
    for (std::size_t b = 0; b < blocks && b <= cap_block.load(); ++b) {
        if (best[b].found && (!winner || best[b].agreement > best[*winner].agreement)) winner = b;
    }
    return make_report(code, u, Polynomial(code.field_ptr(), best[*winner].witness));
}

DistanceReport error_distance_bruteforce(const GrsCode& code, const Word& u, EngineOptions opts) {
    const Field& f = code.field();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    const std::uint64_t budget = opts.budget ? opts.budget : kDefaultCodewordBudget;
    const std::uint64_t total = pow_u64(f.q(), k);
    if (total > budget) {
        throw Error(Errc::BudgetExceeded, "q^k=" + std::to_string(total) + " exceeds codeword budget " +
                                              std::to_string(budget));
    }
    // powers[j][i] = x_i^j
    std::vector<std::vector<Elem>> powers(k, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Elem acc = 1;
        for (std::size_t j = 0; j < k; ++j) {
            powers[j][i] = acc;
            acc = f.mul(acc, code.points()[i]);
        }
    }
    // Odometer over coefficient encodings, constant term fastest; codeword
    // values are updated incrementally by the field difference of the
    // changed coefficient.
    std::vector<Elem> coeffs(k, 0);
    std::vector<Elem> cw(n, 0);
    std::size_t best_dist = n + 1;
    std::vector<Elem> best_coeffs;
    const auto& vals = u.values();
    while (true) {
        std::size_t dist = 0;
        for (std::size_t i = 0; i < n; ++i) dist += cw[i] != vals[i];
        if (dist < best_dist) {
            best_dist = dist;
            best_coeffs = coeffs;
            if (dist == 0) break;
        }
        std::size_t j = 0;
        while (j < k) {
            const Elem old = coeffs[j];
            const Elem next = old + 1 == f.q() ? 0 : old + 1;
            coeffs[j] = next;
            const Elem delta = f.sub(next, old);
            for (std::size_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], f.mul(delta, powers[j][i]));
            if (next != 0) break;
            ++j;
        }
        if (j == k) break;
    }
    return make_report(code, u, Polynomial(code.field_ptr(), best_coeffs));
}

std::pair<std::size_t, std::size_t> degree_bounds(const GrsCode& code, const Polynomial& f) {
    const int deg = f.degree();
    if (deg < static_cast<int>(code.k()) || deg > static_cast<int>(code.n()) - 1) {
        throw Error(Errc::DegreeOutOfRange, "need k <= deg f <= n-1, got deg " +
                                                (f.is_zero() ? std::string("-inf") : std::to_string(deg)));
    }
    return {code.n() - static_cast<std::size_t>(deg), code.n() - code.k()};
}

bool is_deep_hole(const GrsCode& code, const Word& u, EngineOptions opts) {
    return error_distance(code, u, opts).distance == code.n() - code.k();
}

}  // namespace deephole

#include "deephole/quad.hpp"

#include <algorithm>
#include <random>

#include "deephole/combinatorics.hpp"

namespace deephole {

std::string_view quad_mode_name(QuadMode m) noexcept {
    switch (m) {
        case QuadMode::PairSum: return "pairsum";
        case QuadMode::PairSumSquares: return "pairsum+squares";
        case QuadMode::Full: return "full";
    }
    return "unknown";
}

QuadMode parse_quad_mode(std::string_view name) {
    if (name == "pairsum") return QuadMode::PairSum;
    if (name == "pairsum+squares" || name == "squares") return QuadMode::PairSumSquares;
    if (name == "full") return QuadMode::Full;
    throw Error(Errc::InvalidInput, "unknown mode '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy s) noexcept {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Complement: return "complement";
        case Strategy::Induction: return "induction";
        case Strategy::Search: return "search";
        case Strategy::Brute: return "brute";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "complement") return Strategy::Complement;
    if (name == "induction") return Strategy::Induction;
    if (name == "search") return Strategy::Search;
    if (name == "brute") return Strategy::Brute;
    throw Error(Errc::InvalidInput, "unknown strategy '" + std::string(name) + "'");
}

Elem evaluate_system(const QuadSystem& sys, std::span<const Elem> tuple) {
    const Field& f = *sys.field;
    Elem sum = 0, pairs = 0, squares = 0;
    for (Elem x : tuple) {
        pairs = f.add(pairs, f.mul(sum, x));
        sum = f.add(sum, x);
        squares = f.add(squares, f.mul(x, x));
    }
    switch (sys.mode) {
        case QuadMode::PairSum: return pairs;
        case QuadMode::PairSumSquares: return f.add(pairs, squares);
        case QuadMode::Full: return f.sub(f.add(pairs, squares), f.mul(sys.a, sum));
    }
    return pairs;
}

SolverWitness SolverWitness::verified(const QuadSystem& sys, std::vector<Elem> tuple, Strategy strategy) {
    const Field& f = *sys.field;
    if (tuple.size() != sys.t) throw Error(Errc::NoSolutionFound, "witness has wrong length");
    std::vector<Elem> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::NoSolutionFound, "witness entries are not distinct");
    }
    if (!sorted.empty() && !f.contains(sorted.back())) throw Error(Errc::NoSolutionFound, "witness outside field");
    if (evaluate_system(sys, tuple) != sys.b) throw Error(Errc::NoSolutionFound, "witness does not satisfy the equation");
    return SolverWitness(std::move(tuple), strategy);
}

namespace {

void require_odd(const Field& f) {
    if (f.p() == 2) throw Error(Errc::OddCharRequired, "needs odd characteristic");
}

// sqrt_of[y] = least-enc root of y, or q if y is not a square.
std::vector<Elem> sqrt_table(const Field& f) {
    std::vector<Elem> table(f.q(), f.q());
    for (Elem z = f.q(); z-- > 0;) table[f.mul(z, z)] = z;
    return table;
}

// Roots of X^2 + lin X + con in increasing enc order.
std::vector<Elem> quadratic_roots(const Field& f, const std::vector<Elem>& sqrt_of, Elem lin, Elem con) {
    const Elem disc = f.sub(f.mul(lin, lin), f.mul(f.from_int(4), con));
    const Elem r = sqrt_of[disc];
    if (r == f.q()) return {};
    const Elem half = f.inv(f.from_int(2));
    std::vector<Elem> roots{f.mul(f.sub(r, lin), half), f.mul(f.sub(f.neg(r), lin), half)};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool contains(std::span<const Elem> xs, Elem v) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

Elem sum_of(const Field& f, std::span<const Elem> xs) {
    Elem s = 0;
    for (Elem x : xs) s = f.add(s, x);
    return s;
}

// Lexicographically least distinct t-subset (increasing enc) with
// evaluate_system == b. Counts leaf visits against `budget`.
struct ExhaustiveSearch {
    const QuadSystem& sys;
    const Field& f;
    std::uint64_t budget;
    std::uint64_t visits = 0;
    std::vector<Elem> chosen;

    bool run(Elem start, Elem sum, Elem pairs, Elem squares) {
        if (chosen.size() == sys.t) {
            if (++visits > budget) throw Error(Errc::BudgetExceeded, "exhaustive search budget exhausted");
            Elem v = pairs;
            if (sys.mode != QuadMode::PairSum) v = f.add(v, squares);
            if (sys.mode == QuadMode::Full) v = f.sub(v, f.mul(sys.a, sum));
            return v == sys.b;
        }
        const std::size_t need = sys.t - chosen.size();
        for (Elem x = start; x + need <= f.q(); ++x) {
            chosen.push_back(x);
            if (run(x + 1, f.add(sum, x), f.add(pairs, f.mul(sum, x)), f.add(squares, f.mul(x, x)))) return true;
            chosen.pop_back();
        }
        return false;
    }
};

std::optional<std::vector<Elem>> exhaustive(const QuadSystem& sys, std::uint64_t budget) {
    ExhaustiveSearch s{sys, *sys.field, budget, 0, {}};
    if (s.run(0, 0, 0, 0)) return s.chosen;
    return std::nullopt;
}

std::optional<std::vector<Elem>> random_search(const QuadSystem& sys, std::uint64_t seed, std::uint64_t budget) {
    const Field& f = *sys.field;
    const std::size_t q = f.q();
    std::vector<Elem> pool = f.elements();
    std::mt19937_64 rng(seed);
    for (std::uint64_t iter = 0; iter < budget; ++iter) {
        for (std::size_t i = 0; i < sys.t; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (q - i));
            std::swap(pool[i], pool[j]);
        }
        const std::span<const Elem> cand(pool.data(), sys.t);
        if (evaluate_system(sys, cand) == sys.b) {
            std::vector<Elem> out(cand.begin(), cand.end());
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

SolverWitness search_strategy(const QuadSystem& sys, const SolveOptions& opts, Strategy label) {
    if (label == Strategy::Search) {
        if (auto found = random_search(sys, opts.seed, opts.search_budget)) {
            return SolverWitness::verified(sys, std::move(*found), Strategy::Search);
        }
    }
    if (auto found = exhaustive(sys, opts.exhaustive_budget)) {
        return SolverWitness::verified(sys, std::move(*found), label);
    }
    throw Error(Errc::NoSolutionFound, "no distinct " + std::to_string(sys.t) + "-tuple solves the system");
}

// One step of the pair-sum induction: a distinct t-tuple with pair-sum b
// (t >= 3) becomes a distinct (t+1)-tuple with the same pair-sum.
std::vector<Elem> pairsum_step(const Field& f, std::vector<Elem> x) {
    const std::size_t t = x.size();
    auto zero = std::find(x.begin(), x.end(), Elem{0});
    if (zero == x.end()) {
        x.insert(x.begin(), 0);
        return x;
    }
    std::iter_swap(x.begin(), zero);
    const Elem a = sum_of(f, x);
    // Move some x_j != a (j >= 2) to the last slot; t >= 3 leaves at least
    // two nonzero entries and at most one of them equals a.
    for (std::size_t j = t - 1; j >= 1; --j) {
        if (x[j] != a) {
            std::swap(x[j], x[t - 1]);
            break;
        }
    }
    const Elem xt = x[t - 1];
    const Elem xt_minus_a = f.sub(xt, a);
    auto induced = [&](Elem xp) -> std::optional<Elem> {
        const Elem den = f.sub(f.sub(xt, xp), a);
        if (den == 0) return std::nullopt;
        return f.div(f.mul(f.sub(xt, xp), xt_minus_a), den);
    };

    std::vector<Elem> excluded(x.begin() + 1, x.end());
    for (std::size_t i = 1; i + 1 < t; ++i) {
        if (auto v = induced(x[i])) excluded.push_back(*v);
    }
    // x' with induced(x') == x': roots of X^2 - 2(x_t - a) X + x_t (x_t - a).
    for (Elem c = 0; c < f.q(); ++c) {
        const Elem val =
            f.add(f.sub(f.mul(c, c), f.mul(f.from_int(2), f.mul(xt_minus_a, c))), f.mul(xt, xt_minus_a));
        if (val == 0) excluded.push_back(c);
    }
    excluded.push_back(xt_minus_a);  // vanishing denominator

    for (Elem xp = 1; xp < f.q(); ++xp) {
        if (contains(excluded, xp)) continue;
        const Elem xv = *induced(xp);
        std::vector<Elem> next(x.begin(), x.end() - 1);
        next.push_back(xp);
        next.push_back(xv);
        return next;
    }
    throw Error(Errc::NoSolutionFound, "pair-sum induction ran out of candidates");
}

// Discriminant induction, base case: distinct (x1, x2, x3) with pair-sum plus squares beta
// and nonzero sum.
std::optional<std::vector<Elem>> squares_base3(const Field& f, const std::vector<Elem>& sqrt_of, Elem beta) {
    const Elem three_beta = f.mul(f.from_int(3), beta);
    for (Elem x1 = 0; x1 < f.q(); ++x1) {
        if (f.sub(f.mul(f.from_int(2), f.mul(x1, x1)), three_beta) == 0) continue;
        for (Elem x2 = 0; x2 < f.q(); ++x2) {
            if (x2 == x1) continue;
            const Elem s = f.add(x1, x2);
            const Elem con = f.sub(f.add(f.add(f.mul(x1, x1), f.mul(x2, x2)), f.mul(x1, x2)), beta);
            for (Elem x3 : quadratic_roots(f, sqrt_of, s, con)) {
                if (x3 == x1 || x3 == x2 || x3 == f.neg(s)) continue;
                return std::vector<Elem>{x1, x2, x3};
            }
        }
    }
    return std::nullopt;
}

// Discriminant induction, step: a distinct tuple with pair-sum plus squares beta and
// nonzero sum grows by one, keeping the sum nonzero.
std::optional<std::vector<Elem>> squares_step(const Field& f, const std::vector<Elem>& sqrt_of, std::vector<Elem> y) {
    auto zero = std::find(y.begin(), y.end(), Elem{0});
    if (zero == y.end()) {
        y.push_back(0);
        return y;
    }
    std::iter_swap(zero, y.end() - 1);
    const Elem a = sum_of(f, y);
    const std::span<const Elem> kept(y.data(), y.size() - 1);
    for (Elem xp = 0; xp < f.q(); ++xp) {
        if (contains(y, xp) || xp == f.neg(a)) continue;
        const Elem lin = f.add(a, xp);
        for (Elem x : quadratic_roots(f, sqrt_of, lin, f.mul(xp, lin))) {
            if (contains(kept, x) || x == xp || f.add(lin, x) == 0) continue;
            y.back() = xp;
            y.push_back(x);
            return y;
        }
    }
    return std::nullopt;
}

QuadSystem as_full(const QuadSystem& sys) {
    QuadSystem full = sys;
    if (sys.mode == QuadMode::PairSumSquares) {
        full.mode = QuadMode::Full;
        full.a = 0;
    }
    return full;
}

std::vector<Elem> shift_all(const Field& f, std::vector<Elem> xs, Elem c) {
    for (auto& x : xs) x = f.add(x, c);
    std::sort(xs.begin(), xs.end());
    return xs;
}

SolverWitness complement_strategy(const QuadSystem& sys) {
    const Field& f = *sys.field;
    const QuadSystem full = as_full(sys);
    const ShiftReduction red = shift_reduce(f, full.t, full.a, full.b);
    if (full.t + 2 > f.q()) throw Error(Errc::RangeViolation, "complement needs t <= q-2");
    const auto comp = solve_pairsum(sys.field, f.q() - full.t, red.beta).tuple();
    std::vector<Elem> rest;
    for (Elem x = 0; x < f.q(); ++x) {
        if (!contains(comp, x)) rest.push_back(x);
    }
    return SolverWitness::verified(sys, shift_all(f, std::move(rest), red.shift), Strategy::Complement);
}

SolverWitness induction_strategy(const QuadSystem& sys) {
    const Field& f = *sys.field;
    if (f.p() == 3) throw Error(Errc::SpecViolation, "the discriminant induction divides by 3");
    if (sys.t < 3) throw Error(Errc::RangeViolation, "induction starts at t = 3");
    const QuadSystem full = as_full(sys);
    const ShiftReduction red = shift_reduce(f, full.t, full.a, full.b);
    const auto sqrt_of = sqrt_table(f);
    auto y = squares_base3(f, sqrt_of, red.beta);
    if (!y) throw Error(Errc::NoSolutionFound, "no base triple for the discriminant induction");
    while (y->size() < sys.t) {
        y = squares_step(f, sqrt_of, std::move(*y));
        if (!y) throw Error(Errc::NoSolutionFound, "discriminant induction step found no admissible x'");
    }
    return SolverWitness::verified(sys, shift_all(f, std::move(*y), red.shift), Strategy::Induction);
}

}  // namespace

long long char_sum(const Field& field, Elem c) {
    require_odd(field);
    long long total = 0;
    for (Elem x = 0; x < field.q(); ++x) total += field.eta(field.add(field.mul(x, x), c));
    return total;
}

std::uint64_t count_double_squares(const Field& field, Elem a, Elem c) {
    require_odd(field);
    if (a == 0 || c == 0) throw Error(Errc::ZeroParameter, "a and c must be nonzero");
    std::uint64_t count = 0;
    for (Elem x = 0; x < field.q(); ++x) {
        count += field.is_square(x) && field.is_square(field.add(field.mul(a, x), c));
    }
    return count;
}

ShiftReduction shift_reduce(const Field& field, std::size_t t, Elem a, Elem b) {
    require_odd(field);
    const Elem t1 = field.from_int(static_cast<long long>(t) + 1);
    if (t1 == 0) {
        throw Error(Errc::CharacteristicDividesTPlusOne, "p divides t+1 = " + std::to_string(t + 1));
    }
    const Elem shift = field.div(a, t1);
    const Elem num = field.mul(field.from_int(static_cast<long long>(t)), field.mul(a, a));
    const Elem beta = field.add(field.div(num, field.mul(field.from_int(2), t1)), b);
    return {beta, shift};
}

bool complement_check(const Field& field, std::span<const Elem> subset) {
    if (subset.size() < 2 || subset.size() + 2 > field.q()) {
        throw Error(Errc::SizeOutOfRange, "need 2 <= |S| <= q-2");
    }
    std::vector<Elem> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !field.contains(sorted.back())) {
        throw Error(Errc::InvalidInput, "S must be a set of field elements");
    }
    std::vector<Elem> rest;
    for (Elem x = 0; x < field.q(); ++x) {
        if (!std::binary_search(sorted.begin(), sorted.end(), x)) rest.push_back(x);
    }
    auto pairs = [&](std::span<const Elem> xs) {
        Elem sum = 0, acc = 0;
        for (Elem x : xs) {
            acc = field.add(acc, field.mul(sum, x));
            sum = field.add(sum, x);
        }
        return acc;
    };
    Elem lhs = pairs(sorted);
    for (Elem x : sorted) lhs = field.add(lhs, field.mul(x, x));
    return lhs == pairs(rest);
}

SolverWitness solve_pairsum(const FieldPtr& field, std::size_t t, Elem b) {
    const Field& f = *field;
    require_odd(f);
    if (t < 2 || t > (f.q() - 1) / 2) {
        throw Error(Errc::RangeViolation, "pair-sum induction needs 2 <= t <= (q-1)/2");
    }
    const QuadSystem sys{field, t, 0, b, QuadMode::PairSum};
    QuadSystem base = sys;
    base.t = std::min<std::size_t>(t, 3);
    auto tuple = exhaustive(base, std::numeric_limits<std::uint64_t>::max());
    if (!tuple) throw Error(Errc::NoSolutionFound, "no base tuple for the pair-sum induction");
    std::vector<Elem> x = std::move(*tuple);
    while (x.size() < t) x = pairsum_step(f, std::move(x));
    return SolverWitness::verified(sys, std::move(x), Strategy::Induction);
}

SolverWitness solve_system(const QuadSystem& sys, SolveOptions opts) {
    const Field& f = *sys.field;
    require_odd(f);
    if (sys.t < 1 || sys.t > f.q()) throw Error(Errc::RangeViolation, "t must lie in [1, q]");
    if (!f.contains(sys.a) || !f.contains(sys.b)) throw Error(Errc::InvalidInput, "parameters outside field");

    if (sys.mode == QuadMode::PairSum) {
        switch (opts.strategy) {
            case Strategy::Auto:
                if (sys.t >= 2 && sys.t <= (f.q() - 1) / 2) return solve_pairsum(sys.field, sys.t, sys.b);
                return search_strategy(sys, opts, Strategy::Search);
            case Strategy::Induction: return solve_pairsum(sys.field, sys.t, sys.b);
            case Strategy::Search: return search_strategy(sys, opts, Strategy::Search);
            case Strategy::Brute: return search_strategy(sys, opts, Strategy::Brute);
            case Strategy::Complement:
                throw Error(Errc::InvalidInput, "complement strategy applies to the squares and full modes");
        }
    }

    const QuadSystem full = as_full(sys);
    const bool shift_ok = (full.t + 1) % f.p() != 0;
    switch (opts.strategy) {
        case Strategy::Complement: return complement_strategy(sys);
        case Strategy::Induction: return induction_strategy(sys);
        case Strategy::Search: return search_strategy(sys, opts, Strategy::Search);
        case Strategy::Brute: return search_strategy(sys, opts, Strategy::Brute);
        case Strategy::Auto: break;
    }
    const std::size_t q = f.q();
    if (shift_ok && 2 * sys.t >= q + 1 && sys.t + 2 <= q) return complement_strategy(sys);
    if (shift_ok && f.p() != 3 && q > 17 && sys.t >= 3 && 6 * sys.t + 11 < q) return induction_strategy(sys);
    return search_strategy(sys, opts, Strategy::Search);
}

SolverWitness solve_full(const FieldPtr& field, std::size_t t, Elem a, Elem b, SolveOptions opts) {
    require_odd(*field);
    if (field->q() <= 5) throw Error(Errc::RangeViolation, "needs q > 5");
    if (t < 3 || t + 2 > field->q()) throw Error(Errc::RangeViolation, "needs 3 <= t <= q-2");
    return solve_system(QuadSystem{field, t, a, b, QuadMode::Full}, opts);
}

bool exists_bruteforce(const Field& field, std::size_t t, Elem a, Elem b, std::uint64_t budget) {
    if (t > field.q()) throw Error(Errc::RangeViolation, "t exceeds q");
    if (binomial_u64(field.q(), t) > budget) throw Error(Errc::BudgetExceeded, "C(q,t) exceeds budget");
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    do {
        // b = -sum_{i<j} X_i X_j + (sum X_i - a) sum X_i
        Elem e1 = 0, e2 = 0;
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = i + 1; j < t; ++j) e2 = field.add(e2, field.mul(Elem(idx[i]), Elem(idx[j])));
            e1 = field.add(e1, Elem(idx[i]));
        }
        if (field.add(field.neg(e2), field.mul(field.sub(e1, a), e1)) == b) return true;
    } while (next_combination(idx, field.q()));
    return false;
}

DegreeK2Verdict degree_k2_verdict(const GrsCode& code, Elem a, Elem b, SolveOptions opts) {
    const Field& f = code.field();
    const std::size_t k = code.k();
    std::vector<Elem> coeffs(k + 3, 0);
    coeffs[k + 2] = 1;
    coeffs[k + 1] = f.neg(a);
    coeffs[k] = f.neg(b);
    return degree_k2_verdict(code, Polynomial(code.field_ptr(), std::move(coeffs)), opts);
}

DegreeK2Verdict degree_k2_verdict(const GrsCode& code, const Polynomial& poly, SolveOptions opts) {
    const Field& f = code.field();
    const FieldPtr& field = code.field_ptr();
    require_same_field(f, poly.field());
    require_odd(f);
    if (f.q() <= 5) throw Error(Errc::RangeViolation, "needs q > 5");
    if (code.n() != f.q()) throw Error(Errc::SpecViolation, "needs D = F_q");
    const std::size_t k = code.k();
    if (k < 2 || k + 3 > f.q()) throw Error(Errc::RangeViolation, "needs 2 <= k <= q-3");
    if (poly.degree() != static_cast<int>(k) + 2) throw Error(Errc::DegreeOutOfRange, "needs deg f = k+2");

    const Elem lead = poly.leading();
    const Elem lead_inv = f.inv(lead);
    const Elem a = f.neg(f.mul(poly.coeff(k + 1), lead_inv));
    const Elem b = f.neg(f.mul(poly.coeff(k), lead_inv));
    SolverWitness w = solve_full(field, k + 1, a, b, opts);
    const Elem gamma = f.sub(a, sum_of(f, w.tuple()));
    w.set_gamma(gamma);

    std::vector<Elem> roots = w.tuple();
    roots.push_back(gamma);
    const Polynomial factor = from_roots(field, roots).scaled(lead);
    Polynomial g = poly - factor;
    if (g.degree() >= static_cast<int>(k)) throw Error(Errc::NoSolutionFound, "certificate g has degree >= k");
    std::vector<Elem> agreement = zeros_on_set(factor, code.points());
    if (agreement.size() < k + 1) throw Error(Errc::NoSolutionFound, "certificate agrees on fewer than k+1 points");
    return DegreeK2Verdict{false, w.tuple(), gamma, std::move(g), std::move(agreement), std::move(w)};
}

}  // namespace deephole

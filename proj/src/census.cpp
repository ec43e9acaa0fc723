#include "deephole/census.hpp"

#include "deephole/combinatorics.hpp"

namespace deephole {

std::string_view census_method_name(CensusMethod m) noexcept {
    switch (m) {
        case CensusMethod::Brute: return "brute";
        case CensusMethod::FormulaFullStar: return "formula-i";
        case CensusMethod::FormulaStarMinusOne: return "formula-ii";
    }
    return "unknown";
}

namespace {

std::uint64_t count_from(const Field& f, std::span<const Elem> set, std::size_t start, std::size_t remaining, Elem sum,
                         Elem target) {
    if (remaining == 0) return sum == target;
    std::uint64_t total = 0;
    const std::size_t n = set.size();
    if (remaining == 1) {
        const Elem need = f.sub(target, sum);
        for (std::size_t i = start; i < n; ++i) total += set[i] == need;
        return total;
    }
    for (std::size_t i = start; i + remaining <= n; ++i) {
        total += count_from(f, set, i + 1, remaining - 1, f.add(sum, set[i]), target);
    }
    return total;
}

// table[size * q + sum] = number of subsets of `half` with that size and sum.
std::vector<std::uint64_t> half_table(const Field& f, std::span<const Elem> half) {
    const std::size_t q = f.q();
    std::vector<std::uint64_t> table((half.size() + 1) * q, 0);
    const std::uint64_t subsets = 1ull << half.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Elem sum = 0;
        std::size_t size = 0;
        for (std::size_t i = 0; i < half.size(); ++i) {
            if (mask >> i & 1) {
                sum = f.add(sum, half[i]);
                ++size;
            }
        }
        ++table[size * q + sum];
    }
    return table;
}

}  // namespace

CensusRecord count_bruteforce(const CensusQuery& query, CensusOptions opts) {
    const Field& f = *query.field;
    const std::size_t n = query.set.size();
    const std::size_t t = query.t;
    if (t > n) throw Error(Errc::InvalidInput, "t exceeds |D|");
    if (!f.contains(query.b)) throw Error(Errc::InvalidInput, "b outside field");
    for (Elem x : query.set) {
        if (!f.contains(x)) throw Error(Errc::InvalidInput, "set element outside field");
    }
    const std::span<const Elem> set = query.set;

    if (t > kMeetInMiddleThreshold && n - t > kMeetInMiddleThreshold) {
        const std::size_t h = n / 2;
        if (n - h >= 63) throw Error(Errc::BudgetExceeded, "set too large for meet-in-the-middle");
        const std::uint64_t visits = (1ull << h) + (1ull << (n - h));
        if (visits > opts.budget) {
            throw Error(Errc::BudgetExceeded, std::to_string(visits) + " half-subset visits exceed budget");
        }
        const auto left = half_table(f, set.subspan(0, h));
        const auto right = half_table(f, set.subspan(h));
        const std::size_t q = f.q();
        BigInt total = 0;
        for (std::size_t s = 0; s <= h && s <= t; ++s) {
            const std::size_t rs = t - s;
            if (rs > n - h) continue;
            for (Elem x = 0; x < q; ++x) {
                const std::uint64_t l = left[s * q + x];
                if (l == 0) continue;
                const std::uint64_t r = right[rs * q + f.sub(query.b, x)];
                total += BigInt(l) * r;
            }
        }
        return {t, query.b, total, CensusMethod::Brute};
    }

    const std::uint64_t visits = binomial_u64(n, t);
    if (visits > opts.budget) {
        throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(t) + ")=" +
                                              std::to_string(visits) + " exceeds budget");
    }
    if (t == 0) return {t, query.b, BigInt(query.b == 0 ? 1 : 0), CensusMethod::Brute};
    // Partition by the leading (smallest-index) element.
    const std::size_t blocks = n - t + 1;
    std::vector<std::uint64_t> partial(blocks, 0);
    parallel_for(blocks, opts.threads, [&](std::size_t first) {
        partial[first] = count_from(f, set, first + 1, t - 1, set[first], query.b);
    });
    BigInt total = 0;
    for (auto c : partial) total += c;
    return {t, query.b, total, CensusMethod::Brute};
}

BigInt generalized_binomial(long long n, long long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

namespace {

BigInt require_integer(const Rational& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw Error(Errc::NonIntegerResult, std::string(what) + " evaluated to a non-integer");
    }
    return boost::multiprecision::numerator(r);
}

int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

void require_prime_power(std::uint32_t q, std::uint32_t p) {
    if (!is_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
    std::uint32_t r = q;
    while (r > 1 && r % p == 0) r /= p;
    if (r != 1 || q < p) throw Error(Errc::InvalidInput, "q must be a power of p");
}

}  // namespace

CensusRecord formula_full_star(std::uint32_t q, std::uint32_t p, std::size_t t) {
    require_prime_power(q, p);
    if (t > q - 1) throw Error(Errc::InvalidInput, "t exceeds q-1");
    const long long tt = static_cast<long long>(t);
    const long long fl = tt / p;
    Rational value = Rational(generalized_binomial(q - 1, tt), q);
    value += Rational(sign_pow(tt + fl) * BigInt(q - 1) * generalized_binomial(q / p - 1, fl), q);
    return {t, 0, require_integer(value, "formula (i)"), CensusMethod::FormulaFullStar};
}

CensusRecord formula_star_minus_one(std::uint32_t q, std::size_t t, std::uint32_t b) {
    if (!is_prime(q)) throw Error(Errc::NonPrimeField, "closed form for F_q^* minus {1} is restricted to prime q");
    if (q < 3) throw Error(Errc::InvalidInput, "q must be at least 3");
    if (t > q - 2) throw Error(Errc::InvalidInput, "t exceeds q-2");
    if (b >= q) throw Error(Errc::InvalidInput, "b must be a residue in [0, q)");
    const long long p = q;
    const long long tt = static_cast<long long>(t);
    const long long fl = tt / p;
    const long long t_res = tt % p;
    const int s = sign_pow(fl);
    const BigInt c2 = generalized_binomial(q / p - 2, fl);
    const BigInt c1 = generalized_binomial(q / p - 1, fl);

    const BigInt r_t = -p * s * c2 + (p - 1 - t_res) * s * c1;
    // M(t, t - b) with t - b taken on residues mod p.
    const long long shifted = ((t_res - static_cast<long long>(b)) % p + p) % p;
    const int delta = shifted > t_res ? 1 : 0;
    const BigInt m = -s * c2 + delta * s * c1;

    Rational value = Rational(generalized_binomial(q - 2, tt), q) + Rational(sign_pow(tt) * r_t, q);
    value -= Rational(sign_pow(tt) * m);
    return {t, b, require_integer(value, "formula (ii)"), CensusMethod::FormulaStarMinusOne};
}

DegreeKPlusOneVerdict deephole_criterion_deg_k_plus_1(const GrsCode& code, Elem b, EngineOptions opts) {
    const std::size_t k = code.k();
    const Field& f = code.field();
    if (k + 1 > code.n()) throw Error(Errc::InvalidInput, "need k+1 <= |D|");
    const CensusQuery query{code.field_ptr(), {code.points().begin(), code.points().end()}, k + 1, b};
    CensusOptions copts;
    copts.threads = opts.threads;
    const BigInt count = count_bruteforce(query, copts).count;

    std::vector<Elem> coeffs(k + 2, 0);
    coeffs[k + 1] = 1;
    coeffs[k] = f.neg(b);
    const Polynomial poly(code.field_ptr(), std::move(coeffs));
    const std::size_t distance = error_distance(code, word_from_poly(code, poly), opts).distance;
    const bool deep = count == 0;
    return {deep, count, distance, deep == (distance == code.n() - k)};
}

}  // namespace deephole

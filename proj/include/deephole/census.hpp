#ifndef DEEPHOLE_CENSUS_HPP
#define DEEPHOLE_CENSUS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

#include "deephole/grs.hpp"

namespace deephole {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class CensusMethod { Brute, FormulaFullStar, FormulaStarMinusOne };

std::string_view census_method_name(CensusMethod m) noexcept;

// N(t, b, D): the number of t-subsets of D summing to b.
struct CensusQuery {
    FieldPtr field;
    std::vector<Elem> set;
    std::size_t t;
    Elem b;
};

struct CensusRecord {
    std::size_t t;
    Elem b;
    BigInt count;
    CensusMethod method;
};

struct CensusOptions {
    std::uint64_t budget = 100'000'000;  // subset visits
    unsigned threads = 1;
};

// Both t and |D| - t above this switch enumeration to meet-in-the-middle.
inline constexpr std::size_t kMeetInMiddleThreshold = 12;

CensusRecord count_bruteforce(const CensusQuery& query, CensusOptions opts = {});

// binom(n, k) for any integer n and k >= 0: n(n-1)...(n-k+1)/k!.
BigInt generalized_binomial(long long n, long long k);

// N(t, 0, F_q^*) in closed form.
CensusRecord formula_full_star(std::uint32_t q, std::uint32_t p, std::size_t t);

// N(t, b, F_q^* \ {1}) in closed form; q prime, b an integer residue mod q.
CensusRecord formula_star_minus_one(std::uint32_t q, std::size_t t, std::uint32_t b);

struct DegreeKPlusOneVerdict {
    bool is_deep_hole;      // N(k+1, b, D) == 0
    BigInt count;
    std::size_t distance;   // error distance of x^(k+1) - b x^k
    bool consistent;        // is_deep_hole == (distance == n - k)
};

// x^(k+1) - b x^k + (lower terms) is a deep hole iff no (k+1)-subset of D
// sums to b. Cross-checked with the distance engine on the explicit word.
DegreeKPlusOneVerdict deephole_criterion_deg_k_plus_1(const GrsCode& code, Elem b, EngineOptions opts = {});

}  // namespace deephole

#endif

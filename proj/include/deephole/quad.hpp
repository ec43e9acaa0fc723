#ifndef DEEPHOLE_QUAD_HPP
#define DEEPHOLE_QUAD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "deephole/grs.hpp"

namespace deephole {

// Symmetric quadratic equations over odd-characteristic fields, in distinct
// unknowns X_1..X_t:
//   PairSum         b = sum_{i<j} X_i X_j
//   PairSumSquares  b = sum_{i<j} X_i X_j + sum X_i^2
//   Full            b = sum_{i<j} X_i X_j + sum X_i^2 - a sum X_i
enum class QuadMode { PairSum, PairSumSquares, Full };
enum class Strategy { Auto, Complement, Induction, Search, Brute };

std::string_view quad_mode_name(QuadMode m) noexcept;
QuadMode parse_quad_mode(std::string_view name);
std::string_view strategy_name(Strategy s) noexcept;
Strategy parse_strategy(std::string_view name);

struct QuadSystem {
    FieldPtr field;
    std::size_t t;
    Elem a = 0;  // Full mode only
    Elem b = 0;
    QuadMode mode = QuadMode::Full;
};

// Right-hand side of the system's equation at X (distinctness not checked).
Elem evaluate_system(const QuadSystem& sys, std::span<const Elem> tuple);

// A tuple that has been substituted back into its system; there is no way
// to obtain an unverified witness.
class SolverWitness {
public:
    // Throws NoSolutionFound if the tuple is not a distinct solution.
    static SolverWitness verified(const QuadSystem& sys, std::vector<Elem> tuple, Strategy strategy);

    const std::vector<Elem>& tuple() const noexcept { return tuple_; }
    Strategy strategy() const noexcept { return strategy_; }
    const std::optional<Elem>& gamma() const noexcept { return gamma_; }
    void set_gamma(Elem g) noexcept { gamma_ = g; }

private:
    SolverWitness(std::vector<Elem> tuple, Strategy strategy) : tuple_(std::move(tuple)), strategy_(strategy) {}

    std::vector<Elem> tuple_;
    Strategy strategy_;
    std::optional<Elem> gamma_;
};

// sum_{x in F_q} eta(x^2 + c), exact.
long long char_sum(const Field& field, Elem c);

// #{x : x and a x + c both squares}, with 0 counted as a square.
std::uint64_t count_double_squares(const Field& field, Elem a, Elem c);

struct ShiftReduction {
    Elem beta;   // t a^2 / (2(t+1)) + b
    Elem shift;  // a / (t+1)
};

// Solutions Y of the PairSumSquares system with value beta map to solutions
// Y + shift of the Full system (a, b).
ShiftReduction shift_reduce(const Field& field, std::size_t t, Elem a, Elem b);

// Pair-sum plus squares of S equals the pair-sum of its complement.
bool complement_check(const Field& field, std::span<const Elem> subset);

// Distinct t-tuple with pair-sum b, 2 <= t <= (q-1)/2, built by induction
// on t from a searched base case of size 2 or 3.
SolverWitness solve_pairsum(const FieldPtr& field, std::size_t t, Elem b);

struct SolveOptions {
    Strategy strategy = Strategy::Auto;
    std::uint64_t seed = 0;
    std::uint64_t search_budget = 1'000'000;       // random candidate tuples
    std::uint64_t exhaustive_budget = 100'000'000;  // subset visits
};

// Any of the three modes; Full and PairSumSquares go through the strategy
// ladder, PairSum uses the pair-sum induction where it applies.
SolverWitness solve_system(const QuadSystem& sys, SolveOptions opts = {});

// Full equation, odd q > 5, 3 <= t <= q-2.
SolverWitness solve_full(const FieldPtr& field, std::size_t t, Elem a, Elem b, SolveOptions opts = {});

// Independent oracle: does any t-subset of F_q solve the Full equation?
bool exists_bruteforce(const Field& field, std::size_t t, Elem a, Elem b, std::uint64_t budget = 100'000'000);

struct DegreeK2Verdict {
    bool is_deep_hole = false;
    std::vector<Elem> subset;  // S, |S| = k+1
    Elem gamma;
    Polynomial g;              // codeword polynomial, degree <= k-1
    std::vector<Elem> agreement;
    SolverWitness witness;
};

// f = x^(k+2) - a x^(k+1) - b x^k over D = F_q never defines a deep hole:
// returns the certificate (S, gamma, g) with f - g = (x - gamma) prod_S (x - beta).
DegreeK2Verdict degree_k2_verdict(const GrsCode& code, Elem a, Elem b, SolveOptions opts = {});
// Same for any f of degree k+2 (leading coefficient and lower terms allowed).
DegreeK2Verdict degree_k2_verdict(const GrsCode& code, const Polynomial& f, SolveOptions opts = {});

}  // namespace deephole

#endif

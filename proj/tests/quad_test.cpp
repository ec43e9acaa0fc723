#include "deephole/quad.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "deephole/grs.hpp"

namespace deephole {
namespace {

const std::vector<const char*> kOddFields = {"3",  "5",  "7",  "9",  "11", "13", "17", "19", "23", "25",
                                             "27", "29", "31", "37", "41", "43", "47", "49"};

void expect_distinct_solution(const QuadSystem& sys, const SolverWitness& w) {
    ASSERT_EQ(w.tuple().size(), sys.t);
    EXPECT_EQ(std::set<Elem>(w.tuple().begin(), w.tuple().end()).size(), sys.t);
    EXPECT_EQ(evaluate_system(sys, w.tuple()), sys.b);
}

TEST(CharSum, Examples) {
    auto f7 = Field::parse("7");
    EXPECT_EQ(char_sum(*f7, 0), 6);
    EXPECT_EQ(char_sum(*f7, 3), -1);
    EXPECT_EQ(char_sum(*Field::parse("5"), 1), -1);
    try {
        char_sum(*Field::parse("8"), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OddCharRequired);
    }
}

TEST(CharSum, ExhaustiveBounds) {
    for (const char* spec : kOddFields) {
        auto f = Field::parse(spec);
        EXPECT_EQ(char_sum(*f, 0), static_cast<long long>(f->q()) - 1);
        for (Elem c = 1; c < f->q(); ++c) {
            const auto s = char_sum(*f, c);
            EXPECT_LE(std::llabs(s), 3) << spec << " c=" << c;
            EXPECT_EQ(s, -1) << spec << " c=" << c;
        }
    }
}

TEST(DoubleSquares, Examples) {
    auto f7 = Field::parse("7");
    EXPECT_EQ(count_double_squares(*f7, 1, 1), 2u);
    EXPECT_EQ(count_double_squares(*Field::parse("5"), 1, 4), 2u);
    try {
        count_double_squares(*f7, 0, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroParameter);
    }
    EXPECT_THROW(count_double_squares(*f7, 1, 0), Error);
}

TEST(DoubleSquares, ExhaustiveBound) {
    for (const char* spec : kOddFields) {
        auto f = Field::parse(spec);
        for (Elem a = 1; a < f->q(); ++a) {
            for (Elem c = 1; c < f->q(); ++c) {
                EXPECT_GE(4 * count_double_squares(*f, a, c), f->q() - 1) << spec << ' ' << a << ' ' << c;
            }
        }
    }
}

TEST(ShiftReduce, Examples) {
    auto f7 = Field::parse("7");
    const auto r = shift_reduce(*f7, 3, 1, 0);
    EXPECT_EQ(r.shift, 2u);
    EXPECT_EQ(r.beta, 3u);
    const auto id = shift_reduce(*f7, 4, 0, 5);
    EXPECT_EQ(id.shift, 0u);
    EXPECT_EQ(id.beta, 5u);
    try {
        shift_reduce(*Field::parse("5"), 4, 1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CharacteristicDividesTPlusOne);
    }
}

TEST(ShiftReduce, RoundTrip) {
    std::mt19937 rng(41);
    const std::vector<const char*> fields = {"7", "9", "11", "13", "25", "27", "31"};
    for (int trial = 0; trial < 1000; ++trial) {
        auto f = Field::parse(fields[rng() % fields.size()]);
        const std::size_t t = 1 + rng() % (f->q() - 1);
        if ((t + 1) % f->p() == 0) continue;
        const Elem a = rng() % f->q();
        const Elem b = rng() % f->q();
        const auto r = shift_reduce(*f, t, a, b);
        std::vector<Elem> all = f->elements();
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Elem> y(all.begin(), all.begin() + t);
        std::vector<Elem> x;
        for (Elem v : y) x.push_back(f->add(v, r.shift));
        // The shift maps values of the reduced form onto values of the full form.
        const Elem reduced = evaluate_system({f, t, 0, 0, QuadMode::PairSumSquares}, y);
        const Elem full = evaluate_system({f, t, a, 0, QuadMode::Full}, x);
        EXPECT_EQ(f->add(reduced, b), f->add(full, r.beta));
    }
}

TEST(ComplementCheck, Examples) {
    auto f5 = Field::parse("5");
    const std::vector<Elem> s{1, 2};
    EXPECT_TRUE(complement_check(*f5, s));
    const std::vector<Elem> big{0, 1, 2};
    EXPECT_TRUE(complement_check(*f5, big));
    const std::vector<Elem> tiny{1};
    try {
        complement_check(*f5, tiny);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SizeOutOfRange);
    }
    const std::vector<Elem> too_big{0, 1, 2, 3};
    EXPECT_THROW(complement_check(*f5, too_big), Error);
}

TEST(ComplementCheck, RandomSubsets) {
    std::mt19937 rng(43);
    for (const char* spec : {"3", "5", "7", "9", "11", "13"}) {
        auto f = Field::parse(spec);
        if (f->q() < 4) continue;
        std::vector<Elem> all = f->elements();
        for (int trial = 0; trial < 1000; ++trial) {
            std::shuffle(all.begin(), all.end(), rng);
            const std::size_t size = 2 + rng() % (f->q() - 3);
            const std::vector<Elem> s(all.begin(), all.begin() + size);
            EXPECT_TRUE(complement_check(*f, s));
        }
    }
}

TEST(SolvePairsum, Examples) {
    auto f7 = Field::parse("7");
    const auto w = solve_pairsum(f7, 2, 3);
    expect_distinct_solution({f7, 2, 0, 3, QuadMode::PairSum}, w);

    auto f11 = Field::parse("11");
    expect_distinct_solution({f11, 5, 0, 0, QuadMode::PairSum}, solve_pairsum(f11, 5, 0));

    try {
        solve_pairsum(f7, 4, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RangeViolation);
    }
    EXPECT_THROW(solve_pairsum(f7, 1, 0), Error);
}

TEST(SolvePairsum, WholeRange) {
    for (const char* spec : {"5", "7", "9", "11", "13", "17", "19", "23", "25", "27", "29", "31", "37"}) {
        auto f = Field::parse(spec);
        for (std::size_t t = 2; t <= (f->q() - 1) / 2; ++t) {
            for (Elem b = 0; b < f->q(); ++b) {
                expect_distinct_solution({f, t, 0, b, QuadMode::PairSum}, solve_pairsum(f, t, b));
            }
        }
    }
}

TEST(SolverWitness, RejectsBadTuples) {
    auto f7 = Field::parse("7");
    const QuadSystem sys{f7, 3, 0, 0, QuadMode::Full};
    EXPECT_NO_THROW(SolverWitness::verified(sys, {0, 1, 2}, Strategy::Brute));
    EXPECT_THROW(SolverWitness::verified(sys, {1, 1, 2}, Strategy::Brute), Error);
    EXPECT_THROW(SolverWitness::verified(sys, {0, 1, 3}, Strategy::Brute), Error);
    EXPECT_THROW(SolverWitness::verified(sys, {0, 1}, Strategy::Brute), Error);
}

TEST(SolveMain, Examples) {
    auto f7 = Field::parse("7");
    const QuadSystem sys{f7, 3, 0, 0, QuadMode::Full};
    const auto w = solve_full(f7, 3, 0, 0);
    expect_distinct_solution(sys, w);
    // (1,2,4) also solves it; (0,1,2) is lexicographically smaller.
    EXPECT_NO_THROW(SolverWitness::verified(sys, {1, 2, 4}, Strategy::Brute));
    const auto lex = solve_system(sys, {.strategy = Strategy::Brute});
    EXPECT_EQ(lex.tuple(), (std::vector<Elem>{0, 1, 2}));

    const auto edge = solve_full(f7, 5, 3, 4);
    EXPECT_EQ(edge.strategy(), Strategy::Complement);
    expect_distinct_solution({f7, 5, 3, 4, QuadMode::Full}, edge);

    EXPECT_THROW(solve_full(f7, 2, 0, 0), Error);
    EXPECT_THROW(solve_full(f7, 6, 0, 0), Error);
    EXPECT_THROW(solve_full(Field::parse("5"), 3, 0, 0), Error);
}

TEST(SolveMain, AllParametersSmallFields) {
    for (const char* spec : {"7", "11", "13"}) {
        auto f = Field::parse(spec);
        for (std::size_t t = 3; t + 2 <= f->q(); ++t) {
            for (Elem a = 0; a < f->q(); ++a) {
                for (Elem b = 0; b < f->q(); ++b) {
                    expect_distinct_solution({f, t, a, b, QuadMode::Full}, solve_full(f, t, a, b));
                    if (f->q() == 7) EXPECT_TRUE(exists_bruteforce(*f, t, a, b));
                }
            }
        }
    }
}

TEST(SolveMain, EveryStrategyWhenForced) {
    auto f = Field::parse("37");
    for (Strategy s : {Strategy::Complement, Strategy::Induction, Strategy::Search, Strategy::Brute}) {
        const std::size_t t = s == Strategy::Complement ? 30 : 3 + (s == Strategy::Induction ? 1 : 0);
        for (Elem a : {0u, 5u}) {
            for (Elem b : {0u, 1u, 20u}) {
                const QuadSystem sys{f, t, a, b, QuadMode::Full};
                const auto w = solve_full(f, t, a, b, {.strategy = s});
                EXPECT_EQ(w.strategy(), s);
                expect_distinct_solution(sys, w);
            }
        }
    }
}

TEST(SolveMain, AutoPicksInductionInItsRange) {
    auto f = Field::parse("41");
    for (std::size_t t = 3; 6 * t + 11 < 41; ++t) {
        const auto w = solve_full(f, t, 7, 9);
        EXPECT_EQ(w.strategy(), Strategy::Induction);
        expect_distinct_solution({f, t, 7, 9, QuadMode::Full}, w);
    }
}

TEST(SolveMain, SearchIsSeeded) {
    auto f = Field::parse("13");
    const auto one = solve_full(f, 5, 2, 3, {.strategy = Strategy::Search, .seed = 7});
    const auto two = solve_full(f, 5, 2, 3, {.strategy = Strategy::Search, .seed = 7});
    EXPECT_EQ(one.tuple(), two.tuple());
}

TEST(SolveMain, NinePointFieldMatchesOracle) {
    auto f = Field::parse("9");
    for (std::size_t t = 3; t <= 7; ++t) {
        for (Elem a = 0; a < 9; ++a) {
            for (Elem b = 0; b < 9; ++b) {
                const QuadSystem sys{f, t, a, b, QuadMode::Full};
                if (exists_bruteforce(*f, t, a, b)) {
                    expect_distinct_solution(sys, solve_system(sys, {.strategy = Strategy::Search}));
                } else {
                    EXPECT_THROW(solve_system(sys, {.strategy = Strategy::Search}), Error);
                }
            }
        }
    }
}

TEST(ExistsBruteforce, FullSetHasOneCandidate) {
    auto f = Field::parse("7");
    std::vector<Elem> all = f->elements();
    const Elem value = evaluate_system({f, 7, 2, 0, QuadMode::Full}, all);
    for (Elem b = 0; b < 7; ++b) {
        EXPECT_EQ(exists_bruteforce(*f, 7, 2, b), b == value);
    }
    EXPECT_THROW(exists_bruteforce(*Field::parse("31"), 15, 0, 0, 1000), Error);
}

TEST(DegreeK2, Examples) {
    auto f7 = Field::parse("7");
    GrsCode k2(f7, "full", 2);
    const auto v = degree_k2_verdict(k2, 0, 0);
    EXPECT_FALSE(v.is_deep_hole);
    EXPECT_EQ(v.subset.size(), 3u);
    EXPECT_LE(v.g.degree(), 1);
    EXPECT_GE(v.agreement.size(), 3u);
    const auto word = word_from_poly(k2, Polynomial::monomial(f7, 1, 4));
    EXPECT_LE(error_distance(k2, word).distance, 4u);

    GrsCode k4(f7, "full", 4);
    const auto f = Polynomial::monomial(f7, 1, 6) + Polynomial::monomial(f7, 1, 5);
    const auto v4 = degree_k2_verdict(k4, f);
    EXPECT_FALSE(v4.is_deep_hole);
    EXPECT_GE(v4.agreement.size(), 5u);
    EXPECT_LT(error_distance(k4, word_from_poly(k4, f)).distance, 3u);

    EXPECT_THROW(degree_k2_verdict(GrsCode(f7, "star", 2), 0, 0), Error);
    EXPECT_THROW(degree_k2_verdict(GrsCode(f7, "full", 5), 0, 0), Error);
}

TEST(DegreeK2, CertificateFactorsExactly) {
    for (const char* spec : {"7", "11"}) {
        auto f = Field::parse(spec);
        for (std::size_t k = 2; k + 3 <= f->q(); ++k) {
            GrsCode code(f, "full", k);
            for (Elem a = 0; a < f->q(); a += 3) {
                for (Elem b = 0; b < f->q(); b += 2) {
                    const auto v = degree_k2_verdict(code, a, b);
                    std::vector<Elem> c(k + 3, 0);
                    c[k + 2] = 1;
                    c[k + 1] = f->neg(a);
                    c[k] = f->neg(b);
                    const Polynomial poly(f, c);
                    const Polynomial lhs = poly - v.g;
                    const Polynomial rhs = from_roots(f, v.subset) * Polynomial(f, {f->neg(v.gamma), 1});
                    EXPECT_EQ(lhs, rhs);
                    EXPECT_LT(error_distance(code, word_from_poly(code, poly)).distance, code.n() - k);
                }
            }
        }
    }
}

TEST(DegreeK2, GeneralLeadingCoefficient) {
    auto f = Field::parse("11");
    GrsCode code(f, "full", 3);
    std::mt19937 rng(47);
    for (int i = 0; i < 20; ++i) {
        std::vector<Elem> c(6);
        for (auto& x : c) x = rng() % 11;
        c[5] = 1 + rng() % 10;
        const Polynomial poly(f, c);
        const auto v = degree_k2_verdict(code, poly);
        EXPECT_FALSE(v.is_deep_hole);
        EXPECT_LT(error_distance(code, word_from_poly(code, poly)).distance, code.n() - 3);
    }
}

}  // namespace
}  // namespace deephole

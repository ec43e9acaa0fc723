// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// `acceptance AC3 AC7` runs a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "deephole/census.hpp"
#include "deephole/families.hpp"
#include "deephole/grs.hpp"
#include "deephole/quad.hpp"

using namespace deephole;

namespace {

struct Outcome {
    bool ok = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string note;
    std::string first_failure;

    void check(bool cond, const std::function<std::string()>& what) {
        ++checks;
        if (!cond) {
            if (failures == 0) first_failure = what();
            ++failures;
            ok = false;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::mt19937_64 rng_for(const char* id) {
    std::seed_seq seq(id, id + std::char_traits<char>::length(id));
    return std::mt19937_64(seq);
}

Polynomial random_poly(const FieldPtr& f, std::mt19937_64& rng, std::size_t len) {
    std::vector<Elem> c(len);
    for (auto& x : c) x = static_cast<Elem>(rng() % f->q());
    return Polynomial(f, std::move(c));
}

std::string str(const std::vector<Elem>& v) {
    std::string s;
    for (Elem x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

const std::vector<const char*> kSmallFields = {"5", "7", "8", "9", "11"};
const std::vector<const char*> kSets = {"full", "star", "star-minus-1"};

void ac1_sandwich(Outcome& o) {
    auto rng = rng_for("AC1");
    for (const char* spec : kSmallFields) {
        auto f = Field::parse(spec);
        for (const char* set : kSets) {
            const std::size_t n = parse_eval_set(*f, set).size();
            for (int i = 0; i < 200; ++i) {
                const std::size_t k = 1 + rng() % (n - 1);
                const std::size_t deg = k + rng() % (n - k);
                auto poly = random_poly(f, rng, deg + 1);
                std::vector<Elem> c(poly.coeffs().begin(), poly.coeffs().end());
                c.resize(deg + 1, 0);
                c[deg] = 1 + static_cast<Elem>(rng() % (f->q() - 1));
                poly = Polynomial(f, c);
                GrsCode code(f, set, k);
                const auto d = error_distance(code, word_from_poly(code, poly)).distance;
                o.check(n - deg <= d && d <= n - k, [&] {
                    return std::string(spec) + " " + set + " k=" + std::to_string(k) + " f=" + poly.to_string() +
                           " d=" + std::to_string(d);
                });
            }
        }
    }
}

void ac2_engines(Outcome& o) {
    auto f5 = Field::parse("5");
    GrsCode star5(f5, "star", 2);
    for (Elem w = 0; w < 625; ++w) {
        std::vector<Elem> v(4);
        Elem r = w;
        for (auto& x : v) {
            x = r % 5;
            r /= 5;
        }
        const Word u = word_from_values(star5, v);
        const auto a = error_distance(star5, u).distance;
        const auto b = error_distance_bruteforce(star5, u).distance;
        o.check(a == b, [&] { return "GF(5) star word " + str(v); });
    }
    auto rng = rng_for("AC2");
    for (auto [spec, k] : {std::pair{"7", 2u}, std::pair{"7", 3u}, std::pair{"8", 4u}}) {
        auto f = Field::parse(spec);
        for (const char* set : kSets) {
            GrsCode code(f, set, k);
            for (int i = 0; i < 1000; ++i) {
                std::vector<Elem> v(code.n());
                for (auto& x : v) x = static_cast<Elem>(rng() % f->q());
                const Word u = word_from_values(code, v);
                const auto a = error_distance(code, u);
                const auto b = error_distance_bruteforce(code, u);
                o.check(a.distance == b.distance, [&] {
                    return std::string(spec) + " " + set + " k=" + std::to_string(k) + " word " + str(v);
                });
            }
        }
    }
    o.note = "625 exhaustive + 9000 random words";
}

void ac3_generalized_family(Outcome& o) {
    auto rng = rng_for("AC3");
    std::uint64_t star_zero = 0;
    for (const char* spec : kSmallFields) {
        auto f = Field::parse(spec);
        const std::uint32_t q = f->q();
        std::vector<std::vector<Elem>> sets = {parse_eval_set(*f, "star"), parse_eval_set(*f, "star-minus-1")};
        for (int r = 0; r < 2; ++r) {
            std::vector<Elem> all = f->elements();
            std::shuffle(all.begin(), all.end(), rng);
            const std::size_t size = 2 + rng() % (q - 4);  // leaves at least 3 points outside
            all.resize(size);
            std::sort(all.begin(), all.end());
            sets.push_back(all);
        }
        for (const auto& points : sets) {
            const std::size_t n = points.size();
            std::set<std::size_t> ks{1, 2, (n + 1) / 2, n - 1};
            std::vector<Elem> outside;
            for (Elem x = 0; x < q; ++x) {
                if (!std::binary_search(points.begin(), points.end(), x)) outside.push_back(x);
            }
            std::shuffle(outside.begin(), outside.end(), rng);
            if (outside.size() > 3) outside.resize(3);
            std::sort(outside.begin(), outside.end());
            for (std::size_t k : ks) {
                if (k < 1 || k >= n) continue;
                GrsCode code(f, points, k);
                for (Elem b : outside) {
                    for (Elem a = 1; a < q; ++a) {
                        for (int i = 0; i < 10; ++i) {
                            const Polynomial tail = i == 0 ? Polynomial(f) : random_poly(f, rng, k);
                            const FamilyWordSpec s{Family::GeneralizedB, a, b, tail};
                            const auto d = error_distance(code, construct_family_word(code, s)).distance;
                            if (points.front() == 1 && n == q - 1 && b == 0) ++star_zero;
                            o.check(d == n - k, [&] {
                                return std::string(spec) + " D={" + str(points) + "} k=" + std::to_string(k) +
                                       " a=" + std::to_string(a) + " b=" + std::to_string(b) + " tail=" +
                                       tail.to_string() + " d=" + std::to_string(d);
                            });
                        }
                    }
                }
            }
        }
    }
    o.check(star_zero > 0, [] { return std::string("star with b = 0 never exercised"); });
    o.note = std::to_string(star_zero) + " of them with D = star, b = 0";
}

void ac4_zero_sets(Outcome& o) {
    auto f5 = Field::parse("5");
    for (Elem b = 0; b < 5; ++b) {
        std::vector<Elem> set;
        for (Elem x = 0; x < 5; ++x) {
            if (x != b) set.push_back(x);
        }
        for (Elem g0 = 0; g0 < 5; ++g0) {
            for (Elem g1 = 0; g1 < 5; ++g1) {
                const Polynomial g(f5, {g0, g1});
                o.check(zero_set_equivalence(f5, b, g, set),
                        [&] { return "GF(5) b=" + std::to_string(b) + " g=" + g.to_string(); });
            }
        }
    }
    auto rng = rng_for("AC4");
    for (auto [spec, k] : {std::pair{"7", 2u}, std::pair{"8", 4u}, std::pair{"9", 3u}}) {
        auto f = Field::parse(spec);
        for (int i = 0; i < 1000; ++i) {
            const Elem b = static_cast<Elem>(rng() % f->q());
            std::vector<Elem> set;
            for (Elem x = 0; x < f->q(); ++x) {
                if (x != b && (i % 2 == 0 || rng() % 3 != 0)) set.push_back(x);
            }
            const Polynomial g = random_poly(f, rng, k);
            o.check(zero_set_equivalence(f, b, g, set), [&] {
                return std::string(spec) + " b=" + std::to_string(b) + " g=" + g.to_string() + " D={" + str(set) + "}";
            });
        }
    }
}

void ac5_formulas(Outcome& o) {
    for (const char* spec : {"4", "5", "7", "8", "9", "11", "13"}) {
        auto f = Field::parse(spec);
        const auto star = parse_eval_set(*f, "star");
        for (std::size_t t = 0; t <= star.size(); ++t) {
            const auto brute = count_bruteforce({f, star, t, 0}).count;
            const auto formula = formula_full_star(f->q(), f->p(), t).count;
            o.check(brute == formula, [&] {
                return std::string("(i) q=") + spec + " t=" + std::to_string(t) + " brute=" + brute.str() +
                       " formula=" + formula.str();
            });
        }
    }
    for (const char* spec : {"5", "7", "11", "13"}) {
        auto f = Field::parse(spec);
        const auto set = parse_eval_set(*f, "star-minus-1");
        for (std::size_t t = 0; t <= set.size(); ++t) {
            for (Elem b = 0; b < f->q(); ++b) {
                const auto brute = count_bruteforce({f, set, t, b}).count;
                const auto formula = formula_star_minus_one(f->q(), t, b).count;
                o.check(brute == formula, [&] {
                    return std::string("(ii) q=") + spec + " t=" + std::to_string(t) + " b=" + std::to_string(b) +
                           " brute=" + brute.str() + " formula=" + formula.str();
                });
            }
        }
    }
}

void ac6_even_char(Outcome& o) {
    auto rng = rng_for("AC6");
    for (const char* spec : {"8", "16"}) {
        auto f = Field::parse(spec);
        const std::uint32_t q = f->q();
        for (const char* set : {"star", "star-minus-1"}) {
            GrsCode code(f, set, q - 4);
            const std::vector<Elem> points(code.points().begin(), code.points().end());
            const auto n = count_bruteforce({f, points, q - 3, 0}).count;
            o.check(n == 0, [&] { return std::string(spec) + " " + set + " N(q-3,0,D)=" + n.str(); });
            std::vector<Elem> as;
            if (q == 8) {
                for (Elem a = 1; a < q; ++a) as.push_back(a);
            } else {
                as = {1, 2, 7, 15};
            }
            for (Elem a : as) {
                for (int i = 0; i < 2; ++i) {
                    const Polynomial tail = i == 0 ? Polynomial(f) : random_poly(f, rng, code.k());
                    const Word u = construct_family_word(code, {Family::EvenChar, a, 0, tail});
                    const auto d = error_distance(code, u).distance;
                    bool ok = d == code.n() - code.k();
                    if (q == 8) ok = ok && error_distance_bruteforce(code, u).distance == d;
                    o.check(ok, [&] {
                        return std::string(spec) + " " + set + " a=" + std::to_string(a) + " tail=" + tail.to_string() +
                               " d=" + std::to_string(d);
                    });
                }
            }
        }
    }
}

void ac7_char_sums(Outcome& o) {
    std::set<long long> nonzero_values;
    for (const char* spec : {"3", "5", "7", "9", "11", "13", "17", "19", "23", "25", "27", "29", "31", "37", "41", "43",
                             "47", "49"}) {
        auto f = Field::parse(spec);
        const std::uint32_t q = f->q();
        o.check(char_sum(*f, 0) == static_cast<long long>(q) - 1, [&] { return std::string("c=0 at q=") + spec; });
        for (Elem c = 1; c < q; ++c) {
            const long long s = char_sum(*f, c);
            nonzero_values.insert(s);
            o.check(std::llabs(s) <= 3, [&] {
                return std::string("q=") + spec + " c=" + std::to_string(c) + " sum=" + std::to_string(s);
            });
        }
        for (Elem a = 1; a < q; ++a) {
            for (Elem c = 1; c < q; ++c) {
                const auto n = count_double_squares(*f, a, c);
                o.check(4 * n >= q - 1, [&] {
                    return std::string("q=") + spec + " a=" + std::to_string(a) + " c=" + std::to_string(c) +
                           " A=" + std::to_string(n);
                });
            }
        }
    }
    std::string vals;
    for (long long v : nonzero_values) vals += (vals.empty() ? "" : ",") + std::to_string(v);
    o.note = "exact char_sum over all c != 0: {" + vals + "}";
}

void ac8_main_equation(Outcome& o) {
    std::map<Strategy, std::uint64_t> used;
    for (const char* spec : {"7", "11", "13"}) {
        auto f = Field::parse(spec);
        for (std::size_t t = 3; t + 2 <= f->q(); ++t) {
            for (Elem a = 0; a < f->q(); ++a) {
                for (Elem b = 0; b < f->q(); ++b) {
                    const QuadSystem sys{f, t, a, b, QuadMode::Full};
                    bool ok = true;
                    try {
                        const auto w = solve_full(f, t, a, b);
                        ++used[w.strategy()];
                        ok = evaluate_system(sys, w.tuple()) == b;
                    } catch (const Error&) {
                        ok = false;
                    }
                    if (f->q() == 7) ok = ok && exists_bruteforce(*f, t, a, b);
                    o.check(ok, [&] {
                        return std::string("q=") + spec + " t=" + std::to_string(t) + " a=" + std::to_string(a) +
                               " b=" + std::to_string(b);
                    });
                }
            }
        }
    }
    for (auto [s, n] : used) o.note += (o.note.empty() ? "" : ", ") + std::string(strategy_name(s)) + "=" + std::to_string(n);
}

void ac9_degree_k2(Outcome& o) {
    auto check_poly = [&](const GrsCode& code, const Polynomial& f) {
        bool ok = true;
        std::string why;
        try {
            const auto v = degree_k2_verdict(code, f);
            const Polynomial monic = f.scaled(code.field().inv(f.leading()));
            const Polynomial gamma_factor(code.field_ptr(), {code.field().neg(v.gamma), 1});
            ok = !v.is_deep_hole && v.g.degree() < static_cast<int>(code.k()) &&
                 monic - v.g == from_roots(code.field_ptr(), v.subset) * gamma_factor &&
                 v.agreement.size() >= code.k() + 1;
            ok = ok && !is_deep_hole(code, word_from_poly(code, f));
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        o.check(ok, [&] {
            return "q=" + std::to_string(code.field().q()) + " k=" + std::to_string(code.k()) + " f=" + f.to_string() +
                   (why.empty() ? "" : " (" + why + ")");
        });
    };
    auto f7 = Field::parse("7");
    for (std::size_t k = 2; k <= 4; ++k) {
        GrsCode code(f7, "full", k);
        for (Elem a = 0; a < 7; ++a) {
            for (Elem b = 0; b < 7; ++b) {
                std::vector<Elem> c(k + 3, 0);
                c[k + 2] = 1;
                c[k + 1] = a;
                c[k] = b;
                check_poly(code, Polynomial(f7, c));
            }
        }
    }
    auto rng = rng_for("AC9");
    auto f11 = Field::parse("11");
    for (std::size_t k : {2u, 5u, 8u}) {
        GrsCode code(f11, "full", k);
        for (int i = 0; i < 20; ++i) {
            std::vector<Elem> c(k + 3, 0);
            c[k + 2] = 1;
            c[k + 1] = static_cast<Elem>(rng() % 11);
            c[k] = static_cast<Elem>(rng() % 11);
            check_poly(code, Polynomial(f11, c));
        }
    }
}

void ac10_identities(Outcome& o) {
    auto rng = rng_for("AC10");
    for (const char* spec : {"4", "5", "7", "8", "9", "11", "13"}) {
        auto f = Field::parse(spec);
        std::vector<Elem> all = f->elements();
        for (int i = 0; i < 1000; ++i) {
            std::shuffle(all.begin(), all.end(), rng);
            const std::vector<Elem> s(all.begin(), all.begin() + 2 + rng() % (f->q() - 3));
            o.check(complement_check(*f, s), [&] { return std::string("q=") + spec + " S={" + str(s) + "}"; });
        }
    }
    const std::vector<const char*> odd = {"7", "9", "11", "13", "25", "27"};
    int done = 0;
    while (done < 1000) {
        auto f = Field::parse(odd[rng() % odd.size()]);
        const std::size_t t = 3 + rng() % (f->q() - 4);
        if ((t + 1) % f->p() == 0) continue;
        const Elem a = static_cast<Elem>(rng() % f->q());
        const Elem b = static_cast<Elem>(rng() % f->q());
        const auto r = shift_reduce(*f, t, a, b);
        const QuadSystem reduced{f, t, 0, r.beta, QuadMode::PairSumSquares};
        bool ok = true;
        try {
            SolveOptions opts;
            opts.strategy = Strategy::Search;
            opts.seed = rng();
            const auto y = solve_system(reduced, opts);
            std::vector<Elem> x;
            for (Elem v : y.tuple()) x.push_back(f->add(v, r.shift));
            ok = evaluate_system({f, t, a, b, QuadMode::Full}, x) == b;
            // and back: subtracting the shift returns a solution of the reduced system
            std::vector<Elem> back;
            for (Elem v : x) back.push_back(f->sub(v, r.shift));
            ok = ok && back == y.tuple() && evaluate_system(reduced, back) == r.beta;
        } catch (const Error&) {
            ok = false;
        }
        o.check(ok, [&] {
            return "q=" + std::to_string(f->q()) + " t=" + std::to_string(t) + " a=" + std::to_string(a) +
                   " b=" + std::to_string(b);
        });
        ++done;
    }
}

void ac11_determinism(Outcome& o) {
    const std::vector<std::vector<std::string>> commands = {
        {"scan", "--q", "7", "--set", "full", "--k", "2", "--deg-min", "2", "--deg-max", "5"},
        {"scan", "--q", "8", "--set", "star", "--k", "3", "--deg-min", "3", "--deg-max", "5", "--format", "json"},
        {"census", "--q", "11", "--set", "star-minus-1"},
        {"census", "--q", "29", "--set", "full", "--t", "14", "--method", "brute", "--format", "json"},
    };
    for (const auto& base : commands) {
        std::string reference;
        for (const char* threads : {"1", "2", "8", "1"}) {
            auto args = base;
            args.insert(args.end(), {"--threads", threads, "--seed", "0"});
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            const std::string body = cli::payload_of(out.str());
            if (reference.empty()) reference = body;
            o.check(code == cli::kOk && !body.empty() && body == reference, [&] {
                return base[0] + " " + base[2] + " threads=" + threads + " exit=" + std::to_string(code) + " " +
                       err.str();
            });
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {"AC1", "distance lies between n - deg f and n - k", 60, ac1_sandwich},
        {"AC2", "subset engine equals codeword brute force", 300, ac2_engines},
        {"AC3", "a(x-b)^(q-2) + tail is a deep hole for proper D", 300, ac3_generalized_family},
        {"AC4", "zero sets of (x-b)^(q-2) - g and 1 - (x-b)g agree", 60, ac4_zero_sets},
        {"AC5", "closed-form subset counts equal enumeration", 60, ac5_formulas},
        {"AC6", "x^(q-3) words are deep holes in characteristic 2", 120, ac6_even_char},
        {"AC7", "quadratic character sums and square-pair counts", 60, ac7_char_sums},
        {"AC8", "full symmetric quadratic equation always solvable", 600, ac8_main_equation},
        {"AC9", "degree k+2 words over F_q are never deep holes", 600, ac9_degree_k2},
        {"AC10", "complement identity and shift round trip", 60, ac10_identities},
        {"AC11", "scan/census bytes independent of threads and reruns", 60, ac11_determinism},
    };
    const std::set<std::string> only(argv + 1, argv + argc);

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.first_failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        std::printf("[%s] %-4s %s: %llu checks, %llu failures, %.2f s (limit %.0f s)", pass ? "PASS" : "FAIL", c.id,
                    c.title, static_cast<unsigned long long>(o.checks), static_cast<unsigned long long>(o.failures),
                    secs, c.limit_seconds);
        if (!o.note.empty()) std::printf("; %s", o.note.c_str());
        if (!o.first_failure.empty()) std::printf("; first failure: %s", o.first_failure.c_str());
        if (!in_time) std::printf("; over time limit");
        std::printf("\n");
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

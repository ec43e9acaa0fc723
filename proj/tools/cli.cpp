#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "deephole/census.hpp"
#include "deephole/combinatorics.hpp"
#include "deephole/families.hpp"
#include "deephole/grs.hpp"
#include "deephole/quad.hpp"

namespace deephole::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::string q;
    std::string set;
    std::size_t k = 2;
    unsigned threads = 1;
    std::string out;
    std::string format;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
};

struct Result {
    Json payload;
    std::string csv;  // empty when the command has no tabular form
    std::string method;
    int exit = kOk;
};

void add_common(CLI::App* app, Common& c, bool needs_set, bool needs_k) {
    app->add_option("--q", c.q, "field: 7, 2^3, or 2^3:mod=1,1,0,1")->required();
    if (needs_set) app->add_option("--set", c.set, "full | star | star-minus-1 | list:<enc>,...");
    if (needs_k) app->add_option("--k", c.k, "code dimension");
    app->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app->add_option("--out", c.out, "write to this path instead of stdout");
    app->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--seed", c.seed, "seed for randomized steps");
    app->add_option("--budget", c.budget, "engine budget; overrides the environment");
}

std::uint64_t resolve_budget(const Common& c) {
    if (c.budget) return *c.budget;
    if (const char* env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
        std::uint64_t v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw Error(Errc::InvalidInput, std::string(kBudgetEnv) + " is not an unsigned integer");
        }
        return v;
    }
    return 0;
}

EngineOptions engine_options(const Common& c) { return {resolve_budget(c), c.threads}; }

Elem parse_elem(const Field& f, long long v, const char* name) {
    if (v < 0 || static_cast<unsigned long long>(v) >= f.q()) {
        throw Error(Errc::InvalidInput, std::string(name) + " must be an enc value in [0, q)");
    }
    return static_cast<Elem>(v);
}

Json big_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
    return v.str();
}

Json elems_json(std::span<const Elem> xs) { return Json(std::vector<Elem>(xs.begin(), xs.end())); }

std::vector<Elem> sorted(std::span<const Elem> xs) {
    std::vector<Elem> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    return v;
}

bool same_set(const Field& f, std::span<const Elem> points, const char* spec) {
    return sorted(points) == sorted(parse_eval_set(f, spec));
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    return s + '\n';
}

const char* tf(bool b) { return b ? "true" : "false"; }

Polynomial random_poly(const FieldPtr& f, std::mt19937_64& rng, std::size_t len) {
    std::vector<Elem> c(len);
    for (auto& x : c) x = static_cast<Elem>(rng() % f->q());
    return Polynomial(f, std::move(c));
}

// ---- distance -------------------------------------------------------------

struct DistanceArgs {
    std::string poly;
    std::string engine = "subset";
};

Result cmd_distance(const Common& c, const DistanceArgs& a) {
    const auto field = Field::parse(c.q);
    const std::string set = c.set.empty() ? "full" : c.set;
    GrsCode code(field, set, c.k);
    const auto f = Polynomial::parse(field, a.poly);
    const Word u = word_from_poly(code, f);
    const auto opts = engine_options(c);
    const DistanceReport r = a.engine == "brute" ? error_distance_bruteforce(code, u, opts) : error_distance(code, u, opts);

    const int deg = u.interp().degree();
    std::size_t lo = 0, hi = 0;
    if (deg >= static_cast<int>(code.k())) std::tie(lo, hi) = degree_bounds(code, u.interp());
    const bool deep = r.distance == code.n() - code.k();

    Result res;
    res.method = a.engine;
    res.payload = Json{{"field", field->to_string()},
                       {"set", set},
                       {"n", code.n()},
                       {"k", code.k()},
                       {"poly_enc_coeffs", f.to_string()},
                       {"reduced", u.reduced()},
                       {"deg", deg < 0 ? Json(nullptr) : Json(deg)},
                       {"bound_lo", lo},
                       {"bound_hi", hi},
                       {"distance", r.distance},
                       {"is_deep_hole", deep},
                       {"witness_poly", r.witness.to_string()},
                       {"agreement_set_enc", elems_json(r.agreement_set)}};
    res.csv = csv_line({"n", "k", "deg", "bound_lo", "bound_hi", "distance", "is_deep_hole", "witness_poly"}) +
              csv_line({std::to_string(code.n()), std::to_string(code.k()), deg < 0 ? "" : std::to_string(deg),
                        std::to_string(lo), std::to_string(hi), std::to_string(r.distance), tf(deep),
                        '"' + r.witness.to_string() + '"'});
    return res;
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
    int deg_min = 0;
    int deg_max = 0;
};

Result cmd_scan(const Common& c, const ScanArgs& a) {
    const auto field = Field::parse(c.q);
    const std::string set = c.set.empty() ? "full" : c.set;
    GrsCode code(field, set, c.k);
    const ScanResult r = scan_deep_holes(code, a.deg_min, a.deg_max, engine_options(c));

    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"degree", row.degree},
                        {"poly_enc_coeffs", row.poly.to_string()},
                        {"distance", row.distance},
                        {"is_deep_hole", row.is_deep_hole}});
    }
    Json summary = Json::array();
    for (const auto& s : r.summary) {
        Json hist = Json::object();
        for (auto [d, n] : s.histogram) hist[std::to_string(d)] = n;
        summary.push_back({{"degree", s.degree},
                           {"representatives", s.representatives},
                           {"deep_holes", s.deep_holes},
                           {"histogram", hist}});
    }
    Result res;
    res.method = "subset";
    res.payload = Json{{"field", field->to_string()}, {"set", set}, {"n", code.n()}, {"k", code.k()},
                       {"summary", summary}, {"rows", rows}};
    res.csv = scan_csv(r);
    return res;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
    std::optional<std::size_t> t;
    std::optional<long long> b;
    std::string method = "both";
};

Result cmd_census(const Common& c, const CensusArgs& a) {
    const auto field = Field::parse(c.q);
    const std::string set = c.set.empty() ? "star" : c.set;
    const auto points = parse_eval_set(*field, set);
    {
        const std::set<Elem> distinct(points.begin(), points.end());
        if (distinct.size() != points.size()) throw Error(Errc::DuplicateNode, "evaluation set has repeated points");
    }
    const bool is_star = same_set(*field, points, "star");
    const bool is_star_minus_one = field->q() > 2 && same_set(*field, points, "star-minus-1");

    std::vector<std::size_t> ts;
    if (a.t) {
        if (*a.t > points.size()) throw Error(Errc::InvalidInput, "t exceeds |D|");
        ts.push_back(*a.t);
    } else {
        for (std::size_t t = 0; t <= points.size(); ++t) ts.push_back(t);
    }
    std::vector<Elem> bs;
    if (a.b) {
        bs.push_back(parse_elem(*field, *a.b, "--b"));
    } else {
        bs = field->elements();
    }

    const bool want_brute = a.method != "formula";
    const bool want_formula = a.method != "brute";
    CensusOptions copts;
    if (const auto budget = resolve_budget(c)) copts.budget = budget;
    copts.threads = c.threads;

    Result res;
    res.method = a.method;
    res.csv = csv_line({"t", "b_enc", "count_brute", "count_formula", "match"});
    Json rows = Json::array();
    bool all_match = true;
    for (std::size_t t : ts) {
        for (Elem b : bs) {
            std::optional<BigInt> brute, formula;
            if (want_brute) brute = count_bruteforce({field, points, t, b}, copts).count;
            if (want_formula) {
                if (is_star && b == 0) {
                    formula = formula_full_star(field->q(), field->p(), t).count;
                } else if (is_star_minus_one && field->is_prime_field()) {
                    formula = formula_star_minus_one(field->q(), t, b).count;
                } else if (!want_brute) {
                    throw Error(Errc::InvalidInput,
                                "no closed form for this (D, b): it needs D = F_q^* with b = 0, or D = F_q^* minus {1} "
                                "with q prime");
                }
            }
            std::optional<bool> match;
            if (brute && formula) {
                match = *brute == *formula;
                all_match = all_match && *match;
            }
            rows.push_back({{"t", t},
                            {"b_enc", b},
                            {"count_brute", brute ? big_json(*brute) : Json(nullptr)},
                            {"count_formula", formula ? big_json(*formula) : Json(nullptr)},
                            {"match", match ? Json(*match) : Json(nullptr)}});
            res.csv += csv_line({std::to_string(t), std::to_string(b), brute ? brute->str() : "",
                                 formula ? formula->str() : "", match ? tf(*match) : ""});
        }
    }
    res.payload = Json{{"field", field->to_string()}, {"set", set}, {"method", a.method}, {"rows", rows}};
    if (!all_match) res.exit = kCheckFailed;
    return res;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    std::size_t t = 0;
    long long a = 0;
    long long b = 0;
    std::string mode = "full";
    std::string strategy = "auto";
};

Result cmd_solve(const Common& c, const SolveArgs& s) {
    const auto field = Field::parse(c.q);
    const QuadSystem sys{field, s.t, parse_elem(*field, s.a, "--a"), parse_elem(*field, s.b, "--b"),
                         parse_quad_mode(s.mode)};
    SolveOptions opts;
    opts.strategy = parse_strategy(s.strategy);
    opts.seed = c.seed;
    if (const auto budget = resolve_budget(c)) opts.exhaustive_budget = budget;
    const SolverWitness w = solve_system(sys, opts);

    Result res;
    res.method = std::string(strategy_name(w.strategy()));
    res.payload = Json{{"field", field->to_string()},
                       {"t", s.t},
                       {"a_enc", sys.a},
                       {"b_enc", sys.b},
                       {"mode", quad_mode_name(sys.mode)},
                       {"tuple_enc", elems_json(w.tuple())}};
    if (sys.mode == QuadMode::Full) {
        Elem gamma = sys.a;
        for (Elem x : w.tuple()) gamma = field->sub(gamma, x);
        res.payload["gamma_enc"] = gamma;
    }
    res.payload["strategy"] = strategy_name(w.strategy());
    res.payload["seed"] = c.seed;
    res.payload["verified"] = true;
    return res;
}

// ---- charsum --------------------------------------------------------------

Result cmd_charsum(const Common& c, std::optional<long long> only) {
    const auto field = Field::parse(c.q);
    std::vector<Elem> cs;
    if (only) {
        cs.push_back(parse_elem(*field, *only, "--c"));
    } else {
        cs = field->elements();
    }
    Result res;
    res.method = "direct";
    res.csv = csv_line({"c_enc", "char_sum", "within_bound"});
    Json rows = Json::array();
    bool ok = true;
    for (Elem x : cs) {
        const long long s = char_sum(*field, x);
        const bool within = x == 0 ? s == static_cast<long long>(field->q()) - 1 : std::llabs(s) <= 3;
        ok = ok && within;
        rows.push_back({{"c_enc", x}, {"char_sum", s}, {"within_bound", within}});
        res.csv += csv_line({std::to_string(x), std::to_string(s), tf(within)});
    }
    res.payload = Json{{"field", field->to_string()}, {"rows", rows}};
    if (!ok) res.exit = kCheckFailed;
    return res;
}

// ---- field ----------------------------------------------------------------

Result cmd_field(const Common& c, std::optional<long long> xo, std::optional<long long> yo) {
    const auto field = Field::parse(c.q);
    Result res;
    res.method = "tables";
    res.payload = Json{{"spec", field->to_string()},
                       {"p", field->p()},
                       {"m", field->m()},
                       {"q", field->q()},
                       {"modulus", field->modulus()},
                       {"minus_one_enc", field->minus_one()}};
    if (field->p() != 2) {
        std::vector<Elem> squares;
        for (Elem x = 1; x < field->q(); ++x) {
            if (field->eta(x) == 1) squares.push_back(x);
        }
        res.payload["nonzero_squares_enc"] = squares;
    }
    res.csv = csv_line({"p", "m", "q", "modulus"}) +
              csv_line({std::to_string(field->p()), std::to_string(field->m()), std::to_string(field->q()),
                        '"' + Polynomial(Field::make(field->p()), field->modulus()).to_string() + '"'});
    if (xo) {
        const Elem x = parse_elem(*field, *xo, "--x");
        Json ops{{"x", x}, {"neg", field->neg(x)}, {"inv", x == 0 ? Json(nullptr) : Json(field->inv(x))}};
        if (field->p() != 2) ops["eta"] = field->eta(x);
        if (yo) {
            const Elem y = parse_elem(*field, *yo, "--y");
            ops["y"] = y;
            ops["add"] = field->add(x, y);
            ops["sub"] = field->sub(x, y);
            ops["mul"] = field->mul(x, y);
            ops["div"] = y == 0 ? Json(nullptr) : Json(field->div(x, y));
        }
        res.payload["ops"] = ops;
    }
    return res;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string family;
    std::optional<long long> a;
    std::optional<long long> b;
    std::size_t samples = 10;
    bool k_given = false;
};

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    Json counterexample = nullptr;

    void record(bool ok, const std::function<Json()>& describe) {
        ++checks;
        if (!ok) {
            if (failures == 0) counterexample = describe();
            ++failures;
        }
    }
};

std::vector<Elem> nonzero_or(const Field& f, const std::optional<long long>& v, const char* name) {
    if (v) {
        const Elem x = parse_elem(f, *v, name);
        if (x == 0) throw Error(Errc::InvalidInput, std::string(name) + " must be nonzero");
        return {x};
    }
    std::vector<Elem> out;
    for (Elem x = 1; x < f.q(); ++x) out.push_back(x);
    return out;
}

std::vector<Elem> outside_points(const GrsCode& code, const std::optional<long long>& v) {
    if (v) {
        const Elem b = parse_elem(code.field(), *v, "--b");
        if (code.contains_point(b)) throw Error(Errc::EvaluationSetContainsB, "--b lies in D");
        return {b};
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < code.field().q(); ++x) {
        if (!code.contains_point(x)) out.push_back(x);
    }
    if (out.empty()) throw Error(Errc::InvalidInput, "D is all of F_q; this family needs a point outside D");
    return out;
}

Result cmd_verify(const Common& c, const VerifyArgs& v) {
    const auto field = Field::parse(c.q);
    const EngineOptions eopts = engine_options(c);
    std::mt19937_64 rng(c.seed);
    Tally tally;
    Json details = Json::object();
    std::string set = c.set;
    std::size_t k = c.k;
    const std::string& fam = v.family;

    if (fam == "degree-k" || fam == "generalized-b" || fam == "even-char") {
        if (set.empty()) set = "star";
        if (fam == "even-char" && !v.k_given) {
            if (field->q() < 5) throw Error(Errc::SpecViolation, "even-char needs q > 4");
            k = field->q() - 4;
        }
        GrsCode code(field, set, k);
        const Family family = parse_family(fam);
        const auto as = nonzero_or(*field, v.a, "--a");
        const std::vector<Elem> bs = family == Family::GeneralizedB ? outside_points(code, v.b) : std::vector<Elem>{0};
        if (family == Family::EvenChar) {
            family_polynomial(code, {family, 1, 0, std::nullopt});  // validates (q, k, D)
            const auto n = count_bruteforce({field, {code.points().begin(), code.points().end()}, field->q() - 3, 0}).count;
            details["subset_count_q_minus_3"] = big_json(n);
            tally.record(n == 0, [&] { return Json{{"subset_count_q_minus_3", big_json(n)}}; });
        }
        for (Elem b : bs) {
            for (Elem a : as) {
                for (std::size_t i = 0; i < v.samples; ++i) {
                    const Polynomial tail = i == 0 ? Polynomial(field) : random_poly(field, rng, k);
                    const FamilyWordSpec spec{family, a, b, tail};
                    tally.record(verify_family(code, spec, eopts), [&] {
                        return Json{{"a_enc", a}, {"b_enc", b}, {"tail", tail.to_string()},
                                    {"poly", family_polynomial(code, spec).to_string()}};
                    });
                }
            }
        }
    } else if (fam == "deg-k2") {
        if (set.empty()) set = "full";
        GrsCode code(field, set, k);
        const auto as = v.a ? std::vector<Elem>{parse_elem(*field, *v.a, "--a")} : field->elements();
        const auto bs = v.b ? std::vector<Elem>{parse_elem(*field, *v.b, "--b")} : field->elements();
        SolveOptions sopts;
        sopts.seed = c.seed;
        for (Elem a : as) {
            for (Elem b : bs) {
                const DegreeK2Verdict verdict = degree_k2_verdict(code, a, b, sopts);
                std::vector<Elem> coeffs(k + 3, 0);
                coeffs[k + 2] = 1;
                coeffs[k + 1] = field->neg(a);
                coeffs[k] = field->neg(b);
                const Polynomial f(field, coeffs);
                const auto d = error_distance(code, word_from_poly(code, f), eopts).distance;
                tally.record(!verdict.is_deep_hole && d < code.n() - k, [&] {
                    return Json{{"a_enc", a}, {"b_enc", b}, {"distance", d}, {"subset_enc", elems_json(verdict.subset)}};
                });
            }
        }
    } else if (fam == "zero-sets" || fam == "keylem") {
        if (set.empty()) set = "star";
        GrsCode code(field, set, k);
        const auto bs = outside_points(code, v.b);
        const std::uint64_t space = pow_u64(field->q(), k);
        const bool exhaustive = space <= 4096;
        details["exhaustive"] = exhaustive;
        for (Elem b : bs) {
            const std::uint64_t count = exhaustive ? space : v.samples;
            for (std::uint64_t i = 0; i < count; ++i) {
                std::vector<Elem> coeffs(k);
                std::uint64_t r = i;
                for (auto& x : coeffs) {
                    if (exhaustive) {
                        x = static_cast<Elem>(r % field->q());
                        r /= field->q();
                    } else {
                        x = static_cast<Elem>(rng() % field->q());
                    }
                }
                const Polynomial g(field, coeffs);
                tally.record(zero_set_equivalence(field, b, g, code.points()),
                             [&] { return Json{{"b_enc", b}, {"g", g.to_string()}}; });
            }
        }
    } else if (fam == "charsum") {
        Json values = Json::array();
        for (Elem x = 0; x < field->q(); ++x) {
            const long long s = char_sum(*field, x);
            values.push_back({{"c_enc", x}, {"char_sum", s}});
            const bool ok = x == 0 ? s == static_cast<long long>(field->q()) - 1 : std::llabs(s) <= 3;
            tally.record(ok, [&] { return Json{{"c_enc", x}, {"char_sum", s}}; });
        }
        details["values"] = values;
    } else if (fam == "square-pairs" || fam == "sqrtnum") {
        std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
        for (Elem a = 1; a < field->q(); ++a) {
            for (Elem x = 1; x < field->q(); ++x) {
                const auto n = count_double_squares(*field, a, x);
                least = std::min(least, n);
                tally.record(4 * n >= field->q() - 1, [&] { return Json{{"a_enc", a}, {"c_enc", x}, {"count", n}}; });
            }
        }
        details["least_count"] = least;
        details["bound_times_4"] = field->q() - 1;
    } else if (fam == "census-formulas") {
        CensusOptions copts;
        if (const auto budget = resolve_budget(c)) copts.budget = budget;
        copts.threads = c.threads;
        const auto star = parse_eval_set(*field, "star");
        for (std::size_t t = 0; t <= star.size(); ++t) {
            const auto brute = count_bruteforce({field, star, t, 0}, copts).count;
            const auto formula = formula_full_star(field->q(), field->p(), t).count;
            tally.record(brute == formula, [&] {
                return Json{{"formula", "full-star"}, {"t", t}, {"b_enc", 0}, {"brute", big_json(brute)},
                            {"formula_value", big_json(formula)}};
            });
        }
        details["star_minus_one_checked"] = field->is_prime_field() && field->q() > 2;
        if (field->is_prime_field() && field->q() > 2) {
            const auto set1 = parse_eval_set(*field, "star-minus-1");
            for (std::size_t t = 0; t <= set1.size(); ++t) {
                for (Elem b = 0; b < field->q(); ++b) {
                    const auto brute = count_bruteforce({field, set1, t, b}, copts).count;
                    const auto formula = formula_star_minus_one(field->q(), t, b).count;
                    tally.record(brute == formula, [&] {
                        return Json{{"formula", "star-minus-one"}, {"t", t}, {"b_enc", b}, {"brute", big_json(brute)},
                                    {"formula_value", big_json(formula)}};
                    });
                }
            }
        }
    } else {
        throw Error(Errc::InvalidInput, "unknown family '" + fam + "'");
    }

    Result res;
    res.method = fam;
    res.payload = Json{{"family", fam}, {"field", field->to_string()}};
    if (!set.empty()) res.payload["set"] = set;
    if (fam != "charsum" && fam != "square-pairs" && fam != "sqrtnum" && fam != "census-formulas") res.payload["k"] = k;
    res.payload["seed"] = c.seed;
    res.payload["checks"] = tally.checks;
    res.payload["failures"] = tally.failures;
    res.payload["passed"] = tally.failures == 0;
    res.payload["counterexample"] = tally.counterexample;
    res.payload["details"] = details;
    res.csv = csv_line({"family", "checks", "failures", "passed"}) +
              csv_line({fam, std::to_string(tally.checks), std::to_string(tally.failures), tf(tally.failures == 0)});
    if (tally.failures) res.exit = kCheckFailed;
    return res;
}

int exit_for(Errc e) {
    switch (e) {
    case Errc::BudgetExceeded:
        return kBudgetExceeded;
    case Errc::NoSolutionFound:
        return kCheckFailed;
    default:
        return kInvalidInput;
    }
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

std::string payload_of(const std::string& output) {
    if (output.rfind("# header:", 0) == 0) {
        const auto nl = output.find('\n');
        return nl == std::string::npos ? std::string() : output.substr(nl + 1);
    }
    const auto j = Json::parse(output, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("payload")) return output;
    return j["payload"].dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Deep holes of generalized Reed-Solomon codes: exact distances, subset-sum censuses and "
                 "symmetric quadratic solvers.",
                 "deephole"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    DistanceArgs dist;
    ScanArgs scan;
    CensusArgs census;
    SolveArgs solve;
    VerifyArgs verify;
    std::optional<long long> c_value, x_value, y_value;

    auto* distance = app.add_subcommand("distance", "exact error distance of one word");
    add_common(distance, common, true, true);
    distance->add_option("--poly", dist.poly, "coefficient encs, low degree first")->required();
    distance->add_option("--engine", dist.engine)->check(CLI::IsMember({"subset", "brute"}));

    auto* scan_cmd = app.add_subcommand("scan", "distances of every monic representative in a degree range");
    add_common(scan_cmd, common, true, true);
    scan_cmd->add_option("--deg-min", scan.deg_min)->required();
    scan_cmd->add_option("--deg-max", scan.deg_max)->required();

    auto* census_cmd = app.add_subcommand("census", "N(t, b, D) by enumeration and closed forms");
    add_common(census_cmd, common, true, false);
    census_cmd->add_option("--t", census.t, "subset size; all sizes when absent");
    census_cmd->add_option("--b", census.b, "target sum enc; all targets when absent");
    census_cmd->add_option("--method", census.method)->check(CLI::IsMember({"brute", "formula", "both"}));

    auto* solve_cmd = app.add_subcommand("solve", "distinct solution of a symmetric quadratic equation");
    add_common(solve_cmd, common, false, false);
    solve_cmd->add_option("--t", solve.t)->required();
    solve_cmd->add_option("--a", solve.a);
    solve_cmd->add_option("--b", solve.b);
    solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"pairsum", "pairsum+squares", "squares", "full"}));
    solve_cmd->add_option("--strategy", solve.strategy)
        ->check(CLI::IsMember({"auto", "complement", "induction", "search", "brute"}));

    auto* charsum_cmd = app.add_subcommand("charsum", "sum over x of eta(x^2 + c)");
    add_common(charsum_cmd, common, false, false);
    charsum_cmd->add_option("--c", c_value, "single c enc; all c when absent");

    auto* verify_cmd = app.add_subcommand("verify", "sweep one family of claims; exit 1 on a counterexample");
    add_common(verify_cmd, common, true, true);
    verify_cmd->add_option("--family", verify.family)
        ->required()
        ->check(CLI::IsMember({"degree-k", "generalized-b", "even-char", "deg-k2", "zero-sets", "keylem", "charsum",
                               "square-pairs", "sqrtnum", "census-formulas"}));
    verify_cmd->add_option("--a", verify.a);
    verify_cmd->add_option("--b", verify.b);
    verify_cmd->add_option("--samples", verify.samples, "random tails or polynomials per parameter choice");

    auto* field_cmd = app.add_subcommand("field", "field parameters and element arithmetic");
    add_common(field_cmd, common, false, false);
    field_cmd->add_option("--x", x_value);
    field_cmd->add_option("--y", y_value)->needs(field_cmd->get_option("--x"));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kInvalidInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Result res;
    try {
        if (command == "distance") {
            res = cmd_distance(common, dist);
        } else if (command == "scan") {
            res = cmd_scan(common, scan);
        } else if (command == "census") {
            res = cmd_census(common, census);
        } else if (command == "solve") {
            res = cmd_solve(common, solve);
        } else if (command == "charsum") {
            res = cmd_charsum(common, c_value);
        } else if (command == "verify") {
            verify.k_given = verify_cmd->count("--k") > 0;
            res = cmd_verify(common, verify);
        } else {
            res = cmd_field(common, x_value, y_value);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const Json header{{"tool", "deephole"},
                      {"version", kVersion},
                      {"command", command},
                      {"config", join_args(args)},
                      {"seed", common.seed},
                      {"method", res.method},
                      {"threads", common.threads},
                      {"wall_clock_ms", elapsed},
                      {"exit_code", res.exit}};

    std::string format = common.format;
    if (format.empty()) format = (command == "scan" || command == "census" || command == "charsum") ? "csv" : "json";
    std::string text;
    if (format == "csv") {
        text = "# header: " + header.dump() + '\n' + res.csv;
    } else {
        text = Json{{"header", header}, {"payload", res.payload}}.dump(2) + '\n';
    }
    if (common.out.empty()) {
        out << text;
    } else {
        std::ofstream f(common.out, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << common.out << '\n';
            return kInvalidInput;
        }
    }
    return res.exit;
}

}  // namespace deephole::cli

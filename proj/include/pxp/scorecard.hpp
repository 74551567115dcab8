#ifndef PXP_SCORECARD_HPP
#define PXP_SCORECARD_HPP

#include <functional>
#include <random>
#include <sstream>

#include "pxp/compare.hpp"
#include "pxp/report.hpp"

namespace pxp {

// One verification check: id, human name, verdict, a short detail line, the
// wall time, and a digest of the mathematical outcomes (used to compare runs
// across coefficient fields).
struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
    double budget_ms = 0.0;  // 0 = no budget
    std::string digest;
};

struct ScorecardOptions {
    int max_points = 10;
    int jobs = 2;
    bool enforce_budgets = true;
};

namespace detail {

struct CheckBuilder {
    std::ostringstream detail;
    std::ostringstream digest;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }

    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }

    void record(const std::string& key, const std::string& value) {
        digest << key << "=" << value << ";";
    }
};

inline std::vector<P1Point> random_axis_coords(int n, std::mt19937& rng) {
    std::vector<P1Point> out;
    while (static_cast<int>(out.size()) < n) {
        long long num = static_cast<long long>(rng() % 25) - 12;
        long long den = static_cast<long long>(rng() % 4) + 1;
        P1Point cand(Rational::one(), Rational::from_fraction(num, den));
        bool fresh = true;
        for (const auto& p : out) fresh = fresh && !(p == cand);
        if (fresh) out.push_back(cand);
    }
    return out;
}

inline const char* golden_triple_power[] = {
    "y0^3*y1^3",        "x0*y0^3*y1^2",     "x0*x1*y0^2*y1^2", "x0^2*y0^3*y1",
    "x0^2*x1*y0^2*y1",  "x0^2*x1^2*y0*y1",  "x0^3*y0^3",       "x0^3*x1*y0^2",
    "x0^3*x1^2*y0",     "x0^3*x1^3",
};

// The three-point corner configuration: both backends must reproduce the
// monomial generators, the ten-product cube, and its equality with the
// symbolic cube.
template <class K>
void check_triple_power_corner(CheckBuilder& b) {
    PointConfiguration X = PointConfiguration::from_partition(Partition({2, 1}));
    auto expect_prime = [&](std::pair<int, int> pt, const char* g1, const char* g2) {
        Ideal<K> P = point_ideal<K>(X, pt);
        Ideal<K> E({Polynomial<K>::parse(g1), Polynomial<K>::parse(g2)});
        b.require(ideal_equal(P, E), std::string("point prime should be (") + g1 + "," + g2 + ")");
    };
    expect_prime({1, 1}, "x0", "y0");
    expect_prime({1, 2}, "x0", "y1");
    expect_prime({2, 1}, "x1", "y0");
    Ideal<K> I = defining_ideal<K>(X);
    Ideal<K> expected_I({Polynomial<K>::parse("x0*x1"), Polynomial<K>::parse("y0*y1"),
                         Polynomial<K>::parse("x0*y0")});
    b.require(ideal_equal(I, expected_I), "I(X) = (x0*x1, y0*y1, x0*y0) over " + K::name());
    std::vector<Polynomial<K>> golden;
    for (const char* s : golden_triple_power) golden.push_back(Polynomial<K>::parse(s));
    Ideal<K> G(std::move(golden));
    Ideal<K> P3 = ideal_power(I, 3);
    Ideal<K> S3 = symbolic_power<K>(X, 3);
    b.require(ideal_equal(P3, G), "I^3 matches the ten-product list over " + K::name());
    b.require(ideal_equal(S3, G), "I^(3) matches the ten-product list over " + K::name());
    b.require(ideal_equal(P3, S3), "I^(3) = I^3 over " + K::name());
    b.record("corner-" + K::name(), "equal");
}

}  // namespace detail

// Runs the full golden verification suite over the primary field K. The
// checks that are field-agreement statements always run both backends.
template <class K>
std::vector<CheckResult> run_scorecard(const ScorecardOptions& opts) {
    std::vector<CheckResult> results;

    auto run = [&](const std::string& id, const std::string& name, double budget_s,
                   const std::function<void(detail::CheckBuilder&)>& body) {
        detail::CheckBuilder b;
        detail::Stopwatch clock;
        try {
            body(b);
        } catch (const std::exception& e) {
            b.ok = false;
            b.note(std::string("exception: ") + e.what());
        }
        CheckResult r;
        r.id = id;
        r.name = name;
        r.millis = clock.millis();
        r.budget_ms = budget_s * 1000.0;
        r.pass = b.ok;
        if (opts.enforce_budgets && budget_s > 0 && r.millis > r.budget_ms) {
            r.pass = false;
            b.note("over budget: " + std::to_string(r.millis / 1000.0) + " s > " +
                   std::to_string(budget_s) + " s");
        }
        r.detail = b.detail.str();
        r.digest = b.digest.str();
        results.push_back(std::move(r));
    };

    run("1", "three-point corner: cube equals symbolic cube, both fields", 1.0,
        [&](detail::CheckBuilder& b) {
            detail::check_triple_power_corner<Fp>(b);
            detail::check_triple_power_corner<Rational>(b);
        });

    run("2", "six-point staircase: alpha, component dims, (4,4) witness", 10.0,
        [&](detail::CheckBuilder& b) {
            PointConfiguration X = PointConfiguration::from_partition(Partition({3, 2, 1}));
            Ideal<K> I = defining_ideal<K>(X);
            Ideal<K> P3 = ideal_power(I, 3);
            Ideal<K> S3 = symbolic_power<K>(X, 3);
            int a1 = alpha(I), a3 = alpha(P3);
            b.require(a1 == 3, "alpha(I) = 3, got " + std::to_string(a1));
            b.require(a3 == 9, "alpha(I^3) = 9, got " + std::to_string(a3));
            int dp = hilbert_dim(P3, {4, 4}), ds = hilbert_dim(S3, {4, 4});
            b.require(dp == 0, "dim (I^3)_(4,4) = 0, got " + std::to_string(dp));
            b.require(ds == 1, "dim (I^(3))_(4,4) = 1, got " + std::to_string(ds));
            ComparisonReport rep = compare_powers<K>(X, 3);
            b.require(rep.verdict == Verdict::NotEqual, "verdict must be not-equal");
            b.require(rep.witness_bidegree && *rep.witness_bidegree == Bidegree{4, 4},
                      "witness bidegree must be (4,4)");
            b.record("staircase6", verdict_name(rep.verdict) +
                                       (rep.witness_bidegree ? rep.witness_bidegree->str() : ""));
        });

    run("3", "double power equals square on every partition up to the bound", 300.0,
        [&](detail::CheckBuilder& b) {
            int checked = 0;
            for (const Partition& lam : partitions_up_to(opts.max_points)) {
                PointConfiguration X = PointConfiguration::from_partition(lam);
                Ideal<K> I = defining_ideal<K>(X);
                bool eq = ideal_equal(symbolic_power<K>(X, 2), ideal_power(I, 2));
                b.require(eq, "I^(2) = I^2 for partition " + lam.str());
                ++checked;
            }
            b.note(std::to_string(checked) + " partitions checked");
            b.record("squares", std::to_string(checked));
        });

    run("4", "near-rectangles (a,..,a,a-1): triple power equality", 180.0,
        [&](detail::CheckBuilder& b) {
            const std::pair<int, int> cases[] = {{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 4}};
            for (auto [t, a] : cases) {
                std::vector<int> parts(static_cast<std::size_t>(t), a);
                parts.push_back(a - 1);
                Partition lam(parts);
                ComparisonReport rep =
                    compare_powers<K>(PointConfiguration::from_partition(lam), 3);
                b.require(rep.verdict == Verdict::Equal,
                          "equality expected for partition " + lam.str());
                b.record("near-rect-" + lam.str(), verdict_name(rep.verdict));
            }
        });

    run("5", "witness families: explicit forms inside the symbolic cube only", 300.0,
        [&](detail::CheckBuilder& b) {
            struct Case {
                Partition lam;
                WitnessFamily family;
                Bidegree expect;
            };
            const Case cases[] = {
                {Partition({4, 3, 2, 1}), WitnessFamily::TailStaircase, {7, 4}},
                {Partition({5, 3, 2, 1}), WitnessFamily::TailStaircase, {7, 4}},
                {Partition({3, 2, 1}), WitnessFamily::RectangleStaircase, {4, 4}},
                {Partition({3, 3, 2, 1}), WitnessFamily::RectangleStaircase, {7, 4}},
            };
            for (const auto& c : cases) {
                PointConfiguration X = PointConfiguration::from_partition(c.lam);
                Ideal<K> S3 = symbolic_power<K>(X, 3);
                Ideal<K> P3 = ideal_power(defining_ideal<K>(X), 3);
                WitnessForm<K> w = witness_form<K>(X, c.family, &S3);
                b.require(w.degree == c.expect, "witness bidegree for " + c.lam.str() +
                                                    " should be " + c.expect.str() + ", got " +
                                                    w.degree.str());
                b.require(S3.contains(w.form), "witness in I^(3) for " + c.lam.str());
                b.require(!P3.contains(w.form), "witness outside I^3 for " + c.lam.str());
                ComparisonReport rep = compare_powers<K>(X, 3);
                b.require(rep.verdict == Verdict::NotEqual,
                          "verdict not-equal for " + c.lam.str());
                b.record("witness-" + c.lam.str(), w.degree.str());
            }
        });

    run("6", "completion triple: closed-form generators match the intersections", 120.0,
        [&](detail::CheckBuilder& b) {
            const std::pair<int, int> cases[] = {{1, 2}, {2, 2}, {1, 3}};
            for (auto [t, a] : cases) {
                std::vector<int> parts(static_cast<std::size_t>(t), a);
                parts.push_back(a - 1);
                Partition lam(parts);
                PointConfiguration X = PointConfiguration::from_partition(lam);
                CompletionSchemes<K> cs = completion_schemes<K>(X);
                Ideal<K> Y_forms(completion_generator_forms<K>(X));
                b.require(ideal_equal(Y_forms, cs.completion),
                          "seven forms generate the completion ideal for " + lam.str());
                auto seps = completion_separator_forms<K>(X);
                Ideal<K> W_forms = ideal_sum(Y_forms, Ideal<K>({seps[0], seps[1]}));
                b.require(ideal_equal(W_forms, cs.intermediate),
                          "separator pair extends to the intermediate ideal for " + lam.str());
                Ideal<K> Z_forms =
                    ideal_sum(W_forms, Ideal<K>({completion_last_separator<K>(X)}));
                b.require(ideal_equal(Z_forms, cs.triple),
                          "last separator reaches the triple symbolic power for " + lam.str());
                b.record("completion-" + lam.str(), "ok");
            }
        });

    run("7", "sweep: verdicts against the two-distinct-parts prediction", 900.0,
        [&](detail::CheckBuilder& b) {
            SweepReport sweep = conjecture_sweep<K>(opts.max_points, 3, opts.jobs);
            int open_rows = 0, open_agree = 0;
            for (const auto& row : sweep.rows) {
                switch (known_verdict(row.partition)) {
                    case KnownVerdict::ProvenEqual:
                        b.require(row.verdict == Verdict::Equal,
                                  "proven-equal partition " + row.partition.str());
                        break;
                    case KnownVerdict::ProvenNotEqual:
                        b.require(row.verdict == Verdict::NotEqual,
                                  "proven-not-equal partition " + row.partition.str());
                        break;
                    case KnownVerdict::Open:
                        ++open_rows;
                        open_agree += row.agrees ? 1 : 0;
                        break;
                }
                b.record("sweep-" + row.partition.str(), verdict_name(row.verdict));
            }
            b.note(std::to_string(sweep.rows.size()) + " partitions; " +
                   std::to_string(open_rows) + " open rows, " + std::to_string(open_agree) +
                   " agree with the prediction");
        });

    run("8", "property suite: bases, containments, dims, coordinate robustness", 0.0,
        [&](detail::CheckBuilder& b) {
            // Reduced bases are idempotent and remainders do not depend on
            // the listing order of the basis.
            {
                PointConfiguration X = PointConfiguration::from_partition(Partition({3, 2, 1}));
                Ideal<K> I = defining_ideal<K>(X);
                auto gb_I = I.groebner_basis();
                b.require(buchberger(gb_I, TermOrder::degrevlex()) == gb_I,
                          "reduced basis is idempotent");
                Ideal<K> S2 = symbolic_power<K>(X, 2);
                auto gb = S2.groebner_basis();
                Polynomial<K> probe = I.generators()[0] * I.generators()[1] +
                                      I.generators()[2] * I.generators()[2];
                Polynomial<K> nf = normal_form<K>(probe, gb, TermOrder::degrevlex());
                std::mt19937 rng(7);
                for (int trial = 0; trial < 4; ++trial) {
                    auto shuffled = gb;
                    std::shuffle(shuffled.begin(), shuffled.end(), rng);
                    b.require(normal_form<K>(probe, shuffled, TermOrder::degrevlex()) == nf,
                              "remainder independent of basis listing order");
                }
            }
            // Ordinary powers sit inside symbolic powers on the whole corpus.
            {
                int checked = 0;
                for (const Partition& lam : partitions_up_to(opts.max_points)) {
                    PointConfiguration X = PointConfiguration::from_partition(lam);
                    Ideal<K> I = defining_ideal<K>(X);
                    for (int m : {2, 3}) {
                        Ideal<K> S = symbolic_power<K>(X, m);
                        b.require(ideal_contains_all(S, ideal_power(I, m)),
                                  "I^" + std::to_string(m) + " inside I^(" + std::to_string(m) +
                                      ") for " + lam.str());
                        ++checked;
                    }
                }
                b.note(std::to_string(checked) + " containment checks");
            }
            // The two Hilbert-dimension routes agree up to (8,8).
            {
                const Partition lams[] = {Partition({2, 1}), Partition({3, 2, 1}),
                                          Partition({2, 2}), Partition({3, 1})};
                for (const Partition& lam : lams) {
                    PointConfiguration X = PointConfiguration::from_partition(lam);
                    Ideal<K> I = defining_ideal<K>(X);
                    const Ideal<K> ideals[] = {I, ideal_power(I, 2), ideal_power(I, 3),
                                               symbolic_power<K>(X, 2), symbolic_power<K>(X, 3)};
                    for (const auto& J : ideals) {
                        for (int a = 0; a <= 8; ++a)
                            for (int bb = 0; bb <= 8; ++bb)
                                b.require(hilbert_dim(J, {a, bb}) ==
                                              hilbert_dim_standard_monomials(J, {a, bb}),
                                          "dim routes agree at (" + std::to_string(a) + "," +
                                              std::to_string(bb) + ") for " + lam.str());
                    }
                }
            }
            // Verdicts are stable under relabeling and random coordinates.
            {
                const Partition lams[] = {Partition({2, 1}), Partition({3, 2, 1}),
                                          Partition({2, 2, 1})};
                for (const Partition& lam : lams) {
                    PointConfiguration X = PointConfiguration::from_partition(lam);
                    ComparisonReport base = compare_powers<K>(X, 3);
                    std::vector<int> rows(static_cast<std::size_t>(X.h())),
                        cols(static_cast<std::size_t>(X.v()));
                    for (int i = 0; i < X.h(); ++i)
                        rows[static_cast<std::size_t>(i)] = X.h() - i;
                    for (int j = 0; j < X.v(); ++j)
                        cols[static_cast<std::size_t>(j)] = X.v() - j;
                    ComparisonReport flipped = compare_powers<K>(X.permuted(rows, cols), 3);
                    b.require(flipped.verdict == base.verdict,
                              "verdict stable under relabeling for " + lam.str());
                    for (unsigned seed = 1; seed <= 5; ++seed) {
                        std::mt19937 rng(seed);
                        PointConfiguration Xr =
                            X.with_coords(detail::random_axis_coords(X.h(), rng),
                                          detail::random_axis_coords(X.v(), rng));
                        ComparisonReport rep = compare_powers<K>(Xr, 3);
                        b.require(rep.verdict == base.verdict,
                                  "verdict stable under random coordinates for " + lam.str());
                        bool same_bidegree =
                            rep.witness_bidegree.has_value() ==
                                base.witness_bidegree.has_value() &&
                            (!rep.witness_bidegree || *rep.witness_bidegree == *base.witness_bidegree);
                        b.require(same_bidegree,
                                  "witness bidegree stable under random coordinates for " +
                                      lam.str());
                    }
                    b.record("robust-" + lam.str(), verdict_name(base.verdict));
                }
            }
            // The prime-field and rational backends agree on verdicts.
            {
                int bound = std::min(opts.max_points, 8);
                for (const Partition& lam : partitions_up_to(bound)) {
                    PointConfiguration X = PointConfiguration::from_partition(lam);
                    ComparisonReport p = compare_powers<Fp>(X, 3);
                    ComparisonReport q = compare_powers<Rational>(X, 3);
                    bool same = p.verdict == q.verdict &&
                                p.witness_bidegree.has_value() == q.witness_bidegree.has_value() &&
                                (!p.witness_bidegree || *p.witness_bidegree == *q.witness_bidegree);
                    b.require(same, "field backends agree for " + lam.str());
                }
                b.note("backend agreement up to " + std::to_string(bound) + " points");
            }
        });

    run("9", "higher powers stay equal once the cube does", 300.0,
        [&](detail::CheckBuilder& b) {
            const Partition lams[] = {Partition({2, 1}), Partition({3, 2}), Partition({2, 2, 1})};
            for (const Partition& lam : lams) {
                HigherPowerReport rep = higher_power_consequence_check<K>(
                    PointConfiguration::from_partition(lam), 4);
                b.require(rep.all_equal, "equality at m=4 for " + lam.str());
                b.record("higher-" + lam.str(), rep.all_equal ? "equal" : "not-equal");
            }
        });

    return results;
}

inline std::string scorecard_lines(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
           << static_cast<long>(r.millis) << " ms";
        if (r.budget_ms > 0) os << " / budget " << static_cast<long>(r.budget_ms) << " ms";
        os << ")\n";
        if (!r.detail.empty() && (!r.pass || r.detail.find("FAILED") != std::string::npos))
            os << "       " << r.detail << "\n";
        passed += r.pass ? 1 : 0;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

inline bool scorecard_all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

inline std::string scorecard_digest(const std::vector<CheckResult>& results) {
    std::string s;
    for (const auto& r : results) s += r.digest;
    return s;
}

}  // namespace pxp

#endif

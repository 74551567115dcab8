#ifndef PXP_COMPARE_HPP
#define PXP_COMPARE_HPP

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pxp/hilbert.hpp"
#include "pxp/point_config.hpp"

namespace pxp {

enum class Verdict { Equal, NotEqual };

inline std::string verdict_name(Verdict v) { return v == Verdict::Equal ? "equal" : "not-equal"; }

// Outcome of comparing I(X)^(m) with I(X)^m. When they differ, carries the
// first reduced-basis element of the symbolic power outside the ordinary
// power (scanning ascending by leading monomial under degrevlex).
struct ComparisonReport {
    Partition partition;
    int m = 0;
    Verdict verdict = Verdict::Equal;
    std::optional<std::string> witness;
    std::optional<Bidegree> witness_bidegree;
    // Dimensions of the two components at the witness bidegree; the verdict
    // is certified by a Hilbert-function gap there, not only by membership.
    int witness_dim_symbolic = 0;
    int witness_dim_ordinary = 0;
    bool witness_membership_only = false;
    double millis = 0.0;
    std::string field;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace detail

// Decides I(X)^(m) = I(X)^m by one-sided membership: the ordinary power is
// always contained in the symbolic one, so equality holds exactly when every
// reduced-basis element of the symbolic power lies in the ordinary power.
template <class K>
ComparisonReport compare_powers(const PointConfiguration& X, int m) {
    if (m < 1) throw InvalidInput("compare_powers requires m >= 1");
    detail::Stopwatch clock;
    ComparisonReport rep;
    rep.partition = is_acm(X).acm ? partition_of(X).partition : Partition();
    rep.m = m;
    rep.field = K::name();
    Ideal<K> I = defining_ideal<K>(X);
    Ideal<K> P = ideal_power(I, m);
    Ideal<K> S = symbolic_power<K>(X, m);
    rep.verdict = Verdict::Equal;
    for (const auto& g : S.groebner_basis()) {
        if (!P.contains(g)) {
            rep.verdict = Verdict::NotEqual;
            rep.witness = g.str();
            Bidegree d = g.bidegree();
            rep.witness_bidegree = d;
            rep.witness_dim_symbolic = hilbert_dim(S, d);
            rep.witness_dim_ordinary = hilbert_dim(P, d);
            rep.witness_membership_only = !(rep.witness_dim_symbolic > rep.witness_dim_ordinary);
            break;
        }
    }
    rep.millis = clock.millis();
    return rep;
}

// ---------------------------------------------------------------------------
// Conjecture sweep
// ---------------------------------------------------------------------------

struct SweepRow {
    Partition partition;
    int distinct_parts = 0;
    Verdict verdict = Verdict::Equal;
    std::optional<Bidegree> witness_bidegree;
    bool predicted_equal = false;  // prediction: equal iff at most 2 distinct parts
    bool agrees = false;
    double millis = 0.0;
};

struct SweepReport {
    int max_points = 0;
    int m = 0;
    std::string field;
    std::string order = "degrevlex";
    std::vector<SweepRow> rows;
};

// Runs compare_powers over every partition with at most max_points cells and
// scores each verdict against the two-distinct-parts prediction. Rows are
// merged in enumeration order, so output does not depend on scheduling.
template <class K>
SweepReport conjecture_sweep(int max_points, int m = 3, int jobs = 1) {
    if (max_points < 1) throw InvalidInput("sweep requires max_points >= 1");
    std::vector<Partition> lams = partitions_up_to(max_points);
    SweepReport report;
    report.max_points = max_points;
    report.m = m;
    report.field = K::name();
    report.rows.resize(lams.size());
    auto run_one = [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        ComparisonReport cmp = compare_powers<K>(PointConfiguration::from_partition(lam), m);
        SweepRow row;
        row.partition = lam;
        row.distinct_parts = lam.distinct_parts();
        row.verdict = cmp.verdict;
        row.witness_bidegree = cmp.witness_bidegree;
        row.predicted_equal = row.distinct_parts <= 2;
        row.agrees = row.predicted_equal == (row.verdict == Verdict::Equal);
        row.millis = cmp.millis;
        report.rows[idx] = std::move(row);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < lams.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= lams.size()) break;
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return report;
}

// Classification of a partition into proven-equal, proven-not-equal, and
// open cases: rectangles and near-rectangles are proven equal, the two
// witness families are proven unequal.
enum class KnownVerdict { ProvenEqual, ProvenNotEqual, Open };

inline bool is_rectangle(const Partition& lam) { return lam.distinct_parts() == 1; }

inline bool matches_tail_staircase(const Partition& lam) {
    int h = lam.rows();
    if (h < 3) return false;
    if (lam.parts[static_cast<std::size_t>(h - 3)] != 3 ||
        lam.parts[static_cast<std::size_t>(h - 2)] != 2 ||
        lam.parts[static_cast<std::size_t>(h - 1)] != 1)
        return false;
    for (int i = 1; i <= h - 3; ++i)
        if (lam.parts[static_cast<std::size_t>(i - 1)] < h - i + 1) return false;
    return true;
}

inline bool matches_rectangle_staircase(const Partition& lam) {
    int h = lam.rows();
    int t = lam.parts[0];
    if (t < 3) return false;
    int m = h - t + 1;
    if (m < 1) return false;
    for (int i = 1; i <= h; ++i) {
        int expected = i <= m ? t : t - (i - m);
        if (lam.parts[static_cast<std::size_t>(i - 1)] != expected) return false;
    }
    return true;
}

inline KnownVerdict known_verdict(const Partition& lam) {
    if (is_rectangle(lam)) return KnownVerdict::ProvenEqual;
    if (near_rectangle_shape(lam)) return KnownVerdict::ProvenEqual;
    if (matches_tail_staircase(lam) || matches_rectangle_staircase(lam))
        return KnownVerdict::ProvenNotEqual;
    return KnownVerdict::Open;
}

// ---------------------------------------------------------------------------
// Narrative reports
// ---------------------------------------------------------------------------

// The counterexample package for the big-height question: an unmixed ideal
// of big height two with equality at m=2 but not at m=3.
struct BigHeightReport {
    Partition partition;
    ComparisonReport squares;
    ComparisonReport cubes;
    std::string narrative;
};

template <class K>
BigHeightReport big_height_question_report(const PointConfiguration& X) {
    FerrersLabeling L = partition_of(X);
    if (L.partition.distinct_parts() < 3)
        throw PreconditionFailed("partition " + L.partition.str() +
                                 " has fewer than 3 distinct parts; no inequality is expected");
    BigHeightReport rep;
    rep.partition = L.partition;
    rep.squares = compare_powers<K>(X, 2);
    rep.cubes = compare_powers<K>(X, 3);
    std::string nl = "\n";
    rep.narrative =
        "Configuration " + L.partition.str() + " over " + K::name() + ":" + nl +
        "  every associated prime of I(X) is a point ideal (row form, column form)," + nl +
        "  a height-2 complete intersection, so the big height of I(X) is 2." + nl +
        "  I(X)^(2) = I(X)^2: " + verdict_name(rep.squares.verdict) + nl +
        "  I(X)^(3) = I(X)^3: " + verdict_name(rep.cubes.verdict) + nl;
    if (rep.cubes.witness_bidegree) {
        rep.narrative += "  witness of bidegree " + rep.cubes.witness_bidegree->str() +
                         " in the triple symbolic power but not the cube:" + nl + "    " +
                         *rep.cubes.witness + nl;
        rep.narrative +=
            "  equality at the big height does not propagate to all powers.";
    }
    return rep;
}

// Empirical check of the consequence of the equality criterion: once m=3
// gives equality, higher powers must as well.
struct HigherPowerReport {
    Partition partition;
    std::vector<ComparisonReport> checks;  // m = 4 .. upto
    bool all_equal = true;
};

template <class K>
HigherPowerReport higher_power_consequence_check(const PointConfiguration& X, int upto) {
    if (upto > 5) throw PreconditionFailed("higher-power spot check is limited to m <= 5");
    ComparisonReport base = compare_powers<K>(X, 3);
    if (base.verdict != Verdict::Equal)
        throw PreconditionFailed("requires equality at m=3; got " + verdict_name(base.verdict));
    HigherPowerReport rep;
    rep.partition = base.partition;
    for (int m = 4; m <= upto; ++m) {
        rep.checks.push_back(compare_powers<K>(X, m));
        if (rep.checks.back().verdict != Verdict::Equal) rep.all_equal = false;
    }
    return rep;
}

}  // namespace pxp

#endif

#include <catch2/catch_amalgamated.hpp>

#include "pxp/compare.hpp"
#include "pxp/report.hpp"

using namespace pxp;

namespace {

template <class K>
Ideal<K> ideal_of(std::initializer_list<const char*> gens) {
    std::vector<Polynomial<K>> v;
    for (const char* s : gens) v.push_back(Polynomial<K>::parse(s));
    return Ideal<K>(std::move(v));
}

}  // namespace

TEST_CASE("component dimensions of the six-point staircase") {
    using K = Fp;
    PointConfiguration X = PointConfiguration::from_partition(Partition({3, 2, 1}));
    Ideal<K> I = defining_ideal<K>(X);
    Ideal<K> P3 = ideal_power(I, 3);
    Ideal<K> S3 = symbolic_power<K>(X, 3);
    CHECK(hilbert_dim(P3, {4, 4}) == 0);
    CHECK(hilbert_dim(S3, {4, 4}) == 1);
    CHECK(hilbert_dim(ideal_of<K>({"x0"}), {1, 0}) == 1);
    CHECK(alpha(I) == 3);
    CHECK(alpha(P3) == 9);
    CHECK(alpha(ideal_of<K>({"x0"})) == 1);
    CHECK_THROWS_AS(alpha(Ideal<K>()), ZeroIdeal);
    CHECK_THROWS_AS(hilbert_dim(ideal_of<K>({"x0 + y0"}), {1, 1}), NotBihomogeneous);
}

TEST_CASE("hilbert table cells sum to the full component dimension") {
    using K = Fp;
    PointConfiguration X = PointConfiguration::from_partition(Partition({2, 1}));
    Ideal<K> I2 = ideal_power(defining_ideal<K>(X), 2);
    Bidegree bound = default_table_bound(I2);
    HilbertTable t = build_hilbert_table(I2, bound);
    for (int a = 0; a <= bound.x; ++a)
        for (int b = 0; b <= bound.y; ++b) {
            auto [di, dq] = t.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            CHECK(di + dq == (a + 1) * (b + 1));
        }
}

TEST_CASE("alpha grows at least additively under products") {
    using K = Fp;
    for (const Partition& lam : partitions_up_to(6)) {
        PointConfiguration X = PointConfiguration::from_partition(lam);
        Ideal<K> I = defining_ideal<K>(X);
        Ideal<K> prev = I;
        for (int m = 2; m <= 3; ++m) {
            Ideal<K> cur = ideal_power(I, m);
            CHECK(alpha(cur) >= alpha(I) + alpha(prev));
            prev = cur;
        }
    }
}

TEST_CASE("comparisons on the benchmark staircases") {
    using K = Fp;
    PointConfiguration six = PointConfiguration::from_partition(Partition({3, 2, 1}));
    ComparisonReport rep2 = compare_powers<K>(six, 2);
    CHECK(rep2.verdict == Verdict::Equal);
    CHECK(!rep2.witness);
    ComparisonReport rep3 = compare_powers<K>(six, 3);
    CHECK(rep3.verdict == Verdict::NotEqual);
    REQUIRE(rep3.witness_bidegree);
    CHECK(*rep3.witness_bidegree == Bidegree{4, 4});
    CHECK(rep3.witness_dim_symbolic == 1);
    CHECK(rep3.witness_dim_ordinary == 0);
    CHECK(!rep3.witness_membership_only);
    // The witness honestly separates the two ideals.
    Ideal<K> P3 = ideal_power(defining_ideal<K>(six), 3);
    Ideal<K> S3 = symbolic_power<K>(six, 3);
    Polynomial<K> w = Polynomial<K>::parse(*rep3.witness);
    CHECK(S3.contains(w));
    CHECK(!P3.contains(w));

    CHECK(compare_powers<K>(six, 1).verdict == Verdict::Equal);
    CHECK(compare_powers<K>(PointConfiguration::from_partition(Partition({2, 1})), 3).verdict ==
          Verdict::Equal);
}

TEST_CASE("sweep rows, ordering, and determinism under parallelism") {
    using K = Fp;
    SweepReport rep = conjecture_sweep<K>(6, 3, 1);
    CHECK(rep.rows.size() == 29);  // partitions of 1..6
    // Enumeration: sizes ascending, lexicographically descending inside.
    CHECK(rep.rows[0].partition == Partition({1}));
    CHECK(rep.rows[1].partition == Partition({2}));
    CHECK(rep.rows[2].partition == Partition({1, 1}));
    CHECK(rep.rows[3].partition == Partition({3}));
    CHECK(rep.rows[4].partition == Partition({2, 1}));
    CHECK(rep.rows[5].partition == Partition({1, 1, 1}));
    auto find_row = [&](const Partition& lam) {
        for (const auto& row : rep.rows)
            if (row.partition == lam) return row;
        FAIL("partition missing from sweep");
        return rep.rows[0];
    };
    SweepRow staircase = find_row(Partition({3, 2, 1}));
    CHECK(staircase.verdict == Verdict::NotEqual);
    CHECK(staircase.distinct_parts == 3);
    CHECK(!staircase.predicted_equal);
    CHECK(staircase.agrees);
    CHECK(staircase.witness_bidegree == Bidegree{4, 4});
    for (const char* s : {"2,2,2", "3,3", "6", "2,1", "4,2"}) {
        SweepRow row = find_row(Partition::parse(s));
        CHECK(row.verdict == Verdict::Equal);
        CHECK(row.agrees);
    }
    SweepReport parallel = conjecture_sweep<K>(6, 3, 2);
    REQUIRE(parallel.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(parallel.rows[i].partition == rep.rows[i].partition);
        CHECK(parallel.rows[i].verdict == rep.rows[i].verdict);
    }
    SweepReport tiny = conjecture_sweep<K>(1, 3, 1);
    REQUIRE(tiny.rows.size() == 1);
    CHECK(tiny.rows[0].verdict == Verdict::Equal);
}

TEST_CASE("known-verdict classification") {
    CHECK(known_verdict(Partition({4, 4, 4})) == KnownVerdict::ProvenEqual);
    CHECK(known_verdict(Partition({3, 3, 2})) == KnownVerdict::ProvenEqual);
    CHECK(known_verdict(Partition({3, 2, 1})) == KnownVerdict::ProvenNotEqual);
    CHECK(known_verdict(Partition({4, 3, 2, 1})) == KnownVerdict::ProvenNotEqual);
    CHECK(known_verdict(Partition({3, 3, 2, 1})) == KnownVerdict::ProvenNotEqual);
    CHECK(known_verdict(Partition({4, 2, 1})) == KnownVerdict::Open);
    CHECK(known_verdict(Partition({3, 1})) == KnownVerdict::Open);
}

TEST_CASE("the big-height counterexample package") {
    using K = Fp;
    BigHeightReport rep = big_height_question_report<K>(
        PointConfiguration::from_partition(Partition({3, 2, 1})));
    CHECK(rep.squares.verdict == Verdict::Equal);
    CHECK(rep.cubes.verdict == Verdict::NotEqual);
    CHECK(rep.cubes.witness_bidegree == Bidegree{4, 4});
    CHECK(rep.narrative.find("big height") != std::string::npos);
    CHECK_THROWS_AS(big_height_question_report<K>(
                        PointConfiguration::from_partition(Partition({2, 1}))),
                    PreconditionFailed);
    BigHeightReport tall = big_height_question_report<K>(
        PointConfiguration::from_partition(Partition({4, 3, 2, 1})));
    CHECK(tall.squares.verdict == Verdict::Equal);
    CHECK(tall.cubes.verdict == Verdict::NotEqual);
}

TEST_CASE("equality propagates to higher powers") {
    using K = Fp;
    for (const char* s : {"2,1", "3,3", "3,2"}) {
        HigherPowerReport rep = higher_power_consequence_check<K>(
            PointConfiguration::from_partition(Partition::parse(s)), 4);
        CHECK(rep.all_equal);
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].m == 4);
    }
    CHECK_THROWS_AS(higher_power_consequence_check<K>(
                        PointConfiguration::from_partition(Partition({3, 2, 1})), 4),
                    PreconditionFailed);
    CHECK_THROWS_AS(higher_power_consequence_check<K>(
                        PointConfiguration::from_partition(Partition({2, 1})), 6),
                    PreconditionFailed);
}

TEST_CASE("comparison reports round-trip through JSON") {
    using K = Fp;
    for (const char* s : {"3,2,1", "2,2"}) {
        ComparisonReport rep =
            compare_powers<K>(PointConfiguration::from_partition(Partition::parse(s)), 3);
        ComparisonReport back = comparison_from_json(to_json(rep));
        CHECK(back.verdict == rep.verdict);
        CHECK(back.partition == rep.partition);
        CHECK(back.m == rep.m);
        CHECK(back.witness == rep.witness);
        CHECK(back.witness_bidegree == rep.witness_bidegree);
    }
}

TEST_CASE("sweep reports round-trip through JSON") {
    using K = Fp;
    SweepReport rep = conjecture_sweep<K>(6, 3, 1);
    SweepReport back = sweep_from_json(to_json(rep));
    REQUIRE(back.rows.size() == rep.rows.size());
    CHECK(back.m == rep.m);
    CHECK(back.max_points == rep.max_points);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].partition == rep.rows[i].partition);
        CHECK(back.rows[i].verdict == rep.rows[i].verdict);
        CHECK(back.rows[i].witness_bidegree == rep.rows[i].witness_bidegree);
        CHECK(back.rows[i].agrees == rep.rows[i].agrees);
    }
    std::string table = sweep_table(rep);
    CHECK(table.find("partition") != std::string::npos);
    CHECK(table.find("3,2,1") != std::string::npos);
}

TEST_CASE("hilbert dimension routes agree on a sample") {
    using K = Fp;
    PointConfiguration X = PointConfiguration::from_partition(Partition({2, 2}));
    Ideal<K> I = defining_ideal<K>(X);
    for (const Ideal<K>& J : {I, ideal_power(I, 2), symbolic_power<K>(X, 2)})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                CHECK(hilbert_dim(J, {a, b}) == hilbert_dim_standard_monomials(J, {a, b}));
}

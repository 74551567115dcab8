#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pxp/groebner.hpp"
#include "pxp/hilbert.hpp"
#include "pxp/point_config.hpp"

using namespace pxp;

namespace {

template <class K>
Ideal<K> ideal_of(std::initializer_list<const char*> gens) {
    std::vector<Polynomial<K>> v;
    for (const char* s : gens) v.push_back(Polynomial<K>::parse(s));
    return Ideal<K>(std::move(v));
}

template <class K>
std::vector<std::string> basis_strings(const Ideal<K>& I, TermOrder ord = {}) {
    std::vector<std::string> out;
    for (const auto& g : I.groebner_basis(ord)) out.push_back(g.str());
    return out;
}

// Brute-force oracle: dimension of (I cap J) in one bidegree by intersecting
// the coefficient row spaces, dim A + dim B - dim(A + B).
template <class K>
int component_intersection_dim(const Ideal<K>& I, const Ideal<K>& J, Bidegree d) {
    int da = hilbert_dim(I, d), db = hilbert_dim(J, d);
    std::vector<Monomial> basis = monomials_of_bidegree(d);
    std::vector<std::vector<K>> rows;
    auto add_rows = [&](const Ideal<K>& A) {
        for (const auto& g : A.generators()) {
            Bidegree gd = g.bidegree();
            if (!d.dominates(gd)) continue;
            for (const Monomial& m : monomials_of_bidegree(d - gd)) {
                std::vector<K> row(basis.size(), K::zero());
                for (const auto& [mm, cc] : g.terms())
                    for (std::size_t k = 0; k < basis.size(); ++k)
                        if (basis[k] == mm * m) row[k] += cc;
                rows.push_back(std::move(row));
            }
        }
    };
    add_rows(I);
    add_rows(J);
    if (rows.empty()) return 0;
    DenseMatrix<K> M(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k)
            M.at(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    return da + db - M.rank();
}

}  // namespace

TEMPLATE_TEST_CASE("normal form", "", Fp, Rational) {
    using K = TestType;
    TermOrder ord = TermOrder::degrevlex();
    auto nf = [&](const char* f, std::initializer_list<const char*> gens) {
        std::vector<Polynomial<K>> G;
        for (const char* s : gens) G.push_back(Polynomial<K>::parse(s));
        return normal_form<K>(Polynomial<K>::parse(f), G, ord);
    };
    CHECK(nf("x0*x1", {"x0*x1"}).is_zero());
    Polynomial<K> r = nf("x0^2*x1", {"x0*x1 - y0*y1"});
    CHECK(r == Polynomial<K>::parse("x0*y0*y1"));
    // The difference must be a multiple of the divisor.
    Ideal<K> G = ideal_of<K>({"x0*x1 - y0*y1"});
    CHECK(G.contains(Polynomial<K>::parse("x0^2*x1") - r));
    CHECK(nf("y0", {"x0"}) == Polynomial<K>::parse("y0"));
    // No term of a normal form is divisible by a leading term.
    Polynomial<K> big = Polynomial<K>::parse("x0^3*x1^2 + x0*x1*y0 + y1^3 + x0");
    Polynomial<K> rem = nf(big.str().c_str(), {"x0*x1 - y0*y1", "y0^2 - y1^2"});
    Monomial x0x1 = Monomial::variable(kVarX0) * Monomial::variable(kVarX1);
    for (const auto& [m, c] : rem.terms()) CHECK(!x0x1.divides(m));
}

TEMPLATE_TEST_CASE("buchberger on simple inputs", "", Fp, Rational) {
    using K = TestType;
    CHECK(basis_strings(ideal_of<K>({"x0", "y0"})) == std::vector<std::string>{"y0", "x0"});
    // Monomial ideals are their own reduced basis.
    CHECK(basis_strings(ideal_of<K>({"x0*x1", "y0*y1", "x0*y0"})) ==
          std::vector<std::string>{"y0*y1", "x0*y0", "x0*x1"});
    // Linear algebra on coefficients.
    CHECK(basis_strings(ideal_of<K>({"x0 - x1", "x0 + x1"})) ==
          std::vector<std::string>{"x1", "x0"});
    CHECK_THROWS_AS(buchberger<K>({Polynomial<K>()}, TermOrder::degrevlex()), ZeroIdeal);
}

TEST_CASE("groebner bases are idempotent and remainders are listing-independent") {
    using K = Fp;
    Ideal<K> I = ideal_of<K>({"x0^2*y0 - x1*y1^2", "x0*x1 - y0*y1", "x1^3 - y0^2*y1"});
    auto gb = I.groebner_basis();
    CHECK(buchberger(gb, TermOrder::degrevlex()) == gb);
    Polynomial<K> f = Polynomial<K>::parse("x0^4*y0^2 + x0*x1*y0*y1 + y1^5 + x0^2");
    Polynomial<K> expected = normal_form<K>(f, gb, TermOrder::degrevlex());
    std::mt19937 rng(3);
    for (int i = 0; i < 6; ++i) {
        auto shuffled = gb;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(normal_form<K>(f, shuffled, TermOrder::degrevlex()) == expected);
    }
}

TEMPLATE_TEST_CASE("membership", "", Fp, Rational) {
    using K = TestType;
    Ideal<K> I = ideal_of<K>({"x0*x1", "y0*y1", "x0*y0"});
    CHECK(I.contains(Polynomial<K>::parse("x0^3*x1*y0^2")));
    CHECK(!ideal_of<K>({"x0", "y0"}).contains(Polynomial<K>::parse("x1*y1")));
    CHECK(I.contains(Polynomial<K>()));
}

TEMPLATE_TEST_CASE("ideal powers", "", Fp, Rational) {
    using K = TestType;
    Ideal<K> I = ideal_of<K>({"x0*x1", "y0*y1", "x0*y0"});
    Ideal<K> cube = ideal_power(I, 3);
    CHECK(cube.generators().size() == 10);
    Ideal<K> golden = ideal_of<K>(
        {"y0^3*y1^3", "x0*y0^3*y1^2", "x0*x1*y0^2*y1^2", "x0^2*y0^3*y1", "x0^2*x1*y0^2*y1",
         "x0^2*x1^2*y0*y1", "x0^3*y0^3", "x0^3*x1*y0^2", "x0^3*x1^2*y0", "x0^3*x1^3"});
    CHECK(ideal_equal(cube, golden));
    CHECK(ideal_equal(ideal_power(I, 1), I));
    Ideal<K> ci = ideal_of<K>({"x0", "y0"});
    CHECK(ideal_equal(ideal_power(ci, 2), ideal_of<K>({"x0^2", "x0*y0", "y0^2"})));
    CHECK_THROWS_AS(ideal_power(I, 0), InvalidInput);
}

TEMPLATE_TEST_CASE("pairwise intersections", "", Fp, Rational) {
    using K = TestType;
    CHECK(ideal_equal(ideal_intersection(ideal_of<K>({"x0"}), ideal_of<K>({"y0"})),
                      ideal_of<K>({"x0*y0"})));
    CHECK(ideal_equal(ideal_intersection(ideal_of<K>({"x0", "y0"}), ideal_of<K>({"x0", "y1"})),
                      ideal_of<K>({"x0", "y0*y1"})));
    Ideal<K> triple = ideal_intersection(
        ideal_intersection(ideal_of<K>({"x0", "y0"}), ideal_of<K>({"x0", "y1"})),
        ideal_of<K>({"x1", "y0"}));
    CHECK(ideal_equal(triple, ideal_of<K>({"x0*x1", "x0*y0", "y0*y1"})));
}

TEST_CASE("monomial ideal intersections match the lcm rule") {
    using K = Fp;
    // For monomial ideals the intersection is generated by pairwise lcms.
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto random_monomial_ideal = [&]() {
            std::vector<Polynomial<K>> gens;
            int n = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < n; ++i) {
                Monomial m;
                m.e = {static_cast<std::uint16_t>(rng() % 3), static_cast<std::uint16_t>(rng() % 3),
                       static_cast<std::uint16_t>(rng() % 3), static_cast<std::uint16_t>(rng() % 3),
                       0};
                if (m.is_one()) m = Monomial::variable(kVarX0);
                gens.push_back(Polynomial<K>::term(m, K::one()));
            }
            return Ideal<K>(std::move(gens));
        };
        Ideal<K> I = random_monomial_ideal(), J = random_monomial_ideal();
        std::vector<Polynomial<K>> lcms;
        for (const auto& f : I.generators())
            for (const auto& g : J.generators())
                lcms.push_back(Polynomial<K>::term(
                    lcm(f.leading_monomial(), g.leading_monomial()), K::one()));
        CHECK(ideal_equal(ideal_intersection(I, J), Ideal<K>(std::move(lcms))));
    }
}

TEMPLATE_TEST_CASE("intersections agree with per-bidegree linear algebra", "", Fp, Rational) {
    using K = TestType;
    // Point ideals and their squares for up to three points; the elimination
    // route must match the componentwise oracle up to bidegree (6,6).
    PointConfiguration X = PointConfiguration::from_partition(Partition({2, 1}));
    std::vector<Ideal<K>> pieces;
    for (auto p : X.points()) pieces.push_back(point_ideal<K>(X, p));
    for (int m : {1, 2}) {
        std::vector<Ideal<K>> powered;
        for (const auto& P : pieces) powered.push_back(ideal_power(P, m));
        Ideal<K> pair = ideal_intersection(powered[0], powered[1]);
        Ideal<K> all = ideal_intersection(pair, powered[2]);
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 6; ++b) {
                CHECK(hilbert_dim(pair, {a, b}) ==
                      component_intersection_dim(powered[0], powered[1], {a, b}));
                CHECK(hilbert_dim(all, {a, b}) ==
                      component_intersection_dim(pair, powered[2], {a, b}));
            }
        }
        // Containment in both factors certifies the dimensions are honest.
        for (const auto& g : all.generators()) {
            for (const auto& P : powered) CHECK(P.contains(g));
        }
    }
}

TEST_CASE("intersection fold order does not change the reduced basis") {
    using K = Fp;
    PointConfiguration X = PointConfiguration::from_partition(Partition({2, 2}));
    std::vector<Ideal<K>> pieces;
    for (auto p : X.points()) pieces.push_back(ideal_power(point_ideal<K>(X, p), 2));
    Ideal<K> forward = intersect_all<K>(pieces);
    std::reverse(pieces.begin(), pieces.end());
    Ideal<K> backward = intersect_all<K>(pieces);
    CHECK(forward.groebner_basis() == backward.groebner_basis());
}

TEMPLATE_TEST_CASE("canonical equality", "", Fp, Rational) {
    using K = TestType;
    CHECK(ideal_equal(ideal_of<K>({"x0", "y0"}), ideal_of<K>({"y0", "x0"})));
    CHECK(!ideal_equal(ideal_of<K>({"x0"}), ideal_of<K>({"x0^2"})));
    // Mutual membership as a cross-check of the canonical route.
    Ideal<K> I = ideal_of<K>({"x0*x1 - y0*y1", "x0*y0"});
    Ideal<K> J = ideal_of<K>({"x0*y0", "x0*x1 - y0*y1", "x0^2*x1 - x0*y0*y1"});
    CHECK(ideal_equal(I, J));
    CHECK(ideal_contains_all(I, J));
    CHECK(ideal_contains_all(J, I));
}

TEST_CASE("bihomogeneous inputs give bihomogeneous reduced bases") {
    using K = Fp;
    PointConfiguration X = PointConfiguration::from_partition(Partition({3, 1}));
    Ideal<K> I = defining_ideal<K>(X);
    for (const auto& g : ideal_power(I, 2).groebner_basis()) CHECK(g.is_bihomogeneous());
    for (const auto& g : symbolic_power<K>(X, 2).groebner_basis()) {
        CHECK(g.is_bihomogeneous());
        CHECK(!g.has_elim_var());
    }
}

#ifndef PXP_POINT_CONFIG_HPP
#define PXP_POINT_CONFIG_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pxp/groebner.hpp"
#include "pxp/matrix.hpp"
#include "pxp/partitions.hpp"

namespace pxp {

// Point of P^1 with exact rational homogeneous coordinates [a:b], normalized
// so the first nonzero coordinate is 1. Its vanishing form is b*x0 - a*x1
// (or the y-analogue on the other factor).
class P1Point {
  public:
    P1Point(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_zero() && b_.is_zero()) throw InvalidInput("[0:0] is not a point of P^1");
        if (!a_.is_zero()) {
            Rational inv = a_.inv();
            a_ = Rational::one();
            b_ = b_ * inv;
        } else {
            b_ = Rational::one();
        }
    }

    static P1Point of(long long a, long long b) {
        return P1Point(Rational::from_int(a), Rational::from_int(b));
    }

    static P1Point parse(const std::string& text) {
        std::string s = text;
        if (s.size() < 5 || s.front() != '[' || s.back() != ']')
            throw InvalidInput("expected a point like [a:b], got '" + text + "'");
        s = s.substr(1, s.size() - 2);
        std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("expected a point like [a:b], got '" + text + "'");
        try {
            mpq_class a(s.substr(0, colon)), b(s.substr(colon + 1));
            a.canonicalize();
            b.canonicalize();
            return P1Point(Rational(a), Rational(b));
        } catch (const std::exception&) {
            throw InvalidInput("bad coordinate in '" + text + "'");
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool operator==(const P1Point& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const P1Point& o) const { return !(*this == o); }

    std::string str() const { return "[" + a_.str() + ":" + b_.str() + "]"; }

  private:
    Rational a_, b_;
};

// Default coordinate assignment along one axis: the first two points are the
// torus-fixed ones whose forms are the coordinate monomials, the rest are
// [1:k]. Keeps all small staircase ideals monomial and every coordinate
// rational, so the prime-field and rational backends agree.
inline std::vector<P1Point> default_axis_coords(int n) {
    std::vector<P1Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (i == 1)
            out.push_back(P1Point::of(0, 1));  // form x0 / y0
        else if (i == 2)
            out.push_back(P1Point::of(1, 0));  // form x1 / y1
        else
            out.push_back(P1Point::of(1, i - 2));
    }
    return out;
}

// Finite reduced subscheme of P^1 x P^1 given by its lattice diagram S_X
// (1-indexed (row, col) pairs) plus coordinates for the rulings that
// minimally contain it.
class PointConfiguration {
  public:
    PointConfiguration(std::vector<std::pair<int, int>> pts, std::vector<P1Point> row_coords,
                       std::vector<P1Point> col_coords)
        : pts_(std::move(pts)), rows_(std::move(row_coords)), cols_(std::move(col_coords)) {
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
        if (pts_.empty()) throw InvalidInput("empty point configuration");
        int h = static_cast<int>(rows_.size()), v = static_cast<int>(cols_.size());
        std::vector<bool> row_used(static_cast<std::size_t>(h) + 1, false);
        std::vector<bool> col_used(static_cast<std::size_t>(v) + 1, false);
        for (auto [i, j] : pts_) {
            if (i < 1 || i > h || j < 1 || j > v)
                throw InvalidInput("lattice point (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") outside the declared rulings");
            row_used[static_cast<std::size_t>(i)] = true;
            col_used[static_cast<std::size_t>(j)] = true;
        }
        for (int i = 1; i <= h; ++i)
            if (!row_used[static_cast<std::size_t>(i)])
                throw InvalidInput("row " + std::to_string(i) + " carries no point");
        for (int j = 1; j <= v; ++j)
            if (!col_used[static_cast<std::size_t>(j)])
                throw InvalidInput("column " + std::to_string(j) + " carries no point");
        check_distinct(rows_, "row");
        check_distinct(cols_, "column");
    }

    static PointConfiguration from_points(std::vector<std::pair<int, int>> pts) {
        int h = 0, v = 0;
        for (auto [i, j] : pts) {
            h = std::max(h, i);
            v = std::max(v, j);
        }
        return PointConfiguration(std::move(pts), default_axis_coords(h), default_axis_coords(v));
    }

    static PointConfiguration from_partition(const Partition& lambda) {
        return PointConfiguration(partition_points(lambda), default_axis_coords(lambda.rows()),
                                  default_axis_coords(lambda.parts[0]));
    }

    static PointConfiguration from_partition(const Partition& lambda, std::vector<P1Point> rows,
                                             std::vector<P1Point> cols) {
        return PointConfiguration(partition_points(lambda), std::move(rows), std::move(cols));
    }

    int h() const { return static_cast<int>(rows_.size()); }
    int v() const { return static_cast<int>(cols_.size()); }
    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<std::pair<int, int>>& points() const { return pts_; }

    bool contains(int i, int j) const {
        return std::binary_search(pts_.begin(), pts_.end(), std::make_pair(i, j));
    }

    const P1Point& row_coord(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }
    const P1Point& col_coord(int j) const { return cols_[static_cast<std::size_t>(j - 1)]; }

    int row_count(int i) const {
        int n = 0;
        for (auto [r, c] : pts_) n += r == i;
        return n;
    }
    int col_count(int j) const {
        int n = 0;
        for (auto [r, c] : pts_) n += c == j;
        return n;
    }

    PointConfiguration with_coords(std::vector<P1Point> rows, std::vector<P1Point> cols) const {
        return PointConfiguration(pts_, std::move(rows), std::move(cols));
    }

    // Relabel rulings: row_order[k] is the original (1-based) row that
    // becomes row k+1, and likewise for columns.
    PointConfiguration permuted(const std::vector<int>& row_order,
                                const std::vector<int>& col_order) const {
        std::vector<int> row_new(rows_.size() + 1, 0), col_new(cols_.size() + 1, 0);
        for (std::size_t k = 0; k < row_order.size(); ++k)
            row_new[static_cast<std::size_t>(row_order[k])] = static_cast<int>(k) + 1;
        for (std::size_t k = 0; k < col_order.size(); ++k)
            col_new[static_cast<std::size_t>(col_order[k])] = static_cast<int>(k) + 1;
        std::vector<std::pair<int, int>> pts;
        pts.reserve(pts_.size());
        for (auto [i, j] : pts_)
            pts.emplace_back(row_new[static_cast<std::size_t>(i)],
                             col_new[static_cast<std::size_t>(j)]);
        std::vector<P1Point> rows, cols;
        for (int i : row_order) rows.push_back(row_coord(i));
        for (int j : col_order) cols.push_back(col_coord(j));
        return PointConfiguration(std::move(pts), std::move(rows), std::move(cols));
    }

  private:
    static std::vector<std::pair<int, int>> partition_points(const Partition& lambda) {
        std::vector<std::pair<int, int>> pts;
        for (int i = 1; i <= lambda.rows(); ++i)
            for (int j = 1; j <= lambda.parts[static_cast<std::size_t>(i - 1)]; ++j)
                pts.emplace_back(i, j);
        return pts;
    }

    static void check_distinct(const std::vector<P1Point>& v, const char* axis) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j])
                    throw InvalidInput(std::string(axis) + " coordinates " + v[i].str() +
                                       " repeat");
    }

    std::vector<std::pair<int, int>> pts_;
    std::vector<P1Point> rows_, cols_;
};

// ---------------------------------------------------------------------------
// ACM detection and Ferrers relabeling
// ---------------------------------------------------------------------------

struct AcmVerdict {
    bool acm = false;
    // A violating pair: two points on distinct rows and columns with neither
    // completion point present.
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> violation;
};

inline AcmVerdict is_acm(const PointConfiguration& X) {
    const auto& pts = X.points();
    for (std::size_t s = 0; s < pts.size(); ++s) {
        for (std::size_t t = s + 1; t < pts.size(); ++t) {
            auto [i1, j1] = pts[s];
            auto [i2, j2] = pts[t];
            if (i1 == i2 || j1 == j2) continue;
            if (!X.contains(i1, j2) && !X.contains(i2, j1))
                return {false, std::make_pair(pts[s], pts[t])};
        }
    }
    return {true, std::nullopt};
}

struct FerrersLabeling {
    Partition partition;
    std::vector<int> row_order;  // new row k+1 is original row row_order[k]
    std::vector<int> col_order;
};

// Relabeling that turns the diagram of an ACM configuration into the Ferrers
// diagram of its partition: rows and columns sorted by point count, ties by
// original index.
inline FerrersLabeling partition_of(const PointConfiguration& X) {
    AcmVerdict verdict = is_acm(X);
    if (!verdict.acm) throw NotAcm(verdict.violation->first, verdict.violation->second);
    std::vector<int> row_order(static_cast<std::size_t>(X.h()));
    std::vector<int> col_order(static_cast<std::size_t>(X.v()));
    for (int i = 0; i < X.h(); ++i) row_order[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 0; j < X.v(); ++j) col_order[static_cast<std::size_t>(j)] = j + 1;
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](int a, int b) { return X.row_count(a) > X.row_count(b); });
    std::stable_sort(col_order.begin(), col_order.end(),
                     [&](int a, int b) { return X.col_count(a) > X.col_count(b); });
    std::vector<int> parts;
    parts.reserve(row_order.size());
    for (int i : row_order) parts.push_back(X.row_count(i));
    FerrersLabeling out{Partition(std::move(parts)), std::move(row_order), std::move(col_order)};
    PointConfiguration F = X.permuted(out.row_order, out.col_order);
    for (int i = 1; i <= F.h(); ++i)
        for (int j = 1; j <= F.v(); ++j)
            if (F.contains(i, j) != (j <= out.partition.parts[static_cast<std::size_t>(i - 1)]))
                throw MathError("ACM relabeling did not yield a Ferrers diagram");
    return out;
}

inline PointConfiguration ferrers_form(const PointConfiguration& X) {
    FerrersLabeling L = partition_of(X);
    return X.permuted(L.row_order, L.col_order);
}

// ASCII rendering of a diagram, rows top-down.
inline std::string ascii_diagram(const PointConfiguration& X) {
    std::string s;
    for (int i = 1; i <= X.h(); ++i) {
        for (int j = 1; j <= X.v(); ++j) {
            s += X.contains(i, j) ? '*' : '.';
            if (j < X.v()) s += ' ';
        }
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Ruling forms and ideals
// ---------------------------------------------------------------------------

enum class Axis { Row, Col };

// The bidegree-(1,0) (resp. (0,1)) form vanishing exactly on a ruling,
// canonically monic under degrevlex.
template <class K>
Polynomial<K> ruling_form(const PointConfiguration& X, Axis axis, int index) {
    if (index < 1 || index > (axis == Axis::Row ? X.h() : X.v()))
        throw InvalidInput("ruling index out of range: " + std::to_string(index));
    const P1Point& p = axis == Axis::Row ? X.row_coord(index) : X.col_coord(index);
    int v0 = axis == Axis::Row ? kVarX0 : kVarY0;
    int v1 = axis == Axis::Row ? kVarX1 : kVarY1;
    // [a:b] vanishes on b*X0 - a*X1.
    Polynomial<K> f =
        Polynomial<K>::term(Monomial::variable(v0), field_from_rational<K>(p.b())) -
        Polynomial<K>::term(Monomial::variable(v1), field_from_rational<K>(p.a()));
    return f.monic();
}

template <class K>
Ideal<K> point_ideal(const PointConfiguration& X, std::pair<int, int> p) {
    if (!X.contains(p.first, p.second))
        throw InvalidInput("lattice point (" + std::to_string(p.first) + "," +
                           std::to_string(p.second) + ") is not in the diagram");
    return Ideal<K>({ruling_form<K>(X, Axis::Row, p.first), ruling_form<K>(X, Axis::Col, p.second)});
}

namespace detail {

// Distinct rational coordinates can collide after reduction mod p; that
// would silently change the geometry, so refuse to continue.
template <class K>
void require_distinct_in_field(const PointConfiguration& X) {
    auto check_axis = [](auto coord, int n, const char* axis) {
        std::vector<std::pair<K, K>> mapped;
        for (int i = 1; i <= n; ++i)
            mapped.emplace_back(field_from_rational<K>(coord(i).a()),
                                field_from_rational<K>(coord(i).b()));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mapped[static_cast<std::size_t>(i)] == mapped[static_cast<std::size_t>(j)])
                    throw InvalidInput(std::string(axis) + " coordinates " + std::to_string(i + 1) +
                                       " and " + std::to_string(j + 1) + " coincide over " +
                                       K::name() + "; use a larger prime");
    };
    check_axis([&](int i) -> const P1Point& { return X.row_coord(i); }, X.h(), "row");
    check_axis([&](int j) -> const P1Point& { return X.col_coord(j); }, X.v(), "column");
}

// Product of ruling forms with per-index exponents; exponents[i-1] is the
// power of the i-th ruling on that axis.
template <class K>
Polynomial<K> ruling_product(const PointConfiguration& X, const std::vector<int>& row_exp,
                             const std::vector<int>& col_exp) {
    Polynomial<K> f = Polynomial<K>::one();
    for (std::size_t i = 0; i < row_exp.size(); ++i)
        for (int k = 0; k < row_exp[i]; ++k)
            f = f * ruling_form<K>(X, Axis::Row, static_cast<int>(i) + 1);
    for (std::size_t j = 0; j < col_exp.size(); ++j)
        for (int k = 0; k < col_exp[j]; ++k)
            f = f * ruling_form<K>(X, Axis::Col, static_cast<int>(j) + 1);
    return f;
}

}  // namespace detail

// Defining ideal I(X). For ACM configurations the staircase generating set
// {H_1..H_h, V_1..V_v} plus one mixed product per strict drop of the
// partition; otherwise the intersection of the point ideals.
template <class K>
Ideal<K> defining_ideal(const PointConfiguration& X) {
    detail::require_distinct_in_field<K>(X);
    AcmVerdict verdict = is_acm(X);
    if (!verdict.acm) {
        std::vector<Ideal<K>> points;
        points.reserve(static_cast<std::size_t>(X.size()));
        for (auto p : X.points()) points.push_back(point_ideal<K>(X, p));
        return intersect_all<K>(points);
    }
    FerrersLabeling L = partition_of(X);
    PointConfiguration F = X.permuted(L.row_order, L.col_order);
    const auto& lam = L.partition.parts;
    int h = F.h(), v = F.v();
    std::vector<Polynomial<K>> gens;
    std::vector<int> re(static_cast<std::size_t>(h), 1), ce(static_cast<std::size_t>(v), 0);
    gens.push_back(detail::ruling_product<K>(F, re, ce));  // H_1 ... H_h
    re.assign(static_cast<std::size_t>(h), 0);
    ce.assign(static_cast<std::size_t>(v), 1);
    gens.push_back(detail::ruling_product<K>(F, re, ce));  // V_1 ... V_v
    for (int i = 1; i < h; ++i) {
        if (lam[static_cast<std::size_t>(i)] < lam[static_cast<std::size_t>(i - 1)]) {
            re.assign(static_cast<std::size_t>(h), 0);
            ce.assign(static_cast<std::size_t>(v), 0);
            for (int k = 1; k <= i; ++k) re[static_cast<std::size_t>(k - 1)] = 1;
            for (int k = 1; k <= lam[static_cast<std::size_t>(i)]; ++k)
                ce[static_cast<std::size_t>(k - 1)] = 1;
            gens.push_back(detail::ruling_product<K>(F, re, ce));
        }
    }
    return Ideal<K>(std::move(gens));
}

// Zero-dimensional scheme with a multiplicity at each point of a reduced
// support; its ideal is the intersection of the matching point-ideal powers.
struct FatPointScheme {
    PointConfiguration base;
    std::vector<int> multiplicities;  // aligned with base.points()

    FatPointScheme(PointConfiguration b, std::vector<int> mult)
        : base(std::move(b)), multiplicities(std::move(mult)) {
        if (multiplicities.size() != base.points().size())
            throw InvalidInput("one multiplicity per support point required");
        for (int m : multiplicities)
            if (m < 1) throw InvalidInput("multiplicities must be positive");
    }

    static FatPointScheme uniform(PointConfiguration b, int m) {
        std::vector<int> mult(b.points().size(), m);
        return FatPointScheme(std::move(b), std::move(mult));
    }
};

template <class K>
Ideal<K> fat_ideal(const FatPointScheme& scheme) {
    detail::require_distinct_in_field<K>(scheme.base);
    Ideal<K> acc;
    bool first = true;
    for (std::size_t k = 0; k < scheme.base.points().size(); ++k) {
        Ideal<K> piece =
            ideal_power(point_ideal<K>(scheme.base, scheme.base.points()[k]),
                        scheme.multiplicities[k]);
        acc = first ? std::move(piece) : ideal_intersection(acc, piece);
        first = false;
    }
    return acc;
}

// Symbolic power I(X)^(m) = intersection over X of the m-th point-ideal
// powers, computed by folded pairwise elimination.
template <class K>
Ideal<K> symbolic_power(const PointConfiguration& X, int m) {
    if (m < 1) throw InvalidInput("symbolic power requires m >= 1");
    if (m == 1) return defining_ideal<K>(X);
    return fat_ideal<K>(FatPointScheme::uniform(X, m));
}

// ---------------------------------------------------------------------------
// Shape report for the double symbolic power
// ---------------------------------------------------------------------------

struct DoublePowerShapeReport {
    Partition partition;
    bool equals_square = false;          // I(X)^(2) == I(X)^2
    // Kept candidates (a,b,c,d): squares on the first a rows and c columns,
    // simple factors up to rows b and columns d.
    std::vector<std::array<int, 4>> shapes;
    int candidates_tested = 0;
};

template <class K>
DoublePowerShapeReport double_power_shape_report(const PointConfiguration& X) {
    FerrersLabeling L = partition_of(X);
    PointConfiguration F = X.permuted(L.row_order, L.col_order);
    Ideal<K> I = defining_ideal<K>(F);
    Ideal<K> S2 = symbolic_power<K>(F, 2);
    Ideal<K> P2 = ideal_power(I, 2);
    DoublePowerShapeReport report;
    report.partition = L.partition;
    report.equals_square = ideal_equal(S2, P2);
    int h = F.h(), v = F.v();
    std::vector<Polynomial<K>> kept;
    for (int b = 0; b <= h; ++b) {
        for (int a = 0; a <= b; ++a) {
            for (int d = 0; d <= v; ++d) {
                for (int c = 0; c <= d; ++c) {
                    if (b == 0 && d == 0) continue;
                    std::vector<int> re(static_cast<std::size_t>(h), 0);
                    std::vector<int> ce(static_cast<std::size_t>(v), 0);
                    for (int i = 1; i <= b; ++i) re[static_cast<std::size_t>(i - 1)] = i <= a ? 2 : 1;
                    for (int j = 1; j <= d; ++j) ce[static_cast<std::size_t>(j - 1)] = j <= c ? 2 : 1;
                    Polynomial<K> f = detail::ruling_product<K>(F, re, ce);
                    ++report.candidates_tested;
                    if (S2.contains(f)) {
                        kept.push_back(std::move(f));
                        report.shapes.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    if (!ideal_equal(Ideal<K>(kept), S2))
        throw ShapeNotFound("ruling-product candidates do not generate the double symbolic power");
    return report;
}

// ---------------------------------------------------------------------------
// Completion schemes for near-rectangle partitions (a,...,a,a-1)
// ---------------------------------------------------------------------------

struct NearRectangleShape {
    int t = 0;  // number of full rows of length a
    int a = 0;  // rectangle width, >= 2
};

inline std::optional<NearRectangleShape> near_rectangle_shape(const Partition& lambda) {
    int h = lambda.rows();
    if (h < 2) return std::nullopt;
    int a = lambda.parts[0];
    if (a < 2 || lambda.parts[static_cast<std::size_t>(h - 1)] != a - 1) return std::nullopt;
    for (int i = 0; i < h - 1; ++i)
        if (lambda.parts[static_cast<std::size_t>(i)] != a) return std::nullopt;
    return NearRectangleShape{h - 1, a};
}

// The triple of nested ideals around I(X)^(3): Z is the triple-point scheme
// on X, W adds the missing rectangle corner reduced, Y adds it doubled.
template <class K>
struct CompletionSchemes {
    Ideal<K> completion;    // I(Y) = I(X)^(3) meet I(P)^2
    Ideal<K> intermediate;  // I(W) = I(X)^(3) meet I(P)
    Ideal<K> triple;        // I(Z) = I(X)^(3)
    PointConfiguration ferrers;
    NearRectangleShape shape;
    std::pair<int, int> extra_point;  // the corner P, in Ferrers labels
};

namespace detail {

template <class K>
Ideal<K> corner_point_ideal(const PointConfiguration& F, NearRectangleShape s) {
    // The corner (t+1, a) is not in the diagram, so build its ideal directly
    // from the ruling forms.
    return Ideal<K>({ruling_form<K>(F, Axis::Row, s.t + 1), ruling_form<K>(F, Axis::Col, s.a)});
}

inline PointConfiguration require_near_rectangle(const PointConfiguration& X,
                                                 NearRectangleShape* out) {
    FerrersLabeling L = partition_of(X);
    auto shape = near_rectangle_shape(L.partition);
    if (!shape)
        throw ShapeMismatch("partition " + L.partition.str() +
                            " is not of the near-rectangle form (a,...,a,a-1)");
    *out = *shape;
    return X.permuted(L.row_order, L.col_order);
}

}  // namespace detail

template <class K>
CompletionSchemes<K> completion_schemes(const PointConfiguration& X) {
    NearRectangleShape s;
    PointConfiguration F = detail::require_near_rectangle(X, &s);
    Ideal<K> Z = symbolic_power<K>(F, 3);
    Ideal<K> P = detail::corner_point_ideal<K>(F, s);
    Ideal<K> W = ideal_intersection(Z, P);
    Ideal<K> Y = ideal_intersection(Z, ideal_power(P, 2));
    // The schemes nest, so the ideals must as well.
    if (!ideal_contains_all(W, Y) || !ideal_contains_all(Z, W))
        throw MathError("completion ideals do not nest");
    return CompletionSchemes<K>{std::move(Y), std::move(W), std::move(Z), std::move(F), s,
                                {s.t + 1, s.a}};
}

// Closed-form minimal generators of the completion ideal I(Y): seven ruling
// products stepping from V-pure to H-pure.
template <class K>
std::vector<Polynomial<K>> completion_generator_forms(const PointConfiguration& X) {
    NearRectangleShape s;
    PointConfiguration F = detail::require_near_rectangle(X, &s);
    int t = s.t, a = s.a;
    // Exponent pattern: rows 1..t get h_level, row t+1 gets h_last, columns
    // 1..a-1 get v_level, column a gets v_last.
    auto prod = [&](int h_level, int h_last, int v_level, int v_last) {
        std::vector<int> re(static_cast<std::size_t>(t + 1), 0);
        std::vector<int> ce(static_cast<std::size_t>(a), 0);
        for (int i = 1; i <= t; ++i) re[static_cast<std::size_t>(i - 1)] = h_level;
        re[static_cast<std::size_t>(t)] = h_last;
        for (int j = 1; j < a; ++j) ce[static_cast<std::size_t>(j - 1)] = v_level;
        ce[static_cast<std::size_t>(a - 1)] = v_last;
        return detail::ruling_product<K>(F, re, ce);
    };
    std::vector<Polynomial<K>> g;
    g.push_back(prod(0, 0, 3, 3));  // V_1^3 ... V_a^3
    g.push_back(prod(1, 0, 3, 2));  // H_1..H_t V_1^3..V_{a-1}^3 V_a^2
    g.push_back(prod(1, 1, 2, 2));  // H_1..H_{t+1} V_1^2..V_a^2
    g.push_back(prod(2, 1, 2, 1));  // H_1^2..H_t^2 H_{t+1} V_1^2..V_{a-1}^2 V_a
    g.push_back(prod(2, 2, 1, 1));  // H_1^2..H_t^2 H_{t+1}^2 V_1..V_a
    g.push_back(prod(3, 2, 1, 0));  // H_1^3..H_t^3 H_{t+1}^2 V_1..V_{a-1}
    g.push_back(prod(3, 3, 0, 0));  // H_1^3 ... H_{t+1}^3
    return g;
}

// The two separators of the doubled corner: adding them to I(Y) gives I(W).
template <class K>
std::array<Polynomial<K>, 2> completion_separator_forms(const PointConfiguration& X) {
    NearRectangleShape s;
    PointConfiguration F = detail::require_near_rectangle(X, &s);
    int t = s.t, a = s.a;
    std::vector<int> re(static_cast<std::size_t>(t + 1), 0), ce(static_cast<std::size_t>(a), 0);
    for (int i = 1; i <= t; ++i) re[static_cast<std::size_t>(i - 1)] = 2;
    for (int j = 1; j < a; ++j) ce[static_cast<std::size_t>(j - 1)] = 3;
    ce[static_cast<std::size_t>(a - 1)] = 1;
    Polynomial<K> s1 = detail::ruling_product<K>(F, re, ce);
    for (int i = 1; i <= t; ++i) re[static_cast<std::size_t>(i - 1)] = 3;
    re[static_cast<std::size_t>(t)] = 1;
    for (int j = 1; j < a; ++j) ce[static_cast<std::size_t>(j - 1)] = 2;
    ce[static_cast<std::size_t>(a - 1)] = 0;
    Polynomial<K> s2 = detail::ruling_product<K>(F, re, ce);
    return {std::move(s1), std::move(s2)};
}

// The unique separator of the reduced corner: adding it to I(W) gives I(Z).
template <class K>
Polynomial<K> completion_last_separator(const PointConfiguration& X) {
    NearRectangleShape s;
    PointConfiguration F = detail::require_near_rectangle(X, &s);
    std::vector<int> re(static_cast<std::size_t>(s.t + 1), 0), ce(static_cast<std::size_t>(s.a), 0);
    for (int i = 1; i <= s.t; ++i) re[static_cast<std::size_t>(i - 1)] = 3;
    for (int j = 1; j < s.a; ++j) ce[static_cast<std::size_t>(j - 1)] = 3;
    return detail::ruling_product<K>(F, re, ce);
}

// ---------------------------------------------------------------------------
// Witness forms certifying I(X)^(3) != I(X)^3
// ---------------------------------------------------------------------------

enum class WitnessFamily {
    TailStaircase,       // lambda = (lambda_1,...,lambda_{h-3},3,2,1), lambda_i >= h-i+1
    RectangleStaircase,  // lambda = (t,...,t, t-1,...,2,1), t >= 3
};

template <class K>
struct WitnessForm {
    Polynomial<K> form;
    Bidegree degree;
    Polynomial<K> diagonal;  // the (1,1)-form through the three staircase corners
};

// The (1,1)-form vanishing at three prescribed lattice points, via the
// nullspace of their evaluation matrix; must be unique up to scalar.
template <class K>
Polynomial<K> bilinear_form_through(const PointConfiguration& X,
                                    const std::vector<std::pair<int, int>>& pts) {
    std::vector<Monomial> basis = monomials_of_bidegree({1, 1});
    DenseMatrix<K> M(static_cast<int>(pts.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < pts.size(); ++r) {
        auto [i, j] = pts[r];
        K a = field_from_rational<K>(X.row_coord(i).a());
        K b = field_from_rational<K>(X.row_coord(i).b());
        K c = field_from_rational<K>(X.col_coord(j).a());
        K d = field_from_rational<K>(X.col_coord(j).b());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Monomial& m = basis[k];
            K val = K::one();
            for (int q = 0; q < m.e[kVarX0]; ++q) val = val * a;
            for (int q = 0; q < m.e[kVarX1]; ++q) val = val * b;
            for (int q = 0; q < m.e[kVarY0]; ++q) val = val * c;
            for (int q = 0; q < m.e[kVarY1]; ++q) val = val * d;
            M.at(static_cast<int>(r), static_cast<int>(k)) = val;
        }
    }
    auto null_basis = M.nullspace();
    if (null_basis.size() != 1)
        throw DegenerateCoordinates("the (1,1)-forms through the prescribed points have dimension " +
                                    std::to_string(null_basis.size()) + ", expected 1");
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t k = 0; k < basis.size(); ++k)
        terms.emplace_back(basis[k], null_basis[0][k]);
    return Polynomial<K>(std::move(terms), TermOrder::degrevlex()).monic();
}

namespace detail {

inline void require_witness_shape(const Partition& lam, WitnessFamily family) {
    int h = lam.rows();
    if (h < 3 || lam.parts[static_cast<std::size_t>(h - 3)] != 3 ||
        lam.parts[static_cast<std::size_t>(h - 2)] != 2 ||
        lam.parts[static_cast<std::size_t>(h - 1)] != 1)
        throw ShapeMismatch("partition " + lam.str() + " does not end in the staircase 3,2,1");
    if (family == WitnessFamily::TailStaircase) {
        for (int i = 1; i <= h - 3; ++i)
            if (lam.parts[static_cast<std::size_t>(i - 1)] < h - i + 1)
                throw ShapeMismatch("partition " + lam.str() + " violates lambda_i >= h-i+1 at i=" +
                                    std::to_string(i));
    } else {
        int t = lam.parts[0];
        if (t < 3) throw ShapeMismatch("rectangle-staircase shape needs a largest part >= 3");
        int m = h - t + 1;
        if (m < 1) throw ShapeMismatch("partition " + lam.str() + " is too short for its width");
        for (int i = 1; i <= h; ++i) {
            int expected = i <= m ? t : t - (i - m);
            if (lam.parts[static_cast<std::size_t>(i - 1)] != expected)
                throw ShapeMismatch("partition " + lam.str() +
                                    " is not a rectangle over a full staircase");
        }
    }
}

}  // namespace detail

// Explicit element of I(X)^(3) \ I(X)^3 for the two witness families: cubes
// on all rows above the staircase tail, squares tapering to nothing on the
// last three rows, V_1^2 V_2, and the diagonal (1,1)-form through the three
// staircase corners. Membership in I(X)^(3) is verified before returning.
template <class K>
WitnessForm<K> witness_form(const PointConfiguration& X, WitnessFamily family,
                            const Ideal<K>* symbolic_cube = nullptr) {
    FerrersLabeling L = partition_of(X);
    detail::require_witness_shape(L.partition, family);
    PointConfiguration F = X.permuted(L.row_order, L.col_order);
    int h = F.h();
    Polynomial<K> D =
        bilinear_form_through<K>(F, {{h - 2, 3}, {h - 1, 2}, {h, 1}});
    std::vector<int> re(static_cast<std::size_t>(h), 0), ce(static_cast<std::size_t>(F.v()), 0);
    for (int i = 1; i <= h - 3; ++i) re[static_cast<std::size_t>(i - 1)] = 3;
    re[static_cast<std::size_t>(h - 3)] = 2;
    re[static_cast<std::size_t>(h - 2)] = 1;
    ce[0] = 2;
    ce[1] = 1;
    Polynomial<K> f = detail::ruling_product<K>(F, re, ce) * D;
    Bidegree expect{3 * h - 5, 4};
    if (f.bidegree() != expect)
        throw MathError("witness form has bidegree " + f.bidegree().str() + ", expected " +
                        expect.str());
    if (symbolic_cube) {
        if (!symbolic_cube->contains(f))
            throw MathError("witness form is not in the triple symbolic power");
    } else {
        Ideal<K> S3 = symbolic_power<K>(F, 3);
        if (!S3.contains(f))
            throw MathError("witness form is not in the triple symbolic power");
    }
    return WitnessForm<K>{std::move(f), expect, std::move(D)};
}

}  // namespace pxp

#endif

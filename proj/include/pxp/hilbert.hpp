#ifndef PXP_HILBERT_HPP
#define PXP_HILBERT_HPP

#include <vector>

#include "pxp/groebner.hpp"
#include "pxp/matrix.hpp"

namespace pxp {

namespace detail {

template <class K>
void require_bihomogeneous(const Ideal<K>& I) {
    for (const auto& g : I.generators())
        if (!g.is_bihomogeneous()) throw NotBihomogeneous();
}

}  // namespace detail

// Dimension of the bidegree-d component of I: rank of the span of all
// monomial multiples of the generators landing in bidegree d.
template <class K>
int hilbert_dim(const Ideal<K>& I, Bidegree d) {
    detail::require_bihomogeneous(I);
    if (I.is_zero()) return 0;
    std::vector<Monomial> basis = monomials_of_bidegree(d);
    std::vector<std::vector<K>> rows;
    for (const auto& g : I.generators()) {
        Bidegree gd = g.bidegree();
        if (!d.dominates(gd)) continue;
        for (const Monomial& m : monomials_of_bidegree(d - gd)) {
            std::vector<K> row(basis.size(), K::zero());
            for (const auto& [mm, cc] : g.terms()) {
                Monomial prod = mm * m;
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (basis[k] == prod) {
                        row[k] += cc;
                        break;
                    }
                }
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return 0;
    DenseMatrix<K> M(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k)
            M.at(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    return M.rank();
}

// Same dimension via the initial ideal: monomials of bidegree d divisible by
// some leading term of the reduced basis. Used as an independent route.
template <class K>
int hilbert_dim_standard_monomials(const Ideal<K>& I, Bidegree d, TermOrder ord = {}) {
    detail::require_bihomogeneous(I);
    if (I.is_zero()) return 0;
    const auto& gb = I.groebner_basis(ord);
    int count = 0;
    for (const Monomial& m : monomials_of_bidegree(d)) {
        for (const auto& g : gb) {
            if (g.leading_monomial().divides(m)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

// Least total degree of a nonzero form in I; for bihomogeneous generators
// this is attained on the reduced Groebner basis.
template <class K>
int alpha(const Ideal<K>& I) {
    if (I.is_zero()) throw ZeroIdeal();
    detail::require_bihomogeneous(I);
    int best = -1;
    for (const auto& g : I.groebner_basis()) {
        int d = g.total_degree();
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// Table of (ideal component dim, quotient component dim) for all bidegrees
// up to a bound; dims always sum to (a+1)(b+1).
struct HilbertTable {
    Bidegree bound;
    // cell(a,b) = cells[a][b]
    std::vector<std::vector<std::pair<int, int>>> cells;
};

template <class K>
Bidegree default_table_bound(const Ideal<K>& I) {
    Bidegree bound{0, 0};
    for (const auto& g : I.generators()) {
        Bidegree d = g.bidegree();
        bound.x = std::max(bound.x, d.x);
        bound.y = std::max(bound.y, d.y);
    }
    return bound + Bidegree{2, 2};
}

template <class K>
HilbertTable build_hilbert_table(const Ideal<K>& I, Bidegree bound) {
    HilbertTable t;
    t.bound = bound;
    t.cells.resize(static_cast<std::size_t>(bound.x) + 1);
    for (int a = 0; a <= bound.x; ++a) {
        t.cells[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(bound.y) + 1);
        for (int b = 0; b <= bound.y; ++b) {
            int dim = hilbert_dim(I, {a, b});
            t.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {
                dim, (a + 1) * (b + 1) - dim};
        }
    }
    return t;
}

}  // namespace pxp

#endif

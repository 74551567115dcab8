#ifndef PXP_GROEBNER_HPP
#define PXP_GROEBNER_HPP

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pxp/polynomial.hpp"

namespace pxp {

// Remainder of multivariate division of f by basis under ord: no term of the
// result is divisible by any leading term of the basis. Unique when the
// basis is a Groebner basis.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                          TermOrder ord) {
    Polynomial<K> p = f.with_order(ord);
    std::vector<typename Polynomial<K>::Term> remainder;
    std::vector<const Polynomial<K>*> divisors;
    std::vector<Polynomial<K>> reordered;
    divisors.reserve(basis.size());
    reordered.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.order() == ord) {
            divisors.push_back(&g);
        } else {
            reordered.push_back(g.with_order(ord));
            divisors.push_back(&reordered.back());
        }
    }
    while (!p.is_zero()) {
        const auto& [lm, lc] = p.leading_term();
        const Polynomial<K>* hit = nullptr;
        for (const auto* g : divisors) {
            if (g->leading_monomial().divides(lm)) {
                hit = g;
                break;
            }
        }
        if (hit) {
            K c = lc / hit->leading_coefficient();
            p = p - hit->times(lm / hit->leading_monomial(), c);
        } else {
            remainder.push_back(p.leading_term());
            p = p - Polynomial<K>::term(lm, lc, ord);
        }
    }
    return Polynomial<K>(std::move(remainder), ord);
}

namespace detail {

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<K> a = f.times(L / f.leading_monomial(), f.leading_coefficient().inv());
    Polynomial<K> b = g.times(L / g.leading_monomial(), g.leading_coefficient().inv());
    return a - b;
}

struct SPair {
    Monomial lcm;
    int i;
    int j;
};

struct SPairLess {
    TermOrder ord;
    bool operator()(const SPair& a, const SPair& b) const {
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

// Buchberger's algorithm with normal pair selection (smallest lcm first) and
// the Gebauer-Moeller pruning criteria, followed by full auto-reduction and
// monic scaling. Output is the reduced Groebner basis, sorted ascending by
// leading monomial; it is unique for the given ideal and order.
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens, TermOrder ord) {
    std::vector<Polynomial<K>> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.with_order(ord).monic());
    if (basis.empty()) throw ZeroIdeal();

    detail::SPairLess less{ord};
    std::set<detail::SPair, detail::SPairLess> pending(less);

    auto update = [&](int r) {
        const Monomial& lm_r = basis[static_cast<std::size_t>(r)].leading_monomial();
        // Candidate new pairs (i, r), pruned by the Gebauer-Moeller rules.
        struct Cand {
            Monomial lcm;
            int i;
            bool coprime;
            bool dead = false;
        };
        std::vector<Cand> cands;
        cands.reserve(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            const Monomial& lm_i = basis[static_cast<std::size_t>(i)].leading_monomial();
            cands.push_back({lcm(lm_i, lm_r), i, coprime(lm_i, lm_r)});
        }
        // Rule M: drop a candidate whose lcm is strictly divided by another's.
        for (auto& a : cands) {
            for (const auto& b : cands) {
                if (a.dead || b.dead || a.i == b.i) continue;
                if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                    a.dead = true;
                    break;
                }
            }
        }
        // Rule F: among equal lcms keep the earliest; if any member of the
        // class has coprime leading terms, the whole class is redundant.
        for (std::size_t x = 0; x < cands.size(); ++x) {
            if (cands[x].dead) continue;
            bool class_coprime = cands[x].coprime;
            for (std::size_t y = x + 1; y < cands.size(); ++y) {
                if (cands[y].dead || cands[y].lcm != cands[x].lcm) continue;
                class_coprime = class_coprime || cands[y].coprime;
                cands[y].dead = true;
            }
            if (class_coprime) cands[x].dead = true;
        }
        // Rule B: retire old pairs whose lcm the new element divides strictly
        // on both sides.
        for (auto it = pending.begin(); it != pending.end();) {
            const Monomial& lm_i = basis[static_cast<std::size_t>(it->i)].leading_monomial();
            const Monomial& lm_j = basis[static_cast<std::size_t>(it->j)].leading_monomial();
            if (lm_r.divides(it->lcm) && lcm(lm_i, lm_r) != it->lcm && lcm(lm_j, lm_r) != it->lcm)
                it = pending.erase(it);
            else
                ++it;
        }
        for (const auto& c : cands)
            if (!c.dead) pending.insert({c.lcm, c.i, r});
    };

    for (int r = 0; r < static_cast<int>(basis.size()); ++r) update(r);

    while (!pending.empty()) {
        detail::SPair p = *pending.begin();
        pending.erase(pending.begin());
        Polynomial<K> s = detail::s_polynomial(basis[static_cast<std::size_t>(p.i)],
                                               basis[static_cast<std::size_t>(p.j)]);
        Polynomial<K> h = normal_form<K>(s, basis, ord);
        if (!h.is_zero()) {
            basis.push_back(h.monic());
            update(static_cast<int>(basis.size()) - 1);
        }
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // element's leading monomial divides.
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mj != mi || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Interreduce tails. Leading monomials are pairwise non-dividing, so one
    // pass against the evolving set fully reduces.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        Polynomial<K> g = std::move(minimal[i]);
        minimal[i] = Polynomial<K>(ord);  // normal_form skips zero divisors
        minimal[i] = normal_form<K>(g, minimal, ord).monic();
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return ord.less(a.leading_monomial(), b.leading_monomial());
              });
    return minimal;
}

// Ideal given by a generator list, with reduced Groebner bases cached per
// order. The cache is written while a single thread owns the ideal and is
// safe for concurrent readers afterwards.
template <class K>
class Ideal {
  public:
    Ideal() = default;

    explicit Ideal(std::vector<Polynomial<K>> gens) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    Ideal(std::vector<Polynomial<K>> gens, std::vector<Polynomial<K>> reduced_gb_degrevlex)
        : Ideal(std::move(gens)) {
        cache_[OrderKind::Degrevlex] = std::move(reduced_gb_degrevlex);
    }

    bool is_zero() const { return gens_.empty(); }
    const std::vector<Polynomial<K>>& generators() const& { return gens_; }
    std::vector<Polynomial<K>> generators() const&& { return gens_; }

    const std::vector<Polynomial<K>>& groebner_basis(TermOrder ord = {}) const& {
        return basis_impl(ord);
    }
    // Value overload so bases computed on temporaries stay alive.
    std::vector<Polynomial<K>> groebner_basis(TermOrder ord = {}) const&& {
        return basis_impl(ord);
    }

    bool contains(const Polynomial<K>& f, TermOrder ord = {}) const {
        if (f.is_zero()) return true;
        if (is_zero()) return false;
        return normal_form<K>(f, basis_impl(ord), ord).is_zero();
    }

  private:
    const std::vector<Polynomial<K>>& basis_impl(TermOrder ord) const {
        auto it = cache_.find(ord.kind);
        if (it == cache_.end())
            it = cache_.emplace(ord.kind, buchberger(gens_, ord)).first;
        return it->second;
    }

    std::vector<Polynomial<K>> gens_;
    mutable std::map<OrderKind, std::vector<Polynomial<K>>> cache_;
};

// Canonical-form equality: reduced Groebner bases coincide termwise.
template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, TermOrder ord = {}) {
    if (I.is_zero() || J.is_zero()) return I.is_zero() == J.is_zero();
    const auto& a = I.groebner_basis(ord);
    const auto& b = J.groebner_basis(ord);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

template <class K>
bool ideal_contains_all(const Ideal<K>& I, const Ideal<K>& J, TermOrder ord = {}) {
    for (const auto& g : J.generators())
        if (!I.contains(g, ord)) return false;
    return true;
}

// I^m, generated by the m-fold products of the generators (multiset
// combinations, so no duplicated products).
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int m) {
    if (m < 1) throw InvalidInput("ideal power requires m >= 1");
    if (I.is_zero()) return I;
    const auto& gens = I.generators();
    std::vector<Polynomial<K>> out;
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        Polynomial<K> prod = gens[static_cast<std::size_t>(idx[0])];
        for (int k = 1; k < m; ++k) prod = prod * gens[static_cast<std::size_t>(idx[k])];
        out.push_back(std::move(prod));
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(gens.size()) - 1)
            --pos;
        if (pos < 0) break;
        int v = idx[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k < m; ++k) idx[static_cast<std::size_t>(k)] = v;
    }
    return Ideal<K>(std::move(out));
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
    std::vector<Polynomial<K>> gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g);
    return Ideal<K>(std::move(gens));
}

// I cap J via the single auxiliary variable: eliminate t from t*I + (1-t)*J.
// The t-free part of the reduced elimination basis is the reduced degrevlex
// basis of the intersection, which seeds the result's cache.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J) {
    if (I.is_zero()) return I;
    if (J.is_zero()) return J;
    TermOrder elim = TermOrder::elim_t();
    Polynomial<K> t = Polynomial<K>::variable(kVarElim, elim);
    Polynomial<K> one_minus_t = Polynomial<K>::one(elim) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.groebner_basis()) gens.push_back(t * g.with_order(elim));
    for (const auto& g : J.groebner_basis()) gens.push_back(one_minus_t * g.with_order(elim));
    std::vector<Polynomial<K>> eliminated;
    for (const auto& g : buchberger(gens, elim))
        if (!g.has_elim_var()) eliminated.push_back(g.with_order(TermOrder::degrevlex()));
    std::sort(eliminated.begin(), eliminated.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return TermOrder::degrevlex().less(a.leading_monomial(), b.leading_monomial());
              });
    std::vector<Polynomial<K>> gb = eliminated;
    return Ideal<K>(std::move(eliminated), std::move(gb));
}

template <class K>
Ideal<K> intersect_all(std::span<const Ideal<K>> ideals) {
    if (ideals.empty()) throw InvalidInput("empty intersection");
    Ideal<K> acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i]);
    return acc;
}

}  // namespace pxp

#endif

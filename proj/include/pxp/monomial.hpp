#ifndef PXP_MONOMIAL_HPP
#define PXP_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pxp/errors.hpp"

namespace pxp {

// Bidegree (a,b) of the N^2-grading with deg x_i = (1,0), deg y_i = (0,1).
struct Bidegree {
    int x = 0;
    int y = 0;

    int total() const { return x + y; }

    Bidegree operator+(Bidegree o) const { return {x + o.x, y + o.y}; }
    Bidegree operator-(Bidegree o) const { return {x - o.x, y - o.y}; }
    bool operator==(Bidegree o) const { return x == o.x && y == o.y; }
    bool operator!=(Bidegree o) const { return !(*this == o); }

    // Componentwise partial order; used for divisibility-in-degree tests.
    bool dominates(Bidegree o) const { return x >= o.x && y >= o.y; }

    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

// Variable slots. The fifth variable is auxiliary, used only while
// eliminating in ideal intersections; user-facing data keeps it at zero.
inline constexpr int kVarX0 = 0;
inline constexpr int kVarX1 = 1;
inline constexpr int kVarY0 = 2;
inline constexpr int kVarY1 = 3;
inline constexpr int kVarElim = 4;
inline constexpr int kNumVars = 5;

inline const char* variable_name(int idx) {
    static const char* names[kNumVars] = {"x0", "x1", "y0", "y1", "t"};
    return names[idx];
}

struct Monomial {
    std::array<std::uint16_t, kNumVars> e{};

    static Monomial one() { return {}; }

    static Monomial variable(int idx, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(power);
        return m;
    }

    bool is_one() const {
        for (auto v : e)
            if (v != 0) return false;
        return true;
    }

    int degree(int idx) const { return e[static_cast<std::size_t>(idx)]; }

    int total_degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }

    Bidegree bidegree() const { return {e[0] + e[1], e[2] + e[3]}; }

    bool has_elim_var() const { return e[kVarElim] != 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Pre: o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += variable_name(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
        r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

enum class OrderKind : std::uint8_t {
    Degrevlex,  // degree, ties by reverse lexicographic, x0 > x1 > y0 > y1 > t
    Lex,        // pure lexicographic, x0 > x1 > y0 > y1 > t
    ElimT,      // block order: t-degree first, ties by degrevlex on x,y
};

// Total multiplicative monomial order. Stateless beyond its kind, so it is a
// cheap value passed as a parameter, never ambient state.
struct TermOrder {
    OrderKind kind = OrderKind::Degrevlex;

    static constexpr TermOrder degrevlex() { return {OrderKind::Degrevlex}; }
    static constexpr TermOrder lex() { return {OrderKind::Lex}; }
    static constexpr TermOrder elim_t() { return {OrderKind::ElimT}; }

    // Returns <0, 0, >0 as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Degrevlex:
                return cmp_degrevlex(a, b, /*include_elim=*/true);
            case OrderKind::Lex:
                for (int i = 0; i < kNumVars; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            case OrderKind::ElimT:
                if (a.e[kVarElim] != b.e[kVarElim])
                    return a.e[kVarElim] < b.e[kVarElim] ? -1 : 1;
                return cmp_degrevlex(a, b, /*include_elim=*/false);
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const TermOrder& o) const { return kind == o.kind; }
    bool operator!=(const TermOrder& o) const { return kind != o.kind; }

    std::string name() const {
        switch (kind) {
            case OrderKind::Degrevlex: return "degrevlex";
            case OrderKind::Lex: return "lex";
            case OrderKind::ElimT: return "elim";
        }
        return "?";
    }

  private:
    static int cmp_degrevlex(const Monomial& a, const Monomial& b, bool include_elim) {
        const int n = include_elim ? kNumVars : kNumVars - 1;
        int da = 0, db = 0;
        for (int i = 0; i < n; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = n - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

inline TermOrder parse_order(const std::string& s) {
    if (s == "degrevlex") return TermOrder::degrevlex();
    if (s == "lex") return TermOrder::lex();
    throw InvalidInput("unknown term order: " + s);
}

// All (a+1)(b+1) monomials of bidegree (a,b), x0-power descending, then
// y0-power descending.
inline std::vector<Monomial> monomials_of_bidegree(Bidegree d) {
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>((d.x + 1) * (d.y + 1)));
    for (int i = d.x; i >= 0; --i) {
        for (int j = d.y; j >= 0; --j) {
            Monomial m;
            m.e[kVarX0] = static_cast<std::uint16_t>(i);
            m.e[kVarX1] = static_cast<std::uint16_t>(d.x - i);
            m.e[kVarY0] = static_cast<std::uint16_t>(j);
            m.e[kVarY1] = static_cast<std::uint16_t>(d.y - j);
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace pxp

#endif

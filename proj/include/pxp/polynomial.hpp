#ifndef PXP_POLYNOMIAL_HPP
#define PXP_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "pxp/field.hpp"
#include "pxp/monomial.hpp"

namespace pxp {

// Sparse polynomial in x0,x1,y0,y1 (plus the auxiliary elimination variable)
// over the field K. Terms are kept sorted strictly descending in the order
// the polynomial carries; values are immutable once built.
template <class K>
class Polynomial {
  public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;
    explicit Polynomial(TermOrder ord) : ord_(ord) {}

    Polynomial(std::vector<Term> terms, TermOrder ord) : ord_(ord) {
        normalize(std::move(terms));
    }

    static Polynomial zero(TermOrder ord = {}) { return Polynomial(ord); }

    static Polynomial constant(const K& c, TermOrder ord = {}) {
        return Polynomial({{Monomial::one(), c}}, ord);
    }

    static Polynomial one(TermOrder ord = {}) { return constant(K::one(), ord); }

    static Polynomial variable(int idx, TermOrder ord = {}) {
        return Polynomial({{Monomial::variable(idx), K::one()}}, ord);
    }

    static Polynomial term(const Monomial& m, const K& c, TermOrder ord = {}) {
        return Polynomial({{m, c}}, ord);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    TermOrder order() const { return ord_; }

    const Term& leading_term() const {
        if (is_zero()) throw ZeroPolynomial();
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().first; }
    const K& leading_coefficient() const { return leading_term().second; }

    Polynomial with_order(TermOrder ord) const {
        if (ord == ord_) return *this;
        return Polynomial(terms_, ord);
    }

    Polynomial operator-() const {
        Polynomial r(ord_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Polynomial& o) const {
        const Polynomial& q = o.ord_ == ord_ ? o : o.with_order(ord_);
        std::vector<Term> acc;
        acc.reserve(terms_.size() * q.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : q.terms_)
                acc.emplace_back(ma * mb, ca * cb);
        Polynomial r(ord_);
        r.normalize(std::move(acc));
        return r;
    }

    Polynomial times(const Monomial& m, const K& c) const {
        if (c.is_zero()) return Polynomial(ord_);
        Polynomial r(ord_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
        return r;
    }

    Polynomial scaled(const K& c) const { return times(Monomial::one(), c); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coefficient().inv());
    }

    bool has_elim_var() const {
        for (const auto& [m, c] : terms_)
            if (m.has_elim_var()) return true;
        return false;
    }

    bool is_bihomogeneous() const {
        if (is_zero()) return true;
        Bidegree d = terms_.front().first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != d) return false;
        return true;
    }

    Bidegree bidegree() const {
        if (is_zero()) throw ZeroPolynomial();
        Bidegree d = terms_.front().first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != d) throw NotBihomogeneous();
        return d;
    }

    int total_degree() const {
        if (is_zero()) throw ZeroPolynomial();
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Evaluation at a point of P^1 x P^1; requires no elimination variable.
    K evaluate(const K& x0, const K& x1, const K& y0, const K& y1) const {
        K acc = K::zero();
        for (const auto& [m, c] : terms_) {
            K v = c;
            v = v * pow(x0, m.e[kVarX0]) * pow(x1, m.e[kVarX1]);
            v = v * pow(y0, m.e[kVarY0]) * pow(y1, m.e[kVarY1]);
            acc += v;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        const Polynomial& q = o.ord_ == ord_ ? o : o.with_order(ord_);
        return terms_ == q.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            K a = c;
            if (first) {
                if (c.prints_negative()) {
                    s += "-";
                    a = -c;
                }
            } else {
                if (c.prints_negative()) {
                    s += " - ";
                    a = -c;
                } else {
                    s += " + ";
                }
            }
            first = false;
            if (m.is_one()) {
                s += a.str();
            } else if (a == K::one()) {
                s += m.str();
            } else {
                s += a.str() + "*" + m.str();
            }
        }
        return s;
    }

    // Parses the printer's format: signed sums of '*'-separated factors,
    // each factor a variable with optional ^power or an integer (optionally
    // num/den). Round-trips str().
    static Polynomial parse(const std::string& text, TermOrder ord = {}) {
        Parser p{text, 0};
        std::vector<Term> acc;
        p.skip_ws();
        if (p.done()) throw ParseError("empty polynomial text");
        bool neg = p.consume_sign();
        while (true) {
            auto [m, c] = p.parse_term<K>();
            acc.emplace_back(m, neg ? -c : c);
            p.skip_ws();
            if (p.done()) break;
            char ch = p.peek();
            if (ch == '+') {
                p.advance();
                neg = false;
            } else if (ch == '-') {
                p.advance();
                neg = true;
            } else {
                throw ParseError("unexpected character '" + std::string(1, ch) +
                                 "' at position " + std::to_string(p.pos));
            }
        }
        return Polynomial(std::move(acc), ord);
    }

  private:
    static K pow(const K& base, int n) {
        K r = K::one();
        for (int i = 0; i < n; ++i) r = r * base;
        return r;
    }

    // Merge-add of two descending term lists; subtract when minus is set.
    Polynomial merged(const Polynomial& o, bool minus) const {
        const Polynomial& q = o.ord_ == ord_ ? o : o.with_order(ord_);
        Polynomial r(ord_);
        r.terms_.reserve(terms_.size() + q.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < q.terms_.size()) {
            int cmp = ord_.compare(terms_[i].first, q.terms_[j].first);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                const auto& [m, c] = q.terms_[j++];
                r.terms_.emplace_back(m, minus ? -c : c);
            } else {
                K c = minus ? terms_[i].second - q.terms_[j].second
                            : terms_[i].second + q.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < q.terms_.size(); ++j) {
            const auto& [m, c] = q.terms_[j];
            r.terms_.emplace_back(m, minus ? -c : c);
        }
        return r;
    }

    void normalize(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
            return ord_.greater(a.first, b.first);
        });
        terms_.clear();
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().first == t.first) {
                terms_.back().second += t.second;
                if (terms_.back().second.is_zero()) terms_.pop_back();
            } else if (!t.second.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
    }

    struct Parser {
        const std::string& s;
        std::size_t pos;

        bool done() const { return pos >= s.size(); }
        char peek() const { return s[pos]; }
        void advance() { ++pos; }
        void skip_ws() {
            while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }

        bool consume_sign() {
            skip_ws();
            if (!done() && (s[pos] == '+' || s[pos] == '-')) {
                bool neg = s[pos] == '-';
                ++pos;
                return neg;
            }
            return false;
        }

        long long parse_number() {
            skip_ws();
            std::size_t start = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ParseError("expected a number at position " + std::to_string(pos));
            return std::stoll(s.substr(start, pos - start));
        }

        int parse_variable() {
            // Accepts x0, x1, y0, y1.
            if (pos + 1 >= s.size()) return -1;
            char v = s[pos], d = s[pos + 1];
            if ((v == 'x' || v == 'y') && (d == '0' || d == '1')) {
                pos += 2;
                int base = v == 'x' ? kVarX0 : kVarY0;
                return base + (d - '0');
            }
            return -1;
        }

        template <class K2>
        std::pair<Monomial, K2> parse_term() {
            Monomial m = Monomial::one();
            K2 c = K2::one();
            bool expect_factor = true;
            while (expect_factor) {
                skip_ws();
                if (done()) throw ParseError("unexpected end of input");
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    long long num = parse_number();
                    skip_ws();
                    if (!done() && peek() == '/') {
                        advance();
                        long long den = parse_number();
                        c = c * K2::from_fraction(num, den);
                    } else {
                        c = c * K2::from_int(num);
                    }
                } else {
                    int idx = parse_variable();
                    if (idx < 0)
                        throw ParseError("expected a variable or number at position " +
                                         std::to_string(pos));
                    int power = 1;
                    skip_ws();
                    if (!done() && peek() == '^') {
                        advance();
                        long long e = parse_number();
                        if (e < 0 || e > 10000)
                            throw ParseError("exponent out of range: " + std::to_string(e));
                        power = static_cast<int>(e);
                    }
                    m = m * Monomial::variable(idx, power);
                }
                skip_ws();
                if (!done() && peek() == '*') {
                    advance();
                    expect_factor = true;
                } else {
                    expect_factor = false;
                }
            }
            return {m, c};
        }
    };

    TermOrder ord_;
    std::vector<Term> terms_;
};

}  // namespace pxp

#endif

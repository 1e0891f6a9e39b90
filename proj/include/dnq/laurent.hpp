#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnq/errors.hpp"
#include "dnq/varid.hpp"

namespace dnq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vector of a Laurent monomial.  Entries with exponent zero are
// never stored, so equality of the maps is equality of monomials.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e != 0) m.exps_.emplace(v, e);
        return m;
    }

    int exponent(VarId v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    const std::map<VarId, int>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps_) {
            int ne = r.exponent(v) + e;
            if (ne == 0)
                r.exps_.erase(v);
            else
                r.exps_[v] = ne;
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (auto& [v, e] : exps_) r.exps_.emplace(v, -e);
        return r;
    }

    // Quotient *this / o, defined for any pair of Laurent monomials.
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }

    bool divides_as_poly(const Monomial& o) const {
        // All exponents of *this bounded by those of o (nonnegative setting).
        for (auto& [v, e] : exps_)
            if (e > o.exponent(v)) return false;
        return true;
    }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }

    // Lexicographic on the canonical variable order.  Total order: a tie on
    // every exponent means the monomials are equal.
    friend bool operator<(const Monomial& x, const Monomial& y) {
        auto ix = x.exps_.begin(), iy = y.exps_.begin();
        while (ix != x.exps_.end() || iy != y.exps_.end()) {
            // Missing entries count as exponent 0 at the next present variable.
            if (ix == x.exps_.end()) {
                if (iy->second != 0) return iy->second > 0 ? true : false;
                ++iy;
                continue;
            }
            if (iy == y.exps_.end()) {
                if (ix->second != 0) return ix->second > 0 ? false : true;
                ++ix;
                continue;
            }
            if (ix->first == iy->first) {
                if (ix->second != iy->second) return ix->second < iy->second;
                ++ix, ++iy;
            } else if (ix->first < iy->first) {
                // x has a nonzero exponent at a variable where y has 0.
                return ix->second < 0;
            } else {
                return iy->second > 0;
            }
        }
        return false;
    }

private:
    std::map<VarId, int> exps_;
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Values are immutable in spirit: all operations return new polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(Int c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
        return p;
    }
    static LaurentPoly var(VarId v, int e = 1) { return monomial(Monomial::var(v, e), 1); }
    static LaurentPoly monomial(const Monomial& m, Int c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(m, std::move(c));
        return p;
    }

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constant_term() const { return coefficient(Monomial()); }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

    // Substitutes 1 for every variable.
    Int evaluate_ones() const {
        Int s = 0;
        for (auto& [m, c] : terms_) s += c;
        return s;
    }

    // Multiply by a single monomial (exponent shift).
    LaurentPoly shifted(const Monomial& m) const {
        LaurentPoly r;
        for (auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
        return r;
    }

    // x^e -> x^(d - e) for every term; the dual substitution x -> 1/x
    // followed by multiplication with x^d.
    LaurentPoly dual_reflected(const Monomial& d) const {
        LaurentPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(d / m, c);
        return r;
    }

    std::pair<Monomial, Int> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Set of variables with a nonzero exponent somewhere.
    std::vector<VarId> variables() const {
        std::map<VarId, bool> seen;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exponents()) seen[v] = true;
        std::vector<VarId> out;
        for (auto& [v, f] : seen) out.push_back(v);
        return out;
    }

    int min_exponent(VarId v) const {
        int lo = 0;
        for (auto& [m, c] : terms_) lo = std::min(lo, m.exponent(v));
        return lo;
    }

    bool has_negative_exponent() const {
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exponents())
                if (e < 0) return true;
        return false;
    }

    // Canonical text rendering, e.g. "1 + 2*x_0 + x_0^2*x_a^-1".
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::map<Monomial, Int> terms_;
};

// Exact quotient of two Laurent polynomials; only ever materialized while a
// substitution carries (1+x_q)^-k factors.  Not reduced to lowest terms.
class RationalFunction {
public:
    RationalFunction() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    }
    explicit RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

    static RationalFunction of_var(VarId v, int e = 1) { return RationalFunction(LaurentPoly::var(v, e)); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const {
        if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction pow(int e) const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// ---- free operations -------------------------------------------------------

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// Exact division p / d; throws NotDivisible when the quotient is not a
// Laurent polynomial with integer coefficients.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// Simultaneous substitution of rational functions for variables.  Variables
// without an assignment are left alone.
RationalFunction substitute(const LaurentPoly& p, const std::map<VarId, RationalFunction>& assignment);

LaurentPoly to_polynomial(const RationalFunction& r);

// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for integer n and
// natural k; exact.
Int gen_binomial(const Int& n, long k);

Int evaluate_ones(const LaurentPoly& p);

// JSON rendering per the wire format: [{"exponents": {...}, "coeff": "..."}].
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace dnq

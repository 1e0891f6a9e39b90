#include "dnq/laurent.hpp"

#include <json.hpp>
#include <limits>
#include <set>
#include <unordered_map>
#include <sstream>

namespace dnq {

namespace {

std::string term_body(const Monomial& m, const Int& abs_coeff) {
    std::ostringstream os;
    bool need_star = false;
    if (m.is_one() || abs_coeff != 1) {
        os << abs_coeff.str();
        need_star = true;
    }
    for (auto& [v, e] : m.exponents()) {
        if (need_star) os << "*";
        os << "x_" << v.name();
        if (e != 1) os << "^" << e;
        need_star = true;
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_body(m, abs(c));
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return result;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < text.size()) {
        skip_ws();
        // coefficient (optional)
        Int coeff = 1;
        bool saw_digits = false;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            saw_digits = true;
        }
        if (saw_digits) coeff = Int(digits);
        Monomial mono;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i + 1 < text.size() && text[i] == 'x' && text[i + 1] == '_') {
                i += 2;
                std::string name;
                while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) name += text[i++];
                int exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::string es;
                    if (i < text.size() && text[i] == '-') es += text[i++];
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) es += text[i++];
                    exp = std::stoi(es);
                }
                mono = mono * Monomial::var(VarId::parse(name), exp);
            } else {
                break;
            }
        }
        result.add_term(mono, coeff * sign);
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+')
            sign = 1;
        else if (text[i] == '-')
            sign = -1;
        else
            throw std::invalid_argument("unexpected character in polynomial: '" + std::string(1, text[i]) + "'");
        ++i;
    }
    return result;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    if (is_zero() || o.is_zero()) return r;

    // Monomials are packed into 64-bit mixed-radix keys over the union of
    // variables, sized by the exponent ranges of the product; keys add under
    // monomial multiplication.  Falls back to plain map accumulation when
    // the ranges do not fit.
    std::map<VarId, std::pair<int, int>> range;  // product min/max per variable
    {
        std::set<VarId> vars;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exponents()) vars.insert(v);
        for (auto& [m, c] : o.terms_)
            for (auto& [v, e] : m.exponents()) vars.insert(v);
        for (VarId v : vars) {
            // Absent entries count as exponent 0, so fold over every term.
            auto minmax = [&](const LaurentPoly& f) {
                int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
                for (auto& [m, c] : f.terms_) {
                    int e = m.exponent(v);
                    lo = std::min(lo, e);
                    hi = std::max(hi, e);
                }
                return std::make_pair(lo, hi);
            };
            auto [pl, ph] = minmax(*this);
            auto [ql, qh] = minmax(o);
            range[v] = {pl + ql, ph + qh};
        }
    }

    std::map<VarId, std::pair<long long, long long>> stride;  // (stride, span)
    long long total = 1;
    bool packable = true;
    for (auto& [v, mm] : range) {
        long long span = static_cast<long long>(mm.second) - mm.first + 1;
        if (total > (1LL << 62) / span) {
            packable = false;
            break;
        }
        stride[v] = {total, span};
        total *= span;
    }

    if (!packable) {
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    auto pack = [&](const Monomial& m) {
        long long key = 0;
        for (auto& [v, e] : m.exponents()) key += e * stride.at(v).first;
        return key;
    };
    std::vector<std::pair<long long, const Int*>> left, right;
    left.reserve(terms_.size());
    right.reserve(o.terms_.size());
    for (auto& [m, c] : terms_) left.emplace_back(pack(m), &c);
    for (auto& [m, c] : o.terms_) right.emplace_back(pack(m), &c);

    std::unordered_map<long long, Int> acc;
    acc.reserve(left.size() + right.size());
    for (auto& [k1, c1] : left)
        for (auto& [k2, c2] : right) {
            Int& slot = acc[k1 + k2];
            slot += *c1 * *c2;
        }

    long long base = 0;
    for (auto& [v, mm] : range) base += static_cast<long long>(mm.first) * stride.at(v).first;
    for (auto& [key, c] : acc) {
        if (c == 0) continue;
        long long rel = key - base;
        Monomial m;
        for (auto& [v, sp] : stride) {
            long long digit = rel / sp.first % sp.second;
            int e = static_cast<int>(digit) + range.at(v).first;
            if (e != 0) m = m * Monomial::var(v, e);
        }
        r.terms_.emplace(std::move(m), std::move(c));
    }
    return r;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return LaurentPoly::zero();

    // Shift both into honest polynomials so that lex is a monomial order.
    Monomial shift;
    {
        std::map<VarId, int> mins;
        auto scan = [&](const LaurentPoly& f) {
            for (VarId v : f.variables()) {
                int lo = f.min_exponent(v);
                auto [it, fresh] = mins.emplace(v, lo);
                if (!fresh) it->second = std::min(it->second, lo);
            }
        };
        scan(p);
        scan(d);
        for (auto& [v, lo] : mins)
            if (lo < 0) shift = shift * Monomial::var(v, -lo);
    }
    LaurentPoly rem = p.shifted(shift * shift);  // p * shift^2, divided by d * shift
    LaurentPoly div = d.shifted(shift);

    auto [dm, dc] = div.leading_term();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term();
        if (!dm.divides_as_poly(rm) || rc % dc != 0)
            throw NotDivisible("quotient is not a Laurent polynomial");
        Monomial qm = rm / dm;
        Int qc = rc / dc;
        quot.add_term(qm, qc);
        rem = rem - div.shifted(qm) * qc;
    }
    return quot.shifted(shift.inverse());
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction(LaurentPoly::one());
    const LaurentPoly* top = &num_;
    const LaurentPoly* bot = &den_;
    if (e < 0) {
        if (num_.is_zero()) throw std::invalid_argument("negative power of zero");
        std::swap(top, bot);
        e = -e;
    }
    LaurentPoly n = LaurentPoly::one(), d = LaurentPoly::one();
    for (int i = 0; i < e; ++i) {
        n = n * *top;
        d = d * *bot;
    }
    return RationalFunction(n, d);
}

RationalFunction substitute(const LaurentPoly& p, const std::map<VarId, RationalFunction>& assignment) {
    RationalFunction acc(LaurentPoly::zero());
    for (auto& [m, c] : p.terms()) {
        RationalFunction term(LaurentPoly::constant(c));
        for (auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                term = term * RationalFunction(LaurentPoly::var(v, e));
            else
                term = term * it->second.pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

LaurentPoly to_polynomial(const RationalFunction& r) { return exact_divide(r.numerator(), r.denominator()); }

Int gen_binomial(const Int& n, long k) {
    if (k < 0) throw std::invalid_argument("gen_binomial needs k >= 0");
    Int r = 1;
    for (long j = 0; j < k; ++j) {
        r *= n - j;
        r /= j + 1;  // exact: the running value is binomial(n, j+1)
    }
    return r;
}

Int evaluate_ones(const LaurentPoly& p) { return p.evaluate_ones(); }

std::string laurent_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [v, e] : m.exponents()) exps[v.name()] = e;
        terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
    }
    return terms.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    LaurentPoly p;
    for (auto& term : doc) {
        Monomial m;
        for (auto& [name, e] : term.at("exponents").items())
            m = m * Monomial::var(VarId::parse(name), e.get<int>());
        p.add_term(m, Int(term.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace dnq

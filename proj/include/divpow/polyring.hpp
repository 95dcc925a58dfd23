#ifndef DIVPOW_POLYRING_HPP
#define DIVPOW_POLYRING_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "divpow/field.hpp"

namespace divpow {

/// Exponent vector over a fixed variable list.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

enum class MonoOrder { degrevlex, deglex, lex };

/// true iff a < b in the given order; earlier variables rank higher.
inline bool mono_less(const Monomial& a, const Monomial& b, MonoOrder ord) {
    switch (ord) {
    case MonoOrder::lex:
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    case MonoOrder::deglex: {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    case MonoOrder::degrevlex: {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
    }
    return false;
}

/// Multivariate polynomial over a Scalar field with a fixed variable list.
/// Terms are stored sparsely; zero coefficients are never kept.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars)
        : field_(f), vars_(std::move(vars)) {}

    static MultiPoly zero(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars) {
        return MultiPoly(f, std::move(vars));
    }

    static MultiPoly constant(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars,
                              const Scalar& c) {
        MultiPoly p(f, vars);
        if (!c.is_zero()) p.terms_[Monomial(vars->size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars,
                              std::size_t idx) {
        MultiPoly p(f, vars);
        Monomial m(vars->size(), 0);
        m[idx] = 1;
        p.terms_[m] = Scalar::one(f);
        return p;
    }

    FieldSpec field() const { return field_; }
    const std::vector<std::string>& vars() const { return *vars_; }
    std::shared_ptr<const std::vector<std::string>> vars_ptr() const { return vars_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) terms_.erase(m);
        else terms_[m] = c;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(field_, vars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }

    MultiPoly scaled(const Scalar& c) const {
        MultiPoly r(field_, vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, s] : terms_) r.terms_[m] = s * c;
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(field_, vars_, Scalar::one(field_));
        for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    /// Leading monomial with respect to ord; polynomial must be nonzero.
    Monomial leading_monomial(MonoOrder ord) const {
        auto it = terms_.begin();
        Monomial best = it->first;
        for (++it; it != terms_.end(); ++it)
            if (mono_less(best, it->first, ord)) best = it->first;
        return best;
    }

    Scalar leading_coeff(MonoOrder ord) const { return terms_.at(leading_monomial(ord)); }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    std::string str(MonoOrder ord = MonoOrder::degrevlex) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Scalar>*> ts;
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) {
            return mono_less(y->first, x->first, ord);
        });
        std::ostringstream out;
        bool first = true;
        for (auto* t : ts) {
            std::string cs = t->second.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) out << "-";
            } else {
                out << (neg ? " - " : " + ");
            }
            if (neg) cs = cs.substr(1);
            first = false;
            std::string ms = mono_str(t->first);
            if (ms.empty()) {
                out << cs;
            } else {
                if (cs != "1") out << cs << "*";
                out << ms;
            }
        }
        return out.str();
    }

private:
    std::string mono_str(const Monomial& m) const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) out << "*";
            first = false;
            out << (*vars_)[i];
            if (m[i] > 1) out << "^" << m[i];
        }
        return out.str();
    }

    FieldSpec field_;
    std::shared_ptr<const std::vector<std::string>> vars_;
    std::map<Monomial, Scalar> terms_;
};

/// Recursive-descent parser for "+ - * ^" expressions over integer literals
/// and declared variable names.
class PolyParser {
public:
    PolyParser(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars,
               std::string text)
        : field_(f), vars_(std::move(vars)), text_(std::move(text)) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("trailing characters in polynomial: '" + text_.substr(pos_) + "'");
        return p;
    }

private:
    MultiPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { ++pos_; neg = true; }
        else if (peek() == '+') { ++pos_; }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') { ++pos_; acc = acc + term(); }
            else if (c == '-') { ++pos_; acc = acc - term(); }
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else break;
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned e = integer_literal();
            return base.pow(e);
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = integer_literal();
            return MultiPoly::constant(field_, vars_, Scalar::of_mpz(field_, mpz_class(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            for (std::size_t i = 0; i < vars_->size(); ++i)
                if ((*vars_)[i] == name) return MultiPoly::variable(field_, vars_, i);
            throw parse_error("unknown variable '" + name + "'");
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }

    unsigned long integer_literal() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected integer literal");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            s += text_[pos_++];
        }
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    FieldSpec field_;
    std::shared_ptr<const std::vector<std::string>> vars_;
    std::string text_;
    std::size_t pos_ = 0;
};

inline MultiPoly parse_poly(FieldSpec f, std::shared_ptr<const std::vector<std::string>> vars,
                            const std::string& text) {
    return PolyParser(f, std::move(vars), text).parse();
}

inline std::shared_ptr<const std::vector<std::string>>
make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

} // namespace divpow

#endif

#pragma once

// Sparse Laurent polynomials over Q in n variables, with an ASCII parser and
// a printer whose output the parser accepts.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace coamoeba {

class LaurentPoly {
public:
    using Terms = std::map<Lattice, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t n) : n_(n) {}

    static LaurentPoly constant(std::size_t n, const Rat& c) {
        LaurentPoly p(n);
        p.add_term(zero_lattice(n), c);
        return p;
    }

    static LaurentPoly monomial(const Lattice& m, const Rat& c = Rat(1)) {
        LaurentPoly p(m.size());
        p.add_term(m, c);
        return p;
    }

    std::size_t dimension() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Exponents with nonzero coefficient.
    std::set<Lattice> support() const {
        std::set<Lattice> s;
        for (const auto& [m, c] : terms_) s.insert(m);
        return s;
    }

    Rat coefficient(const Lattice& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Lattice& m, const Rat& c) {
        if (m.size() != n_) throw std::invalid_argument("exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplication by the monomial z^m.
    LaurentPoly shifted(const Lattice& m) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& q) {
        check_dim(q);
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& q) {
        check_dim(q);
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

    friend LaurentPoly operator-(const LaurentPoly& p) {
        LaurentPoly r(p.n_);
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend LaurentPoly operator*(const Rat& s, const LaurentPoly& p) {
        LaurentPoly r(p.n_);
        if (s == 0) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        p.check_dim(q);
        LaurentPoly r(p.n_);
        for (const auto& [m1, c1] : p.terms_)
            for (const auto& [m2, c2] : q.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.n_ == q.n_ && p.terms_ == q.terms_;
    }

private:
    void check_dim(const LaurentPoly& q) const {
        if (n_ != q.n_) throw std::invalid_argument("Laurent polynomial dimension mismatch");
    }

    std::size_t n_ = 0;
    Terms terms_;
};

inline LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

// --- printing --------------------------------------------------------------

namespace detail {

inline std::int64_t total_degree(const Lattice& m) {
    std::int64_t d = 0;
    for (auto v : m) d += v;
    return d;
}

/// Display order: total degree ascending, then exponents descending so that
/// x precedes y.
inline bool display_before(const Lattice& a, const Lattice& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

inline std::string monomial_string(const Lattice& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.at(i);
        if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace detail

inline std::vector<std::string> default_variables(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(n <= 4 ? std::string(names[i]) : "z" + std::to_string(i + 1));
    return v;
}

inline std::string to_string(const LaurentPoly& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.dimension())
        throw std::invalid_argument("variable list does not match polynomial dimension");
    if (p.is_zero()) return "0";
    std::vector<std::pair<Lattice, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return detail::display_before(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = detail::monomial_string(m, vars);
        if (mono.empty())
            out += to_short_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_short_string(mag) + "*" + mono;
    }
    return out;
}

inline std::string to_string(const LaurentPoly& p) {
    return to_string(p, default_variables(p.dimension()));
}

// --- parsing ---------------------------------------------------------------

namespace detail {

class LaurentParser {
public:
    LaurentParser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_identifier_start() {
        skip_ws();
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }

    Integer unsigned_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPoly expr() {
        bool negate = accept('-');
        LaurentPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    LaurentPoly term() {
        if (at_digit()) {
            Rat c = coef();
            if (accept('*')) return c * mono();
            return LaurentPoly::constant(vars_.size(), c);
        }
        if (at_identifier_start() || peek('(')) return mono();
        throw ParseError(pos_ < text_.size() ? "expected term" : "unexpected end of input", pos_);
    }

    Rat coef() {
        Integer num = unsigned_int();
        if (accept('/')) {
            std::size_t den_pos = pos_;
            Integer den = unsigned_int();
            if (den == 0) throw ParseError("zero denominator", den_pos);
            return Rat(num, den);
        }
        return Rat(num);
    }

    LaurentPoly mono() {
        LaurentPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    LaurentPoly factor() {
        if (accept('(')) {
            LaurentPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (!at_identifier_start()) throw ParseError("expected variable or '('", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
        std::int64_t exponent = 1;
        if (accept('^')) {
            bool negative = accept('-');
            std::size_t exp_pos = pos_;
            Integer e = unsigned_int();
            if (e > Integer(1000000)) throw ParseError("exponent too large", exp_pos);
            exponent = e.convert_to<std::int64_t>();
            if (negative) exponent = -exponent;
        }
        Lattice m = zero_lattice(vars_.size());
        m[static_cast<std::size_t>(it - vars_.begin())] = exponent;
        return LaurentPoly::monomial(m);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` over the ordered variable list; see the README for the grammar.
inline LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& variables) {
    return detail::LaurentParser(text, variables).parse();
}

}  // namespace coamoeba

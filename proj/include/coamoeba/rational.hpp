#pragma once

// Exact scalars and vectors shared by every module: GMP-backed rationals,
// rational points in R^n and integer lattice vectors in Z^n.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace coamoeba {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// A point of R^n with exact rational coordinates.
using Point = std::vector<Rat>;

/// An element of the lattice Z^n (exponent vectors, integer translations).
using Lattice = std::vector<std::int64_t>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

inline Integer floor(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

/// Always "p/q", including "0/1" and "3/1".
inline std::string to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Short form for reports: "3", "-1/2".
inline std::string to_short_string(const Rat& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return to_string(r);
}

/// Accepts "p", "-p", "p/q", "-p/q" with q > 0.
inline Rat parse_rat(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto digits = [&](const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) throw ParseError(std::string("expected ") + what, pos);
        return Integer(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num = digits("numerator");
    Integer den = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_pos = pos;
        den = digits("denominator");
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    Rat r(num, den);
    return negative ? Rat(-r) : r;
}

inline Rat to_rat(std::int64_t v) { return Rat(static_cast<long long>(v)); }

inline std::int64_t to_int64(const Integer& v) {
    if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
        throw std::overflow_error("lattice coordinate out of 64-bit range");
    return v.convert_to<std::int64_t>();
}

// --- lattice vectors -------------------------------------------------------

inline Lattice zero_lattice(std::size_t n) { return Lattice(n, 0); }

inline Lattice unit_lattice(std::size_t n, std::size_t axis) {
    Lattice e(n, 0);
    e.at(axis) = 1;
    return e;
}

inline Lattice operator+(const Lattice& a, const Lattice& b) {
    Lattice r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Lattice operator-(const Lattice& a, const Lattice& b) {
    Lattice r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Lattice operator-(const Lattice& a) {
    Lattice r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const Lattice& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

inline std::string to_string(const Lattice& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

// --- rational points --------------------------------------------------------

inline Point zero_point(std::size_t n) { return Point(n, Rat(0)); }

inline Point operator+(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point operator-(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point operator*(const Rat& s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Point operator+(const Point& a, const Lattice& m) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + to_rat(m[i]);
    return r;
}

inline Point operator-(const Point& a, const Lattice& m) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - to_rat(m[i]);
    return r;
}

inline Point to_point(const Lattice& m) {
    Point r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = to_rat(m[i]);
    return r;
}

/// Coordinatewise floor; `p - floor_lattice(p)` lies in [0,1)^n.
inline Lattice floor_lattice(const Point& p) {
    Lattice m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = to_int64(floor(p[i]));
    return m;
}

/// The representative of p mod Z^n in [0,1)^n.
inline Point reduce_mod_lattice(const Point& p) { return p - floor_lattice(p); }

/// Returns the integer vector a - b when it is one.
inline bool integer_difference(const Point& a, const Point& b, Lattice& out) {
    out.assign(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat d = a[i] - b[i];
        if (!is_integer(d)) return false;
        out[i] = to_int64(boost::multiprecision::numerator(d));
    }
    return true;
}

inline bool congruent_mod_lattice(const Point& a, const Point& b) {
    Lattice tmp;
    return integer_difference(a, b, tmp);
}

inline std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += to_short_string(p[i]);
    }
    return s + ")";
}

inline Point parse_point(const std::vector<std::string>& coords) {
    Point p;
    p.reserve(coords.size());
    for (const auto& c : coords) p.push_back(parse_rat(c));
    return p;
}

}  // namespace coamoeba

// rational.hpp -- exact rational scalars, closed intervals, and k-th root enclosures.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace markovmm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" with optional leading '-'. Throws Error(malformed_rational).
Rat parse_rat(const std::string& text);

// Canonical form: lowest terms, positive denominator, "p" when q == 1, else "p/q".
std::string format_rat(const Rat& r);

// Exact fixed-point decimal with the given number of places, round half away
// from zero. Pure integer arithmetic, so the output is platform independent.
std::string format_decimal(const Rat& r, int places);

double to_double(const Rat& r);

// floor(n^(1/k)) for n >= 0, k >= 1.
Int ikroot(const Int& n, unsigned k);

// The exact k-th root of y when y is a perfect k-th power of a rational.
std::optional<Rat> exact_kth_root(const Rat& y, unsigned k);

// Closed interval [lo, hi] with exact rational endpoints. `exact` records
// whether the endpoints are the true ones or an outward-rounded enclosure.
struct IntervalQ {
    Rat lo;
    Rat hi;
    bool exact = true;

    bool is_point() const { return lo == hi; }
    Rat length() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const IntervalQ& other) const { return lo <= other.lo && other.hi <= hi; }
    bool strictly_contains(const Rat& x) const { return lo < x && x < hi; }
    bool strictly_contains(const IntervalQ& other) const {
        return lo < other.lo && other.hi < hi;
    }

    friend bool operator==(const IntervalQ& a, const IntervalQ& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// Enclosure of y^(1/k) for y >= 0 with 64 fractional bits, outward rounded.
// Perfect k-th powers are detected and returned as exact points.
IntervalQ kth_root_enclosure(const Rat& y, unsigned k);

struct PointQ {
    Rat x;
    Rat y;

    friend bool operator==(const PointQ& a, const PointQ& b) { return a.x == b.x && a.y == b.y; }
};

}  // namespace markovmm

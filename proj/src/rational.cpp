// rational.cpp -- parsing, formatting, and root enclosures for exact rationals.

#include "markovmm/rational.hpp"

#include "markovmm/errors.hpp"

#include <cctype>

namespace markovmm {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw Error(Errc::malformed_rational, "'" + text + "' is not an integer or p/q");
        }
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
        throw Error(Errc::malformed_rational, "'" + text + "' is not an integer or p/q");
    }
    const Int d(den);
    if (d == 0) {
        throw Error(Errc::malformed_rational, "'" + text + "' has zero denominator");
    }
    return Rat(Int(num), d);
}

std::string format_rat(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_decimal(const Rat& r, int places) {
    const bool negative = r < 0;
    const Rat a = negative ? Rat(-r) : r;
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const Int num = boost::multiprecision::numerator(a) * scale;
    const Int den = boost::multiprecision::denominator(a);
    Int q = num / den;
    const Int rem = num % den;
    if (rem * 2 >= den) ++q;
    std::string digits = q.str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    std::string out;
    if (negative && q != 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

double to_double(const Rat& r) {
    return r.convert_to<double>();
}

Int ikroot(const Int& n, unsigned k) {
    if (n < 0) throw Error(Errc::bad_input, "ikroot of negative value");
    if (k == 0) throw Error(Errc::bad_input, "ikroot with k = 0");
    if (k == 1 || n <= 1) return n;
    // Newton iteration on x^k - n, started above the root.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int x = Int(1) << (bits / k + 1);
    while (true) {
        Int xk1 = 1;  // x^(k-1)
        for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
        Int next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (true) {
        Int p = 1;
        for (unsigned i = 0; i < k; ++i) p *= x;
        if (p <= n) break;
        --x;
    }
    return x;
}

std::optional<Rat> exact_kth_root(const Rat& y, unsigned k) {
    if (y < 0) return std::nullopt;
    const Int num = boost::multiprecision::numerator(y);
    const Int den = boost::multiprecision::denominator(y);
    const Int rn = ikroot(num, k);
    const Int rd = ikroot(den, k);
    Int pn = 1, pd = 1;
    for (unsigned i = 0; i < k; ++i) {
        pn *= rn;
        pd *= rd;
    }
    if (pn == num && pd == den) return Rat(rn, rd);
    return std::nullopt;
}

IntervalQ kth_root_enclosure(const Rat& y, unsigned k) {
    if (y < 0) throw Error(Errc::bad_input, "k-th root of negative value");
    if (auto exact = exact_kth_root(y, k)) {
        return IntervalQ{*exact, *exact, true};
    }
    constexpr unsigned frac_bits = 64;
    const Int num = boost::multiprecision::numerator(y);
    const Int den = boost::multiprecision::denominator(y);
    // lo = floor((num * 2^(frac_bits*k) / den)^(1/k)) / 2^frac_bits, rounded down twice.
    const Int scale = Int(1) << (frac_bits * k);
    const Int lo_arg = num * scale / den;
    Int hi_arg = num * scale / den;
    if (num * scale % den != 0) ++hi_arg;
    const Int lo_root = ikroot(lo_arg, k);
    const Int hi_root = ikroot(hi_arg, k) + 1;
    const Int unit = Int(1) << frac_bits;
    return IntervalQ{Rat(lo_root, unit), Rat(hi_root, unit), false};
}

}  // namespace markovmm

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace advncg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative cost value: a rational or +infinity.
/// All cost comparisons in the library go through this type; no floating
/// point is ever used to decide an equilibrium or an optimum.
class ExtCost {
public:
    ExtCost() : value_(0), infinite_(false) {}
    ExtCost(long long v) : value_(v), infinite_(false) {}
    ExtCost(const Rational& v) : value_(v), infinite_(false) {}
    ExtCost(Rational&& v) : value_(std::move(v)), infinite_(false) {}

    static ExtCost infinity() {
        ExtCost c;
        c.infinite_ = true;
        return c;
    }
    static ExtCost ratio(long long num, long long den);

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    // Finite value; must not be called on infinity.
    const Rational& value() const;

    ExtCost& operator+=(const ExtCost& o);
    friend ExtCost operator+(ExtCost a, const ExtCost& b) { return a += b; }
    friend ExtCost operator-(const ExtCost& a, const ExtCost& b);
    // Scaling by a finite nonnegative rational; inf * r = inf for r > 0,
    // and inf * 0 is rejected.
    friend ExtCost operator*(const Rational& r, const ExtCost& c);
    // Ratio of two finite costs, or inf/finite = inf.
    friend ExtCost operator/(const ExtCost& a, const ExtCost& b);

    bool operator==(const ExtCost& o) const {
        if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
        return value_ == o.value_;
    }
    bool operator!=(const ExtCost& o) const { return !(*this == o); }
    bool operator<(const ExtCost& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator>(const ExtCost& o) const { return o < *this; }
    bool operator<=(const ExtCost& o) const { return !(o < *this); }
    bool operator>=(const ExtCost& o) const { return !(*this < o); }

    /// "p/q" in lowest terms (q printed even when 1, e.g. "12/1"), or "inf".
    std::string fraction_str() const;
    /// Decimal approximation, correctly rounded to `sig` significant digits.
    std::string decimal_str(int sig = 12) const;

private:
    Rational value_;
    bool infinite_;
};

/// Parse an exact nonnegative rational from "p/q", an integer, a finite
/// decimal ("10.3" -> 103/10) or scientific notation ("1e-3" -> 1/1000).
/// Throws Error{Parse} on anything else.
Rational parse_rational(const std::string& text);

std::string fraction_str(const Rational& r);
std::string decimal_str(const Rational& r, int sig = 12);

} // namespace advncg

#include "advncg/ext_cost.hpp"
#include "advncg/error.hpp"

#include <cctype>
#include <sstream>

namespace advncg {

ExtCost ExtCost::ratio(long long num, long long den) {
    return ExtCost(Rational(BigInt(num), BigInt(den)));
}

const Rational& ExtCost::value() const {
    if (infinite_) throw Error(ErrorKind::InvalidArgument, "value() on infinite cost");
    return value_;
}

ExtCost& ExtCost::operator+=(const ExtCost& o) {
    if (o.infinite_) infinite_ = true;
    if (!infinite_) value_ += o.value_;
    return *this;
}

ExtCost operator-(const ExtCost& a, const ExtCost& b) {
    if (b.infinite_) throw Error(ErrorKind::InvalidArgument, "cannot subtract infinity");
    if (a.infinite_) return ExtCost::infinity();
    return ExtCost(a.value_ - b.value_);
}

ExtCost operator*(const Rational& r, const ExtCost& c) {
    if (c.infinite_) {
        if (r == 0) throw Error(ErrorKind::InvalidArgument, "0 * infinity is undefined");
        return ExtCost::infinity();
    }
    return ExtCost(r * c.value_);
}

ExtCost operator/(const ExtCost& a, const ExtCost& b) {
    if (b.infinite_ || b.value_ == 0)
        throw Error(ErrorKind::InvalidArgument, "division by zero or infinite cost");
    if (a.infinite_) return ExtCost::infinity();
    return ExtCost(a.value_ / b.value_);
}

std::string ExtCost::fraction_str() const {
    if (infinite_) return "inf";
    return advncg::fraction_str(value_);
}

std::string ExtCost::decimal_str(int sig) const {
    if (infinite_) return "inf";
    return advncg::decimal_str(value_, sig);
}

std::string fraction_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

namespace {

int decimal_digit_count(const BigInt& v) {
    return static_cast<int>(v.str().size());
}

} // namespace

std::string decimal_str(const Rational& r, int sig) {
    if (sig < 1) sig = 1;
    if (r == 0) return "0";
    const bool neg = r < 0;
    BigInt a = neg ? BigInt(-numerator(r)) : BigInt(numerator(r));
    BigInt b = denominator(r);

    // exponent e with 10^e <= a/b < 10^(e+1)
    int e = decimal_digit_count(a) - decimal_digit_count(b);
    BigInt pe = pow(BigInt(10), static_cast<unsigned>(e < 0 ? -e : e));
    // a/b >= 10^e  <=>  a >= b*10^e (or a*10^-e >= b for negative e)
    if (e >= 0 ? (a < b * pe) : (a * pe < b)) e -= 1;

    // first `sig` digits: D = round(a * 10^(sig-1-e) / b)
    int shift = sig - 1 - e;
    BigInt num = a, den = b;
    if (shift >= 0)
        num *= pow(BigInt(10), static_cast<unsigned>(shift));
    else
        den *= pow(BigInt(10), static_cast<unsigned>(-shift));
    BigInt digits = num / den;
    BigInt rem = num - digits * den;
    if (2 * rem >= den) digits += 1;
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) {  // rounding carried over, e.g. 999.. -> 1000..
        ds.pop_back();
        e += 1;
    }

    std::string out;
    if (e >= -4 && e < sig + 6) {
        // plain notation
        if (e >= 0) {
            std::string ip = ds.substr(0, static_cast<size_t>(e) + 1);
            while (static_cast<int>(ip.size()) < e + 1) ip += '0';
            std::string fp = static_cast<int>(ds.size()) > e + 1 ? ds.substr(static_cast<size_t>(e) + 1) : "";
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            out = fp.empty() ? ip : ip + "." + fp;
        } else {
            std::string fp(static_cast<size_t>(-e - 1), '0');
            fp += ds;
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            out = "0." + fp;
        }
    } else {
        std::string mant = ds.substr(0, 1);
        std::string rest = ds.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        out = rest.empty() ? mant : mant + "." + rest;
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw Error(ErrorKind::Parse, "invalid rational literal: '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return fail();

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty()) return fail();
        for (size_t i = 0; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i])) && !(i == 0 && (p[i] == '-' || p[i] == '+')))
                return fail();
        for (char c : q)
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        BigInt num(p), den(q);
        if (den == 0) return fail();
        return Rational(num, den);
    }

    // [sign] digits [. digits] [e [sign] digits]
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    long long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty() || ed.size() > 6) return fail();
        exp10 = std::stoll(ed);
        if (eneg) exp10 = -exp10;
    }
    if (i != s.size() || (intpart.empty() && fracpart.empty())) return fail();

    BigInt num(intpart.empty() ? "0" : intpart);
    BigInt den(1);
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (exp10 > 0)
        num *= pow(BigInt(10), static_cast<unsigned>(exp10));
    else if (exp10 < 0)
        den *= pow(BigInt(10), static_cast<unsigned>(-exp10));
    if (neg) num = -num;
    return Rational(num, den);
}

} // namespace advncg

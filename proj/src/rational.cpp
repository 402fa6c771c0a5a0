#include "rdtn/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rdtn {

namespace {

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return num / den;
    }

    // decimal with optional exponent: [-]ddd[.ddd][e[-]ddd]
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + text + "'");
        }
        s = s.substr(0, epos);
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("malformed rational '" + text + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            mantissa = mantissa * 10 + (s[i] - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed rational '" + text + "'");

    Rational r(mantissa);
    long e = exp10 - frac_digits;
    if (e > 0)
        r *= Rational(pow10(e));
    else if (e < 0)
        r /= Rational(pow10(-e));
    return neg ? -r : r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

QuadraticSurd::QuadraticSurd(Rational base, Rational radicand)
    : base_(std::move(base)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw std::domain_error("negative radicand");
}

std::optional<Rational> QuadraticSurd::exact_rational() const {
    BigInt num = boost::multiprecision::numerator(radicand_);
    BigInt den = boost::multiprecision::denominator(radicand_);
    BigInt rn, rd;
    if (!is_perfect_square(num, rn) || !is_perfect_square(den, rd)) return std::nullopt;
    return base_ + Rational(rn, rd);
}

double QuadraticSurd::value() const {
    return to_double(base_) + std::sqrt(to_double(radicand_));
}

int QuadraticSurd::compare(const Rational& x) const {
    // base + sqrt(s) vs x  <=>  sqrt(s) vs x - base, with sqrt(s) >= 0
    Rational diff = x - base_;
    if (diff < 0) return 1;
    Rational diff2 = diff * diff;
    if (radicand_ > diff2) return 1;
    if (radicand_ < diff2) return -1;
    return 0;
}

}  // namespace rdtn

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace rdtn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-5/2", "1.25" or "2e-3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

/// Renders as "a" or "a/b" in lowest terms.
std::string rational_str(const Rational& r);

/// A number of the form base + sqrt(radicand), base rational and
/// radicand a nonnegative rational. Comparisons against rationals are
/// exact: the sign is decided by squaring, never by floating point.
class QuadraticSurd {
  public:
    QuadraticSurd(Rational base, Rational radicand);

    const Rational& base() const { return base_; }
    const Rational& radicand() const { return radicand_; }

    /// Exact rational value when the radicand is a perfect square.
    std::optional<Rational> exact_rational() const;

    double value() const;

    /// Sign of (base + sqrt(radicand)) - x.
    int compare(const Rational& x) const;

    bool less_than(const Rational& x) const { return compare(x) < 0; }
    bool greater_than(const Rational& x) const { return compare(x) > 0; }
    bool equals(const Rational& x) const { return compare(x) == 0; }

  private:
    Rational base_;
    Rational radicand_;
};

}  // namespace rdtn

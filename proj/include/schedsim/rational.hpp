#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "schedsim/errors.hpp"

namespace schedsim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact signed rational. Always stored in canonical reduced form with a
/// positive denominator; equality is decidable, there are no epsilons.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {} // NOLINT: implicit by design
    Rational(long long num, long long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "12", "-3", "8.25", and "p/q". Returns nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;
    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }

    /// Shortest exact decimal when the reduced denominator is 2^a*5^b,
    /// otherwise "p/q".
    std::string str() const;
    /// Always "p" or "p/q".
    std::string fraction_str() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws on zero divisor

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Backing = boost::multiprecision::cpp_rational;
    explicit Rational(Backing v) : v_(std::move(v)) {}
    Backing v_;
};

/// Non-negative exact time in milliseconds. Closed under the operations the
/// engine needs: add, subtract with non-negative result, scale by a
/// non-negative integer, divide by a positive count, compare.
class Time {
public:
    Time() = default;
    Time(long long ms); // NOLINT: implicit by design; throws if ms < 0
    static Time of(const Rational& value); // throws if value < 0
    static std::optional<Time> parse(std::string_view text);

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return v_.is_integer(); }
    std::string str() const { return v_.str(); }

    Time& operator+=(const Time& o);
    Time& operator-=(const Time& o); // throws if result would be negative
    friend Time operator+(Time a, const Time& b) { return a += b; }
    friend Time operator-(Time a, const Time& b) { return a -= b; }

    Time times(long long k) const;          // k >= 0
    Time divided_by(std::size_t k) const;   // k > 0

    friend bool operator==(const Time& a, const Time& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Time& a, const Time& b) { return a.v_ != b.v_; }
    friend bool operator<(const Time& a, const Time& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Time& a, const Time& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Time& a, const Time& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Time& a, const Time& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Time& t);

private:
    Rational v_;
};

} // namespace schedsim

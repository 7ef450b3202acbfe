#include "schedsim/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace schedsim {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt pow10(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 10;
    return r;
}

} // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    // cpp_rational reduces but expects a positive denominator
    v_ = den < 0 ? Backing(-num, -den) : Backing(num, den);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        r = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        const BigInt scale = pow10(frac.size());
        r = Rational(BigInt(std::string(whole)) * scale + BigInt(std::string(frac)), scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        r = Rational(BigInt(std::string(text)), BigInt(1));
    }
    return negative ? -r : r;
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(v_); }

std::string Rational::fraction_str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::string Rational::str() const {
    BigInt num = numerator();
    const BigInt den = denominator();
    if (den == 1) return num.str();

    // A reduced fraction has a terminating decimal expansion iff the
    // denominator is of the form 2^a * 5^b.
    BigInt rest = den;
    std::size_t twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return fraction_str();

    const bool negative = num < 0;
    if (negative) num = -num;
    const std::size_t places = std::max(twos, fives);
    std::string digits = BigInt(num * pow10(places) / den).str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return negative ? "-" + digits : digits;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

Rational Rational::operator-() const { return Rational(Backing(-v_)); }
Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Time::Time(long long ms) : v_(ms) {
    if (ms < 0) throw ValidationError("NegativeTime: " + std::to_string(ms));
}

Time Time::of(const Rational& value) {
    if (value.is_negative()) throw ValidationError("NegativeTime: " + value.str());
    Time t;
    t.v_ = value;
    return t;
}

std::optional<Time> Time::parse(std::string_view text) {
    auto r = Rational::parse(text);
    if (!r || r->is_negative()) return std::nullopt;
    return Time::of(*r);
}

Time& Time::operator+=(const Time& o) { v_ += o.v_; return *this; }

Time& Time::operator-=(const Time& o) {
    if (v_ < o.v_)
        throw ValidationError("NegativeTime: " + v_.str() + " - " + o.v_.str());
    v_ -= o.v_;
    return *this;
}

Time Time::times(long long k) const {
    if (k < 0) throw ValidationError("NegativeTime: scale by " + std::to_string(k));
    return Time::of(v_ * Rational(k));
}

Time Time::divided_by(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("Time: division by zero");
    return Time::of(v_ / Rational(static_cast<long long>(k)));
}

std::ostream& operator<<(std::ostream& os, const Time& t) { return os << t.str(); }

} // namespace schedsim

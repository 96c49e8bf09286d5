#include "fairshare/arith.hpp"

#include <utility>

namespace fairshare {

Nat gcd(const Nat& a, const Nat& b) {
    if (a < 0 || b < 0)
        throw InvalidInput("gcd: arguments must be nonnegative");
    Nat x = a;
    Nat y = b;
    while (y != 0) {
        Nat t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

Nat lcm(const Nat& a, const Nat& b) {
    if (a <= 0 || b <= 0)
        throw InvalidInput("lcm: arguments must be positive");
    return a / gcd(a, b) * b;
}

Nat lcm_all(std::span<const Nat> values) {
    if (values.empty())
        throw InvalidInput("lcm_all: empty list");
    Nat acc = 1;
    for (const Nat& v : values) {
        if (v <= 0)
            throw InvalidInput("lcm_all: every value must be at least 1");
        acc = lcm(acc, v);
    }
    return acc;
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw InvalidInput("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0)
        throw InvalidInput("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational rat_sum(std::span<const Rational> terms) {
    Rational acc;
    for (const Rational& t : terms)
        acc += t;
    return acc;
}

}  // namespace fairshare

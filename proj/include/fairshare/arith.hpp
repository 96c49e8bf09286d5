#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer and rational arithmetic.
 *
 * Integers are arbitrary precision (Boost.Multiprecision cpp_int), so no
 * operation here can wrap. Rationals are kept in lowest terms with a
 * positive denominator after every operation; zero is 0/1.
 */

#include <compare>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairshare {

using Int = boost::multiprecision::cpp_int;

/// Nonnegative integer. Same representation as Int; entry points reject
/// negative values.
using Nat = Int;

/// Base of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// gcd(a, 0) = a, gcd(0, 0) = 0.
Nat gcd(const Nat& a, const Nat& b);

Nat lcm(const Nat& a, const Nat& b);

/// Least common multiple of a nonempty list of positive integers.
Nat lcm_all(std::span<const Nat> values);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by intent
    Rational(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    /// "n/d", or just "n" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    // Both sides are reduced, so memberwise equality is value equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void reduce();

    Int num_;
    Int den_;
};

/// Exact reduced sum; the empty sum is 0/1.
Rational rat_sum(std::span<const Rational> terms);

}  // namespace fairshare

#pragma once

/**
 * @file solver.hpp
 * @brief Borrowed-unit fair division.
 *
 * N indivisible units are split among k heirs in the ratios
 * 1/s_1 : ... : 1/s_k by borrowing x units, dividing the augmented total
 * N + x exactly, and returning the x units afterwards. With
 * m = lcm(s_i) and r = sum(m / s_i), this works iff sum(1/s_i) < 1 and
 * r divides N; the loan is then x = a*m - N = a*(m - r) where a = N / r.
 */

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fairshare/arith.hpp"

namespace fairshare {

/// The share sum over the lcm denominator: sum(1/s_i) = r/m.
/// r is deliberately left unreduced against m.
struct FractionSum {
    Nat m;
    Nat r;
    Rational reduced;

    bool operator==(const FractionSum&) const = default;
};

/// A validated divisor list. Only `validate_spec` constructs one, so every
/// instance satisfies sum(1/s_i) < 1.
class ShareSpec {
public:
    std::span<const Nat> divisors() const { return divisors_; }
    std::size_t heirs() const { return divisors_.size(); }
    const FractionSum& sum() const { return sum_; }

private:
    friend ShareSpec validate_spec(std::vector<Nat> divisors);
    ShareSpec(std::vector<Nat> divisors, FractionSum sum)
        : divisors_(std::move(divisors)), sum_(std::move(sum)) {}

    std::vector<Nat> divisors_;
    FractionSum sum_;
};

enum class SpecErrorKind { EmptySpec, NonPositiveDivisor, ShareOverflow };

class SpecError : public Error {
public:
    SpecError(SpecErrorKind kind, const std::string& what,
              std::optional<Rational> offending_sum = std::nullopt)
        : Error(what), kind_(kind), offending_sum_(std::move(offending_sum)) {}

    SpecErrorKind kind() const { return kind_; }
    /// The exact share sum, set for ShareOverflow.
    const std::optional<Rational>& offending_sum() const { return offending_sum_; }

private:
    SpecErrorKind kind_;
    std::optional<Rational> offending_sum_;
};

class HerdZero : public Error {
public:
    HerdZero() : Error("herd size must be at least 1") {}
};

class InfeasibleHerd : public Error {
public:
    using Error::Error;
};

struct LoanSolution {
    std::vector<Nat> divisors;
    Nat herd;
    Nat loan;
    Nat augmented;
    Nat multiplier;
    std::vector<Nat> shares;

    bool operator==(const LoanSolution&) const = default;
};

/// Diagnosis for a herd that is not a multiple of r.
struct Infeasible {
    Nat herd;
    Nat r;
    std::optional<Nat> nearest_below;  // unset when herd < r
    Nat nearest_above;

    bool operator==(const Infeasible&) const = default;
};

using SolveResult = std::variant<LoanSolution, Infeasible>;

struct FractionalBreakdown {
    std::vector<Rational> raw_shares;
    Rational leftover;
    std::vector<Rational> topups;  // empty when the herd is infeasible

    bool operator==(const FractionalBreakdown&) const = default;
};

struct HerdLoan {
    Nat herd;
    Nat loan;

    bool operator==(const HerdLoan&) const = default;
};

enum class StepKind { Borrow, Divide, Sum, Return };

struct NarrationStep {
    StepKind kind;
    std::string text;
};

/// Throws SpecError when the list is empty, has a zero (or negative)
/// divisor, or its unit fractions sum to 1 or more.
ShareSpec validate_spec(std::vector<Nat> divisors);

FractionSum fraction_sum(const ShareSpec& spec);

SolveResult solve(const ShareSpec& spec, const Nat& herd);

/// Throws InfeasibleHerd unless r divides herd.
Nat required_loan(const ShareSpec& spec, const Nat& herd);

/// Every feasible (herd, loan) pair with herd <= limit, ascending.
std::vector<HerdLoan> feasible_herds(const ShareSpec& spec, const Nat& limit);

/// The smallest feasible herd (r) and its loan (m - r).
HerdLoan minimal_instance(const ShareSpec& spec);

FractionalBreakdown fractional_breakdown(const ShareSpec& spec, const Nat& herd);

/// Brute-force reference: scans x = 0..loan_bound for the first loan under
/// which every (herd + x)/s_i is integral and the shares sum to herd. Makes
/// no use of r or the divisibility characterization.
std::optional<LoanSolution> oracle_solve(const ShareSpec& spec, const Nat& herd,
                                         const Nat& loan_bound);

/// Borrow, one division step per heir, the total, and the return.
std::vector<NarrationStep> explain(const LoanSolution& solution);

std::string_view to_string(StepKind kind);

}  // namespace fairshare

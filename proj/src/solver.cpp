#include "fairshare/solver.hpp"

#include <cstdint>

namespace fairshare {

namespace {

void require_herd(const Nat& herd) {
    if (herd < 0)
        throw InvalidInput("herd size must be nonnegative");
    if (herd == 0)
        throw HerdZero();
}

LoanSolution build_solution(std::span<const Nat> divisors, const Nat& herd, const Nat& augmented,
                            const Nat& multiplier) {
    LoanSolution sol;
    sol.divisors.assign(divisors.begin(), divisors.end());
    sol.herd = herd;
    sol.augmented = augmented;
    sol.loan = augmented - herd;
    sol.multiplier = multiplier;
    sol.shares.reserve(divisors.size());
    for (const Nat& s : divisors)
        sol.shares.push_back(augmented / s);
    return sol;
}

// Scan for the first x whose augmented total divides evenly and returns
// exactly `herd` units. Nothing but the divisors themselves is consulted.
template <typename T>
std::optional<T> scan_loans(std::span<const T> divisors, const T& herd, const T& bound) {
    for (T x = 0; x <= bound; ++x) {
        const T total = herd + x;
        T handed_out = 0;
        bool exact = true;
        for (const T& s : divisors) {
            if (total % s != 0) {
                exact = false;
                break;
            }
            handed_out += total / s;
            if (handed_out > herd) {
                exact = false;
                break;
            }
        }
        if (exact && handed_out == herd)
            return x;
    }
    return std::nullopt;
}

}  // namespace

ShareSpec validate_spec(std::vector<Nat> divisors) {
    if (divisors.empty())
        throw SpecError(SpecErrorKind::EmptySpec, "no divisors given");
    for (const Nat& s : divisors) {
        if (s <= 0)
            throw SpecError(SpecErrorKind::NonPositiveDivisor,
                            "divisor " + s.str() + " is not a positive integer");
    }

    FractionSum sum;
    sum.m = lcm_all(divisors);
    sum.r = 0;
    for (const Nat& s : divisors)
        sum.r += sum.m / s;
    sum.reduced = Rational(sum.r, sum.m);

    if (sum.r == sum.m)
        throw SpecError(SpecErrorKind::ShareOverflow, "share sum equals 1", sum.reduced);
    if (sum.r > sum.m)
        throw SpecError(SpecErrorKind::ShareOverflow,
                        "share sum " + sum.reduced.str() + " exceeds 1", sum.reduced);

    return ShareSpec(std::move(divisors), std::move(sum));
}

FractionSum fraction_sum(const ShareSpec& spec) { return spec.sum(); }

SolveResult solve(const ShareSpec& spec, const Nat& herd) {
    require_herd(herd);
    const FractionSum& fs = spec.sum();
    const Nat multiplier = herd / fs.r;
    if (herd % fs.r != 0) {
        Infeasible diag;
        diag.herd = herd;
        diag.r = fs.r;
        if (multiplier > 0)
            diag.nearest_below = multiplier * fs.r;
        diag.nearest_above = (multiplier + 1) * fs.r;
        return diag;
    }
    return build_solution(spec.divisors(), herd, multiplier * fs.m, multiplier);
}

Nat required_loan(const ShareSpec& spec, const Nat& herd) {
    require_herd(herd);
    const FractionSum& fs = spec.sum();
    if (herd % fs.r != 0)
        throw InfeasibleHerd("herd " + herd.str() + " is not a multiple of r = " + fs.r.str());
    return herd / fs.r * (fs.m - fs.r);
}

std::vector<HerdLoan> feasible_herds(const ShareSpec& spec, const Nat& limit) {
    const FractionSum& fs = spec.sum();
    std::vector<HerdLoan> out;
    const Nat gap = fs.m - fs.r;
    for (Nat a = 1; a * fs.r <= limit; ++a)
        out.push_back({a * fs.r, a * gap});
    return out;
}

HerdLoan minimal_instance(const ShareSpec& spec) {
    const FractionSum& fs = spec.sum();
    return {fs.r, fs.m - fs.r};
}

FractionalBreakdown fractional_breakdown(const ShareSpec& spec, const Nat& herd) {
    require_herd(herd);
    FractionalBreakdown out;
    out.raw_shares.reserve(spec.heirs());
    for (const Nat& s : spec.divisors())
        out.raw_shares.emplace_back(herd, s);
    out.leftover = Rational(herd) - rat_sum(out.raw_shares);

    const FractionSum& fs = spec.sum();
    if (herd % fs.r == 0) {
        const Nat loan = herd / fs.r * (fs.m - fs.r);
        out.topups.reserve(spec.heirs());
        for (const Nat& s : spec.divisors())
            out.topups.emplace_back(loan, s);
    }
    return out;
}

std::optional<LoanSolution> oracle_solve(const ShareSpec& spec, const Nat& herd,
                                         const Nat& loan_bound) {
    require_herd(herd);
    if (loan_bound < 0)
        throw InvalidInput("loan bound must be nonnegative");

    const auto divisors = spec.divisors();
    std::optional<Nat> loan;

    // Machine-word path for desk-scale inputs. The running share total stops
    // as soon as it passes herd, so it stays below herd + total < 2^63.
    constexpr std::uint64_t word_limit = std::uint64_t{1} << 62;
    bool fits = herd + loan_bound < word_limit;
    for (const Nat& s : divisors)
        fits = fits && s < word_limit;
    if (fits) {
        std::vector<std::uint64_t> small;
        small.reserve(divisors.size());
        for (const Nat& s : divisors)
            small.push_back(static_cast<std::uint64_t>(s));
        const auto hit = scan_loans<std::uint64_t>(
            small, static_cast<std::uint64_t>(herd), static_cast<std::uint64_t>(loan_bound));
        if (hit)
            loan = Nat(*hit);
    } else {
        const auto hit = scan_loans<Nat>(divisors, herd, loan_bound);
        if (hit)
            loan = *hit;
    }

    if (!loan)
        return std::nullopt;
    const Nat augmented = herd + *loan;
    return build_solution(divisors, herd, augmented, augmented / lcm_all(divisors));
}

std::vector<NarrationStep> explain(const LoanSolution& solution) {
    std::vector<NarrationStep> steps;
    steps.reserve(solution.divisors.size() + 3);
    steps.push_back({StepKind::Borrow, "borrow " + solution.loan.str() + ", making " +
                                           solution.augmented.str()});
    for (std::size_t i = 0; i < solution.divisors.size(); ++i) {
        steps.push_back({StepKind::Divide, "heir " + std::to_string(i + 1) + " takes " +
                                               solution.augmented.str() + "/" +
                                               solution.divisors[i].str() + " = " +
                                               solution.shares[i].str()});
    }
    std::string total;
    for (std::size_t i = 0; i < solution.shares.size(); ++i) {
        if (i > 0)
            total += " + ";
        total += solution.shares[i].str();
    }
    steps.push_back({StepKind::Sum, "heirs hold " + total + " = " + solution.herd.str()});
    steps.push_back({StepKind::Return, "return " + solution.loan.str()});
    return steps;
}

std::string_view to_string(StepKind kind) {
    switch (kind) {
    case StepKind::Borrow: return "borrow";
    case StepKind::Divide: return "divide";
    case StepKind::Sum: return "sum";
    case StepKind::Return: return "return";
    }
    return "unknown";
}

}  // namespace fairshare

#include "fairshare/generator.hpp"

#include <algorithm>

#include "fairshare/solver.hpp"

namespace fairshare {

namespace {

class SpecSearch {
public:
    SpecSearch(const SearchBounds& bounds, std::uint64_t budget)
        : bounds_(bounds), budget_(budget), floor_fraction_(Int(1), Int(bounds.max_divisor)) {
        tuple_.reserve(bounds.heirs);
    }

    std::vector<PuzzleRecord> run() {
        descend(2, Rational());
        return std::move(found_);
    }

private:
    // Extend the tuple with values >= `lowest`. `partial` is the sum of the
    // unit fractions already chosen.
    void descend(std::uint64_t lowest, const Rational& partial) {
        const std::size_t depth = tuple_.size();
        if (depth == bounds_.heirs) {
            emit();
            return;
        }
        const std::size_t remaining_after = bounds_.heirs - depth - 1;
        // Every later slot adds at least 1/max_divisor.
        const Rational tail_floor = floor_fraction_ * Rational(Int(remaining_after));

        for (std::uint64_t s = lowest; s <= bounds_.max_divisor; ++s) {
            if (!bounds_.allow_duplicates && s + remaining_after > bounds_.max_divisor)
                break;
            if (++nodes_ > budget_)
                throw BoundsTooLarge("search exceeded node budget of " +
                                     std::to_string(budget_));
            Rational next = partial + Rational(Int(1), Int(s));
            if (next + tail_floor >= Rational(1))
                continue;  // larger s shrinks the sum; keep scanning
            tuple_.push_back(s);
            descend(bounds_.allow_duplicates ? s : s + 1, next);
            tuple_.pop_back();
        }
    }

    void emit() {
        std::vector<Nat> divisors(tuple_.begin(), tuple_.end());
        const ShareSpec spec = validate_spec(divisors);
        const HerdLoan minimal = minimal_instance(spec);
        if (bounds_.max_loan && minimal.loan > *bounds_.max_loan)
            return;
        found_.push_back(
            {std::move(divisors), spec.sum().r, spec.sum().m, minimal.herd, minimal.loan});
    }

    const SearchBounds& bounds_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Rational floor_fraction_;
    std::vector<std::uint64_t> tuple_;
    std::vector<PuzzleRecord> found_;
};

}  // namespace

std::vector<PuzzleRecord> enumerate_specs(const SearchBounds& bounds, std::uint64_t node_budget) {
    if (bounds.heirs == 0)
        throw InvalidInput("heirs must be at least 1");
    if (bounds.max_divisor < 2)
        throw InvalidInput("max divisor must be at least 2");
    if (bounds.max_loan && *bounds.max_loan < 0)
        throw InvalidInput("max loan must be nonnegative");
    // DFS visits values in increasing order at every depth, so output is
    // already lexicographic.
    return SpecSearch(bounds, node_budget).run();
}

std::vector<Nat> canonicalize(std::vector<Nat> divisors) {
    validate_spec(divisors);
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace fairshare

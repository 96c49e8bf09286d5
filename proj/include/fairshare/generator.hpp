#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fairshare/arith.hpp"

namespace fairshare {

/// A puzzle: canonical divisor tuple plus its minimal instance.
struct PuzzleRecord {
    std::vector<Nat> divisors;  // nondecreasing
    Nat r;
    Nat m;
    Nat minimal_herd;  // = r
    Nat minimal_loan;  // = m - r

    bool operator==(const PuzzleRecord&) const = default;
};

struct SearchBounds {
    std::size_t heirs = 3;
    std::uint64_t max_divisor = 9;
    std::optional<Nat> max_loan;  // unset: unbounded
    bool allow_duplicates = false;
};

inline constexpr std::uint64_t default_node_budget = 10'000'000;

class BoundsTooLarge : public Error {
public:
    using Error::Error;
};

/// Every canonical tuple of exactly `heirs` divisors in [2, max_divisor]
/// whose unit fractions sum below 1 and whose minimal loan is within
/// max_loan, in lexicographic order. Throws InvalidInput for heirs == 0 or
/// max_divisor < 2, and BoundsTooLarge once the search visits more than
/// `node_budget` nodes.
std::vector<PuzzleRecord> enumerate_specs(const SearchBounds& bounds,
                                          std::uint64_t node_budget = default_node_budget);

/// Validates, then sorts nondecreasing. Idempotent.
std::vector<Nat> canonicalize(std::vector<Nat> divisors);

}  // namespace fairshare

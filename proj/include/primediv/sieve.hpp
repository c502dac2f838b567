#pragma once

// Prime-by-prime divisibility over a range, aggregated by splitting type.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "primediv/density.hpp"
#include "primediv/residue.hpp"

namespace primediv {

struct SieveSummary {
    std::uint64_t limit = 0;
    std::uint64_t prime_count = 0;
    std::uint64_t divisor_count = 0;
    std::uint64_t split_divisors = 0;
    std::uint64_t inert_divisors = 0;
    std::uint64_t ramified_divisors = 0;
    std::uint64_t bad_divisors = 0;
    std::uint64_t split_primes = 0;
    std::uint64_t inert_primes = 0;

    /// Divisors of the given case over all primes up to the limit.
    ExactRational empirical_fraction(PrimeCase c) const;
    ExactRational empirical_total() const;

    bool operator==(const SieveSummary&) const = default;
};

struct SieveRun {
    SieveSummary summary;
    std::vector<PrimeCheck> records;  // empty unless requested
};

inline constexpr std::uint64_t kSieveBlock = 1 << 14;

/// Checks every prime p <= limit. Work is split into blocks of kSieveBlock
/// primes handed to `jobs` threads (0 = hardware concurrency) and merged in
/// block order, so the output does not depend on jobs. Throws
/// DegenerateRecurrenceError for recurrences without a membership test.
SieveRun run_sieve(const Recurrence& rec, std::uint64_t limit, unsigned jobs = 0, bool keep_records = false);

void write_records_csv(std::ostream& os, const std::vector<PrimeCheck>& records);

struct Predictions {
    std::optional<DensityResult> split, inert, total;
};

/// Known densities for the (1,1,3,1) sequence (split, inert, total) and for
/// sequences sharing the quotients of (1,1,2,1) (total 2/3). Matches allow
/// simultaneous inversion of q and r. Empty otherwise.
Predictions predictions_for(const Recurrence& rec, std::uint64_t euler_bound = kDefaultEulerBound);

struct ComparisonRow {
    std::string label;  // "split", "inert", "total"
    std::uint64_t divisors = 0;
    ExactRational empirical;
    double empirical_decimal = 0;
    std::optional<ApproxReal> predicted;
    std::optional<double> gap;  // |empirical - predicted|
};

struct ComparisonReport {
    std::uint64_t limit = 0;
    std::uint64_t prime_count = 0;
    std::vector<ComparisonRow> rows;
};

ComparisonReport compare(const SieveSummary& summary, const Predictions& predictions);

}  // namespace primediv

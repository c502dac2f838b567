#include "primediv/sieve.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "primediv/primes.hpp"

namespace primediv {

ExactRational SieveSummary::empirical_fraction(PrimeCase c) const {
    std::uint64_t n = 0;
    switch (c) {
        case PrimeCase::Split: n = split_divisors; break;
        case PrimeCase::Inert: n = inert_divisors; break;
        case PrimeCase::Ramified: n = ramified_divisors; break;
        case PrimeCase::Bad: n = bad_divisors; break;
    }
    return {mpz_class(static_cast<unsigned long>(n)), mpz_class(static_cast<unsigned long>(prime_count))};
}

ExactRational SieveSummary::empirical_total() const {
    return {mpz_class(static_cast<unsigned long>(divisor_count)), mpz_class(static_cast<unsigned long>(prime_count))};
}

namespace {

struct BlockResult {
    SieveSummary counts;
    std::vector<PrimeCheck> records;
};

void tally(SieveSummary& s, const PrimeCheck& c) {
    ++s.prime_count;
    // p = 2 is counted with the inert primes when it is inert; ramified
    // divisors count only towards the total, bad primes only towards
    // prime_count unless they divide a term
    if (c.kind == PrimeCase::Split) ++s.split_primes;
    if (c.kind == PrimeCase::Inert) ++s.inert_primes;
    if (!c.divides) return;
    ++s.divisor_count;
    switch (c.kind) {
        case PrimeCase::Split: ++s.split_divisors; break;
        case PrimeCase::Inert: ++s.inert_divisors; break;
        case PrimeCase::Ramified: ++s.ramified_divisors; break;
        case PrimeCase::Bad: ++s.bad_divisors; break;
    }
}

void merge(SieveSummary& into, const SieveSummary& from) {
    into.prime_count += from.prime_count;
    into.divisor_count += from.divisor_count;
    into.split_divisors += from.split_divisors;
    into.inert_divisors += from.inert_divisors;
    into.ramified_divisors += from.ramified_divisors;
    into.bad_divisors += from.bad_divisors;
    into.split_primes += from.split_primes;
    into.inert_primes += from.inert_primes;
}

}  // namespace

SieveRun run_sieve(const Recurrence& rec, std::uint64_t limit, unsigned jobs, bool keep_records) {
    const PreparedRecurrence prep = PreparedRecurrence::make(rec);
    const std::vector<std::uint64_t> primes = primes_up_to(limit);
    const std::size_t blocks = (primes.size() + kSieveBlock - 1) / kSieveBlock;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(blocks, 1)));

    std::vector<BlockResult> results(blocks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t b; (b = next.fetch_add(1)) < blocks;) {
                BlockResult& out = results[b];
                std::size_t end = std::min(primes.size(), (b + 1) * kSieveBlock);
                for (std::size_t k = b * kSieveBlock; k < end; ++k) {
                    PrimeCheck c = check_prime(prep, primes[k]);
                    tally(out.counts, c);
                    if (keep_records) out.records.push_back(c);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = blocks;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    SieveRun run;
    run.summary.limit = limit;
    for (auto& r : results) {
        merge(run.summary, r.counts);
        if (keep_records) run.records.insert(run.records.end(), r.records.begin(), r.records.end());
    }
    return run;
}

void write_records_csv(std::ostream& os, const std::vector<PrimeCheck>& records) {
    os << "p,case,divides,ord_r,ord_q,method\n";
    for (auto& r : records) {
        os << r.p << ',' << to_string(r.kind) << ',' << (r.divides ? "true" : "false") << ',';
        if (r.ord_r) os << *r.ord_r;
        os << ',';
        if (r.ord_q) os << *r.ord_q;
        os << ',' << (r.method == CheckMethod::Orders ? "orders" : "oracle") << '\n';
    }
}

namespace {

bool same_quotients(const Recurrence& a, const Recurrence& b) {
    if (!classify(a).supports_membership() || !classify(b).supports_membership()) return false;
    AlgebraicNumber qa = initial_quotient(a), ra = root_quotient(a);
    AlgebraicNumber qb = initial_quotient(b), rb = root_quotient(b);
    if (qa.D() != qb.D()) return false;
    return (qa == qb && ra == rb) || (qa == qb.inverse() && ra == rb.inverse());
}

}  // namespace

Predictions predictions_for(const Recurrence& rec, std::uint64_t euler_bound) {
    Predictions out;
    if (same_quotients(rec, Recurrence::default_sequence())) {
        out.split = delta_split_closed(euler_bound);
        out.inert = delta_inert_closed(euler_bound);
        out.total = delta_total(euler_bound);
    } else if (same_quotients(rec, Recurrence::lucas())) {
        ExactRational two_thirds(2, 3);
        out.total = DensityResult{std::nullopt, two_thirds * ApproxReal{1, 0}, "torsion_two_thirds"};
    }
    return out;
}

ComparisonReport compare(const SieveSummary& summary, const Predictions& predictions) {
    ComparisonReport rep;
    rep.limit = summary.limit;
    rep.prime_count = summary.prime_count;
    auto row = [&](std::string label, std::uint64_t divisors, ExactRational emp, const std::optional<DensityResult>& pred) {
        ComparisonRow r;
        r.label = std::move(label);
        r.divisors = divisors;
        r.empirical = std::move(emp);
        r.empirical_decimal = r.empirical.to_double();
        if (pred) {
            r.predicted = pred->decimal;
            r.gap = std::abs(r.empirical_decimal - pred->decimal.to_double());
        }
        rep.rows.push_back(std::move(r));
    };
    row("split", summary.split_divisors, summary.empirical_fraction(PrimeCase::Split), predictions.split);
    row("inert", summary.inert_divisors, summary.empirical_fraction(PrimeCase::Inert), predictions.inert);
    row("total", summary.divisor_count, summary.empirical_total(), predictions.total);
    return rep;
}

}  // namespace primediv

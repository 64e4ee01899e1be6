#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mary/digits.hpp"
#include "mary/natural.hpp"

namespace mary {

/* Guardrail for every operation that walks a full partition set. */
inline constexpr Nat kDefaultCap = 10'000'000;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(Nat cap_)
        : std::runtime_error("partition cap exceeded (cap=" + std::to_string(cap_) + ")")
        , cap(cap_)
    {
    }
    Nat cap;
};

/* One m-ary partition, stored by part multiplicities: mults[i] is the number
 * of parts equal to base^i. Canonical form has no trailing zero entries; the
 * empty vector is the unique partition of 0.
 */
struct MaryPartition {
    Nat base = 2;
    std::vector<Nat> mults;

    Nat mult(std::size_t i) const { return i < mults.size() ? mults[i] : 0; }

    auto operator<=>(const MaryPartition&) const = default;
};

Nat value(const MaryPartition& p);
Nat nops(const MaryPartition& p);

/* true iff mults[i] <= digit_i(n) for every i >= 1; mults[0] is free.
 * Rejects p when value(p) != n.
 */
bool is_simple(const MaryPartition& p, Nat n);

/* Exact counts of the full / simple / non-simple partition sets. */
struct PartitionTriple {
    Natural all;
    Natural simple;
    Natural nonsimple;
};

/* Single-consumer stream over all m-ary partitions of n in canonical order:
 * multiplicities are chosen from the highest power downward, largest count
 * first, with the count of ones absorbing the remainder. The first partition
 * is the greedy one, the last is all ones.
 *
 *     PartitionEnumerator e(8, 2);
 *     while (e.next()) use(e.mults());
 *
 * mults() is padded to the digit length of n and only valid until the next
 * call to next().
 */
class PartitionEnumerator {
public:
    PartitionEnumerator(Nat n, Nat base);

    bool next();
    const std::vector<Nat>& mults() const { return mults_; }
    MaryPartition partition() const; /* canonical (trimmed) copy */

private:
    Nat n_;
    Nat base_;
    std::vector<Nat> pows_;
    std::vector<Nat> mults_;
    bool started_ = false;
    bool done_ = false;
};

/* Stream over the simple partitions only, in the same canonical order they
 * would appear within PartitionEnumerator. Directly walks the product space
 * of feasible multiplicities above index 0.
 */
class SimplePartitionEnumerator {
public:
    SimplePartitionEnumerator(Nat n, Nat base);

    bool next();
    const std::vector<Nat>& mults() const { return mults_; }
    MaryPartition partition() const;

private:
    Nat n_;
    BaseMDigits nd_;
    std::vector<Nat> pows_;
    std::vector<Nat> mults_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<MaryPartition> enumerate_all(Nat n, Nat base, Nat cap = kDefaultCap);
std::vector<MaryPartition> enumerate_simple(Nat n, Nat base, Nat cap = kDefaultCap);

/* Exact b_m(n) by the bounded-part recurrence
 *     c(x, j) = c(x, j - 1) + c(x - m^j, j),  c(x, 0) = 1,
 * filled in place over one row per query range and memoized across calls.
 * One instance is not safe for concurrent use.
 */
class PartitionCounter {
public:
    explicit PartitionCounter(Nat base);

    /* by value: a later call may grow the table and relocate entries */
    Natural count(Nat n);
    Nat base() const { return base_; }

private:
    void extend(Nat n);

    Nat base_;
    std::vector<Natural> row_;
};

Natural count_bm(Nat n, Nat base);
PartitionTriple count_triple(Nat n, Nat base);

} // namespace mary

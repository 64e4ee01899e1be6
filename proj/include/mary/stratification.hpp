#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mary/partitions.hpp"

namespace mary {

/* Tally of partitions by part count residue: counts[w] is the number of
 * partitions whose nops is congruent to w mod modulus.
 */
struct ResidueHistogram {
    Nat modulus = 2;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
};

ResidueHistogram nops_histogram(const std::vector<MaryPartition>& ps, Nat modulus);

/* All residues hit equally often; the all-zero histogram counts as
 * equidistributed.
 */
bool is_equidistributed(const ResidueHistogram& h);

/* One equal-tail equivalence class inside a stratum. All members share the
 * fiber key b, the stratum index z and every multiplicity above z; their
 * multiplicity at z sweeps the interval (b_z, b_z + base*r] one value each,
 * so the class has exactly base*r members.
 */
struct ChainClass {
    Nat base = 2;
    Nat b = 0;
    std::size_t z = 1;
    std::vector<Nat> tail; /* multiplicities at indices z+1 .. k */
    Nat r = 1;
    std::vector<MaryPartition> members; /* sorted by multiplicity at z, ascending */
};

struct ChainParams {
    Nat r;
    Nat max_u;
};

/* r and the largest multiplicity at z realized in the class. Throws
 * std::logic_error when the class breaks a structural invariant; that is a
 * stratification bug, not a user error.
 */
ChainParams chain_params(const ChainClass& c, Nat n);

/* Three-level decomposition of the non-simple partitions of n: fiber key b,
 * then stratum index z, then equal-tail chain classes. Only nonempty fibers
 * and strata are stored. Orderings are deterministic: fibers by b, strata by
 * z, classes by tail, members by multiplicity at z.
 */
struct Stratification {
    Nat n = 0;
    Nat base = 2;
    std::map<Nat, std::map<std::size_t, std::vector<ChainClass>>> fibers;

    std::uint64_t fiber_size(Nat b) const;
    std::uint64_t total() const; /* number of non-simple partitions */
};

/* The fiber key of a non-simple partition: the number whose base-m digits
 * are min(digit_i(n), mults[i]). Rejects simple input.
 */
Nat f_map(const MaryPartition& p, Nat n);

struct Decomposition {
    std::vector<Nat> remainder;
    Nat b;
};

/* Component-wise split mults[i] = remainder[i] + digit_i(b) with
 * b = f_map(p, n); remainder[i] > 0 only where digit_i(n) = digit_i(b).
 */
Decomposition decompose(const MaryPartition& p, Nat n);

Stratification stratify(Nat n, Nat base, Nat cap = kDefaultCap);

/* Checks nops equidistribution mod base at all three levels: every chain
 * class (each residue exactly r times), every fiber, and the whole
 * non-simple set. Vacuously true when that set is empty.
 */
bool verify_equidistribution_N(Nat n, Nat base, Nat cap = kDefaultCap);

} // namespace mary

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mary/stratification.hpp"

namespace mary {

inline constexpr std::size_t kWitnessSampleLimit = 100;

/* Result of checking one claim at one grid point. A failing check always
 * carries evidence: the offending histogram and/or a bounded member sample,
 * plus a human-readable detail line.
 */
struct VerificationOutcome {
    std::string claim;
    Nat n = 0;
    Nat m = 2;
    std::optional<Nat> c;
    bool holds = false;
    std::optional<ResidueHistogram> histogram;
    std::vector<MaryPartition> members_sample;
    std::string detail;
};

/* predicted residue of b_m(n): digit_product(n, m, 1) mod m */
Nat afs_residue(Nat n, Nat base);

/* Checks both forms of the digit-product congruence:
 * b_m(n) = prod_{i>=1}(n_i + 1) and b_m(m*n) = prod_{i>=0}(n_i + 1), mod m.
 * The overload taking a counter lets sweeps reuse one table per base.
 */
VerificationOutcome verify_afs(Nat n, Nat base);
VerificationOutcome verify_afs(Nat n, Nat base, PartitionCounter& counter);

/* true iff some base-m digit of n at index >= 1 equals base - 1 */
bool digit_criterion(Nat n, Nat base);

/* digit_criterion must coincide with enumerated nops equidistribution on the
 * full partition set.
 */
VerificationOutcome verify_digit_criterion(Nat n, Nat base, Nat cap = kDefaultCap);

/* Equidistribution on the simple set must coincide with equidistribution on
 * the full set; the full-set side is decided by digit_criterion so only the
 * (cheap) simple set is enumerated.
 */
VerificationOutcome verify_equidistribution_S(Nat n, Nat base, Nat cap = kDefaultCap);

/* Members of the generalized non-simple set: partitions with mults[j] >
 * digit_j(n) for some j >= 1 whose next c multiplicities equal the digits of
 * n (missing entries read as zero). c = 0 reproduces the non-simple set.
 */
std::vector<MaryPartition> n_mc_members(Nat n, Nat base, Nat c, Nat cap = kDefaultCap);

/* |N_{m,c}(n)| must vanish mod m^(c+1); the detail line also reports the
 * complement count b_m(n) - |N_{m,c}(n)|.
 */
VerificationOutcome verify_nmc_congruence(Nat n, Nat base, Nat c, Nat cap = kDefaultCap);

} // namespace mary

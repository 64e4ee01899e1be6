#include "mary/congruence.hpp"

#include <limits>
#include <stdexcept>

namespace mary {

namespace {

Nat mult_at(const std::vector<Nat>& mults, std::size_t i)
{
    return i < mults.size() ? mults[i] : 0;
}

Nat padded_nops(const std::vector<Nat>& mults)
{
    Nat total = 0;
    for (Nat m : mults)
        total += m; /* bounded by the partitioned value */
    return total;
}

/* nops residue tally over the full partition set, streamed under the cap */
ResidueHistogram histogram_all(Nat n, Nat base, Nat cap)
{
    ResidueHistogram h{base, std::vector<std::uint64_t>(base, 0)};
    PartitionEnumerator e(n, base);
    Nat seen = 0;
    while (e.next()) {
        if (++seen > cap)
            throw CapExceeded(cap);
        ++h.counts[padded_nops(e.mults()) % base];
    }
    return h;
}

/* some j >= 1 has mults[j] > digit_j(n) with the next c multiplicities equal
 * to the digits of n; indices beyond either stored length read as zero */
bool nmc_member(const std::vector<Nat>& mults, const BaseMDigits& nd, Nat c)
{
    for (std::size_t j = 1; j < mults.size(); ++j) {
        if (mults[j] <= nd.digit(j))
            continue;
        bool match = true;
        for (Nat i = 1; i <= c; ++i) {
            const std::size_t idx = j + static_cast<std::size_t>(i);
            if (idx >= mults.size() && idx >= nd.length())
                break;
            if (mult_at(mults, idx) != nd.digit(idx)) {
                match = false;
                break;
            }
        }
        if (match)
            return true;
    }
    return false;
}

} // namespace

Nat afs_residue(Nat n, Nat base)
{
    return digit_product(n, base, 1) % base;
}

VerificationOutcome verify_afs(Nat n, Nat base)
{
    PartitionCounter counter(base);
    return verify_afs(n, base, counter);
}

VerificationOutcome verify_afs(Nat n, Nat base, PartitionCounter& counter)
{
    VerificationOutcome o;
    o.claim = "afs";
    o.n = n;
    o.m = base;

    const Nat predicted = afs_residue(n, base);
    const Nat actual = counter.count(n).mod(base);

    Nat mn;
    if (__builtin_mul_overflow(base, n, &mn))
        throw std::overflow_error("base * n exceeds 64 bits");
    const Nat predicted_mn = digit_product(n, base, 0) % base;
    const Nat actual_mn = counter.count(mn).mod(base);

    o.holds = actual == predicted && actual_mn == predicted_mn;
    o.detail = "b_m(n) mod m = " + std::to_string(actual) + ", digit product mod m = "
        + std::to_string(predicted) + "; b_m(m*n) mod m = " + std::to_string(actual_mn)
        + ", full digit product mod m = " + std::to_string(predicted_mn);
    return o;
}

bool digit_criterion(Nat n, Nat base)
{
    const BaseMDigits nd = to_base_m(n, base);
    for (std::size_t i = 1; i < nd.length(); ++i)
        if (nd.digits[i] == base - 1)
            return true;
    return false;
}

VerificationOutcome verify_digit_criterion(Nat n, Nat base, Nat cap)
{
    VerificationOutcome o;
    o.claim = "digit_criterion";
    o.n = n;
    o.m = base;

    const ResidueHistogram h = histogram_all(n, base, cap);
    const bool predicted = digit_criterion(n, base);
    const bool observed = is_equidistributed(h);
    o.histogram = h;
    o.holds = predicted == observed;
    o.detail = std::string("criterion ") + (predicted ? "true" : "false")
        + ", enumerated equidistribution " + (observed ? "true" : "false");
    if (!o.holds) {
        PartitionEnumerator e(n, base);
        while (e.next() && o.members_sample.size() < kWitnessSampleLimit)
            o.members_sample.push_back(e.partition());
    }
    return o;
}

VerificationOutcome verify_equidistribution_S(Nat n, Nat base, Nat cap)
{
    VerificationOutcome o;
    o.claim = "equidist_S";
    o.n = n;
    o.m = base;

    ResidueHistogram h{base, std::vector<std::uint64_t>(base, 0)};
    SimplePartitionEnumerator e(n, base);
    Nat seen = 0;
    while (e.next()) {
        if (++seen > cap)
            throw CapExceeded(cap);
        ++h.counts[padded_nops(e.mults()) % base];
    }
    const bool on_simple = is_equidistributed(h);
    const bool on_all = digit_criterion(n, base);
    o.histogram = h;
    o.holds = on_simple == on_all;
    o.detail = std::string("simple set ") + (on_simple ? "equidistributed" : "not equidistributed")
        + ", full set " + (on_all ? "equidistributed" : "not equidistributed");
    if (!o.holds) {
        SimplePartitionEnumerator se(n, base);
        while (se.next() && o.members_sample.size() < kWitnessSampleLimit)
            o.members_sample.push_back(se.partition());
    }
    return o;
}

std::vector<MaryPartition> n_mc_members(Nat n, Nat base, Nat c, Nat cap)
{
    const BaseMDigits nd = to_base_m(n, base);
    std::vector<MaryPartition> out;
    PartitionEnumerator e(n, base);
    Nat seen = 0;
    while (e.next()) {
        if (++seen > cap)
            throw CapExceeded(cap);
        if (nmc_member(e.mults(), nd, c))
            out.push_back(e.partition());
    }
    return out;
}

VerificationOutcome verify_nmc_congruence(Nat n, Nat base, Nat c, Nat cap)
{
    VerificationOutcome o;
    o.claim = "nmc";
    o.n = n;
    o.m = base;
    o.c = c;

    const BaseMDigits nd = to_base_m(n, base);
    Nat count = 0;
    std::vector<MaryPartition> sample;
    PartitionEnumerator e(n, base);
    Nat seen = 0;
    while (e.next()) {
        if (++seen > cap)
            throw CapExceeded(cap);
        if (nmc_member(e.mults(), nd, c)) {
            ++count;
            if (sample.size() < kWitnessSampleLimit)
                sample.push_back(e.partition());
        }
    }

    Nat modulus = 1;
    bool overflowed = false;
    for (Nat i = 0; i <= c; ++i) {
        if (modulus > std::numeric_limits<Nat>::max() / base) {
            overflowed = true;
            break;
        }
        modulus *= base;
    }
    o.holds = overflowed ? count == 0 : count % modulus == 0;

    const Natural complement = count_bm(n, base) - Natural(count);
    o.detail = "count=" + std::to_string(count)
        + " modulus=" + (overflowed ? std::string(">2^64") : std::to_string(modulus))
        + " complement=" + complement.str();
    if (!o.holds)
        o.members_sample = std::move(sample);
    return o;
}

} // namespace mary

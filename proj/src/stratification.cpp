#include "mary/stratification.hpp"

#include <algorithm>
#include <stdexcept>

namespace mary {

namespace {

void require_modulus(Nat modulus)
{
    if (modulus < 2)
        throw std::invalid_argument("modulus must be at least 2");
}

Nat mult_at(const std::vector<Nat>& mults, std::size_t i)
{
    return i < mults.size() ? mults[i] : 0;
}

/* fiber key digits: min(digit_i(n), mults[i]) folded back into a number */
Nat fiber_key(const std::vector<Nat>& mults, const BaseMDigits& nd)
{
    Nat b = 0;
    for (std::size_t i = nd.length(); i-- > 0;)
        b = b * nd.base + std::min(nd.digits[i], mult_at(mults, i));
    return b;
}

/* first index >= 1 where the multiplicity exceeds the digit; 0 if simple */
std::size_t stratum_index(const std::vector<Nat>& mults, const BaseMDigits& nd)
{
    for (std::size_t i = 1; i < nd.length(); ++i)
        if (mult_at(mults, i) > nd.digits[i])
            return i;
    return 0;
}

void check_class(const ChainClass& c, const std::vector<Nat>& pows)
{
    const Nat m = c.base;
    if (c.members.empty() || c.members.size() % m != 0)
        throw std::logic_error("chain class size is not a positive multiple of the base");
    if (c.r != c.members.size() / m)
        throw std::logic_error("chain parameter r does not match the class size");
    const Nat b_z = to_base_m(c.b, m).digit(c.z);
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        const Nat u = c.members[i].mult(c.z);
        if (u != b_z + 1 + i)
            throw std::logic_error("class multiplicities at z do not sweep (b_z, b_z + m*r]");
        /* independent route to m*r: excess at z plus the ones convertible
         * back into parts of size base^z */
        const Nat st = (u - b_z) + c.members[i].mult(0) / pows[c.z];
        if (st != m * c.r)
            throw std::logic_error("chain parameter recomputation mismatch");
    }
}

} // namespace

std::uint64_t ResidueHistogram::total() const
{
    std::uint64_t t = 0;
    for (std::uint64_t c : counts)
        t += c;
    return t;
}

ResidueHistogram nops_histogram(const std::vector<MaryPartition>& ps, Nat modulus)
{
    require_modulus(modulus);
    ResidueHistogram h{modulus, std::vector<std::uint64_t>(modulus, 0)};
    for (const MaryPartition& p : ps)
        ++h.counts[nops(p) % modulus];
    return h;
}

bool is_equidistributed(const ResidueHistogram& h)
{
    for (std::uint64_t c : h.counts)
        if (c != h.counts[0])
            return false;
    return true;
}

ChainParams chain_params(const ChainClass& c, Nat n)
{
    const Nat m = c.base;
    if (c.members.empty() || c.members.size() % m != 0)
        throw std::logic_error("chain class size is not a positive multiple of the base");
    const Nat r = c.members.size() / m;
    const Nat b_z = to_base_m(c.b, m).digit(c.z);
    const Nat max_u = b_z + m * r;
    Nat pow_z = 1;
    for (std::size_t i = 0; i < c.z; ++i)
        pow_z *= m;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (value(c.members[i]) != n)
            throw std::logic_error("chain class member does not partition n");
        const Nat u = c.members[i].mult(c.z);
        if (u != b_z + 1 + i)
            throw std::logic_error("class multiplicities at z do not sweep (b_z, b_z + m*r]");
        if ((u - b_z) + c.members[i].mult(0) / pow_z != m * r)
            throw std::logic_error("chain parameter recomputation mismatch");
    }
    return {r, max_u};
}

Nat f_map(const MaryPartition& p, Nat n)
{
    if (is_simple(p, n))
        throw std::invalid_argument("f_map is defined on non-simple partitions only");
    return fiber_key(p.mults, to_base_m(n, p.base));
}

Decomposition decompose(const MaryPartition& p, Nat n)
{
    const Nat b = f_map(p, n);
    const BaseMDigits nd = to_base_m(n, p.base);
    const BaseMDigits bd = to_base_m(b, p.base);
    std::vector<Nat> rem(nd.length(), 0);
    for (std::size_t i = 0; i < nd.length(); ++i)
        rem[i] = p.mult(i) - bd.digit(i);
    return {rem, b};
}

std::uint64_t Stratification::fiber_size(Nat b) const
{
    auto it = fibers.find(b);
    if (it == fibers.end())
        return 0;
    std::uint64_t size = 0;
    for (const auto& [z, classes] : it->second)
        for (const ChainClass& c : classes)
            size += c.members.size();
    return size;
}

std::uint64_t Stratification::total() const
{
    std::uint64_t size = 0;
    for (const auto& [b, strata] : fibers)
        for (const auto& [z, classes] : strata)
            for (const ChainClass& c : classes)
                size += c.members.size();
    return size;
}

Stratification stratify(Nat n, Nat base, Nat cap)
{
    const BaseMDigits nd = to_base_m(n, base);
    std::vector<Nat> pows(nd.length());
    for (std::size_t i = 0; i < pows.size(); ++i)
        pows[i] = i == 0 ? 1 : pows[i - 1] * base;

    std::map<Nat, std::map<std::size_t, std::map<std::vector<Nat>, std::vector<MaryPartition>>>> groups;
    PartitionEnumerator e(n, base);
    Nat seen = 0;
    while (e.next()) {
        if (++seen > cap)
            throw CapExceeded(cap);
        const std::vector<Nat>& mu = e.mults();
        const std::size_t z = stratum_index(mu, nd);
        if (z == 0)
            continue; /* simple */
        const Nat b = fiber_key(mu, nd);
        std::vector<Nat> tail(mu.begin() + z + 1, mu.end());
        groups[b][z][std::move(tail)].push_back(e.partition());
    }

    Stratification s{n, base, {}};
    for (auto& [b, strata] : groups) {
        auto& fiber = s.fibers[b];
        for (auto& [z, by_tail] : strata) {
            auto& classes = fiber[z];
            for (auto& [tail, members] : by_tail) {
                ChainClass c;
                c.base = base;
                c.b = b;
                c.z = z;
                c.tail = tail;
                std::sort(members.begin(), members.end(),
                          [z = z](const MaryPartition& x, const MaryPartition& y) {
                              return x.mult(z) < y.mult(z);
                          });
                c.members = std::move(members);
                c.r = c.members.size() / base;
                check_class(c, pows);
                classes.push_back(std::move(c));
            }
        }
    }
    return s;
}

bool verify_equidistribution_N(Nat n, Nat base, Nat cap)
{
    const Stratification s = stratify(n, base, cap);
    ResidueHistogram whole{base, std::vector<std::uint64_t>(base, 0)};
    bool ok = true;
    for (const auto& [b, strata] : s.fibers) {
        ResidueHistogram fiber{base, std::vector<std::uint64_t>(base, 0)};
        for (const auto& [z, classes] : strata) {
            for (const ChainClass& c : classes) {
                const ResidueHistogram h = nops_histogram(c.members, base);
                for (std::uint64_t count : h.counts)
                    if (count != c.r)
                        ok = false;
                for (std::size_t w = 0; w < h.counts.size(); ++w)
                    fiber.counts[w] += h.counts[w];
            }
        }
        if (!is_equidistributed(fiber))
            ok = false;
        for (std::size_t w = 0; w < fiber.counts.size(); ++w)
            whole.counts[w] += fiber.counts[w];
    }
    if (!is_equidistributed(whole))
        ok = false;
    return ok;
}

} // namespace mary

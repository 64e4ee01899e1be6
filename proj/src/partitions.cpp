#include "mary/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace mary {

namespace {

void require_base(Nat base)
{
    if (base < 2)
        throw std::invalid_argument("base must be at least 2");
}

std::vector<Nat> trimmed(const std::vector<Nat>& mults)
{
    std::size_t len = mults.size();
    while (len > 0 && mults[len - 1] == 0)
        --len;
    return {mults.begin(), mults.begin() + len};
}

/* powers base^0 .. base^k with base^k <= n; empty for n = 0 */
std::vector<Nat> powers_upto(Nat n, Nat base)
{
    require_base(base); /* runs in member initializers, before constructor bodies */
    std::vector<Nat> pows;
    if (n == 0)
        return pows;
    pows.push_back(1);
    while (pows.back() <= n / base)
        pows.push_back(pows.back() * base);
    return pows;
}

/* largest n the counting table is allowed to grow to */
constexpr Nat kMaxCountTable = 50'000'000;

} // namespace

Nat value(const MaryPartition& p)
{
    Nat v = 0;
    Nat pow = 1;
    for (std::size_t i = 0; i < p.mults.size(); ++i) {
        Nat term;
        if (__builtin_mul_overflow(p.mults[i], pow, &term) || __builtin_add_overflow(v, term, &v))
            throw std::overflow_error("partition value exceeds 64 bits");
        if (i + 1 < p.mults.size() && __builtin_mul_overflow(pow, p.base, &pow))
            throw std::overflow_error("partition value exceeds 64 bits");
    }
    return v;
}

Nat nops(const MaryPartition& p)
{
    Nat total = 0;
    for (Nat m : p.mults)
        if (__builtin_add_overflow(total, m, &total))
            throw std::overflow_error("part count exceeds 64 bits");
    return total;
}

bool is_simple(const MaryPartition& p, Nat n)
{
    require_base(p.base);
    if (value(p) != n)
        throw std::invalid_argument("partition does not sum to n");
    const BaseMDigits nd = to_base_m(n, p.base);
    for (std::size_t i = 1; i < p.mults.size(); ++i)
        if (p.mults[i] > nd.digit(i))
            return false;
    return true;
}

PartitionEnumerator::PartitionEnumerator(Nat n, Nat base)
    : n_(n)
    , base_(base)
    , pows_(powers_upto(n, base))
{
    mults_.assign(pows_.size(), 0);
}

bool PartitionEnumerator::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        Nat rem = n_;
        for (std::size_t j = mults_.size(); j-- > 0;) {
            mults_[j] = rem / pows_[j];
            rem %= pows_[j];
        }
        return true;
    }
    /* backtrack: drop one part at the lowest positive exponent, convert the
     * freed value (plus existing ones) back greedily below that level */
    std::size_t j = 1;
    while (j < mults_.size() && mults_[j] == 0)
        ++j;
    if (j >= mults_.size()) {
        done_ = true;
        return false;
    }
    --mults_[j];
    Nat rem = mults_[0] + pows_[j];
    for (std::size_t i = j; i-- > 0;) {
        mults_[i] = rem / pows_[i];
        rem %= pows_[i];
    }
    return true;
}

MaryPartition PartitionEnumerator::partition() const
{
    return {base_, trimmed(mults_)};
}

SimplePartitionEnumerator::SimplePartitionEnumerator(Nat n, Nat base)
    : n_(n)
    , nd_(to_base_m(n, base))
    , pows_(powers_upto(n, base))
{
    mults_.assign(pows_.size(), 0);
}

bool SimplePartitionEnumerator::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        mults_ = nd_.digits;
        return true;
    }
    std::size_t j = 1;
    while (j < mults_.size() && mults_[j] == 0)
        ++j;
    if (j >= mults_.size()) {
        done_ = true;
        return false;
    }
    --mults_[j];
    Nat ones = mults_[0] + pows_[j];
    for (std::size_t i = 1; i < j; ++i) {
        mults_[i] = nd_.digits[i];
        ones -= nd_.digits[i] * pows_[i];
    }
    mults_[0] = ones;
    return true;
}

MaryPartition SimplePartitionEnumerator::partition() const
{
    return {nd_.base, trimmed(mults_)};
}

std::vector<MaryPartition> enumerate_all(Nat n, Nat base, Nat cap)
{
    std::vector<MaryPartition> out;
    PartitionEnumerator e(n, base);
    while (e.next()) {
        if (out.size() >= cap)
            throw CapExceeded(cap);
        out.push_back(e.partition());
    }
    return out;
}

std::vector<MaryPartition> enumerate_simple(Nat n, Nat base, Nat cap)
{
    std::vector<MaryPartition> out;
    SimplePartitionEnumerator e(n, base);
    while (e.next()) {
        if (out.size() >= cap)
            throw CapExceeded(cap);
        out.push_back(e.partition());
    }
    return out;
}

PartitionCounter::PartitionCounter(Nat base)
    : base_(base)
{
    require_base(base);
    row_.assign(1, Natural(1));
}

Natural PartitionCounter::count(Nat n)
{
    if (n >= row_.size())
        extend(n);
    return row_[n];
}

void PartitionCounter::extend(Nat n)
{
    if (n > kMaxCountTable)
        throw std::length_error("counting table too large");
    Nat top = std::max<Nat>(n, std::min<Nat>(2 * (row_.size() - 1), kMaxCountTable));
    std::vector<Natural> row(top + 1, Natural(1));
    Nat pow = 1;
    while (pow <= top / base_) {
        pow *= base_;
        for (Nat x = pow; x <= top; ++x)
            row[x] += row[x - pow];
    }
    row_ = std::move(row);
}

Natural count_bm(Nat n, Nat base)
{
    return PartitionCounter(base).count(n);
}

PartitionTriple count_triple(Nat n, Nat base)
{
    PartitionTriple t;
    t.all = count_bm(n, base);
    t.simple = Natural(digit_product(n, base, 1));
    t.nonsimple = t.all - t.simple;
    return t;
}

} // namespace mary

#include "mary/natural.hpp"

#include <stdexcept>

namespace mary {

Natural::Natural(std::uint64_t v)
{
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
        v /= kLimbBase;
    }
}

Natural& Natural::operator+=(const Natural& rhs)
{
    if (limbs_.size() < rhs.limbs_.size())
        limbs_.resize(rhs.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (carry == 0 && i >= rhs.limbs_.size())
            break;
        std::uint64_t s = static_cast<std::uint64_t>(limbs_[i]) + carry;
        if (i < rhs.limbs_.size())
            s += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(s % kLimbBase);
        carry = static_cast<std::uint32_t>(s / kLimbBase);
    }
    if (carry != 0)
        limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs)
{
    if (*this < rhs)
        throw std::underflow_error("Natural subtraction would go negative");
    std::uint32_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (borrow == 0 && i >= rhs.limbs_.size())
            break;
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size())
            d -= rhs.limbs_[i];
        if (d < 0) {
            d += kLimbBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
    return *this;
}

std::strong_ordering Natural::operator<=>(const Natural& rhs) const
{
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != rhs.limbs_[i])
            return limbs_[i] <=> rhs.limbs_[i];
    return std::strong_ordering::equal;
}

std::uint64_t Natural::mod(std::uint64_t d) const
{
    if (d == 0 || d > kLimbBase)
        throw std::invalid_argument("Natural::mod divisor out of range");
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        r = (r * kLimbBase + limbs_[i]) % d;
    return r;
}

Natural Natural::div(std::uint64_t d) const
{
    if (d == 0 || d > 0xFFFFFFFFull)
        throw std::invalid_argument("Natural::div divisor out of range");
    Natural q;
    q.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = rem * kLimbBase + limbs_[i];
        q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!q.limbs_.empty() && q.limbs_.back() == 0)
        q.limbs_.pop_back();
    return q;
}

bool Natural::fits_u64() const
{
    if (limbs_.size() > 3)
        return false;
    unsigned __int128 v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * kLimbBase + limbs_[i];
    return v <= static_cast<unsigned __int128>(~0ull);
}

std::uint64_t Natural::to_u64() const
{
    if (!fits_u64())
        throw std::overflow_error("Natural does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * kLimbBase + limbs_[i];
    return v;
}

std::string Natural::str() const
{
    if (limbs_.empty())
        return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0');
        s += part;
    }
    return s;
}

} // namespace mary

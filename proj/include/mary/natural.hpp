#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mary {

/* Unsigned arbitrary-precision integer over base-10^9 limbs, least
 * significant limb first. Provides exactly what exact partition counting
 * needs: addition, subtraction of a smaller value, small divisors and
 * residues, decimal output.
 */
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);

    Natural& operator+=(const Natural& rhs);
    friend Natural operator+(Natural lhs, const Natural& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    /* requires *this >= rhs */
    Natural& operator-=(const Natural& rhs);
    friend Natural operator-(Natural lhs, const Natural& rhs)
    {
        lhs -= rhs;
        return lhs;
    }

    std::strong_ordering operator<=>(const Natural& rhs) const;
    bool operator==(const Natural& rhs) const = default;

    /* remainder modulo d, 1 <= d <= 10^9 */
    std::uint64_t mod(std::uint64_t d) const;

    /* flooring division by a small divisor, 1 <= d < 2^32 */
    Natural div(std::uint64_t d) const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const;
    std::uint64_t to_u64() const; /* pre: fits_u64() */

    std::string str() const;

private:
    static constexpr std::uint32_t kLimbBase = 1'000'000'000;
    std::vector<std::uint32_t> limbs_; /* normalized: no trailing zero limbs */
};

} // namespace mary

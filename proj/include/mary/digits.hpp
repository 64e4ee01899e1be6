#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mary {

using Nat = std::uint64_t;

/* Base-m digit vector of a natural number, least significant digit first.
 * Zero keeps an empty vector; any index past the stored length reads as a
 * zero digit, so comparisons never need explicit padding.
 */
struct BaseMDigits {
    Nat base = 2;
    std::vector<Nat> digits;

    Nat digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
    std::size_t length() const { return digits.size(); } /* k + 1; 0 for n = 0 */

    bool operator==(const BaseMDigits&) const = default;
};

BaseMDigits to_base_m(Nat n, Nat base);
Nat from_digits(const BaseMDigits& d);

/* digital dominance: every base-m digit of a is <= the matching digit of b */
bool dominates(Nat a, Nat b, Nat base);

/* ascending list of all a dominated by n */
std::vector<Nat> dominated_list(Nat n, Nat base);

/* product of (digit_i + 1) over digit positions i >= from */
Nat digit_product(Nat n, Nat base, std::size_t from);

} // namespace mary

#include "mary/digits.hpp"

#include <stdexcept>

namespace mary {

namespace {

void require_base(Nat base)
{
    if (base < 2)
        throw std::invalid_argument("base must be at least 2");
}

} // namespace

BaseMDigits to_base_m(Nat n, Nat base)
{
    require_base(base);
    BaseMDigits d{base, {}};
    while (n != 0) {
        d.digits.push_back(n % base);
        n /= base;
    }
    return d;
}

Nat from_digits(const BaseMDigits& d)
{
    require_base(d.base);
    Nat v = 0;
    for (std::size_t i = d.digits.size(); i-- > 0;) {
        if (__builtin_mul_overflow(v, d.base, &v) || __builtin_add_overflow(v, d.digits[i], &v))
            throw std::overflow_error("from_digits value exceeds 64 bits");
    }
    return v;
}

bool dominates(Nat a, Nat b, Nat base)
{
    require_base(base);
    while (a != 0 || b != 0) {
        if (a % base > b % base)
            return false;
        a /= base;
        b /= base;
    }
    return true;
}

std::vector<Nat> dominated_list(Nat n, Nat base)
{
    require_base(base);
    const BaseMDigits nd = to_base_m(n, base);
    std::vector<Nat> out;
    out.push_back(0);
    if (nd.length() == 0)
        return out;
    /* mixed-radix odometer over digit choices; carries only ever increase
     * the value, so the output is ascending */
    std::vector<Nat> cur(nd.length(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == nd.digits[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size())
            break;
        ++cur[i];
        Nat v = 0;
        for (std::size_t j = cur.size(); j-- > 0;)
            v = v * base + cur[j];
        out.push_back(v);
    }
    return out;
}

Nat digit_product(Nat n, Nat base, std::size_t from)
{
    require_base(base);
    Nat prod = 1;
    std::size_t i = 0;
    while (n != 0) {
        if (i >= from) {
            if (__builtin_mul_overflow(prod, n % base + 1, &prod))
                throw std::overflow_error("digit_product exceeds 64 bits");
        }
        n /= base;
        ++i;
    }
    return prod;
}

} // namespace mary

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "mary/partitions.hpp"

using mary::BaseMDigits;
using mary::MaryPartition;
using mary::Nat;
using mary::Natural;

namespace {

MaryPartition part(Nat base, std::vector<Nat> mults)
{
    while (!mults.empty() && mults.back() == 0)
        mults.pop_back();
    return {base, std::move(mults)};
}

} // namespace

TEST_CASE("value and nops")
{
    CHECK(mary::value(part(3, {6, 0, 6, 0})) == 60);
    CHECK(mary::value(part(5, {})) == 0);
    CHECK(mary::value(part(2, {2, 1, 1, 0})) == 8); /* 4+2+1+1 */

    CHECK(mary::nops(part(2, {2, 1, 1, 0})) == 4);
    CHECK(mary::nops(part(2, {8, 0, 0, 0})) == 8);
    CHECK(mary::nops(part(3, {0, 5, 5, 0})) == 10);
    CHECK(mary::nops(part(7, {})) == 0);
}

TEST_CASE("enumerate_all lists the ten 2-ary partitions of 8 in canonical order")
{
    const std::vector<MaryPartition> expected = {
        part(2, {0, 0, 0, 1}), part(2, {0, 0, 2, 0}), part(2, {0, 2, 1, 0}),
        part(2, {2, 1, 1, 0}), part(2, {4, 0, 1, 0}), part(2, {0, 4, 0, 0}),
        part(2, {2, 3, 0, 0}), part(2, {4, 2, 0, 0}), part(2, {6, 1, 0, 0}),
        part(2, {8, 0, 0, 0}),
    };
    CHECK(mary::enumerate_all(8, 2) == expected);
}

TEST_CASE("enumerate_all counts and edge cases")
{
    CHECK(mary::enumerate_all(60, 3).size() == 117);
    CHECK(mary::enumerate_all(0, 2) == std::vector<MaryPartition>{part(2, {})});
    for (Nat m : {2, 5, 9})
        for (Nat n = 1; n < m; ++n)
            CHECK(mary::enumerate_all(n, m) == std::vector<MaryPartition>{part(m, {n})});
}

TEST_CASE("every enumerated partition sums to n, no duplicates")
{
    for (Nat m : {2, 3, 4})
        for (Nat n : {0, 1, 7, 30, 61, 100}) {
            const auto all = mary::enumerate_all(n, m);
            std::set<MaryPartition> seen;
            for (const MaryPartition& p : all) {
                CHECK(mary::value(p) == n);
                CHECK(p.mults.empty() ? true : p.mults.back() != 0); /* canonical */
                seen.insert(p);
            }
            CHECK(seen.size() == all.size());
        }
}

TEST_CASE("enumerate_simple matches the listed simple partitions of 60 base 3")
{
    const std::vector<MaryPartition> expected = {
        part(3, {0, 2, 0, 2}),  part(3, {3, 1, 0, 2}),  part(3, {6, 0, 0, 2}),
        part(3, {27, 2, 0, 1}), part(3, {30, 1, 0, 1}), part(3, {33, 0, 0, 1}),
        part(3, {54, 2, 0, 0}), part(3, {57, 1, 0, 0}), part(3, {60, 0, 0, 0}),
    };
    CHECK(mary::enumerate_simple(60, 3) == expected);
    CHECK(mary::enumerate_simple(8, 2)
          == std::vector<MaryPartition>{part(2, {0, 0, 0, 1}), part(2, {8, 0, 0, 0})});
    CHECK(mary::enumerate_simple(0, 3) == std::vector<MaryPartition>{part(3, {})});
}

TEST_CASE("is_simple")
{
    CHECK(mary::is_simple(part(3, {0, 2, 0, 2}), 60));
    CHECK_FALSE(mary::is_simple(part(3, {6, 0, 6, 0}), 60));
    CHECK(mary::is_simple(part(3, {60, 0, 0, 0}), 60));
    CHECK_THROWS_AS(mary::is_simple(part(3, {1, 1}), 60), std::invalid_argument);
}

TEST_CASE("enumerate_simple agrees with filtering and with the digit product")
{
    for (Nat m : {2, 3, 4, 5})
        for (Nat n = 0; n <= 100; ++n) {
            const auto simple = mary::enumerate_simple(n, m);
            CHECK(simple.size() == mary::digit_product(n, m, 1));
            std::vector<MaryPartition> filtered;
            for (const MaryPartition& p : mary::enumerate_all(n, m))
                if (mary::is_simple(p, n))
                    filtered.push_back(p);
            if (simple != filtered)
                FAIL("simple enumeration disagrees with filtering at n=", n, " m=", m);
        }
}

TEST_CASE("count_bm fixtures")
{
    CHECK(mary::count_bm(8, 2) == Natural(10));
    CHECK(mary::count_bm(60, 3) == Natural(117));
    for (Nat m : {2, 4, 7}) {
        CHECK(mary::count_bm(0, m) == Natural(1));
        for (Nat n = 1; n < m; ++n)
            CHECK(mary::count_bm(n, m) == Natural(1));
    }
}

TEST_CASE("count_bm equals the enumeration count")
{
    for (Nat m : {2, 3, 4, 5}) {
        mary::PartitionCounter counter(m);
        for (Nat n = 0; n <= 120; ++n) {
            if (counter.count(n) > Natural(200000))
                continue;
            mary::PartitionEnumerator e(n, m);
            Nat total = 0;
            while (e.next())
                ++total;
            if (counter.count(n) != Natural(total))
                FAIL("count mismatch at n=", n, " m=", m);
        }
    }
}

TEST_CASE("count is stable between multiples of m")
{
    for (Nat m = 2; m <= 7; ++m) {
        mary::PartitionCounter counter(m);
        for (Nat mn = 0; mn <= 3000; mn += m)
            for (Nat r = 1; r < m; ++r)
                if (counter.count(mn + r) != counter.count(mn))
                    FAIL("b_m(mn+r) != b_m(mn) at mn=", mn, " r=", r, " m=", m);
    }
}

TEST_CASE("count_triple")
{
    const auto t60 = mary::count_triple(60, 3);
    CHECK(t60.all == Natural(117));
    CHECK(t60.simple == Natural(9));
    CHECK(t60.nonsimple == Natural(108));

    const auto t8 = mary::count_triple(8, 2);
    CHECK(t8.all == Natural(10));
    CHECK(t8.simple == Natural(2));
    CHECK(t8.nonsimple == Natural(8));

    const auto t0 = mary::count_triple(0, 6);
    CHECK(t0.all == Natural(1));
    CHECK(t0.simple == Natural(1));
    CHECK(t0.nonsimple == Natural(0));

    for (Nat m : {2, 3, 5})
        for (Nat n = 0; n <= 400; ++n) {
            const auto t = mary::count_triple(n, m);
            CHECK(t.simple + t.nonsimple == t.all);
        }
}

TEST_CASE("simple partitions biject onto dominated numbers congruent to n")
{
    for (Nat m : {2, 3, 5})
        for (Nat n = 0; n <= 150; ++n) {
            const BaseMDigits nd = mary::to_base_m(n, m);
            std::set<Nat> image;
            for (const MaryPartition& p : mary::enumerate_simple(n, m)) {
                /* [l_0, b_1, ..., b_k] <-> (n_0, b_1, ..., b_k)_m */
                Nat a = nd.digit(0);
                Nat pow = 1;
                for (std::size_t i = 1; i < nd.length(); ++i) {
                    pow *= m;
                    a += p.mult(i) * pow;
                }
                image.insert(a);
            }
            std::set<Nat> target;
            for (Nat a : mary::dominated_list(n, m))
                if (a % m == n % m)
                    target.insert(a);
            if (image != target)
                FAIL("bijection image mismatch at n=", n, " m=", m);
            CHECK(image.size() == mary::enumerate_simple(n, m).size()); /* injective */
        }
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(mary::enumerate_all(200, 2, 10), mary::CapExceeded);
    CHECK_THROWS_AS(mary::enumerate_simple(60, 3, 5), mary::CapExceeded);
    CHECK(mary::enumerate_all(8, 2, 10).size() == 10); /* exactly at the cap is fine */
    try {
        mary::enumerate_all(200, 2, 10);
        FAIL("cap did not trigger");
    } catch (const mary::CapExceeded& e) {
        CHECK(e.cap == 10);
    }
}

TEST_CASE("counting rejects bad bases")
{
    CHECK_THROWS_AS(mary::count_bm(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(mary::enumerate_all(5, 0), std::invalid_argument);
}

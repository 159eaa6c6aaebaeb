#include <doctest.h>

#include <set>

#include "varcalc/multi_index.hpp"

using namespace varcalc;

namespace {

// Stars-and-bars count of multi-indices of order exactly s over n letters.
long choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

long multi_count(int n, int r) {
    long total = 0;
    for (int s = 0; s <= r; ++s) total += choose(s + n - 1, n - 1);
    return total;
}

}  // namespace

TEST_CASE("mi_concat increments one multiplicity") {
    const Bundle b(2, 1);
    CHECK(mi_concat(MultiIndex(), 1, b) == MultiIndex::of({1}));
    CHECK(mi_concat(MultiIndex::of({1}), 1, b) == MultiIndex::of({1, 1}));

    // symmetry: (x y) + y has the same count map regardless of history
    MultiIndex xy = MultiIndex::of({1, 2});
    CHECK(mi_concat(xy, 2, b) == MultiIndex::of({2, 1, 2}));
    CHECK(mi_concat(xy, 2, b).count(1) == 1);
    CHECK(mi_concat(xy, 2, b).count(2) == 2);

    CHECK_THROWS_AS(mi_concat(xy, 3, b), std::out_of_range);
    CHECK_THROWS_AS(mi_concat(xy, 0, b), std::out_of_range);
}

TEST_CASE("mi_enumerate lists each multi-index once in graded-lex order") {
    SUBCASE("single base variable") {
        auto out = mi_enumerate(1, 2);
        REQUIRE(out.size() == 3);
        CHECK(out[0] == MultiIndex());
        CHECK(out[1] == MultiIndex::of({1}));
        CHECK(out[2] == MultiIndex::of({1, 1}));
    }

    SUBCASE("two base variables, order two") {
        auto out = mi_enumerate(2, 2);
        CHECK(static_cast<long>(out.size()) == multi_count(2, 2));
        REQUIRE(out.size() == 6);
        CHECK(out[1] == MultiIndex::of({1}));
        CHECK(out[2] == MultiIndex::of({2}));
        CHECK(out[3] == MultiIndex::of({1, 1}));
        CHECK(out[4] == MultiIndex::of({1, 2}));
        CHECK(out[5] == MultiIndex::of({2, 2}));
    }

    SUBCASE("order zero") {
        auto out = mi_enumerate(2, 0);
        REQUIRE(out.size() == 1);
        CHECK(out[0].empty());
    }

    SUBCASE("no duplicates, deterministic, sorted") {
        for (int n = 1; n <= 3; ++n) {
            auto out = mi_enumerate(n, 3);
            CHECK(static_cast<long>(out.size()) == multi_count(n, 3));
            std::set<MultiIndex> distinct(out.begin(), out.end());
            CHECK(distinct.size() == out.size());
            CHECK(out == mi_enumerate(n, 3));
            for (std::size_t k = 1; k < out.size(); ++k) CHECK(out[k - 1] < out[k]);
        }
    }
}

TEST_CASE("multi-index order and counts") {
    MultiIndex mi = MultiIndex::of({2, 1, 2});
    CHECK(mi.order() == 3);
    CHECK(mi.count(1) == 1);
    CHECK(mi.count(2) == 2);
    CHECK(mi.count(3) == 0);
    CHECK(mi.letters() == std::vector<int>{1, 2, 2});
    CHECK(mi.plus(3).order() == 4);
}

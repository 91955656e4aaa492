#include <algorithm>
#include <vector>

#include <doctest.h>

#include "latcut/generators.hpp"
#include "latcut/lattice.hpp"
#include "latcut/levels.hpp"

using namespace latcut;

namespace {

// Closure oracle: connected components of the ~ graph by Floyd-Warshall.
std::vector<std::vector<int>> brute_level_classes(const FinitePoset& p) {
    int n = p.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (tilde_related(p, x, y)) r[x][y] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    std::vector<std::vector<int>> classes;
    std::vector<bool> done(n, false);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        std::vector<int> cls;
        for (int w = 0; w < n; ++w)
            if (r[v][w]) {
                cls.push_back(w);
                done[w] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace

TEST_CASE("tilde relation") {
    FinitePoset b2(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(tilde_related(b2, 1, 2));
    CHECK(tilde_related(b2, 1, 1));
    auto n5 = pentagon();
    CHECK(!tilde_related(n5, 1, 3));
    auto b3 = boolean_lattice(3);
    CHECK(tilde_related(b3, 3, 5));
}

TEST_CASE("level classes of fixtures") {
    using Classes = std::vector<std::vector<int>>;
    CHECK(level_classes(pentagon()).classes ==
          Classes{{0}, {1, 2}, {3}, {4}});
    CHECK(level_classes(boolean_lattice(3)).classes ==
          Classes{{0}, {1, 2, 4}, {3, 5, 6}, {7}});
    CHECK(level_classes(chain_poset(3)).classes == Classes{{0}, {1}, {2}});
}

TEST_CASE("level classes match the brute-force closure on small posets") {
    std::vector<FinitePoset> corpus{pentagon(), diamond(), boolean_lattice(3),
                                    divisor_lattice(12), antichain_poset(4)};
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        corpus.push_back(random_poset(2 + seed % 9, 0.3, seed));
    for (const auto& p : corpus) {
        auto part = level_classes(p);
        CHECK(part.classes == brute_level_classes(p));
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                if (tilde_related(p, x, y))
                    CHECK(part.class_of[x] == part.class_of[y]);
    }
}

TEST_CASE("levels by height") {
    auto b3 = boolean_lattice(3);
    auto lv = levels_by_height(b3);
    REQUIRE(lv.size() == 4);
    CHECK(lv[0] == std::vector<int>{0});
    CHECK(lv[1] == std::vector<int>{1, 2, 4});
    auto d12 = divisor_lattice(12);
    CHECK(levels_by_height(d12)[2] == std::vector<int>{3, 4});
    CHECK_THROWS_AS(levels_by_height(antichain_poset(2)), NoLeastElementError);
    CHECK_THROWS_AS(levels_by_height(pentagon()), NotGradedError);
}

TEST_CASE("same level via height") {
    auto d12 = divisor_lattice(12);  // ids 0:1 1:2 2:3 3:4 4:6 5:12
    CHECK(same_level_via_height(d12, 3, 4));
    CHECK(!same_level_via_height(d12, 1, 3));
    CHECK(same_level_via_height(d12, 2, 2));
    CHECK_THROWS_AS(same_level_via_height(pentagon(), 1, 3),
                    NotSemimodularError);
    CHECK_THROWS_AS(same_level_via_height(antichain_poset(2), 0, 1),
                    NotLatticeError);
}

TEST_CASE("common lower bound height check") {
    auto b3 = boolean_lattice(3);
    CHECK(common_lower_bound_height_check(b3, 3, 5, 0));
    CHECK(!common_lower_bound_height_check(b3, 1, 3, 0));
    CHECK(common_lower_bound_height_check(b3, 6, 6, 6));
    CHECK_THROWS_AS(common_lower_bound_height_check(b3, 1, 2, 7),
                    NotComparableError);
}

TEST_CASE("height and closure notions agree on semimodular lattices") {
    std::vector<FinitePoset> corpus{boolean_lattice(3), diamond(),
                                    divisor_lattice(60), partition_lattice(4)};
    for (std::uint64_t seed = 0; seed < 15; ++seed)
        corpus.push_back(
            downset_lattice(random_poset(1 + seed % 5, 0.5, seed)));
    for (const auto& p : corpus) {
        auto part = level_classes(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                CHECK(same_level_via_height(p, x, y) ==
                      (part.class_of[x] == part.class_of[y]));
        // classes coincide with the non-empty height levels
        auto by_height = levels_by_height(p);
        CHECK(by_height.size() == part.classes.size());
        auto sorted_classes = part.classes;
        std::sort(sorted_classes.begin(), sorted_classes.end());
        std::sort(by_height.begin(), by_height.end());
        CHECK(sorted_classes == by_height);
        // each class is an antichain
        for (const auto& cls : part.classes) CHECK(is_antichain(p, cls));
    }
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cellmap/formats.hpp"
#include "cellmap/perm.hpp"
#include "test_util.hpp"

using namespace cellmap;
using cellmap::test::contains;
using cellmap::test::message_of;

namespace {

Permutation random_permutation(const LabelSet& set, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(set.size()));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(set, std::move(img));
}

}  // namespace

TEST_CASE("compose applies right to left and reproduces the canonical face") {
    LabelSet set = LabelSet::unicellular(2);
    Permutation alpha = parse_cycles("(1,3)(2,4)(L,R)", set);
    Permutation sigma = parse_cycles("(L,3,2,1,4)(R)", set);
    CHECK(format_cycles(compose(alpha, sigma)) == "(L,1,2,3,4,R)");

    Permutation id = Permutation::identity(set);
    CHECK(compose(alpha, id) == alpha);
    CHECK(compose(alpha, alpha.inverse()) == id);
}

TEST_CASE("compose rejects mismatched label sets") {
    Permutation p = Permutation::identity(LabelSet::unicellular(2));
    Permutation q = Permutation::identity(LabelSet::unicellular(3));
    CHECK(contains(message_of<ValidationError>([&] { compose(p, q); }),
                   "different label sets"));
}

TEST_CASE("cycle decomposition is canonical") {
    LabelSet set = LabelSet::unicellular(2);
    Permutation sigma = parse_cycles("(L,3,2,1,4)(R)", set);
    auto cycles = sigma.cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<Label>{L, Label::plain(3), Label::plain(2),
                                          Label::plain(1), Label::plain(4)});
    CHECK(cycles[1] == std::vector<Label>{R});

    Permutation id2 = Permutation::identity(LabelSet::plain_range(2));
    CHECK(format_cycles(id2) == "(1)(2)");

    LabelSet four = LabelSet::plain_range(4);
    CHECK(format_cycles(parse_cycles("(3,4)(1,2)", four)) == "(1,2)(3,4)");
}

TEST_CASE("inverse") {
    LabelSet three = LabelSet::plain_range(3);
    CHECK(format_cycles(parse_cycles("(1,2,3)", three).inverse()) == "(1,3,2)");
    Permutation swap = parse_cycles("(1,2)", LabelSet::plain_range(2));
    CHECK(swap.inverse() == swap);
    Permutation id = Permutation::identity(three);
    CHECK(id.inverse() == id);
}

TEST_CASE("fixed-point-free involution detection") {
    LabelSet set = LabelSet::unicellular(2);
    CHECK(parse_cycles("(1,3)(2,4)(L,R)", set).is_fpf_involution());
    CHECK_FALSE(Permutation::identity(LabelSet::plain_range(2)).is_fpf_involution());
    CHECK_FALSE(parse_cycles("(1,2,3)", LabelSet::plain_range(3)).is_fpf_involution());
}

TEST_CASE("random permutation properties") {
    std::mt19937 rng(20140815);
    for (int iter = 0; iter < 200; ++iter) {
        int size = 1 + static_cast<int>(rng() % 20);
        LabelSet set = LabelSet::plain_range(size);
        Permutation p = random_permutation(set, rng);
        Permutation q = random_permutation(set, rng);
        Permutation r = random_permutation(set, rng);

        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, p.inverse()) == Permutation::identity(set));
        CHECK(p.inverse().inverse() == p);

        // cycles partition the label set
        auto cycles = p.cycle_indices();
        std::vector<char> seen(static_cast<size_t>(size), 0);
        size_t total = 0;
        for (const auto& cycle : cycles) {
            total += cycle.size();
            for (int i : cycle) {
                CHECK_FALSE(seen[static_cast<size_t>(i)]);
                seen[static_cast<size_t>(i)] = 1;
            }
            // rotated to the ambient-minimal element
            CHECK(*std::min_element(cycle.begin(), cycle.end()) == cycle.front());
        }
        CHECK(total == static_cast<size_t>(size));
    }
}

#include "crtkit/abelian.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace crtkit;

namespace {

PresentedGroup z2_4() { return PresentedGroup({2, 2, 2, 2}); }

// block swap (1 2)(3 4), the involution used throughout the fixtures
IntMatrix swap_blocks_4() {
    return IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

std::vector<Int> orders(std::initializer_list<long long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("canonicalize") {
    CHECK(canonicalize(orders({4, 2, 2})).orders() == orders({2, 2, 4}));
    CHECK(canonicalize(orders({1, 1})).orders() == orders({}));
    // Z6 + Z4 = Z2 + Z12 by splitting into p-parts
    CHECK(canonicalize(orders({6, 4})).orders() == orders({2, 12}));
    CHECK(canonicalize(orders({0, 2, 0})).orders() == orders({2, 0, 0}));
    CHECK_THROWS_AS(canonicalize({Int(-2)}), std::invalid_argument);

    // idempotent on a spread of presentations
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(0, 4), val(0, 12);
    for (int i = 0; i < 100; ++i) {
        std::vector<Int> o;
        for (int k = len(rng); k > 0; --k)
            o.push_back(val(rng));
        auto g = canonicalize(o);
        CHECK(canonicalize(g.orders()) == g);
    }
}

TEST_CASE("group basics") {
    PresentedGroup h({4, 2, 2});
    CHECK(h.orders() == orders({2, 2, 4}));
    CHECK(h.order() == Int(16));
    CHECK(group_name(h) == "Z2xZ2xZ4");
    CHECK(group_name(PresentedGroup{}) == "0");
    CHECK(group_name(PresentedGroup({0})) == "Z");
    CHECK(!PresentedGroup({2, 0}).is_finite());
    CHECK(PresentedGroup({2, 0}).order() == std::nullopt);
    CHECK(PresentedGroup({2, 0}).reduce({Int(5), Int(-3)}) == orders({1, -3}));
}

TEST_CASE("hom construction and well-definedness") {
    PresentedGroup z2_2({2, 2});
    GroupHom id = GroupHom::identity(z2_2);
    CHECK(id.matrix() == IntMatrix::identity(2));

    // torsion cannot map onto a free generator
    CHECK_THROWS_WITH_AS(GroupHom(PresentedGroup({2}), PresentedGroup({0}),
                                  IntMatrix::from_rows({{1}})),
                         doctest::Contains("generator 0"), std::invalid_argument);

    // Z -> Z2 reduces mod 2
    GroupHom f(PresentedGroup({0}), PresentedGroup({2}), IntMatrix::from_rows({{3}}));
    CHECK(f.matrix() == IntMatrix::from_rows({{1}}));

    // equality is congruence modulo codomain relations
    GroupHom neg(z2_2, z2_2, IntMatrix::from_rows({{-1, 0}, {0, -1}}));
    CHECK(neg == id);

    CHECK_THROWS_AS(GroupHom(z2_2, z2_2, IntMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("compose") {
    PresentedGroup z8({8});
    GroupHom f(z8, z8, IntMatrix::from_rows({{3}}));
    CHECK(compose(GroupHom::identity(z8), f) == f);
    CHECK(compose(f, GroupHom::identity(z8)) == f);
    CHECK_THROWS_AS(compose(f, GroupHom::zero(z8, PresentedGroup({2}))), std::invalid_argument);

    // pi- o i+ = 0 for (Z^2, swap): (1 - alpha) kills the diagonal
    PresentedGroup z2(std::vector<Int>{0, 0});
    IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}});
    GroupHom alpha(z2, z2, swap);
    GroupHom one_minus = hom_diff(GroupHom::identity(z2), alpha);
    auto plus = subgroup_presentation(kernel(one_minus)); // diagonal
    auto minus = subgroup_presentation(kernel(hom_sum(GroupHom::identity(z2), alpha)));
    GroupHom pi_minus = corestrict(one_minus, minus);
    CHECK(compose(pi_minus, plus.inclusion).is_zero());
}

TEST_CASE("kernel") {
    PresentedGroup z2_2({2, 2});
    CHECK(kernel(GroupHom::identity(z2_2)).generators.cols() == 0);

    PresentedGroup z({0});
    GroupHom times2(z, z, IntMatrix::from_rows({{2}}));
    CHECK(kernel(times2).generators.cols() == 0);

    // fixed subgroup of the degree-4 block swap is Z2 x Z2
    PresentedGroup g = z2_4();
    GroupHom alpha(g, g, swap_blocks_4());
    GroupHom one_minus = hom_diff(GroupHom::identity(g), alpha);
    Subgroup fixed = kernel(one_minus);
    CHECK(subgroup_as_group(fixed).orders() == orders({2, 2}));
}

TEST_CASE("image") {
    PresentedGroup z2_2({2, 2});
    CHECK(image(GroupHom::zero(z2_2, z2_2)).generators.cols() == 0);

    PresentedGroup g = z2_4();
    GroupHom alpha(g, g, swap_blocks_4());
    Subgroup im_plus = image(hom_sum(GroupHom::identity(g), alpha));
    Subgroup ker_minus = kernel(hom_diff(GroupHom::identity(g), alpha));
    CHECK(subgroup_leq(im_plus, ker_minus));
    CHECK(subgroup_leq(ker_minus, im_plus));

    GroupHom two_into_z4(PresentedGroup({0}), PresentedGroup({4}), IntMatrix::from_rows({{2}}));
    CHECK(subgroup_as_group(image(two_into_z4)).orders() == orders({2}));
}

TEST_CASE("subgroup_leq") {
    PresentedGroup z2(std::vector<Int>{0, 0});
    Subgroup s{z2, IntMatrix::from_rows({{2}, {0}})};
    Subgroup t{z2, IntMatrix::from_rows({{1}, {0}})};
    CHECK(subgroup_leq(s, s));
    CHECK(subgroup_leq(Subgroup{z2, IntMatrix(2, 0)}, s));
    CHECK(subgroup_leq(s, t));
    CHECK(!subgroup_leq(t, s));
    CHECK_THROWS_AS(subgroup_leq(s, Subgroup{PresentedGroup({2}), IntMatrix(1, 0)}),
                    std::invalid_argument);
}

TEST_CASE("exact_at") {
    PresentedGroup g = z2_4();
    GroupHom alpha(g, g, swap_blocks_4());
    auto plus = subgroup_presentation(kernel(hom_diff(GroupHom::identity(g), alpha)));
    auto minus = subgroup_presentation(kernel(hom_sum(GroupHom::identity(g), alpha)));
    GroupHom pi_minus = corestrict(hom_diff(GroupHom::identity(g), alpha), minus);
    // 0 -> G+ -> G -> G- -> 0, exact at G
    CHECK(exact_at(plus.inclusion, pi_minus) == Exactness::Exact);

    PresentedGroup z({0});
    CHECK(exact_at(GroupHom::zero(z, z), GroupHom::identity(z)) == Exactness::Exact);
    CHECK(exact_at(GroupHom::zero(z, z), GroupHom::zero(z, z)) == Exactness::ComplexNotExact);
    CHECK(exact_at(GroupHom::identity(z), GroupHom::identity(z)) == Exactness::NotAComplex);
    CHECK_THROWS_AS(exact_at(GroupHom::identity(z), GroupHom::identity(PresentedGroup({2}))),
                    std::invalid_argument);
}

TEST_CASE("subgroup_as_group") {
    PresentedGroup h({4, 2, 2});
    CHECK(subgroup_as_group(full_subgroup(h)) == h);

    PresentedGroup z2(std::vector<Int>{0, 0});
    Subgroup diagonal{z2, IntMatrix::from_rows({{1}, {1}})};
    CHECK(subgroup_as_group(diagonal).orders() == orders({0}));

    PresentedGroup g = z2_4();
    GroupHom alpha(g, g, swap_blocks_4());
    Subgroup fixed = kernel(hom_diff(GroupHom::identity(g), alpha));
    CHECK(subgroup_as_group(fixed).orders() == orders({2, 2}));

    // inclusion really is an injective hom picking out the subgroup
    auto pres = subgroup_presentation(fixed);
    CHECK(kernel(pres.inclusion).generators.cols() == 0);
    CHECK(subgroup_leq(image(pres.inclusion), fixed));
    CHECK(subgroup_leq(fixed, image(pres.inclusion)));
}

TEST_CASE("enumerate_elements") {
    CHECK(enumerate_elements(PresentedGroup{}).size() == 1);
    CHECK(enumerate_elements(PresentedGroup{})[0].empty());
    CHECK(enumerate_elements(PresentedGroup({2, 2})).size() == 4);
    CHECK(enumerate_elements(PresentedGroup({4, 2, 2})).size() == 16);
    CHECK_THROWS_AS(enumerate_elements(PresentedGroup({0})), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_elements(PresentedGroup({2}), 1), std::invalid_argument);

    auto e = enumerate_elements(PresentedGroup({2, 4}));
    REQUIRE(e.size() == 8);
    CHECK(e.front() == std::vector<Int>{0, 0});
    CHECK(e[1] == std::vector<Int>{0, 1});
    CHECK(e.back() == std::vector<Int>{1, 3});
}

TEST_CASE("isomorphisms and inverses") {
    PresentedGroup h({4, 2, 2});
    // multiplication by 3 is invertible on Z4 x Z2 x Z2
    GroupHom f(h, h, IntMatrix::diagonal({Int(3), Int(1), Int(1)}));
    CHECK(is_isomorphism(f));
    GroupHom inv = inverse_hom(f);
    CHECK(compose(inv, f) == GroupHom::identity(h));
    CHECK(compose(f, inv) == GroupHom::identity(h));

    GroupHom two(h, h, IntMatrix::diagonal({Int(2), Int(1), Int(1)}));
    CHECK(!is_isomorphism(two));
    CHECK_THROWS_AS(inverse_hom(two), std::invalid_argument);
}

TEST_CASE("lattice kernels and images agree with enumeration") {
    std::mt19937_64 rng(20260810);
    int trials = 0;
    while (trials < 60) {
        PresentedGroup dom = oracle::random_finite_group(rng, 64);
        PresentedGroup cod = oracle::random_finite_group(rng, 64);
        GroupHom f = oracle::random_hom(rng, dom, cod);
        ++trials;

        CHECK(oracle::subgroup_elements(kernel(f)) == oracle::brute_kernel(f));
        CHECK(oracle::subgroup_elements(image(f)) == oracle::brute_image(f));

        // first isomorphism theorem, checked exactly
        auto im_group = subgroup_as_group(image(f));
        auto ker_group = subgroup_as_group(kernel(f));
        CHECK(*im_group.order() * *ker_group.order() == *dom.order());

        // presentation of the image matches its element-order statistics
        CHECK(oracle::order_statistics(oracle::brute_image(f), cod) ==
              oracle::order_statistics(im_group));
    }
}

TEST_CASE("exactness verdicts agree with enumeration") {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 40; ++t) {
        PresentedGroup a = oracle::random_finite_group(rng, 16);
        PresentedGroup b = oracle::random_finite_group(rng, 16);
        PresentedGroup c = oracle::random_finite_group(rng, 16);
        GroupHom f = oracle::random_hom(rng, a, b);
        GroupHom g = oracle::random_hom(rng, b, c);

        auto im = oracle::brute_image(f);
        auto ker = oracle::brute_kernel(g);
        Exactness expected;
        if (!std::includes(ker.begin(), ker.end(), im.begin(), im.end()))
            expected = Exactness::NotAComplex;
        else if (im == ker)
            expected = Exactness::Exact;
        else
            expected = Exactness::ComplexNotExact;
        CHECK(exact_at(f, g) == expected);
    }
}

TEST_CASE("groups_isomorphic is an equivalence relation on random presentations") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 4), val(0, 10);
    std::vector<PresentedGroup> sample;
    for (int i = 0; i < 30; ++i) {
        std::vector<Int> o;
        for (int k = len(rng); k > 0; --k)
            o.push_back(val(rng));
        sample.push_back(canonicalize(o));
    }
    for (const auto& a : sample) {
        CHECK(groups_isomorphic(a, a));
        for (const auto& b : sample) {
            CHECK(groups_isomorphic(a, b) == groups_isomorphic(b, a));
            for (const auto& c : sample)
                if (groups_isomorphic(a, b) && groups_isomorphic(b, c))
                    CHECK(groups_isomorphic(a, c));
        }
    }
}

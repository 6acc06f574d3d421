#include "doctest.h"
#include "oracles.hpp"

#include "wsep/collection.hpp"
#include "wsep/errors.hpp"

#include <cstdlib>
#include <set>

using namespace wsep;

namespace {

subset S(std::initializer_list<int> xs, int n) { return make_subset(xs, n); }

std::vector<subset> parse_all(std::initializer_list<const char*> xs, int n) {
    std::vector<subset> out;
    for (auto x : xs) out.push_back(parse_subset(x, n));
    return out;
}

collection square() {
    return make_collection(4, 2, parse_all({"12", "23", "34", "14", "13"}, 4), uniform_necklace(4, 2));
}

collection octagon() {
    return make_collection(8, 3,
                           parse_all({"123", "234", "345", "456", "567", "678", "178", "128", "127", "137", "136",
                                      "135", "134", "167", "156", "145"},
                                     8),
                           uniform_necklace(8, 3));
}

collection incomplete() {
    return make_collection(6, 3, parse_all({"123", "234", "345", "456", "156", "126", "125", "135", "235"}, 6),
                           uniform_necklace(6, 3));
}

decorated_perm from_oracle(const oracle::dperm& d) {
    return decorated_perm{static_cast<int>(d.perm.size()), d.perm, d.col};
}

std::vector<std::vector<subset>> sets_of(const std::vector<collection>& cs) {
    std::vector<std::vector<subset>> out;
    for (auto& c : cs) out.push_back(c.sets);
    return out;
}

} // namespace

TEST_CASE("validate") {
    CHECK(validate(octagon()).ok());
    auto bad = make_collection(4, 2, parse_all({"13", "24"}, 4));
    auto r = validate(bad);
    REQUIRE(r.not_separated.size() == 1);
    CHECK(r.not_separated[0] == std::pair(S({1, 3}, 4), S({2, 4}, 4)));
    for (const auto& d : oracle::all_decorated(5)) CHECK(validate(necklace_collection(decorated_to_necklace(from_oracle(d)))).ok());

    auto outside = make_collection(5, 3, {S({1, 2, 4}, 5), S({2, 3, 4}, 5)},
                                   necklace{5, 3, {S({1, 2, 4}, 5), S({2, 4, 5}, 5), S({3, 4, 5}, 5),
                                                   S({4, 5, 2}, 5), S({5, 1, 2}, 5)}});
    auto ro = validate(outside);
    CHECK(ro.outside_positroid == std::vector<subset>{S({2, 3, 4}, 5)});
    CHECK(ro.missing_necklace.size() == 3);
    CHECK(validate(make_collection(4, 2, {S({1}, 4)})).wrong_size.size() == 1);
    CHECK_THROWS_AS(make_collection(4, 2, {S({1, 2}, 4), S({1, 2}, 4)}), invalid_input);
}

TEST_CASE("is_maximal") {
    CHECK(is_maximal(square()));
    CHECK_FALSE(is_maximal(necklace_collection(uniform_necklace(4, 2))));
    CHECK_FALSE(is_maximal(incomplete()));
    CHECK(is_maximal(octagon()));
    CHECK_THROWS_AS(is_maximal(make_collection(4, 2, {S({1, 2}, 4)})), invalid_input);
}

TEST_CASE("extend_to_maximal") {
    auto ext = extend_to_maximal(incomplete());
    CHECK(ext.size() == 10);
    auto added = ext.sets;
    added.erase(std::remove_if(added.begin(), added.end(), [&](subset s) { return incomplete().contains(s); }),
                added.end());
    CHECK(added == std::vector<subset>{S({1, 4, 5}, 6)});
    // both 145 and 356 would complete it
    auto other = incomplete();
    other.sets.push_back(S({3, 5, 6}, 6));
    std::sort(other.sets.begin(), other.sets.end());
    CHECK(is_maximal(other));
    CHECK(is_maximal(ext));

    CHECK(extend_to_maximal(square()) == square());
    auto u = extend_to_maximal(necklace_collection(uniform_necklace(4, 2)));
    CHECK(u.size() == 5);
}

TEST_CASE("mutation sites and apply") {
    auto sites = mutation_sites(square());
    REQUIRE(sites.size() == 1);
    CHECK(sites[0] == mutation_site{0, 1, 2, 3, 4});
    CHECK(sites[0].removed() == S({1, 3}, 4));

    auto flipped = apply_mutation(square(), sites[0]);
    CHECK(flipped.sets == make_collection(4, 2, parse_all({"12", "23", "34", "14", "24"}, 4)).sets);
    CHECK(apply_mutation(flipped, mirrored(sites[0])) == square());
    CHECK(mutation_sites(flipped) == std::vector<mutation_site>{mirrored(sites[0])});

    CHECK(mutation_sites(necklace_collection(uniform_necklace(5, 2))).empty());
    CHECK(mutation_sites(necklace_collection(uniform_necklace(5, 1))).empty());
    CHECK_THROWS_AS(apply_mutation(square(), mutation_site{0, 2, 3, 4, 1}), invalid_input);
    CHECK_THROWS_AS(apply_mutation(flipped, sites[0]), invalid_input);

    auto big = octagon();
    auto ps = mutation_sites(big);
    CHECK_FALSE(ps.empty());
    for (const auto& s : ps) {
        auto m = apply_mutation(big, s);
        CHECK(m.size() == big.size());
        CHECK(validate(m).ok());
        CHECK(is_maximal(m));
        CHECK(apply_mutation(m, mirrored(s)) == big);
    }
}

TEST_CASE("mutation sites agree with a direct search") {
    // every (S,a,b,c,d) with the five sets present, found by scanning all quadruples
    for (auto& c : enumerate_maximal(uniform_necklace(6, 3), enumeration_mode::closure)) {
        std::vector<mutation_site> ref;
        for (subset Sx = 0; Sx < 64; ++Sx) {
            if (card(Sx) != 1) continue;
            for (int a = 1; a <= 6; ++a)
                for (int b = 1; b <= 6; ++b)
                    for (int cc = 1; cc <= 6; ++cc)
                        for (int d = 1; d <= 6; ++d) {
                            if (a >= cc || !(a < b && b < cc) || !(d > cc || d < a)) continue;
                            if ((elem(a) | elem(b) | elem(cc) | elem(d)) & Sx) continue;
                            auto in = [&](int x, int y) { return c.contains(Sx | elem(x) | elem(y)); };
                            if (in(a, b) && in(b, cc) && in(cc, d) && in(d, a) && in(a, cc))
                                ref.push_back({Sx, a, b, cc, d});
                        }
        }
        auto got = mutation_sites(c);
        CHECK(got.size() == ref.size());
        for (auto& s : ref) CHECK(std::find(got.begin(), got.end(), s) != got.end());
    }
}

TEST_CASE("enumeration counts for uniform k=2") {
    int expect[] = {2, 5, 14};
    for (int n = 4; n <= 6; ++n) {
        auto cl = enumerate_maximal(uniform_necklace(n, 2), enumeration_mode::closure);
        auto bf = enumerate_maximal(uniform_necklace(n, 2), enumeration_mode::bruteforce);
        CHECK(cl.size() == static_cast<std::size_t>(expect[n - 4]));
        CHECK(sets_of(cl) == sets_of(bf));
        for (auto& c : cl) CHECK(static_cast<int>(c.size()) == 2 * (n - 2) + 1);
    }
}

TEST_CASE("enumeration matches the oracle and purity holds, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : oracle::all_decorated(n)) {
            auto nk = decorated_to_necklace(from_oracle(d));
            auto ref = oracle::maximal_collections(oracle::necklace(d), n);
            auto cl = enumerate_maximal(nk, enumeration_mode::closure, {true});
            auto bf = enumerate_maximal(nk, enumeration_mode::bruteforce);
            REQUIRE(sets_of(cl) == ref);
            REQUIRE(sets_of(bf) == ref);
            int ell = length(nk);
            for (auto& c : cl) CHECK(static_cast<int>(c.size()) == ell + 1);
        }
}

TEST_CASE("closure equals bruteforce for every decorated permutation with n = 6") {
    for (const auto& d : oracle::all_decorated(6)) {
        auto nk = decorated_to_necklace(from_oracle(d));
        auto cl = enumerate_maximal(nk, enumeration_mode::closure);
        auto bf = enumerate_maximal(nk, enumeration_mode::bruteforce);
        REQUIRE(sets_of(cl) == sets_of(bf));
        int ell = length(nk);
        for (auto& c : cl) {
            CHECK(static_cast<int>(c.size()) == ell + 1);
            CHECK(static_cast<int>(c.size()) <= nk.k * (6 - nk.k) + 1);
        }
    }
}

TEST_CASE("direct sum factorization of enumerations, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& d : oracle::all_decorated(n)) {
            auto nk = decorated_to_necklace(from_oracle(d));
            int i = 0, j = 0;
            for (int a = 1; a <= n && !i; ++a)
                for (int b = a + 1; b <= n && !i; ++b)
                    if (nk.at(a) == nk.at(b)) i = a, j = b;
            if (!i) continue;
            auto sp = direct_sum_split(nk, i, j);
            subset part1 = 0, part2 = 0;
            for (int x : sp.first_ground) part1 |= elem(x);
            for (int x : sp.second_ground) part2 |= elem(x);
            subset i1 = nk.at(i) & part1, i2 = nk.at(i) & part2;
            auto c1 = enumerate_maximal(sp.first, enumeration_mode::closure);
            auto c2 = enumerate_maximal(sp.second, enumeration_mode::closure);
            std::set<std::vector<subset>> glued;
            for (auto& x : c1)
                for (auto& y : c2) {
                    std::set<subset> g;
                    for (auto s : x.sets) g.insert(lift_from(s, sp.first_ground) | i2);
                    for (auto s : y.sets) g.insert(i1 | lift_from(s, sp.second_ground));
                    glued.insert(std::vector<subset>(g.begin(), g.end()));
                }
            auto whole = sets_of(enumerate_maximal(nk, enumeration_mode::closure));
            CHECK(std::vector<std::vector<subset>>(glued.begin(), glued.end()) == whole);
        }
}

TEST_CASE("positroid hull") {
    CHECK(positroid_hull(uniform_necklace(5, 2)).size() == 10);
    necklace full{4, 4, std::vector<subset>(4, full_set(4))};
    CHECK(positroid_hull(full) == std::vector<subset>{full_set(4)});
    necklace small{5, 3, {S({1, 2, 4}, 5), S({2, 4, 5}, 5), S({3, 4, 5}, 5), S({4, 5, 2}, 5), S({5, 1, 2}, 5)}};
    auto h = positroid_hull(small);
    std::set<subset> u;
    for (auto& c : enumerate_maximal(small, enumeration_mode::closure)) u.insert(c.sets.begin(), c.sets.end());
    CHECK(h == std::vector<subset>(u.begin(), u.end()));

    // w-hat for w = (2,1): the hull is strictly smaller than the positroid
    auto w = decorated_to_necklace(make_decorated({4, 3, 1, 2}));
    CHECK(positroid_hull(w) == parse_all({"12", "14", "24", "34"}, 4));
    CHECK(positroid_bases(w).size() == 5);

    for (int n = 1; n <= 5; ++n)
        for (const auto& d : oracle::all_decorated(n)) {
            auto nk = decorated_to_necklace(from_oracle(d));
            std::set<subset> all;
            for (auto& c : enumerate_maximal(nk, enumeration_mode::closure)) all.insert(c.sets.begin(), c.sets.end());
            CHECK(positroid_hull(nk) == std::vector<subset>(all.begin(), all.end()));
        }
}

TEST_CASE("budget caps enumeration") {
    setenv("WORKBENCH_BUDGET", "10", 1);
    CHECK_THROWS_AS(enumerate_maximal(uniform_necklace(7, 3), enumeration_mode::closure), resource_error);
    CHECK_THROWS_AS(positroid_bases(uniform_necklace(7, 3)), resource_error);
    unsetenv("WORKBENCH_BUDGET");
    CHECK(enumerate_maximal(uniform_necklace(4, 2), enumeration_mode::closure).size() == 2);
}

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncnat/arithmetic.hpp"
#include "ncnat/errors.hpp"

using namespace ncnat;
using testutil::named;

TEST_CASE("oplus: structure and magnitude") {
    CHECK(oplus(Term::parse("1"), Term::parse("1")) == named("2"));
    CHECK(oplus(Term::parse("1"), Term::parse("(1 1)")) == named("3_1"));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Term a = testutil::random_term(rng, 1 + static_cast<int>(rng() % 10));
        Term b = testutil::random_term(rng, 1 + static_cast<int>(rng() % 10));
        CHECK(oplus(a, b).magnitude() == a.magnitude() + b.magnitude());
    }
}

TEST_CASE("multiply: the worked example and the unit laws") {
    CHECK(multiply(named("2"), named("3_1")) == Term::parse("((1 (1 1)) (1 (1 1)))"));
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        Term t = testutil::random_term(rng, 1 + static_cast<int>(rng() % 12));
        CHECK(multiply(Term::leaf(), t) == t);
        CHECK(multiply(t, Term::leaf()) == t);
    }
}

TEST_CASE("multiply: magnitude is multiplicative") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        Term a = testutil::random_term(rng, 1 + static_cast<int>(rng() % 6));
        Term b = testutil::random_term(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(multiply(a, b).magnitude() == a.magnitude() * b.magnitude());
    }
}

TEST_CASE("multiply: right distributivity holds exactly on terms") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 1000; ++i) {
        Term a1 = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        Term a2 = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        Term b = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(multiply(oplus(a1, a2), b) == oplus(multiply(a1, b), multiply(a2, b)));
    }
}

TEST_CASE("multiply: associativity holds exactly on terms") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 1000; ++i) {
        Term a = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        Term b = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        Term c = testutil::random_term(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("multiply_classes: commutes, unit, the 2 * 2 example") {
    StratumStore store;
    ClassId two = store.class_of(named("2"));
    ClassId three_one = store.class_of(named("3_1"));
    CHECK(multiply_classes(store, two, three_one) == multiply_classes(store, three_one, two));
    CHECK(multiply_classes(store, two, two) == store.class_of(named("4_1")));
    ClassId one = store.class_of(Term::parse("1"));
    for (const auto& [cls, size] : store.list_classes(5)) {
        CHECK(multiply_classes(store, one, cls) == cls);
        CHECK(multiply_classes(store, cls, one) == cls);
    }
    StratumStore tiny(Config{.n_max = 5});
    ClassId t2 = tiny.class_of(named("2"));
    ClassId t3 = tiny.class_of(named("3_1"));
    CHECK_THROWS_AS(multiply_classes(tiny, t2, t3), BudgetError);
}

TEST_CASE("multiply_classes: independent of the representative") {
    StratumStore store;
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 200) {
        int na = 2 + static_cast<int>(rng() % 3);
        int nb = 2 + static_cast<int>(rng() % 3);
        Term a = testutil::random_term(rng, na);
        Term a2 = testutil::random_term(rng, na);
        Term b = testutil::random_term(rng, nb);
        Term b2 = testutil::random_term(rng, nb);
        if (!store.are_equal(a, a2) || !store.are_equal(b, b2)) continue;
        CHECK(store.are_equal(multiply(a, b), multiply(a2, b2)));
        ++done;
    }
}

TEST_CASE("is_irreducible: prime magnitudes and the magnitude-4 split") {
    StratumStore store;
    for (int p : {2, 3, 5, 7, 11, 13})
        for (const auto& [cls, size] : store.list_classes(p))
            CHECK(is_irreducible(store, cls));
    CHECK_FALSE(is_irreducible(store, store.class_of(named("4_1"))));
    CHECK(is_irreducible(store, store.class_of(named("4_2"))));
    CHECK(is_irreducible(store, store.class_of(named("4_3"))));
    CHECK(is_irreducible(store, store.class_of(named("4_4"))));
    CHECK(is_irreducible(store, store.class_of(named("4_5"))));
    // The unit is not irreducible.
    CHECK_FALSE(is_irreducible(store, store.class_of(Term::parse("1"))));
}

TEST_CASE("factorize: irreducibles, the unit, and 4_1 = 2 * 2") {
    StratumStore store;
    auto f3 = factorize(store, store.class_of(named("3_1")));
    REQUIRE(f3.size() == 1);
    REQUIRE(f3[0].factors.size() == 1);
    CHECK(f3[0].factors[0].cls == store.class_of(named("3_1")));
    CHECK(f3[0].factors[0].irreducible);

    auto f4 = factorize(store, store.class_of(named("4_1")));
    REQUIRE(f4.size() == 1);
    REQUIRE(f4[0].factors.size() == 2);
    CHECK(f4[0].factors[0].cls == store.class_of(named("2")));
    CHECK(f4[0].factors[1].cls == store.class_of(named("2")));

    auto funit = factorize(store, store.class_of(Term::parse("1")));
    REQUIRE(funit.size() == 1);
    CHECK(funit[0].factors.empty());
}

TEST_CASE("factorize: products of factors reproduce the class, magnitudes multiply") {
    StratumStore store;
    for (int n = 2; n <= 9; ++n) {
        for (const auto& [cls, size] : store.list_classes(n)) {
            auto factorizations = factorize(store, cls);
            CHECK(!factorizations.empty());
            for (const auto& f : factorizations) {
                int mag_product = 1;
                ClassId acc = store.class_of(Term::parse("1"));
                for (const auto& factor : f.factors) {
                    CHECK(factor.cls.n >= 2);
                    CHECK(factor.irreducible);
                    CHECK(is_irreducible(store, factor.cls));
                    mag_product *= factor.cls.n;
                    acc = multiply_classes(store, acc, factor.cls);
                }
                CHECK(mag_product == cls.n);
                CHECK(acc == cls);
                // Canonical order within the multiset.
                for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
                    CHECK(!(f.factors[i + 1].cls < f.factors[i].cls));
            }
        }
    }
}

TEST_CASE("factorize: depth is bounded by the bit length of the magnitude") {
    StratumStore store;
    // 8 = 2*2*2 has the deepest factorizations in range; every factor list
    // is at most log2(8) = 3 long.
    for (const auto& [cls, size] : store.list_classes(8))
        for (const auto& f : factorize(store, cls)) CHECK(f.factors.size() <= 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <numeric>
#include <random>

#include "etaq/ntheory.hpp"

using namespace etaq;

namespace {

std::uint64_t test_seed() {
    const char* env = std::getenv("ETAQ_SEED");
    if (env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 12345;
}

// Textbook Jacobi symbol for odd n >= 1, used as an independent oracle.
int slow_jacobi(std::int64_t a, std::int64_t n) {
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

TEST_CASE("kronecker matches jacobi oracle") {
    for (std::int64_t n = 1; n <= 199; n += 2)
        for (std::int64_t a = -100; a <= 100; ++a)
            CHECK(kronecker_symbol(a, n) == slow_jacobi(a, n));
}

TEST_CASE("kronecker euler criterion") {
    for (std::int64_t p = 3; p <= 97; p += 2) {
        if (!is_prime_small(static_cast<std::uint64_t>(p))) continue;
        for (std::int64_t a = -50; a <= 50; ++a) {
            std::int64_t e = powmod(a, (p - 1) / 2, p);
            int sym = kronecker_symbol(a, p);
            if (sym == 0)
                CHECK(a % p == 0);
            else
                CHECK((sym == 1 ? 1 : p - 1) == e);
        }
    }
}

TEST_CASE("kronecker extension cases") {
    CHECK(kronecker_symbol(1, 0) == 1);
    CHECK(kronecker_symbol(-1, 0) == 1);
    CHECK(kronecker_symbol(2, 0) == 0);
    CHECK(kronecker_symbol(0, 0) == 0);
    CHECK(kronecker_symbol(0, 1) == 1);
    CHECK(kronecker_symbol(0, -1) == 1);
    CHECK(kronecker_symbol(0, 5) == 0);

    // (a|2): 0 for even a, +1 for a = +-1 (8), -1 for a = +-3 (8)
    CHECK(kronecker_symbol(6, 2) == 0);
    CHECK(kronecker_symbol(1, 2) == 1);
    CHECK(kronecker_symbol(7, 2) == 1);
    CHECK(kronecker_symbol(-1, 2) == 1);
    CHECK(kronecker_symbol(3, 2) == -1);
    CHECK(kronecker_symbol(5, 2) == -1);
    CHECK(kronecker_symbol(-3, 2) == -1);

    CHECK(kronecker_symbol(3, -1) == 1);
    CHECK(kronecker_symbol(-3, -1) == -1);
    CHECK(kronecker_symbol(-7, -9) == kronecker_symbol(-7, -1) *
                                          kronecker_symbol(-7, 9));
    CHECK(kronecker_symbol(5, 12) ==
          kronecker_symbol(5, 4) * kronecker_symbol(5, 3));
}

TEST_CASE("kronecker multiplicativity") {
    std::mt19937_64 rng(test_seed());
    std::uniform_int_distribution<std::int64_t> d(-3000, 3000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = d(rng), b = d(rng), n = d(rng);
        if (n == 0 || a == 0 || b == 0) continue;
        CHECK(kronecker_symbol(a * b, n) ==
              kronecker_symbol(a, n) * kronecker_symbol(b, n));
        std::int64_t m = d(rng);
        if (m == 0) continue;
        CHECK(kronecker_symbol(a, m * n) ==
              kronecker_symbol(a, m) * kronecker_symbol(a, n));
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(1) == 1);
    CHECK(squarefree_part(12) == 3);
    CHECK(squarefree_part(-12) == -3);
    CHECK(squarefree_part(49) == 1);
    CHECK(squarefree_part(-49) == -1);
    CHECK(squarefree_part(360) == 10);
    CHECK(squarefree_part(30) == 30);
    CHECK(squarefree_part(1024) == 1);
    CHECK(squarefree_part(2 * 3 * 3 * 5 * 5 * 5) == 10);
    CHECK_THROWS_AS(squarefree_part(0), Error);
}

TEST_CASE("character specs") {
    CharacterSpec t6 = CharacterSpec::trivial(6);
    CHECK(t6.is_trivial());
    CHECK(t6.conductor() == 6);
    CHECK(character_eval(t6, 0) == 0);
    CHECK(character_eval(t6, 1) == 1);
    CHECK(character_eval(t6, 4) == 0);
    CHECK(character_eval(t6, 5) == 1);
    CHECK(character_eval(t6, -5) == 1);

    CharacterSpec t1 = CharacterSpec::trivial(1);
    CHECK(character_eval(t1, 0) == 1);
    CHECK(character_eval(t1, 17) == 1);

    CharacterSpec l3 = CharacterSpec::legendre(3);
    CHECK(l3.conductor() == 3);
    CHECK(!l3.is_trivial());
    for (std::int64_t n = 0; n < 30; ++n) {
        int expect = n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1);
        CHECK(character_eval(l3, n) == expect);
        CHECK(character_eval(l3, n + 3) == character_eval(l3, n));
    }
    CHECK_THROWS_AS(CharacterSpec::legendre(2), Error);
    CHECK_THROWS_AS(CharacterSpec::legendre(9), Error);
    CHECK_THROWS_AS(CharacterSpec::legendre(15), Error);

    CharacterSpec k5 = CharacterSpec::kronecker(5);
    CHECK(k5.conductor() == 5);
    CHECK(k5.squarefree_top() == 5);
    CharacterSpec k12 = CharacterSpec::kronecker(12);
    CHECK(k12.squarefree_top() == 3);
    CHECK(k12.conductor() == 12);
    CharacterSpec km3 = CharacterSpec::kronecker(-3);
    CHECK(km3.conductor() == 3);
    CharacterSpec km1 = CharacterSpec::kronecker(-4);
    CHECK(km1.squarefree_top() == -1);
    CHECK(km1.conductor() == 4);
    CHECK(CharacterSpec::kronecker(8).conductor() == 8);
    CHECK_THROWS_AS(CharacterSpec::kronecker(0), Error);

    // real, periodic with the conductor, and completely multiplicative
    for (const CharacterSpec& chi : {k5, k12, km3, km1}) {
        auto c = static_cast<std::int64_t>(chi.conductor());
        for (std::int64_t n = 0; n < 2 * c; ++n) {
            int v = character_eval(chi, n);
            CHECK((v == -1 || v == 0 || v == 1));
            CHECK(character_eval(chi, n + c) == v);
        }
        for (std::int64_t a = 1; a < c; ++a)
            for (std::int64_t b = 1; b < c; ++b)
                CHECK(character_eval(chi, a * b) ==
                      character_eval(chi, a) * character_eval(chi, b));
    }

    CHECK(CharacterSpec::trivial(6) == CharacterSpec::trivial(6));
    CHECK(!(CharacterSpec::trivial(6) == CharacterSpec::trivial(5)));
}

TEST_CASE("gamma0 index") {
    CHECK(gamma0_index(1) == 1);
    CHECK(gamma0_index(2) == 3);
    CHECK(gamma0_index(4) == 6);
    CHECK(gamma0_index(6) == 12);
    CHECK(gamma0_index(135) == 216);
    CHECK(gamma0_index(225) == 360);
    CHECK(gamma0_index(675) == 1080);
    CHECK(gamma0_index(2025) == 3240);
    CHECK_THROWS_AS(gamma0_index(0), Error);
}

TEST_CASE("sturm bound") {
    CHECK(sturm_bound(506, 675) == 45541);
    CHECK(sturm_bound(20, 225) == 601);
    CHECK(sturm_bound(20, 2025) == 5401);
    CHECK(sturm_bound(2, 1) == 2);
    CHECK(sturm_bound(1, 1) == 2); // ceil(1/12) = 1
    CHECK(sturm_bound(12, 1) == 2);
    CHECK(sturm_bound(13, 1) == 3);
}

TEST_CASE("partition function") {
    const std::int64_t small[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (std::int64_t n = 0; n < 8; ++n) CHECK(partition_p(n) == small[n]);
    CHECK(partition_p(-1) == 0);
    CHECK(partition_p(-10) == 0);
    CHECK(partition_p(100) == 190569292);

    CHECK(partition_p(mpq_class(9, 3)) == 3);
    CHECK(partition_p(mpq_class(1, 3)) == 0);
    CHECK(partition_p(mpq_class(-2, 1)) == 0);
    CHECK(partition_p(mpq_class(10, 2)) == 7);

    std::vector<mpz_class> tab = partition_table(300);
    REQUIRE(tab.size() == 300);
    for (std::int64_t n = 0; n < 300; ++n) CHECK(tab[n] == partition_p(n));

    std::vector<std::uint32_t> tm = partition_table_mod(300, 625);
    for (std::size_t n = 0; n < 300; ++n)
        CHECK(mpz_class(tab[n] % 625) == tm[n]);

    // Ramanujan: p(5n+4) = 0 mod 5, p(7n+5) = 0 mod 7
    for (std::size_t n = 4; n < 300; n += 5) CHECK(tab[n] % 5 == 0);
    for (std::size_t n = 5; n < 300; n += 7) CHECK(tab[n] % 7 == 0);
}

TEST_CASE("frobenius enumeration") {
    const std::uint64_t expect[] = {1,    9,    27,   82,    207,  486, 1055,
                                    2205, 4374, 8427, 15696, 28539, 50630};
    for (std::uint64_t n = 0; n <= 12; ++n)
        CHECK(enumerate_frobenius3(n) == expect[n]);
    CHECK_THROWS_AS(enumerate_frobenius3(26), Error);
}

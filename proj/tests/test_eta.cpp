#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <utility>
#include <vector>

#include "etaq/eta.hpp"

using namespace etaq;

namespace {

EtaQuotient g_full() {
    return EtaQuotient(135, {{1, 1247}, {3, -1}, {5, -250}, {45, 13}, {135, 3}});
}
EtaQuotient g_red() {
    return EtaQuotient(135, {{1, -3}, {3, -1}, {45, 13}, {135, 3}});
}
EtaQuotient f_full() {
    return EtaQuotient(225, {{1, 47}, {3, -1}, {5, -10}, {9, 3}, {75, 1}}, 9);
}
EtaQuotient f_red() {
    return EtaQuotient(225, {{1, -3}, {3, -1}, {9, 3}, {75, 1}}, 9);
}

} // namespace

TEST_CASE("quotient construction") {
    CHECK_THROWS_AS(EtaQuotient(0, {{1, 1}}), Error);
    CHECK_THROWS_AS(EtaQuotient(10, {{4, 1}}), Error);
    CHECK_THROWS_AS(EtaQuotient(10, {{0, 1}}), Error);
    EtaQuotient e(6, {{1, 0}, {2, 3}});
    CHECK(e.exponents() ==
          std::map<std::uint64_t, std::int64_t>{{2, 3}});
    CHECK(e.scalar() == 1);
    CHECK(g_full() == g_full());
    CHECK(!(g_full() == g_red()));
}

TEST_CASE("weights") {
    CHECK(eq_weight(g_full()) == 506);
    CHECK(eq_weight(f_full()) == 20);
    CHECK(eq_weight(g_red()) == 6);
    CHECK(eq_weight(f_red()) == 0);
    CHECK(eq_weight(EtaQuotient(1, {{1, 1}})) == mpq_class(1, 2));
}

TEST_CASE("admissibility conditions") {
    EtaConditionReport rg = eq_check_conditions(g_full());
    CHECK(rg.weight == 506);
    CHECK(rg.sum_delta_r == 984);
    CHECK(rg.sum_codelta_r == 161592);
    CHECK(rg.weight_integral);
    CHECK(rg.delta_sum_ok);
    CHECK(rg.codelta_sum_ok);
    CHECK(rg.pass());

    EtaConditionReport rf = eq_check_conditions(f_full());
    CHECK(rf.sum_delta_r == 96);
    CHECK(rf.sum_codelta_r == 10128);
    CHECK(rf.pass());

    EtaConditionReport bad = eq_check_conditions(EtaQuotient(1, {{1, 1}}));
    CHECK(!bad.weight_integral);
    CHECK(!bad.delta_sum_ok);
    CHECK(!bad.pass());
}

TEST_CASE("characters") {
    for (const EtaQuotient& e : {g_full(), g_red(), f_full(), f_red()}) {
        CharacterSpec chi = eq_character(e);
        CHECK(chi.is_trivial());
        CHECK(chi.conductor() == e.level());
    }
    CharacterSpec nt = eq_character(EtaQuotient(3, {{1, 3}, {3, -9}}));
    CHECK(!nt.is_trivial());
    CHECK(nt.squarefree_top() == -3);
    CHECK(nt.conductor() == 3);
    CHECK_THROWS_AS(eq_character(EtaQuotient(1, {{1, 1}})), Error);
}

TEST_CASE("cusp orders") {
    CHECK(eq_cusp_order(g_full(), 135) == 41);
    CHECK(eq_cusp_order(g_full(), 1) == 6733);
    CHECK(eq_cusp_order(f_full(), 225) == 4);
    CHECK(eq_cusp_order(g_red(), 1) == -17);
    CHECK(eq_cusp_order(g_red(), 135) == 41);
    CHECK_THROWS_AS(eq_cusp_order(g_full(), 2), Error);

    CuspOrderTable tg = eq_cusp_orders(g_full());
    REQUIRE(tg.orders.size() == 8);
    CHECK(tg.all_positive);
    CHECK(eq_is_cusp_form(g_full()));
    const std::pair<std::uint64_t, std::int64_t> g_orders[] = {
        {1, 6733}, {3, 748}, {5, 5},   {9, 254},
        {15, 8},   {27, 257}, {45, 26}, {135, 41}};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(tg.orders[i].first == g_orders[i].first);
        CHECK(tg.orders[i].second == g_orders[i].second);
    }

    // The level-225 quotient is not a cusp form, despite its role in the
    // mod-25 argument: the order at the four cusps with denominator 5 is
    // -1 and the eight with denominator 15 sit exactly at 0.
    CuspOrderTable tf = eq_cusp_orders(f_full());
    REQUIRE(tf.orders.size() == 9);
    CHECK(!tf.all_positive);
    CHECK(!eq_is_cusp_form(f_full()));
    const std::pair<std::uint64_t, std::int64_t> f_orders[] = {
        {1, 422}, {3, 47}, {5, -1}, {9, 72},  {15, 0},
        {25, 2},  {45, 1}, {75, 3}, {225, 4}};
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(tf.orders[i].first == f_orders[i].first);
        CHECK(tf.orders[i].second == f_orders[i].second);
    }

    CHECK(!eq_is_cusp_form(g_red()));

    // valence identity: summing orders over cusp classes, each divisor d
    // carrying phi(gcd(d, N/d)) classes, must give weight * index / 12
    for (const EtaQuotient& e : {g_full(), f_full()}) {
        mpq_class total = 0;
        for (const auto& [d, ord] : eq_cusp_orders(e).orders) {
            std::uint64_t g = std::gcd(d, e.level() / d), phi = 1;
            for (std::uint64_t p = 2; p * p <= g; ++p)
                if (g % p == 0) {
                    phi *= p - 1;
                    g /= p;
                    while (g % p == 0) phi *= p, g /= p;
                }
            if (g > 1) phi *= g - 1;
            total += mpq_class(phi) * ord;
        }
        CHECK(total ==
              eq_weight(e) * gamma0_index(e.level()) / 12);
    }
}

TEST_CASE("leading exponent") {
    CHECK(eq_leading_exponent(g_full()) == 41);
    CHECK(eq_leading_exponent(g_red()) == 41);
    CHECK(eq_leading_exponent(f_full()) == 4);
    CHECK(eq_leading_exponent(f_red()) == 4);
    CHECK_THROWS_AS(eq_leading_exponent(EtaQuotient(1, {{1, 1}})),
                    FractionalExponentError);
}

TEST_CASE("expansion of the reduced quotients") {
    Modulus m625 = Modulus::mod(625);
    FormExpansion gx = eq_expand(g_red(), 57, m625);
    CHECK(gx.weight == 6);
    CHECK(gx.level == 135);
    CHECK(gx.character.is_trivial());
    for (std::size_t i = 0; i < 41; ++i) CHECK(gx.series.residue_at(i) == 0);
    const std::uint32_t rg[] = {1,   3,  9,  23,  54, 117, 245, 486,
                                311, 497, 55, 27, 485, 0,  306, 312};
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(gx.series.residue_at(41 + i) == rg[i]);

    Modulus m25 = Modulus::mod(25);
    FormExpansion fx = eq_expand(f_red(), 20, m25);
    CHECK(fx.weight == 0);
    CHECK(fx.level == 225);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fx.series.residue_at(i) == 0);
    const std::uint32_t cf[] = {9, 2,  6,  7,  11, 3,  5,  24,
                                24, 21, 14, 0,  19, 17, 20, 18};
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(fx.series.residue_at(4 + i) == cf[i]);
}

TEST_CASE("expansion matches explicit product") {
    // discriminant form: eta(z)^24, tau values
    FormExpansion dx = eq_expand(EtaQuotient(1, {{1, 24}}), 8, Modulus::exact());
    const std::int64_t tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744};
    for (std::size_t i = 0; i < 8; ++i) CHECK(dx.series.integer_at(i) == tau[i]);

    EtaQuotient e(2, {{1, 8}, {2, 8}});
    FormExpansion ex = eq_expand(e, 100, Modulus::exact());
    Series direct = shift(
        mul(pow(densify(euler_series(99, 1), 99, Modulus::exact()), 8),
            pow(densify(euler_series(99, 2), 99, Modulus::exact()), 8)),
        1);
    CHECK(ex.series == direct);
    CHECK(eq_leading_exponent(e) == 1);
}

TEST_CASE("expansion edge cases") {
    CHECK(eq_expand(g_red(), 30, Modulus::mod(625)).series.is_zero());
    CHECK(eq_expand(g_red(), 30, Modulus::mod(625)).series.truncation() == 30);
    CHECK_THROWS_AS(eq_expand(EtaQuotient(1, {{1, 1}}), 10, Modulus::exact()),
                    FractionalExponentError);
    CHECK_THROWS_AS(eq_expand(EtaQuotient(1, {{1, -24}}), 10, Modulus::exact()),
                    Error);
    // scalar scaling
    FormExpansion s3 = eq_expand(EtaQuotient(1, {{1, 24}}, -3), 4,
                                 Modulus::exact());
    CHECK(s3.series.integer_at(1) == -3);
    CHECK(s3.series.integer_at(2) == 72);
}

TEST_CASE("parser round trips") {
    std::string canon = "N=135; 1:-3, 3:-1, 45:13, 135:3; scalar=1";
    EtaQuotient e = parse_eta_quotient(canon);
    CHECK(e == g_red());
    CHECK(to_text(e) == canon);

    CHECK(parse_eta_quotient(" N = 135 ; 1 : -3 , 3 : -1 , 45 : 13 , 135 : 3 ") ==
          g_red());
    CHECK(parse_eta_quotient("N=225; 1:-3, 3:-1, 9:3, 75:1; scalar=9") ==
          f_red());
    CHECK(to_text(f_red()) == "N=225; 1:-3, 3:-1, 9:3, 75:1; scalar=9");
    CHECK(parse_eta_quotient(to_text(g_full())) == g_full());
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_eta_quotient(""), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("135; 1:2"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=; 1:1"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:1, 2:3"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; :3"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:1:3"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:1; scalar="), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:1; scalar=x"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 2:1; scalar=1; junk"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; -2:1"), ParseError);
    CHECK_THROWS_AS(parse_eta_quotient("N=0; 1:1"), Error);
    CHECK_THROWS_AS(parse_eta_quotient("N=10; 4:1"), Error);
}

TEST_CASE("mod reduction") {
    EtaReduction rg = eq_reduce_mod(g_full(), 5, 4);
    CHECK(rg.reduced);
    CHECK(rg.quotient == g_red());

    EtaReduction rf = eq_reduce_mod(f_full(), 5, 2);
    CHECK(rf.reduced);
    CHECK(rf.quotient == f_red());

    EtaReduction none = eq_reduce_mod(g_red(), 5, 4);
    CHECK(!none.reduced);
    CHECK(none.quotient == g_red());

    EtaReduction r2 = eq_reduce_mod(EtaQuotient(2, {{1, 5}, {2, -1}}), 2, 1);
    CHECK(r2.reduced);
    CHECK(r2.quotient == EtaQuotient(2, {{1, 3}}));

    EtaReduction rc = eq_reduce_mod(
        EtaQuotient(25, {{1, 130}, {5, -25}, {25, -1}}), 5, 2);
    CHECK(rc.reduced);
    CHECK(rc.quotient == EtaQuotient(25, {{1, 5}, {25, -1}}));

    // the strip preserves the leading exponent
    CHECK(eq_leading_exponent(rg.quotient) == eq_leading_exponent(g_full()));
    CHECK(eq_leading_exponent(rf.quotient) == eq_leading_exponent(f_full()));

    CHECK_THROWS_AS(eq_reduce_mod(g_full(), 1, 4), Error);
    CHECK_THROWS_AS(eq_reduce_mod(g_full(), 5, 0), Error);
}

TEST_CASE("reduced expansion is congruent to the full expansion") {
    Modulus m625 = Modulus::mod(625);
    CHECK(eq_expand(g_full(), 2000, m625).series ==
          eq_expand(g_red(), 2000, m625).series);
    Modulus m25 = Modulus::mod(25);
    CHECK(eq_expand(f_full(), 2000, m25).series ==
          eq_expand(f_red(), 2000, m25).series);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "etaq/cphi.hpp"
#include "etaq/ntheory.hpp"

using namespace etaq;

TEST_CASE("flavor names") {
    CHECK(flavor_name(Flavor::Cphi3) == "cphi3");
    CHECK(flavor_name(Flavor::Cphibar3) == "cphibar3");
    CHECK(flavor_name(Flavor::ASeries) == "a_series");
    CHECK(flavor_name(Flavor::Raw) == "raw");
    for (Flavor f : {Flavor::Cphi3, Flavor::Cphibar3, Flavor::ASeries,
                     Flavor::Raw})
        CHECK(flavor_from_name(flavor_name(f)) == f);
    CHECK_THROWS_AS(flavor_from_name("nope"), ParseError);
}

TEST_CASE("cphibar3 exact values") {
    CphiTable t = cphibar3_series(10, Modulus::exact());
    CHECK(t.flavor == Flavor::Cphibar3);
    CHECK(t.truncation() == 10);
    const std::int64_t expect[] = {0,   9,    27,   81,   207,
                                   486, 1053, 2205, 4374, 8424};
    for (std::size_t n = 0; n < 10; ++n)
        CHECK(t.series.integer_at(n) == expect[n]);

    CphiTable m7 = cphibar3_series(10, Modulus::mod(7));
    for (std::size_t n = 0; n < 10; ++n)
        CHECK(m7.series.residue_at(n) == expect[n] % 7);
}

TEST_CASE("cphi3 exact values") {
    CphiTable t = cphi3_series(13, Modulus::exact());
    const std::int64_t expect[] = {1,    9,    27,   82,   207,  486, 1055,
                                   2205, 4374, 8427, 15696, 28539, 50630};
    for (std::size_t n = 0; n < 13; ++n)
        CHECK(t.series.integer_at(n) == expect[n]);
}

TEST_CASE("cphi3 equals brute-force enumeration") {
    CphiTable t = cphi3_series(13, Modulus::exact());
    for (std::uint64_t n = 0; n <= 12; ++n)
        CHECK(t.series.integer_at(n) == enumerate_frobenius3(n));
}

TEST_CASE("a series values") {
    CphiTable a = a_series(14, Modulus::exact());
    CHECK(a.flavor == Flavor::ASeries);
    const std::int64_t expect[] = {1, 3, 9, 23, 54, 117, 245, 486, 936};
    for (std::size_t n = 0; n < 9; ++n)
        CHECK(a.series.integer_at(n) == expect[n]);
    CHECK(a.series.integer_at(13) == 16875);
    CHECK(a.series.integer_at(13) % 625 == 0);
}

TEST_CASE("cphi3 minus cphibar3 is the partition ladder") {
    CphiTable c = cphi3_series(120, Modulus::exact());
    CphiTable b = cphibar3_series(120, Modulus::exact());
    for (std::size_t n = 0; n < 120; ++n) {
        mpz_class diff = c.series.integer_at(n) - b.series.integer_at(n);
        if (n % 3 == 0)
            CHECK(diff == partition_p(static_cast<std::int64_t>(n / 3)));
        else
            CHECK(diff == 0);
    }
}

TEST_CASE("modular tables agree with exact tables") {
    CphiTable ce = cphi3_series(400, Modulus::exact());
    CphiTable cm = cphi3_series(400, Modulus::mod(625));
    for (std::size_t n = 0; n < 400; ++n)
        CHECK(mpz_class(ce.series.integer_at(n) % 625) ==
              cm.series.residue_at(n));

    CphiTable ae = a_series(400, Modulus::exact());
    CphiTable am = a_series(400, Modulus::mod(7315));
    for (std::size_t n = 0; n < 400; ++n)
        CHECK(mpz_class(ae.series.integer_at(n) % 7315) ==
              am.series.residue_at(n));
}

TEST_CASE("jacobi decomposition holds") {
    DecompositionReport exact = jacobi_decomposition_check(2000, Modulus::exact());
    CHECK(exact.holds);
    CHECK(exact.checked == 2000);
    CHECK(!exact.failure_index.has_value());

    DecompositionReport mod = jacobi_decomposition_check(3000, Modulus::mod(625));
    CHECK(mod.holds);
    CHECK(mod.checked == 3000);

    // n = 10 by hand: cphibar3(10) = 9 (a(9) - 3 a(0))
    CphiTable a = a_series(10, Modulus::exact());
    CphiTable b = cphibar3_series(11, Modulus::exact());
    CHECK(b.series.integer_at(10) ==
          9 * (a.series.integer_at(9) - 3 * a.series.integer_at(0)));

    DecompositionReport tiny = jacobi_decomposition_check(1, Modulus::exact());
    CHECK(tiny.holds);
    DecompositionReport empty = jacobi_decomposition_check(0, Modulus::exact());
    CHECK(empty.holds);
    CHECK(empty.checked == 0);
}

TEST_CASE("residue lemma") {
    ResidueLemma lm = residue_lemma();
    CHECK(lm.offsets == std::set<std::uint64_t>{1, 10, 28});
    CHECK(lm.target_classes == std::set<std::uint64_t>{13, 22, 31, 40});
}

TEST_CASE("empty truncations") {
    CHECK(cphibar3_series(0, Modulus::exact()).truncation() == 0);
    CHECK(cphi3_series(0, Modulus::mod(5)).truncation() == 0);
    CHECK(a_series(0, Modulus::exact()).truncation() == 0);
    CHECK(cphi3_series(1, Modulus::exact()).series.integer_at(0) == 1);
    CHECK(cphibar3_series(1, Modulus::exact()).series.integer_at(0) == 0);
}

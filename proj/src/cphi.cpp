#include "etaq/cphi.hpp"

#include "etaq/ntheory.hpp"

#include <set>
#include <string>
#include <vector>

namespace etaq {

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Cphi3: return "cphi3";
    case Flavor::Cphibar3: return "cphibar3";
    case Flavor::ASeries: return "a_series";
    case Flavor::Raw: return "raw";
    }
    throw Error("unknown flavor");
}

Flavor flavor_from_name(const std::string& name) {
    if (name == "cphi3") return Flavor::Cphi3;
    if (name == "cphibar3") return Flavor::Cphibar3;
    if (name == "a_series") return Flavor::ASeries;
    if (name == "raw") return Flavor::Raw;
    throw ParseError("unknown flavor name: " + name);
}

CphiTable cphibar3_series(std::size_t trunc, Modulus m) {
    if (trunc <= 1) return {Flavor::Cphibar3, Series::zero(trunc, m)};
    std::size_t inner = trunc - 1;
    Series s = densify(jacobi_cube_series(inner, 9), inner, m);
    s = div_sparse(s, euler_series(inner, 3));
    for (int i = 0; i < 3; ++i) s = div_sparse(s, euler_series(inner, 1));
    s = shift(scale(s, 9), 1);
    return {Flavor::Cphibar3, std::move(s)};
}

CphiTable cphi3_series(std::size_t trunc, Modulus m) {
    Series bar = cphibar3_series(trunc, m).series;
    std::size_t np = (trunc + 2) / 3;
    if (m.is_exact()) {
        std::vector<mpz_class> c(trunc);
        for (std::size_t i = 0; i < trunc; ++i) c[i] = bar.integer_at(i);
        std::vector<mpz_class> p = partition_table(np);
        for (std::size_t j = 0; j < np; ++j) c[3 * j] += p[j];
        return {Flavor::Cphi3, Series::from_exact(std::move(c))};
    }
    std::uint32_t mv = m.value();
    std::vector<std::uint32_t> c(trunc);
    for (std::size_t i = 0; i < trunc; ++i) c[i] = bar.residue_at(i);
    std::vector<std::uint32_t> p = partition_table_mod(np, mv);
    for (std::size_t j = 0; j < np; ++j) {
        std::uint64_t v = c[3 * j] + static_cast<std::uint64_t>(p[j]);
        c[3 * j] = static_cast<std::uint32_t>(v >= mv ? v - mv : v);
    }
    return {Flavor::Cphi3, Series::from_residues(std::move(c), m)};
}

CphiTable a_series(std::size_t trunc, Modulus m) {
    if (trunc == 0) return {Flavor::ASeries, Series::zero(0, m)};
    Series s = div_sparse(Series::one(trunc, m), jacobi_cube_series(trunc, 1));
    s = div_sparse(s, euler_series(trunc, 3));
    return {Flavor::ASeries, std::move(s)};
}

DecompositionReport jacobi_decomposition_check(std::size_t bound, Modulus m) {
    CphiTable lhs = cphibar3_series(bound, m);
    CphiTable a = a_series(bound, m);
    DecompositionReport rep;
    rep.holds = true;
    rep.checked = bound;
    if (m.is_exact()) {
        for (std::size_t n = 0; n < bound; ++n) {
            mpz_class rhs = 0;
            for (std::uint64_t k = 0;; ++k) {
                std::uint64_t tri = 9 * k * (k + 1) / 2;
                if (tri + 1 > n) break;
                mpz_class term = (2 * k + 1) * a.series.integer_at(n - 1 - tri);
                if (k & 1)
                    rhs -= term;
                else
                    rhs += term;
            }
            rhs *= 9;
            if (rhs != lhs.series.integer_at(n)) {
                rep.holds = false;
                rep.failure_index = n;
                rep.checked = n;
                break;
            }
        }
        return rep;
    }
    std::uint32_t mv = m.value();
    for (std::size_t n = 0; n < bound; ++n) {
        std::uint64_t pos = 0, neg = 0;
        for (std::uint64_t k = 0;; ++k) {
            std::uint64_t tri = 9 * k * (k + 1) / 2;
            if (tri + 1 > n) break;
            std::uint64_t term =
                (2 * k + 1) % mv * a.series.residue_at(n - 1 - tri) % mv;
            if (k & 1)
                neg += term;
            else
                pos += term;
        }
        std::uint64_t rhs = (9 * (pos % mv + 2 * mv - neg % mv)) % mv;
        if (rhs != lhs.series.residue_at(n)) {
            rep.holds = false;
            rep.failure_index = n;
            rep.checked = n;
            break;
        }
    }
    return rep;
}

ResidueLemma residue_lemma() {
    std::set<std::uint64_t> offsets;
    for (std::uint64_t k = 0; k < 90; ++k)
        offsets.insert((1 + 9 * k * (k + 1) / 2) % 45);
    if (offsets != std::set<std::uint64_t>{1, 10, 28})
        throw Error("triangular-number residues mod 45 are not {1, 10, 28}");
    std::set<std::uint64_t> targets;
    for (std::uint64_t o : offsets) {
        targets.insert((23 + 45 - o) % 45);
        targets.insert((41 + 45 - o) % 45);
    }
    if (targets != std::set<std::uint64_t>{13, 22, 31, 40})
        throw Error("shifted residue classes mod 45 are not {13, 22, 31, 40}");
    return {std::move(offsets), std::move(targets)};
}

} // namespace etaq

#include "etaq/operators.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace etaq {
namespace {

Series extract_stride(const Series& s, std::uint64_t t) {
    std::size_t n = s.truncation() / t;
    if (s.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = s.integer_at(i * t);
        return Series::from_exact(std::move(c));
    }
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = s.residue_at(i * t);
    return Series::from_residues(std::move(c), s.modulus());
}

} // namespace

FormExpansion op_U(const FormExpansion& fx, std::uint64_t t) {
    if (t == 0) throw Error("U(t) requires t >= 1");
    if (fx.level % t != 0)
        throw Error("U(" + std::to_string(t) + ") requires t to divide the "
                    "level " + std::to_string(fx.level));
    FormExpansion out = fx;
    out.series = extract_stride(fx.series, t);
    return out;
}

FormExpansion op_V(const FormExpansion& fx, std::uint64_t t) {
    if (t == 0) throw Error("V(t) requires t >= 1");
    FormExpansion out = fx;
    out.series = dilate(fx.series, t);
    out.level = fx.level * t;
    return out;
}

FormExpansion op_twist(const FormExpansion& fx, const CharacterSpec& chi2) {
    std::uint64_t m2 = chi2.conductor();
    FormExpansion out = fx;
    out.level = fx.level * m2 * m2;
    const Series& s = fx.series;
    std::size_t n = s.truncation();
    if (s.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            int chi = character_eval(chi2, static_cast<std::int64_t>(i));
            if (chi > 0)
                c[i] = s.integer_at(i);
            else if (chi < 0)
                c[i] = -s.integer_at(i);
        }
        out.series = Series::from_exact(std::move(c));
        return out;
    }
    std::uint32_t m = s.modulus().value();
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        int chi = character_eval(chi2, static_cast<std::int64_t>(i));
        std::uint32_t v = s.residue_at(i);
        c[i] = chi > 0 ? v : (chi < 0 && v ? m - v : 0);
    }
    out.series = Series::from_residues(std::move(c), s.modulus());
    return out;
}

FormExpansion form_add(const FormExpansion& a, const FormExpansion& b) {
    if (a.weight != b.weight)
        throw Error("cannot add forms of different weights");
    if (!(a.character == b.character))
        throw Error("cannot add forms with different characters");
    FormExpansion out;
    out.series = add(a.series, b.series);
    out.weight = a.weight;
    out.level = std::lcm(a.level, b.level);
    out.character = a.character;
    return out;
}

FormExpansion build_filter_series(const FormExpansion& fx, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t t) {
    if (a == 0 || b == 0 || t == 0 || fx.level % a != 0 || fx.level % b != 0 ||
        b != a * t)
        throw Error("filter requires a | level, b | level, and b = a*t");
    FormExpansion ua = op_U(fx, a);
    FormExpansion ub = op_V(op_U(fx, b), t);
    FormExpansion out;
    out.series = sub(ua.series, ub.series);
    out.weight = fx.weight;
    out.level = std::lcm(ua.level, ub.level);
    out.character = fx.character;
    return out;
}

} // namespace etaq

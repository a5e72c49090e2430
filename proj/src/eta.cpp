#include "etaq/eta.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace etaq {
namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::int64_t parse_int(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty integer token");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: \"" + tok + "\"");
    }
    if (pos != tok.size())
        throw ParseError("trailing characters in integer: \"" + tok + "\"");
    return v;
}

std::uint64_t parse_uint(const std::string& tok) {
    std::int64_t v = parse_int(tok);
    if (v < 0) throw ParseError("expected a positive integer: \"" + tok + "\"");
    return static_cast<std::uint64_t>(v);
}

} // namespace

EtaQuotient::EtaQuotient(std::uint64_t level,
                         std::map<std::uint64_t, std::int64_t> exponents,
                         std::int64_t scalar)
    : level_(level), exponents_(std::move(exponents)), scalar_(scalar) {
    if (level_ == 0) throw Error("level must be positive");
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->first == 0 || level_ % it->first != 0)
            throw Error("exponent key " + std::to_string(it->first) +
                        " does not divide level " + std::to_string(level_));
        if (it->second == 0)
            it = exponents_.erase(it);
        else
            ++it;
    }
}

EtaQuotient parse_eta_quotient(std::string_view text) {
    std::string compact = strip_spaces(text);
    auto sections = split(compact, ';');
    if (sections.size() < 2 || sections.size() > 3)
        throw ParseError("expected \"N=...; d:r, ...[; scalar=...]\"");
    if (sections[0].rfind("N=", 0) != 0)
        throw ParseError("level section must start with \"N=\": \"" +
                         sections[0] + "\"");
    std::uint64_t level = parse_uint(sections[0].substr(2));
    std::map<std::uint64_t, std::int64_t> exponents;
    if (!sections[1].empty()) {
        for (const auto& pair : split(sections[1], ',')) {
            auto kv = split(pair, ':');
            if (kv.size() != 2)
                throw ParseError("expected \"delta:exponent\": \"" + pair +
                                 "\"");
            std::uint64_t delta = parse_uint(kv[0]);
            if (exponents.count(delta))
                throw ParseError("duplicate divisor " + std::to_string(delta));
            exponents[delta] = parse_int(kv[1]);
        }
    }
    std::int64_t scalar = 1;
    if (sections.size() == 3) {
        if (sections[2].rfind("scalar=", 0) != 0)
            throw ParseError("scalar section must start with \"scalar=\": \"" +
                             sections[2] + "\"");
        scalar = parse_int(sections[2].substr(7));
    }
    return EtaQuotient(level, std::move(exponents), scalar);
}

std::string to_text(const EtaQuotient& e) {
    std::ostringstream os;
    os << "N=" << e.level() << "; ";
    bool first = true;
    for (const auto& [delta, r] : e.exponents()) {
        if (!first) os << ", ";
        os << delta << ":" << r;
        first = false;
    }
    os << "; scalar=" << e.scalar();
    return os.str();
}

mpq_class eq_weight(const EtaQuotient& e) {
    std::int64_t sum = 0;
    for (const auto& [delta, r] : e.exponents()) sum += r;
    mpq_class w(sum, 2);
    w.canonicalize();
    return w;
}

EtaConditionReport eq_check_conditions(const EtaQuotient& e) {
    EtaConditionReport rep;
    std::int64_t sum_r = 0;
    rep.sum_delta_r = 0;
    rep.sum_codelta_r = 0;
    for (const auto& [delta, r] : e.exponents()) {
        sum_r += r;
        rep.sum_delta_r += static_cast<std::int64_t>(delta) * r;
        rep.sum_codelta_r += static_cast<std::int64_t>(e.level() / delta) * r;
    }
    rep.weight = eq_weight(e);
    rep.weight_integral = sum_r % 2 == 0;
    rep.delta_sum_ok = rep.sum_delta_r % 24 == 0;
    rep.codelta_sum_ok = rep.sum_codelta_r % 24 == 0;
    return rep;
}

CharacterSpec eq_character(const EtaQuotient& e) {
    auto rep = eq_check_conditions(e);
    if (!rep.pass())
        throw Error("eta-quotient fails the admissibility conditions");
    // Parity of each prime exponent in s = prod delta^{r_delta}.
    std::map<std::uint64_t, std::int64_t> parity;
    for (const auto& [delta, r] : e.exponents()) {
        std::uint64_t v = delta;
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            while (v % p == 0) {
                v /= p;
                parity[p] += r;
            }
        }
        if (v > 1) parity[v] += r;
    }
    std::int64_t sf = 1;
    for (const auto& [p, exp] : parity)
        if (exp % 2 != 0) sf *= static_cast<std::int64_t>(p);
    // (-1)^k with k the (integral) weight
    mpz_class k2 = rep.weight.get_num();
    if (mpz_odd_p(k2.get_mpz_t())) sf = -sf;
    if (sf == 1) return CharacterSpec::trivial(e.level());
    return CharacterSpec::kronecker(sf);
}

mpq_class eq_cusp_order(const EtaQuotient& e, std::uint64_t d) {
    std::uint64_t n = e.level();
    if (d == 0 || n % d != 0)
        throw Error("cusp divisor " + std::to_string(d) +
                    " does not divide level " + std::to_string(n));
    mpq_class acc = 0;
    std::uint64_t g_dn = std::gcd(d, n / d);
    for (const auto& [delta, r] : e.exponents()) {
        std::uint64_t g = std::gcd(d, delta);
        mpq_class term(static_cast<long>(g * g) * r,
                       static_cast<unsigned long>(g_dn * d * delta));
        term.canonicalize();
        acc += term;
    }
    mpq_class scale(static_cast<unsigned long>(n), 24ul);
    scale.canonicalize();
    return acc * scale;
}

CuspOrderTable eq_cusp_orders(const EtaQuotient& e) {
    CuspOrderTable table;
    table.all_positive = true;
    for (std::uint64_t d : divisors_of(e.level())) {
        mpq_class ord = eq_cusp_order(e, d);
        if (ord <= 0) table.all_positive = false;
        table.orders.emplace_back(d, std::move(ord));
    }
    return table;
}

bool eq_is_cusp_form(const EtaQuotient& e) {
    return eq_cusp_orders(e).all_positive;
}

std::int64_t eq_leading_exponent(const EtaQuotient& e) {
    std::int64_t sum = 0;
    for (const auto& [delta, r] : e.exponents())
        sum += static_cast<std::int64_t>(delta) * r;
    if (sum % 24 != 0)
        throw FractionalExponentError(
            "sum of delta * r_delta is " + std::to_string(sum) +
            ", not divisible by 24; the expansion has a fractional leading "
            "power");
    return sum / 24;
}

FormExpansion eq_expand(const EtaQuotient& e, std::size_t trunc, Modulus m) {
    std::int64_t lead = eq_leading_exponent(e);
    if (lead < 0)
        throw Error("negative leading exponent: Laurent expansions are not "
                    "supported");
    FormExpansion fx;
    fx.weight = eq_weight(e);
    fx.level = e.level();
    fx.character = eq_check_conditions(e).pass() ? eq_character(e)
                                                 : CharacterSpec::trivial(e.level());
    std::uint64_t ulead = static_cast<std::uint64_t>(lead);
    if (ulead >= trunc) {
        fx.series = Series::zero(trunc, m);
        return fx;
    }
    std::size_t inner = trunc - ulead;
    Series acc = Series::one(inner, m);
    for (const auto& [delta, r] : e.exponents()) {
        Series base = densify(euler_series(inner, delta), inner, m);
        Series factor = r > 0 ? pow(base, static_cast<std::uint64_t>(r))
                              : pow(invert(base), static_cast<std::uint64_t>(-r));
        acc = mul(acc, factor);
    }
    acc = scale(acc, e.scalar());
    fx.series = shift(acc, ulead);
    return fx;
}

EtaReduction eq_reduce_mod(const EtaQuotient& e, std::uint32_t l,
                           std::uint32_t s) {
    if (l < 2) throw Error("reduction prime must be at least 2");
    if (s == 0) throw Error("reduction exponent must be positive");
    std::int64_t ls = 1, ls1 = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        ls *= l;
        if (ls > (std::int64_t{1} << 31))
            throw Error("l^s exceeds the supported word range");
    }
    for (std::uint32_t i = 0; i + 1 < s; ++i) ls1 *= l;

    std::map<std::uint64_t, std::int64_t> exps = e.exponents();
    bool reduced = false;
    for (std::uint64_t delta : divisors_of(e.level())) {
        std::uint64_t ld = delta * l;
        if (e.level() % ld != 0) continue;
        auto it = exps.find(ld);
        if (it == exps.end() || it->second >= 0) continue;
        std::int64_t c = -it->second / ls1;
        if (c < 1) continue;
        exps[delta] -= c * ls;
        it->second += c * ls1;
        reduced = true;
    }
    return {EtaQuotient(e.level(), std::move(exps), e.scalar()), reduced};
}

} // namespace etaq

#include "etaq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "etaq/operators.hpp"
#include "etaq/runtime.hpp"

namespace etaq {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

struct Hit {
    std::uint64_t n = 0;
    std::uint32_t value = 0;
};

std::optional<Hit> scan_block(const Series& s, std::uint64_t step,
                              std::uint64_t offset, std::uint32_t m,
                              std::uint64_t lo, std::uint64_t hi) {
    if (s.modulus().is_exact()) {
        for (std::uint64_t n = lo; n < hi; ++n) {
            const mpz_class& c = s.integer_at(step * n + offset);
            auto r = static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), m));
            if (r) return Hit{n, r};
        }
        return std::nullopt;
    }
    std::uint32_t tm = s.modulus().value();
    if (tm == m) {
        for (std::uint64_t n = lo; n < hi; ++n)
            if (std::uint32_t r = s.residue_at(step * n + offset))
                return Hit{n, r};
    } else {
        for (std::uint64_t n = lo; n < hi; ++n)
            if (std::uint32_t r = s.residue_at(step * n + offset) % m)
                return Hit{n, r};
    }
    return std::nullopt;
}

/// Core scan; block-parallel for long ranges, first (minimal) hit wins.
VerificationReport scan_claim(const Series& s, const CongruenceClaim& claim) {
    auto t0 = Clock::now();
    if (claim.step == 0) throw Error("claim step must be >= 1");
    if (claim.offset >= claim.step)
        throw Error("claim offset must lie in [0, step)");
    if (claim.modulus == 0) throw Error("claim modulus must be >= 1");
    std::uint64_t top = claim.step * claim.bound + claim.offset;
    if (top >= s.truncation())
        throw TruncationError(
            "scanning step " + std::to_string(claim.step) + ", offset " +
            std::to_string(claim.offset) + " up to n = " +
            std::to_string(claim.bound) + " needs truncation >= " +
            std::to_string(top + 1) + ", table has " +
            std::to_string(s.truncation()));
    if (!s.modulus().is_exact() && claim.modulus > 1 &&
        s.modulus().value() % claim.modulus != 0)
        throw ModulusMismatch("claim modulus " + std::to_string(claim.modulus) +
                              " does not divide table modulus " +
                              std::to_string(s.modulus().value()));

    VerificationReport rep;
    rep.claim = claim;
    rep.truncation = s.truncation();

    std::optional<Hit> hit;
    std::uint64_t total = claim.bound + 1;
    if (claim.modulus > 1) {
        unsigned threads = runtime::thread_count();
        if (threads <= 1 || total < (1u << 14)) {
            hit = scan_block(s, claim.step, claim.offset, claim.modulus, 0,
                             total);
        } else {
            std::uint64_t chunk = (total + threads - 1) / threads;
            std::vector<std::future<std::optional<Hit>>> futs;
            for (std::uint64_t lo = 0; lo < total; lo += chunk) {
                std::uint64_t hi = std::min(total, lo + chunk);
                futs.push_back(
                    std::async(std::launch::async, [&s, &claim, lo, hi] {
                        return scan_block(s, claim.step, claim.offset,
                                          claim.modulus, lo, hi);
                    }));
            }
            for (auto& f : futs) {
                auto r = f.get();
                if (!hit && r) hit = r;
            }
        }
    }

    if (hit) {
        rep.status = VerifyStatus::Counterexample;
        Witness w;
        w.n = hit->n;
        w.index = claim.step * hit->n + claim.offset;
        w.value = hit->value;
        rep.witness = std::move(w);
        rep.checked_count = hit->n + 1;
        rep.ord_lower_bound = claim.step * hit->n + claim.offset;
    } else {
        rep.status = VerifyStatus::VerifiedToBound;
        rep.checked_count = total;
        rep.ord_lower_bound = top + 1;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::string describe(const VerificationReport& r) {
    std::string family = r.claim.flavor == Flavor::Raw
                             ? std::string("coefficient")
                             : flavor_name(r.claim.flavor);
    std::string prog = std::to_string(r.claim.step) + "n+" +
                       std::to_string(r.claim.offset);
    if (r.verified())
        return family + "(" + prog + ") = 0 mod " +
               std::to_string(r.claim.modulus) + " for all n <= " +
               std::to_string(r.claim.bound);
    const Witness& w = *r.witness;
    return family + "(" + prog + ") mod " + std::to_string(r.claim.modulus) +
           " fails at n = " + std::to_string(w.n) + " (index " +
           std::to_string(w.index) + ", residue " + w.value.get_str() + ")";
}

CheckResult check_series(std::string label, const Series& s,
                         const CongruenceClaim& claim) {
    CheckResult cr;
    cr.label = std::move(label);
    VerificationReport rep = verify_progression(s, claim);
    cr.passed = rep.verified();
    cr.detail = describe(rep);
    cr.report = std::move(rep);
    return cr;
}

CheckResult check_table(std::string label, const CphiTable& t,
                        const CongruenceClaim& claim) {
    CheckResult cr;
    cr.label = std::move(label);
    VerificationReport rep = verify_progression(t, claim);
    cr.passed = rep.verified();
    cr.detail = describe(rep);
    cr.report = std::move(rep);
    return cr;
}

CphiTable make_table(Flavor f, std::size_t trunc, Modulus m) {
    switch (f) {
    case Flavor::Cphi3: return cphi3_series(trunc, m);
    case Flavor::Cphibar3: return cphibar3_series(trunc, m);
    case Flavor::ASeries: return a_series(trunc, m);
    case Flavor::Raw: break;
    }
    throw Error("no table construction for raw series");
}

} // namespace

std::string tier_name(Tier t) { return t == Tier::Full ? "full" : "smoke"; }

Tier tier_from_name(const std::string& name) {
    if (name == "smoke") return Tier::Smoke;
    if (name == "full") return Tier::Full;
    throw ParseError("unknown tier name: " + name);
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
    return claim == other.claim && status == other.status &&
           witness == other.witness && checked_count == other.checked_count &&
           ord_lower_bound == other.ord_lower_bound &&
           truncation == other.truncation;
}

VerificationReport verify_progression(const Series& table,
                                      const CongruenceClaim& claim) {
    if (claim.flavor != Flavor::Raw)
        throw Error("series scans take raw claims; use a table for " +
                    flavor_name(claim.flavor));
    return scan_claim(table, claim);
}

VerificationReport verify_progression(const CphiTable& table,
                                      const CongruenceClaim& claim) {
    if (claim.flavor != table.flavor)
        throw Error("claim flavor " + flavor_name(claim.flavor) +
                    " does not match table flavor " +
                    flavor_name(table.flavor));
    return scan_claim(table.series, claim);
}

bool ScriptReport::verified() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

ScriptReport verify_thm31(Tier tier) {
    auto t0 = Clock::now();
    bool full = tier == Tier::Full;
    const std::uint64_t r_bound = full ? 45541 : 4554;
    const std::size_t g_trunc = full ? 409905 : 41040;
    const std::uint64_t a_bound = full ? 409829 : 40982;
    const std::size_t cross_trunc = 2000;
    const std::uint64_t direct_bound = full ? 2000 : 200;
    Modulus m625 = Modulus::mod(625);

    ScriptReport sr;
    sr.script = "thm31";
    sr.tier = tier;

    EtaQuotient g_full(135, {{1, 1247}, {3, -1}, {5, -250}, {45, 13}, {135, 3}});
    EtaReduction red = eq_reduce_mod(g_full, 5, 4);
    EtaQuotient g_red(135, {{1, -3}, {3, -1}, {45, 13}, {135, 3}});
    {
        CheckResult cr;
        cr.label = "reduce-mod-625";
        cr.passed = red.reduced && red.quotient == g_red;
        cr.detail = (cr.passed ? "reduces to " : "unexpected reduction: ") +
                    to_text(red.quotient);
        sr.checks.push_back(std::move(cr));
    }

    {
        ResidueLemma lm = residue_lemma(); // throws when the sets are off
        std::string classes;
        for (std::uint64_t c : lm.target_classes)
            classes += (classes.empty() ? "" : ", ") + std::to_string(c);
        CheckResult cr;
        cr.label = "residue-classes";
        cr.passed = true;
        cr.detail = "target classes mod 45: {" + classes + "}";
        sr.checks.push_back(std::move(cr));
    }

    FormExpansion fx = eq_expand(red.quotient, g_trunc, m625);
    FormExpansion filter = build_filter_series(fx, 9, 45, 5);
    sr.checks.push_back(check_series("filter-9-45-5", filter.series,
                                     {Flavor::Raw, 1, 0, 625, r_bound}));

    CphiTable a = a_series(a_bound + 1, m625);
    for (std::uint64_t gamma : {13ull, 22ull, 31ull, 40ull})
        sr.checks.push_back(check_table(
            "a-45n" + std::to_string(gamma), a,
            {Flavor::ASeries, 45, gamma, 625, (a_bound - gamma) / 45}));

    {
        FormExpansion full_fx = eq_expand(g_full, cross_trunc, m625);
        FormExpansion red_fx = eq_expand(red.quotient, cross_trunc, m625);
        CheckResult cr;
        cr.label = "reduced-vs-full";
        cr.passed = full_fx.series == red_fx.series;
        cr.detail = cr.passed ? "expansions agree mod 625 to " +
                                    std::to_string(cross_trunc) + " terms"
                              : "expansions differ mod 625";
        sr.checks.push_back(std::move(cr));
    }

    CphiTable c3 = cphi3_series(45 * direct_bound + 42, m625);
    sr.checks.push_back(check_table("cphi3-45n23", c3,
                                    {Flavor::Cphi3, 45, 23, 625, direct_bound}));
    sr.checks.push_back(check_table("cphi3-45n41", c3,
                                    {Flavor::Cphi3, 45, 41, 625, direct_bound}));

    sr.elapsed_ms = ms_since(t0);
    return sr;
}

ScriptReport verify_thm12(Tier tier) {
    auto t0 = Clock::now();
    bool full = tier == Tier::Full;
    const std::size_t f_trunc = full ? 135030 : 13530;
    const std::uint64_t src_bound = full ? 135000 : 13500;
    const std::size_t cross_trunc = full ? 5000 : 2000;
    Modulus m25 = Modulus::mod(25);

    ScriptReport sr;
    sr.script = "thm12";
    sr.tier = tier;

    EtaQuotient f_full(225, {{1, 47}, {3, -1}, {5, -10}, {9, 3}, {75, 1}}, 9);
    EtaReduction red = eq_reduce_mod(f_full, 5, 2);
    EtaQuotient f_red(225, {{1, -3}, {3, -1}, {9, 3}, {75, 1}}, 9);
    {
        CheckResult cr;
        cr.label = "reduce-mod-25";
        cr.passed = red.reduced && red.quotient == f_red;
        cr.detail = (cr.passed ? "reduces to " : "unexpected reduction: ") +
                    to_text(red.quotient);
        sr.checks.push_back(std::move(cr));
    }

    FormExpansion fx = eq_expand(red.quotient, f_trunc, m25);
    FormExpansion f2 = op_twist(fx, CharacterSpec::legendre(3));
    FormExpansion F = form_add(fx, f2);
    FormExpansion FU = op_U(F, 25);
    sr.checks.push_back(check_series(
        "u25-scan", FU.series,
        {Flavor::Raw, 1, 0, 25, FU.series.truncation() - 1}));

    sr.checks.push_back(check_series("c-75n", fx.series,
                                     {Flavor::Raw, 75, 0, 25, src_bound / 75}));
    sr.checks.push_back(
        check_series("c-75n25", fx.series,
                     {Flavor::Raw, 75, 25, 25, (src_bound - 25) / 75}));

    std::uint64_t bound22 = (src_bound - 22) / 75;
    std::uint64_t bound72 = (src_bound - 72) / 75;
    std::size_t tab_trunc = static_cast<std::size_t>(
        std::max(75 * bound22 + 22, 75 * bound72 + 72) + 1);
    CphiTable c3 = cphi3_series(tab_trunc, m25);
    CphiTable cb = cphibar3_series(tab_trunc, m25);
    sr.checks.push_back(
        check_table("cphi3-75n22", c3, {Flavor::Cphi3, 75, 22, 25, bound22}));
    sr.checks.push_back(check_table("cphibar3-75n72", cb,
                                    {Flavor::Cphibar3, 75, 72, 25, bound72}));

    {
        FormExpansion full_fx = eq_expand(f_full, cross_trunc, m25);
        FormExpansion red_fx = eq_expand(red.quotient, cross_trunc, m25);
        CheckResult cr;
        cr.label = "reduced-vs-full";
        cr.passed = full_fx.series == red_fx.series;
        cr.detail = cr.passed ? "expansions agree mod 25 to " +
                                    std::to_string(cross_trunc) + " terms"
                              : "expansions differ mod 25";
        sr.checks.push_back(std::move(cr));
    }

    sr.elapsed_ms = ms_since(t0);
    return sr;
}

ScriptReport verify_base_congruences(std::uint64_t bound) {
    auto t0 = Clock::now();
    ScriptReport sr;
    sr.script = "base";
    sr.tier = bound >= 1000 ? Tier::Full : Tier::Smoke;

    const struct {
        std::uint64_t step, offset;
        std::uint32_t m;
    } cases[] = {{45, 23, 5},
                 {45, 41, 5},
                 {63, 50, 7},
                 {99, 95, 11},
                 {171, 50, 19}};
    std::size_t trunc = 0;
    for (const auto& c : cases)
        trunc = std::max<std::size_t>(trunc, c.step * bound + c.offset + 1);
    CphiTable c3 = cphi3_series(trunc, Modulus::mod(5u * 7 * 11 * 19));
    for (const auto& c : cases)
        sr.checks.push_back(check_table(
            "mod" + std::to_string(c.m) + "-" + std::to_string(c.step) + "n" +
                std::to_string(c.offset),
            c3, {Flavor::Cphi3, c.step, c.offset, c.m, bound}));

    sr.elapsed_ms = ms_since(t0);
    return sr;
}

VerificationReport verify_prop25(std::uint32_t l, std::uint32_t s,
                                 std::size_t trunc) {
    if (l < 2 || s < 1) throw Error("need l >= 2 and s >= 1");
    if (trunc == 0) throw Error("need trunc >= 1");
    std::uint64_t ls = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        ls *= l;
        if (ls > 0x7fffffffULL) throw Error("l^s does not fit a 32-bit modulus");
    }
    Modulus m = Modulus::mod(static_cast<std::uint32_t>(ls));
    Series e1 = densify(euler_series(trunc, 1), trunc, m);
    Series el = densify(euler_series(trunc, l), trunc, m);
    Series prod = mul(pow(e1, ls), invert(pow(el, ls / l)));
    Series diff = sub(prod, Series::one(trunc, m));
    return verify_progression(
        diff,
        {Flavor::Raw, 1, 0, static_cast<std::uint32_t>(ls), trunc - 1});
}

ScriptReport verify_all(Tier tier) {
    auto t0 = Clock::now();
    ScriptReport sr;
    sr.script = "all";
    sr.tier = tier;
    auto absorb = [&sr](const ScriptReport& sub) {
        for (const CheckResult& c : sub.checks) {
            CheckResult copy = c;
            copy.label = sub.script + "/" + c.label;
            sr.checks.push_back(std::move(copy));
        }
    };
    absorb(verify_thm31(tier));
    absorb(verify_thm12(tier));
    absorb(verify_base_congruences(1000));
    bool full = tier == Tier::Full;
    using P25 = std::tuple<std::uint32_t, std::uint32_t, std::size_t>;
    for (auto [l, s, trunc] :
         {P25{5, 2, full ? 10000u : 1000u}, P25{5, 4, full ? 2000u : 200u}}) {
        VerificationReport rep = verify_prop25(l, s, trunc);
        CheckResult cr;
        cr.label = "prop25-" + std::to_string(l) + "-" + std::to_string(s);
        cr.passed = rep.verified();
        cr.detail = describe(rep);
        cr.report = std::move(rep);
        sr.checks.push_back(std::move(cr));
    }
    sr.elapsed_ms = ms_since(t0);
    return sr;
}

SearchResult search_congruences(const SearchParams& params) {
    auto t0 = Clock::now();
    if (params.flavor == Flavor::Raw)
        throw Error("search needs a coefficient family, not raw");
    if (params.steps.empty()) throw Error("search needs at least one step");
    if (params.modulus == 0) throw Error("search modulus must be >= 1");

    auto offsets_for = [&params](std::uint64_t step) {
        std::vector<std::uint64_t> out;
        if (params.offsets) {
            for (std::uint64_t o : *params.offsets)
                if (o < step) out.push_back(o);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        } else {
            for (std::uint64_t o = 0; o < step; ++o) out.push_back(o);
        }
        return out;
    };

    std::size_t trunc = 0;
    for (std::uint64_t step : params.steps) {
        if (step == 0) throw Error("search steps must be >= 1");
        auto offs = offsets_for(step);
        if (offs.empty()) continue;
        trunc = std::max<std::size_t>(trunc,
                                      step * params.limit + offs.back() + 1);
    }
    if (trunc == 0) throw Error("no admissible (step, offset) pair to scan");

    SearchResult out;
    out.params = params;
    if (params.modulus == 1) {
        for (std::uint64_t step : params.steps)
            for (std::uint64_t o : offsets_for(step))
                out.candidates.push_back(
                    {params.flavor, step, o, params.modulus, params.limit});
        out.elapsed_ms = ms_since(t0);
        return out;
    }

    CphiTable table =
        make_table(params.flavor, trunc, Modulus::mod(params.modulus));
    for (std::uint64_t step : params.steps)
        for (std::uint64_t o : offsets_for(step)) {
            CongruenceClaim claim{params.flavor, step, o, params.modulus,
                                  params.limit};
            if (verify_progression(table, claim).verified())
                out.candidates.push_back(claim);
        }
    out.elapsed_ms = ms_since(t0);
    return out;
}

VerificationReport find_counterexample(Flavor flavor, std::uint64_t step,
                                       std::uint64_t offset,
                                       std::uint32_t modulus,
                                       std::uint64_t limit) {
    if (step == 0) throw Error("step must be >= 1");
    if (offset >= step) throw Error("offset must lie in [0, step)");
    if (modulus == 0) throw Error("modulus must be >= 1");
    CongruenceClaim claim{flavor, step, offset, modulus, limit};
    std::size_t trunc = step * limit + offset + 1;
    if (modulus == 1) {
        VerificationReport rep;
        rep.claim = claim;
        rep.status = VerifyStatus::VerifiedToBound;
        rep.checked_count = limit + 1;
        rep.ord_lower_bound = step * limit + offset + 1;
        rep.truncation = trunc;
        return rep;
    }
    CphiTable table = make_table(flavor, trunc, Modulus::mod(modulus));
    return verify_progression(table, claim);
}

} // namespace etaq

// Batch front end: expansion, quotient metadata, verification scripts,
// congruence search, Sturm bounds, coefficient tables.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "etaq/cphi.hpp"
#include "etaq/eta.hpp"
#include "etaq/io.hpp"
#include "etaq/ntheory.hpp"
#include "etaq/verify.hpp"

using namespace etaq;

namespace {

std::string character_text(const CharacterSpec& chi) {
    if (chi.is_trivial())
        return "trivial mod " + std::to_string(chi.conductor());
    return "kronecker(" + std::to_string(chi.squarefree_top()) + ") mod " +
           std::to_string(chi.conductor());
}

std::string claim_text(const CongruenceClaim& c) {
    std::string family =
        c.flavor == Flavor::Raw ? "coefficient" : flavor_name(c.flavor);
    return family + "(" + std::to_string(c.step) + "n+" +
           std::to_string(c.offset) + ") == 0 mod " +
           std::to_string(c.modulus) + " for n <= " + std::to_string(c.bound);
}

void print_report_human(const VerificationReport& r, std::ostream& os) {
    os << "claim: " << claim_text(r.claim) << "\n";
    if (r.verified()) {
        os << "status: verified (checked " << r.checked_count
           << " indices, ord lower bound " << r.ord_lower_bound << ")\n";
    } else {
        os << "status: counterexample at n = " << r.witness->n << " (index "
           << r.witness->index << ", residue " << r.witness->value.get_str()
           << ")\n";
    }
    os << "elapsed: " << r.elapsed_ms << " ms\n";
}

void print_script_human(const ScriptReport& r, std::ostream& os) {
    os << "script " << r.script << " (tier " << tier_name(r.tier)
       << "): " << (r.verified() ? "VERIFIED" : "FAILED") << " in "
       << r.elapsed_ms << " ms\n";
    for (const CheckResult& c : r.checks)
        os << "  " << (c.passed ? "ok  " : "FAIL") << "  " << c.label << ": "
           << c.detail << "\n";
}

Modulus modulus_from_flags(std::uint32_t m, bool exact) {
    if (exact && m != 0)
        throw ParseError("pass either --modulus or --exact, not both");
    if (m == 0) return Modulus::exact();
    return Modulus::mod(m);
}

int emit_series(const Series& s, const std::string& format,
                const nlohmann::json& meta) {
    if (format == "json") {
        nlohmann::json j = meta;
        j["series"] = to_json(s);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        write_csv(std::cout, s);
    } else {
        for (auto it = meta.begin(); it != meta.end(); ++it)
            std::cout << it.key() << ": "
                      << (it->is_string() ? it->get<std::string>() : it->dump())
                      << "\n";
        for (std::size_t n = 0; n < s.truncation(); ++n)
            std::cout << n << " " << s.coefficient(n).get_str() << "\n";
    }
    return 0;
}

int run_expand(const std::string& text, std::size_t trunc, std::uint32_t m,
               bool exact, const std::string& format) {
    EtaQuotient e = parse_eta_quotient(text);
    FormExpansion fx = eq_expand(e, trunc, modulus_from_flags(m, exact));
    nlohmann::json meta = {{"quotient", to_text(e)},
                           {"weight", fx.weight.get_str()},
                           {"level", fx.level},
                           {"character", character_text(fx.character)}};
    return emit_series(fx.series, format, meta);
}

int run_etainfo(const std::string& text, const std::string& format) {
    EtaQuotient e = parse_eta_quotient(text);
    EtaConditionReport cond = eq_check_conditions(e);
    CuspOrderTable cusps = eq_cusp_orders(e);
    std::optional<std::int64_t> lead;
    try {
        lead = eq_leading_exponent(e);
    } catch (const FractionalExponentError&) {
    }
    std::optional<std::string> character;
    if (cond.pass()) character = character_text(eq_character(e));

    if (format == "json") {
        nlohmann::json j = {
            {"quotient", to_text(e)},
            {"level", e.level()},
            {"weight", cond.weight.get_str()},
            {"sum_delta_r", cond.sum_delta_r},
            {"sum_codelta_r", cond.sum_codelta_r},
            {"conditions_pass", cond.pass()},
            {"character", character ? nlohmann::json(*character)
                                    : nlohmann::json(nullptr)},
            {"leading_exponent",
             lead ? nlohmann::json(*lead) : nlohmann::json(nullptr)},
            {"cusp_form", cusps.all_positive}};
        nlohmann::json orders = nlohmann::json::array();
        for (const auto& [d, ord] : cusps.orders)
            orders.push_back({{"d", d}, {"order", ord.get_str()}});
        j["cusp_orders"] = orders;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "weight," << cond.weight.get_str() << "\n"
                  << "level," << e.level() << "\n"
                  << "sum_delta_r," << cond.sum_delta_r << "\n"
                  << "sum_codelta_r," << cond.sum_codelta_r << "\n"
                  << "conditions_pass," << (cond.pass() ? 1 : 0) << "\n"
                  << "character," << (character ? *character : "undefined")
                  << "\n"
                  << "leading_exponent,"
                  << (lead ? std::to_string(*lead) : "undefined") << "\n"
                  << "cusp_form," << (cusps.all_positive ? 1 : 0) << "\n";
        for (const auto& [d, ord] : cusps.orders)
            std::cout << "cusp_order_" << d << "," << ord.get_str() << "\n";
    } else {
        std::cout << "quotient: " << to_text(e) << "\n"
                  << "weight: " << cond.weight.get_str() << "\n"
                  << "sum delta*r: " << cond.sum_delta_r
                  << (cond.delta_sum_ok ? " (0 mod 24)" : " (not 0 mod 24)")
                  << "\n"
                  << "sum (N/delta)*r: " << cond.sum_codelta_r
                  << (cond.codelta_sum_ok ? " (0 mod 24)" : " (not 0 mod 24)")
                  << "\n"
                  << "conditions: " << (cond.pass() ? "pass" : "fail") << "\n"
                  << "character: " << (character ? *character : "undefined")
                  << "\n"
                  << "leading exponent: "
                  << (lead ? std::to_string(*lead) : "undefined") << "\n"
                  << "cusp orders:\n";
        for (const auto& [d, ord] : cusps.orders)
            std::cout << "  1/" << d << ": " << ord.get_str() << "\n";
        std::cout << "cusp form: " << (cusps.all_positive ? "yes" : "no")
                  << "\n";
    }
    return 0;
}

int emit_script(const ScriptReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else if (format == "csv") {
        std::cout << "label,passed,detail\n";
        for (const CheckResult& c : rep.checks)
            std::cout << c.label << "," << (c.passed ? 1 : 0) << ",\""
                      << c.detail << "\"\n";
    } else
        print_script_human(rep, std::cout);
    return rep.verified() ? 0 : 1;
}

int run_verify(const std::string& script, const std::string& tier_arg,
               std::optional<std::uint64_t> bound,
               std::optional<std::uint32_t> l, std::optional<std::uint32_t> s,
               std::optional<std::size_t> trunc, const std::string& format) {
    Tier tier = tier_from_name(tier_arg);
    if (script == "thm31") return emit_script(verify_thm31(tier), format);
    if (script == "thm12") return emit_script(verify_thm12(tier), format);
    if (script == "all") return emit_script(verify_all(tier), format);
    if (script == "base") {
        std::uint64_t b = bound ? *bound : (tier == Tier::Full ? 1000 : 100);
        return emit_script(verify_base_congruences(b), format);
    }
    // prop25: a single custom instance when parameters are given, else the
    // two pinned instances at tier scale
    std::vector<VerificationReport> reports;
    if (l || s || trunc) {
        if (!(l && s && trunc))
            throw ParseError("prop25 needs all of --l, --s, --trunc");
        reports.push_back(verify_prop25(*l, *s, *trunc));
    } else {
        bool full = tier == Tier::Full;
        reports.push_back(verify_prop25(5, 2, full ? 10000 : 1000));
        reports.push_back(verify_prop25(5, 4, full ? 2000 : 200));
    }
    bool ok = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        ok = ok && r.verified();
        if (format == "human") print_report_human(r, std::cout);
        if (format == "csv")
            std::cout << claim_text(r.claim) << ","
                      << (r.verified() ? "verified" : "counterexample") << "\n";
    }
    return ok ? 0 : 1;
}

int run_search(const std::string& flavor_arg,
               const std::vector<std::uint64_t>& steps, std::uint32_t modulus,
               const std::vector<std::uint64_t>& offsets, std::uint64_t limit,
               const std::string& format) {
    Flavor flavor = flavor_from_name(flavor_arg);
    if (steps.size() == 1 && offsets.size() == 1) {
        VerificationReport rep =
            find_counterexample(flavor, steps[0], offsets[0], modulus, limit);
        if (format == "json")
            std::cout << to_json(rep).dump(2) << "\n";
        else if (format == "csv")
            std::cout << claim_text(rep.claim) << ","
                      << (rep.verified() ? "undetermined" : "counterexample")
                      << "\n";
        else {
            print_report_human(rep, std::cout);
            if (rep.verified())
                std::cout << "undetermined: no counterexample below n = "
                          << limit << ", scan further to decide\n";
        }
        return rep.verified() ? 0 : 1;
    }

    SearchParams params;
    params.flavor = flavor;
    params.steps = steps;
    params.modulus = modulus;
    if (!offsets.empty()) params.offsets = offsets;
    params.limit = limit;
    SearchResult res = search_congruences(params);
    if (format == "json")
        std::cout << to_json(res).dump(2) << "\n";
    else if (format == "csv") {
        std::cout << "step,offset,modulus,bound\n";
        for (const CongruenceClaim& c : res.candidates)
            std::cout << c.step << "," << c.offset << "," << c.modulus << ","
                      << c.bound << "\n";
    } else {
        std::cout << res.candidates.size() << " candidate progression"
                  << (res.candidates.size() == 1 ? "" : "s")
                  << " (bounded evidence only, unproven):\n";
        for (const CongruenceClaim& c : res.candidates)
            std::cout << "  " << claim_text(c) << "\n";
        std::cout << "elapsed: " << res.elapsed_ms << " ms\n";
    }
    return 0;
}

int run_cphi(const std::string& flavor_arg, std::size_t trunc, std::uint32_t m,
             bool exact, const std::string& format) {
    CphiTable t = [&] {
        Modulus mod = modulus_from_flags(m, exact);
        Flavor flavor = flavor_from_name(flavor_arg);
        if (flavor == Flavor::Cphi3) return cphi3_series(trunc, mod);
        if (flavor == Flavor::Cphibar3) return cphibar3_series(trunc, mod);
        return a_series(trunc, mod);
    }();
    if (format == "json") {
        std::cout << to_json(t).dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        write_csv(std::cout, t);
        return 0;
    }
    for (std::size_t n = 0; n < t.truncation(); ++n)
        std::cout << flavor_arg << "(" << n
                  << ") = " << t.series.coefficient(n).get_str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series and eta-quotient congruence toolkit"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, std::string& fmt) {
        cmd->add_option("--format", fmt, "json, csv or human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
    };

    // expand
    auto* expand = app.add_subcommand("expand", "q-expansion of an eta-quotient");
    std::string ex_text, ex_fmt = "human";
    std::size_t ex_trunc = 0;
    std::uint32_t ex_mod = 0;
    bool ex_exact = false;
    expand->add_option("quotient", ex_text, "eta-quotient text")->required();
    expand->add_option("--trunc", ex_trunc, "number of coefficients")
        ->required();
    expand->add_option("--modulus", ex_mod, "reduce mod this");
    expand->add_flag("--exact", ex_exact, "exact integer coefficients");
    add_format(expand, ex_fmt);

    // etainfo
    auto* etainfo = app.add_subcommand("etainfo", "weight, character, cusp orders");
    std::string ei_text, ei_fmt = "human";
    etainfo->add_option("quotient", ei_text, "eta-quotient text")->required();
    add_format(etainfo, ei_fmt);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification script");
    std::string vf_script, vf_tier = "smoke", vf_fmt = "human";
    std::optional<std::uint64_t> vf_bound;
    std::optional<std::uint32_t> vf_l, vf_s;
    std::optional<std::size_t> vf_trunc;
    verify->add_option("script", vf_script, "thm31, thm12, base, prop25 or all")
        ->required()
        ->check(CLI::IsMember({"thm31", "thm12", "base", "prop25", "all"}));
    verify->add_option("--tier", vf_tier, "smoke or full")
        ->check(CLI::IsMember({"smoke", "full"}));
    verify->add_option("--bound", vf_bound, "n limit for the base script");
    verify->add_option("--l", vf_l, "prime for prop25");
    verify->add_option("--s", vf_s, "exponent for prop25");
    verify->add_option("--trunc", vf_trunc, "truncation for prop25");
    add_format(verify, vf_fmt);

    // search
    auto* search = app.add_subcommand("search", "scan progressions for candidates");
    std::string se_flavor = "cphi3", se_fmt = "human";
    std::vector<std::uint64_t> se_steps, se_offsets;
    std::uint32_t se_mod = 5;
    std::uint64_t se_limit = 500;
    search->add_option("--flavor", se_flavor, "cphi3, cphibar3 or a_series")
        ->check(CLI::IsMember({"cphi3", "cphibar3", "a_series"}));
    search->add_option("--step", se_steps, "progression step, repeatable")
        ->required();
    search->add_option("--modulus", se_mod, "congruence modulus");
    search->add_option("--offset", se_offsets,
                       "offsets to scan, repeatable; all offsets when absent");
    search->add_option("--limit", se_limit, "scan n = 0..limit");
    add_format(search, se_fmt);

    // sturm
    auto* sturm = app.add_subcommand("sturm", "congruence-checking bound");
    std::uint64_t st_weight = 0, st_level = 0;
    std::string st_fmt = "human";
    sturm->add_option("--weight", st_weight, "integer weight")->required();
    sturm->add_option("--level", st_level, "group level")->required();
    add_format(sturm, st_fmt);

    // cphi
    auto* cphi = app.add_subcommand("cphi", "coefficient tables");
    std::string cp_flavor = "cphi3", cp_fmt = "human";
    std::size_t cp_trunc = 0;
    std::uint32_t cp_mod = 0;
    bool cp_exact = false;
    cphi->add_option("--flavor", cp_flavor, "cphi3, cphibar3 or a_series")
        ->check(CLI::IsMember({"cphi3", "cphibar3", "a_series"}));
    cphi->add_option("--trunc", cp_trunc, "number of values")->required();
    cphi->add_option("--modulus", cp_mod, "reduce mod this");
    cphi->add_flag("--exact", cp_exact, "exact integer values");
    add_format(cphi, cp_fmt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed())
            return run_expand(ex_text, ex_trunc, ex_mod, ex_exact, ex_fmt);
        if (etainfo->parsed()) return run_etainfo(ei_text, ei_fmt);
        if (verify->parsed())
            return run_verify(vf_script, vf_tier, vf_bound, vf_l, vf_s,
                              vf_trunc, vf_fmt);
        if (search->parsed())
            return run_search(se_flavor, se_steps, se_mod, se_offsets,
                              se_limit, se_fmt);
        if (sturm->parsed()) {
            std::uint64_t b = sturm_bound(st_weight, st_level);
            if (st_fmt == "json")
                std::cout << nlohmann::json{{"weight", st_weight},
                                            {"level", st_level},
                                            {"bound", b}}
                                 .dump(2)
                          << "\n";
            else if (st_fmt == "csv")
                std::cout << st_weight << "," << st_level << "," << b << "\n";
            else
                std::cout << b << "\n";
            return 0;
        }
        if (cphi->parsed())
            return run_cphi(cp_flavor, cp_trunc, cp_mod, cp_exact, cp_fmt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

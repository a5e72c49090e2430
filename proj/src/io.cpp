#include "etaq/io.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace etaq {

using nlohmann::json;

namespace {

mpz_class mpz_from_string(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a decimal integer: " + s);
    }
}

json series_coeffs(const Series& s) {
    json coeffs = json::array();
    if (s.modulus().is_exact()) {
        for (std::size_t i = 0; i < s.truncation(); ++i)
            coeffs.push_back(s.integer_at(i).get_str());
    } else {
        for (std::size_t i = 0; i < s.truncation(); ++i)
            coeffs.push_back(s.residue_at(i));
    }
    return coeffs;
}

std::string status_name(VerifyStatus st) {
    return st == VerifyStatus::VerifiedToBound ? "verified" : "counterexample";
}

VerifyStatus status_from_name(const std::string& name) {
    if (name == "verified") return VerifyStatus::VerifiedToBound;
    if (name == "counterexample") return VerifyStatus::Counterexample;
    throw ParseError("unknown status: " + name);
}

} // namespace

json to_json(const Series& s) {
    json j;
    if (s.modulus().is_exact())
        j["modulus"] = "exact";
    else
        j["modulus"] = s.modulus().value();
    j["truncation"] = s.truncation();
    j["coeffs"] = series_coeffs(s);
    return j;
}

Series series_from_json(const json& j) {
    try {
        Modulus m = Modulus::exact();
        const json& jm = j.at("modulus");
        if (jm.is_string()) {
            if (jm.get<std::string>() != "exact")
                throw ParseError("modulus must be a number or \"exact\"");
        } else {
            m = Modulus::mod(jm.get<std::uint32_t>());
        }
        auto trunc = j.at("truncation").get<std::size_t>();
        const json& coeffs = j.at("coeffs");
        if (!coeffs.is_array() || coeffs.size() != trunc)
            throw ParseError("coefficient count does not match truncation");
        if (m.is_exact()) {
            std::vector<mpz_class> c;
            c.reserve(trunc);
            for (const json& v : coeffs) {
                if (v.is_string())
                    c.push_back(mpz_from_string(v.get<std::string>()));
                else
                    c.push_back(mpz_class(v.get<std::int64_t>()));
            }
            return Series::from_exact(std::move(c));
        }
        std::vector<std::uint32_t> c;
        c.reserve(trunc);
        for (const json& v : coeffs) {
            auto r = v.get<std::uint64_t>();
            if (r >= m.value())
                throw ParseError("residue " + std::to_string(r) +
                                 " out of range for modulus " +
                                 std::to_string(m.value()));
            c.push_back(static_cast<std::uint32_t>(r));
        }
        return Series::from_residues(std::move(c), m);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad series json: ") + e.what());
    }
}

json to_json(const CphiTable& t) {
    return {{"flavor", flavor_name(t.flavor)}, {"series", to_json(t.series)}};
}

CphiTable cphi_table_from_json(const json& j) {
    try {
        return {flavor_from_name(j.at("flavor").get<std::string>()),
                series_from_json(j.at("series"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad table json: ") + e.what());
    }
}

json to_json(const CongruenceClaim& c) {
    return {{"flavor", flavor_name(c.flavor)},
            {"step", c.step},
            {"offset", c.offset},
            {"modulus", c.modulus},
            {"bound", c.bound}};
}

CongruenceClaim claim_from_json(const json& j) {
    try {
        CongruenceClaim c;
        c.flavor = flavor_from_name(j.at("flavor").get<std::string>());
        c.step = j.at("step").get<std::uint64_t>();
        c.offset = j.at("offset").get<std::uint64_t>();
        c.modulus = j.at("modulus").get<std::uint32_t>();
        c.bound = j.at("bound").get<std::uint64_t>();
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad claim json: ") + e.what());
    }
}

json to_json(const VerificationReport& r) {
    json j;
    j["claim"] = to_json(r.claim);
    j["status"] = status_name(r.status);
    if (r.witness)
        j["witness"] = {{"n", r.witness->n},
                        {"index", r.witness->index},
                        {"value", r.witness->value.get_str()}};
    else
        j["witness"] = nullptr;
    j["checked_count"] = r.checked_count;
    j["ord_lower_bound"] = r.ord_lower_bound;
    j["truncation"] = r.truncation;
    j["elapsed_ms"] = r.elapsed_ms;
    j["modulus"] = r.claim.modulus;
    return j;
}

VerificationReport report_from_json(const json& j) {
    try {
        VerificationReport r;
        r.claim = claim_from_json(j.at("claim"));
        r.status = status_from_name(j.at("status").get<std::string>());
        const json& w = j.at("witness");
        if (!w.is_null()) {
            Witness wit;
            wit.n = w.at("n").get<std::uint64_t>();
            wit.index = w.at("index").get<std::uint64_t>();
            wit.value = mpz_from_string(w.at("value").get<std::string>());
            r.witness = std::move(wit);
        }
        r.checked_count = j.at("checked_count").get<std::uint64_t>();
        r.ord_lower_bound = j.at("ord_lower_bound").get<std::uint64_t>();
        r.truncation = j.at("truncation").get<std::uint64_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad report json: ") + e.what());
    }
}

json to_json(const CheckResult& c) {
    json j;
    j["label"] = c.label;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    j["report"] = c.report ? to_json(*c.report) : json(nullptr);
    return j;
}

CheckResult check_result_from_json(const json& j) {
    try {
        CheckResult c;
        c.label = j.at("label").get<std::string>();
        c.passed = j.at("passed").get<bool>();
        c.detail = j.at("detail").get<std::string>();
        const json& r = j.at("report");
        if (!r.is_null()) c.report = report_from_json(r);
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad check json: ") + e.what());
    }
}

json to_json(const ScriptReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
    return {{"script", r.script},
            {"tier", tier_name(r.tier)},
            {"checks", std::move(checks)},
            {"verified", r.verified()},
            {"elapsed_ms", r.elapsed_ms}};
}

ScriptReport script_report_from_json(const json& j) {
    try {
        ScriptReport r;
        r.script = j.at("script").get<std::string>();
        r.tier = tier_from_name(j.at("tier").get<std::string>());
        for (const json& c : j.at("checks"))
            r.checks.push_back(check_result_from_json(c));
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad script report json: ") + e.what());
    }
}

json to_json(const SearchResult& r) {
    json params;
    params["flavor"] = flavor_name(r.params.flavor);
    params["steps"] = r.params.steps;
    params["modulus"] = r.params.modulus;
    params["offsets"] =
        r.params.offsets ? json(*r.params.offsets) : json(nullptr);
    params["limit"] = r.params.limit;
    json cands = json::array();
    for (const CongruenceClaim& c : r.candidates) cands.push_back(to_json(c));
    return {{"params", std::move(params)},
            {"candidates", std::move(cands)},
            {"elapsed_ms", r.elapsed_ms}};
}

void write_csv(std::ostream& os, const Series& s) {
    if (s.modulus().is_exact()) {
        for (std::size_t i = 0; i < s.truncation(); ++i)
            os << i << ',' << s.integer_at(i).get_str() << '\n';
    } else {
        for (std::size_t i = 0; i < s.truncation(); ++i)
            os << i << ',' << s.residue_at(i) << '\n';
    }
}

void write_csv(std::ostream& os, const CphiTable& t) {
    os << "# flavor=" << flavor_name(t.flavor) << " modulus=";
    if (t.series.modulus().is_exact())
        os << "exact";
    else
        os << t.series.modulus().value();
    os << " truncation=" << t.truncation() << '\n';
    write_csv(os, t.series);
}

Series series_from_csv(std::istream& is, Modulus m) {
    std::vector<mpz_class> ints;
    std::vector<std::uint32_t> res;
    std::string line;
    std::size_t row = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("csv row without a comma: " + line);
        std::string ns = line.substr(0, comma);
        std::string vs = line.substr(comma + 1);
        std::size_t pos = 0;
        unsigned long long n = 0;
        try {
            n = std::stoull(ns, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad csv index: " + ns);
        }
        if (pos != ns.size()) throw ParseError("bad csv index: " + ns);
        if (n != row)
            throw ParseError("csv rows must be consecutive from 0, got " + ns);
        if (m.is_exact()) {
            ints.push_back(mpz_from_string(vs));
        } else {
            mpz_class v = mpz_from_string(vs);
            if (sgn(v) < 0 || v >= m.value())
                throw ParseError("residue " + vs + " out of range for modulus " +
                                 std::to_string(m.value()));
            res.push_back(static_cast<std::uint32_t>(v.get_ui()));
        }
        ++row;
    }
    if (m.is_exact()) return Series::from_exact(std::move(ints));
    return Series::from_residues(std::move(res), m);
}

} // namespace etaq

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "umbral/errors.hpp"
#include "umbral/identities.hpp"

namespace umbral {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_string(const std::optional<std::string>& s)
{
    return s ? ordered_json(*s) : ordered_json(nullptr);
}

ordered_json report_object(const CheckReport& r)
{
    ordered_json aux = ordered_json::object();
    for (const auto& [name, value] : r.aux)
        aux[name] = value;
    ordered_json variants = ordered_json::array();
    for (const auto& v : r.variants)
        variants.push_back({{"form", v.form}, {"matches", v.matches ? ordered_json(*v.matches) : ordered_json(nullptr)}});
    ordered_json counterexample = nullptr;
    if (r.first_counterexample)
        counterexample = {{"inputs", r.first_counterexample->inputs},
                          {"lhs", r.first_counterexample->lhs},
                          {"rhs", r.first_counterexample->rhs}};
    return {
        {"check_id", r.check_id},
        {"params",
         {{"k", r.params.k}, {"v", r.params.v}, {"lambda", r.params.lambda.to_string()},
          {"alpha", r.params.alpha.to_string()}}},
        {"aux", aux},
        {"status", std::string(to_string(r.status))},
        {"first_counterexample", counterexample},
        {"discrepancy", optional_string(r.discrepancy)},
        {"skip_reason", optional_string(r.skip_reason)},
        {"variants", variants},
    };
}

ordered_json summary_object(const SuiteSummary& s)
{
    return {{"total", s.total},     {"passed", s.passed},
            {"failed", s.failed},   {"skipped", s.skipped},
            {"discrepancies", s.discrepancies}, {"findings", s.findings}};
}

std::optional<std::string> read_optional(const ordered_json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<std::string>();
}

CheckStatus parse_status(const std::string& s)
{
    if (s == "pass")
        return CheckStatus::Pass;
    if (s == "fail")
        return CheckStatus::Fail;
    if (s == "skipped")
        return CheckStatus::Skipped;
    throw MathError(ErrorKind::InvalidFormat, "unknown status '" + s + "'");
}

}  // namespace

std::string report_label(const CheckReport& r)
{
    std::string out = r.check_id + " " + r.params.to_string();
    for (const auto& [name, value] : r.aux)
        out += " " + name + "=" + value;
    return out;
}

std::string to_json(const CheckReport& report)
{
    return report_object(report).dump();
}

CheckReport report_from_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
        CheckReport r;
        r.check_id = j.at("check_id").get<std::string>();
        const auto& p = j.at("params");
        r.params.k = p.at("k").get<unsigned>();
        r.params.v = p.at("v").get<unsigned>();
        r.params.lambda = Rational::parse(p.at("lambda").get<std::string>());
        r.params.alpha = Rational::parse(p.at("alpha").get<std::string>());
        for (const auto& [name, value] : j.at("aux").items())
            r.aux.emplace_back(name, value.get<std::string>());
        r.status = parse_status(j.at("status").get<std::string>());
        const auto& ce = j.at("first_counterexample");
        if (!ce.is_null())
            r.first_counterexample = Counterexample{ce.at("inputs").get<std::string>(), ce.at("lhs").get<std::string>(),
                                                    ce.at("rhs").get<std::string>()};
        r.discrepancy = read_optional(j, "discrepancy");
        r.skip_reason = read_optional(j, "skip_reason");
        for (const auto& v : j.at("variants")) {
            const auto& m = v.at("matches");
            r.variants.push_back(
                VariantOutcome{v.at("form").get<std::string>(), m.is_null() ? std::nullopt : std::optional<bool>(m.get<bool>())});
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw MathError(ErrorKind::InvalidFormat, std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const CheckReport& r)
{
    std::string out = report_label(r) + " " + std::string(to_string(r.status));
    if (r.first_counterexample)
        out += " at " + r.first_counterexample->inputs + ": lhs = " + r.first_counterexample->lhs +
               ", rhs = " + r.first_counterexample->rhs;
    if (r.skip_reason)
        out += " (" + *r.skip_reason + ")";
    if (r.discrepancy)
        out += " [discrepancy: " + *r.discrepancy + "]";
    return out;
}

std::string to_text(const SuiteSummary& s)
{
    std::ostringstream os;
    os << "summary: total=" << s.total << " passed=" << s.passed << " failed=" << s.failed
       << " skipped=" << s.skipped << " discrepancies=" << s.discrepancies;
    return os.str();
}

std::string to_json(const SuiteSummary& summary)
{
    return summary_object(summary).dump();
}

std::string to_json_document(const std::vector<CheckReport>& reports)
{
    std::string out = "{\"reports\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += to_json(reports[i]);
    }
    out += reports.empty() ? "],\n" : "\n],\n";
    out += "\"summary\": " + to_json(summarize(reports)) + "}\n";
    return out;
}

}  // namespace umbral

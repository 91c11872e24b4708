#include "hyperharm/report.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperharm {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

Verdict parse_verdict(std::string_view name) {
    if (name == "pass") return Verdict::pass;
    if (name == "fail") return Verdict::fail;
    if (name == "inapplicable") return Verdict::inapplicable;
    throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

Report compared(std::string family, Json params, Rational lhs, Rational rhs) {
    Report r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

Report inapplicable(std::string family, Json params, std::string diagnostic) {
    Report r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.verdict = Verdict::inapplicable;
    r.diagnostic = std::move(diagnostic);
    return r;
}

Summary summarize(const std::vector<Report>& reports) {
    Summary s;
    std::set<std::string> families;
    for (const auto& r : reports) {
        families.insert(r.family);
        ++s.instances;
        switch (r.verdict) {
        case Verdict::pass: ++s.pass; break;
        case Verdict::fail: ++s.fail; break;
        case Verdict::inapplicable: ++s.inapplicable; break;
        }
    }
    s.families = families.size();
    return s;
}

std::string summary_line(const Summary& s) {
    std::ostringstream os;
    os << "families: " << s.families << ", instances: " << s.instances << ", pass: " << s.pass
       << ", inapplicable: " << s.inapplicable << ", fail: " << s.fail;
    return os.str();
}

Json to_json(const Report& r) {
    Json j;
    j["family"] = r.family;
    j["params"] = r.params;
    j["lhs"] = r.lhs ? Json(r.lhs->to_string()) : Json(nullptr);
    j["rhs"] = r.rhs ? Json(r.rhs->to_string()) : Json(nullptr);
    j["verdict"] = std::string(to_string(r.verdict));
    j["diagnostic"] = r.diagnostic ? Json(*r.diagnostic) : Json(nullptr);
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params");
    if (!j.at("lhs").is_null())
        r.lhs = Rational::parse(j.at("lhs").get<std::string>());
    if (!j.at("rhs").is_null())
        r.rhs = Rational::parse(j.at("rhs").get<std::string>());
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (j.contains("diagnostic") && !j.at("diagnostic").is_null())
        r.diagnostic = j.at("diagnostic").get<std::string>();
    return r;
}

void write_json_array(std::ostream& os, const std::vector<Report>& reports) {
    if (reports.empty()) {
        os << "[]\n";
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
        os << "  " << to_json(reports[i]).dump() << (i + 1 < reports.size() ? ",\n" : "\n");
    os << "]\n";
}

void write_ndjson(std::ostream& os, const std::vector<Report>& reports) {
    for (const auto& r : reports)
        os << to_json(r).dump() << '\n';
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_csv(std::ostream& os, const std::vector<Report>& reports) {
    os << "family,params,lhs,rhs,verdict,diagnostic\r\n";
    for (const auto& r : reports) {
        os << csv_field(r.family) << ',' << csv_field(r.params.dump()) << ','
           << (r.lhs ? r.lhs->to_string() : "") << ',' << (r.rhs ? r.rhs->to_string() : "") << ','
           << to_string(r.verdict) << ',' << csv_field(r.diagnostic.value_or("")) << "\r\n";
    }
}

std::string human_line(const Report& r) {
    std::ostringstream os;
    os << r.family << ' ' << r.params.dump() << "  lhs " << (r.lhs ? r.lhs->to_string() : "-") << "  rhs "
       << (r.rhs ? r.rhs->to_string() : "-") << "  " << to_string(r.verdict);
    if (r.lhs_dual && r.rhs_dual)
        os << "  dual lhs " << *r.lhs_dual << " rhs " << *r.rhs_dual;
    if (r.diagnostic)
        os << "  (" << *r.diagnostic << ")";
    return os.str();
}

void write_human(std::ostream& os, const std::vector<Report>& reports) {
    for (const auto& r : reports)
        os << human_line(r) << '\n';
    os << summary_line(summarize(reports)) << '\n';
}

} // namespace hyperharm

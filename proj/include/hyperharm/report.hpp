#pragma once

// Verification reports and their JSON / CSV / human encodings.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperharm/dual.hpp"
#include "hyperharm/rational.hpp"

namespace hyperharm {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inapplicable };

std::string_view to_string(Verdict v);
/// Throws std::invalid_argument on an unknown name.
Verdict parse_verdict(std::string_view name);

struct Report {
    std::string family;
    Json params = Json::object();
    /// Either side may be absent when evaluation stopped at a zero factor.
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    Verdict verdict = Verdict::inapplicable;
    std::optional<std::string> diagnostic;
    /// Both sides as (value, deriv) pairs, for dual-mode families only.
    std::optional<Dual> lhs_dual;
    std::optional<Dual> rhs_dual;
};

/// pass iff lhs == rhs.
Report compared(std::string family, Json params, Rational lhs, Rational rhs);
Report inapplicable(std::string family, Json params, std::string diagnostic);

/// Runs compute() -> Report, turning a zero factor or a zero-valued dual
/// divisor into an inapplicable report.
template <class F>
Report guarded(const std::string& family, const Json& params, F&& compute) {
    try {
        return compute();
    } catch (const ZeroDenominatorFactor& e) {
        return inapplicable(family, params, e.what());
    } catch (const ZeroValueDivisor& e) {
        return inapplicable(family, params, e.what());
    }
}

struct Summary {
    std::size_t families = 0;
    std::size_t instances = 0;
    std::size_t pass = 0;
    std::size_t inapplicable = 0;
    std::size_t fail = 0;
};

Summary summarize(const std::vector<Report>& reports);
/// "families: F, instances: N, pass: P, inapplicable: I, fail: X"
std::string summary_line(const Summary& s);

Json to_json(const Report& r);
/// Inverse of to_json for the schema fields (dual parts are not serialized).
Report report_from_json(const Json& j);

/// Array with one record per line.
void write_json_array(std::ostream& os, const std::vector<Report>& reports);
void write_ndjson(std::ostream& os, const std::vector<Report>& reports);
/// RFC 4180 with header family,params,lhs,rhs,verdict,diagnostic.
void write_csv(std::ostream& os, const std::vector<Report>& reports);
/// One line per report followed by the summary line.
void write_human(std::ostream& os, const std::vector<Report>& reports);
std::string human_line(const Report& r);

} // namespace hyperharm

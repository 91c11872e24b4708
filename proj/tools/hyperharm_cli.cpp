// hyperharm: exact verification sweeps for the harmonic number identities.
//
//   hyperharm verify <family> [ranges] [--format json|csv|human] [--workers N]
//   hyperharm check <family> [instance]
//   hyperharm fixtures <family> [ranges] --out corpus.json
//
// Exit status: 0 pass, 1 fail, 2 usage, 3 inapplicable (check only).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperharm/families.hpp"
#include "hyperharm/identities.hpp"
#include "hyperharm/report.hpp"

namespace {

using namespace hyperharm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInapplicable = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::optional<long> m, m_min, m_max, v, n, n_min, n_max, p_max, param_max, u, u_min, u_max, r;
    std::optional<long> b, c, d, e, f, g;
    long sign = 1;
    std::optional<std::string> p, a;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string format = "human";
    bool ndjson = false;
    std::optional<std::string> out;
    unsigned workers = 1;
    bool inject_rhs_fault = false;
    std::optional<std::string> fixtures_in;
};

void add_common(CLI::App& cmd, Options& o, bool sweep) {
    cmd.add_option("--m", o.m, "m (number of nested indices)");
    cmd.add_option("--v", o.v, "split index v in [0, 2m+2]");
    cmd.add_option("--n", o.n, "n");
    cmd.add_option("--p", o.p, "comma-separated P_s (integers, or p/q rationals for whipple/andrews)");
    cmd.add_option("--b", o.b);
    cmd.add_option("--c", o.c);
    cmd.add_option("--d", o.d);
    cmd.add_option("--e", o.e);
    cmd.add_option("--f", o.f);
    cmd.add_option("--g", o.g);
    cmd.add_option("--u", o.u, "u != 0");
    cmd.add_option("--r", o.r, "r for the binomial derivative check");
    cmd.add_option("--sign", o.sign, "+1 for C(n+x,r), -1 for C(n-x,r)")->check(CLI::IsMember({-1L, 1L}));
    cmd.add_option("--a", o.a, "a as p/q (whipple/andrews)");
    cmd.add_option("--format", o.format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
    cmd.add_option("--out", o.out, "write output to this file");
    if (sweep) {
        cmd.add_option("--m-min", o.m_min);
        cmd.add_option("--m-max", o.m_max);
        cmd.add_option("--n-min", o.n_min);
        cmd.add_option("--n-max", o.n_max);
        cmd.add_option("--p-max", o.p_max, "grid bound for each P_s");
        cmd.add_option("--param-max", o.param_max, "grid bound for example parameters");
        cmd.add_option("--u-min", o.u_min);
        cmd.add_option("--u-max", o.u_max);
        cmd.add_option("--count", o.count, "random instances (whipple/andrews)");
        cmd.add_option("--seed", o.seed, "seed for random rational parameters");
        cmd.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
        cmd.add_flag("--ndjson", o.ndjson, "one JSON record per line");
        cmd.add_flag("--inject-rhs-fault", o.inject_rhs_fault)->group("");
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    for (const auto& item : split_list(s)) {
        std::size_t used = 0;
        long x = 0;
        try {
            x = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw UsageError("not an integer: '" + item + "'");
        out.push_back(x);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split_list(s))
        out.push_back(Rational::parse(item));
    return out;
}

Json rational_json(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs)
        arr.push_back(x.to_string());
    return arr;
}

long require(const std::optional<long>& x, const char* name) {
    if (!x)
        throw UsageError(std::string("missing --") + name);
    return *x;
}

void n_range(const Options& o, long& lo, long& hi) {
    if (o.n) {
        lo = hi = *o.n;
    } else {
        lo = o.n_min.value_or(0);
        hi = o.n_max.value_or(lo);
    }
    if (lo < 0)
        throw UsageError("n must be nonnegative");
}

void m_range(const Options& o, long& lo, long& hi) {
    if (o.m) {
        lo = hi = *o.m;
    } else {
        lo = o.m_min.value_or(1);
        hi = o.m_max.value_or(lo);
    }
    if (lo < 1 || hi < lo)
        throw UsageError("need 1 <= m-min <= m-max");
}

std::vector<long> example_params(const Options& o, char id, bool& complete) {
    const std::optional<long> all[] = {o.b, o.c, o.d, o.e, o.f, o.g};
    std::vector<long> values;
    complete = true;
    for (std::size_t i = 0; i < example_arity(id); ++i) {
        if (all[i])
            values.push_back(*all[i]);
        else
            complete = false;
    }
    return values;
}

std::vector<Instance> build_instances(const Options& o) {
    const std::string& family = o.family;
    long n_lo = 0, n_hi = 0;
    n_range(o, n_lo, n_hi);

    if (family == "theorem" || family == "pre-derivative" || family == "proposition" || family == "corollary") {
        IdentityRange range;
        if (family != "corollary")
            m_range(o, range.m_min, range.m_max);
        range.v = o.v;
        range.n_min = n_lo;
        range.n_max = n_hi;
        range.p_max = o.p_max.value_or(0);
        if (o.p)
            range.P = parse_long_list(*o.p);
        return family == "corollary" ? corollary_family(range) : identity_family(family, range);
    }
    if (family.rfind("example:", 0) == 0) {
        if (family.size() != 9)
            throw UsageError("example family is example:<a..o>");
        ExampleRange range;
        range.id = family.back();
        bool complete = false;
        auto values = example_params(o, range.id, complete);
        if (complete)
            range.params = values;
        range.param_max = o.param_max.value_or(0);
        range.n_min = n_lo;
        range.n_max = n_hi;
        return example_family(range);
    }
    if (family == "t") {
        const long u_lo = o.u ? *o.u : require(o.u_min, "u-min");
        const long u_hi = o.u ? *o.u : require(o.u_max, "u-max");
        if (o.u && *o.u == 0)
            throw UsageError("u must be nonzero");
        return t_family(u_lo, u_hi, n_lo, n_hi);
    }
    if (family == "deriv") {
        if (o.r) {
            Json params;
            params["n"] = require(o.n, "n");
            params["r"] = *o.r;
            params["sign"] = o.sign;
            return {{"deriv", params}};
        }
        return deriv_family(n_lo, n_hi);
    }
    if (family == "whipple" || family == "andrews") {
        if (o.a || o.p) {
            Json params;
            if (family == "andrews")
                params["m"] = o.m.value_or(1);
            params["a"] = Rational::parse(o.a.value_or("")).to_string();
            params["P"] = rational_json(parse_rational_list(o.p.value_or("")));
            params["n"] = require(o.n, "n");
            return {{family, params}};
        }
        RandomRationalRange range;
        range.count = o.count;
        range.seed = o.seed;
        range.n_max = o.n_max.value_or(o.n.value_or(0));
        if (family == "andrews") {
            long lo = 1, hi = 1;
            m_range(o, lo, hi);
            range.m_values.clear();
            for (long m = lo; m <= hi; ++m)
                range.m_values.push_back(m);
            return andrews_family(range).instances;
        }
        return whipple_family(range).instances;
    }
    throw UsageError("unknown family '" + family + "'");
}

std::vector<Instance> read_fixture_instances(const std::string& path, std::vector<Report>& stored) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::vector<Json> records;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        for (auto& j : Json::parse(text))
            records.push_back(std::move(j));
    } else {
        std::stringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                records.push_back(Json::parse(line));
    }
    std::vector<Instance> instances;
    for (const auto& j : records) {
        stored.push_back(report_from_json(j));
        instances.push_back({stored.back().family, stored.back().params});
    }
    return instances;
}

void write_reports(std::ostream& os, const Options& o, const std::vector<Report>& reports) {
    if (o.format == "json") {
        if (o.ndjson)
            write_ndjson(os, reports);
        else
            write_json_array(os, reports);
    } else if (o.format == "csv") {
        write_csv(os, reports);
    } else {
        write_human(os, reports);
    }
}

template <class F>
void with_output(const Options& o, F&& write) {
    if (o.out) {
        std::ofstream file(*o.out, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + *o.out);
        write(file);
        if (!file)
            throw std::runtime_error("write failed: " + *o.out);
    } else {
        write(std::cout);
    }
}

int run_verify(const Options& o) {
    std::vector<Report> stored;
    std::vector<Instance> instances;
    if (o.fixtures_in)
        instances = read_fixture_instances(*o.fixtures_in, stored);
    else if (o.family.empty())
        throw UsageError("verify needs a family or --fixtures-in");
    else
        instances = build_instances(o);

    std::vector<Report> reports = verify(instances, {o.workers, o.inject_rhs_fault});
    for (std::size_t i = 0; i < stored.size(); ++i) {
        Report& r = reports[i];
        const Report& s = stored[i];
        if (r.lhs != s.lhs || r.rhs != s.rhs || r.verdict != s.verdict) {
            r.verdict = Verdict::fail;
            r.diagnostic = "fixture mismatch: stored verdict " + std::string(to_string(s.verdict));
        }
    }
    with_output(o, [&](std::ostream& os) { write_reports(os, o, reports); });
    const Summary summary = summarize(reports);
    if (o.format != "human")
        std::cerr << summary_line(summary) << '\n';
    return summary.fail == 0 ? kExitPass : kExitFail;
}

int run_check(const Options& o) {
    const std::vector<Instance> instances = build_instances(o);
    if (instances.size() != 1)
        throw UsageError("check needs exactly one instance; got " + std::to_string(instances.size()));
    const Report r = evaluate(instances.front());
    with_output(o, [&](std::ostream& os) {
        if (o.format == "json") {
            os << to_json(r).dump() << '\n';
        } else if (o.format == "csv") {
            write_csv(os, {r});
        } else {
            os << "family:  " << r.family << '\n'
               << "params:  " << r.params.dump() << '\n'
               << "lhs:     " << (r.lhs ? r.lhs->to_string() : "-") << '\n'
               << "rhs:     " << (r.rhs ? r.rhs->to_string() : "-") << '\n';
            if (r.lhs_dual && r.rhs_dual)
                os << "lhs dual (value, deriv): " << *r.lhs_dual << '\n'
                   << "rhs dual (value, deriv): " << *r.rhs_dual << '\n';
            os << "verdict: " << to_string(r.verdict) << '\n';
            if (r.diagnostic)
                os << "note:    " << *r.diagnostic << '\n';
        }
    });
    switch (r.verdict) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::inapplicable: return kExitInapplicable;
    }
    return kExitFail;
}

int run_fixtures(const Options& o) {
    if (!o.out)
        throw UsageError("fixtures needs --out");
    const std::vector<Report> reports = verify(build_instances(o), {o.workers, false});
    with_output(o, [&](std::ostream& os) {
        if (o.ndjson)
            write_ndjson(os, reports);
        else
            write_json_array(os, reports);
    });
    const Summary summary = summarize(reports);
    std::cerr << summary_line(summary) << '\n';
    return summary.fail == 0 ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of hypergeometric and harmonic number identities"};
    app.require_subcommand(1);
    Options opts;

    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("family", opts.family,
                           "theorem | pre-derivative | proposition | corollary | example:<a..o> | t | whipple | "
                           "andrews | deriv");
    add_common(*verify_cmd, opts, true);
    verify_cmd->add_option("--fixtures-in", opts.fixtures_in, "re-verify a fixture corpus");

    auto* check_cmd = app.add_subcommand("check", "check a single instance");
    check_cmd->add_option("family", opts.family)->required();
    add_common(*check_cmd, opts, false);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "export a fixture corpus");
    fixtures_cmd->add_option("family", opts.family)->required();
    add_common(*fixtures_cmd, opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify_cmd)
            return run_verify(opts);
        if (*check_cmd)
            return run_check(opts);
        return run_fixtures(opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}

#include "hyperharm/families.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "hyperharm/dual.hpp"
#include "hyperharm/hyperg.hpp"
#include "hyperharm/identities.hpp"

namespace hyperharm {

namespace {

long get_long(const Json& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer parameter '") + key + "'");
    return params.at(key).get<long>();
}

std::vector<long> get_long_list(const Json& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_array())
        throw std::invalid_argument(std::string("missing integer list '") + key + "'");
    std::vector<long> out;
    for (const auto& x : params.at(key)) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string("non-integer entry in '") + key + "'");
        out.push_back(x.get<long>());
    }
    return out;
}

Rational get_rational(const Json& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_string())
        throw std::invalid_argument(std::string("missing rational parameter '") + key + "'");
    return Rational::parse(params.at(key).get<std::string>());
}

std::vector<Rational> get_rational_list(const Json& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_array())
        throw std::invalid_argument(std::string("missing rational list '") + key + "'");
    std::vector<Rational> out;
    for (const auto& x : params.at(key)) {
        if (!x.is_string())
            throw std::invalid_argument(std::string("non-string entry in '") + key + "'");
        out.push_back(Rational::parse(x.get<std::string>()));
    }
    return out;
}

IdentityInstance identity_instance(const Json& params) {
    IdentityInstance inst{get_long(params, "m"), get_long(params, "v"), get_long(params, "n"),
                          get_long_list(params, "P")};
    inst.validate();
    return inst;
}

Report evaluate_pre_derivative(const Json& params) {
    const IdentityInstance inst = identity_instance(params);
    return guarded("pre-derivative", params, [&] {
        const auto [lhs, rhs] = pre_identity_eval(inst, seed_x());
        Report r = compared("pre-derivative", params, lhs.deriv(), rhs.deriv());
        if (lhs.value() != rhs.value()) {
            r.verdict = Verdict::fail;
            r.diagnostic = "value parts differ: " + lhs.value().to_string() + " vs " + rhs.value().to_string();
        }
        r.lhs_dual = lhs;
        r.rhs_dual = rhs;
        return r;
    });
}

Report evaluate_deriv(const Json& params) {
    const long n = get_long(params, "n");
    const long r = get_long(params, "r");
    const long sign = get_long(params, "sign");
    const BinomialDerivative d = binomial_derivative(n, r, static_cast<int>(sign));
    return compared("deriv", params, d.via_dual, d.closed_form);
}

Report dispatch(const Instance& inst) {
    const std::string& family = inst.family;
    const Json& params = inst.params;
    if (!params.is_object())
        throw std::invalid_argument("params must be a JSON object");

    if (family == "theorem") {
        const IdentityInstance id = identity_instance(params);
        return guarded(family, params, [&] { return compared(family, params, theorem_lhs(id), theorem_rhs(id)); });
    }
    if (family == "pre-derivative")
        return evaluate_pre_derivative(params);
    if (family == "proposition") {
        const IdentityInstance id = identity_instance(params);
        if (id.m > 2)
            throw std::invalid_argument("proposition family needs m <= 2");
        return guarded(family, params,
                       [&] { return compared(family, params, theorem_lhs(id), proposition_rhs(id)); });
    }
    if (family == "corollary") {
        Report r = corollary_instance(get_long(params, "v"), get_long(params, "n"), get_long_list(params, "P"));
        r.params = params;
        return r;
    }
    if (family.rfind("example:", 0) == 0 && family.size() == 9) {
        const char id = family.back();
        static constexpr const char* names[] = {"b", "c", "d", "e", "f", "g"};
        std::vector<long> values;
        for (std::size_t i = 0; i < example_arity(id); ++i)
            values.push_back(get_long(params, names[i]));
        Report r = example_eval(id, values, get_long(params, "n"));
        r.params = params;
        return r;
    }
    if (family == "t") {
        const TSpec spec{get_long(params, "u"), get_long(params, "n")};
        if (spec.u == 0 || spec.n < 0)
            throw std::invalid_argument("t family needs u != 0 and n >= 0");
        return compared(family, params, t_direct(spec), t_closed(spec));
    }
    if (family == "whipple") {
        Report r = whipple_verify(get_rational(params, "a"), get_rational_list(params, "P"), get_long(params, "n"));
        r.params = params;
        return r;
    }
    if (family == "andrews") {
        const AndrewsInstance<Rational> a{get_rational(params, "a"), get_rational_list(params, "P"),
                                          get_long(params, "n"), get_long(params, "m")};
        a.validate();
        Report r = andrews_verify(a);
        r.params = params;
        return r;
    }
    if (family == "deriv")
        return evaluate_deriv(params);
    throw std::invalid_argument("unknown family '" + family + "'");
}

/// Calls visit(P) for every P in [0, p_max]^size, last entry fastest.
template <class F>
void for_each_grid_point(std::size_t size, long p_max, F&& visit) {
    std::vector<long> p(size, 0);
    for (;;) {
        visit(p);
        std::size_t j = size;
        while (j > 0 && p[j - 1] == p_max)
            p[--j] = 0;
        if (j == 0)
            return;
        ++p[j - 1];
    }
}

Json long_list(const std::vector<long>& xs) {
    Json arr = Json::array();
    for (long x : xs)
        arr.push_back(x);
    return arr;
}

Json rational_list(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs)
        arr.push_back(x.to_string());
    return arr;
}

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        static constexpr std::array<long, 6> primes{2, 3, 5, 7, 11, 13};
        std::uniform_int_distribution<long> num(-3, 3);
        std::uniform_int_distribution<std::size_t> den(0, primes.size() - 1);
        const long p = num(rng_);
        return Rational(p, primes[den(rng_)]);
    }

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

template <class Draw>
RandomFamily draw_applicable(std::size_t count, Draw&& draw) {
    RandomFamily out;
    const std::size_t max_attempts = 1000 * (count + 1);
    std::size_t attempts = 0;
    while (out.instances.size() < count) {
        if (++attempts > max_attempts)
            throw std::runtime_error("could not draw enough applicable instances");
        Instance inst = draw();
        if (dispatch(inst).verdict == Verdict::inapplicable)
            ++out.skipped;
        else
            out.instances.push_back(std::move(inst));
    }
    return out;
}

} // namespace

Report evaluate(const Instance& inst) {
    try {
        return dispatch(inst);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed params: ") + e.what());
    }
}

std::vector<Report> verify(const std::vector<Instance>& instances, const VerifyOptions& options) {
    std::vector<Report> reports(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto work = [&](std::exception_ptr& local_error) {
        try {
            for (std::size_t i = next++; i < instances.size() && !failed; i = next++) {
                Report r = evaluate(instances[i]);
                if (options.inject_rhs_fault && r.rhs) {
                    *r.rhs += Rational(1);
                    if (r.lhs)
                        r.verdict = *r.lhs == *r.rhs ? Verdict::pass : Verdict::fail;
                }
                reports[i] = std::move(r);
            }
        } catch (...) {
            local_error = std::current_exception();
            failed = true;
        }
    };

    const unsigned workers = std::max(1u, options.workers);
    std::vector<std::exception_ptr> errors(workers);
    if (workers == 1) {
        work(errors[0]);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&, w] { work(errors[w]); });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return reports;
}

std::vector<Instance> identity_family(const std::string& family, const IdentityRange& range) {
    if (family != "theorem" && family != "pre-derivative" && family != "proposition")
        throw std::invalid_argument("identity_family: unsupported family '" + family + "'");
    if (range.m_min < 1 || range.m_max < range.m_min)
        throw std::invalid_argument("identity_family: need 1 <= m_min <= m_max");
    if (family == "proposition" && range.m_max > 2)
        throw std::invalid_argument("proposition family needs m <= 2");
    if (range.n_min < 0 || range.p_max < 0)
        throw std::invalid_argument("identity_family: bounds must be nonnegative");

    std::vector<Instance> out;
    for (long m = range.m_min; m <= range.m_max; ++m) {
        const long v_lo = range.v ? *range.v : 0;
        const long v_hi = range.v ? *range.v : 2 * m + 2;
        if (v_lo < 0 || v_hi > 2 * m + 2)
            throw std::invalid_argument("identity_family: v outside [0, 2m+2]");
        if (range.P && range.P->size() != static_cast<std::size_t>(2 * m + 2))
            throw std::invalid_argument("identity_family: fixed P needs 2m+2 entries");
        for (long v = v_lo; v <= v_hi; ++v) {
            for (long n = range.n_min; n <= range.n_max; ++n) {
                auto add = [&](const std::vector<long>& P) {
                    Json params;
                    params["m"] = m;
                    params["v"] = v;
                    params["n"] = n;
                    params["P"] = long_list(P);
                    out.push_back({family, std::move(params)});
                };
                if (range.P)
                    add(*range.P);
                else
                    for_each_grid_point(static_cast<std::size_t>(2 * m + 2), range.p_max, add);
            }
        }
    }
    return out;
}

std::vector<Instance> corollary_family(const IdentityRange& range) {
    if (range.n_min < 0 || range.p_max < 0)
        throw std::invalid_argument("corollary_family: bounds must be nonnegative");
    if (range.P && range.P->size() != 4)
        throw std::invalid_argument("corollary_family: fixed P needs 4 entries");
    std::vector<Instance> out;
    const long v_lo = range.v ? *range.v : 0;
    const long v_hi = range.v ? *range.v : 4;
    if (v_lo < 0 || v_hi > 4)
        throw std::invalid_argument("corollary_family: v outside [0, 4]");
    for (long v = v_lo; v <= v_hi; ++v) {
        for (long n = range.n_min; n <= range.n_max; ++n) {
            auto add = [&](const std::vector<long>& P) {
                Json params;
                params["v"] = v;
                params["n"] = n;
                params["P"] = long_list(P);
                out.push_back({"corollary", std::move(params)});
            };
            if (range.P)
                add(*range.P);
            else
                for_each_grid_point(4, range.p_max, add);
        }
    }
    return out;
}

std::vector<Instance> example_family(const ExampleRange& range) {
    const std::size_t arity = example_arity(range.id);
    if (range.params && range.params->size() != arity)
        throw std::invalid_argument(std::string("example ") + range.id + " needs " + std::to_string(arity) +
                                    " parameters");
    if (range.n_min < 0 || range.param_max < 0)
        throw std::invalid_argument("example_family: bounds must be nonnegative");
    static constexpr const char* names[] = {"b", "c", "d", "e", "f", "g"};
    const std::string family = std::string("example:") + range.id;
    std::vector<Instance> out;
    auto add = [&](const std::vector<long>& values) {
        for (long n = range.n_min; n <= range.n_max; ++n) {
            Json params;
            for (std::size_t i = 0; i < arity; ++i)
                params[names[i]] = values[i];
            params["n"] = n;
            out.push_back({family, std::move(params)});
        }
    };
    if (range.params)
        add(*range.params);
    else
        for_each_grid_point(arity, range.param_max, add);
    return out;
}

std::vector<Instance> t_family(long u_min, long u_max, long n_min, long n_max) {
    if (n_min < 0)
        throw std::invalid_argument("t_family: n must be nonnegative");
    std::vector<Instance> out;
    for (long u = u_min; u <= u_max; ++u) {
        if (u == 0)
            continue;
        for (long n = n_min; n <= n_max; ++n) {
            Json params;
            params["u"] = u;
            params["n"] = n;
            out.push_back({"t", std::move(params)});
        }
    }
    return out;
}

std::vector<Instance> deriv_family(long n_min, long n_max) {
    if (n_min < 0)
        throw std::invalid_argument("deriv_family: n must be nonnegative");
    std::vector<Instance> out;
    for (long n = n_min; n <= n_max; ++n)
        for (long r = 0; r <= n; ++r)
            for (long sign : {1L, -1L}) {
                Json params;
                params["n"] = n;
                params["r"] = r;
                params["sign"] = sign;
                out.push_back({"deriv", std::move(params)});
            }
    return out;
}

RandomFamily whipple_family(const RandomRationalRange& range) {
    if (range.n_max < 0)
        throw std::invalid_argument("whipple_family: n_max must be nonnegative");
    RationalSampler sampler(range.seed);
    return draw_applicable(range.count, [&] {
        Json params;
        params["a"] = sampler.next().to_string();
        std::vector<Rational> P;
        for (int s = 0; s < 4; ++s)
            P.push_back(sampler.next());
        params["P"] = rational_list(P);
        params["n"] = sampler.uniform(0, range.n_max);
        return Instance{"whipple", std::move(params)};
    });
}

RandomFamily andrews_family(const RandomRationalRange& range) {
    if (range.n_max < 0 || range.m_values.empty())
        throw std::invalid_argument("andrews_family: need n_max >= 0 and at least one m");
    for (long m : range.m_values)
        if (m < 1)
            throw std::invalid_argument("andrews_family: m must be >= 1");
    RationalSampler sampler(range.seed);
    return draw_applicable(range.count, [&] {
        const long m = range.m_values[static_cast<std::size_t>(
            sampler.uniform(0, static_cast<long>(range.m_values.size()) - 1))];
        Json params;
        params["m"] = m;
        params["a"] = sampler.next().to_string();
        std::vector<Rational> P;
        for (long s = 0; s < 2 * m + 2; ++s)
            P.push_back(sampler.next());
        params["P"] = rational_list(P);
        params["n"] = sampler.uniform(0, range.n_max);
        return Instance{"andrews", std::move(params)};
    });
}

} // namespace hyperharm

#pragma once

// Instance families: parameter-space generators, a dispatcher that evaluates
// one instance from its (family, params) description, and a parallel sweep
// that keeps output order canonical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperharm/report.hpp"

namespace hyperharm {

/// Family names: theorem, pre-derivative, proposition, corollary,
/// example:<a..o>, t, whipple, andrews, deriv.
struct Instance {
    std::string family;
    Json params;
};

/// Evaluates one instance. Malformed params throw std::invalid_argument;
/// zero factors give an inapplicable report.
Report evaluate(const Instance& inst);

struct VerifyOptions {
    unsigned workers = 1;
    /// Test hook: adds 1 to every computed rhs before the verdict.
    bool inject_rhs_fault = false;
};

/// Reports in the same order as the instances regardless of worker count.
std::vector<Report> verify(const std::vector<Instance>& instances, const VerifyOptions& options = {});

/// Integer ranges are inclusive.
struct IdentityRange {
    long m_min = 1;
    long m_max = 1;
    std::optional<long> v;          // all v in [0, 2m+2] when empty
    long n_min = 0;
    long n_max = 0;
    long p_max = 0;                 // each P_s in [0, p_max]
    std::optional<std::vector<long>> P;  // fixed P instead of the grid
};

/// family is "theorem", "pre-derivative" or "proposition" (m <= 2).
std::vector<Instance> identity_family(const std::string& family, const IdentityRange& range);

/// m = 1 with P_s scaled by n.
std::vector<Instance> corollary_family(const IdentityRange& range);

struct ExampleRange {
    char id = 'a';
    long param_max = 0;                       // each parameter in [0, param_max]
    std::optional<std::vector<long>> params;  // fixed parameters instead of the grid
    long n_min = 0;
    long n_max = 0;
};

std::vector<Instance> example_family(const ExampleRange& range);

/// All u in [u_min, u_max] except 0, n in [n_min, n_max].
std::vector<Instance> t_family(long u_min, long u_max, long n_min, long n_max);

/// (n, r, sign) for 0 <= r <= n, n in [n_min, n_max], sign in {+1, -1}.
std::vector<Instance> deriv_family(long n_min, long n_max);

struct RandomRationalRange {
    std::size_t count = 0;
    std::vector<long> m_values{1};  // ignored for whipple
    long n_max = 0;
    std::uint64_t seed = 0;
};

struct RandomFamily {
    std::vector<Instance> instances;
    std::size_t skipped = 0;  // draws rejected as inapplicable
};

/// Pseudo-random applicable instances with rational a, P_s: numerators in
/// [-3, 3], prime denominators <= 13. Deterministic in the seed.
RandomFamily whipple_family(const RandomRationalRange& range);
RandomFamily andrews_family(const RandomRationalRange& range);

} // namespace hyperharm

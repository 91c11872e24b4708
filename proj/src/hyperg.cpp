#include "hyperharm/hyperg.hpp"

namespace hyperharm {

namespace {

Json rational_list(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs)
        arr.push_back(x.to_string());
    return arr;
}

} // namespace

Report whipple_verify(const Rational& a, const std::vector<Rational>& P, long n) {
    Json params;
    params["a"] = a.to_string();
    params["P"] = rational_list(P);
    params["n"] = n;
    return guarded("whipple", params, [&] {
        return compared("whipple", params, whipple_lhs(a, P, n), whipple_rhs(a, P, n));
    });
}

Report andrews_verify(const AndrewsInstance<Rational>& inst) {
    Json params;
    params["m"] = inst.m;
    params["a"] = inst.a.to_string();
    params["P"] = rational_list(inst.P);
    params["n"] = inst.n;
    return guarded("andrews", params, [&] {
        return compared("andrews", params, andrews_lhs(inst), andrews_rhs(inst));
    });
}

} // namespace hyperharm

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rnagell/padic.hpp"
#include "rnagell/quadratic_ring.hpp"

namespace rnagell {

inline constexpr char kEngineName[] = "rnagell";
inline constexpr char kEngineVersion[] = "0.1.0";

using Json = nlohmann::json;

/// A solution (x, n) of x^2 + 7 = 2^n with x >= 0; -x solves it as well.
struct SolutionPair {
    Integer x;
    long n;

    bool operator==(const SolutionPair& o) const { return x == o.x && n == o.n; }
    bool satisfies_equation() const {
        return n >= 1 && x >= 0 && x * x + 7 == Integer(1) << static_cast<unsigned long>(n);
    }
};

/// Step-by-step record of the even case: (2^(n/2) + x)(2^(n/2) - x) = 7.
struct EvenCaseRecord {
    std::vector<std::pair<Integer, Integer>> factor_pairs;  // positive pairs (u, v), u*v = 7
    Integer two_pow_one_plus_half;                          // u + v = 2^(1 + n/2)
    Integer two_pow_half;                                   // (u + v)/2 = 2^(n/2)
    bool power_of_two_ok;
    long n;
    Integer x;
    bool ok;
};

/// Per-m record of the theta equation theta^m - theta'^m = -sqrt(-7).
struct ThetaWitness {
    long m;
    bool equation_holds;
    Integer diff_a, diff_b;  // coordinates of theta^m - theta'^m
    Integer b_m;             // odd-indexed binomial sum B_m
    Integer sqrt_coeff;      // s with theta^m - theta'^m = s * sqrt(-7)
    Integer trace;           // a_m = Tr(theta^m); |a_m| is the candidate x
};

struct SignExclusionRecord {
    long m_min;
    long m_max;
    long checked;
    bool all_hold;
};

struct TraceSequenceRecord {
    long mod7_max;
    bool mod7_ok;  // a_m mod 7 follows the period-3 pattern (2, 1, 4)
    long cross_max;
    bool cross_ok;  // recurrence values equal Tr(theta^m)
};

/// The 7-adic contradiction at d = 42k above a witness m1: the left side of
/// P * B_d = 1 - 7A'_d - 2^d has valuation l = v7(d), the right side at
/// least l + 1, so no second theta-equation solution exists at m1 + d.
struct UniquenessReport {
    long m1;
    long k;
    long d;                   // 42k
    Valuation l;              // v7(d)
    Integer trace_p;          // P = Tr(theta^m1)
    Valuation v_trace;        // v7(P), expected 0
    Valuation v_b;            // v7(B_d), expected l
    Valuation v_lhs;          // v7(P * B_d), expected l
    Valuation v_two_pow;      // v7(2^d - 1), expected >= l + 1
    Valuation v_a_prime_plus; // 1 + v7(A'_d)
    Valuation v_rhs_bound;    // min of the previous two; lower bound on v7(A_d - 2^d)
    Valuation v_rhs_direct;   // v7(A_d - 2^d) computed directly
    bool a_prime_divisible;   // 7^l | A'_d
    bool contradiction;       // v_lhs < v_rhs_bound
    bool ok;                  // all sub-checks together
};

struct BinomialSweepRecord {
    long d_sweep;
    bool all_match;           // v7(B_d) = v7(d) over the whole range (exploratory)
    bool multiples_42_match;  // the same, restricted to d = 0 mod 42 (the relied-on claim)
    bool a_prime_all;         // 7^(v7(d)) | A'_d over the whole range
};

struct ComponentStatus {
    bool solutions_match_predicted;
    bool even_case_ok;
    bool sign_exclusion_ok;
    bool residue_classes_ok;
    bool theta_witnesses_ok;
    bool trace_sequence_ok;
    bool uniqueness_ok;
    bool binomial_sweep_ok;

    bool all() const {
        return solutions_match_predicted && even_case_ok && sign_exclusion_ok &&
               residue_classes_ok && theta_witnesses_ok && trace_sequence_ok &&
               uniqueness_ok && binomial_sweep_ok;
    }
    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        if (!solutions_match_predicted) out.push_back("solutions_match_predicted");
        if (!even_case_ok) out.push_back("even_case");
        if (!sign_exclusion_ok) out.push_back("sign_exclusion");
        if (!residue_classes_ok) out.push_back("residue_classes");
        if (!theta_witnesses_ok) out.push_back("theta_witnesses");
        if (!trace_sequence_ok) out.push_back("trace_sequence");
        if (!uniqueness_ok) out.push_back("uniqueness");
        if (!binomial_sweep_ok) out.push_back("binomial_sweep");
        return out;
    }
};

struct VerifyConfig {
    long n_max = 1000;
    long k_max = 50;
    long d_sweep = 500;
    long trace_mod7_max = 10000;
    long trace_cross_max = 2000;
};

struct Certificate {
    std::string engine;
    std::string version;
    VerifyConfig config;

    std::vector<SolutionPair> solutions;
    EvenCaseRecord even_case;
    std::vector<long> residue_classes;
    std::vector<ThetaWitness> theta_witnesses;
    SignExclusionRecord sign_exclusion;
    TraceSequenceRecord trace_sequence;
    std::vector<UniquenessReport> uniqueness;
    BinomialSweepRecord binomial_sweep;
    ComponentStatus components;
    bool pass;
};

// ---------------------------------------------------------------------------
// JSON encoding. Arbitrary-precision values are decimal strings so that no
// reader can silently round them; structural integers stay plain numbers.
// ---------------------------------------------------------------------------

inline Json json_of(const Integer& v) { return v.get_str(); }

inline Integer integer_of(const Json& j) {
    if (!j.is_string())
        throw std::invalid_argument("certificate: expected a decimal string integer");
    return Integer(j.get<std::string>());
}

inline Json json_of(const Valuation& v) {
    if (v.is_infinite())
        return "infinity";
    return v.value();
}

inline Valuation valuation_of(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "infinity")
            throw std::invalid_argument("certificate: bad valuation string");
        return Valuation::infinite();
    }
    return Valuation::finite(j.get<unsigned long>());
}

inline Json json_of(const SolutionPair& s) {
    return Json{{"n", s.n}, {"negative_also", s.x > 0}, {"x", json_of(s.x)}};
}

inline SolutionPair solution_of(const Json& j) {
    return SolutionPair{integer_of(j.at("x")), j.at("n").get<long>()};
}

inline Json json_of(const EvenCaseRecord& r) {
    Json pairs = Json::array();
    for (const auto& [u, v] : r.factor_pairs)
        pairs.push_back(Json::array({json_of(u), json_of(v)}));
    return Json{{"factor_pairs", pairs},
                {"n", r.n},
                {"ok", r.ok},
                {"power_of_two_ok", r.power_of_two_ok},
                {"two_pow_half", json_of(r.two_pow_half)},
                {"two_pow_one_plus_half", json_of(r.two_pow_one_plus_half)},
                {"x", json_of(r.x)}};
}

inline EvenCaseRecord even_case_of(const Json& j) {
    EvenCaseRecord r;
    for (const auto& p : j.at("factor_pairs"))
        r.factor_pairs.emplace_back(integer_of(p.at(0)), integer_of(p.at(1)));
    r.two_pow_one_plus_half = integer_of(j.at("two_pow_one_plus_half"));
    r.two_pow_half = integer_of(j.at("two_pow_half"));
    r.power_of_two_ok = j.at("power_of_two_ok").get<bool>();
    r.n = j.at("n").get<long>();
    r.x = integer_of(j.at("x"));
    r.ok = j.at("ok").get<bool>();
    return r;
}

inline Json json_of(const ThetaWitness& w) {
    return Json{{"b_m", json_of(w.b_m)},
                {"diff", Json::array({json_of(w.diff_a), json_of(w.diff_b)})},
                {"equation_holds", w.equation_holds},
                {"m", w.m},
                {"sqrt_coeff", json_of(w.sqrt_coeff)},
                {"trace", json_of(w.trace)}};
}

inline ThetaWitness theta_witness_of(const Json& j) {
    return ThetaWitness{j.at("m").get<long>(),
                        j.at("equation_holds").get<bool>(),
                        integer_of(j.at("diff").at(0)),
                        integer_of(j.at("diff").at(1)),
                        integer_of(j.at("b_m")),
                        integer_of(j.at("sqrt_coeff")),
                        integer_of(j.at("trace"))};
}

inline Json json_of(const SignExclusionRecord& r) {
    return Json{{"all_hold", r.all_hold},
                {"checked", r.checked},
                {"m_max", r.m_max},
                {"m_min", r.m_min}};
}

inline SignExclusionRecord sign_exclusion_of(const Json& j) {
    return SignExclusionRecord{j.at("m_min").get<long>(), j.at("m_max").get<long>(),
                               j.at("checked").get<long>(), j.at("all_hold").get<bool>()};
}

inline Json json_of(const TraceSequenceRecord& r) {
    return Json{{"cross_max", r.cross_max},
                {"cross_ok", r.cross_ok},
                {"mod7_max", r.mod7_max},
                {"mod7_ok", r.mod7_ok},
                {"pattern", Json::array({2, 1, 4})}};
}

inline TraceSequenceRecord trace_sequence_of(const Json& j) {
    return TraceSequenceRecord{j.at("mod7_max").get<long>(), j.at("mod7_ok").get<bool>(),
                               j.at("cross_max").get<long>(), j.at("cross_ok").get<bool>()};
}

inline Json json_of(const UniquenessReport& r) {
    return Json{{"a_prime_divisible", r.a_prime_divisible},
                {"contradiction", r.contradiction},
                {"d", r.d},
                {"k", r.k},
                {"l", json_of(r.l)},
                {"m1", r.m1},
                {"ok", r.ok},
                {"trace_p", json_of(r.trace_p)},
                {"v_a_prime_plus", json_of(r.v_a_prime_plus)},
                {"v_b", json_of(r.v_b)},
                {"v_lhs", json_of(r.v_lhs)},
                {"v_rhs_bound", json_of(r.v_rhs_bound)},
                {"v_rhs_direct", json_of(r.v_rhs_direct)},
                {"v_trace", json_of(r.v_trace)},
                {"v_two_pow", json_of(r.v_two_pow)}};
}

inline UniquenessReport uniqueness_of(const Json& j) {
    return UniquenessReport{j.at("m1").get<long>(),
                            j.at("k").get<long>(),
                            j.at("d").get<long>(),
                            valuation_of(j.at("l")),
                            integer_of(j.at("trace_p")),
                            valuation_of(j.at("v_trace")),
                            valuation_of(j.at("v_b")),
                            valuation_of(j.at("v_lhs")),
                            valuation_of(j.at("v_two_pow")),
                            valuation_of(j.at("v_a_prime_plus")),
                            valuation_of(j.at("v_rhs_bound")),
                            valuation_of(j.at("v_rhs_direct")),
                            j.at("a_prime_divisible").get<bool>(),
                            j.at("contradiction").get<bool>(),
                            j.at("ok").get<bool>()};
}

inline Json json_of(const ComponentStatus& c) {
    return Json{{"binomial_sweep", c.binomial_sweep_ok},
                {"even_case", c.even_case_ok},
                {"residue_classes", c.residue_classes_ok},
                {"sign_exclusion", c.sign_exclusion_ok},
                {"solutions_match_predicted", c.solutions_match_predicted},
                {"theta_witnesses", c.theta_witnesses_ok},
                {"trace_sequence", c.trace_sequence_ok},
                {"uniqueness", c.uniqueness_ok}};
}

inline ComponentStatus components_of(const Json& j) {
    return ComponentStatus{j.at("solutions_match_predicted").get<bool>(),
                           j.at("even_case").get<bool>(),
                           j.at("sign_exclusion").get<bool>(),
                           j.at("residue_classes").get<bool>(),
                           j.at("theta_witnesses").get<bool>(),
                           j.at("trace_sequence").get<bool>(),
                           j.at("uniqueness").get<bool>(),
                           j.at("binomial_sweep").get<bool>()};
}

inline Json json_of(const VerifyConfig& c) {
    return Json{{"d_sweep", c.d_sweep},
                {"k_max", c.k_max},
                {"n_max", c.n_max},
                {"trace_cross_max", c.trace_cross_max},
                {"trace_mod7_max", c.trace_mod7_max}};
}

inline VerifyConfig config_of(const Json& j) {
    VerifyConfig c;
    c.n_max = j.at("n_max").get<long>();
    c.k_max = j.at("k_max").get<long>();
    c.d_sweep = j.at("d_sweep").get<long>();
    c.trace_mod7_max = j.at("trace_mod7_max").get<long>();
    c.trace_cross_max = j.at("trace_cross_max").get<long>();
    return c;
}

inline Json certificate_to_json(const Certificate& c) {
    Json solutions = Json::array();
    for (const auto& s : c.solutions)
        solutions.push_back(json_of(s));

    Json witnesses = Json::array();
    for (const auto& w : c.theta_witnesses)
        witnesses.push_back(json_of(w));

    Json uniq = Json::array();
    for (const auto& u : c.uniqueness)
        uniq.push_back(json_of(u));

    Json sweeps = Json{{"a_prime_divisible_all", c.binomial_sweep.a_prime_all},
                       {"b_valuation_42_multiples_match", c.binomial_sweep.multiples_42_match},
                       {"b_valuation_all_match", c.binomial_sweep.all_match},
                       {"components", json_of(c.components)},
                       {"d_sweep", c.binomial_sweep.d_sweep},
                       {"k_max", c.config.k_max},
                       {"n_max", c.config.n_max},
                       {"sign_m_max", c.sign_exclusion.m_max},
                       {"trace_cross_max", c.config.trace_cross_max},
                       {"trace_mod7_max", c.config.trace_mod7_max}};

    return Json{{"even_case", json_of(c.even_case)},
                {"meta", Json{{"engine", c.engine},
                              {"parameters", json_of(c.config)},
                              {"version", c.version}}},
                {"residue_classes", c.residue_classes},
                {"sign_exclusion", json_of(c.sign_exclusion)},
                {"solutions", solutions},
                {"status", c.pass ? "PASS" : "FAIL"},
                {"sweeps", sweeps},
                {"theta_witnesses", witnesses},
                {"trace_sequence_check", json_of(c.trace_sequence)},
                {"uniqueness", uniq}};
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.engine = j.at("meta").at("engine").get<std::string>();
    c.version = j.at("meta").at("version").get<std::string>();
    c.config = config_of(j.at("meta").at("parameters"));
    for (const auto& s : j.at("solutions"))
        c.solutions.push_back(solution_of(s));
    c.even_case = even_case_of(j.at("even_case"));
    c.residue_classes = j.at("residue_classes").get<std::vector<long>>();
    for (const auto& w : j.at("theta_witnesses"))
        c.theta_witnesses.push_back(theta_witness_of(w));
    c.sign_exclusion = sign_exclusion_of(j.at("sign_exclusion"));
    c.trace_sequence = trace_sequence_of(j.at("trace_sequence_check"));
    for (const auto& u : j.at("uniqueness"))
        c.uniqueness.push_back(uniqueness_of(u));
    const Json& sw = j.at("sweeps");
    c.binomial_sweep = BinomialSweepRecord{sw.at("d_sweep").get<long>(),
                                           sw.at("b_valuation_all_match").get<bool>(),
                                           sw.at("b_valuation_42_multiples_match").get<bool>(),
                                           sw.at("a_prime_divisible_all").get<bool>()};
    c.components = components_of(sw.at("components"));
    c.pass = j.at("status").get<std::string>() == "PASS";
    return c;
}

/// First path at which two JSON documents differ, or empty when equal.
inline std::string first_json_mismatch(const Json& a, const Json& b, const std::string& path = "$") {
    if (a == b)
        return {};
    if (a.type() != b.type())
        return path;
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key()))
                return path + "." + it.key();
            const std::string sub = first_json_mismatch(it.value(), b.at(it.key()), path + "." + it.key());
            if (!sub.empty())
                return sub;
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key()))
                return path + "." + it.key();
        return path;
    }
    if (a.is_array()) {
        if (a.size() != b.size())
            return path + ".length";
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string sub =
                first_json_mismatch(a[i], b[i], path + "[" + std::to_string(i) + "]");
            if (!sub.empty())
                return sub;
        }
        return path;
    }
    return path;
}

}  // namespace rnagell

#include "midy/record.hpp"

namespace midy {

namespace {

constexpr Rule kAllRules[] = {
    Rule::halves_sum,       Rule::halves_fail,        Rule::all_p_fail,          Rule::complement_orbit,
    Rule::minus_identity_absent, Rule::minus_identity_tau, Rule::entry_point_odd, Rule::even_fibonacci_multiple,
    Rule::q_is_two,         Rule::q_is_five,          Rule::prime_pm2_mod5,      Rule::prime_pm1_mod5_list,
    Rule::prime_empty_list, Rule::mersenne_s3_mod4,   Rule::mersenne_s1_mod4,    Rule::mersenne_s2,
    Rule::fermat_small,     Rule::fermat_mod5,        Rule::undecided,
};

BigInt big_from(const Json& j) {
    BigInt v;
    if (j.is_string()) {
        if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::invalid_input, "bad integer in record");
    } else {
        v = BigInt(std::to_string(j.get<long long>()));
    }
    return v;
}

}  // namespace

Json to_json(const BetaBase& base) {
    Json j;
    Json coeffs = Json::array();
    for (const auto& c : base.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    j["polynomial"] = base.polynomial_string();
    j["degree"] = base.degree();
    j["digit_max"] = base.digit_max();
    j["unit"] = base.is_unit();
    j["pisot"] = to_string(base.pisot());
    j["purity"] = to_string(base.purity());
    return j;
}

Json to_json(const Expansion& exp) {
    Json j;
    j["p"] = exp.p.get_str();
    j["q"] = exp.q.get_str();
    j["integer_part"] = format_digits(exp.integer_part);
    j["preperiod"] = format_digits(exp.preperiod);
    j["period"] = format_digits(exp.period);
    j["period_length"] = exp.period.size();
    j["purely_periodic"] = exp.purely_periodic();
    j["truncated"] = exp.truncated;
    j["text"] = exp.to_string();
    return j;
}

Expansion expansion_from_json(const Json& j) {
    Expansion e;
    e.p = big_from(j.at("p"));
    e.q = big_from(j.at("q"));
    e.integer_part = parse_digits(j.at("integer_part").get<std::string>());
    e.preperiod = parse_digits(j.at("preperiod").get<std::string>());
    e.period = parse_digits(j.at("period").get<std::string>());
    e.truncated = j.at("truncated").get<bool>();
    return e;
}

Json to_json(const MidyVerdict& v) {
    Json j;
    j["decision"] = to_string(v.decision);
    j["rule"] = to_string(v.rule);
    Json c = Json::object();
    const Certificate& cert = v.certificate;
    if (cert.testifying_p) c["testifying_p"] = cert.testifying_p->get_str();
    if (cert.exponent) c["exponent_N"] = *cert.exponent;
    if (cert.period_length) c["period_length"] = *cert.period_length;
    if (cert.period) c["period"] = format_digits(*cert.period);
    if (cert.halves_sum_digits) c["halves_sum_digits"] = format_digits(*cert.halves_sum_digits);
    j["certificate"] = c;
    j["note"] = v.note;
    return j;
}

MidyVerdict verdict_from_json(const Json& j) {
    MidyVerdict v;
    v.decision = decision_from_string(j.at("decision").get<std::string>());
    v.rule = rule_from_string(j.at("rule").get<std::string>());
    v.note = j.value("note", "");
    const Json& c = j.at("certificate");
    if (c.contains("testifying_p")) v.certificate.testifying_p = big_from(c["testifying_p"]);
    if (c.contains("exponent_N")) v.certificate.exponent = c["exponent_N"].get<std::uint64_t>();
    if (c.contains("period_length")) v.certificate.period_length = c["period_length"].get<std::size_t>();
    if (c.contains("period")) v.certificate.period = parse_digits(c["period"].get<std::string>());
    if (c.contains("halves_sum_digits"))
        v.certificate.halves_sum_digits = parse_digits(c["halves_sum_digits"].get<std::string>());
    return v;
}

Json to_json(const RuleTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step;
        step["rule"] = to_string(s.rule);
        step["inputs"] = s.inputs;
        step["outcome"] = s.outcome;
        steps.push_back(step);
    }
    Json j;
    j["verdict"] = to_json(t.verdict);
    j["trace"] = steps;
    return j;
}

Json to_json(const ComplementResult& c) {
    Json j;
    switch (c.status) {
        case ComplementStatus::found: j["status"] = "found"; break;
        case ComplementStatus::absent: j["status"] = "absent"; break;
        case ComplementStatus::cap_exhausted: j["status"] = "cap-exhausted"; break;
    }
    if (c.exponent) {
        j["exponent_N"] = *c.exponent;
    } else {
        j["exponent_N"] = nullptr;
    }
    j["steps"] = c.steps;
    return j;
}

Decision decision_from_string(const std::string& s) {
    if (s == "yes") return Decision::yes;
    if (s == "no") return Decision::no;
    if (s == "unknown") return Decision::unknown;
    fail(ErrorKind::invalid_input, "unknown decision '" + s + "'");
}

Rule rule_from_string(const std::string& s) {
    for (Rule r : kAllRules)
        if (to_string(r) == s) return r;
    fail(ErrorKind::invalid_input, "unknown rule '" + s + "'");
}

}  // namespace midy

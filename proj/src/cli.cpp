#include "midy/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "midy/record.hpp"
#include "midy/selftest.hpp"

namespace midy {

namespace {

struct Output {
    std::string format = "text";
    Json record;
    std::vector<std::string> text;
};

Json header(const std::vector<std::string>& args) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = args;
    return j;
}

BigInt parse_big(const std::string& text, const std::string& what) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0) fail(ErrorKind::invalid_input, "bad " + what + " '" + text + "'");
    return v;
}

// "a/b", an integer, or a decimal such as 2.25.
Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_big(text.substr(0, slash), "numerator");
        BigInt den = parse_big(text.substr(slash + 1), "denominator");
        if (den == 0) fail(ErrorKind::invalid_input, "zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        BigInt whole = parse_big(text.substr(0, dot).empty() ? "0" : text.substr(0, dot), "value");
        BigInt f = frac.empty() ? BigInt(0) : parse_big(frac, "value");
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational r(whole * scale + f, scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_big(text, "value"));
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) fail(ErrorKind::invalid_input, "range must look like a..b");
    try {
        std::uint64_t a = std::stoull(text.substr(0, dots));
        std::uint64_t b = std::stoull(text.substr(dots + 2));
        if (a > b) fail(ErrorKind::invalid_input, "empty range " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        fail(ErrorKind::invalid_input, "bad range '" + text + "'");
    }
}

void emit(const Output& o, std::ostream& out) {
    if (o.format == "json") {
        out << o.record.dump(2) << '\n';
    } else {
        for (const auto& line : o.text) out << line << '\n';
    }
}

std::string verdict_line(const std::string& label, const MidyVerdict& v) {
    std::ostringstream s;
    s << label << ": " << to_string(v.decision) << " [" << to_string(v.rule) << "]";
    const Certificate& c = v.certificate;
    if (c.testifying_p) s << " p=" << c.testifying_p->get_str();
    if (c.exponent) s << " N=" << *c.exponent;
    if (c.period_length) s << " period_length=" << *c.period_length;
    if (c.halves_sum_digits) s << " halves_sum=" << format_digits(*c.halves_sum_digits);
    if (!v.note.empty()) s << " (" << v.note << ")";
    return s.str();
}

// ---------------------------------------------------------------- expand

int cmd_expand(const std::vector<std::string>& args, const std::string& base_text, const std::string& frac,
               const std::string& value, std::size_t max_digits, Output& o) {
    if (frac.empty() == value.empty()) fail(ErrorKind::invalid_input, "give exactly one of --frac or --value");
    BetaBase base = parse_base(base_text);
    Rational x = parse_rational(frac.empty() ? value : frac);
    if (x < 0) fail(ErrorKind::invalid_input, "value must be non-negative");
    Expansion exp = greedy_expand(x, base, max_digits);
    const bool admissible = is_admissible(exp, base);
    const bool reconstructed = !exp.truncated && verify_reconstruction(x.get_num(), x.get_den(), exp, base);

    o.record = header(args);
    o.record["base"] = to_json(base);
    o.record["inputs"] = {{"value", x.get_str()}, {"max_digits", max_digits}};
    Json result = to_json(exp);
    result["admissible"] = admissible;
    result["reconstruction"] = exp.truncated ? Json("not-applicable") : Json(reconstructed);
    o.record["result"] = result;

    o.text.push_back("base: " + base.polynomial_string());
    o.text.push_back("value: " + x.get_str());
    o.text.push_back("expansion: " + exp.to_string());
    o.text.push_back("integer_part: " + format_digits(exp.integer_part));
    o.text.push_back("preperiod: " + format_digits(exp.preperiod));
    o.text.push_back("period: " + format_digits(exp.period));
    o.text.push_back("period_length: " + std::to_string(exp.period.size()));
    o.text.push_back(std::string("purely_periodic: ") + (exp.purely_periodic() ? "true" : "false"));
    o.text.push_back(std::string("admissible: ") + (admissible ? "true" : "false"));
    if (exp.truncated) {
        o.text.push_back("truncated: no repeated state within " + std::to_string(max_digits) + " digits");
        return kExitCapExhausted;
    }
    o.text.push_back(std::string("reconstruction: ") + (reconstructed ? "true" : "false"));
    if (!admissible || !reconstructed) return kExitDisagreement;
    return kExitOk;
}

// ---------------------------------------------------------------- midy

int cmd_midy(const std::vector<std::string>& args, const std::string& base_text, const std::string& q_text,
             const std::string& p_text, const std::string& mode, std::size_t cap, Output& o) {
    BetaBase base = parse_base(base_text);
    BigInt q = parse_big(q_text, "q");
    if (q <= 2) fail(ErrorKind::invalid_input, "q must be greater than 2");
    std::optional<BigInt> p;
    if (!p_text.empty()) {
        p = parse_big(p_text, "p");
        if (*p <= 0 || *p >= q || gcd(*p, q) != 1) fail(ErrorKind::invalid_input, "p must satisfy 0 < p < q, gcd(p, q) = 1");
    }
    const bool golden = base == bases::golden();
    const bool run_def = mode == "def" || mode == "all";
    const bool run_comp = mode == "complement" || mode == "all";
    const bool run_matrix = mode == "matrix" || mode == "all";

    o.record = header(args);
    o.record["base"] = to_json(base);
    Json inputs = {{"q", q.get_str()}, {"mode", mode}};
    inputs["p"] = p ? Json(p->get_str()) : Json(nullptr);
    o.record["inputs"] = inputs;
    Json result = Json::object();
    o.text.push_back("base: " + base.polynomial_string());
    o.text.push_back("q: " + q.get_str());

    std::optional<MidyVerdict> def;
    bool def_exhaustive = false;
    if (run_def) {
        if (p || golden) {
            def = midy_by_definition(p.value_or(1), q, base, cap);
        } else {
            def = midy_try_all_p(q, base, cap);
            def_exhaustive = true;
        }
        result["definition"] = to_json(*def);
        o.text.push_back(verdict_line("definition", *def));
    }

    std::optional<ComplementResult> comp;
    BigInt comp_p = p.value_or(1);
    if (run_comp) {
        if (!p && def && def->certificate.testifying_p && def->decision == Decision::yes) comp_p = *def->certificate.testifying_p;
        comp = midy_by_complement(comp_p, q, base, cap);
        Json c = to_json(*comp);
        c["p"] = comp_p.get_str();
        result["complement"] = c;
        std::string line = "complement: p=" + comp_p.get_str() + " ";
        line += comp->status == ComplementStatus::found ? "N=" + std::to_string(*comp->exponent)
                : comp->status == ComplementStatus::absent ? std::string("absent")
                                                           : std::string("cap-exhausted");
        o.text.push_back(line);
    }

    std::optional<std::uint64_t> matrix_n;
    bool matrix_ran = false;
    std::string matrix_note;
    if (run_matrix) {
        try {
            matrix_n = necessary_condition(q, base);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::singular_modulus) throw;
            // A singular C has no power equal to the invertible -I.
            matrix_note = "companion matrix singular mod q";
        }
        matrix_ran = true;
        Json m;
        m["exponent_N"] = matrix_n ? Json(*matrix_n) : Json(nullptr);
        m["note"] = matrix_note;
        result["matrix"] = m;
        o.text.push_back("matrix: " + (matrix_n ? "C^" + std::to_string(*matrix_n) + " = -I mod q"
                                                : std::string("no power of C is -I mod q") +
                                                      (matrix_note.empty() ? "" : " (" + matrix_note + ")")));
    }

    // Combine.
    MidyVerdict overall;
    std::vector<std::string> conflicts;
    if (golden) {
        std::optional<Decision> dm, dd, dc;
        if (matrix_ran) dm = matrix_n ? Decision::yes : Decision::no;
        if (def) dd = def->decision;
        if (comp) {
            if (comp->status == ComplementStatus::cap_exhausted) fail(ErrorKind::cap_exhausted, "complement search hit the cap");
            dc = comp->status == ComplementStatus::found ? Decision::yes : Decision::no;
        }
        std::optional<Decision> agreed;
        for (auto d : {dm, dd, dc}) {
            if (!d) continue;
            if (agreed && *agreed != *d) conflicts.push_back("deciders disagree");
            agreed = d;
        }
        if (matrix_n && def && def->certificate.exponent && *def->certificate.exponent != *matrix_n)
            conflicts.push_back("matrix exponent differs from half the period");
        if (matrix_n && comp && comp->exponent && *comp->exponent != *matrix_n)
            conflicts.push_back("matrix exponent differs from complement exponent");
        overall.decision = agreed.value_or(Decision::unknown);
        if (dm) {
            overall.rule = matrix_n ? Rule::minus_identity_tau : Rule::minus_identity_absent;
        } else if (dd) {
            overall.rule = def->rule;
        } else {
            overall.rule = Rule::complement_orbit;
        }
        if (matrix_n) overall.certificate.exponent = *matrix_n;
        if (def) {
            overall.certificate.testifying_p = def->certificate.testifying_p;
            overall.certificate.period_length = def->certificate.period_length;
            overall.certificate.halves_sum_digits = def->certificate.halves_sum_digits;
            if (!overall.certificate.exponent) overall.certificate.exponent = def->certificate.exponent;
        }
    } else {
        // General bases: yes needs a testifying p, no needs an obstruction.
        if (def && def->decision == Decision::yes) {
            overall = *def;
        } else if (comp && comp->status == ComplementStatus::found) {
            overall.decision = Decision::yes;
            overall.rule = Rule::complement_orbit;
            overall.certificate.testifying_p = comp_p;
            overall.certificate.exponent = *comp->exponent;
        } else if (matrix_ran && !matrix_n) {
            overall.decision = Decision::no;
            overall.rule = Rule::minus_identity_absent;
            overall.note = matrix_note.empty() ? "no power of C equals -I mod q" : matrix_note;
        } else if (def && def_exhaustive && def->decision == Decision::no) {
            overall = *def;
            if (matrix_n)
                overall.note += "; the matrix condition holds with N=" + std::to_string(*matrix_n) +
                                " but is not sufficient for this base";
        } else {
            overall.decision = Decision::unknown;
            overall.rule = Rule::undecided;
            overall.note = "no testifying p found and no obstruction proven";
        }
        // The complement lemma is an equivalence for each fixed p.
        if (def && comp && def->certificate.testifying_p && *def->certificate.testifying_p == comp_p &&
            (def->decision == Decision::yes) != (comp->status == ComplementStatus::found) &&
            comp->status != ComplementStatus::cap_exhausted)
            conflicts.push_back("definition and complement disagree for p=" + comp_p.get_str());
        if (overall.decision == Decision::yes && matrix_ran && !matrix_n)
            conflicts.push_back("testifying p found but no power of C is -I");
    }
    result["overall"] = to_json(overall);
    result["conflicts"] = conflicts;
    o.record["result"] = result;
    o.text.push_back(verdict_line("overall", overall));
    for (const auto& c : conflicts) o.text.push_back("CONFLICT: " + c);
    if (!conflicts.empty()) return kExitDisagreement;
    if (overall.decision == Decision::unknown && comp && comp->status == ComplementStatus::cap_exhausted)
        return kExitCapExhausted;
    return kExitOk;
}

// ---------------------------------------------------------------- classify

Json crosscheck_json(const CrosscheckReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j;
        j["q"] = row.q;
        j["classified"] = to_string(row.classified);
        j["matrix"] = to_string(row.matrix);
        j["expansion"] = row.expansion ? Json(to_string(*row.expansion)) : Json(nullptr);
        rows.push_back(j);
    }
    return {{"rows", rows}, {"disagreements", r.disagreements}};
}

int cmd_classify(const std::vector<std::string>& args, const std::string& q_text, const std::string& range,
                 long mersenne, long fermat, bool force, bool mersenne_count_flag, bool crosscheck_flag, Output& o) {
    int chosen = !q_text.empty() + !range.empty() + (mersenne >= 0) + (fermat >= 0) + mersenne_count_flag;
    if (chosen != 1) fail(ErrorKind::invalid_input, "give exactly one of --q, --range, --mersenne, --fermat, --mersenne-count");
    o.record = header(args);
    Json result;
    int code = kExitOk;
    if (!q_text.empty()) {
        BigInt q = parse_big(q_text, "q");
        RuleTrace t = classify_prime(q, force);
        o.record["inputs"] = {{"q", q.get_str()}, {"force", force}};
        result = to_json(t);
        o.text.push_back(verdict_line("q=" + q.get_str(), t.verdict));
        for (const auto& s : t.steps) o.text.push_back("  " + to_string(s.rule) + ": " + s.inputs + " -> " + s.outcome);
    } else if (!range.empty()) {
        auto [a, b] = parse_range(range);
        o.record["inputs"] = {{"range", range}};
        Json rows = Json::array();
        std::size_t yes = 0, no = 0;
        for (std::uint64_t q : primes_up_to(b)) {
            if (q < a) continue;
            RuleTrace t = classify_prime(BigInt(static_cast<unsigned long>(q)));
            Json row = to_json(t.verdict);
            row = Json{{"q", q}, {"decision", row["decision"]}, {"rule", row["rule"]}};
            rows.push_back(row);
            (t.verdict.decision == Decision::yes ? yes : no) += 1;
            o.text.push_back(std::to_string(q) + ": " + to_string(t.verdict.decision) + " [" + to_string(t.verdict.rule) + "]");
        }
        result["rows"] = rows;
        result["summary"] = {{"primes", yes + no}, {"yes", yes}, {"no", no}};
        o.text.push_back("summary: primes=" + std::to_string(yes + no) + " yes=" + std::to_string(yes) +
                         " no=" + std::to_string(no));
        if (crosscheck_flag) {
            CrosscheckReport r = crosscheck(b);
            result["crosscheck"] = crosscheck_json(r);
            o.text.push_back("crosscheck disagreements: " + std::to_string(r.disagreements.size()));
            if (!r.disagreements.empty()) code = kExitDisagreement;
        }
    } else if (mersenne >= 0) {
        MidyVerdict v = mersenne_midy(static_cast<unsigned long>(mersenne), !force);
        o.record["inputs"] = {{"mersenne", mersenne}};
        result["verdict"] = to_json(v);
        o.text.push_back(verdict_line("2^" + std::to_string(mersenne) + " - 1", v));
    } else if (fermat >= 0) {
        MidyVerdict v = fermat_midy(static_cast<unsigned>(fermat), force);
        o.record["inputs"] = {{"fermat", fermat}};
        result["verdict"] = to_json(v);
        o.text.push_back(verdict_line("f_" + std::to_string(fermat), v));
    } else {
        MersenneCount c = mersenne_count(mersenne_exponents());
        o.record["inputs"] = {{"mersenne_count", true}};
        result = {{"known", c.total}, {"by_rule", c.by_rule}, {"including_s2", c.including_s2}, {"discrepancy", c.discrepancy}};
        o.text.push_back("known Mersenne primes: " + std::to_string(c.total));
        o.text.push_back("Midy by the s = 3 mod 4 rule: " + std::to_string(c.by_rule));
        o.text.push_back("Midy including s = 2: " + std::to_string(c.including_s2));
        if (!c.discrepancy.empty()) o.text.push_back("note: " + c.discrepancy);
    }
    o.record["result"] = result;
    return code;
}

// ---------------------------------------------------------------- entrypoint

std::filesystem::path cache_file() {
    const char* dir = std::getenv("MIDY_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / "entry_points.csv";
}

std::map<std::uint64_t, std::uint64_t> load_cache(const std::filesystem::path& path) {
    std::map<std::uint64_t, std::uint64_t> cache;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        try {
            cache[std::stoull(line.substr(0, comma))] = std::stoull(line.substr(comma + 1));
        } catch (const std::logic_error&) {
            // header or damaged line
        }
    }
    return cache;
}

int cmd_entrypoint(const std::vector<std::string>& args, const std::string& m_text, const std::string& range,
                   bool odd_only, Output& o) {
    if (m_text.empty() == range.empty()) fail(ErrorKind::invalid_input, "give exactly one of --m or --range");
    std::uint64_t lo, hi;
    if (!m_text.empty()) {
        BigInt m = parse_big(m_text, "m");
        if (m < 1 || !m.fits_ulong_p()) fail(ErrorKind::invalid_input, "m must be a positive 64-bit integer");
        lo = hi = m.get_ui();
    } else {
        std::tie(lo, hi) = parse_range(range);
        if (lo == 0) fail(ErrorKind::invalid_input, "m must be at least 1");
    }
    auto path = cache_file();
    auto cache = path.empty() ? std::map<std::uint64_t, std::uint64_t>{} : load_cache(path);
    const std::size_t cached_before = cache.size();

    o.record = header(args);
    o.record["inputs"] = {{"lo", lo}, {"hi", hi}, {"odd_only", odd_only}};
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "m,a\n";
    for (std::uint64_t m = lo; m <= hi; ++m) {
        auto it = cache.find(m);
        std::uint64_t a = it != cache.end() ? it->second : entry_point(m);
        cache[m] = a;
        if (odd_only && (m <= 2 || a % 2 == 0)) continue;
        rows.push_back({{"m", m}, {"a", a}});
        csv << m << ',' << a << '\n';
    }
    o.record["result"] = {{"rows", rows}};
    std::string line;
    std::istringstream lines(csv.str());
    while (std::getline(lines, line)) o.text.push_back(line);

    if (!path.empty() && cache.size() != cached_before) {
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        out << "m,a\n";
        for (const auto& [m, a] : cache) out << m << ',' << a << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const std::vector<std::string>& args, Output& o) {
    SelftestReport r = run_selftest();
    o.record = header(args);
    o.record["inputs"] = Json::object();
    o.record["result"] = {{"checks_run", r.run}, {"passed", r.passed.size()}, {"failures", r.failures}};
    for (const auto& f : r.failures) o.text.push_back("FAIL " + f);
    o.text.push_back("selftest: " + std::to_string(r.passed.size()) + "/" + std::to_string(r.run) + " checks passed");
    return r.ok() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const std::string& file, std::ostream& out, std::ostream& err) {
    Json record;
    try {
        if (file == "-") {
            record = Json::parse(std::cin);
        } else {
            std::ifstream in(file);
            if (!in) fail(ErrorKind::invalid_input, "cannot open " + file);
            record = Json::parse(in);
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::invalid_input, std::string("record is not valid JSON: ") + e.what());
    }
    if (record.value("schema", 0) != kSchemaVersion || !record.contains("command"))
        fail(ErrorKind::invalid_input, "record lacks schema 1 or command echo");
    std::vector<std::string> command = record["command"].get<std::vector<std::string>>();
    if (!command.empty() && command[0] == "replay") fail(ErrorKind::invalid_input, "refusing to replay a replay");
    std::ostringstream replay_out, replay_err;
    run_cli(command, replay_out, replay_err);
    Json again;
    try {
        again = Json::parse(replay_out.str());
    } catch (const Json::exception&) {
        err << "replay produced no JSON record: " << replay_err.str();
        return kExitFailure;
    }
    if (again["result"] == record["result"] && again["inputs"] == record["inputs"]) {
        out << "replay: identical\n";
        return kExitOk;
    }
    out << "replay: mismatch\n";
    return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta-expansions and the Midy property"};
    app.require_subcommand(1);
    Output o;
    std::string base_text = "1,1";
    std::size_t cap = kDefaultOrbitCap;

    auto add_format = [&](CLI::App* sub, const std::vector<std::string>& choices) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices));
    };

    std::string frac, value;
    auto* expand = app.add_subcommand("expand", "beta-expansion of a non-negative rational");
    expand->add_option("--base", base_text, "c0,...,c_{d-1} of X^d - c_{d-1}X^{d-1} - ... - c0");
    expand->add_option("--frac", frac, "p/q");
    expand->add_option("--value", value, "non-negative rational (a/b, integer or decimal)");
    expand->add_option("--max-digits", cap, "fractional digit budget");
    add_format(expand, {"text", "json"});

    std::string q_text, p_text, mode = "all";
    auto* midy = app.add_subcommand("midy", "decide the Midy property of q");
    midy->add_option("--base", base_text, "c0,...,c_{d-1}");
    midy->add_option("--q", q_text, "denominator q > 2")->required();
    midy->add_option("--p", p_text, "numerator to test");
    midy->add_option("--mode", mode, "def|complement|matrix|all")
        ->check(CLI::IsMember({"def", "complement", "matrix", "all"}));
    midy->add_option("--cap", cap, "orbit step cap");
    add_format(midy, {"text", "json"});

    std::string range;
    long mersenne = -1, fermat = -1;
    bool force = false, mcount = false, xcheck = false;
    auto* classify = app.add_subcommand("classify", "golden-base classification of primes");
    classify->add_option("--q", q_text, "prime q");
    classify->add_option("--range", range, "a..b");
    classify->add_option("--mersenne", mersenne, "Mersenne exponent s");
    classify->add_option("--fermat", fermat, "Fermat index n");
    classify->add_flag("--mersenne-count", mcount, "count Midy Mersenne primes among the known exponents");
    classify->add_flag("--crosscheck", xcheck, "with --range: compare against the matrix and expansion deciders");
    classify->add_flag("--force", force, "skip primality verification");
    add_format(classify, {"text", "json"});

    std::string m_text;
    bool odd_only = false;
    auto* entry = app.add_subcommand("entrypoint", "Fibonacci entry points a(m)");
    entry->add_option("--m", m_text, "modulus m >= 1");
    entry->add_option("--range", range, "a..b");
    entry->add_flag("--odd-only", odd_only, "only rows with m > 2 and odd a(m)");
    o.format = "csv";
    add_format(entry, {"csv", "json", "text"});

    auto* selftest = app.add_subcommand("selftest", "run the golden-example suite");
    add_format(selftest, {"text", "json"});

    std::string record_file;
    auto* replay = app.add_subcommand("replay", "re-run a JSON record and compare results");
    replay->add_option("record", record_file, "record file or - for stdin")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    if (!entry->parsed() && o.format == "csv") o.format = "text";

    try {
        int code = kExitOk;
        if (expand->parsed()) {
            code = cmd_expand(args, base_text, frac, value, cap, o);
        } else if (midy->parsed()) {
            code = cmd_midy(args, base_text, q_text, p_text, mode, cap, o);
        } else if (classify->parsed()) {
            code = cmd_classify(args, q_text, range, mersenne, fermat, force, mcount, xcheck, o);
        } else if (entry->parsed()) {
            code = cmd_entrypoint(args, m_text, range, odd_only, o);
        } else if (selftest->parsed()) {
            code = cmd_selftest(args, o);
        } else if (replay->parsed()) {
            return cmd_replay(record_file, out, err);
        }
        emit(o, out);
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::invalid_input:
            case ErrorKind::singular_modulus: return kExitInvalidInput;
            case ErrorKind::cap_exhausted: return kExitCapExhausted;
            case ErrorKind::cross_check: return kExitDisagreement;
            case ErrorKind::internal: return kExitFailure;
        }
        return kExitFailure;
    }
}

}  // namespace midy

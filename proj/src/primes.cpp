#include "midy/primes.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "midy/modular.hpp"
#include "mersenne_data.inc"

namespace midy {

namespace {

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned long s, unsigned long witness) {
    BigInt a = witness;
    if (a % n == 0) return true;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

std::string matrix_string(const ModMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m.at(i, j).get_str();
    }
    out << "]";
    return out.str();
}

}  // namespace

Primality test_primality(const BigInt& n) {
    if (n < 2) return {false, false};
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n == p) return {true, false};
        if (n % p == 0) return {false, false};
    }
    if (n < pow2(64)) {
        // These twelve witnesses are deterministic for every n < 3.3e24.
        BigInt d = n - 1;
        unsigned long s = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d >>= 1;
            ++s;
        }
        for (unsigned long w : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL})
            if (!miller_rabin_round(n, d, s, w)) return {false, false};
        return {true, false};
    }
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    return {r > 0, r == 1};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

RuleTrace classify_prime(const BigInt& q, bool force) {
    RuleTrace trace;
    auto step = [&](Rule rule, std::string inputs, std::string outcome) {
        trace.steps.push_back({rule, std::move(inputs), std::move(outcome)});
    };
    auto finish = [&](Decision d, Rule rule, std::string note = {}) {
        trace.verdict.decision = d;
        trace.verdict.rule = rule;
        trace.verdict.note = std::move(note);
        return trace;
    };

    Primality pr = test_primality(q);
    if (!pr.prime && !force) fail(ErrorKind::invalid_input, q.get_str() + " is not prime");
    step(Rule::undecided, "q=" + q.get_str(),
         pr.prime ? (pr.probabilistic ? "probable prime (Miller-Rabin, 40 rounds)" : "prime (deterministic)")
                  : "composite; classification forced");

    if (q == 2) {
        step(Rule::q_is_two, "q=2", "only fraction 1/2, odd period");
        return finish(Decision::no, Rule::q_is_two);
    }
    if (q == 5) {
        step(Rule::q_is_five, "q=5", "C^10 = -I mod 5");
        trace.verdict.certificate.exponent = 10;
        return finish(Decision::yes, Rule::q_is_five);
    }
    const unsigned long r5 = mod_floor(q, 5).get_ui();
    if (r5 == 2 || r5 == 3) {
        step(Rule::prime_pm2_mod5, "q mod 5 = " + std::to_string(r5), "yes");
        return finish(Decision::yes, Rule::prime_pm2_mod5);
    }
    if (r5 == 0) {
        step(Rule::undecided, "q mod 5 = 0", "q divisible by 5 but not 5");
        return finish(Decision::unknown, Rule::undecided, "not a prime");
    }
    BigInt ell = q - 1;
    unsigned long k = 0;
    while (mpz_even_p(ell.get_mpz_t())) {
        ell >>= 1;
        ++k;
    }
    const std::string split = "q - 1 = 2^" + std::to_string(k) + " * " + ell.get_str();
    if (k == 1) {
        step(Rule::prime_empty_list, split, "list C^{2l}, ..., C^{2^{k-1} l} is empty");
        return finish(Decision::no, Rule::prime_empty_list, "q = 19 or 11 mod 20");
    }
    ModMatrix m = companion_pow_mod(bases::golden(), 2 * ell, q);
    BigInt exponent = 2 * ell;
    for (unsigned long j = 1; j < k; ++j) {
        const bool minus = m.is_minus_identity();
        step(Rule::prime_pm1_mod5_list, "C^" + exponent.get_str() + " mod " + q.get_str(),
             matrix_string(m) + (minus ? " = -I" : ""));
        if (minus) {
            trace.verdict.certificate.exponent = exponent.get_ui();
            return finish(Decision::yes, Rule::prime_pm1_mod5_list, split);
        }
        m = m * m;
        exponent *= 2;
    }
    return finish(Decision::no, Rule::prime_pm1_mod5_list, split + "; no listed power is -I");
}

std::vector<unsigned long> load_exponent_list(const std::string& text) {
    std::vector<unsigned long> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            if (word.find_first_not_of("0123456789") != std::string::npos)
                fail(ErrorKind::invalid_input, "bad exponent '" + word + "'");
            out.push_back(std::stoul(word));
        }
    }
    return out;
}

const std::vector<unsigned long>& mersenne_exponents() {
    static const std::vector<unsigned long> list = load_exponent_list(kMersenneExponentData);
    return list;
}

MidyVerdict mersenne_midy(unsigned long s, bool verify) {
    const auto& known = mersenne_exponents();
    const bool listed = std::find(known.begin(), known.end(), s) != known.end();
    if (verify && !listed) {
        if (s > 20000) fail(ErrorKind::invalid_input, "cannot verify primality of 2^" + std::to_string(s) + " - 1");
        if (!test_primality(BigInt(s)).prime || !test_primality(pow2(s) - 1).prime)
            fail(ErrorKind::invalid_input, "2^" + std::to_string(s) + " - 1 is not prime");
    }
    MidyVerdict v;
    if (s == 2) {
        v.decision = Decision::yes;
        v.rule = Rule::mersenne_s2;
        v.note = "q = 3 = -2 mod 5; s = 2 is outside the s = 1, 3 mod 4 cases";
    } else if (s % 4 == 3) {
        v.decision = Decision::yes;
        v.rule = Rule::mersenne_s3_mod4;
        v.note = "2^s - 1 = 2 mod 5";
    } else if (s % 4 == 1) {
        v.decision = Decision::no;
        v.rule = Rule::mersenne_s1_mod4;
        v.note = "2^s - 1 = 19 mod 20";
    } else {
        fail(ErrorKind::invalid_input, "Mersenne exponent must be prime");
    }
    return v;
}

MersenneCount mersenne_count(const std::vector<unsigned long>& exponents) {
    MersenneCount c;
    c.total = exponents.size();
    bool has_two = false;
    for (unsigned long s : exponents) {
        if (s % 4 == 3) ++c.by_rule;
        if (s == 2) has_two = true;
    }
    c.including_s2 = c.by_rule + (has_two ? 1 : 0);
    if (has_two)
        c.discrepancy = "s = 2 (q = 3) has the Midy property but is covered by neither the s = 3 mod 4 rule (" +
                        std::to_string(c.by_rule) + ") nor the s = 1 mod 4 rule; counting it gives " +
                        std::to_string(c.including_s2);
    return c;
}

MidyVerdict fermat_midy(unsigned n, bool assume_prime) {
    if (n > 4 && !assume_prime)
        fail(ErrorKind::invalid_input, "f_" + std::to_string(n) + " is not a known Fermat prime");
    MidyVerdict v;
    v.decision = Decision::yes;
    if (n <= 1) {
        v.rule = Rule::fermat_small;
        v.note = n == 0 ? "f_0 = 3" : "f_1 = 5";
    } else {
        v.rule = Rule::fermat_mod5;
        v.note = "f_" + std::to_string(n) + " = 2 mod 5";
    }
    return v;
}

CrosscheckReport crosscheck(std::uint64_t q_max, std::uint64_t expansion_bound, unsigned workers) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_up_to(q_max))
        if (p > 2) primes.push_back(p);
    CrosscheckReport report;
    report.rows.resize(primes.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(primes.size(), 1));

    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < primes.size(); i += workers) {
            const BigInt q(static_cast<unsigned long>(primes[i]));
            CrosscheckRow row;
            row.q = primes[i];
            row.classified = classify_prime(q).verdict.decision;
            row.matrix = midy_tau(q, 0).decision;
            if (primes[i] <= expansion_bound) row.expansion = midy_by_definition(1, q, bases::golden()).decision;
            report.rows[i] = row;
        }
    };
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w));
    for (auto& j : jobs) j.get();

    for (const auto& row : report.rows) {
        bool agree = row.classified == row.matrix && (!row.expansion || *row.expansion == row.matrix);
        if (!agree) report.disagreements.push_back(row.q);
    }
    return report;
}

}  // namespace midy

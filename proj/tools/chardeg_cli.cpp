// chardeg: exact calculator for character degrees of C x| Gal(E/F) over
// finite fields, with cross-checked sweeps and machine-readable output.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chardeg/char_degrees.hpp"
#include "chardeg/field_model.hpp"
#include "chardeg/field_oracle.hpp"
#include "chardeg/numtheory.hpp"

using json = nlohmann::ordered_json;
using namespace chardeg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_mismatch = 3;

std::string join(const std::vector<uint32_t>& v, const char* sep = ";") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

json hypotheses_json(const HypothesisReport& h) {
    return json{{"q_is_mersenne", h.q_is_mersenne},
                {"e_even_gt1", h.e_even_gt1},
                {"index_is_pi_number", h.index_is_pi_number},
                {"four_divides_d", h.four_divides_d},
                {"main_theorem_applies", h.main_theorem_applies}};
}

json report_json(const DegreeReport& r) {
    json mult = json::object();
    for (const auto& [n, c] : r.multiplicities) mult[std::to_string(n)] = to_string(c);
    return json{{"method", method_name(r.method)},
                {"degrees", r.degrees},
                {"multiplicities", mult},
                {"orbit_count", to_string(r.orbit_count)}};
}

std::vector<uint32_t> predicted_degrees(uint32_t e) {
    std::vector<uint32_t> out;
    for (u128 n : divisors(factorize(e)))
        if (n != 2) out.push_back(uint32_t(n));
    return out;
}

struct SpecTask {
    u128 q;
    uint32_t e;
    u128 d;
};

struct SpecResult {
    SpecTask task;
    bool skipped = false;
    std::string skip_reason;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<uint32_t> degrees;
    std::string method;
};

SpecResult verify_one(const SpecTask& t) {
    SpecResult res;
    res.task = t;
    GroupSpec spec = make_group_spec(t.q, t.e, t.d);
    HypothesisReport hyp = validate_hypotheses(spec);
    DegreeReport formula = degree_set_divisor_formula(spec);
    res.degrees = formula.degrees;
    res.method = method_name(formula.method);
    if (!hyp.main_theorem_applies) {
        res.skipped = true;
        res.skip_reason = "hypotheses not met; skipped";
        return res;
    }
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            res.pass = false;
            res.failures.push_back(what);
        }
    };
    expect(formula.degrees == predicted_degrees(spec.e), "divisor formula != prediction");
    u128 sum_sq = 0, irr_count = 0;
    for (const auto& [n, c] : formula.multiplicities) {
        sum_sq += c * n * n;
        irr_count += c;
    }
    expect(sum_sq == spec.d * spec.e, "sum of squared degrees != |G|");
    if (spec.d <= bruteforce_orbit_limit) {
        DegreeReport bf = degree_set_bruteforce(spec);
        expect(bf.degrees == formula.degrees && bf.multiplicities == formula.multiplicities,
               "bruteforce disagrees with divisor formula");
        expect(no_degree_two_witness(spec), "found a character with stabilizer index 2");
    }
    GaloisConnectionResult gc = verify_galois_connection(spec);
    for (const auto& v : gc.violations) expect(false, "galois connection: " + v);
    if (spec.d * spec.e <= group_oracle_limit) {
        expect(conjugacy_class_count(spec) == irr_count, "class count != # irreducibles");
    }
    return res;
}

int run_degrees(u128 q, uint32_t e, u128 d, const std::string& format) {
    GroupSpec spec = make_group_spec(q, e, d);
    HypothesisReport hyp = validate_hypotheses(spec);
    DegreeReport report = degree_set_divisor_formula(spec);
    bool applicable = hyp.main_theorem_applies;
    std::vector<uint32_t> predicted = applicable ? predicted_degrees(e) : std::vector<uint32_t>{};
    bool match = !applicable || report.degrees == predicted;

    std::vector<CharOrbit> orbits;
    if (spec.d <= 1000) {
        std::vector<bool> seen(size_t(spec.d), false);
        for (u128 m = 0; m < spec.d; ++m) {
            if (seen[size_t(m)]) continue;
            CharOrbit o = orbit(m, spec);
            u128 cur = m;
            do {
                seen[size_t(cur)] = true;
                cur = mul_mod(cur, spec.q, spec.d);
            } while (cur != m);
            orbits.push_back(o);
        }
    }

    if (format == "json") {
        json doc{{"version", "1"},
                 {"command", "degrees"},
                 {"q", to_string(q)},
                 {"e", e},
                 {"d", to_string(d)},
                 {"hypotheses", hypotheses_json(hyp)},
                 {"report", report_json(report)}};
        if (!orbits.empty()) {
            json arr = json::array();
            for (const auto& o : orbits)
                arr.push_back(json{{"representative", to_string(o.representative)},
                                   {"size", o.size},
                                   {"subgroup_order", to_string(o.subgroup_order)}});
            doc["orbits"] = arr;
        }
        doc["prediction_applicable"] = applicable;
        if (applicable) {
            doc["predicted_degrees"] = predicted;
            doc["match"] = match;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "q,e,d,method,degrees\n"
                  << to_string(q) << "," << e << "," << to_string(d) << ","
                  << method_name(report.method) << "," << join(report.degrees) << "\n";
    } else {
        std::cout << "G = C x| Gal(E/F) with |F| = " << to_string(q) << ", [E:F] = " << e
                  << ", |C| = " << to_string(d) << "\n";
        std::cout << "hypotheses: mersenne=" << hyp.q_is_mersenne
                  << " e_even=" << hyp.e_even_gt1 << " pi_index=" << hyp.index_is_pi_number
                  << " 4|d=" << hyp.four_divides_d
                  << " -> main theorem applies: " << hyp.main_theorem_applies << "\n";
        std::cout << "degrees (" << method_name(report.method) << "): {" << join(report.degrees, ", ")
                  << "}\n";
        std::cout << "multiplicities:";
        for (const auto& [n, c] : report.multiplicities)
            std::cout << " " << n << "x" << to_string(c);
        std::cout << "\norbit count: " << to_string(report.orbit_count) << "\n";
        for (const auto& o : orbits)
            std::cout << "  orbit rep " << to_string(o.representative) << " size " << o.size
                      << " |<c^m>| " << to_string(o.subgroup_order) << "\n";
        if (applicable)
            std::cout << "prediction {" << join(predicted, ", ") << "}: "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
        else
            std::cout << "prediction not applicable\n";
    }
    return match ? exit_ok : exit_mismatch;
}

int run_verify(const std::vector<std::string>& q_list, uint32_t e_max, const std::string& format,
               unsigned parallel) {
    std::vector<u128> qs;
    for (const auto& s : q_list) qs.push_back(parse_u128(s));
    std::sort(qs.begin(), qs.end());
    std::vector<SpecTask> tasks;
    for (u128 q : qs) {
        for (uint32_t e = 2; e <= e_max; e += 2) {
            std::vector<u128> ds;
            try {
                ds = admissible_orders(q, e);
            } catch (const std::out_of_range&) {
                std::cerr << "range overflow: q = " << to_string(q) << ", e = " << e
                          << " exceeds 2^127 - 1\n";
                return exit_usage;
            }
            for (u128 d : ds) tasks.push_back({q, e, d});
        }
    }
    std::vector<SpecResult> results(tasks.size());
    if (parallel <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = verify_one(tasks[i]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < parallel; ++w) {
            workers.emplace_back([&, w] {
                for (size_t i = w; i < tasks.size(); i += parallel)
                    results[i] = verify_one(tasks[i]);
            });
        }
        for (auto& t : workers) t.join();
    }
    bool all_pass = true;
    for (const auto& r : results)
        if (!r.skipped && !r.pass) all_pass = false;

    if (format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            json row{{"q", to_string(r.task.q)},
                     {"e", r.task.e},
                     {"d", to_string(r.task.d)},
                     {"method", r.method},
                     {"degrees", r.degrees}};
            if (r.skipped) {
                row["status"] = "skipped";
                row["reason"] = r.skip_reason;
            } else {
                row["status"] = r.pass ? "pass" : "fail";
                if (!r.failures.empty()) row["failures"] = r.failures;
            }
            rows.push_back(row);
        }
        json doc{{"version", "1"}, {"command", "verify"}, {"specs", rows}, {"all_pass", all_pass}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "q,e,d,method,degrees\n";
        for (const auto& r : results)
            std::cout << to_string(r.task.q) << "," << r.task.e << "," << to_string(r.task.d)
                      << "," << r.method << "," << join(r.degrees) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << "q=" << to_string(r.task.q) << " e=" << r.task.e
                      << " d=" << to_string(r.task.d) << " degrees={" << join(r.degrees, ", ")
                      << "} ";
            if (r.skipped)
                std::cout << r.skip_reason << "\n";
            else if (r.pass)
                std::cout << "PASS\n";
            else {
                std::cout << "FAIL";
                for (const auto& f : r.failures) std::cout << " [" << f << "]";
                std::cout << "\n";
            }
        }
        std::cout << (all_pass ? "all specs passed" : "FAILURES PRESENT") << " ("
                  << results.size() << " specs)\n";
    }
    return all_pass ? exit_ok : exit_mismatch;
}

int run_mersenne(uint32_t p_max, const std::string& format) {
    json rows = json::array();
    std::ostringstream text;
    for (uint32_t p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        bool prime = lucas_lehmer(p);
        rows.push_back(json{{"p", p}, {"mersenne_prime", prime}});
        text << "2^" << p << " - 1 = " << to_string((u128(1) << p) - 1) << ": "
             << (prime ? "prime" : "composite") << "\n";
    }
    if (format == "json")
        std::cout << json{{"version", "1"}, {"command", "mersenne"}, {"results", rows}}.dump(2)
                  << "\n";
    else
        std::cout << text.str();
    return exit_ok;
}

int run_admissible(u128 q, uint32_t e, const std::string& format) {
    std::vector<u128> ds = admissible_orders(q, e);
    if (format == "json") {
        json arr = json::array();
        for (u128 d : ds) arr.push_back(to_string(d));
        std::cout << json{{"version", "1"},
                          {"command", "admissible"},
                          {"q", to_string(q)},
                          {"e", e},
                          {"orders", arr}}
                         .dump(2)
                  << "\n";
    } else {
        for (size_t i = 0; i < ds.size(); ++i) std::cout << (i ? " " : "") << to_string(ds[i]);
        std::cout << "\n";
    }
    return exit_ok;
}

int run_galois(u128 q, uint32_t e, u128 d, const std::string& format) {
    GroupSpec spec = make_group_spec(q, e, d);
    GaloisConnectionResult res = verify_galois_connection(spec);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : res.rows)
            rows.push_back(json{{"n", r.n},
                                {"intersection_order", to_string(r.intersection_order)},
                                {"hat_degree", r.hat_deg},
                                {"equality_holds", r.equality_holds},
                                {"exception_case", r.exception_case}});
        std::cout << json{{"version", "1"},
                          {"command", "galois"},
                          {"q", to_string(q)},
                          {"e", e},
                          {"d", to_string(d)},
                          {"rows", rows},
                          {"violations", res.violations}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n  |L^C|  hat_deg  status\n";
        for (const auto& r : res.rows) {
            std::cout << r.n << "  " << to_string(r.intersection_order) << "  " << r.hat_deg
                      << "  ";
            if (r.exception_case)
                std::cout << "exception (L = GF(q^2))";
            else
                std::cout << (r.equality_holds ? "equal" : "VIOLATION");
            std::cout << "\n";
        }
        for (const auto& v : res.violations) std::cout << "violation: " << v << "\n";
    }
    return res.ok() ? exit_ok : exit_mismatch;
}

int run_group_check(u128 q, uint32_t e, u128 d, const std::string& format) {
    GroupSpec spec = make_group_spec(q, e, d);
    u128 classes = conjugacy_class_count(spec);
    DegreeReport report = degree_set_bruteforce(spec);
    u128 irr_count = 0, sum_sq = 0;
    for (const auto& [n, c] : report.multiplicities) {
        irr_count += c;
        sum_sq += c * n * n;
    }
    bool class_ok = classes == irr_count;
    bool order_ok = sum_sq == spec.d * spec.e;
    if (format == "json") {
        std::cout << json{{"version", "1"},
                          {"command", "group-check"},
                          {"q", to_string(q)},
                          {"e", e},
                          {"d", to_string(d)},
                          {"conjugacy_classes", to_string(classes)},
                          {"irreducible_count", to_string(irr_count)},
                          {"sum_of_squares", to_string(sum_sq)},
                          {"group_order", to_string(spec.d * spec.e)},
                          {"class_count_matches", class_ok},
                          {"order_identity_holds", order_ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "conjugacy classes: " << to_string(classes) << "\n"
                  << "irreducible characters: " << to_string(irr_count) << "\n"
                  << "sum of squared degrees: " << to_string(sum_sq) << " (|G| = "
                  << to_string(spec.d * spec.e) << ")\n"
                  << (class_ok && order_ok ? "consistent" : "INCONSISTENT") << "\n";
    }
    return class_ok && order_ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character degrees of C x| Gal(E/F) over finite fields"};
    app.require_subcommand(1);

    std::string q_str, d_str, format = "text";
    uint32_t e = 0, e_max = 0, p_max = 0;
    unsigned parallel = 1;
    std::vector<std::string> q_list;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* degrees_cmd = app.add_subcommand("degrees", "degree set of one group");
    degrees_cmd->add_option("--q", q_str, "|F|, prime")->required();
    degrees_cmd->add_option("--e", e, "[E:F]")->required();
    degrees_cmd->add_option("--order", d_str, "|C|")->required();
    add_format(degrees_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "sweep all admissible groups");
    verify_cmd->add_option("--q-list", q_list, "comma-separated primes")->required()->delimiter(',');
    verify_cmd->add_option("--e-max", e_max, "largest even extension degree")->required();
    verify_cmd->add_option("--parallel", parallel, "worker count");
    add_format(verify_cmd);

    auto* mersenne_cmd = app.add_subcommand("mersenne", "classify 2^p - 1 for prime p <= p-max");
    mersenne_cmd->add_option("--p-max", p_max)->required();
    add_format(mersenne_cmd);

    auto* admissible_cmd = app.add_subcommand("admissible", "admissible |C| values");
    admissible_cmd->add_option("--q", q_str)->required();
    admissible_cmd->add_option("--e", e)->required();
    add_format(admissible_cmd);

    auto* galois_cmd = app.add_subcommand("galois", "subfield lattice verifier");
    galois_cmd->add_option("--q", q_str)->required();
    galois_cmd->add_option("--e", e)->required();
    galois_cmd->add_option("--order", d_str)->required();
    add_format(galois_cmd);

    auto* group_cmd = app.add_subcommand("group-check", "conjugacy class consistency oracle");
    group_cmd->add_option("--q", q_str)->required();
    group_cmd->add_option("--e", e)->required();
    group_cmd->add_option("--order", d_str)->required();
    add_format(group_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (degrees_cmd->parsed())
            return run_degrees(parse_u128(q_str), e, parse_u128(d_str), format);
        if (verify_cmd->parsed()) return run_verify(q_list, e_max, format, parallel);
        if (mersenne_cmd->parsed()) return run_mersenne(p_max, format);
        if (admissible_cmd->parsed()) return run_admissible(parse_u128(q_str), e, format);
        if (galois_cmd->parsed())
            return run_galois(parse_u128(q_str), e, parse_u128(d_str), format);
        if (group_cmd->parsed())
            return run_group_check(parse_u128(q_str), e, parse_u128(d_str), format);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

// Command-line surface for the Ramanujan-Nagell verification engine:
// exhaustive search, residue enumeration, theta diagnostics, valuation
// queries, and full verification with certificate output.
//
// Exit codes: 0 on success / PASS, 1 on verification FAIL, 2 on usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rnagell/rnagell.hpp"

namespace {

using namespace rnagell;

int run_search(long n_max, const std::string& format) {
    const std::vector<SolutionPair> solutions = brute_force_search(n_max);
    if (format == "json") {
        Json out = Json::array();
        for (const auto& s : solutions)
            out.push_back(json_of(s));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& s : solutions)
            std::cout << "(" << s.x << ", " << s.n << ")\n";
    }
    return 0;
}

int run_residues(const std::string& format) {
    const std::vector<long> classes = residue_classes_mod_42();
    if (format == "json") {
        std::cout << Json(classes).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << (i ? " " : "") << classes[i];
        std::cout << "\n";
    }
    return 0;
}

int run_theta(long m, const std::string& format) {
    const ThetaWitness w = verify_theta_equation(m);
    if (format == "json") {
        std::cout << json_of(w).dump(2) << "\n";
    } else {
        std::cout << "m = " << w.m << "\n"
                  << "theta^m - theta'^m = (" << w.diff_a << ", " << w.diff_b << ")\n"
                  << "B_m = " << w.b_m << "\n"
                  << "sqrt_coeff = " << w.sqrt_coeff << "\n"
                  << "trace = " << w.trace << "\n"
                  << "equation_holds = " << (w.equation_holds ? "true" : "false") << "\n";
    }
    return 0;
}

int run_valuation_vp(long p, const std::string& n_str, const std::string& format) {
    const Integer n(n_str);
    const Valuation v = v_p(p, n);
    if (format == "json") {
        std::cout << Json{{"n", n.get_str()}, {"p", p}, {"v", json_of(v)}}.dump(2) << "\n";
    } else {
        std::cout << "v_" << p << "(" << n << ") = " << v << "\n";
    }
    return 0;
}

int run_valuation_bsum(long d, const std::string& format) {
    const auto [vb, vd] = valuation_lemma_B(d);
    if (format == "json") {
        std::cout << Json{{"d", d}, {"v7_b_d", json_of(vb)}, {"v7_d", json_of(vd)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "v_7(B_" << d << ") = " << vb << "\n"
                  << "v_7(" << d << ") = " << vd << "\n";
    }
    return 0;
}

int run_verify(const VerifyConfig& config, const std::string& out_path) {
    const Certificate cert = full_verify(config);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "verify: cannot open output path: " << out_path << "\n";
        return 2;
    }
    out << certificate_to_json(cert).dump(2) << "\n";
    out.close();

    std::cout << (cert.pass ? "PASS" : "FAIL") << "\n";
    if (!cert.pass) {
        std::cerr << "verification failed:";
        for (const std::string& name : cert.components.failing())
            std::cerr << " " << name;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Ramanujan-Nagell theorem (x^2 + 7 = 2^n)"};
    app.require_subcommand(1);

    std::string format = "text";
    long n_max = 0, theta_m = 0, val_p = 0, b_sum_d = 0;
    std::string val_n;
    rnagell::VerifyConfig config;
    std::string out_path;

    CLI::App* search = app.add_subcommand("search", "List all solutions with n <= N");
    search->add_option("--max-n", n_max, "Search bound for the exponent n")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* residues =
        app.add_subcommand("residues", "Admissible classes of m modulo 42 in the odd case");
    residues->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* theta = app.add_subcommand(
        "theta", "Evaluate theta^m - theta'^m and the theta-equation status");
    theta->add_option("--m", theta_m, "Odd exponent m")->required()->check(CLI::PositiveNumber);
    theta->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* valuation = app.add_subcommand("valuation", "p-adic valuation queries");
    CLI::Option* opt_p =
        valuation->add_option("--p", val_p, "Prime p")->check(CLI::PositiveNumber);
    CLI::Option* opt_n = valuation->add_option("--n", val_n, "Integer to valuate");
    CLI::Option* opt_b =
        valuation->add_option("--b-sum", b_sum_d, "Report (v_7(B_d), v_7(d)) for this d")
            ->check(CLI::PositiveNumber)
            ->excludes(opt_p)
            ->excludes(opt_n);
    opt_p->needs(opt_n);
    opt_n->needs(opt_p);
    valuation->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full proof skeleton and write a certificate");
    verify->add_option("--max-n", config.n_max, "Search bound")->check(CLI::PositiveNumber);
    verify->add_option("--k-max", config.k_max, "Uniqueness sweep bound (d = 42k, k <= K)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--d-sweep", config.d_sweep, "Binomial valuation sweep bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "Certificate output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (search->parsed())
            return run_search(n_max, format);
        if (residues->parsed())
            return run_residues(format);
        if (theta->parsed())
            return run_theta(theta_m, format);
        if (valuation->parsed()) {
            if (static_cast<bool>(*opt_b))
                return run_valuation_bsum(b_sum_d, format);
            if (static_cast<bool>(*opt_p))
                return run_valuation_vp(val_p, val_n, format);
            std::cerr << "valuation: provide either --p with --n, or --b-sum\n";
            return 2;
        }
        if (verify->parsed())
            return run_verify(config, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// Command line surface: admissible-order queries, the two summary tables,
// Klein witnesses with quotient-singularity analysis, p.p.a.v. reports and
// the Gorinov bound. Exit codes: 0 ok, 2 domain error, 3 resource/effort
// cap, 64 usage.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hypaut/json_io.hpp"

namespace {

using namespace hypaut;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

std::string integer_validator(const std::string& s) {
    try {
        Integer v(s);
        (void)v;
    } catch (const std::exception&) {
        return "not an integer: " + s;
    }
    return {};
}

struct CommonArgs {
    int dim = 0;
    int deg = 0;
    std::string format = "plain";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_format = true) {
    cmd->add_option("--dim", args.dim, "dimension n of the hypersurface")
        ->required()
        ->check(CLI::Range(1, 1000));
    cmd->add_option("--deg", args.deg, "degree d of the hypersurface")
        ->required()
        ->check(CLI::Range(3, 1000));
    if (with_format)
        cmd->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"plain", "md", "markdown", "csv", "json"}));
}

void print_verdict_plain(std::ostream& os, const AdmissibilityVerdict& v) {
    os << v.value << ": " << to_string(v.verdict) << " (" << to_string(v.reason);
    if (v.ell) os << ", l=" << *v.ell;
    os << "); interpretation: " << to_string(v.interpretation) << "\n";
}

int run_admissible(const CommonArgs& args, const std::optional<std::string>& check, bool list,
                   bool max) {
    ProblemInstance inst = ProblemInstance::make(args.dim, args.deg);
    OutputFormat fmt = parse_output_format(args.format);
    if (check) {
        AdmissibilityVerdict v = is_realizable_order(inst, Integer(*check));
        if (fmt == OutputFormat::json)
            std::cout << to_json(v).dump(2) << "\n";
        else
            print_verdict_plain(std::cout, v);
        return kExitOk;
    }
    if (list) {
        auto primes = admissible_primes(inst);
        switch (fmt) {
            case OutputFormat::json: {
                ordered_json j;
                j["n"] = inst.n;
                j["d"] = inst.d;
                j["interpretation"] = to_string(inst.interpretation);
                j["admissible_primes"] = ordered_json::array();
                for (const Integer& p : primes) j["admissible_primes"].push_back(p.str());
                std::cout << j.dump(2) << "\n";
                break;
            }
            case OutputFormat::csv: {
                std::cout << "p\n";
                for (const Integer& p : primes) std::cout << p << "\n";
                break;
            }
            case OutputFormat::markdown: {
                AdmissibleTable t;
                t.degree = inst.d;
                t.rows.push_back({inst.n, primes});
                std::cout << render_table1(t, OutputFormat::markdown);
                break;
            }
            case OutputFormat::plain:
                std::cout << join_primes(primes) << "\n";
                break;
        }
        return kExitOk;
    }
    if (max) {
        Integer p = max_admissible_prime(inst);
        ExtremalReport er = extremal_report(inst);
        if (fmt == OutputFormat::json) {
            ordered_json j;
            j["n"] = inst.n;
            j["d"] = inst.d;
            j["interpretation"] = to_string(inst.interpretation);
            j["max_admissible_prime"] = p.str();
            j["extremal"] = to_json(er);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "max admissible prime: " << p << "\n";
            std::cout << "interpretation: " << to_string(inst.interpretation) << "\n";
            if (er.exists)
                std::cout << "extremal: yes, p = Phi_" << inst.n + 2 << "(" << 1 - inst.d
                          << ") = " << er.phi_value << "\n";
            else
                std::cout << "extremal: no\n";
        }
        return kExitOk;
    }
    return kExitUsage;  // unreachable; option group enforces one mode
}

int run_table(int which, const std::vector<int>& rows, const std::string& format) {
    OutputFormat fmt = parse_output_format(format);
    if (which == 1) {
        AdmissibleTable t =
            rows.empty() ? compute_table1() : compute_table1(rows);
        std::cout << render_table1(t, fmt);
    } else {
        MaxPrimeTable t = rows.empty() ? compute_table2() : compute_table2(rows);
        std::cout << render_table2(t, fmt);
    }
    return kExitOk;
}

// Largest prime p | (1-d)^{n+2} - 1 on which 1-d has full order n+2; the
// natural modulus for the Klein signature.
std::optional<Integer> detect_klein_modulus(const ProblemInstance& inst) {
    const int m = inst.n + 2;
    const Integer base = inst.one_minus_d();
    Integer value = boost::multiprecision::pow(base, unsigned(m)) - 1;
    auto primes = factorize(value).primes();
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
        bool full = true;
        for (int e = 1; e < m && full; ++e)
            if (m % e == 0 && mod_pow(base, e, *it) == 1) full = false;
        if (full) return *it;
    }
    return std::nullopt;
}

int run_klein(const CommonArgs& args, const std::optional<std::string>& witness,
              bool singularity) {
    ProblemInstance inst = ProblemInstance::make(args.dim, args.deg);
    OutputFormat fmt = parse_output_format(args.format);
    Integer q;
    if (witness) {
        q = Integer(*witness);
    } else {
        auto detected = detect_klein_modulus(inst);
        if (!detected)
            throw std::domain_error(
                "no prime with full multiplicative order n+2 divides (1-d)^{n+2}-1; pass an "
                "explicit modulus with --witness");
        q = *detected;
    }
    Witness w = klein_form(inst.n, inst.d, q);
    ExtremalReport er = extremal_report(inst);
    bool smooth = is_smooth_standard(w);

    std::optional<SingularityType> sing;
    std::optional<GorensteinResult> goren;
    if (singularity) {
        if (!is_prime(q).prime)
            throw std::domain_error("singularity analysis needs a prime order, got " + q.str());
        sing = quotient_singularity_type(inst, q);
        goren = is_gorenstein(*sing);
    }

    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["n"] = inst.n;
        j["d"] = inst.d;
        j["interpretation"] = to_string(inst.interpretation);
        j["witness"] = to_json(w);
        j["smooth"] = smooth;
        j["extremal"] = to_json(er);
        j["singularity"] = sing ? to_json(*sing) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "Klein hypersurface n=" << inst.n << " d=" << inst.d << "\n";
    std::cout << "form:";
    bool first = true;
    for (const auto& [m, c] : w.form.terms) {
        std::cout << (first ? " " : " + ");
        first = false;
        if (c != 1) std::cout << c << "*";
        std::cout << monomial_to_string(m);
    }
    std::cout << "\n";
    std::cout << "order: " << w.order << "\n";
    std::cout << "signature: diag(";
    for (size_t i = 0; i < w.signature.sigma.size(); ++i)
        std::cout << (i ? ", " : "") << w.signature.sigma[i];
    std::cout << ") mod " << w.signature.q << "\n";
    std::cout << "smooth: " << (smooth ? "yes" : "no") << "\n";
    if (er.exists)
        std::cout << "extremal prime: " << *er.p << "\n";
    else
        std::cout << "extremal prime: none (Phi_" << inst.n + 2 << "(" << 1 - inst.d
                  << ") = " << er.phi_value << ", " << to_string(er.phi_primality.certainty)
                  << (er.n_is_2 || er.n_plus_2_prime ? "" : "; n+2 not prime and n != 2") << ")\n";
    std::cout << "interpretation: " << to_string(inst.interpretation) << "\n";
    if (sing) {
        std::cout << "singularity type: 1/" << sing->p << "(";
        for (size_t i = 0; i < sing->weights.size(); ++i)
            std::cout << (i ? "," : "") << sing->weights[i];
        std::cout << ")\n";
        std::cout << "gorenstein: " << (goren->gorenstein ? "yes" : "no") << " (defect "
                  << goren->defect << ")\n";
    }
    return kExitOk;
}

int run_jacobian(const CommonArgs& args, const std::optional<std::string>& stabilizer) {
    ProblemInstance inst = ProblemInstance::make(args.dim, args.deg);
    OutputFormat fmt = parse_output_format(args.format);
    std::optional<Integer> k;
    if (stabilizer) k = Integer(*stabilizer);
    PpavReport r = ppav_full_report(inst, k);
    if (fmt == OutputFormat::json) {
        std::cout << to_json(r).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "p.p.a.v. report for the Klein hypersurface n=" << r.n << " d=" << r.d << "\n";
    std::cout << "p: " << r.p << "  g: " << r.g << "  extremal: " << (r.extremal ? "yes" : "no")
              << " (p = 2g+1)\n";
    std::cout << "signature: diag(";
    for (size_t i = 0; i < r.klein_signature.sigma.size(); ++i)
        std::cout << (i ? ", " : "") << r.klein_signature.sigma[i];
    std::cout << ") mod " << r.p << "\n";
    std::cout << "tangent piece: " << r.label_tangent << " = R^" << r.tangent_degree
              << " (residue label " << r.label_residue << ")\n";
    std::cout << "spectrum: " << spectrum_xi_notation(r.spectrum) << "\n";
    std::cout << "stabilizer: {";
    for (size_t i = 0; i < r.stabilizer.size(); ++i)
        std::cout << (i ? ", " : "") << r.stabilizer[i];
    std::cout << "}\n";
    std::cout << "stabilizer element: " << r.stabilizer_element << " (order "
              << r.permutation_order << ")\n";
    std::cout << "permutation: " << cycles_to_string(r.cycles) << "\n";
    std::cout << "eigenvalue multiplicities: (";
    for (size_t i = 0; i < r.eigen_multiplicities.size(); ++i)
        std::cout << (i ? ", " : "") << r.eigen_multiplicities[i];
    std::cout << ")\n";
    std::cout << "component dimension in Sing A_" << r.g << ": " << r.component_dimension
              << "\n";
    return kExitOk;
}

int run_gorinov(const CommonArgs& args, bool check_conjecture) {
    ProblemInstance inst = ProblemInstance::make(args.dim, args.deg);
    OutputFormat fmt = parse_output_format(args.format);
    if (!check_conjecture) {
        GorinovBound b = gorinov_bound(inst);
        if (fmt == OutputFormat::json) {
            ordered_json j;
            j["n"] = inst.n;
            j["d"] = inst.d;
            j["bound"] = to_json(b);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Gorinov bound B for n=" << inst.n << " d=" << inst.d << "\n";
            if (b.integral)
                std::cout << "B = " << b.numerator << " (integral)\n";
            else
                std::cout << "B = " << b.numerator << "/" << b.denominator
                          << " (NOT integral)\n";
        }
        return kExitOk;
    }
    GorinovConjectureReport r = check_gorinov_conjecture(inst);
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["n"] = inst.n;
        j["d"] = inst.d;
        j.update(to_json(r));
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "B = " << r.bound.numerator << " (integral)\n";
    std::cout << "prime factors of B, with the covering case and the verdict:\n";
    for (const auto& e : r.entries) {
        std::cout << "  " << e.p << ": ";
        switch (e.covered_by) {
            case GorinovConjectureReport::Case::cyclotomic_factor:
                std::cout << "divides (1-d)^" << *e.factor_exponent << " - 1";
                break;
            case GorinovConjectureReport::Case::divides_d_minus_1:
                std::cout << "divides d-1";
                break;
            case GorinovConjectureReport::Case::small_prime:
                std::cout << "p <= n+2";
                break;
            case GorinovConjectureReport::Case::uncovered:
                std::cout << "UNCOVERED";
                break;
        }
        std::cout << " -> " << to_string(e.verdict.verdict);
        if (e.verdict.ell) std::cout << " (l=" << *e.verdict.ell << ")";
        std::cout << "\n";
    }
    std::cout << (r.all_realizable ? "all prime factors realizable\n"
                                   : "SOME PRIME FACTOR NOT REALIZABLE\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypaut: orders of automorphisms of smooth hypersurfaces, exactly"};
    app.require_subcommand(1);
    app.footer(
        "Factoring effort is capped by the HYPAUT_EFFORT environment variable\n"
        "(Brent-rho iterations per cofactor, default 5000000).");

    CommonArgs adm_args;
    std::optional<std::string> adm_check;
    bool adm_list = false, adm_max = false;
    CLI::App* adm = app.add_subcommand("admissible", "admissible prime / order queries");
    add_common(adm, adm_args);
    auto* check_opt = adm->add_option("--check", adm_check, "decide one order q")
                          ->check(integer_validator);
    auto* list_opt = adm->add_flag("--list", adm_list, "list all admissible primes");
    auto* max_opt = adm->add_flag("--max", adm_max, "maximal admissible prime");
    // exactly one mode
    check_opt->excludes(list_opt)->excludes(max_opt);
    list_opt->excludes(max_opt);

    int table_which = 0;
    std::vector<int> table_rows;
    std::string table_format = "md";
    CLI::App* table = app.add_subcommand("table", "regenerate the summary tables");
    table->add_option("--which", table_which, "1: admissible primes in degree 4; 2: maxima")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    table->add_option("--rows", table_rows, "restrict to these dimensions n")
        ->check(CLI::Range(1, 1000));
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"plain", "md", "markdown", "csv", "json"}));

    CommonArgs klein_args;
    std::optional<std::string> klein_witness;
    bool klein_sing = false;
    CLI::App* klein = app.add_subcommand("klein", "Klein hypersurface witness and quotient");
    add_common(klein, klein_args);
    klein->add_option("--witness", klein_witness, "explicit automorphism order q")
        ->check(integer_validator);
    klein->add_flag("--singularity", klein_sing, "quotient singularity type and Gorenstein");

    CommonArgs jac_args;
    std::optional<std::string> jac_stab;
    CLI::App* jac = app.add_subcommand("jacobian", "intermediate Jacobian p.p.a.v. report");
    add_common(jac, jac_args);
    jac->add_option("--stabilizer", jac_stab, "stabilizer element k for the Galois permutation")
        ->check(integer_validator);

    CommonArgs gor_args;
    bool gor_conj = false;
    CLI::App* gor = app.add_subcommand("gorinov", "Gorinov bound B");
    add_common(gor, gor_args);
    gor->add_flag("--check-conjecture", gor_conj, "certify every prime factor of B realizable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (adm->parsed()) {
            if (!adm_check && !adm_list && !adm_max) {
                std::cerr << "admissible: pass one of --check Q, --list, --max\n";
                return kExitUsage;
            }
            return run_admissible(adm_args, adm_check, adm_list, adm_max);
        }
        if (table->parsed()) return run_table(table_which, table_rows, table_format);
        if (klein->parsed()) return run_klein(klein_args, klein_witness, klein_sing);
        if (jac->parsed()) return run_jacobian(jac_args, jac_stab);
        if (gor->parsed()) return run_gorinov(gor_args, gor_conj);
    } catch (const hypaut::effort_error& e) {
        std::cerr << "error (effort): " << e.what() << "\n";
        return kExitResource;
    } catch (const hypaut::resource_error& e) {
        std::cerr << "error (resource): " << e.what() << "\n";
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const hypaut::inconsistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

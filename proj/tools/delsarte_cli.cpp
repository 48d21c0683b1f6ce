// Command-line front end: analyze, fermat, zeta, lattice, enumerate, cmtype.
// Exit codes: 0 success, 2 usage/parse errors, 3 invalid surface or
// non-semi-invariant automorphism, 4 verification mismatch.

#include "delsarte/automorphisms.hpp"
#include "delsarte/characters.hpp"
#include "delsarte/enumerate.hpp"
#include "delsarte/lattice.hpp"
#include "delsarte/surface.hpp"
#include "delsarte/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace delsarte;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidSurface = 3;
constexpr int kExitMismatch = 4;

json matrix_json(const ExponentMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back({r[0], r[1], r[2], r[3]});
    return rows;
}

json orbits_json(const std::vector<CharacterOrbit>& orbits) {
    json arr = json::array();
    for (const auto& o : orbits) {
        arr.push_back({{"representative", {o.representative.a[0], o.representative.a[1],
                                           o.representative.a[2], o.representative.a[3]}},
                       {"size", o.size()}});
    }
    return arr;
}

std::string orbit_summary(const std::vector<CharacterOrbit>& orbits) {
    std::ostringstream os;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (i) os << ", ";
        os << orbits[i].representative.to_string() << " x" << orbits[i].size();
    }
    return orbits.empty() ? "none" : os.str();
}

DelsarteSurface parse_surface_or_exit(const std::string& poly) {
    try {
        return parse_exponent_matrix(poly);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitUsage);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid surface: " << e.what() << "\n";
        std::exit(kExitInvalidSurface);
    }
}

int cmd_analyze(const std::string& poly, bool as_json) {
    DelsarteSurface s = parse_surface_or_exit(poly);
    DelsarteAnalysis an;
    try {
        an = analyze(s);
    } catch (const std::domain_error& e) {
        std::cerr << "analysis failed: " << e.what() << "\n";
        return kExitInvalidSurface;
    }
    if (as_json) {
        json out;
        out["polynomial"] = s.polynomial_string();
        out["m"] = an.covering.m;
        out["B"] = matrix_json(an.covering.b);
        out["g_order"] = an.covering.g_order().str();
        out["lambda"] = an.lambda;
        out["h20"] = an.h20;
        if (an.picard) out["picard"] = *an.picard;
        else out["picard"] = nullptr;
        out["orbits"] = orbits_json(an.transcendental_orbits);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "polynomial: " << s.polynomial_string() << "\n";
    std::cout << "m: " << an.covering.m << "\n";
    std::cout << "B: " << matrix_json(an.covering.b).dump() << "\n";
    std::cout << "|G|: " << an.covering.g_order() << "\n";
    std::cout << "lambda: " << an.lambda << "\n";
    std::cout << "h20: " << an.h20 << "\n";
    if (an.picard) std::cout << "picard: " << *an.picard << "\n";
    else
        std::cout << "picard: not computed (RDP filter failed: h20 = " << an.h20
                  << " != 4)\n";
    std::cout << "invariant transcendental orbits: " << orbit_summary(an.transcendental_orbits)
              << "\n";
    return 0;
}

int cmd_fermat(long m) {
    if (m < 3) {
        std::cerr << "fermat: m must be >= 3\n";
        return kExitUsage;
    }
    auto orbits = orbit_decomposition(transcendental_type_set(m));
    long lambda = 0;
    for (const auto& o : orbits) lambda += static_cast<long>(o.size());
    std::cout << "b2: " << fermat_b2(m) << "\n";
    std::cout << "lambda: " << lambda << "\n";
    std::cout << "picard: " << fermat_b2(m) - lambda << "\n";
    std::cout << "transcendental orbits (" << orbits.size() << "): " << orbit_summary(orbits)
              << "\n";
    return 0;
}

int cmd_zeta(const std::string& poly, long q, bool verify) {
    DelsarteSurface s = parse_surface_or_exit(poly);
    if (!is_prime(q)) {
        std::cerr << "zeta: " << q << " is not prime\n";
        return kExitUsage;
    }
    LocalZeta z;
    try {
        z = zeta_local(s, q);
    } catch (const std::domain_error& e) {
        std::cerr << "zeta: " << e.what() << "\n";
        return kExitInvalidSurface;
    } catch (const std::invalid_argument& e) {
        std::cerr << "zeta: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "NS factor: " << z.ns_factor.to_string() << "\n";
    std::cout << "transcendental factor: " << z.transcendental_factor.to_string() << "\n";
    std::cout << "denominator degree: " << z.denominator.degree() << "\n";
    std::cout << "Z(T) = 1 / [(1 - T) * NS * L * (1 - " << Integer(q) * q << "*T)]\n";
    if (verify) {
        TraceReport r;
        try {
            r = verify_resolution_trace(s, q);
        } catch (const std::invalid_argument& e) {
            std::cerr << "zeta --verify: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cout << "trace check at q=" << q << ":\n";
        std::cout << "  jacobi orbit sum: " << r.jacobi_orbit_sum << "\n";
        std::cout << "  1 + 45q + q^2 + sum = " << r.lhs << "\n";
        std::cout << "  #Y(F_q) + 36q = " << r.points_singular_model << " + " << 36 * q << " = "
                  << r.rhs << "\n";
        std::cout << "  " << (r.equal ? "EQUAL" : "MISMATCH") << "\n";
        if (!r.equal) return kExitMismatch;
    }
    return 0;
}

int cmd_lattice(const std::string& file, bool as_json) {
    CurveConfig config;
    if (file.empty()) {
        config = build_quintic_config();
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "lattice: cannot open " << file << "\n";
            return kExitUsage;
        }
        try {
            config = parse_curve_config(in);
        } catch (const std::exception& e) {
            std::cerr << "lattice: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    GramMatrix g;
    try {
        g = gram(config);
    } catch (const std::exception& e) {
        std::cerr << "lattice: " << e.what() << "\n";
        return kExitUsage;
    }
    Integer d = g.entries.rows() ? det_exact(g) : Integer(1);
    auto sig = signature(g.entries);
    std::size_t rk = rank(g.entries);

    std::ostringstream factors;
    auto fac = factorize(d);
    for (std::size_t i = 0; i < fac.size(); ++i) {
        if (i) factors << " * ";
        factors << fac[i].first;
        if (fac[i].second > 1) factors << "^" << fac[i].second;
    }
    if (as_json) {
        json out;
        out["n"] = g.names.size();
        out["det"] = d.str();
        out["det_factorization"] = factors.str();
        out["rank"] = rk;
        out["signature"] = {sig.n_pos, sig.n_neg, sig.n_zero};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n: " << g.names.size() << "\n";
    std::cout << "det: " << d;
    if (!fac.empty()) std::cout << " = " << factors.str();
    std::cout << "\n";
    std::cout << "rank: " << rk << "\n";
    std::cout << "signature: (" << sig.n_pos << "," << sig.n_neg << "," << sig.n_zero << ")\n";
    return 0;
}

int cmd_enumerate(long degree, const std::string& out_file, const std::string& golden_file,
                  bool resume, unsigned threads) {
    std::vector<CandidateRecord> prior;
    if (resume && !out_file.empty() && std::filesystem::exists(out_file)) {
        std::ifstream in(out_file);
        try {
            prior = read_results_file(in, /*allow_partial=*/true).records;
            std::cerr << "resume: reusing " << prior.size() << " classified records\n";
        } catch (const std::exception& e) {
            std::cerr << "resume: ignoring unreadable " << out_file << " (" << e.what() << ")\n";
        }
    }
    EnumerationResult result = run_enumeration(degree, threads, prior.empty() ? nullptr : &prior);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        write_results_file(out, result);
    }

    std::cout << "degree: " << degree << "\n";
    std::cout << "monomial 4-subsets: " << result.subsets_total << "\n";
    std::cout << "canonical candidates: " << result.candidates_canonical << "\n";
    auto spectrum = result.picard_spectrum();
    std::cout << "picard spectrum (" << spectrum.size() << " values):\n";
    for (const auto& [rho, idx] : spectrum)
        std::cout << "  rho=" << rho << "  witness: " << result.records[idx].polynomial_string()
                  << "\n";
    auto top = result.with_picard(45);
    std::cout << "rho=45 canonical classes: " << top.size() << "\n";
    for (const auto* rec : top) std::cout << "  " << rec->polynomial_string() << "\n";

    if (!golden_file.empty()) {
        std::ifstream gf(golden_file);
        if (!gf) {
            std::cerr << "enumerate: cannot open golden file " << golden_file << "\n";
            return kExitUsage;
        }
        int mismatches = 0;
        std::string line;
        while (std::getline(gf, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string poly;
            long rho;
            if (!(ls >> poly >> rho)) {
                std::cerr << "enumerate: bad golden line: " << line << "\n";
                return kExitUsage;
            }
            try {
                DelsarteSurface s = parse_exponent_matrix(poly);
                long got = picard_number_quintic(s);
                if (got != rho) {
                    std::cout << "GOLDEN MISMATCH: " << poly << " expected rho=" << rho
                              << " got " << got << "\n";
                    ++mismatches;
                } else {
                    std::cout << "golden ok: " << poly << " rho=" << rho << "\n";
                }
            } catch (const std::exception& e) {
                std::cout << "GOLDEN MISMATCH: " << poly << " expected rho=" << rho
                          << " but: " << e.what() << "\n";
                ++mismatches;
            }
        }
        if (mismatches) return kExitMismatch;
    }
    return 0;
}

int cmd_cmtype(const std::string& poly, const std::string& weights_str, long order,
               long rho_lower) {
    DelsarteSurface s = parse_surface_or_exit(poly);
    DiagonalAutomorphism aut{order, {}};
    {
        std::istringstream ws(weights_str);
        std::string tok;
        std::vector<long> parsed;
        while (std::getline(ws, tok, ',')) parsed.push_back(std::atol(tok.c_str()));
        if (parsed.size() != 4) {
            std::cerr << "cmtype: --weights needs four comma-separated integers\n";
            return kExitUsage;
        }
        std::copy(parsed.begin(), parsed.end(), aut.weights.begin());
    }
    std::vector<long> eigen;
    try {
        eigen = h20_weights(aut, s);
    } catch (const std::domain_error& e) {
        std::cerr << "cmtype: " << e.what() << "\n";
        return kExitInvalidSurface;
    }
    std::cout << "h20 eigenvalue exponents (mod " << order << "): {";
    for (std::size_t i = 0; i < eigen.size(); ++i) std::cout << (i ? "," : "") << eigen[i];
    std::cout << "}\n";
    CMTypeVerdict v = cm_type_verdict({order, eigen});
    std::cout << "cm-type: " << (v == CMTypeVerdict::cm_type ? "yes" : "no (" + to_string(v) + ")")
              << "\n";
    if (rho_lower >= 0) {
        long b2 = fermat_b2(s.degree);
        if (v != CMTypeVerdict::cm_type) {
            std::cout << "conclusion: none (eigenvalues do not form a CM-type)\n";
            return 0;
        }
        auto conc = conclude_transcendental_dimension(order, b2, rho_lower);
        if (conc)
            std::cout << "conclusion: dim T = " << conc->dim_t << ", picard = " << conc->picard
                      << "\n";
        else
            std::cout << "conclusion: not determined (several multiples of phi(" << order
                      << ") feasible below " << b2 - rho_lower << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delsarte surface toolkit: Picard numbers, zeta functions, and the"
                 " Neron-Severi lattice of quintic surfaces"};
    app.require_subcommand(1);

    std::string poly, weights;
    long fermat_m = 5, prime_q = 31, degree = 5, order = 15, rho_lower = -1;
    bool as_json = false, verify = false, resume = false;
    std::string lattice_file, out_file, golden_file;
    unsigned threads = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "covering, Lefschetz and Picard numbers");
    analyze_cmd->add_option("polynomial", poly, "four-monomial polynomial in x,y,z,w")->required();
    analyze_cmd->add_flag("--json", as_json, "JSON output");

    auto* fermat_cmd = app.add_subcommand("fermat", "Fermat surface invariants");
    fermat_cmd->add_option("m", fermat_m, "Fermat degree (>= 3)")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "local zeta function at a split prime");
    zeta_cmd->add_option("polynomial", poly)->required();
    zeta_cmd->add_option("--prime", prime_q, "prime q == 1 mod m")->required();
    zeta_cmd->add_flag("--verify", verify, "check the point-count trace identity");

    auto* lattice_cmd = app.add_subcommand("lattice", "Gram matrix invariants of a curve config");
    lattice_cmd->add_option("config", lattice_file, "curve config file (default: built-in 45-curve basis)");
    lattice_cmd->add_flag("--json", as_json, "JSON output");

    auto* enum_cmd = app.add_subcommand("enumerate", "all Delsarte surfaces of a degree");
    enum_cmd->add_option("--degree", degree, "surface degree (default 5)");
    enum_cmd->add_option("--out", out_file, "write TSV results file");
    enum_cmd->add_option("--golden", golden_file, "check 'polynomial rho' fixtures, exit 4 on mismatch");
    enum_cmd->add_flag("--resume", resume, "reuse records from an existing --out file");
    enum_cmd->add_option("--threads", threads, "worker count (default: DELSARTE_THREADS or hardware)");

    auto* cm_cmd = app.add_subcommand("cmtype", "automorphism eigenvalues on H^{2,0}");
    cm_cmd->add_option("polynomial", poly)->required();
    cm_cmd->add_option("--weights", weights, "w1,w2,w3,w4")->required();
    cm_cmd->add_option("--order", order, "automorphism order n")->required();
    cm_cmd->add_option("--rho-lower", rho_lower, "known lower bound for the Picard number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(poly, as_json);
        if (app.got_subcommand(fermat_cmd)) return cmd_fermat(fermat_m);
        if (app.got_subcommand(zeta_cmd)) return cmd_zeta(poly, prime_q, verify);
        if (app.got_subcommand(lattice_cmd)) return cmd_lattice(lattice_file, as_json);
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(degree, out_file, golden_file, resume, threads);
        if (app.got_subcommand(cm_cmd)) return cmd_cmtype(poly, weights, order, rho_lower);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

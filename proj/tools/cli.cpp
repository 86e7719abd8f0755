// Command-line front end for the Hecke-algebra library: Satake images,
// convolution with the counting oracle and its cache, orbit / quotient /
// Jacquet reports, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error.

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "satake/json_io.hpp"

using namespace satake;

namespace {

Partition parse_partition(const std::string& s, int n) {
    Partition out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stoi(piece));
    if (n > 0 && static_cast<int>(out.size()) != n)
        throw CLI::ValidationError("--lambda/--mu must have exactly " +
                                   std::to_string(n) + " parts");
    if (!is_dominant(out))
        throw CLI::ValidationError("parts must be weakly decreasing");
    return out;
}

OrbitPoint parse_chi(const std::string& s, int n, unsigned long p) {
    OrbitPoint out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(quad_from_string(piece, p));
    if (n > 0 && static_cast<int>(out.size()) != n)
        throw CLI::ValidationError("--chi must have exactly " + std::to_string(n) +
                                   " coordinates");
    for (const auto& c : out)
        if (c.is_zero()) throw CLI::ValidationError("--chi coordinates must be nonzero");
    return out;
}

void check_prime(unsigned long p) {
    if (!is_prime(p)) throw CLI::ValidationError("--p must be prime");
}

void emit(const json& j, const std::string& fallback, const std::string& format) {
    if (format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << fallback << "\n";
}

struct SuiteRng {
    std::mt19937_64 gen;
    explicit SuiteRng(unsigned long seed) : gen(seed) {}
    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat rational() {
        long num = integer(-9, 9);
        if (num == 0) num = 1;
        return make_rat(num, integer(1, 9));
    }
    OrbitPoint character(int n) {
        OrbitPoint chi(n);
        for (int i = 0; i < n; ++i) chi[i] = QuadScalar(rational());
        return chi;
    }
    OrbitPoint regular_character(int n) {
        while (true) {
            OrbitPoint chi = character(n);
            bool distinct = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (chi[i] == chi[j]) distinct = false;
            if (distinct) return chi;
        }
    }
};

// Runs the whole deterministic check suite; prints one line per check.
// Returns true iff everything passed.
bool run_verify_all(unsigned long p, unsigned long seed, const std::string& cache_path,
                    std::ostream& out) {
    bool ok = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out << (pass ? "ok   " : "FAIL ") << name;
        if (!pass && !detail.empty()) out << "  [" << detail << "]";
        out << "\n";
        if (!pass) ok = false;
    };

    const std::vector<Partition> shapes{{1, 0}, {1, 1}, {2, 0}, {2, 1}};

    for (const auto& lambda : shapes) {
        bool pass = satake_oracle(lambda, p) == satake_closed_form(lambda, p);
        report("satake oracle lambda=(" + std::to_string(lambda[0]) + "," +
                   std::to_string(lambda[1]) + ")",
               pass);
    }

    OracleCache cache(cache_path);
    for (const auto& a : shapes) {
        for (const auto& b : shapes) {
            auto counts = cache.get(a, b, p);
            HeckeElement expected(2, p);
            for (const auto& [nu, c] : counts)
                expected.set_coeff(nu, QuadScalar(Rat(c)));
            HeckeElement prod = multiply(HeckeElement::basis(a, p),
                                         HeckeElement::basis(b, p));
            report("convolve (" + std::to_string(a[0]) + "," + std::to_string(a[1]) +
                       ")*(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + ")",
                   prod == expected);
        }
    }

    SuiteRng rng(seed);
    long fact[5] = {1, 1, 2, 6, 24};
    for (int n = 2; n <= 3; ++n) {
        bool pass = true;
        std::string detail;
        for (int trial = 0; trial < 5 && pass; ++trial) {
            OrbitPoint chi = rng.character(n);
            QuotientModule q = build_quotient(chi, p);
            if (q.dim != fact[n]) { pass = false; detail = "dim"; }
            WOrbit o = orbit(chi);
            auto factors = composition_factors(q, o);
            int total = 0;
            for (const auto& [point, mult] : factors) {
                total += mult;
                if (!o.contains(point)) { pass = false; detail = "support"; }
            }
            if (total != fact[n]) { pass = false; detail = "mass"; }
        }
        report("quotient dim and factors n=" + std::to_string(n), pass, detail);
    }

    for (int n = 2; n <= 3; ++n) {
        bool pass = true;
        for (int trial = 0; trial < 5 && pass; ++trial) {
            VerifyReport r = verify_prop_cjm8(rng.regular_character(n), p);
            pass = r.regular && r.match;
        }
        report("jacquet multiset identity n=" + std::to_string(n), pass);
    }

    {
        bool pass = true;
        for (int trial = 0; trial < 100 && pass; ++trial) {
            int n = 2 + static_cast<int>(rng.integer(0, 2));
            OrbitPoint chi = rng.character(n);
            bool distinct = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (chi[i] == chi[j]) distinct = false;
            pass = is_regular(orbit(chi)) == distinct;
        }
        report("regular locus sampling", pass);
    }

    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spherical Hecke algebra of GL_n over Q_p: Satake images, convolution,\n"
        "torus orbits, the coinvariant-type quotient, and Jacquet multisets.\n"
        "Scalars are elements of Q(sqrt p), written \"a/b+c/d*s\" with s^2 = p."};
    app.require_subcommand(1);

    int n = 2;
    unsigned long p = 2;
    std::string lambda_str, mu_str, chi_str;
    std::string format = "table";
    std::string cache_path = "oracle_cache.json";
    bool use_oracle = false;
    int truncation = 0;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of variables / matrix size");
        cmd->add_option("--p", p, "residue characteristic (prime)");
        cmd->add_option("--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* satake_cmd = app.add_subcommand("satake", "Satake image of T_lambda");
    add_common(satake_cmd);
    satake_cmd->add_option("--lambda", lambda_str, "dominant cocharacter, e.g. 2,0")
        ->required();
    satake_cmd->add_flag("--oracle", use_oracle,
                         "cross-check against the constant-term enumeration (n=2)");
    satake_cmd->add_option("--truncation", truncation,
                           "override the oracle truncation level");

    CLI::App* convolve_cmd =
        app.add_subcommand("convolve", "product T_lambda * T_mu");
    add_common(convolve_cmd);
    convolve_cmd->add_option("--lambda", lambda_str, "first factor")->required();
    convolve_cmd->add_option("--mu", mu_str, "second factor")->required();
    convolve_cmd->add_flag("--oracle", use_oracle,
                           "cross-check against coset counting, with caching");
    convolve_cmd->add_option("--cache", cache_path, "structure-constant cache file");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "W-orbit of a character");
    add_common(orbit_cmd);
    orbit_cmd->add_option("--chi", chi_str, "character coordinates, e.g. 2,3")
        ->required();

    CLI::App* quotient_cmd =
        app.add_subcommand("quotient", "the n!-dimensional quotient A/mA");
    add_common(quotient_cmd);
    quotient_cmd->add_option("--chi", chi_str, "character coordinates")->required();

    CLI::App* jacquet_cmd =
        app.add_subcommand("jacquet", "Jacquet character multiset of W(I,K)");
    add_common(jacquet_cmd);
    jacquet_cmd->add_option("--chi", chi_str, "character coordinates")->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "verification suite; `verify all` runs every check");
    add_common(verify_cmd);
    std::string suite;
    verify_cmd->add_option("suite", suite, "suite name: all");
    verify_cmd->add_option("--chi", chi_str,
                           "verify the Jacquet identity for one character");
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_option("--cache", cache_path, "structure-constant cache file");

    try {
        app.parse(argc, argv);
        check_prime(p);

        if (satake_cmd->parsed()) {
            Partition lambda = parse_partition(lambda_str, n);
            LaurentPoly s = satake_closed_form(lambda, p);
            emit(laurent_to_json(s), s.to_string(), format);
            if (use_oracle) {
                if (n != 2) throw CLI::ValidationError("--oracle needs --n 2");
                LaurentPoly o = satake_oracle(lambda, p);
                if (format == "table") std::cout << "oracle: " << o.to_string() << "\n";
                bool equal = o == s;
                std::cout << (equal ? "EQUAL" : "DIFFER") << "\n";
                return equal ? 0 : 1;
            }
            return 0;
        }

        if (convolve_cmd->parsed()) {
            Partition lambda = parse_partition(lambda_str, n);
            Partition mu = parse_partition(mu_str, n);
            HeckeElement prod =
                multiply(HeckeElement::basis(lambda, p), HeckeElement::basis(mu, p));
            emit(hecke_to_json(prod), prod.to_string(), format);
            if (use_oracle) {
                if (!padic_bounds_ok(n, lambda) || !padic_bounds_ok(n, mu))
                    throw CLI::ValidationError("shapes out of oracle bounds");
                bool hit = false;
                OracleCache cache(cache_path);
                auto counts = cache.get(lambda, mu, p, &hit);
                std::cout << "cache: " << (hit ? "hit" : "miss") << "\n";
                HeckeElement expected(n, p);
                for (const auto& [nu, c] : counts)
                    expected.set_coeff(nu, QuadScalar(Rat(c)));
                bool equal = prod == expected;
                std::cout << (equal ? "EQUAL" : "DIFFER") << "\n";
                return equal ? 0 : 1;
            }
            return 0;
        }

        if (orbit_cmd->parsed()) {
            WOrbit o = orbit(parse_chi(chi_str, n, p));
            json j = orbit_to_json(o);
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (quotient_cmd->parsed()) {
            QuotientModule q = build_quotient(parse_chi(chi_str, n, p), p);
            json j = quotient_to_json(q);
            if (format == "table")
                std::cout << "dim " << q.dim << "\n";
            else
                std::cout << j.dump() << "\n";
            return 0;
        }

        if (jacquet_cmd->parsed()) {
            auto ms = jacquet_of_W_module(parse_chi(chi_str, n, p), p);
            std::cout << multiset_to_json(ms).dump() << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (suite == "all") {
                return run_verify_all(p, seed, cache_path, std::cout) ? 0 : 1;
            }
            if (chi_str.empty())
                throw CLI::ValidationError("verify needs `all` or --chi");
            OrbitPoint chi = parse_chi(chi_str, n, p);
            VerifyReport r = verify_prop_cjm8(chi, p);
            std::cout << verify_report_to_json(chi, r).dump() << "\n";
            return r.match ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

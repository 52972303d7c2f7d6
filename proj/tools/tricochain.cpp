// tricochain: verify tri-dendriform algebras, certify the tensor-product
// algebra, check the cochain map and compute cohomology dimensions.
//
// Exit status: 0 pass, 1 a mathematical check failed, 2 input or usage error.

#include "tricochain/cochain.hpp"
#include "tricochain/cohomology.hpp"
#include "tricochain/io.hpp"
#include "tricochain/tensor.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace tc = tricochain;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "tricochain 1.0.0";

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct GlobalOptions {
    bool json = false;
    bool timing = false;
    bool allow_large_degree = false;
    int threads = 0;  // 0: TRICOCHAIN_THREADS, else 1
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned resolve_threads(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("TRICOCHAIN_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("TRICOCHAIN_THREADS must be a positive integer, got \"") + env + "\"");
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

struct LoadedAlgebra {
    tc::TriDendAlgebra algebra;
    std::string digest;
};

LoadedAlgebra load(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return {tc::parse_algebra(text), sha256_hex(text)};
    } catch (const tc::AlgebraParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void check_degree(unsigned n, const GlobalOptions& g, const char* flag) {
    if (n == 0) throw InputError(std::string(flag) + " must be at least 1");
    if (n > tc::kDeskDegreeCap && !g.allow_large_degree)
        throw InputError(std::string(flag) + " " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(tc::kDeskDegreeCap) + " (pass --allow-large-degree to override)");
}

std::string route_name(tc::DeltaRoute r) { return r == tc::DeltaRoute::Explicit ? "explicit" : "extraction"; }

// ---------------------------------------------------------------------------
// Human-readable output

std::string clip(const std::string& s, std::size_t width = 120) {
    return s.size() <= width ? s : s.substr(0, width) + " ...";
}

void print_violations(const tc::AxiomReport& r, std::size_t limit = 10) {
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
        if (shown++ == limit) {
            std::cout << "    ... " << r.violations.size() - limit << " more\n";
            break;
        }
        std::cout << "    " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? ", " : "") << v.witness[i];
        std::cout << "): " << clip(v.lhs) << "  !=  " << clip(v.rhs) << "\n";
    }
}

void print_report_line(const std::string& label, const tc::AxiomReport& r) {
    std::cout << "  " << std::left << std::setw(28) << label << (r.passed() ? "PASS" : "FAIL") << "  (" << r.checks
              << " checks";
    if (!r.passed()) std::cout << ", " << r.violations.size() << " violations";
    std::cout << ")\n";
    print_violations(r);
}

void print_cohomology(const tc::CohomologyReport& r) {
    std::cout << "  route: " << route_name(r.route) << "   delta^2 = 0: " << (r.delta_squared_zero ? "yes" : "NO")
              << "\n";
    std::cout << "  " << std::setw(4) << "n" << std::setw(10) << "dim C^n" << std::setw(10) << "rank d" << std::setw(10)
              << "dim Z^n" << std::setw(10) << "dim B^n" << std::setw(10) << "dim H^n" << std::setw(12) << "dim Q^n"
              << "\n";
    for (const auto& s : r.degrees) {
        std::cout << "  " << std::setw(4) << s.degree << std::setw(10) << s.dim_cochains << std::setw(10) << s.rank_delta
                  << std::setw(10) << s.dim_cocycles << std::setw(10) << s.dim_coboundaries << std::setw(10)
                  << (s.dim_cohomology ? std::to_string(*s.dim_cohomology) : "-") << std::setw(12) << s.dim_quotient_slice << "\n";
        if (s.cocycles) {
            for (const auto& v : *s.cocycles) {
                std::cout << "      cocycle (";
                for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
                std::cout << ")\n";
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Commands. Each returns the RunReport payload and whether it passed.

struct Outcome {
    bool passed = false;
    ordered_json payload;
};

Outcome cmd_verify(const tc::TriDendAlgebra& b, const GlobalOptions& g) {
    const tc::AxiomReport r = tc::verify_tridendriform(b);
    if (!g.json) {
        std::cout << "verify " << b.name << " (dim " << b.dim << ")\n";
        print_report_line("tri-dendriform axioms", r);
    }
    return {r.passed(), tc::axiom_report_to_json(r)};
}

struct AssocArgs {
    std::size_t max_degree = 3;
    std::size_t random = 200;
    std::uint64_t seed = 1;
    unsigned generators = 3;
};

Outcome cmd_assoc_check(const tc::TriDendAlgebra& b, const AssocArgs& a, const GlobalOptions& g) {
    if (a.max_degree == 0) throw InputError("--max-degree must be at least 1");
    const tc::AxiomReport axioms = tc::verify_tridendriform(b);
    const tc::AxiomReport exhaustive = tc::check_associativity(b, tc::generator_triples(b, a.generators));
    const tc::AxiomReport randomized =
        tc::check_associativity(b, tc::random_triples(b, a.random, a.max_degree, a.seed));

    Outcome out;
    out.passed = axioms.passed() && exhaustive.passed() && randomized.passed();
    out.payload["algebra_verified"] = axioms.passed();
    if (!axioms.passed()) out.payload["axioms"] = tc::axiom_report_to_json(axioms);
    out.payload["seed"] = a.seed;
    out.payload["max_degree"] = a.max_degree;
    out.payload["generator_triples"] = tc::axiom_report_to_json(exhaustive);
    out.payload["random_triples"] = tc::axiom_report_to_json(randomized);

    if (!g.json) {
        std::cout << "assoc-check " << b.name << " (dim " << b.dim << ", seed " << a.seed << ", max degree "
                  << a.max_degree << ")\n";
        if (!axioms.passed()) {
            std::cout << "  algebra does not satisfy the tri-dendriform axioms; associativity is not expected\n";
            print_report_line("tri-dendriform axioms", axioms);
        }
        print_report_line("generator triples", exhaustive);
        print_report_line("random triples", randomized);
    }
    return out;
}

Outcome cmd_cochain_check(const tc::TriDendAlgebra& b, unsigned n, const GlobalOptions& g, unsigned threads) {
    check_degree(n, g, "--degree");
    const tc::DeltaRoute preferred = n <= 2 ? tc::DeltaRoute::Explicit : tc::DeltaRoute::Extraction;

    const tc::AxiomReport commutation = tc::check_commutation(b, n, preferred, threads);
    const tc::AxiomReport commutation_extraction =
        preferred == tc::DeltaRoute::Extraction ? commutation
                                                : tc::check_commutation(b, n, tc::DeltaRoute::Extraction, threads);
    const tc::AxiomReport round_trip = tc::check_round_trip(b, n);
    const tc::QMatrix psi = tc::psi_matrix(b, n);
    const std::size_t psi_rank = tc::rank(psi);
    const bool injective = psi_rank == psi.cols();

    bool routes_agree = true;
    if (preferred == tc::DeltaRoute::Explicit)
        routes_agree = tc::assemble_tri_delta_matrix(b, n, tc::DeltaRoute::Explicit, threads) ==
                       tc::assemble_tri_delta_matrix(b, n, tc::DeltaRoute::Extraction, threads);

    Outcome out;
    out.passed = commutation.passed() && commutation_extraction.passed() && round_trip.passed() && injective &&
                 routes_agree;
    out.payload["degree"] = n;
    out.payload["route"] = route_name(preferred);
    out.payload["commutation"] = tc::axiom_report_to_json(commutation);
    if (preferred == tc::DeltaRoute::Explicit) {
        out.payload["commutation_extraction"] = tc::axiom_report_to_json(commutation_extraction);
        out.payload["routes_agree"] = routes_agree;
    }
    out.payload["round_trip"] = tc::axiom_report_to_json(round_trip);
    out.payload["psi_matrix"] = {{"rows", psi.rows()}, {"cols", psi.cols()}, {"rank", psi_rank}};
    out.payload["injective"] = injective;

    if (!g.json) {
        std::cout << "cochain-check " << b.name << " (dim " << b.dim << ", degree " << n << ")\n";
        print_report_line("commutation (" + route_name(preferred) + ")", commutation);
        if (preferred == tc::DeltaRoute::Explicit) {
            print_report_line("commutation (extraction)", commutation_extraction);
            std::cout << "  " << std::left << std::setw(28) << "explicit == extraction" << (routes_agree ? "PASS" : "FAIL")
                      << "\n";
        }
        print_report_line("extraction round trip", round_trip);
        std::cout << "  " << std::left << std::setw(28) << "psi injective" << (injective ? "PASS" : "FAIL") << "  (rank "
                  << psi_rank << " of " << psi.cols() << " columns)\n";
    }
    return out;
}

Outcome cmd_cohomology(const tc::TriDendAlgebra& b, unsigned n, bool emit_cocycles, tc::DeltaRoute route,
                       const GlobalOptions& g, unsigned threads) {
    check_degree(n, g, "--max-degree");
    if (route == tc::DeltaRoute::Explicit && n > 2)
        throw InputError("--route explicit is only available up to --max-degree 2");
    tc::CohomologyOptions opts;
    opts.emit_cocycles = emit_cocycles;
    opts.route = route;
    opts.threads = threads;
    const tc::CohomologyReport r = tc::cohomology_dims(b, n, opts);

    if (!g.json) {
        std::cout << "cohomology " << b.name << " (dim " << b.dim << ")\n";
        print_cohomology(r);
    }
    return {r.delta_squared_zero, tc::cohomology_report_to_json(r)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tri-dendriform algebras, the tensor-product algebra and cohomology in exact arithmetic",
                 "tricochain"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "Print the report as JSON");
    app.add_flag("--timing", g.timing, "Include wall time in the report");
    app.add_flag("--allow-large-degree", g.allow_large_degree, "Lift the degree cap of 3");
    app.add_option("--threads", g.threads, "Worker threads (default: TRICOCHAIN_THREADS, else 1)")
        ->check(CLI::PositiveNumber);

    std::string path;

    auto* verify = app.add_subcommand("verify", "Check the seven tri-dendriform identities and associativity of ∘");
    verify->add_option("file", path, "Algebra file")->required();

    AssocArgs assoc;
    auto* assoc_check = app.add_subcommand("assoc-check", "Certify associativity of A ⊗ B");
    assoc_check->add_option("file", path, "Algebra file")->required();
    assoc_check->add_option("--max-degree", assoc.max_degree, "Largest monomial degree in random triples")
        ->capture_default_str();
    assoc_check->add_option("--random", assoc.random, "Number of random triples")->capture_default_str();
    assoc_check->add_option("--seed", assoc.seed, "Random seed")->capture_default_str();
    assoc_check->add_option("--generators", assoc.generators, "Generators in the exhaustive triples")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    unsigned cochain_degree = 0;
    auto* cochain_check = app.add_subcommand("cochain-check", "Check Ψδ = δΨ, extraction and injectivity");
    cochain_check->add_option("file", path, "Algebra file")->required();
    cochain_check->add_option("--degree", cochain_degree, "Cochain degree n")->required();

    unsigned max_degree = 2;
    bool emit_cocycles = false;
    std::string route = "extraction";
    auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions up to a degree");
    cohomology->add_option("file", path, "Algebra file")->required();
    cohomology->add_option("--max-degree", max_degree, "Largest degree")->capture_default_str();
    cohomology->add_flag("--emit-cocycles", emit_cocycles, "Include cocycle bases");
    cohomology->add_option("--route", route, "Differential: extraction or explicit")
        ->check(CLI::IsMember({"extraction", "explicit"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        const unsigned threads = resolve_threads(g.threads);
        const auto start = std::chrono::steady_clock::now();
        const LoadedAlgebra loaded = load(path);

        std::string command;
        Outcome outcome;
        if (verify->parsed()) {
            command = "verify";
            outcome = cmd_verify(loaded.algebra, g);
        } else if (assoc_check->parsed()) {
            command = "assoc-check";
            outcome = cmd_assoc_check(loaded.algebra, assoc, g);
        } else if (cochain_check->parsed()) {
            command = "cochain-check";
            outcome = cmd_cochain_check(loaded.algebra, cochain_degree, g, threads);
        } else {
            command = "cohomology";
            outcome = cmd_cohomology(loaded.algebra, max_degree, emit_cocycles,
                                     route == "explicit" ? tc::DeltaRoute::Explicit : tc::DeltaRoute::Extraction, g,
                                     threads);
        }
        const auto elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (g.json) {
            ordered_json report;
            report["command"] = command;
            report["input"] = path;
            report["input_sha256"] = loaded.digest;
            report["algebra"] = loaded.algebra.name;
            report["passed"] = outcome.passed;
            report["payload"] = std::move(outcome.payload);
            if (g.timing) report["wall_time_ms"] = elapsed;
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << (outcome.passed ? "PASS" : "FAIL");
            if (g.timing) std::cout << "  (" << std::fixed << std::setprecision(1) << elapsed << " ms)";
            std::cout << "\n";
        }
        return outcome.passed ? kPass : kFail;
    } catch (const InputError& e) {
        std::cerr << "tricochain: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tricochain: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "tricochain: internal error: " << e.what() << "\n";
        return kInputError;
    }
}

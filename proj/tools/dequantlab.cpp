#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dequant/circuit.hpp"
#include "dequant/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dequant::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_analyze(const std::string& path, bool exact, int state_index, bool bits) {
    dequant::CircuitIR circuit = dequant::parse_circuit(read_file(path));
    std::optional<dequant::QuantumState> state;
    if (exact) {
        const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
        state = dequant::QuantumState::basis(dim, state_index);
    }
    dequant::DilReport report = dequant::analyze_dil(circuit, state);
    std::cout << dequant::report_to_json(report, bits);
    return 0;
}

int run_builtin(const std::string& kind, int n, bool emit, bool bits) {
    dequant::CircuitIR circuit;
    if (kind == "fft")
        circuit = dequant::build_fftq(n);
    else if (kind == "grover")
        circuit = dequant::build_grover(n);
    else
        throw dequant::RangeError("builtin kind must be fft or grover");
    if (emit) std::cout << dequant::serialize(circuit);
    std::cout << dequant::report_to_json(dequant::analyze_dil(circuit), bits);
    return 0;
}

int run_verify(const std::string& suite, unsigned seed) {
    const auto results = dequant::run_suites(suite, seed);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.passed << "/" << (r.passed + r.failed)
                  << (r.ok() ? " pass" : " FAIL") << "\n";
        if (!r.ok()) {
            ok = false;
            std::cerr << r.name << " first counterexample: " << r.first_failure << "\n";
        }
    }
    return ok ? 0 : kExitNumerical;
}

int run_entropy(const std::optional<double>& phi, const std::optional<std::string>& rho_path) {
    if (phi.has_value() == rho_path.has_value())
        throw CLI::ValidationError("entropy", "exactly one of --phi or --rho is required");
    if (phi) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.10g", dequant::binary_entropy(*phi));
        std::cout << "{\n  \"phi\": " << *phi << ",\n  \"entropy_nats\": " << buf
                  << ",\n  \"units\": \"nats\"\n}\n";
        return 0;
    }
    nlohmann::json j = nlohmann::json::parse(read_file(*rho_path));
    const auto& rows = j.at("matrix");
    const auto d = static_cast<Eigen::Index>(rows.size());
    dequant::ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != d)
            throw dequant::DimensionError("rho file: matrix is not square");
        for (Eigen::Index k = 0; k < d; ++k) {
            const auto& cell = row.at(static_cast<std::size_t>(k));
            m(i, k) = dequant::Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g",
                  dequant::von_neumann_entropy(dequant::DensityMatrix(std::move(m))));
    std::cout << "{\n  \"entropy_nats\": " << buf << ",\n  \"units\": \"nats\"\n}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-logic dequantization information-loss analyzer"};
    app.require_subcommand(1);

    std::string analyze_path;
    bool analyze_exact = false;
    int analyze_state = 0;
    bool analyze_bits = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a circuit file");
    analyze->add_option("file", analyze_path, "circuit file")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_flag("--exact", analyze_exact, "compute exact DIL (n_qubits <= 6)");
    analyze->add_option("--state", analyze_state, "initial basis state index");
    analyze->add_flag("--bits", analyze_bits, "report in bits instead of nats");

    std::string builtin_kind;
    int builtin_n = 0;
    bool builtin_emit = false;
    bool builtin_bits = false;
    auto* builtin = app.add_subcommand("builtin", "analyze a built-in circuit");
    builtin->add_option("kind", builtin_kind, "fft|grover")->required();
    builtin->add_option("n", builtin_n, "register size")->required();
    builtin->add_flag("--emit", builtin_emit, "also print the circuit file text");
    builtin->add_flag("--bits", builtin_bits, "report in bits instead of nats");

    std::string verify_suite = "all";
    unsigned verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", verify_suite, "conjunction|power|limit|entropy|all");
    verify->add_option("--seed", verify_seed, "random seed");

    std::optional<double> entropy_phi;
    std::optional<std::string> entropy_rho;
    auto* entropy = app.add_subcommand("entropy", "entropy of a fraction or density matrix");
    entropy->add_option("--phi", entropy_phi, "phase-space fraction in [0, 1]");
    entropy->add_option("--rho", entropy_rho, "density matrix JSON file")
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
        if (analyze->parsed())
            return run_analyze(analyze_path, analyze_exact, analyze_state, analyze_bits);
        if (builtin->parsed()) return run_builtin(builtin_kind, builtin_n, builtin_emit, builtin_bits);
        if (verify->parsed()) return run_verify(verify_suite, verify_seed);
        if (entropy->parsed()) return run_entropy(entropy_phi, entropy_rho);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const dequant::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dequant::RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dequant::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

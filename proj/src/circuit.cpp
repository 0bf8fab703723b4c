#include "dequant/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace dequant {

namespace {

constexpr double kLn2 = 0.6931471805599453;

ComplexMatrix single_qubit_projector(GateKind kind) {
    ComplexMatrix pz(2, 2), px(2, 2);
    pz << 1, 0, 0, 0;
    px << 0.5, 0.5, 0.5, 0.5;
    switch (kind) {
        case GateKind::PZ: return pz;
        case GateKind::PX: return px;
        case GateKind::NPZ: return identity_matrix(2) - pz;
        case GateKind::NPX: return identity_matrix(2) - px;
        default: throw Error("single_qubit_projector: not a projector kind");
    }
}

bool is_projector_kind(GateKind k) {
    return k == GateKind::PZ || k == GateKind::PX || k == GateKind::NPZ || k == GateKind::NPX;
}

bool z_family(GateKind k) { return k == GateKind::PZ || k == GateKind::NPZ; }

// Embed a product of single-qubit factors into the register; qubit 0 is the
// most significant tensor factor.
ComplexMatrix embed_factors(const std::vector<ProjectorFactor>& factors, int n) {
    std::vector<ComplexMatrix> slots(static_cast<std::size_t>(n), identity_matrix(2));
    for (const auto& f : factors)
        slots[static_cast<std::size_t>(f.qubit)] =
            slots[static_cast<std::size_t>(f.qubit)] * single_qubit_projector(f.kind);
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (const auto& m : slots) out = tensor_product(out, m);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

const char* kind_directive(GateKind k) {
    switch (k) {
        case GateKind::W: return "w";
        case GateKind::CPhase: return "cphase";
        case GateKind::PZ: return "pz";
        case GateKind::PX: return "px";
        case GateKind::NPZ: return "npz";
        case GateKind::NPX: return "npx";
        case GateKind::Oracle: return "oracle";
    }
    return "?";
}

}  // namespace

CircuitIR parse_circuit(const std::string& text) {
    CircuitIR out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_reg = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream toks(line);
        std::string op;
        if (!(toks >> op)) continue;

        auto read_int = [&](int& v) {
            if (!(toks >> v))
                throw ParseError(ParseError::Kind::Syntax, line_no, "missing integer argument");
        };
        auto check_no_trailing = [&] {
            std::string rest;
            if (toks >> rest)
                throw ParseError(ParseError::Kind::Syntax, line_no,
                                 "unexpected trailing token '" + rest + "'");
        };
        auto check_qubit = [&](int k) {
            if (k < 0 || k >= out.n_qubits)
                throw ParseError(ParseError::Kind::Index, line_no,
                                 "qubit " + std::to_string(k) + " out of range for reg " +
                                     std::to_string(out.n_qubits));
        };

        if (!have_reg) {
            if (op != "reg")
                throw ParseError(ParseError::Kind::Syntax, line_no,
                                 "first directive must be 'reg N'");
            int n;
            read_int(n);
            check_no_trailing();
            if (n < 1 || n > 20)
                throw ParseError(ParseError::Kind::Syntax, line_no,
                                 "reg size must be in [1, 20]");
            out.n_qubits = n;
            have_reg = true;
            continue;
        }

        if (op == "reg") {
            throw ParseError(ParseError::Kind::Syntax, line_no, "duplicate 'reg' directive");
        } else if (op == "w" || op == "pz" || op == "px" || op == "npz" || op == "npx") {
            int k;
            read_int(k);
            check_no_trailing();
            check_qubit(k);
            GateKind kind = op == "w"    ? GateKind::W
                            : op == "pz" ? GateKind::PZ
                            : op == "px" ? GateKind::PX
                            : op == "npz" ? GateKind::NPZ
                                          : GateKind::NPX;
            out.gates.push_back({kind, k, -1, ""});
        } else if (op == "cphase") {
            int k, s;
            read_int(k);
            read_int(s);
            check_no_trailing();
            check_qubit(k);
            check_qubit(s);
            if (s <= k)
                throw ParseError(ParseError::Kind::Order, line_no,
                                 "cphase requires s > k");
            out.gates.push_back({GateKind::CPhase, k, s, ""});
        } else if (op == "oracle") {
            std::string name;
            if (!(toks >> name))
                throw ParseError(ParseError::Kind::Syntax, line_no, "oracle requires a name");
            check_no_trailing();
            out.gates.push_back({GateKind::Oracle, -1, -1, name});
        } else if (op == "stage") {
            check_no_trailing();
            out.stage_marks.push_back(static_cast<int>(out.gates.size()));
        } else {
            throw ParseError(ParseError::Kind::Syntax, line_no, "unknown directive '" + op + "'");
        }
    }
    if (!have_reg)
        throw ParseError(ParseError::Kind::Syntax, line_no + 1, "missing 'reg' directive");
    return out;
}

std::string serialize(const CircuitIR& c) {
    std::ostringstream out;
    out << "reg " << c.n_qubits << "\n";
    std::size_t mark = 0;
    for (std::size_t i = 0; i <= c.gates.size(); ++i) {
        while (mark < c.stage_marks.size() &&
               c.stage_marks[mark] == static_cast<int>(i)) {
            out << "stage\n";
            ++mark;
        }
        if (i == c.gates.size()) break;
        const Gate& g = c.gates[i];
        out << kind_directive(g.kind);
        if (g.kind == GateKind::Oracle)
            out << " " << g.name;
        else if (g.kind == GateKind::CPhase)
            out << " " << g.k << " " << g.s;
        else
            out << " " << g.k;
        out << "\n";
    }
    return out.str();
}

std::vector<WeightedTerm> decompose_gate(const Gate& g) {
    switch (g.kind) {
        case GateKind::W: {
            const double r2 = std::sqrt(2.0);
            return {{Complex(r2, 0), {{g.k, GateKind::PX}}},
                    {Complex(-r2, 0), {{g.k, GateKind::NPZ}}}};
        }
        case GateKind::CPhase: {
            const double phi = M_PI / std::pow(2.0, g.s - g.k);
            const Complex e = std::polar(1.0, phi);
            return {{Complex(1, 0) - e, {{g.s, GateKind::PZ}, {g.k, GateKind::NPZ}}},
                    {Complex(1, 0) - e, {{g.k, GateKind::PZ}}},
                    {e, {}}};
        }
        case GateKind::PZ:
        case GateKind::PX:
        case GateKind::NPZ:
        case GateKind::NPX:
            return {{Complex(1, 0), {{g.k, g.kind}}}};
        case GateKind::Oracle:
            return {};  // opaque
    }
    throw Error("decompose_gate: unreachable");
}

ComplexMatrix materialize_gate(const Gate& g, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (dim > dim_cap())
        throw CapacityError("materialize_gate: 2^" + std::to_string(n) + " exceeds dimension cap");
    if (g.kind == GateKind::Oracle)  // opaque, zero-DIL marker
        return identity_matrix(static_cast<Eigen::Index>(dim));
    ComplexMatrix out = zero_matrix(static_cast<Eigen::Index>(dim));
    for (const auto& term : decompose_gate(g))
        out += term.coeff * embed_factors(term.factors, n);
    return out;
}

ComplexMatrix materialize_circuit(const CircuitIR& c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    if (dim > dim_cap())
        throw CapacityError("materialize_circuit: register exceeds dimension cap");
    ComplexMatrix u = identity_matrix(static_cast<Eigen::Index>(dim));
    for (const Gate& g : c.gates) u = materialize_gate(g, c.n_qubits) * u;
    return u;
}

std::vector<IntersectionEvent> scan_intersections(const CircuitIR& c, bool* heuristic_out) {
    const std::size_t ngates = c.gates.size();
    std::vector<bool> consumed(ngates, false);
    // Events keyed by the position of the gate that completes the pattern, so
    // the emitted order follows the circuit.
    std::multimap<std::size_t, IntersectionEvent> events;

    std::vector<std::vector<std::size_t>> per_qubit(static_cast<std::size_t>(c.n_qubits));
    for (std::size_t i = 0; i < ngates; ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::Oracle) continue;
        per_qubit[static_cast<std::size_t>(g.k)].push_back(i);
        // CPhase is attributed to its control qubit only; the P_zs factor on
        // the target commutes with everything counted here.
    }

    bool heuristic = false;

    // Pass 1: W pz W sandwiches (the Grover diffusion pattern).
    for (int qb = 0; qb < c.n_qubits; ++qb) {
        const auto& seq = per_qubit[static_cast<std::size_t>(qb)];
        for (std::size_t j = 0; j + 2 < seq.size(); ++j) {
            const Gate& a = c.gates[seq[j]];
            const Gate& b = c.gates[seq[j + 1]];
            const Gate& d = c.gates[seq[j + 2]];
            if (a.kind == GateKind::W && b.kind == GateKind::PZ && d.kind == GateKind::W &&
                !consumed[seq[j]] && !consumed[seq[j + 1]] && !consumed[seq[j + 2]]) {
                consumed[seq[j]] = consumed[seq[j + 1]] = consumed[seq[j + 2]] = true;
                events.insert({seq[j + 2], {qb, false, GateKind::PX, GateKind::PZ}});
                j += 2;
            }
        }
    }

    // Pass 2: adjacent projector statements on one qubit. Complementary
    // z-pairs are the calibrated ancilla pattern (dim Pi = 1); anything else
    // is the generic non-commutativity fallback.
    for (int qb = 0; qb < c.n_qubits; ++qb) {
        const auto& seq = per_qubit[static_cast<std::size_t>(qb)];
        for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
            const Gate& a = c.gates[seq[j]];
            const Gate& b = c.gates[seq[j + 1]];
            if (!is_projector_kind(a.kind) || !is_projector_kind(b.kind)) continue;
            if (consumed[seq[j]] || consumed[seq[j + 1]]) continue;
            consumed[seq[j]] = consumed[seq[j + 1]] = true;
            const bool same_family = z_family(a.kind) == z_family(b.kind);
            if (!same_family) heuristic = true;
            events.insert({seq[j + 1], {qb, same_family, a.kind, b.kind}});
            ++j;
        }
    }

    // Pass 3: controlled-phase terms against the Walsh-Hadamard P_x on the
    // shared qubit; m pending gates expand to 2^m non-reducing terms.
    std::vector<int> pending(static_cast<std::size_t>(c.n_qubits), 0);
    for (std::size_t i = 0; i < ngates; ++i) {
        const Gate& g = c.gates[i];
        if (consumed[i]) continue;
        if (g.kind == GateKind::CPhase) {
            ++pending[static_cast<std::size_t>(g.k)];
            consumed[i] = true;
        } else if (g.kind == GateKind::W) {
            const int m = pending[static_cast<std::size_t>(g.k)];
            pending[static_cast<std::size_t>(g.k)] = 0;
            consumed[i] = true;
            const long long copies = 1LL << m;
            for (long long t = 0; t < copies; ++t)
                events.insert({i, {g.k, false, GateKind::PZ, GateKind::PX}});
        }
    }
    for (int v : pending)
        if (v > 0) heuristic = true;  // trailing cphase with no closing W

    std::vector<IntersectionEvent> out;
    out.reserve(events.size());
    for (auto& [pos, ev] : events) out.push_back(ev);
    if (heuristic_out) *heuristic_out = heuristic;
    return out;
}

ConjunctionCount count_conjunctions(const CircuitIR& c) {
    ConjunctionCount out;
    if (c.family == CircuitFamily::Grover) {
        const int n = c.family_n;
        const double scale = (M_PI / 4.0) * std::pow(2.0, n / 2.0);
        out.q_i = 0;
        out.commuting_c_i = scale;            // ancilla pairs, dim 1
        out.c_i = scale * n;                  // diffusion W P_z W per qubit
        out.n_i = grover_iterations(n);       // one ancilla negation per iteration
        const long long dim = 1LL << n;
        out.dims.assign(static_cast<std::size_t>(grover_iterations(n)) *
                            static_cast<std::size_t>(n),
                        dim);
        return out;
    }

    const auto events = scan_intersections(c, &out.heuristic);
    std::vector<bool> touched(static_cast<std::size_t>(c.n_qubits), false);
    const long long dim = 1LL << c.n_qubits;
    for (const auto& ev : events) {
        touched[static_cast<std::size_t>(ev.qubit)] = true;
        if (ev.commuting) {
            out.commuting_c_i += 1.0;
        } else {
            out.c_i += 1.0;
            out.dims.push_back(dim);
        }
    }
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::NPZ || g.kind == GateKind::NPX) ++out.n_i;
    for (int qb = 0; qb < c.n_qubits; ++qb)
        if (!touched[static_cast<std::size_t>(qb)]) ++out.q_i;
    return out;
}

int grover_iterations(int n) {
    return static_cast<int>(std::lround((M_PI / 4.0) * std::pow(2.0, n / 2.0)));
}

CircuitIR build_fftq(int n) {
    if (n < 1 || n > 20) throw RangeError("build_fftq: n must be in [1, 20]");
    CircuitIR c;
    c.n_qubits = n;
    c.name = "fftq-" + std::to_string(n);
    c.family = CircuitFamily::Fft;
    c.family_n = n;
    // FFT_Q = Phi_0 ... Phi_{N-1} with Phi_k = W_k C_{k,N-1} ... C_{k,k+1};
    // the rightmost operator acts first, so blocks are emitted k = N-1 down
    // to 0, C_{k,k+1} first within a block.
    for (int k = n - 1; k >= 0; --k) {
        for (int s = k + 1; s <= n - 1; ++s)
            c.gates.push_back({GateKind::CPhase, k, s, ""});
        c.gates.push_back({GateKind::W, k, -1, ""});
    }
    return c;
}

CircuitIR build_grover(int n) {
    if (n < 2 || n > 20) throw RangeError("build_grover: n must be in [2, 20]");
    CircuitIR c;
    c.n_qubits = n + 1;  // data qubits 0..n-1, ancilla n
    c.name = "grover-" + std::to_string(n);
    c.family = CircuitFamily::Grover;
    c.family_n = n;
    c.gates.push_back({GateKind::Oracle, -1, -1, "gamma"});
    const int r = grover_iterations(n);
    for (int it = 0; it < r; ++it) {
        for (int k = 0; k < n; ++k) {
            c.gates.push_back({GateKind::W, k, -1, ""});
            c.gates.push_back({GateKind::PZ, k, -1, ""});
            c.gates.push_back({GateKind::W, k, -1, ""});
        }
        c.gates.push_back({GateKind::NPZ, n, -1, ""});
        c.gates.push_back({GateKind::PZ, n, -1, ""});
    }
    return c;
}

DilReport analyze_dil(const CircuitIR& c, const std::optional<QuantumState>& state) {
    DilReport r;
    r.circuit = c.name.empty() ? "circuit" : c.name;
    r.n_qubits = c.n_qubits;
    r.counts = count_conjunctions(c);

    switch (c.family) {
        case CircuitFamily::Fft: {
            const int n = c.family_n;
            const double ci = std::pow(2.0, n) - 1.0;
            r.dil_upper_bound_nats = (r.counts.q_i + (n + 1) * ci) * kLn2;
            r.closed_form = "[q_I+(N+1)(2^N-1)]ln2";
            break;
        }
        case CircuitFamily::Grover: {
            const int n = c.family_n;
            r.dil_upper_bound_nats =
                (r.counts.q_i + (M_PI / 4.0) * (n + 1) * (n + 1) * std::pow(2.0, n / 2.0)) * kLn2;
            r.closed_form = "[q_I+(pi/4)(N+1)^2*2^(N/2)]ln2";
            break;
        }
        case CircuitFamily::Generic: {
            r.dil_upper_bound_nats =
                dil_upper_bound(r.counts.q_i, r.counts.c_i + r.counts.commuting_c_i,
                                r.counts.dims);
            r.closed_form = "(q_I+c_I)ln2+sum_k ln(dim Pi_k)";
            if (r.counts.heuristic) r.closed_form += " [heuristic count]";
            break;
        }
    }

    if (state) {
        const std::size_t dim = std::size_t{1} << c.n_qubits;
        if (c.n_qubits > 6)
            throw CapacityError("analyze_dil: exact mode requires n_qubits <= 6");
        if (state->dim() != static_cast<Eigen::Index>(dim))
            throw DimensionError("analyze_dil: state dimension differs from register");
        std::vector<ConjunctionStep> steps;
        for (const auto& ev : scan_intersections(c)) {
            Projector p(embed_factors({{ev.qubit, ev.first}}, c.n_qubits), false);
            Projector q(embed_factors({{ev.qubit, ev.second}}, c.n_qubits), false);
            steps.push_back(ConjunctionStep::make(p, q));
        }
        std::vector<double> fractions(static_cast<std::size_t>(r.counts.q_i), 0.5);
        DilBreakdown dil = register_dil(*state, steps, r.counts.q_i, fractions);
        r.dil_exact_nats = dil.total;
    }
    return r;
}

std::string report_to_json(const DilReport& r, bool bits) {
    const double unit = bits ? kLn2 : 1.0;
    std::ostringstream out;
    out << "{\n";
    out << "  \"circuit\": \"" << r.circuit << "\",\n";
    out << "  \"n_qubits\": " << r.n_qubits << ",\n";
    out << "  \"q_i\": " << r.counts.q_i << ",\n";
    out << "  \"c_i\": " << format_double(r.counts.c_i) << ",\n";
    out << "  \"commuting_c_i\": " << format_double(r.counts.commuting_c_i) << ",\n";
    out << "  \"n_i\": " << r.counts.n_i << ",\n";
    out << "  \"dim_pi\": [";
    for (std::size_t i = 0; i < r.counts.dims.size(); ++i) {
        if (i) out << ",";
        out << r.counts.dims[i];
    }
    out << "],\n";
    out << "  \"dil_upper_bound_nats\": " << format_double(r.dil_upper_bound_nats / unit)
        << ",\n";
    out << "  \"dil_exact_nats\": ";
    if (r.dil_exact_nats)
        out << format_double(*r.dil_exact_nats / unit);
    else
        out << "null";
    out << ",\n";
    out << "  \"closed_form\": \"" << r.closed_form << "\",\n";
    out << "  \"units\": \"" << (bits ? "bits" : "nats") << "\"\n";
    out << "}\n";
    return out.str();
}

}  // namespace dequant

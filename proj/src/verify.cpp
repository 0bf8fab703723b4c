#include "dequant/verify.hpp"

#include <cmath>
#include <sstream>

#include "dequant/entropy.hpp"

namespace dequant {

namespace {

void record(SuiteResult& r, bool ok, const std::string& detail) {
    if (ok) {
        ++r.passed;
    } else {
        ++r.failed;
        if (r.first_failure.empty()) r.first_failure = detail;
    }
}

ComplexMatrix direct_power(const ComplexMatrix& m, int n) {
    ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

}  // namespace

SuiteResult run_conjunction_suite(unsigned seed) {
    SuiteResult r;
    r.name = "conjunction";
    Rng rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dim_dist(2, 16);
        const int d = dim_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, d);
        Projector p = random_projector(rng, d, rank_dist(rng));
        Projector q = random_projector(rng, d, rank_dist(rng));

        Projector meet = nc_conjunction(p, q);
        Projector oracle = intersection_oracle(p, q);
        {
            const double err = (meet.matrix() - oracle.matrix()).norm();
            std::ostringstream msg;
            msg << "oracle mismatch: trial " << trial << " d=" << d << " err=" << err;
            record(r, err <= 1e-8, msg.str());
        }
        {
            Projector rev = nc_conjunction(q, p);
            const double err = (meet.matrix() - rev.matrix()).norm();
            std::ostringstream msg;
            msg << "symmetry violation: trial " << trial << " d=" << d << " err=" << err;
            record(r, err <= 1e-8, msg.str());
        }
        record(r, implies(meet, p) && implies(meet, q),
               "ordering violation at trial " + std::to_string(trial));
        if (trial < 100) {
            for (int k : {1, 2, 5}) {
                std::ostringstream msg;
                msg << "conjunction theorem failed: trial " << trial << " k=" << k;
                record(r, verify_conjunction_theorem(p, q, k), msg.str());
            }
        }
    }
    return r;
}

SuiteResult run_power_suite(unsigned seed) {
    SuiteResult r;
    r.name = "power";
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> dim_dist(2, 8);
        const int d = dim_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, d);
        Projector p = random_projector(rng, d, rank_dist(rng));
        Projector q = random_projector(rng, d, rank_dist(rng));
        ComplexMatrix pq = p.matrix() * q.matrix();
        for (int n = 1; n <= 8; ++n) {
            auto [closed, terms] = product_power_closed_form(p, q, n);
            const double err = (closed - direct_power(pq, n)).norm();
            std::ostringstream msg;
            msg << "power mismatch: trial " << trial << " d=" << d << " n=" << n
                << " err=" << err;
            record(r, err <= 1e-9 * n, msg.str());
        }
    }
    return r;
}

SuiteResult run_limit_suite() {
    SuiteResult r;
    r.name = "limit";
    const std::vector<double> grid{0.4, 0.2, 0.1, 0.05, 0.01};
    for (int n : {1, 2, 4}) {
        double prev = -1.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double theta = grid[i];
            const double v = semiclassical_convergence(SemiclassicalFamily::make(theta), n);
            std::ostringstream msg;
            msg << "bound violation: n=" << n << " theta=" << theta << " value=" << v;
            record(r, v <= 3.0 * theta, msg.str());
            if (i > 0) {
                std::ostringstream msg2;
                msg2 << "not strictly decreasing: n=" << n << " theta=" << theta;
                record(r, v < prev, msg2.str());
            }
            prev = v;
        }
        const double tiny = semiclassical_convergence(SemiclassicalFamily::make(1e-6), n);
        record(r, tiny <= 1e-5, "theta=1e-6 value too large for n=" + std::to_string(n));
    }
    return r;
}

SuiteResult run_entropy_suite(unsigned seed) {
    SuiteResult r;
    r.name = "entropy";
    Rng rng(seed);
    const double ln2 = std::log(2.0);

    // H_Q of pure states is exactly zero after clamping.
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> dim_dist(2, 16);
        const int d = dim_dist(rng);
        QuantumState s = random_state(rng, d);
        DensityMatrix rho(s.amplitudes() * s.amplitudes().adjoint());
        record(r, von_neumann_entropy(rho) == 0.0,
               "pure state entropy nonzero at trial " + std::to_string(trial));
    }

    // Binary entropy bound.
    for (int i = 0; i <= 1000; ++i) {
        const double phi = i / 1000.0;
        record(r, binary_entropy(phi) <= ln2 + 1e-12,
               "binary entropy above ln 2 at phi=" + std::to_string(phi));
    }

    // Negation invariance (power-of-two dims keep rank fractions exact).
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> pow_dist(1, 4);
        const int d = 1 << pow_dist(rng);
        std::uniform_int_distribution<int> rank_dist(0, d);
        Projector p = random_projector(rng, d, rank_dist(rng));
        const double a = binary_entropy(projector_phase_fraction(p));
        const double b = binary_entropy(projector_phase_fraction(negate(p)));
        record(r, a == b, "negation invariance broken at trial " + std::to_string(trial));
    }

    // Pi-traced and conjunction entropy bounds.
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> pow_dist(1, 4);
        const int d = 1 << pow_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, d);
        Projector p = random_projector(rng, d, rank_dist(rng));
        Projector q = random_projector(rng, d, rank_dist(rng));
        QuantumState s = random_state(rng, d);
        auto step = ConjunctionStep::make(p, q);
        record(r, pi_traced_entropy(s, step.comm) <= std::log(double(d)) + 1e-12,
               "pi-traced entropy above ln dim at trial " + std::to_string(trial));
        record(r, nc_conjunction_entropy(s, step) <= std::log(double(d)) + ln2 + 1e-12,
               "conjunction entropy above bound at trial " + std::to_string(trial));
    }

    // Implication entropy equality: P <= Q forces H_C(chi_meet) = H_C(chi_P).
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> pow_dist(1, 4);
        const int d = 1 << pow_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, d);
        const int rq = rank_dist(rng);
        ComplexMatrix u = random_unitary(rng, d);
        ComplexMatrix vq = u.leftCols(rq);
        Projector q(vq * vq.adjoint(), false);
        std::uniform_int_distribution<int> sub_dist(1, rq);
        ComplexMatrix vp = u.leftCols(sub_dist(rng));
        Projector p(vp * vp.adjoint(), false);
        Projector meet = nc_conjunction(p, q);
        const double a = binary_entropy(projector_phase_fraction(meet));
        const double b = binary_entropy(projector_phase_fraction(p));
        record(r, implies(p, q) && a == b,
               "implication entropy mismatch at trial " + std::to_string(trial));
    }

    // Register recurrence stays below its upper bound.
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> pow_dist(1, 3);
        const int d = 1 << pow_dist(rng);
        std::uniform_int_distribution<int> steps_dist(0, 3);
        std::uniform_int_distribution<int> q_dist(0, 2);
        std::uniform_int_distribution<int> rank_dist(1, d);
        const int n_steps = steps_dist(rng);
        const int q_i = q_dist(rng);
        std::vector<ConjunctionStep> steps;
        for (int i = 0; i < n_steps; ++i)
            steps.push_back(ConjunctionStep::make(random_projector(rng, d, rank_dist(rng)),
                                                  random_projector(rng, d, rank_dist(rng))));
        std::uniform_real_distribution<double> frac(0.0, 1.0);
        std::vector<double> fractions;
        for (int i = 0; i < q_i; ++i) fractions.push_back(frac(rng));
        DilBreakdown dil = register_dil(random_state(rng, d), steps, q_i, fractions);
        std::ostringstream msg;
        msg << "register DIL above bound at trial " << trial << ": " << dil.total << " > "
            << dil.upper_bound;
        record(r, dil.total <= dil.upper_bound + 1e-9, msg.str());
    }
    return r;
}

std::vector<SuiteResult> run_suites(const std::string& suite, unsigned seed) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (all || suite == "conjunction") out.push_back(run_conjunction_suite(seed));
    if (all || suite == "power") out.push_back(run_power_suite(seed));
    if (all || suite == "limit") out.push_back(run_limit_suite());
    if (all || suite == "entropy") out.push_back(run_entropy_suite(seed));
    if (out.empty()) throw RangeError("unknown verification suite '" + suite + "'");
    return out;
}

}  // namespace dequant

#include "ovc/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ovc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Standard normals via Box-Muller on mt19937_64 uniforms; the stdlib
// normal_distribution is implementation-defined, which would break seeded
// reproducibility of reports.
struct NormalSampler {
    std::mt19937_64 engine;
    bool cached = false;
    double cache = 0.0;

    explicit NormalSampler(std::uint64_t seed) : engine(seed) {}

    double operator()() {
        if (cached) {
            cached = false;
            return cache;
        }
        const double u1 = ((engine() >> 11) + 1) * 0x1.0p-53;  // (0,1]
        const double u2 = (engine() >> 11) * 0x1.0p-53;        // [0,1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cache = r * std::sin(a);
        cached = true;
        return r * std::cos(a);
    }
};

void check_assignment(const SphereAssignment& a, const Graph& g) {
    if (static_cast<int>(a.x.size()) != g.vertex_count())
        throw std::invalid_argument("assignment covers " + std::to_string(a.x.size()) +
                                    " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    for (const auto& v : a.x)
        if (static_cast<int>(v.size()) != a.d)
            throw std::invalid_argument("assignment vector dimension mismatch");
}

double max_abs_dot(const SphereAssignment& a, const Graph& g) {
    double r = 0.0;
    for (const auto& e : g.edges())
        r = std::max(r, std::abs(a.x[e.u].dot(a.x[e.v])));
    return r;
}

SphereAssignment random_assignment(int n, int d, std::uint64_t stream_seed) {
    NormalSampler normal(stream_seed);
    SphereAssignment a;
    a.d = d;
    a.x.reserve(n);
    for (int v = 0; v < n; ++v) {
        Eigen::VectorXd x(d);
        do {
            for (int i = 0; i < d; ++i) x[i] = normal();
        } while (x.norm() < 1e-9);
        x.normalize();
        a.x.push_back(std::move(x));
    }
    return a;
}

}  // namespace

double loss(const SphereAssignment& a, const Graph& g) {
    check_assignment(a, g);
    double total = 0.0;
    for (const auto& e : g.edges()) {
        const double duv = a.x[e.u].dot(a.x[e.v]);
        total += duv * duv;
    }
    return total;
}

std::vector<Eigen::VectorXd> euclidean_gradient(const SphereAssignment& a,
                                                const Graph& g) {
    check_assignment(a, g);
    std::vector<Eigen::VectorXd> grad(a.x.size(), Eigen::VectorXd::Zero(a.d));
    for (const auto& e : g.edges()) {
        const double duv = a.x[e.u].dot(a.x[e.v]);
        grad[e.u] += 2.0 * duv * a.x[e.v];
        grad[e.v] += 2.0 * duv * a.x[e.u];
    }
    return grad;
}

std::vector<Eigen::VectorXd> gradient(const SphereAssignment& a, const Graph& g) {
    auto grad = euclidean_gradient(a, g);
    for (std::size_t v = 0; v < grad.size(); ++v)
        grad[v] -= grad[v].dot(a.x[v]) * a.x[v];
    return grad;
}

SolveReport search_ortho_coloring(const Graph& g, const SolveConfig& cfg) {
    if (cfg.d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (cfg.restarts < 1 || cfg.max_iterations < 1)
        throw std::invalid_argument("restarts and max_iterations must be positive");
    if (!(cfg.tolerance > 0.0 && cfg.tolerance < 1.0))
        throw std::invalid_argument("tolerance must lie in (0,1)");

    const int n = g.vertex_count();
    SolveReport report;
    report.d = cfg.d;
    report.seed = cfg.seed;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        const std::uint64_t stream =
            splitmix64(cfg.seed ^ (0xD1B54A32D192ED03ull * (restart + 1)));
        SphereAssignment a = random_assignment(n, cfg.d, stream);

        std::vector<double> history;
        double current = loss(a, g);
        if (cfg.record_loss_history) history.push_back(current);

        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            auto grad = gradient(a, g);
            double gnorm2 = 0.0;
            for (const auto& gv : grad) gnorm2 += gv.squaredNorm();
            if (std::sqrt(gnorm2) <= cfg.grad_tolerance) break;

            // Armijo backtracking with renormalization as the retraction.
            double step = cfg.initial_step;
            bool moved = false;
            SphereAssignment trial = a;
            while (step > 1e-20) {
                for (int v = 0; v < n; ++v) {
                    trial.x[v] = a.x[v] - step * grad[v];
                    trial.x[v].normalize();
                }
                const double next = loss(trial, g);
                if (next <= current - cfg.armijo_slope * step * gnorm2) {
                    a = trial;
                    current = next;
                    moved = true;
                    break;
                }
                step *= cfg.step_shrink;
            }
            if (!moved) break;
            if (cfg.record_loss_history) history.push_back(current);
        }

        const double residual = max_abs_dot(a, g);
        report.per_restart_losses.push_back(current);
        report.per_restart_residuals.push_back(residual);
        if (cfg.record_loss_history) report.loss_history.push_back(std::move(history));
        ++report.restarts_run;

        if (report.best_restart < 0 || residual < report.best_residual) {
            report.best_residual = residual;
            report.best_restart = restart;
            report.best = a;
        }
        if (report.best_residual <= cfg.tolerance) break;
    }

    report.status = report.best_residual <= cfg.tolerance ? SolveStatus::success
                                                          : SolveStatus::exhausted;
    return report;
}

SolveReport search_ortho_edge_coloring(const Graph& g, const SolveConfig& cfg) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("edge search requires at least one edge");
    LineGraph lg = line_graph(g);
    SolveReport report = search_ortho_coloring(lg.graph, cfg);
    report.target = ColorTarget::edge;
    report.index_edges = lg.vertex_edges;
    return report;
}

namespace {

// Best rational approximation with denominator <= cap, by walking the
// continued fraction of the exact dyadic value and comparing the final
// convergent against its best semiconvergent. All arithmetic exact.
Rat best_rational_capped(double value, const mpz_class& cap) {
    Rat target = rational_from_double(value);
    const bool negative = target < 0;
    if (negative) target = -target;
    if (target.get_den() <= cap) return negative ? Rat(-target) : target;

    mpz_class h0 = 0, k0 = 1;  // previous convergent
    mpz_class h1 = 1, k1 = 0;  // current convergent
    Rat y = target;
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
        mpz_class h2 = a * h1 + h0;
        mpz_class k2 = a * k1 + k0;
        if (k2 > cap) {
            // Best semiconvergent within the cap, then pick the closer.
            mpz_class t = (cap - k0) / k1;
            Rat conv(h1, k1);
            conv.canonicalize();
            if (t > 0) {
                Rat semi(t * h1 + h0, t * k1 + k0);
                semi.canonicalize();
                if (abs(semi - target) < abs(conv - target)) conv = semi;
            }
            return negative ? Rat(-conv) : conv;
        }
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        Rat frac = y - Rat(a);
        if (frac == 0) {
            Rat conv(h1, k1);
            conv.canonicalize();
            return negative ? Rat(-conv) : conv;  // value hit exactly
        }
        y = Rat(1) / frac;
    }
}

}  // namespace

RoundingResult round_to_rational(const SphereAssignment& a, const Graph& g,
                                 long max_denominator) {
    if (max_denominator < 1)
        throw std::invalid_argument("max denominator must be >= 1");
    check_assignment(a, g);

    RoundingResult result;
    result.attempted = true;
    result.max_denominator = max_denominator;

    std::vector<long> caps;
    for (long cap = 1; cap < max_denominator && cap > 0; cap *= 2)
        caps.push_back(cap);
    caps.push_back(max_denominator);

    for (long cap : caps) {
        std::vector<RationalVector> vecs;
        vecs.reserve(a.x.size());
        bool degenerate = false;
        for (const auto& x : a.x) {
            RationalVector v;
            v.coords.reserve(x.size());
            for (int i = 0; i < x.size(); ++i)
                v.coords.push_back(best_rational_capped(x[i], mpz_class(cap)));
            if (v.is_zero()) {
                degenerate = true;
                break;
            }
            vecs.push_back(std::move(v));
        }
        if (degenerate) continue;
        OrthoColoring candidate{ColorTarget::vertex, a.d, std::move(vecs)};
        VerifyReport check = verify_ortho_coloring(g, candidate);
        if (check.pass) {
            result.certified = true;
            result.denominator_cap = cap;
            result.coloring = std::move(candidate);
            result.failures.clear();
            return result;
        }
        result.failures = check.violations;  // keep the final cap's failures
    }
    return result;
}

}  // namespace ovc

// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "core/bounds.hpp"
#include "core/distances.hpp"
#include "core/errors.hpp"
#include "core/inequalities.hpp"
#include "core/rng.hpp"
#include "core/transforms.hpp"

namespace svgstein::expt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// deterministic block-parallel fill: block b is generated from stream b of the
// master seed regardless of the thread count
void parallel_fill(std::vector<double>& out, std::uint64_t seed, int threads,
                   const std::function<double(std::mt19937_64&)>& gen) {
    constexpr std::size_t kBlock = 4096;
    const std::size_t nblocks = (out.size() + kBlock - 1) / kBlock;
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::min<unsigned>(
                                     8, std::max(1u, std::thread::hardware_concurrency())));
    nthreads = static_cast<int>(std::min<std::size_t>(nthreads, nblocks));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            auto eng = make_engine(seed, b);
            const std::size_t lo = b * kBlock, hi = std::min(out.size(), lo + kBlock);
            for (std::size_t i = lo; i < hi; ++i) out[i] = gen(eng);
        }
    };
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

struct Moments {
    double sigma;   // sqrt Var X
    double rho;     // E|X|^3
    double ex3;     // E X^3
    double gap;     // support envelope b - a
};

Moments increment_moments(Increment inc) {
    switch (inc) {
        case Increment::Rademacher: return {1.0, 1.0, 0.0, 2.0};
        case Increment::Skewed: return {std::sqrt(2.0), 10.0 / 3.0, 2.0, 3.0};
        case Increment::Uniform: return {1.0, 3.0 * std::sqrt(3.0) / 4.0, 0.0, 2.0 * std::sqrt(3.0)};
    }
    return {1.0, 1.0, 0.0, 2.0};
}

}  // namespace

Increment increment_from_string(const std::string& s) {
    if (s == "rademacher") return Increment::Rademacher;
    if (s == "skewed") return Increment::Skewed;
    if (s == "uniform") return Increment::Uniform;
    throw domain_error("unknown increment distribution: " + s);
}

transform::DistributionSpec increment_spec(Increment inc) {
    switch (inc) {
        case Increment::Rademacher: return transform::DistributionSpec::rademacher();
        case Increment::Skewed:
            return transform::DistributionSpec::finite_discrete({-1.0, 2.0}, {2.0 / 3.0, 1.0 / 3.0});
        case Increment::Uniform: {
            const double s3 = std::sqrt(3.0);
            return transform::DistributionSpec::analytic(
                [s3](double) { return 1.0 / (2.0 * s3); }, -s3, s3, 0.0, 1.0,
                [s3](double u) {
                    if (u <= -s3) return 0.0;
                    if (u >= s3) return 0.0;
                    return (3.0 - u * u) / (4.0 * s3);
                },
                [s3](double x) { return std::clamp((x + s3) / (2.0 * s3), 0.0, 1.0); },
                [s3](std::mt19937_64& eng) {
                    std::uniform_real_distribution<double> u(-s3, s3);
                    return u(eng);
                });
        }
    }
    throw domain_error("unknown increment");
}

ResultRow run_d2(long m, long n, long trials, std::uint64_t seed, int threads) {
    if (m < 2 || n < 2) throw domain_error("run_d2: m, n must be >= 2");
    if (trials < 1) throw domain_error("run_d2: trials must be >= 1");
    const auto t0 = Clock::now();

    std::vector<double> w(static_cast<std::size_t>(trials));
    const double cm = std::sqrt(m / 4.0), cn = std::sqrt(n / 4.0);
    parallel_fill(w, seed, threads, [m, n, cm, cn](std::mt19937_64& eng) {
        std::binomial_distribution<long> bx(m, 0.5), by(n, 0.5);
        const double x = (bx(eng) - 0.5 * m) / cm;
        const double y = (by(eng) - 0.5 * n) / cn;
        return x * y;
    });

    const dist::SvgParams target(1.0, 1.0, 0.0);
    auto tg = metric::make_svg_target(target);
    ResultRow row;
    row.experiment = "d2";
    row.seed = seed;
    row.m = m;
    row.n = n;
    row.r = 1.0;
    row.sigma = 1.0;
    row.trials = trials;
    row.empirical_dk = metric::kolmogorov_empirical(w, tg).value;
    row.empirical_dw = metric::wasserstein_empirical(w, tg).value;
    bound::ProductCltInputs bi;
    bi.m = static_cast<double>(m);
    bi.n = static_cast<double>(n);
    bi.e_abs_x3 = bi.e_abs_y3 = 1.0;  // |2(I-1/2)| = 1
    bi.e_x4 = bi.e_y4 = 1.0;
    bi.third_moments_vanish = true;
    auto bs = bound::product_clt_bounds(bi);
    row.bound_dw = bs[0].value;
    row.bound_dk = bs[1].value;
    row.ratio_dw = row.empirical_dw / row.bound_dw;
    row.ratio_dk = row.empirical_dk / row.bound_dk;
    row.se_dk = metric::bootstrap_se(w, tg, metric::Metric::Kolmogorov, 8, seed);
    row.se_dw = metric::bootstrap_se(w, tg, metric::Metric::Wasserstein, 8, seed);
    row.wall_time_s = seconds_since(t0);
    return row;
}

ResultRow run_random_sum(double p, Increment inc, long trials, std::uint64_t seed, int threads) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("run_random_sum: p must lie in (0,1)");
    if (trials < 1) throw domain_error("run_random_sum: trials must be >= 1");
    const auto t0 = Clock::now();
    const Moments mom = increment_moments(inc);
    const double sp = std::sqrt(p);

    std::vector<double> w(static_cast<std::size_t>(trials));
    auto gen = [p, sp, inc](std::mt19937_64& eng) {
        std::geometric_distribution<long> geo(p);  // support {0,1,...}
        const long N = geo(eng) + 1;               // {1,2,...}
        double s = 0.0;
        switch (inc) {
            case Increment::Rademacher: {
                std::binomial_distribution<long> heads(N, 0.5);
                s = 2.0 * heads(eng) - N;
                break;
            }
            case Increment::Skewed: {
                std::binomial_distribution<long> twos(N, 1.0 / 3.0);
                const long b = twos(eng);
                s = 3.0 * b - N;
                break;
            }
            case Increment::Uniform: {
                std::uniform_real_distribution<double> u(-std::sqrt(3.0), std::sqrt(3.0));
                for (long i = 0; i < N; ++i) s += u(eng);
                break;
            }
        }
        return sp * s;
    };
    parallel_fill(w, seed, threads, gen);

    // Laplace(0, sigma/sqrt(2)) target
    const dist::SvgParams target(2.0, mom.sigma / std::sqrt(2.0), 0.0);
    auto tg = metric::make_svg_target(target);
    ResultRow row;
    row.experiment = "random_sum";
    row.seed = seed;
    row.p = p;
    row.r = 2.0;
    row.sigma = target.sigma;
    row.trials = trials;
    row.empirical_dk = metric::kolmogorov_empirical(w, tg).value;
    row.empirical_dw = metric::wasserstein_empirical(w, tg).value;
    bound::RandomSumInputs ri;
    ri.p_geo = p;
    ri.sigma = mom.sigma;
    ri.rho = mom.rho;
    ri.quantile_gap = mom.gap;  // X^L lives on the convex hull of supp(X)
    auto bs = bound::random_sum_bounds(ri);
    row.bound_dk = bs[0].value;
    row.bound_dw = bs[1].value;
    row.ratio_dk = row.bound_dk > 0 ? row.empirical_dk / row.bound_dk : 0.0;
    row.ratio_dw = row.bound_dw > 0 ? row.empirical_dw / row.bound_dw : 0.0;
    row.se_dk = metric::bootstrap_se(w, tg, metric::Metric::Kolmogorov, 8, seed);
    row.se_dw = metric::bootstrap_se(w, tg, metric::Metric::Wasserstein, 8, seed);
    row.wall_time_s = seconds_since(t0);
    return row;
}

std::vector<CfRow> run_cf_diagnostic(double p, Increment inc, const std::vector<double>& t_grid) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("run_cf_diagnostic: p must lie in (0,1)");
    const Moments mom = increment_moments(inc);
    auto spec = increment_spec(inc);
    if (spec.kind() != transform::DistributionSpec::Kind::FiniteDiscrete)
        throw domain_error("run_cf_diagnostic: discrete increment required");
    const auto& vals = spec.values();
    const auto& probs = spec.probs();
    auto phi_x = [&](double t) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < vals.size(); ++i)
            acc += probs[i] * std::exp(std::complex<double>(0.0, t * vals[i]));
        return acc;
    };
    const double sp = std::sqrt(p);
    std::vector<CfRow> out;
    for (double t : t_grid) {
        // phi_W(t) = p phi(sqrt(p) t) / (1 - (1-p) phi(sqrt(p) t))
        const std::complex<double> f = phi_x(sp * t);
        const std::complex<double> phi_w = p * f / (1.0 - (1.0 - p) * f);
        CfRow row;
        row.t = t;
        row.im_phi = phi_w.imag();
        row.leading = -(sp * t * t * t * mom.ex3 / 6.0) /
                      (1.0 + 0.5 * mom.sigma * mom.sigma * t * t);
        row.ratio = (row.leading != 0.0) ? row.im_phi / row.leading : 0.0;
        out.push_back(row);
    }
    return out;
}

ResultRow run_vg_compare(const dist::VgParams& p1, const dist::SvgParams& p2, long trials,
                         std::uint64_t seed) {
    if (trials < 1) throw domain_error("run_vg_compare: trials must be >= 1");
    const auto t0 = Clock::now();
    auto sample = dist::vg_sample(p1, static_cast<std::size_t>(trials), derive_seed(seed, 17));
    auto tg = metric::make_svg_target(p2);
    ResultRow row;
    row.experiment = "vg_compare";
    row.seed = seed;
    row.r = p2.r;
    row.sigma = p2.sigma;
    row.trials = trials;
    row.empirical_dk = metric::kolmogorov_empirical(sample, tg).value;
    row.empirical_dw = metric::wasserstein_empirical(sample, tg).value;
    auto bs = bound::vg_svg_bounds(p1, p2);
    row.bound_dw = bs[0].value;
    row.bound_dk = bs[1].valid ? bs[1].value : -1.0;
    row.ratio_dw = row.bound_dw > 0 ? row.empirical_dw / row.bound_dw : 0.0;
    row.ratio_dk = row.bound_dk > 0 ? row.empirical_dk / row.bound_dk : 0.0;
    row.extra = std::fabs(p1.r * p1.theta + p1.mu - p2.mu);  // first-moment lower bound on d_W
    row.se_dk = metric::bootstrap_se(sample, tg, metric::Metric::Kolmogorov, 8, seed);
    row.se_dw = metric::bootstrap_se(sample, tg, metric::Metric::Wasserstein, 8, seed);
    row.wall_time_s = seconds_since(t0);
    return row;
}

ResultRow run_fixed_point(double r, double sigma, long n, std::uint64_t seed) {
    if (n < 1) throw domain_error("run_fixed_point: n must be >= 1");
    const auto t0 = Clock::now();
    auto spec = transform::DistributionSpec::svg(r, sigma);
    auto transformed = transform::centered_equilibrium_sample(spec, r,
                                                              static_cast<std::size_t>(n),
                                                              derive_seed(seed, 1));
    const dist::SvgParams target(r, sigma, 0.0);
    auto tg = metric::make_svg_target(target);
    auto fresh = dist::svg_sample(target, static_cast<std::size_t>(n), derive_seed(seed, 2));

    ResultRow row;
    row.experiment = "fixed_point";
    row.seed = seed;
    row.n = n;
    row.r = r;
    row.sigma = sigma;
    row.trials = n;
    row.empirical_dk = metric::kolmogorov_empirical(transformed, tg).value;
    row.extra = metric::kolmogorov_empirical(fresh, tg).value;  // self-distance baseline
    row.empirical_dw = metric::wasserstein_empirical(transformed, tg).value;
    row.bound_dk = -1.0;
    row.bound_dw = -1.0;
    row.wall_time_s = seconds_since(t0);
    return row;
}

// ---------------------------------------------------------------------------
// config parsing and rendering

ExperimentConfig ExperimentConfig::from_key_values(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        if (key == "experiment") cfg.experiment = val;
        else if (key == "m") cfg.m = std::stol(val);
        else if (key == "n") cfg.n = std::stol(val);
        else if (key == "p") cfg.p = std::stod(val);
        else if (key == "trials") cfg.trials = std::stol(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "r") cfg.r = std::stod(val);
        else if (key == "sigma") cfg.sigma = std::stod(val);
        else if (key == "r1") cfg.r1 = std::stod(val);
        else if (key == "theta1") cfg.theta1 = std::stod(val);
        else if (key == "sigma1") cfg.sigma1 = std::stod(val);
        else if (key == "mu1") cfg.mu1 = std::stod(val);
        else if (key == "r2") cfg.r2 = std::stod(val);
        else if (key == "sigma2") cfg.sigma2 = std::stod(val);
        else if (key == "mu2") cfg.mu2 = std::stod(val);
        else if (key == "x_dist") cfg.x_dist = val;
        else if (key == "threads") cfg.threads = std::stoi(val);
        else if (key == "out") cfg.out_path = val;
        else if (key == "format") cfg.format = val;
        else if (key == "t_grid") {
            cfg.t_grid.clear();
            std::istringstream ts(val);
            std::string tok;
            while (std::getline(ts, tok, ',')) cfg.t_grid.push_back(std::stod(tok));
        } else {
            throw domain_error("unknown experiment config key: " + key);
        }
    }
    return cfg;
}

std::string ExperimentConfig::to_key_values() const {
    std::ostringstream os;
    os << "experiment=" << experiment << " m=" << m << " n=" << n << " p=" << p
       << " trials=" << trials << " seed=" << seed << " r=" << r << " sigma=" << sigma
       << " x_dist=" << x_dist;
    return os.str();
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_rows_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << "# svgstein-experiment-v1 " << cfg.to_key_values() << "\n";
    os << "experiment,seed,m,n,p,r,sigma,trials,empirical_dk,empirical_dw,bound_dk,bound_dw,"
          "ratio_dk,ratio_dw,se_dk,se_dw,extra,wall_time_s\n";
    for (const auto& w : rows) {
        os << w.experiment << ',' << w.seed << ',' << w.m << ',' << w.n << ',' << fmt(w.p) << ','
           << fmt(w.r) << ',' << fmt(w.sigma) << ',' << w.trials << ',' << fmt(w.empirical_dk)
           << ',' << fmt(w.empirical_dw) << ',' << fmt(w.bound_dk) << ',' << fmt(w.bound_dw)
           << ',' << fmt(w.ratio_dk) << ',' << fmt(w.ratio_dw) << ',' << fmt(w.se_dk) << ','
           << fmt(w.se_dw) << ',' << fmt(w.extra) << ',' << fmt(w.wall_time_s) << "\n";
    }
    return os.str();
}

std::string render_cf_csv(const ExperimentConfig& cfg, const std::vector<CfRow>& rows) {
    std::ostringstream os;
    os << "# svgstein-experiment-cf-v1 " << cfg.to_key_values() << "\n";
    os << "t,im_phi,leading,ratio\n";
    for (const auto& w : rows)
        os << fmt(w.t) << ',' << fmt(w.im_phi) << ',' << fmt(w.leading) << ',' << fmt(w.ratio)
           << "\n";
    return os.str();
}

nlohmann::json row_to_json(const ResultRow& w) {
    return nlohmann::json{{"experiment", w.experiment},
                          {"seed", w.seed},
                          {"m", w.m},
                          {"n", w.n},
                          {"p", w.p},
                          {"r", w.r},
                          {"sigma", w.sigma},
                          {"trials", w.trials},
                          {"empirical_dk", w.empirical_dk},
                          {"empirical_dw", w.empirical_dw},
                          {"bound_dk", w.bound_dk},
                          {"bound_dw", w.bound_dw},
                          {"ratio_dk", w.ratio_dk},
                          {"ratio_dw", w.ratio_dw},
                          {"se_dk", w.se_dk},
                          {"se_dw", w.se_dw},
                          {"extra", w.extra},
                          {"wall_time_s", w.wall_time_s}};
}

std::string render_rows_json(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    nlohmann::json j;
    j["schema"] = "svgstein-experiment-v1";
    j["config"] = cfg.to_key_values();
    j["rows"] = nlohmann::json::array();
    for (const auto& w : rows) j["rows"].push_back(row_to_json(w));
    return j.dump(2) + "\n";
}

}  // namespace

RunOutcome run_experiment(const ExperimentConfig& cfg) {
    RunOutcome outcome;
    std::vector<ResultRow> rows;
    if (cfg.experiment == "d2") {
        rows.push_back(run_d2(cfg.m, cfg.n, cfg.trials, cfg.seed, cfg.threads));
    } else if (cfg.experiment == "random_sum") {
        rows.push_back(run_random_sum(cfg.p, increment_from_string(cfg.x_dist), cfg.trials,
                                      cfg.seed, cfg.threads));
    } else if (cfg.experiment == "vg_compare") {
        rows.push_back(run_vg_compare(dist::VgParams(cfg.r1, cfg.theta1, cfg.sigma1, cfg.mu1),
                                      dist::SvgParams(cfg.r2, cfg.sigma2, cfg.mu2), cfg.trials,
                                      cfg.seed));
    } else if (cfg.experiment == "fixed_point") {
        rows.push_back(run_fixed_point(cfg.r, cfg.sigma, cfg.trials, cfg.seed));
    } else if (cfg.experiment == "cf") {
        auto cf = run_cf_diagnostic(cfg.p, increment_from_string(cfg.x_dist), cfg.t_grid);
        outcome.output = render_cf_csv(cfg, cf);
        return outcome;
    } else if (cfg.experiment == "inequality") {
        auto reps = sf::inequality_suite(sf::default_nu_grid(), sf::default_x_grid());
        std::ostringstream os;
        os << "# svgstein-experiment-inequality-v1\n";
        os << "id,holds,min_slack,argmin_nu,argmin_x,points\n";
        for (const auto& rep : reps)
            os << rep.id << ',' << (rep.holds ? 1 : 0) << ',' << fmt(rep.min_slack) << ','
               << fmt(rep.argmin_nu) << ',' << fmt(rep.argmin_x) << ',' << rep.points_checked
               << "\n";
        outcome.output = os.str();
        for (const auto& rep : reps) outcome.bound_violation |= !rep.holds;
        return outcome;
    } else {
        throw domain_error("unknown experiment: " + cfg.experiment);
    }

    for (const auto& w : rows) {
        // flag only when the bound is informative (below the trivial d_K cap)
        if (w.bound_dk > 0.0 && w.bound_dk < 1.0 &&
            w.empirical_dk > w.bound_dk + 3.0 * w.se_dk)
            outcome.bound_violation = true;
        if (w.bound_dw > 0.0 && w.empirical_dw > w.bound_dw + 3.0 * w.se_dw)
            outcome.bound_violation = true;
    }
    outcome.output =
        (cfg.format == "json") ? render_rows_json(cfg, rows) : render_rows_csv(cfg, rows);
    return outcome;
}

}  // namespace svgstein::expt

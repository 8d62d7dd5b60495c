// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "svgstein.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "json.hpp"

#include "core/bessel.hpp"
#include "core/bounds.hpp"
#include "core/distances.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/inequalities.hpp"
#include "core/stein.hpp"
#include "core/stein_verify.hpp"
#include "core/svg.hpp"
#include "core/transforms.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        return SVGSTEIN_OK;
    } catch (const svgstein::singularity_error& e) {
        return fail(SVGSTEIN_ERR_SINGULAR, e.what());
    } catch (const svgstein::overflow_error& e) {
        return fail(SVGSTEIN_ERR_OVERFLOW, e.what());
    } catch (const svgstein::quadrature_error& e) {
        return fail(SVGSTEIN_ERR_QUADRATURE, e.what());
    } catch (const svgstein::domain_error& e) {
        return fail(SVGSTEIN_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(SVGSTEIN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SVGSTEIN_ERR_INTERNAL, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int scaled_out(const svgstein::ScaledValue& v, double* mantissa, double* log_scale) {
    if (!mantissa || !log_scale) return fail(SVGSTEIN_ERR_INVALID, "null output pointer");
    *mantissa = v.mantissa;
    *log_scale = v.log_scale;
    return SVGSTEIN_OK;
}

std::map<std::string, double> parse_kv(const char* text) {
    std::map<std::string, double> kv;
    if (!text) return kv;
    std::string s(text);
    for (auto& c : s)
        if (c == '\n' || c == '\t' || c == ',') c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        kv[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
    }
    return kv;
}

std::optional<double> get(const std::map<std::string, double>& kv, const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) return std::nullopt;
    return it->second;
}

double need(const std::map<std::string, double>& kv, const std::string& k) {
    auto v = get(kv, k);
    if (!v) throw svgstein::domain_error("missing input: " + k);
    return *v;
}

nlohmann::json report_to_json(const svgstein::bound::BoundReport& b) {
    nlohmann::json j;
    j["bound_id"] = b.bound_id;
    j["value"] = b.value;
    j["valid"] = b.valid;
    if (!b.notes.empty()) j["notes"] = b.notes;
    if (b.value_exact_constants) j["value_exact_constants"] = *b.value_exact_constants;
    j["inputs"] = b.inputs;
    return j;
}

}  // namespace

extern "C" {

const char* svgstein_last_error(void) { return g_last_error.c_str(); }
void svgstein_string_free(char* s) { std::free(s); }

int svgstein_log_gamma(double x, double* out) {
    return guarded([&] { *out = svgstein::sf::log_gamma(x); });
}

int svgstein_bessel_i(double nu, double x, int scaled, double* mantissa, double* log_scale) {
    svgstein::ScaledValue v;
    int rc = guarded([&] {
        v = svgstein::sf::bessel_i(nu, x, scaled != 0);
        if (!scaled) v.value_checked();  // overflow contract for the unscaled form
    });
    return rc != SVGSTEIN_OK ? rc : scaled_out(v, mantissa, log_scale);
}

int svgstein_bessel_k(double nu, double x, int scaled, double* mantissa, double* log_scale) {
    svgstein::ScaledValue v;
    int rc = guarded([&] { v = svgstein::sf::bessel_k(nu, x, scaled != 0); });
    return rc != SVGSTEIN_OK ? rc : scaled_out(v, mantissa, log_scale);
}

int svgstein_int_i_lower(double nu, double x, int weight_power, int scaled, double* mantissa,
                         double* log_scale) {
    svgstein::ScaledValue v;
    int rc = guarded([&] { v = svgstein::sf::int_i_lower(nu, x, weight_power, scaled != 0); });
    return rc != SVGSTEIN_OK ? rc : scaled_out(v, mantissa, log_scale);
}

int svgstein_int_k_tail(double nu, double x, int weight_power, int scaled, double* mantissa,
                        double* log_scale) {
    svgstein::ScaledValue v;
    int rc = guarded([&] { v = svgstein::sf::int_k_tail(nu, x, weight_power, scaled != 0); });
    return rc != SVGSTEIN_OK ? rc : scaled_out(v, mantissa, log_scale);
}

int svgstein_inequality_suite_json(const double* nu_grid, size_t n_nu, const double* x_grid,
                                   size_t n_x, char** json_out) {
    return guarded([&] {
        std::vector<double> nus = n_nu ? std::vector<double>(nu_grid, nu_grid + n_nu)
                                       : svgstein::sf::default_nu_grid();
        std::vector<double> xs = n_x ? std::vector<double>(x_grid, x_grid + n_x)
                                     : svgstein::sf::default_x_grid();
        auto reps = svgstein::sf::inequality_suite(nus, xs);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reps)
            j.push_back({{"id", rep.id},
                         {"holds", rep.holds},
                         {"min_slack", rep.min_slack},
                         {"argmin_nu", rep.argmin_nu},
                         {"argmin_x", rep.argmin_x},
                         {"points", rep.points_checked}});
        *json_out = dup_string(j.dump(2));
    });
}

int svgstein_svg_pdf(double r, double sigma, double mu, double x, double* out) {
    return guarded([&] { *out = svgstein::dist::svg_pdf({r, sigma, mu}, x); });
}

int svgstein_svg_cdf(double r, double sigma, double mu, double x, double* out) {
    return guarded([&] { *out = svgstein::dist::svg_cdf({r, sigma, mu}, x); });
}

int svgstein_svg_quantile(double r, double sigma, double mu, double q, double* out) {
    return guarded([&] { *out = svgstein::dist::svg_quantile({r, sigma, mu}, q); });
}

int svgstein_svg_sample(double r, double sigma, double mu, size_t n, uint64_t seed, double* out) {
    return guarded([&] {
        auto v = svgstein::dist::svg_sample({r, sigma, mu}, n, seed);
        std::copy(v.begin(), v.end(), out);
    });
}

int svgstein_svg_absolute_moment(double r, double sigma, double k, double* out) {
    return guarded([&] { *out = svgstein::dist::svg_absolute_moment({r, sigma, 0.0}, k); });
}

int svgstein_svg_cumulants(double r, double sigma, double* k2, double* k4, double* k6) {
    return guarded([&] {
        auto c = svgstein::dist::svg_cumulants({r, sigma, 0.0});
        *k2 = c.k2;
        *k4 = c.k4;
        *k6 = c.k6;
    });
}

int svgstein_vg_pdf(double r, double theta, double sigma, double mu, double x, double* out) {
    return guarded([&] { *out = svgstein::dist::vg_pdf({r, theta, sigma, mu}, x); });
}

int svgstein_vg_sample(double r, double theta, double sigma, double mu, size_t n, uint64_t seed,
                       double* out) {
    return guarded([&] {
        auto v = svgstein::dist::vg_sample({r, theta, sigma, mu}, n, seed);
        std::copy(v.begin(), v.end(), out);
    });
}

struct svgstein_stein {
    svgstein::stein::SteinSolution impl;
};

svgstein_stein* svgstein_stein_create(double r, double sigma, double mu, int h_kind, double a,
                                      double b) {
    using svgstein::stein::TestFunction;
    svgstein_stein* out = nullptr;
    int rc = guarded([&] {
        TestFunction h;
        switch (h_kind) {
            case 0: h = TestFunction::indicator(a); break;
            case 1: h = TestFunction::smoothed_indicator(a, b); break;
            case 2: h = TestFunction::sign(); break;
            case 3: h = TestFunction::sine(a); break;
            case 4: h = TestFunction::constant(a); break;
            default: throw svgstein::domain_error("unknown test function kind");
        }
        out = new svgstein_stein{
            svgstein::stein::SteinSolution({r, sigma, mu}, std::move(h))};
    });
    return rc == SVGSTEIN_OK ? out : nullptr;
}

svgstein_stein* svgstein_stein_create_callable(double r, double sigma, double mu,
                                               double (*fn)(double, void*), void* ctx, double lip,
                                               double htilde_sup) {
    using svgstein::stein::TestFunction;
    svgstein_stein* out = nullptr;
    int rc = guarded([&] {
        if (!fn) throw svgstein::domain_error("null callable");
        std::optional<double> ht;
        if (!std::isnan(htilde_sup)) ht = htilde_sup;
        auto h = TestFunction::lipschitz([fn, ctx](double x) { return fn(x, ctx); }, lip, ht);
        out = new svgstein_stein{
            svgstein::stein::SteinSolution({r, sigma, mu}, std::move(h))};
    });
    return rc == SVGSTEIN_OK ? out : nullptr;
}

void svgstein_stein_free(svgstein_stein* s) { delete s; }

int svgstein_stein_h_mean(const svgstein_stein* s, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.h_mean(); });
}

int svgstein_stein_solve(const svgstein_stein* s, double x, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.solve(x); });
}

int svgstein_stein_d1(const svgstein_stein* s, double x, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.solve_d1(x); });
}

int svgstein_stein_d1_limit(const svgstein_stein* s, int side, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.solve_d1_limit(side); });
}

int svgstein_stein_d2(const svgstein_stein* s, double x, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.solve_d2(x); });
}

int svgstein_stein_t_r(const svgstein_stein* s, double x, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.apply_t_r(x); });
}

int svgstein_stein_residual(const svgstein_stein* s, double x, double* out) {
    if (!s) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = s->impl.residual(x); });
}

int svgstein_stein_verify_json(double r, double sigma, double mu, double tol, char** json_out) {
    return guarded([&] {
        svgstein::dist::SvgParams p(r, sigma, mu);
        auto checks = svgstein::stein::verify_solution_bounds(
            p, svgstein::stein::default_test_family(),
            svgstein::stein::default_verification_grid(p), tol > 0 ? tol : 1e-6);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : checks)
            j.push_back({{"bound_id", c.bound_id},
                         {"sup_ratio", c.sup_ratio},
                         {"argmax_x", c.argmax_x},
                         {"argmax_h", c.argmax_h},
                         {"ok", c.ok},
                         {"numerical_suspect", c.numerical_suspect}});
        *json_out = dup_string(j.dump(2));
    });
}

struct svgstein_spec {
    svgstein::transform::DistributionSpec impl;
};

svgstein_spec* svgstein_spec_discrete(const double* values, const double* probs, size_t n) {
    svgstein_spec* out = nullptr;
    int rc = guarded([&] {
        out = new svgstein_spec{svgstein::transform::DistributionSpec::finite_discrete(
            std::vector<double>(values, values + n), std::vector<double>(probs, probs + n))};
    });
    return rc == SVGSTEIN_OK ? out : nullptr;
}

svgstein_spec* svgstein_spec_svg(double r, double sigma) {
    svgstein_spec* out = nullptr;
    int rc = guarded(
        [&] { out = new svgstein_spec{svgstein::transform::DistributionSpec::svg(r, sigma)}; });
    return rc == SVGSTEIN_OK ? out : nullptr;
}

void svgstein_spec_free(svgstein_spec* s) { delete s; }

int svgstein_zero_bias_pdf(const svgstein_spec* w, double x, double* out) {
    if (!w) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] { *out = svgstein::transform::zero_bias_density(w->impl, x); });
}

int svgstein_zero_bias_sample(const svgstein_spec* w, size_t n, uint64_t seed, double* out) {
    if (!w) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] {
        auto v = svgstein::transform::ZeroBias(w->impl).sample(n, seed);
        std::copy(v.begin(), v.end(), out);
    });
}

int svgstein_equilibrium_pdf(const svgstein_spec* w, double r, double x, double* out) {
    if (!w) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded(
        [&] { *out = svgstein::transform::centered_equilibrium_density(w->impl, r, x); });
}

int svgstein_equilibrium_sample(const svgstein_spec* w, double r, size_t n, uint64_t seed,
                                double* out) {
    if (!w) return fail(SVGSTEIN_ERR_INVALID, "null handle");
    return guarded([&] {
        auto v = svgstein::transform::centered_equilibrium_sample(w->impl, r, n, seed);
        std::copy(v.begin(), v.end(), out);
    });
}

int svgstein_transform_moment(double e_w_p_plus_2, double variance, double r, double p,
                              double* out) {
    return guarded(
        [&] { *out = svgstein::transform::transform_moment(e_w_p_plus_2, variance, r, p); });
}

int svgstein_g_r_apply(double (*fn)(double, void*), void* ctx, double r, double x, double* out) {
    if (!fn) return fail(SVGSTEIN_ERR_INVALID, "null callable");
    return guarded([&] {
        *out = svgstein::transform::g_r_apply([fn, ctx](double t) { return fn(t, ctx); }, r, x);
    });
}

int svgstein_kolmogorov_svg(const double* sample, size_t n, double r, double sigma, double mu,
                            double* out) {
    return guarded([&] {
        auto tg = svgstein::metric::make_svg_target({r, sigma, mu});
        *out = svgstein::metric::kolmogorov_empirical(std::span(sample, n), tg).value;
    });
}

int svgstein_wasserstein_svg(const double* sample, size_t n, double r, double sigma, double mu,
                             double* out) {
    return guarded([&] {
        auto tg = svgstein::metric::make_svg_target({r, sigma, mu});
        *out = svgstein::metric::wasserstein_empirical(std::span(sample, n), tg).value;
    });
}

int svgstein_bounded_wasserstein_svg(const double* sample, size_t n, double r, double sigma,
                                     double mu, double* out) {
    return guarded([&] {
        auto tg = svgstein::metric::make_svg_target({r, sigma, mu});
        *out = svgstein::metric::bounded_wasserstein_proxy(std::span(sample, n), tg).value;
    });
}

int svgstein_kolmogorov_from_wasserstein(double r, double sigma, double d_w, double* out) {
    return guarded(
        [&] { *out = svgstein::metric::kolmogorov_from_wasserstein({r, sigma, 0.0}, d_w); });
}

int svgstein_concentration_bound(double r, double sigma, double alpha, double* out) {
    return guarded([&] { *out = svgstein::metric::concentration_bound({r, sigma, 0.0}, alpha); });
}

int svgstein_bound_json(const char* id, const char* inputs, char** json_out) {
    return guarded([&] {
        using namespace svgstein::bound;
        if (!id) throw svgstein::domain_error("null bound id");
        const std::string bid(id);
        const auto kv = parse_kv(inputs);
        nlohmann::json j;
        auto one = [&](const BoundReport& b) { j = report_to_json(b); };
        auto pick = [&](const std::vector<BoundReport>& rs) {
            for (const auto& b : rs)
                if (b.bound_id == bid) return one(b);
            throw svgstein::domain_error("bound id not produced: " + bid);
        };

        if (bid == "k_w" || bid == "k_v" || bid == "w_w" || bid == "w_v" || bid == "k_v_e") {
            CouplingInputs in;
            in.r = need(kv, "r");
            in.sigma = get(kv, "sigma").value_or(1.0);
            in.beta = get(kv, "beta").value_or(1e-3);
            in.p_exceed = get(kv, "p_exceed").value_or(0.0);
            in.mean_abs_delta = get(kv, "mean_abs_delta");
            pick(general_coupling_bounds(in));
        } else if (bid == "vg_svg_w" || bid == "vg_svg_k") {
            svgstein::dist::VgParams p1(need(kv, "r1"), get(kv, "theta1").value_or(0.0),
                                        get(kv, "sigma1").value_or(1.0),
                                        get(kv, "mu1").value_or(0.0));
            svgstein::dist::SvgParams p2(need(kv, "r2"), get(kv, "sigma2").value_or(1.0),
                                         get(kv, "mu2").value_or(0.0));
            pick(vg_svg_bounds(p1, p2));
        } else if (bid == "six_moment") {
            one(six_moment_bound(need(kv, "r"), get(kv, "sigma").value_or(1.0), need(kv, "k2"),
                                 get(kv, "k3").value_or(0.0), need(kv, "k4"), need(kv, "k6")));
        } else if (bid == "product_w" || bid == "product_k") {
            ProductCltInputs in;
            in.m = need(kv, "m");
            in.n = need(kv, "n");
            in.e_abs_x3 = get(kv, "e_abs_x3").value_or(1.0);
            in.e_abs_y3 = get(kv, "e_abs_y3").value_or(1.0);
            in.e_x4 = get(kv, "e_x4");
            in.e_y4 = get(kv, "e_y4");
            in.third_moments_vanish = get(kv, "third_moments_vanish").value_or(0.0) != 0.0;
            pick(product_clt_bounds(in));
        } else if (bid == "randsum_k" || bid == "randsum_w" || bid == "randsum_k_gen" ||
                   bid == "randsum_w_gen") {
            RandomSumInputs in;
            in.p_geo = get(kv, "p").value_or(0.5);
            in.sigma = get(kv, "sigma").value_or(1.0);
            in.rho = get(kv, "rho");
            in.quantile_gap = get(kv, "quantile_gap");
            in.C = get(kv, "C");
            in.K = get(kv, "K");
            in.mu_N = get(kv, "mu_N");
            in.e_xl_gap = get(kv, "e_xl_gap");
            in.e_nm_sqrt = get(kv, "e_nm_sqrt");
            pick(random_sum_bounds(in));
        } else if (bid == "prop41") {
            svgstein::dist::SvgParams p(need(kv, "r"), get(kv, "sigma").value_or(1.0), 0.0);
            BoundReport b{"prop41"};
            b.value = svgstein::metric::kolmogorov_from_wasserstein(p, need(kv, "dw"));
            b.inputs = {{"r", p.r}, {"sigma", p.sigma}, {"dw", need(kv, "dw")}};
            one(b);
        } else if (bid == "lemma47") {
            svgstein::dist::SvgParams p(need(kv, "r"), get(kv, "sigma").value_or(1.0), 0.0);
            BoundReport b{"lemma47"};
            b.value = svgstein::metric::concentration_bound(p, need(kv, "alpha"));
            b.inputs = {{"r", p.r}, {"sigma", p.sigma}, {"alpha", need(kv, "alpha")}};
            one(b);
        } else {
            throw svgstein::domain_error("unknown bound id: " + bid);
        }
        *json_out = dup_string(j.dump(2));
    });
}

int svgstein_experiment_run(const char* key_value_config, char** output, int* bound_violation) {
    return guarded([&] {
        auto cfg = svgstein::expt::ExperimentConfig::from_key_values(
            key_value_config ? key_value_config : "");
        auto outcome = svgstein::expt::run_experiment(cfg);
        if (output) *output = dup_string(outcome.output);
        if (bound_violation) *bound_violation = outcome.bound_violation ? 1 : 0;
    });
}

}  // extern "C"

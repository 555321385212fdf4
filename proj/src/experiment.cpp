#include "sfanc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "sfanc/simd/kernels.hpp"

namespace sfanc {

namespace {
constexpr double kPredFloorDb = -200.0;
}

NoiseRng::NoiseRng(unsigned long long seed, unsigned long long stream)
    : gen_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

double NoiseRng::uniform() {
    // in (0, 1]; avoids log(0) in the Box-Muller transform
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
}

cplx NoiseRng::circular(double var) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double amp = std::sqrt(-var * std::log(u1));
    return {amp * std::cos(2.0 * M_PI * u2), amp * std::sin(2.0 * M_PI * u2)};
}

Observer::Observer(const SceneConfig& scene, const Wavenumber& kw,
                   double snr_db)
    : time_sign_(kw.time_sign) {
    const auto R = scene.reference_mics.size();
    const auto M = scene.error_mics.size();
    x0_.resize(R);
    d0_.resize(M);
    for (size_t r = 0; r < R; ++r) {
        cplx p(0.0, 0.0);
        for (const auto& src : scene.primary_sources)
            p += pressure_true(scene, kw, src, scene.reference_mics[r]);
        x0_(r) = p;
    }
    for (size_t m = 0; m < M; ++m) {
        cplx p(0.0, 0.0);
        for (const auto& src : scene.primary_sources)
            p += pressure_true(scene, kw, src, scene.error_mics[m]);
        d0_(m) = p;
    }
    if (std::isfinite(snr_db)) {
        const double att = std::pow(10.0, -snr_db / 10.0);
        // per-array average signal power sets each array's noise variance
        var_x_ = att * x0_.squaredNorm() / static_cast<double>(R);
        var_d_ = att * d0_.squaredNorm() / static_cast<double>(M);
    }
}

Observation Observer::draw(NoiseRng& rng) const {
    // noise follows the phase convention so that flipping it conjugates
    // the whole simulation exactly
    Observation o{x0_, d0_};
    if (var_x_ > 0.0)
        for (Eigen::Index i = 0; i < o.x.size(); ++i) {
            const cplx w = rng.circular(var_x_);
            o.x(i) += time_sign_ >= 0 ? w : std::conj(w);
        }
    if (var_d_ > 0.0)
        for (Eigen::Index i = 0; i < o.d.size(); ++i) {
            const cplx w = rng.circular(var_d_);
            o.d(i) += time_sign_ >= 0 ? w : std::conj(w);
        }
    return o;
}

Observation observe(const SceneConfig& scene, const Wavenumber& kw,
                    NoiseRng& rng, double snr_db) {
    return Observer(scene, kw, snr_db).draw(rng);
}

FieldEvaluator::FieldEvaluator(const SceneConfig& scene, const Wavenumber& kw,
                               const RegionGrid& grid)
    : grid_(grid) {
    const auto G = grid_.size();
    up_re_.resize(G);
    up_im_.resize(G);
    for (std::size_t g = 0; g < G; ++g) {
        cplx p(0.0, 0.0);
        for (const auto& src : scene.primary_sources)
            p += pressure_true(scene, kw, src, grid_.points[g]);
        up_re_[g] = p.real();
        up_im_[g] = p.imag();
    }
    const auto L = scene.secondary_sources.size();
    us_re_.resize(L);
    us_im_.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
        us_re_[l].resize(G);
        us_im_[l].resize(G);
        for (std::size_t g = 0; g < G; ++g) {
            const cplx p = pressure_true(scene, kw, scene.secondary_sources[l],
                                         grid_.points[g]);
            us_re_[l][g] = p.real();
            us_im_[l][g] = p.imag();
        }
    }
    energy_p_ = simd::weighted_abs2_sum(G, up_re_.data(), up_im_.data(),
                                        grid_.weights.data());
}

void FieldEvaluator::accumulate_total(const CVec& y, std::vector<double>& re,
                                      std::vector<double>& im) const {
    if (static_cast<std::size_t>(y.size()) != us_re_.size())
        throw std::invalid_argument("FieldEvaluator: y has wrong length");
    re = up_re_;
    im = up_im_;
    for (std::size_t l = 0; l < us_re_.size(); ++l)
        simd::caxpy(grid_.size(), y(l), us_re_[l].data(), us_im_[l].data(),
                    re.data(), im.data());
}

double FieldEvaluator::p_red_db(const CVec& y) const {
    std::vector<double> re, im;
    accumulate_total(y, re, im);
    const double energy_e = simd::weighted_abs2_sum(
        grid_.size(), re.data(), im.data(), grid_.weights.data());
    const double ratio = energy_e / energy_p_;
    if (!(ratio > 1e-20)) return kPredFloorDb;
    return std::max(kPredFloorDb, 10.0 * std::log10(ratio));
}

FieldMap FieldEvaluator::total_field(const CVec& y) const {
    std::vector<double> re, im;
    accumulate_total(y, re, im);
    FieldMap map;
    map.points = grid_.points;
    map.label = FieldMap::Label::total;
    map.values.resize(grid_.size());
    for (std::size_t g = 0; g < grid_.size(); ++g)
        map.values[g] = cplx(re[g], im[g]);
    return map;
}

FieldMap FieldEvaluator::primary_field() const {
    FieldMap map;
    map.points = grid_.points;
    map.label = FieldMap::Label::primary;
    map.values.resize(grid_.size());
    for (std::size_t g = 0; g < grid_.size(); ++g)
        map.values[g] = cplx(up_re_[g], up_im_[g]);
    return map;
}

std::pair<double, FieldMap> evaluate_field(const SceneConfig& scene,
                                           const Wavenumber& kw, const CVec& y,
                                           const RegionGrid& grid) {
    FieldEvaluator eval(scene, kw, grid);
    return {eval.p_red_db(y), eval.total_field(y)};
}

void ExperimentConfig::validate() const {
    scene.validate();
    step.validate();
    if (iterations < 1)
        throw std::invalid_argument("ExperimentConfig: iterations >= 1");
    if (frequencies.empty())
        throw std::invalid_argument("ExperimentConfig: no frequencies");
    for (double f : frequencies)
        if (!(f > 0.0))
            throw std::invalid_argument(
                "ExperimentConfig: frequencies must be positive");
    if (std::isnan(snr_db))
        throw std::invalid_argument("ExperimentConfig: snr_db is NaN");
    if (algorithms.empty())
        throw std::invalid_argument("ExperimentConfig: no algorithms");
    if (!(grid_spacing > 0.0))
        throw std::invalid_argument("ExperimentConfig: grid_spacing > 0");
    if (jobs < 1)
        throw std::invalid_argument("ExperimentConfig: jobs >= 1");
    if (!kernel_eta_auto || !kernel_lambda_auto) {
        KernelParams kp = kernel;
        if (kernel_lambda_auto) kp.lambda = 0.0;
        kp.validate();
    }
}

KernelParams resolve_kernel_params(const ExperimentConfig& config,
                                   const Wavenumber& kw) {
    KernelParams kp = config.kernel;
    if (config.kernel_eta_auto) {
        const Vec2 dir = (config.scene.primary_sources.front() -
                          config.scene.target_region.center)
                             .normalized();
        kp.eta = {dir.x, dir.y, 0.0};
    }
    if (config.kernel_lambda_auto) {
        kp.lambda = 0.0;
        const CMat K = gram_matrix(kp, kw, config.scene.reference_mics);
        kp.lambda = default_lambda(K);
    }
    kp.validate();
    return kp;
}

namespace {

struct FrequencyContext {
    Wavenumber kw;
    CMat G_true;
    double norm_GhG = 0.0;
    RegionGrid grid;
    std::unique_ptr<FieldEvaluator> eval;
    std::unique_ptr<Observer> observer;
    // set when any configured algorithm needs the A matrices
    std::unique_ptr<InterpolationMatrices> mats;
    double norm_Ayy = 0.0;
    KernelParams kparams;
};

FrequencyContext build_context(const ExperimentConfig& config, double f_hz) {
    FrequencyContext ctx;
    ctx.kw = config.scene.wavenumber(f_hz, config.time_sign);
    ctx.G_true = transfer_matrix_G(config.scene, ctx.kw);
    ctx.norm_GhG = spectral_norm_sq(ctx.G_true);
    ctx.grid = make_grid(config.scene.target_region, config.scene.scatterer,
                         config.grid_spacing);
    ctx.eval = std::make_unique<FieldEvaluator>(config.scene, ctx.kw, ctx.grid);
    ctx.observer =
        std::make_unique<Observer>(config.scene, ctx.kw, config.snr_db);
    const bool needs_mats =
        std::any_of(config.algorithms.begin(), config.algorithms.end(),
                    [](Algorithm a) { return a != Algorithm::nlms; });
    if (needs_mats) {
        ctx.kparams = resolve_kernel_params(config, ctx.kw);
        ctx.mats = std::make_unique<InterpolationMatrices>(
            interpolation_matrices(config.scene, ctx.kw, ctx.kparams,
                                   ctx.grid));
        ctx.norm_Ayy = std::sqrt(spectral_norm_sq(ctx.mats->A_yy));
    }
    return ctx;
}

FrequencyResult run_one(const ExperimentConfig& config,
                        const FrequencyContext& ctx, Algorithm alg,
                        std::size_t freq_index) {
    FrequencyResult res;
    res.frequency_hz = ctx.kw.frequency_hz;
    res.algorithm = alg;
    res.grid_points = ctx.grid.size();

    const auto L = config.scene.secondary_sources.size();
    const auto R = config.scene.reference_mics.size();

    ControlState st;
    st.algorithm = alg;
    if (alg == Algorithm::nlms) {
        st.W = CMat::Zero(L, R);
    } else {
        const FixedFilter ff = fixed_filter(*ctx.mats);
        st.W = ff.W;
        res.used_pseudo_inverse = ff.used_pseudo_inverse;
        res.cond_Ayy = ctx.mats->cond_Ayy;
        res.gram_cond = ctx.mats->gram_cond;
        res.lambda = ctx.mats->lambda;
    }
    st.gamma_pow = (config.step.gamma == 0.0) ? 0.0 : 1.0;

    NoiseRng rng(config.rng_seed, freq_index);
    res.p_red_db.reserve(config.iterations);
    CVec y;
    for (long n = 0; n < config.iterations; ++n) {
        const Observation o = ctx.observer->draw(rng);
        y = st.W * o.x;
        res.p_red_db.push_back(ctx.eval->p_red_db(y));
        if (n == 0) res.field_first = ctx.eval->total_field(y);
        if (alg == Algorithm::nlms) {
            const CVec e = error_signal(ctx.G_true, o.d, y);
            st = nlms_step(st, o.x, e, ctx.G_true, config.step, ctx.norm_GhG);
        } else if (alg == Algorithm::nlms_transition) {
            const CVec e = error_signal(ctx.G_true, o.d, y);
            st = transition_step(st, o.x, e, ctx.G_true, *ctx.mats,
                                 config.step, ctx.norm_GhG, ctx.norm_Ayy);
        }
    }
    res.field_final = ctx.eval->total_field(y);
    res.field_primary = ctx.eval->primary_field();
    res.W_final = st.W;
    return res;
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
    config.validate();
    RunResult out;
    out.config = config;
    const std::size_t nf = config.frequencies.size();
    const std::size_t na = config.algorithms.size();
    out.results.resize(nf * na);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t fi = next.fetch_add(1);
            if (fi >= nf) return;
            FrequencyContext ctx;
            std::string ctx_error;
            try {
                ctx = build_context(config, config.frequencies[fi]);
            } catch (const std::exception& ex) {
                ctx_error = ex.what();
            }
            for (std::size_t ai = 0; ai < na; ++ai) {
                FrequencyResult& res = out.results[fi * na + ai];
                res.frequency_hz = config.frequencies[fi];
                res.algorithm = config.algorithms[ai];
                if (!ctx_error.empty()) {
                    res.error = ctx_error;
                    continue;
                }
                try {
                    res = run_one(config, ctx, config.algorithms[ai], fi);
                } catch (const std::exception& ex) {
                    res.error = ex.what();
                }
            }
        }
    };

    const int jobs = std::min<std::size_t>(config.jobs, nf);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace sfanc

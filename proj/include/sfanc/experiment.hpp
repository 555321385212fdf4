#pragma once

#include <random>
#include <string>
#include <vector>

#include "sfanc/control.hpp"
#include "sfanc/fieldmap.hpp"
#include "sfanc/quadrature.hpp"

namespace sfanc {

// Deterministic noise stream; one per (seed, frequency index) so parallel
// and serial sweeps produce identical results.
class NoiseRng {
  public:
    NoiseRng(unsigned long long seed, unsigned long long stream);

    double uniform();            // in (0, 1]
    cplx circular(double var);   // circular complex Gaussian, E|z|^2 = var

  private:
    std::mt19937_64 gen_;
};

struct Observation {
    CVec x;  // reference mics
    CVec d;  // error mics (primary component)
};

// Noiseless mic pressures plus per-array noise variances for a given SNR.
class Observer {
  public:
    Observer(const SceneConfig& scene, const Wavenumber& kw, double snr_db);

    Observation draw(NoiseRng& rng) const;
    const CVec& noiseless_x() const { return x0_; }
    const CVec& noiseless_d() const { return d0_; }

  private:
    CVec x0_, d0_;
    double var_x_ = 0.0, var_d_ = 0.0;
    int time_sign_ = +1;
};

Observation observe(const SceneConfig& scene, const Wavenumber& kw,
                    NoiseRng& rng, double snr_db);

inline CVec error_signal(const CMat& G_true, const CVec& d, const CVec& y) {
    return d + G_true * y;
}

// Ground-truth fields on the evaluation grid, precomputed per frequency.
// The per-iteration metric is a handful of split-complex axpys plus one
// weighted power reduction.
class FieldEvaluator {
  public:
    FieldEvaluator(const SceneConfig& scene, const Wavenumber& kw,
                   const RegionGrid& grid);

    double p_red_db(const CVec& y) const;  // floored at -200 dB
    FieldMap total_field(const CVec& y) const;
    FieldMap primary_field() const;
    double primary_energy() const { return energy_p_; }
    const RegionGrid& grid() const { return grid_; }

  private:
    void accumulate_total(const CVec& y, std::vector<double>& re,
                          std::vector<double>& im) const;

    RegionGrid grid_;
    std::vector<double> up_re_, up_im_;
    std::vector<std::vector<double>> us_re_, us_im_;  // one per secondary
    double energy_p_ = 0.0;
};

std::pair<double, FieldMap> evaluate_field(const SceneConfig& scene,
                                           const Wavenumber& kw, const CVec& y,
                                           const RegionGrid& grid);

struct ExperimentConfig {
    SceneConfig scene;
    std::vector<double> frequencies;
    long iterations = 10000;
    double snr_db = 40.0;  // +inf disables measurement noise
    std::vector<Algorithm> algorithms = {Algorithm::nlms};
    StepParams step;
    KernelParams kernel;
    bool kernel_lambda_auto = true;  // lambda = 1e-3 trace(K)/R
    bool kernel_eta_auto = true;     // eta = unit vector toward the source
    double grid_spacing = 0.0365;
    unsigned long long rng_seed = 0;
    int time_sign = +1;
    int jobs = 1;

    void validate() const;
};

struct FrequencyResult {
    double frequency_hz = 0.0;
    Algorithm algorithm = Algorithm::nlms;
    std::vector<double> p_red_db;  // one entry per iteration
    CMat W_final;
    FieldMap field_first, field_final, field_primary;
    double cond_Ayy = 0.0;
    double gram_cond = 0.0;
    double lambda = 0.0;
    std::size_t grid_points = 0;
    bool used_pseudo_inverse = false;
    std::string error;  // nonempty when this frequency failed
};

struct RunResult {
    ExperimentConfig config;
    std::vector<FrequencyResult> results;  // frequency-major, algorithm-minor
};

RunResult run(const ExperimentConfig& config);

// Resolved kernel parameters for one frequency (auto eta/lambda applied).
KernelParams resolve_kernel_params(const ExperimentConfig& config,
                                   const Wavenumber& kw);

}  // namespace sfanc

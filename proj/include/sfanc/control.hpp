#pragma once

#include <string>

#include "sfanc/quadrature.hpp"

namespace sfanc {

enum class Algorithm { nlms, fixed_kir, nlms_transition };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm a);

struct StepParams {
    double mu0 = 0.1;
    double epsilon = 1e-8;
    double gamma = 0.9;

    void validate() const;  // mu0 in (0,2), epsilon > 0, gamma in [0,1)
};

struct ControlState {
    CMat W;
    long n = 0;
    Algorithm algorithm = Algorithm::nlms;
    double gamma_pow = 1.0;  // gamma^n, transition only
};

// sigma_max(G)^2 == ||G^H G||_2.
double spectral_norm_sq(const CMat& G);

CVec drive_signals(const ControlState& state, const CVec& x);

// W <- W - mu_n G^H e x^H with mu_n = mu0 / (||G^H G||_2 ||x||^2 + eps).
// norm_GhG < 0 means "compute here"; callers looping over iterations pass
// the cached value.
ControlState nlms_step(const ControlState& state, const CVec& x, const CVec& e,
                       const CMat& G, const StepParams& p,
                       double norm_GhG = -1.0);

struct FixedFilter {
    CMat W;  // -A_yy^{-1} A_yx
    bool used_pseudo_inverse = false;
};

// Direct Hermitian solve when cond(A_yy) < 1e12, otherwise Moore-Penrose
// pseudo-inverse with relative singular-value cutoff 1e-10.
FixedFilter fixed_filter(const InterpolationMatrices& mats);

ControlState fixed_filter_state(const InterpolationMatrices& mats,
                                Algorithm algorithm = Algorithm::fixed_kir);

// W <- W - mu_n [gamma^n (A_yy y + A_yx x) + G^H e] x^H,
// mu_n = mu0 / (gamma^n ||A_yy||_2 + ||G^H G||_2 ||x||^2 + eps).
ControlState transition_step(const ControlState& state, const CVec& x,
                             const CVec& e, const CMat& G,
                             const InterpolationMatrices& mats,
                             const StepParams& p, double norm_GhG = -1.0,
                             double norm_Ayy = -1.0);

}  // namespace sfanc

#include "sfanc/control.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace sfanc {

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "nlms") return Algorithm::nlms;
    if (name == "fixed_kir") return Algorithm::fixed_kir;
    if (name == "nlms_transition") return Algorithm::nlms_transition;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::nlms: return "nlms";
        case Algorithm::fixed_kir: return "fixed_kir";
        case Algorithm::nlms_transition: return "nlms_transition";
    }
    return "?";
}

void StepParams::validate() const {
    if (!(mu0 > 0.0 && mu0 < 2.0))
        throw std::invalid_argument("StepParams: mu0 must be in (0, 2)");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("StepParams: epsilon must be > 0");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("StepParams: gamma must be in [0, 1)");
}

double spectral_norm_sq(const CMat& G) {
    const auto sv = Eigen::JacobiSVD<CMat>(G).singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    return smax * smax;
}

CVec drive_signals(const ControlState& state, const CVec& x) {
    if (state.W.cols() != x.size())
        throw std::invalid_argument("drive_signals: dimension mismatch");
    return state.W * x;
}

ControlState nlms_step(const ControlState& state, const CVec& x, const CVec& e,
                       const CMat& G, const StepParams& p, double norm_GhG) {
    if (G.rows() != e.size() || G.cols() != state.W.rows() ||
        state.W.cols() != x.size())
        throw std::invalid_argument("nlms_step: dimension mismatch");
    if (norm_GhG < 0.0) norm_GhG = spectral_norm_sq(G);

    const double mu = p.mu0 / (norm_GhG * x.squaredNorm() + p.epsilon);
    ControlState next = state;
    next.W.noalias() -= mu * (G.adjoint() * e) * x.adjoint();
    next.n = state.n + 1;
    return next;
}

FixedFilter fixed_filter(const InterpolationMatrices& mats) {
    if (mats.A_yy.rows() != mats.A_yx.rows())
        throw std::invalid_argument("fixed_filter: inconsistent A matrices");
    FixedFilter out;
    if (mats.cond_Ayy < 1e12) {
        out.W = -mats.A_yy.ldlt().solve(mats.A_yx);
    } else {
        Eigen::JacobiSVD<CMat> svd(mats.A_yy,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-10);
        out.W = -svd.solve(mats.A_yx);
        out.used_pseudo_inverse = true;
    }
    return out;
}

ControlState fixed_filter_state(const InterpolationMatrices& mats,
                                Algorithm algorithm) {
    ControlState st;
    st.W = fixed_filter(mats).W;
    st.algorithm = algorithm;
    st.n = 0;
    st.gamma_pow = 1.0;
    return st;
}

ControlState transition_step(const ControlState& state, const CVec& x,
                             const CVec& e, const CMat& G,
                             const InterpolationMatrices& mats,
                             const StepParams& p, double norm_GhG,
                             double norm_Ayy) {
    if (G.rows() != e.size() || G.cols() != state.W.rows() ||
        state.W.cols() != x.size())
        throw std::invalid_argument("transition_step: dimension mismatch");
    if (norm_GhG < 0.0) norm_GhG = spectral_norm_sq(G);
    if (norm_Ayy < 0.0) norm_Ayy = std::sqrt(spectral_norm_sq(mats.A_yy));

    // gamma_pow == 0 (gamma set to 0) reduces bit-exactly to nlms_step.
    const double gn = state.gamma_pow;
    const double mu =
        p.mu0 / (gn * norm_Ayy + norm_GhG * x.squaredNorm() + p.epsilon);

    ControlState next = state;
    if (gn == 0.0) {
        next.W.noalias() -= mu * (G.adjoint() * e) * x.adjoint();
    } else {
        const CVec y = state.W * x;
        const CVec grad = gn * (mats.A_yy * y + mats.A_yx * x) + G.adjoint() * e;
        next.W.noalias() -= mu * grad * x.adjoint();
    }
    next.gamma_pow = gn * p.gamma;
    next.n = state.n + 1;
    return next;
}

}  // namespace sfanc

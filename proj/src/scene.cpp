#include "sfanc/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sfanc/specfun.hpp"

namespace sfanc {

namespace {

constexpr double kSingularityDist = 1e-9;
constexpr int kSeriesCap = 120;

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("SceneConfig: " + what);
}

// e^{+jwt} convention throughout; callers conjugate for time_sign = -1.
cplx greens_plus(double k, const Vec2& r, const Vec2& r_src) {
    const double d = (r - r_src).norm();
    if (d < kSingularityDist)
        throw std::domain_error("greens_free_2d: evaluation at the source");
    const cplx h = specfun::hankel2(0, k * d);
    return cplx(0.0, -0.25) * h;
}

// Rigid-cylinder scattered field of a unit point source, valid outside
// the cylinder. Coefficients from the Neumann condition on r = a:
//   c_n = -J_n'(ka) H_n^(2)(k r_s) / H_n^(2)'(ka),
// summed as c_0 H_0(kr) + sum_n 2 c_n H_n(kr) cos(n dphi).
cplx scattered_plus(double k, const Disk& sc, const Vec2& src, const Vec2& r) {
    const Vec2 pr = r - sc.center;
    const Vec2 ps = src - sc.center;
    const double rr = pr.norm();
    const double rs = ps.norm();
    const double a = sc.radius;
    const double dphi = std::atan2(pr.y, pr.x) - std::atan2(ps.y, ps.x);

    const int nmax = std::min(
        kSeriesCap, static_cast<int>(std::ceil(k * std::max(rr, a))) + 24);

    const auto ja = specfun::bessel_j_array(nmax + 1, k * a);
    const auto ya = specfun::bessel_y_array(nmax + 1, k * a);
    const auto jr = specfun::bessel_j_array(nmax, k * rr);
    const auto yr = specfun::bessel_y_array(nmax, k * rr);
    const auto js = specfun::bessel_j_array(nmax, k * rs);
    const auto ys = specfun::bessel_y_array(nmax, k * rs);

    auto h2 = [](const std::vector<double>& j, const std::vector<double>& y,
                 int n) { return cplx(j[n], -y[n]); };
    auto deriv = [&](const std::vector<double>& j, const std::vector<double>& y,
                     int n) {
        const cplx hn(j[n], -y[n]);
        if (n == 0) return -cplx(j[1], -y[1]);
        return cplx(j[n - 1], -y[n - 1]) - (n / (k * a)) * hn;
    };
    auto jderiv = [&](int n) {
        if (n == 0) return -ja[1];
        return ja[n - 1] - (n / (k * a)) * ja[n];
    };

    cplx sum(0.0, 0.0);
    double scale = 0.0;
    int small_streak = 0;
    for (int n = 0; n <= nmax; ++n) {
        const cplx cn = -jderiv(n) * h2(js, ys, n) / deriv(ja, ya, n);
        const cplx base = cn * h2(jr, yr, n);
        // convergence judged on |c_n H_n|, not the cos-modulated term
        const double mag = (n == 0 ? 1.0 : 2.0) * std::abs(base);
        sum += (n == 0 ? 1.0 : 2.0 * std::cos(n * dphi)) * base;
        scale = std::max(scale, mag);
        if (mag <= 1e-14 * scale) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
    }
    if (small_streak < 2)
        throw std::runtime_error(
            "pressure_true: scattering series did not converge (N_max " +
            std::to_string(nmax) + ")");
    return cplx(0.0, -0.25) * sum;
}

}  // namespace

void SceneConfig::validate() const {
    require(!primary_sources.empty(), "at least one primary source required");
    require(!secondary_sources.empty(), "L >= 1 required");
    require(!reference_mics.empty(), "R >= 1 required");
    require(!error_mics.empty(), "M >= 1 required");
    require(sound_speed > 0.0, "sound speed must be positive");
    require(target_region.radius > 0.0, "target region radius must be positive");

    std::vector<Vec2> all;
    auto add = [&](const std::vector<Vec2>& v, const char* kind) {
        for (const auto& p : v) {
            if (scatterer)
                require(!scatterer->contains(p),
                        std::string(kind) + " lies inside the scatterer");
            all.push_back(p);
        }
    };
    add(primary_sources, "primary source");
    add(secondary_sources, "secondary source");
    add(reference_mics, "reference mic");
    add(error_mics, "error mic");

    for (const auto& p : error_mics)
        require(target_region.contains(p),
                "error mic lies outside the target region");
    for (const auto& p : reference_mics)
        require(!target_region.contains(p),
                "reference mic lies inside the target region");
    for (const auto& p : secondary_sources)
        require(!target_region.contains(p),
                "secondary source lies inside the target region");

    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            require((all[i] - all[j]).norm() > 0.0,
                    "positions must be pairwise distinct");

    if (scatterer) {
        require(scatterer->radius > 0.0, "scatterer radius must be positive");
        require((scatterer->center - target_region.center).norm() +
                        scatterer->radius <= target_region.radius,
                "scatterer must lie inside the target region");
    }
}

cplx greens_free_2d(const Wavenumber& kw, const Vec2& r, const Vec2& r_src) {
    const cplx g = greens_plus(kw.k, r, r_src);
    return kw.time_sign >= 0 ? g : std::conj(g);
}

cplx pressure_true(const SceneConfig& scene, const Wavenumber& kw,
                   const Vec2& src, const Vec2& r) {
    cplx p = greens_plus(kw.k, r, src);
    if (scene.scatterer) {
        const auto& sc = *scene.scatterer;
        if (sc.contains(r) || sc.contains(src))
            throw std::domain_error(
                "pressure_true: point inside the scatterer");
        p += scattered_plus(kw.k, sc, src, r);
    }
    return kw.time_sign >= 0 ? p : std::conj(p);
}

CMat transfer_matrix_G(const SceneConfig& scene, const Wavenumber& kw) {
    const auto M = scene.error_mics.size();
    const auto L = scene.secondary_sources.size();
    CMat G(M, L);
    for (size_t m = 0; m < M; ++m)
        for (size_t l = 0; l < L; ++l)
            G(m, l) = pressure_true(scene, kw, scene.secondary_sources[l],
                                    scene.error_mics[m]);
    return G;
}

SceneConfig build_scene_paper() {
    SceneConfig s;
    s.primary_sources = {{-3.5, 0.2}};
    const int L = 12, R = 6;
    for (int l = 0; l < L; ++l) {
        const double th = 2.0 * M_PI * l / L;
        s.secondary_sources.push_back({std::cos(th), std::sin(th)});
    }
    for (int r = 0; r < R; ++r) {
        const double th = 2.0 * M_PI * r / R;
        const double rad = (r % 2 == 0) ? 2.03 : 1.97;
        s.reference_mics.push_back({rad * std::cos(th), rad * std::sin(th)});
    }
    s.error_mics = {{0.3, 0.0}, {-0.3, 0.0}};
    s.scatterer = Disk{{0.0, 0.0}, 0.15};
    s.target_region = Disk{{0.0, 0.0}, 0.5};
    s.sound_speed = 343.0;
    return s;
}

}  // namespace sfanc

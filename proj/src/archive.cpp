#include "sfanc/archive.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "sfanc/analysis.hpp"
#include "sfanc/config.hpp"
#include "sfanc/simd/kernels.hpp"

namespace sfanc {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string freq_tag(double f_hz) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", f_hz);
    std::string s(buf);
    for (auto& c : s)
        if (c == '.') c = 'p';
    return s;
}

std::ofstream open_table(const fs::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_trajectory(const fs::path& path, const FrequencyResult& r) {
    auto out = open_table(path);
    out << "iteration,p_red_db\n";
    for (std::size_t n = 0; n < r.p_red_db.size(); ++n)
        out << n << "," << fmt(r.p_red_db[n]) << "\n";
}

void write_filter(const fs::path& path, const CMat& W) {
    auto out = open_table(path);
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < W.rows(); ++i)
        for (Eigen::Index j = 0; j < W.cols(); ++j)
            out << i << "," << j << "," << fmt(W(i, j).real()) << ","
                << fmt(W(i, j).imag()) << "\n";
}

void write_field(const fs::path& path, const FieldMap& f) {
    auto out = open_table(path);
    out << "x_m,y_m,re_pa,im_pa\n";
    for (std::size_t i = 0; i < f.points.size(); ++i)
        out << fmt(f.points[i].x) << "," << fmt(f.points[i].y) << ","
            << fmt(f.values[i].real()) << "," << fmt(f.values[i].imag())
            << "\n";
}

}  // namespace

ArchiveSummary write_run_archive(const std::string& out_dir,
                                 const RunResult& result) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    write_config_file((dir / "config.cfg").string(), result.config);

    ArchiveSummary summary;
    json manifest;
    manifest["format"] = "sfanc-archive-1";
    manifest["seed"] = result.config.rng_seed;
    manifest["sound_speed_mps"] = result.config.scene.sound_speed;
    manifest["time_sign"] = result.config.time_sign;
    manifest["simd_backend"] =
        simd::active_backend() == simd::Backend::avx2 ? "avx2" : "scalar";
    manifest["decisions"] = {
        {"array_angles", "uniform from angle 0; even reference mics at "
                         "2.03 m, odd at 1.97 m"},
        {"snr_definition", "per-array mean signal power"},
        {"green_function", "-(j/4) H0^(2)(kr), e^{+jwt} convention"},
        {"quadrature", "uniform Cartesian lattice, midpoint rule"},
    };
    manifest["config_file"] = "config.cfg";
    json tables = json::array();

    auto summary_table = open_table(dir / "summary.csv");
    summary_table << "frequency_hz,algorithm,final_p_red_db,cond_Ayy,"
                     "gram_cond,lambda,grid_points,used_pseudo_inverse,"
                     "error\n";

    std::set<double> primary_written;
    for (const auto& r : result.results) {
        const std::string tag =
            to_string(r.algorithm) + "_f" + freq_tag(r.frequency_hz);
        if (r.error.empty()) {
            const std::string pred = "pred_" + tag + ".csv";
            write_trajectory(dir / pred, r);
            tables.push_back(pred);
            const std::string filt = "W_" + tag + ".csv";
            write_filter(dir / filt, r.W_final);
            tables.push_back(filt);
            const std::string ffirst = "field_" + tag + "_first.csv";
            const std::string ffinal = "field_" + tag + "_final.csv";
            write_field(dir / ffirst, r.field_first);
            write_field(dir / ffinal, r.field_final);
            tables.push_back(ffirst);
            tables.push_back(ffinal);
            if (!primary_written.count(r.frequency_hz)) {
                primary_written.insert(r.frequency_hz);
                const std::string fp =
                    "field_primary_f" + freq_tag(r.frequency_hz) + ".csv";
                write_field(dir / fp, r.field_primary);
                tables.push_back(fp);
            }
        } else {
            ++summary.failures;
        }
        summary_table << fmt(r.frequency_hz) << "," << to_string(r.algorithm)
                      << ","
                      << (r.p_red_db.empty() ? "" : fmt(r.p_red_db.back()))
                      << "," << fmt(r.cond_Ayy) << "," << fmt(r.gram_cond)
                      << "," << fmt(r.lambda) << "," << r.grid_points << ","
                      << (r.used_pseudo_inverse ? 1 : 0) << ",\"" << r.error
                      << "\"\n";
    }
    tables.push_back("summary.csv");
    manifest["tables"] = tables;

    const fs::path mpath = dir / "manifest.json";
    auto mout = open_table(mpath);
    mout << manifest.dump(2) << "\n";
    summary.manifest_path = mpath.string();
    return summary;
}

void write_fieldmap_table(const std::string& path, const SceneConfig& scene,
                          const FrequencyResult& res) {
    const auto values = normalized_power_db(res.field_final, res.field_primary);
    auto out = open_table(fs::path(path));
    out << "kind,x_m,y_m,value_db\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << "grid," << fmt(res.field_final.points[i].x) << ","
            << fmt(res.field_final.points[i].y) << "," << fmt(values[i])
            << "\n";
    for (const auto& m : scene.error_mics)
        out << "error_mic," << fmt(m.x) << "," << fmt(m.y) << ",\n";
    if (scene.scatterer)
        out << "scatterer," << fmt(scene.scatterer->center.x) << ","
            << fmt(scene.scatterer->center.y) << ","
            << fmt(scene.scatterer->radius) << "\n";
    out << "region," << fmt(scene.target_region.center.x) << ","
        << fmt(scene.target_region.center.y) << ","
        << fmt(scene.target_region.radius) << "\n";
}

}  // namespace sfanc

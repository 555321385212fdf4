#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "sfanc/archive.hpp"
#include "sfanc/config.hpp"

namespace {

using namespace sfanc;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct Overrides {
    std::string config_path;
    std::string out_dir = "out";
    double frequency = -1.0;
    std::string algorithm;
    long iterations = -1;
    long seed = -1;
    int jobs = -1;
    bool no_scatterer = false;
};

void add_common(CLI::App* cmd, Overrides& ov, bool with_out) {
    cmd->add_option("--config", ov.config_path, "experiment config file")
        ->required();
    if (with_out)
        cmd->add_option("--out", ov.out_dir, "output directory");
    cmd->add_option("--frequency", ov.frequency, "run a single frequency [Hz]");
    cmd->add_option("--algorithm", ov.algorithm,
                    "nlms | fixed_kir | nlms_transition");
    cmd->add_option("--iterations", ov.iterations, "iteration count override");
    cmd->add_option("--seed", ov.seed, "RNG seed override");
    cmd->add_option("--jobs", ov.jobs, "parallel frequency tasks");
    cmd->add_flag("--no-scatterer", ov.no_scatterer,
                  "disable the rigid scatterer");
}

ExperimentConfig load_with_overrides(const Overrides& ov) {
    ExperimentConfig cfg = load_config(ov.config_path);
    if (ov.frequency > 0.0) cfg.frequencies = {ov.frequency};
    if (!ov.algorithm.empty())
        cfg.algorithms = {algorithm_from_string(ov.algorithm)};
    if (ov.iterations > 0) cfg.iterations = ov.iterations;
    if (ov.seed >= 0) cfg.rng_seed = static_cast<unsigned long long>(ov.seed);
    if (ov.jobs > 0) cfg.jobs = ov.jobs;
    if (ov.no_scatterer) cfg.scene.scatterer.reset();
    cfg.validate();
    return cfg;
}

int cmd_run(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    const RunResult result = run(cfg);
    const ArchiveSummary s = write_run_archive(ov.out_dir, result);
    for (const auto& r : result.results) {
        std::printf("%8.1f Hz  %-16s", r.frequency_hz,
                    to_string(r.algorithm).c_str());
        if (r.error.empty())
            std::printf("final P_red = %9.3f dB  (cond A_yy %.3g)\n",
                        r.p_red_db.back(), r.cond_Ayy);
        else
            std::printf("FAILED: %s\n", r.error.c_str());
    }
    std::printf("archive: %s\n", s.manifest_path.c_str());
    if (s.failures) {
        std::fprintf(stderr, "%d frequency run(s) failed\n", s.failures);
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_fieldmap(const Overrides& ov) {
    ExperimentConfig cfg = load_with_overrides(ov);
    if (cfg.frequencies.size() != 1 || cfg.algorithms.size() != 1) {
        std::fprintf(stderr,
                     "fieldmap needs exactly one frequency and algorithm "
                     "(use --frequency / --algorithm)\n");
        return kExitConfig;
    }
    const RunResult result = run(cfg);
    const auto& r = result.results.front();
    if (!r.error.empty()) {
        std::fprintf(stderr, "run failed: %s\n", r.error.c_str());
        return kExitRuntime;
    }
    std::filesystem::create_directories(ov.out_dir);
    const std::string path = ov.out_dir + "/fieldmap_" +
                             to_string(r.algorithm) + ".csv";
    write_fieldmap_table(path, cfg.scene, r);
    std::printf("%s\n", path.c_str());
    return kExitOk;
}

int cmd_validate(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    std::printf("scene invariants: ok\n");
    int status = kExitOk;
    std::printf("%12s %14s %14s %10s\n", "freq [Hz]", "cond(A_yy)",
                "cond(K+lI)", "lambda");
    for (double f : cfg.frequencies) {
        try {
            const Wavenumber kw = cfg.scene.wavenumber(f, cfg.time_sign);
            const KernelParams kp = resolve_kernel_params(cfg, kw);
            const RegionGrid grid = make_grid(
                cfg.scene.target_region, cfg.scene.scatterer, cfg.grid_spacing);
            const auto mats =
                interpolation_matrices(cfg.scene, kw, kp, grid);
            std::printf("%12g %14.4g %14.4g %10.3g\n", f, mats.cond_Ayy,
                        mats.gram_cond, mats.lambda);
        } catch (const std::exception& ex) {
            std::printf("%12g  diagnostic: %s\n", f, ex.what());
            status = kExitRuntime;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel-interpolation spatial active noise control toolkit"};
    app.require_subcommand(1);

    Overrides ov_run, ov_map, ov_val;
    CLI::App* run_cmd =
        app.add_subcommand("run", "run the experiment and archive results");
    add_common(run_cmd, ov_run, true);
    CLI::App* map_cmd = app.add_subcommand(
        "fieldmap", "write the normalized power map for one run");
    add_common(map_cmd, ov_map, true);
    CLI::App* val_cmd = app.add_subcommand(
        "validate", "check scene invariants and A_yy conditioning");
    add_common(val_cmd, ov_val, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(ov_run);
        if (map_cmd->parsed()) return cmd_fieldmap(ov_map);
        if (val_cmd->parsed()) return cmd_validate(ov_val);
    } catch (const ConfigError& ex) {
        std::fprintf(stderr, "config error: %s\n", ex.what());
        return kExitConfig;
    } catch (const std::invalid_argument& ex) {
        std::fprintf(stderr, "config error: %s\n", ex.what());
        return kExitConfig;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitRuntime;
    }
    return kExitConfig;
}

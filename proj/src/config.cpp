#include "sfanc/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace sfanc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Entry {
    std::string value;
    int line = 0;
    mutable bool used = false;
};

struct Parsed {
    std::string origin;
    std::map<std::string, Entry> kv;  // "section.key"

    [[noreturn]] void fail(const std::string& msg, int line = 0) const {
        std::ostringstream os;
        os << origin;
        if (line > 0) os << ":" << line;
        os << ": " << msg;
        throw ConfigError(os.str());
    }

    const Entry* find(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    double number(const std::string& key, double fallback) const {
        const Entry* e = find(key);
        if (!e) return fallback;
        try {
            std::size_t pos = 0;
            std::string v = e->value;
            if (v == "inf") return std::numeric_limits<double>::infinity();
            const double x = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            fail("invalid number for '" + key + "': " + e->value, e->line);
        }
    }

    long integer(const std::string& key, long fallback) const {
        const Entry* e = find(key);
        if (!e) return fallback;
        try {
            std::size_t pos = 0;
            const long x = std::stol(e->value, &pos);
            if (pos != e->value.size()) throw std::invalid_argument(e->value);
            return x;
        } catch (const std::exception&) {
            fail("invalid integer for '" + key + "': " + e->value, e->line);
        }
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        const Entry* e = find(key);
        return e ? e->value : fallback;
    }
};

Vec2 parse_vec2(const Parsed& p, const std::string& tok, int line) {
    double x, y;
    char close = 0;
    if (std::sscanf(tok.c_str(), " ( %lf , %lf %c", &x, &y, &close) != 3 ||
        close != ')')
        p.fail("expected position '(x, y)', got '" + tok + "'", line);
    return {x, y};
}

std::vector<Vec2> parse_positions(const Parsed& p, const std::string& key,
                                  std::vector<Vec2> fallback) {
    const Entry* e = p.find(key);
    if (!e) return fallback;
    std::vector<Vec2> out;
    std::stringstream ss(e->value);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(parse_vec2(p, tok, e->line));
    }
    if (out.empty()) p.fail("no positions in '" + key + "'", e->line);
    return out;
}

std::vector<double> parse_frequencies(const Parsed& p, const std::string& v,
                                      int line) {
    std::vector<double> out;
    if (v.find(':') != std::string::npos) {
        double lo, hi, step;
        if (std::sscanf(v.c_str(), " %lf : %lf : %lf", &lo, &hi, &step) != 3 ||
            step <= 0)
            p.fail("expected 'lo:hi:step' frequency range, got '" + v + "'",
                   line);
        for (double f = lo; f <= hi + 1e-9 * step; f += step)
            out.push_back(f);
        return out;
    }
    std::stringstream ss(v);
    double f;
    while (ss >> f) out.push_back(f);
    if (!ss.eof() || out.empty())
        p.fail("invalid frequency list: '" + v + "'", line);
    return out;
}

std::string join_positions(const std::vector<Vec2>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += "; ";
        s += "(" + fmt(v[i].x) + ", " + fmt(v[i].y) + ")";
    }
    return s;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
    Parsed p;
    p.origin = origin;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                p.fail("malformed section header: " + line, lineno);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            p.fail("expected 'key = value': " + line, lineno);
        const std::string key = trim(line.substr(0, eq));
        if (key.empty() || section.empty())
            p.fail("key outside a [section]: " + line, lineno);
        p.kv[section + "." + key] = {trim(line.substr(eq + 1)), lineno};
    }

    ExperimentConfig cfg;

    const std::string preset = p.text("scene.preset", "");
    if (preset == "paper") {
        cfg.scene = build_scene_paper();
    } else if (!preset.empty()) {
        p.fail("unknown scene preset: " + preset);
    }

    cfg.scene.sound_speed = p.number("scene.sound_speed", cfg.scene.sound_speed);
    cfg.scene.primary_sources =
        parse_positions(p, "scene.primary_sources", cfg.scene.primary_sources);
    cfg.scene.secondary_sources = parse_positions(p, "scene.secondary_sources",
                                                  cfg.scene.secondary_sources);
    cfg.scene.reference_mics =
        parse_positions(p, "scene.reference_mics", cfg.scene.reference_mics);
    cfg.scene.error_mics =
        parse_positions(p, "scene.error_mics", cfg.scene.error_mics);
    cfg.scene.target_region.center = parse_positions(
        p, "scene.target_center", {cfg.scene.target_region.center})[0];
    cfg.scene.target_region.radius =
        p.number("scene.target_radius", cfg.scene.target_region.radius);

    const std::string scat = p.text(
        "scene.scatterer", cfg.scene.scatterer ? "on" : "off");
    if (scat == "off") {
        cfg.scene.scatterer.reset();
    } else if (scat == "on") {
        Disk d = cfg.scene.scatterer.value_or(Disk{{0.0, 0.0}, 0.15});
        d.center =
            parse_positions(p, "scene.scatterer_center", {d.center})[0];
        d.radius = p.number("scene.scatterer_radius", d.radius);
        cfg.scene.scatterer = d;
    } else {
        p.fail("scene.scatterer must be 'on' or 'off', got '" + scat + "'");
    }

    cfg.kernel.beta = p.number("kernel.beta", cfg.kernel.beta);
    cfg.kernel.dim = static_cast<int>(p.integer("kernel.dim", cfg.kernel.dim));
    const std::string eta = p.text("kernel.eta", "auto");
    if (eta == "auto") {
        cfg.kernel_eta_auto = true;
    } else {
        cfg.kernel_eta_auto = false;
        const Entry* e = p.find("kernel.eta");
        const Vec2 v = parse_vec2(p, eta, e ? e->line : 0);
        cfg.kernel.eta = {v.x, v.y, 0.0};
    }
    const std::string lam = p.text("kernel.lambda", "auto");
    if (lam == "auto") {
        cfg.kernel_lambda_auto = true;
    } else {
        cfg.kernel_lambda_auto = false;
        cfg.kernel.lambda = p.number("kernel.lambda", 0.0);
    }

    cfg.step.mu0 = p.number("control.mu0", cfg.step.mu0);
    cfg.step.epsilon = p.number("control.epsilon", cfg.step.epsilon);
    cfg.step.gamma = p.number("control.gamma", cfg.step.gamma);

    {
        const Entry* e = p.find("run.frequencies");
        if (e) cfg.frequencies = parse_frequencies(p, e->value, e->line);
    }
    cfg.iterations = p.integer("run.iterations", cfg.iterations);
    cfg.snr_db = p.number("run.snr_db", cfg.snr_db);
    cfg.grid_spacing = p.number("run.grid_spacing", cfg.grid_spacing);
    cfg.rng_seed = static_cast<unsigned long long>(
        p.integer("run.seed", static_cast<long>(cfg.rng_seed)));
    cfg.jobs = static_cast<int>(p.integer("run.jobs", cfg.jobs));
    cfg.time_sign = static_cast<int>(p.integer("run.time_sign", cfg.time_sign));
    {
        const Entry* e = p.find("run.algorithms");
        if (e) {
            cfg.algorithms.clear();
            std::stringstream ss(e->value);
            std::string name;
            while (ss >> name) {
                try {
                    cfg.algorithms.push_back(algorithm_from_string(name));
                } catch (const std::exception& ex) {
                    p.fail(ex.what(), e->line);
                }
            }
            if (cfg.algorithms.empty())
                p.fail("empty run.algorithms", e->line);
        }
    }

    for (const auto& [key, entry] : p.kv)
        if (!entry.used) p.fail("unknown key '" + key + "'", entry.line);

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in, path);
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
    out << "[scene]\n";
    out << "sound_speed = " << fmt(cfg.scene.sound_speed) << "\n";
    out << "primary_sources = " << join_positions(cfg.scene.primary_sources)
        << "\n";
    out << "secondary_sources = "
        << join_positions(cfg.scene.secondary_sources) << "\n";
    out << "reference_mics = " << join_positions(cfg.scene.reference_mics)
        << "\n";
    out << "error_mics = " << join_positions(cfg.scene.error_mics) << "\n";
    out << "target_center = ("
        << fmt(cfg.scene.target_region.center.x) << ", "
        << fmt(cfg.scene.target_region.center.y) << ")\n";
    out << "target_radius = " << fmt(cfg.scene.target_region.radius) << "\n";
    if (cfg.scene.scatterer) {
        out << "scatterer = on\n";
        out << "scatterer_center = (" << fmt(cfg.scene.scatterer->center.x)
            << ", " << fmt(cfg.scene.scatterer->center.y) << ")\n";
        out << "scatterer_radius = " << fmt(cfg.scene.scatterer->radius)
            << "\n";
    } else {
        out << "scatterer = off\n";
    }
    out << "\n[kernel]\n";
    out << "beta = " << fmt(cfg.kernel.beta) << "\n";
    if (cfg.kernel_eta_auto)
        out << "eta = auto\n";
    else
        out << "eta = (" << fmt(cfg.kernel.eta[0]) << ", "
            << fmt(cfg.kernel.eta[1]) << ")\n";
    if (cfg.kernel_lambda_auto)
        out << "lambda = auto\n";
    else
        out << "lambda = " << fmt(cfg.kernel.lambda) << "\n";
    out << "dim = " << cfg.kernel.dim << "\n";
    out << "\n[control]\n";
    out << "mu0 = " << fmt(cfg.step.mu0) << "\n";
    out << "epsilon = " << fmt(cfg.step.epsilon) << "\n";
    out << "gamma = " << fmt(cfg.step.gamma) << "\n";
    out << "\n[run]\n";
    out << "frequencies =";
    for (double f : cfg.frequencies) out << " " << fmt(f);
    out << "\n";
    out << "iterations = " << cfg.iterations << "\n";
    out << "snr_db = " << fmt(cfg.snr_db) << "\n";
    out << "algorithms =";
    for (Algorithm a : cfg.algorithms) out << " " << to_string(a);
    out << "\n";
    out << "grid_spacing = " << fmt(cfg.grid_spacing) << "\n";
    out << "seed = " << cfg.rng_seed << "\n";
    out << "jobs = " << cfg.jobs << "\n";
    out << "time_sign = " << cfg.time_sign << "\n";
}

void write_config_file(const std::string& path, const ExperimentConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file: " + path);
    write_config(out, cfg);
}

}  // namespace sfanc

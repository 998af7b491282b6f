#include <cmath>
#include <fstream>
#include <set>

#include "hdvol/error.hpp"
#include "hdvol/harness.hpp"

namespace hdvol::harness {
namespace {

struct NamedKind {
    ExperimentKind kind;
    std::string_view name;
};

constexpr NamedKind kExperiments[] = {
    {ExperimentKind::DetClt, "det-clt"},
    {ExperimentKind::PinnedSimplex, "pinned-simplex"},
    {ExperimentKind::FullSimplex, "full-simplex"},
    {ExperimentKind::Body, "body"},
    {ExperimentKind::LpBody, "lp-body"},
    {ExperimentKind::NormalVector, "normal-vector"},
    {ExperimentKind::HyperplaneDistance, "hyperplane-distance"},
    {ExperimentKind::Selftest, "selftest"},
};

bool is_standardized(ExperimentKind kind) {
    return kind != ExperimentKind::NormalVector && kind != ExperimentKind::HyperplaneDistance;
}

template <typename T>
T get_as(const nlohmann::json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

}  // namespace

ExperimentKind parse_experiment(std::string_view name) {
    for (const auto& e : kExperiments) {
        if (e.name == name) {
            return e.kind;
        }
    }
    throw ConfigError("unknown experiment: " + std::string(name));
}

std::string_view experiment_name(ExperimentKind kind) {
    for (const auto& e : kExperiments) {
        if (e.kind == kind) {
            return e.name;
        }
    }
    return "unknown";
}

void ExperimentConfig::validate() const {
    if (n_list.empty()) {
        throw ConfigError("n_list is empty");
    }
    if (trials == 0) {
        throw ConfigError("trials must be at least 1");
    }
    if (trials >= (std::size_t{1} << 32)) {
        throw ConfigError("trials must be below 2^32");
    }
    for (std::size_t n : n_list) {
        if (n >= (std::size_t{1} << 32)) {
            throw ConfigError("dimension too large: " + std::to_string(n));
        }
        if (is_standardized(experiment) && n < 2) {
            throw ConfigError("standardized experiments need n >= 2, got " + std::to_string(n));
        }
        if (n < 1) {
            throw ConfigError("dimensions must be positive");
        }
    }
    if (experiment == ExperimentKind::LpBody) {
        if (!(lp_p > 0.0) || !std::isfinite(lp_p)) {
            throw ConfigError("lp-body needs finite p > 0");
        }
        if (!(lp_m >= 0.0) || !std::isfinite(lp_m)) {
            throw ConfigError("lp-body needs finite m >= 0");
        }
    }
    if (body.kind == geometry::BodyKind::Custom) {
        throw ConfigError("custom bodies are not available from configuration");
    }
}

void apply_config_json(ExperimentConfig& cfg, const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("config document must be a JSON object");
    }
    static const std::set<std::string> known = {
        "experiment", "n_list",  "trials",  "dist",    "lp",          "body",
        "centering_mode", "master_seed", "threads", "out_csv", "out_summary", "include_timing",
    };
    for (const auto& item : doc.items()) {
        if (known.count(item.key()) == 0) {
            throw ConfigError("unknown config key: " + item.key());
        }
    }
    try {
        if (doc.contains("experiment")) cfg.experiment = parse_experiment(get_as<std::string>(doc, "experiment"));
        if (doc.contains("n_list")) cfg.n_list = get_as<std::vector<std::size_t>>(doc, "n_list");
        if (doc.contains("trials")) cfg.trials = get_as<std::size_t>(doc, "trials");
        if (doc.contains("dist")) cfg.dist = sampling::EntryDistribution::parse(get_as<std::string>(doc, "dist"));
        if (doc.contains("body")) cfg.body = geometry::BodyModel::parse(get_as<std::string>(doc, "body"));
        if (doc.contains("centering_mode")) {
            cfg.centering = geometry::parse_centering(get_as<std::string>(doc, "centering_mode"));
        }
        if (doc.contains("master_seed")) cfg.master_seed = get_as<std::uint64_t>(doc, "master_seed");
        if (doc.contains("threads")) {
            const auto& t = doc.at("threads");
            if (t.is_string() && t.get<std::string>() == "auto") {
                cfg.threads = 0;
            } else {
                cfg.threads = get_as<unsigned>(doc, "threads");
            }
        }
        if (doc.contains("lp")) {
            const auto& lp = doc.at("lp");
            if (!lp.is_object()) {
                throw ConfigError("config key 'lp' must be an object with p and m");
            }
            if (lp.contains("p")) cfg.lp_p = get_as<double>(lp, "p");
            if (lp.contains("m")) cfg.lp_m = get_as<double>(lp, "m");
        }
        if (doc.contains("out_csv")) cfg.out_csv = get_as<std::string>(doc, "out_csv");
        if (doc.contains("out_summary")) cfg.out_summary = get_as<std::string>(doc, "out_summary");
        if (doc.contains("include_timing")) cfg.include_timing = get_as<bool>(doc, "include_timing");
    } catch (const InputError& e) {
        throw ConfigError(e.what());
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    ExperimentConfig cfg;
    apply_config_json(cfg, doc);
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = std::string(experiment_name(cfg.experiment));
    j["n_list"] = cfg.n_list;
    j["trials"] = cfg.trials;
    j["dist"] = cfg.dist.name();
    j["lp"] = {{"p", cfg.lp_p}, {"m", cfg.lp_m}};
    j["body"] = cfg.body.name();
    j["centering_mode"] = std::string(geometry::centering_name(cfg.centering));
    j["master_seed"] = cfg.master_seed;
    return j;
}

}  // namespace hdvol::harness

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hdvol/error.hpp"
#include "hdvol/harness.hpp"

namespace hdvol::harness {
namespace {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        out.push_back(field);
    }
    return out;
}

std::size_t parse_size(const std::string& s) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) {
        throw InputError("bad integer field: " + s);
    }
    return static_cast<std::size_t>(v);
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw InputError("bad numeric field: " + s);
    }
    return v;
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& report, bool include_timing) {
    nlohmann::json doc;
    doc["provenance"] = {
        {"artifact", "hdvol"},
        {"version", std::string(kVersion)},
        {"master_seed", report.config.master_seed},
        {"config", config_to_json(report.config)},
    };
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json j;
        j["n"] = r.n;
        j["trials_requested"] = r.trials_requested;
        j["trials_excluded"] = r.trials_excluded;
        j["sample_size"] = r.trials_requested - r.trials_excluded;
        j["reference"] = r.reference;
        j[r.reference == "half-normal" ? "ks_to_half_normal" : "ks_to_normal"] = optional_number(r.ks);
        j["sample_mean"] = optional_number(r.sample_mean);
        j["sample_variance"] = optional_number(r.sample_variance);
        j["variance_defined"] = r.sample_variance.has_value();
        j["raw_median"] = optional_number(r.raw_median);
        if (include_timing) {
            j["wall_time_seconds"] = r.wall_time_seconds;
        }
        records.push_back(std::move(j));
    }
    doc["records"] = std::move(records);
    if (include_timing) {
        doc["execution"] = {{"threads", report.threads_used}};
    }
    return doc;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& trials) {
    out << "n,trial,raw_statistic,standardized\n";
    for (const auto& t : trials) {
        if (!t.excluded) {
            out << t.n << ',' << t.trial << ',' << format17(t.raw) << ',' << format17(t.standardized) << '\n';
        }
    }
    out << "# excluded,n,trial,reason\n";
    for (const auto& t : trials) {
        if (t.excluded) {
            out << "# excluded," << t.n << ',' << t.trial << ',' << t.reason << '\n';
        }
    }
}

void emit_csv(const ExperimentReport&, const std::vector<TrialRecord>& trials, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open CSV output: " + path);
    }
    write_csv(out, trials);
    out.flush();
    if (!out) {
        throw IoError("failed writing CSV output: " + path);
    }
}

std::vector<TrialRecord> read_csv(std::istream& in) {
    std::vector<TrialRecord> out;
    std::string line;
    if (!std::getline(in, line) || line != "n,trial,raw_statistic,standardized") {
        throw InputError("CSV header missing or malformed");
    }
    constexpr std::string_view excluded_tag = "# excluded,";
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind(excluded_tag, 0) == 0) {
            const auto fields = split_commas(line.substr(excluded_tag.size()));
            if (fields.size() != 3) {
                throw InputError("malformed excluded-trial line: " + line);
            }
            if (fields[0] == "n") {
                continue;
            }
            TrialRecord rec;
            rec.n = parse_size(fields[0]);
            rec.trial = parse_size(fields[1]);
            rec.excluded = true;
            rec.reason = fields[2];
            out.push_back(std::move(rec));
            continue;
        }
        if (line.front() == '#') {
            continue;
        }
        const auto fields = split_commas(line);
        if (fields.size() != 4) {
            throw InputError("malformed CSV row: " + line);
        }
        TrialRecord rec;
        rec.n = parse_size(fields[0]);
        rec.trial = parse_size(fields[1]);
        rec.raw = parse_double(fields[2]);
        rec.standardized = parse_double(fields[3]);
        out.push_back(std::move(rec));
    }
    return out;
}

void write_summary(const ExperimentReport& report, const std::string& path, bool include_timing) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open summary output: " + path);
    }
    out << report_to_json(report, include_timing).dump(2) << '\n';
    out.flush();
    if (!out) {
        throw IoError("failed writing summary output: " + path);
    }
}

}  // namespace hdvol::harness

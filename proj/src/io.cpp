#include "qwre/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qwre/errors.hpp"

namespace qwre {

using nlohmann::json;

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // fold -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

PhaseMeasure measure_from_json(const json& j) {
    if (j.is_number()) return PhaseMeasure::delta(j.get<double>());
    if (!j.is_object() || !j.contains("kind")) {
        throw config_error("environment file: measure must be a number or an object with 'kind'");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "delta") return PhaseMeasure::delta(j.at("value").get<double>());
    if (kind == "uniform") {
        return PhaseMeasure::uniform(j.at("lo").get<double>(), j.at("hi").get<double>());
    }
    if (kind == "two_point") return PhaseMeasure::two_point(j.at("theta").get<double>());
    if (kind == "discrete") {
        return PhaseMeasure::discrete(j.at("values").get<std::vector<double>>(),
                                      j.at("weights").get<std::vector<double>>());
    }
    throw config_error("environment file: unknown measure kind '" + kind + "'");
}

json measure_to_json(const PhaseMeasure& m) {
    switch (m.kind()) {
        case PhaseMeasure::Kind::Delta:
            return {{"kind", "delta"}, {"value", m.value()}};
        case PhaseMeasure::Kind::Uniform:
            return {{"kind", "uniform"}, {"lo", m.lo()}, {"hi", m.hi()}};
        case PhaseMeasure::Kind::TwoPoint:
            return {{"kind", "two_point"}, {"theta", m.theta()}};
        case PhaseMeasure::Kind::Discrete:
            return {{"kind", "discrete"}, {"values", m.values()}, {"weights", m.weights()}};
    }
    throw config_error("environment file: unhandled measure kind");
}

}  // namespace

EnvironmentFile environment_file_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("environment file: invalid JSON: ") + e.what());
    }
    try {
        EnvironmentFile file;
        if (j.contains("default_measure")) {
            file.spec.default_measure = measure_from_json(j.at("default_measure"));
        }
        if (j.contains("sites")) {
            for (const auto& [key, value] : j.at("sites").items()) {
                std::size_t used = 0;
                const int x = std::stoi(key, &used);
                if (used != key.size()) throw config_error("environment file: bad site key");
                file.spec.per_site.emplace(x, measure_from_json(value));
            }
        }
        file.seed = j.value("seed", std::uint64_t{0});
        return file;
    } catch (const json::exception& e) {
        throw config_error(std::string("environment file: bad schema: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw config_error("environment file: site keys must be integers");
    }
}

EnvironmentFile load_environment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("environment file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return environment_file_from_json(buf.str());
}

std::string environment_file_to_json(const EnvironmentFile& file) {
    json j;
    j["default_measure"] = measure_to_json(file.spec.default_measure);
    if (!file.spec.per_site.empty()) {
        json sites = json::object();
        for (const auto& [x, m] : file.spec.per_site) sites[std::to_string(x)] = measure_to_json(m);
        j["sites"] = sites;
    }
    j["seed"] = file.seed;
    return j.dump(2);
}

void emit_distribution_csv(std::ostream& os, const Distribution& dist) {
    os << "position,probability\n";
    for (const auto& [x, p] : dist.mass) {
        os << x << ',' << format_double(p) << '\n';
    }
}

Distribution parse_distribution_csv(std::istream& is) {
    Distribution dist;
    std::string line;
    if (!std::getline(is, line) || line != "position,probability") {
        throw config_error("distribution csv: missing 'position,probability' header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw config_error("distribution csv: malformed row");
        try {
            const int x = std::stoi(line.substr(0, comma));
            dist.mass[x] = std::stod(line.substr(comma + 1));
            dist.time = std::max(dist.time, std::abs(x));
        } catch (const std::exception&) {
            throw config_error("distribution csv: malformed row '" + line + "'");
        }
    }
    return dist;
}

void emit_distribution_json(std::ostream& os, const Distribution& dist) {
    json rows = json::array();
    for (const auto& [x, p] : dist.mass) rows.push_back({{"position", x}, {"probability", p}});
    os << json{{"time", dist.time}, {"rows", rows}}.dump(2) << '\n';
}

void emit_density_csv(std::ostream& os, const LimitDensity& density, int grid_points) {
    if (grid_points < 2) throw config_error("density grid needs at least 2 points");
    const Moments moments = limit_moments(density);
    os << "# mean," << format_double(moments.mean) << '\n';
    os << "# variance," << format_double(moments.variance) << '\n';
    os << "x,density\n";
    const double r = LimitDensity::support_radius();
    for (int i = 0; i < grid_points; ++i) {
        const double x = -r + 2.0 * r * i / (grid_points - 1);
        os << format_double(x) << ',' << format_double(density(x)) << '\n';
    }
}

void emit_density_json(std::ostream& os, const LimitDensity& density, int grid_points) {
    if (grid_points < 2) throw config_error("density grid needs at least 2 points");
    const Moments moments = limit_moments(density);
    json rows = json::array();
    const double r = LimitDensity::support_radius();
    for (int i = 0; i < grid_points; ++i) {
        const double x = -r + 2.0 * r * i / (grid_points - 1);
        rows.push_back({{"x", x}, {"density", density(x)}});
    }
    os << json{{"mean", moments.mean}, {"variance", moments.variance}, {"rows", rows}}.dump(2)
       << '\n';
}

void emit_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
    os << "n,ks,mean,variance\n";
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        os << report.n_values[i] << ',' << format_double(report.ks_distances[i]) << ','
           << format_double(report.empirical_means[i]) << ','
           << format_double(report.empirical_variances[i]) << '\n';
    }
}

void emit_convergence_json(std::ostream& os, const ConvergenceReport& report) {
    json rows = json::array();
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        rows.push_back({{"n", report.n_values[i]},
                        {"ks", report.ks_distances[i]},
                        {"mean", report.empirical_means[i]},
                        {"variance", report.empirical_variances[i]}});
    }
    os << json{{"rows", rows}}.dump(2) << '\n';
}

ChiralityVector parse_qubit(const std::string& text) {
    double parts[4];
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const auto end = i < 3 ? text.find(',', start) : text.size();
        if (end == std::string::npos) {
            throw std::invalid_argument("qubit: expected re_L,im_L,re_R,im_R");
        }
        try {
            parts[i] = std::stod(text.substr(start, end - start));
        } catch (const std::exception&) {
            throw std::invalid_argument("qubit: non-numeric component");
        }
        start = end + 1;
    }
    const ChiralityVector qubit{{parts[0], parts[1]}, {parts[2], parts[3]}};
    if (std::abs(qubit.norm_sq() - 1.0) > 1e-12) {
        throw std::invalid_argument("qubit: components must be normalized");
    }
    return qubit;
}

}  // namespace qwre

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"
#include "qwre/limit.hpp"

namespace qwre {

/// Parsed environment spec file: the product measure plus its sampling seed.
struct EnvironmentFile {
    EnvironmentSpec spec;
    std::uint64_t seed = 0;
};

/// JSON schema (documented in the README): fields "default_measure",
/// optional "sites" (measure objects or bare fixed phases), "seed".
EnvironmentFile environment_file_from_json(const std::string& text);
EnvironmentFile load_environment_file(const std::string& path);
std::string environment_file_to_json(const EnvironmentFile& file);

/// CSV: "position,probability" rows, probabilities at 17 significant digits
/// so a parse of the emitted text reproduces the doubles bit-exactly.
void emit_distribution_csv(std::ostream& os, const Distribution& dist);
Distribution parse_distribution_csv(std::istream& is);
void emit_distribution_json(std::ostream& os, const Distribution& dist);

/// CSV: "# mean,<v>" and "# variance,<v>" comment header, then "x,density"
/// rows on a uniform grid over the closed support.
void emit_density_csv(std::ostream& os, const LimitDensity& density, int grid_points);
void emit_density_json(std::ostream& os, const LimitDensity& density, int grid_points);

/// CSV: "n,ks,mean,variance" rows.
void emit_convergence_csv(std::ostream& os, const ConvergenceReport& report);
void emit_convergence_json(std::ostream& os, const ConvergenceReport& report);

/// "re_L,im_L,re_R,im_R" -> chirality vector; enforces unit norm to 1e-12.
ChiralityVector parse_qubit(const std::string& text);

/// Full-precision decimal form of a double (17 significant digits).
std::string format_double(double v);

}  // namespace qwre

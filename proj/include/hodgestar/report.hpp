#pragma once

#include <string>

namespace hodgestar {

// One executed command: the human table, the structured variant, and the
// verdict the exit code reports. Identical inputs produce identical bytes.
struct Report {
    bool pass = true;
    std::string text;
    std::string json;
};

// check: "all", "double-complement", or "product-complement".
Report cmd_algebra(int dim, const std::string& check, unsigned long seed);

Report cmd_star(const std::string& signature, int orientation);

// formulation: "all", "classical", "minkowski", "premetric", or "metric".
// units: "" (honor the config), "hl", or "gaussian".
Report cmd_maxwell(const std::string& config_path, const std::string& formulation,
                   const std::string& units);

Report cmd_betti(const std::string& mesh_path);

Report cmd_decompose(const std::string& mesh_path, const std::string& cochain_path);

}  // namespace hodgestar

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metacloud {

// Flat text configuration: `key = value` lines, '#' comments. Unknown keys
// are rejected with the offending line; every default is explicit in
// print_config().
struct ExperimentConfig {
    std::string experiment = "standard_te";
    double lambda = 1.0;
    double theta = 1.0;
    int d = 2;
    std::string shape = "disk";     // disk|cube|diamond|clover:<beta>|ellipse:<a>:<b>
    std::uint64_t n = 1'000'000;
    std::vector<std::uint64_t> seeds = {1};
    std::string scaling = "light_exact";  // heavy|light_exact|light_psi
    std::vector<double> eps = {0.05, 0.1, 0.15, 0.2, 0.3};
    int directions = 64;
    int window_rings = 400;
    double mix_mass = 0.4;
    double mix_box = 2.0;
    double mix_gamma = 0.15;       // lighter-correction strength of the mixed generator
    std::string mix_shape = "cube";
    double delta_spectral = 0.05;
    double u_window = 0.1;
    int threads = 0;                // 0: use METACLOUD_THREADS or 1
    std::string out_dir = "out";
    bool svg = true;
    bool dump_cloud = false;

    int resolved_threads() const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string print_config(const ExperimentConfig& cfg);

std::vector<std::string> known_experiments();

}  // namespace metacloud

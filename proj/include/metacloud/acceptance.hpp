#pragma once

#include <string>
#include <vector>

#include "metacloud/homothetic.hpp"
#include "metacloud/meta_map.hpp"
#include "metacloud/perturbations.hpp"
#include "metacloud/sampler.hpp"

namespace metacloud {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    std::string out_dir = "out/selftest";
    int threads = 1;
    std::vector<int> only;  // empty: run all criteria
};

// Runs the acceptance criteria (gates and tolerances pinned in code) and
// writes their reports under out_dir/criterion<N>/. Returns one result per
// executed criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

// 0 when every executed criterion passed, 2 otherwise.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

// Shared builders (also used by the CLI experiments).
StarSetPtr make_shape(const std::string& spec, int d);

struct StandardSetup {
    HomotheticPtr z_model;
    HeavyPtr f0;      // the model's own marginal
    LightPtr g0;
    MetaMap map;      // x -> z
    SamplerPtr meta;  // x-space sampler (z pushed through K^{-1})
};

// Heavy homothetic model with generator (1+r)^{-(lambda+d)} and the given
// shape; light marginals are exponential-power with the given theta.
StandardSetup make_standard_setup(double lambda, double theta, int d, StarSetPtr shape);

}  // namespace metacloud

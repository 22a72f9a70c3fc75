#pragma once

#include <span>
#include <string>

#include "metacloud/rng.hpp"

namespace metacloud {

// A point sampler. All model samplers draw through this interface so clouds
// can be generated in deterministic parallel chunks.
class Sampler {
  public:
    virtual ~Sampler() = default;
    virtual int dim() const = 0;
    virtual void sample(RngStream& rng, std::span<double> out) const = 0;
    virtual std::string id() const = 0;
};

}  // namespace metacloud

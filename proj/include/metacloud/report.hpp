#pragma once

#include <string>
#include <vector>

#include "metacloud/cloud_lab.hpp"
#include "metacloud/partitions.hpp"
#include "metacloud/perturbations.hpp"

namespace metacloud {

// Fixed %.10g formatting; all report emitters produce byte-stable output
// for identical inputs.
std::string format_g10(double v);

std::string csv_onto(const OntoSetReport& rep);                 // eps,outside_frac,min_coverage
std::string csv_coverage_detail(const OntoSetReport& rep);      // cell,coords...,eps,count
std::string csv_intensity(const IntensityReport& rep);          // bin_lo,bin_hi,sector,observed,expected,chi2
std::string csv_tail_ratio(const std::vector<TailRatioRow>& rows);
std::string csv_regularity(const RegularityReport& rep);
std::string csv_high_risk_summary(const UWindowMass& mass, const KsResult& v_fit);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Run manifest: seed, version, wall time. Written next to reports; the wall
// time is informational and deliberately not part of any compared CSV.
void write_manifest(const std::string& path, std::uint64_t seed, double wall_seconds);

extern const char* const kVersion;

}  // namespace metacloud

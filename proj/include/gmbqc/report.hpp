#pragma once

#include <cstdint>
#include <string>

#include "gmbqc/instance_io.hpp"

#include <nlohmann/json.hpp>

namespace gmbqc {

struct ReportOptions {
  uint64_t seed = 0;
  bool canonical = false;  // strip environment-dependent fields
  std::size_t sample_shots = 0;  // 0: skip the sampling section
};

// Full analysis pipeline: constraints -> V -> group -> Xi -> Phi family ->
// Prop.-1 certification -> Delta/W -> proof search -> quasi-probability ->
// N / lambda / H^2. Sections are emitted only where the fixture supplies the
// needed data (state, group, outputs).
nlohmann::ordered_json analyze(const InstanceSpec& spec,
                               const ReportOptions& opts);

std::string render_text(const nlohmann::ordered_json& report);

}  // namespace gmbqc

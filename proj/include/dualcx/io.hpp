#pragma once

#include <json.hpp>

#include <string>

#include "dualcx/arrangement.hpp"
#include "dualcx/blowup.hpp"
#include "dualcx/delta_complex.hpp"
#include "dualcx/group_complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/local_models.hpp"
#include "dualcx/simplicial_complex.hpp"
#include "dualcx/surgery.hpp"

namespace dualcx::io {

using nlohmann::json;

/// {"vertices": [...], "facets": [[...], ...]}, both sorted.
json to_json(const SimplicialComplex& c);
SimplicialComplex simplicial_from_json(const json& j);

/// {"cells": [{"id", "dim", "label"} | {"id", "dim", "faces"}]}.
json to_json(const DeltaComplex& d);
DeltaComplex delta_from_json(const json& j);

bool is_delta_json(const json& j);

enum class Ring { kIntegers, kRationals };

json to_json(const HomologyProfile& h, Ring ring = Ring::kIntegers);
json to_json(const FVector& f);
json to_json(const BlowupTrace& trace);
json to_json(const LocalModel& m);
json to_json(const ResolutionTrace& trace);
json to_json(const StrataChartResult& r);
json to_json(const RoundtripReport& r);
json to_json(const SuperperfectReport& r, const Presentation& p);

std::vector<TwoCycle> cycles_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace dualcx::io

#pragma once

#include <json.hpp>

#include "eulersum/reduction.hpp"

namespace eulersum {

using Json = nlohmann::json;

Json lincomb_to_json(const LinComb& u);
LinComb lincomb_from_json(const Json& j);

Json alpha_to_json(const AlphaMatrix& a);
AlphaMatrix alpha_from_json(const Json& j);
std::string alpha_to_csv(const AlphaMatrix& a);

Json assembled_to_json(const Assembled& a);

// Disk cache for alpha matrices, keyed by weight/depth and a format-version
// tag that is bumped whenever the computation changes.
extern const char* kAlphaCacheVersion;
bool save_alpha_cache(const AlphaMatrix& a, const std::string& cache_dir);
bool load_alpha_cache(int k, int d, const std::string& cache_dir, AlphaMatrix& out);

}  // namespace eulersum

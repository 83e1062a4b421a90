#pragma once

#include <json.hpp>

#include "collatz3k/verifier.hpp"

namespace collatz3k::detail {

nlohmann::json chunk_to_json(const ChunkResult& chunk);

}  // namespace collatz3k::detail

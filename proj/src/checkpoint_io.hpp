#pragma once

#include <cstdint>
#include <string>

#include "cdopt/search.hpp"

// Internal persistence helpers shared by search.cpp and checkpoint.cpp.
namespace cdopt::detail {

bool checkpoint_file_exists(const std::string& path);

// Append the record for one completed chunk and flush.
void checkpoint_append_chunk(const std::string& path, const SearchCheckpoint& ck,
                             std::uint64_t chunk_index);

}

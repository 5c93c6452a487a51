#pragma once

#include <string>

#include "nhf/common.hpp"

namespace nhf {

// Serializer with a fixed number format (%.17g, round-trip exact for double)
// so reports are byte-identical across runs and platforms with IEEE doubles.
// Non-finite numbers serialize as null; JSON has no encoding for them.
std::string dump_deterministic(const json& j, int indent = 1);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nhf

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace syncur {

// Reads a whole UTF-8 text file split into lines; accepts \n and \r\n.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes via a temp file in the same directory plus rename, so an
// interrupted run never leaves a partial file under the final name.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace syncur

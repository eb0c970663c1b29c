#include "core/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "core/error.hpp"

namespace syncur {

namespace fs = std::filesystem;

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read error on " + path.string());
  return lines;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  fs::create_directories(dir, ec);  // best effort; open below reports failure
  fs::path tmp = dir / (path.filename().string() + ".tmp." +
                        std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.string().c_str());
      throw Error(ErrorCode::Io, "write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.string().c_str());
    throw Error(ErrorCode::Io,
                "rename to " + path.string() + " failed: " + ec.message());
  }
}

}  // namespace syncur

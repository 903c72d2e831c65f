#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cqed/errors.hpp"

// Deterministic artifact output. CSV uses '.' decimals, comma separators,
// LF line endings and fixed 9-significant-digit scientific notation, so
// golden files can be compared byte for byte. '#'-prefixed comment lines
// carry provenance (tool id, input digest).

namespace cqed::io {

/// 9 significant digits, scientific.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return std::string(buf);
}

class CsvWriter {
public:
  void comment(const std::string& text) { body_ += "# " + text + "\n"; }

  void header(const std::vector<std::string>& names) { append_row(names); }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (const double v : values) cells.push_back(sci(v));
    append_row(cells);
  }

  void mixed_row(const std::vector<std::string>& cells) { append_row(cells); }

  const std::string& str() const { return body_; }

private:
  void append_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) body_ += ',';
      body_ += cells[i];
    }
    body_ += '\n';
  }

  std::string body_;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
      throw ValidationError("cannot create output directory '" + path.parent_path().string() +
                            "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file '" + path.string() + "'");
  out << content;
  if (!out) throw ValidationError("failed writing output file '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "'");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return content;
}

}  // namespace cqed::io

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "qpb/errors.hpp"

namespace qpb {

/// One line of the append-only journal. Lines are JSON objects with a "type"
/// field; numbers round-trip exactly so replaying a journal reproduces
/// identical state. Logical timestamps are (epoch, seq): the epoch labels the
/// acquisition run, seq orders events within it.
struct JournalLine {
  std::string type;
  std::string raw;  // full JSON text of the line
};

class JournalWriter {
 public:
  /// Opens for append; writes nothing until the first line.
  explicit JournalWriter(const std::filesystem::path& file);
  void write_line(const std::string& json_text);
  void flush();
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::ofstream out_;
};

/// Reads and splits a journal. Throws JournalError on a corrupt or truncated
/// line, naming the last valid entry.
std::vector<JournalLine> read_journal(const std::filesystem::path& file);

}  // namespace qpb

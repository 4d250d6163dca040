#include "qpb/journal.hpp"

#include <json.hpp>

namespace qpb {

using nlohmann::json;

JournalWriter::JournalWriter(const std::filesystem::path& file)
    : file_(file), out_(file, std::ios::app | std::ios::binary) {
  if (!out_) {
    throw JournalError("cannot open journal for writing: " + file.string());
  }
}

void JournalWriter::write_line(const std::string& json_text) {
  out_ << json_text << '\n';
  if (!out_) throw JournalError("journal write failed: " + file_.string());
}

void JournalWriter::flush() { out_.flush(); }

std::vector<JournalLine> read_journal(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw JournalError("cannot open journal: " + file.string());
  std::vector<JournalLine> lines;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty()) continue;
    json doc;
    try {
      doc = json::parse(raw);
      lines.push_back({doc.at("type").get<std::string>(), raw});
    } catch (const json::exception& e) {
      throw JournalError(
          "corrupt journal line " + std::to_string(lineno) + " in " +
          file.string() + " (last valid entry: line " +
          std::to_string(lineno - 1) + "): " + e.what());
    }
  }
  return lines;
}

}  // namespace qpb

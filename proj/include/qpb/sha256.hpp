#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qpb {

/// Plain SHA-256 (FIPS 180-4). Used for topology/journal digests and seed
/// derivation; no external crypto dependency needed for that.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, size_t len);
  void update(const std::string& s) { update(s.data(), s.size()); }
  std::array<uint8_t, 32> finish();

  static std::string hex_digest(const std::string& data);

 private:
  void process_block(const uint8_t* block);
  uint32_t h_[8];
  uint8_t buf_[64];
  size_t buf_len_ = 0;
  uint64_t total_ = 0;
};

std::string to_hex(const std::array<uint8_t, 32>& digest);

}  // namespace qpb

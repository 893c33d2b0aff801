#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rqcs {

// SHAKE256 with the requested output length.
std::vector<uint8_t> shake256(std::span<const uint8_t> input, size_t out_len);

std::string bytes_to_hex(std::span<const uint8_t> bytes);
std::vector<uint8_t> hex_to_bytes(const std::string& hex);  // strict, lowercase/uppercase ok

// Deterministic byte stream: block i is
//   SHAKE256(le64(|seed|) || seed || domain || le64(i), 136 bytes).
// The same (seed, domain) always yields the same stream on every platform.
class RandomStream {
 public:
  RandomStream(std::span<const uint8_t> seed, std::string_view domain);
  RandomStream(const std::string& seed, std::string_view domain);

  void fill(std::span<uint8_t> out);
  uint8_t byte();
  uint64_t u64();
  // Uniform in [0, bound); bound > 0.
  uint64_t below(uint64_t bound);

 private:
  void refill();

  std::vector<uint8_t> prefix_;
  std::vector<uint8_t> buf_;
  size_t pos_ = 0;
  uint64_t block_ = 0;
};

// Child seed for an independent stream: SHAKE256(le64(|master|) || master || label, 32).
std::vector<uint8_t> derive_seed(std::span<const uint8_t> master, std::string_view label);

}  // namespace rqcs

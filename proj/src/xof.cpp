#include "rqcs/xof.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cstring>

namespace rqcs {

namespace {

void le64(uint64_t v, std::vector<uint8_t>& out) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

std::vector<uint8_t> length_prefixed(std::span<const uint8_t> seed,
                                     std::string_view tail) {
  std::vector<uint8_t> in;
  in.reserve(8 + seed.size() + tail.size());
  le64(seed.size(), in);
  in.insert(in.end(), seed.begin(), seed.end());
  in.insert(in.end(), tail.begin(), tail.end());
  return in;
}

}  // namespace

std::vector<uint8_t> shake256(std::span<const uint8_t> input, size_t out_len) {
  std::vector<uint8_t> out(out_len);
  if (out_len == 0) return out;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  const bool ok = ctx && EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, input.data(), input.size()) == 1 &&
                  EVP_DigestFinalXOF(ctx, out.data(), out.size()) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("SHAKE256 failed");
  return out;
}

std::string bytes_to_hex(std::span<const uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::vector<uint8_t> hex_to_bytes(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::vector<uint8_t> out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

RandomStream::RandomStream(std::span<const uint8_t> seed, std::string_view domain)
    : prefix_(length_prefixed(seed, domain)) {}

RandomStream::RandomStream(const std::string& seed, std::string_view domain)
    : RandomStream(std::span<const uint8_t>(
                       reinterpret_cast<const uint8_t*>(seed.data()), seed.size()),
                   domain) {}

void RandomStream::refill() {
  std::vector<uint8_t> in = prefix_;
  le64(block_++, in);
  buf_ = shake256(in, 136);  // one SHAKE256 rate block
  pos_ = 0;
}

void RandomStream::fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buf_.size()) refill();
    const size_t take = std::min(out.size() - done, buf_.size() - pos_);
    std::memcpy(out.data() + done, buf_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
}

uint8_t RandomStream::byte() {
  uint8_t b;
  fill({&b, 1});
  return b;
}

uint64_t RandomStream::u64() {
  uint8_t b[8];
  fill(b);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{b[i]} << (8 * i);
  return v;
}

uint64_t RandomStream::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  if (bound == 1) return 0;
  const int bits = 64 - std::countl_zero(bound - 1);
  const uint64_t mask = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
  for (;;) {
    const uint64_t v = u64() & mask;
    if (v < bound) return v;
  }
}

std::vector<uint8_t> derive_seed(std::span<const uint8_t> master, std::string_view label) {
  return shake256(length_prefixed(master, label), 32);
}

}  // namespace rqcs

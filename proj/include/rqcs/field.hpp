#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqcs {

class Field;
class RandomStream;

struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

// Largest extension degree we support.  Elements are stored in three 64-bit
// words; the modulus needs one extra word for its degree-m bit.
inline constexpr int kMaxFieldDegree = 192;
inline constexpr int kElementWords = 3;
inline constexpr int kModulusWords = 4;

// Element of F_{2^m} in polynomial representation: bit i of the limbs is the
// coefficient of z^i.  Every element carries a pointer to its field; mixing
// elements of different fields throws.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return *field_; }
  const std::array<uint64_t, kElementWords>& limbs() const { return limbs_; }

  bool is_zero() const { return (limbs_[0] | limbs_[1] | limbs_[2]) == 0; }
  bool bit(int i) const { return (limbs_[i >> 6] >> (i & 63)) & 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inv() const;  // throws FieldError on zero
  FieldElement square() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // ceil(m/8) bytes, little-endian bit order (byte 0 bit 0 = coeff of z^0).
  std::vector<uint8_t> to_bytes() const;
  std::string to_hex() const;

 private:
  friend class Field;
  FieldElement(const Field* f, const std::array<uint64_t, kElementWords>& limbs)
      : field_(f), limbs_(limbs) {}

  const Field* field_ = nullptr;
  std::array<uint64_t, kElementWords> limbs_{};
};

// F_{2^m} for 2 <= m <= 192, modulus validated irreducible at construction.
// Fields are interned: Field::get returns a reference that stays valid for
// the life of the process, so FieldElement can hold a plain pointer and
// "same field" is a pointer comparison.
class Field {
 public:
  // Looks up (m, modulus) in the intern table, constructing on first use.
  // modulus is given by the exponents' bit pattern packed little-endian,
  // e.g. z^3 + z + 1 is {0b1011}.  Throws FieldError if the polynomial is
  // not of degree exactly m, lacks a constant term, or is reducible (the
  // message names the smallest witness factor degree).
  static const Field& get(int m, std::span<const uint64_t> modulus);

  // Field with the pinned lowest-weight modulus for m; throws FieldError if
  // m is not in the built-in table.
  static const Field& standard(int m);

  // Parses "m" and "modulus" (hex, little-endian bit order) from one entry
  // of the modulus table format used on disk.
  static const Field& from_hex(int m, const std::string& modulus_hex);

  // Degrees with a pinned modulus, ascending.
  static std::vector<int> standard_degrees();

  int degree() const { return m_; }
  int element_bytes() const { return (m_ + 7) / 8; }
  std::string modulus_hex() const;

  FieldElement zero() const { return FieldElement(this, {}); }
  FieldElement one() const { return FieldElement(this, {1, 0, 0}); }
  // z^i for 0 <= i < m.
  FieldElement monomial(int i) const;
  FieldElement from_limbs(const std::array<uint64_t, kElementWords>& limbs) const;
  // Strict parse: exactly element_bytes() bytes, padding bits above m clear.
  FieldElement from_bytes(std::span<const uint8_t> bytes) const;
  FieldElement from_hex(const std::string& hex) const;
  FieldElement sample(RandomStream& rng) const;

  // Smallest degree of an irreducible factor if f is reducible, 0 if f is
  // irreducible.  f must have degree >= 1 and a constant term.  Exposed so
  // callers can run the same check we apply at construction.
  static int smallest_factor_degree(int m, std::span<const uint64_t> f);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend class FieldElement;
  Field(int m, std::span<const uint64_t> modulus);

  void reduce(std::span<uint64_t> prod) const;  // in place, 2*kElementWords words
  std::array<uint64_t, kElementWords> mul_limbs(
      const std::array<uint64_t, kElementWords>& a,
      const std::array<uint64_t, kElementWords>& b) const;

  int m_;
  std::array<uint64_t, kModulusWords> poly_{};
};

}  // namespace rqcs

#include "rqcs/field.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "rqcs/xof.hpp"

namespace rqcs {

namespace {

// Pinned lowest-weight irreducible modulus per degree: the exponent list of
// the trinomial with minimal middle exponent when one exists, otherwise the
// lexicographically smallest pentanomial.  Covers the test degrees plus the
// three deployed extension degrees.
struct ModulusEntry {
  int m;
  std::array<int, 5> exps;  // descending, -1 padded
};

constexpr ModulusEntry kStandardModuli[] = {
    {2, {2, 1, 0, -1, -1}},
    {3, {3, 1, 0, -1, -1}},
    {4, {4, 1, 0, -1, -1}},
    {5, {5, 2, 0, -1, -1}},
    {6, {6, 1, 0, -1, -1}},
    {8, {8, 4, 3, 1, 0}},
    {10, {10, 3, 0, -1, -1}},
    {12, {12, 3, 0, -1, -1}},
    {16, {16, 12, 3, 1, 0}},
    {20, {20, 3, 0, -1, -1}},
    {89, {89, 38, 0, -1, -1}},
    {121, {121, 18, 0, -1, -1}},
    {139, {139, 8, 5, 3, 0}},
};

int top_bit(std::span<const uint64_t> w) {
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
    if (w[i]) return i * 64 + 63 - std::countl_zero(w[i]);
  return -1;
}

// dst ^= src << shift (bit shift).  dst must cover every *set* bit of the
// shifted value; a zero spill word is skipped rather than written so callers
// can size dst to the actual degree.
void xor_shifted(std::span<uint64_t> dst, std::span<const uint64_t> src, int shift) {
  const int ws = shift / 64, bs = shift % 64;
  for (size_t i = 0; i < src.size(); ++i) {
    if (!src[i]) continue;
    dst[ws + i] ^= src[i] << bs;
    if (bs) {
      const uint64_t hi = src[i] >> (64 - bs);
      if (hi) dst[ws + i + 1] ^= hi;
    }
  }
}

// Arbitrary-length carry-less polynomial helpers used only by the
// irreducibility check, where the operands live modulo f (degree <= 192).
using Poly = std::vector<uint64_t>;

int pdeg(const Poly& p) { return top_bit(p); }

void pxor_shifted(Poly& a, const Poly& b, int shift) {
  const size_t need = (pdeg(b) + shift) / 64 + 1;
  if (a.size() < need) a.resize(need, 0);
  xor_shifted(a, b, shift);
}

Poly pmod(Poly a, const Poly& b) {
  const int db = pdeg(b);
  for (int da = pdeg(a); da >= db; da = pdeg(a)) xor_shifted(a, b, da - db);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly pgcd(Poly a, Poly b) {
  while (pdeg(b) >= 0) {
    a = pmod(std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f) {
  const int da = pdeg(a), db = pdeg(b);
  if (da < 0 || db < 0) return {};
  Poly prod((da + db) / 64 + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t w = a[i];
    while (w) {
      const int k = std::countr_zero(w);
      w &= w - 1;
      pxor_shifted(prod, b, static_cast<int>(i) * 64 + k);
    }
  }
  return pmod(std::move(prod), f);
}

struct FieldKey {
  int m;
  std::array<uint64_t, kModulusWords> poly;
  bool operator<(const FieldKey& o) const {
    if (m != o.m) return m < o.m;
    return poly < o.poly;
  }
};

std::mutex g_intern_mutex;
std::map<FieldKey, const Field*>& intern_map() {
  static std::map<FieldKey, const Field*> map;
  return map;
}
std::vector<std::unique_ptr<Field>>& intern_store() {
  static std::vector<std::unique_ptr<Field>> store;
  return store;
}

}  // namespace

int Field::smallest_factor_degree(int m, std::span<const uint64_t> f) {
  Poly fp(f.begin(), f.end());
  // Distinct-degree sieve: t = z^(2^d) mod f; gcd(t + z, f) picks up every
  // irreducible factor of degree dividing d, so the first hit is minimal.
  Poly t = {2};  // z
  const Poly z = {2};
  for (int d = 1; d <= m / 2; ++d) {
    t = pmulmod(t, t, fp);
    Poly probe = t;
    pxor_shifted(probe, z, 0);
    Poly g = pgcd(probe, fp);
    if (pdeg(g) != 0) return d;  // deg >= 1, or gcd(0, f) = f
  }
  return 0;
}

Field::Field(int m, std::span<const uint64_t> modulus) : m_(m) {
  if (m < 2 || m > kMaxFieldDegree)
    throw FieldError("field degree " + std::to_string(m) + " out of range [2, " +
                     std::to_string(kMaxFieldDegree) + "]");
  if (modulus.size() > kModulusWords)
    throw FieldError("modulus too wide");
  std::copy(modulus.begin(), modulus.end(), poly_.begin());
  if (top_bit(poly_) != m)
    throw FieldError("modulus degree is not " + std::to_string(m));
  if (!(poly_[0] & 1))
    throw FieldError("modulus has no constant term, so it is divisible by z");
  const int d = smallest_factor_degree(m, poly_);
  if (d != 0)
    throw FieldError("modulus for m=" + std::to_string(m) +
                     " is reducible (has a factor of degree " + std::to_string(d) + ")");
}

const Field& Field::get(int m, std::span<const uint64_t> modulus) {
  std::array<uint64_t, kModulusWords> key_poly{};
  if (modulus.size() > kModulusWords) throw FieldError("modulus too wide");
  std::copy(modulus.begin(), modulus.end(), key_poly.begin());
  const FieldKey key{m, key_poly};
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  auto& map = intern_map();
  auto it = map.find(key);
  if (it != map.end()) return *it->second;
  // Field's constructor throws on a bad modulus before anything is interned.
  const Field& f = *intern_store().emplace_back(new Field(m, modulus));
  map.emplace(key, &f);
  return f;
}

const Field& Field::standard(int m) {
  for (const auto& e : kStandardModuli) {
    if (e.m != m) continue;
    std::array<uint64_t, kModulusWords> p{};
    for (int exp : e.exps)
      if (exp >= 0) p[exp >> 6] |= uint64_t{1} << (exp & 63);
    return get(m, p);
  }
  throw FieldError("no pinned modulus for m=" + std::to_string(m) +
                   "; supply one explicitly");
}

std::vector<int> Field::standard_degrees() {
  std::vector<int> out;
  for (const auto& e : kStandardModuli) out.push_back(e.m);
  return out;
}

const Field& Field::from_hex(int m, const std::string& modulus_hex) {
  const std::vector<uint8_t> bytes = hex_to_bytes(modulus_hex);
  if (bytes.size() != static_cast<size_t>(m / 8 + 1))
    throw FieldError("modulus hex for m=" + std::to_string(m) + " must encode " +
                     std::to_string(m / 8 + 1) + " bytes");
  std::array<uint64_t, kModulusWords> p{};
  for (size_t i = 0; i < bytes.size(); ++i)
    p[i >> 3] |= uint64_t{bytes[i]} << ((i & 7) * 8);
  return get(m, p);
}

std::string Field::modulus_hex() const {
  std::vector<uint8_t> bytes(m_ / 8 + 1);
  for (size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<uint8_t>(poly_[i >> 3] >> ((i & 7) * 8));
  return bytes_to_hex(bytes);
}

FieldElement Field::monomial(int i) const {
  if (i < 0 || i >= m_)
    throw FieldError("monomial degree " + std::to_string(i) + " out of range");
  std::array<uint64_t, kElementWords> l{};
  l[i >> 6] = uint64_t{1} << (i & 63);
  return FieldElement(this, l);
}

FieldElement Field::from_limbs(const std::array<uint64_t, kElementWords>& limbs) const {
  std::array<uint64_t, 2 * kElementWords> wide{};
  std::copy(limbs.begin(), limbs.end(), wide.begin());
  reduce(wide);
  std::array<uint64_t, kElementWords> l{};
  std::copy_n(wide.begin(), kElementWords, l.begin());
  return FieldElement(this, l);
}

FieldElement Field::from_bytes(std::span<const uint8_t> bytes) const {
  if (bytes.size() != static_cast<size_t>(element_bytes()))
    throw FieldError("element must be exactly " + std::to_string(element_bytes()) +
                     " bytes for m=" + std::to_string(m_));
  std::array<uint64_t, kElementWords> l{};
  for (size_t i = 0; i < bytes.size(); ++i)
    l[i >> 3] |= uint64_t{bytes[i]} << ((i & 7) * 8);
  if (top_bit(l) >= m_)
    throw FieldError("element encoding has bits at or above degree " +
                     std::to_string(m_));
  return FieldElement(this, l);
}

FieldElement Field::from_hex(const std::string& hex) const {
  return from_bytes(hex_to_bytes(hex));
}

FieldElement Field::sample(RandomStream& rng) const {
  std::array<uint64_t, kElementWords> l{};
  const int words = (m_ + 63) / 64;
  for (int i = 0; i < words; ++i) l[i] = rng.u64();
  if (m_ & 63) l[words - 1] &= (uint64_t{1} << (m_ & 63)) - 1;
  return FieldElement(this, l);
}

void Field::reduce(std::span<uint64_t> prod) const {
  for (int t = top_bit(prod); t >= m_; t = top_bit(prod))
    xor_shifted(prod, poly_, t - m_);
}

std::array<uint64_t, kElementWords> Field::mul_limbs(
    const std::array<uint64_t, kElementWords>& a,
    const std::array<uint64_t, kElementWords>& b) const {
  std::array<uint64_t, 2 * kElementWords> prod{};
  for (int i = 0; i < kElementWords; ++i) {
    uint64_t w = a[i];
    while (w) {
      const int k = std::countr_zero(w);
      w &= w - 1;
      for (int j = 0; j < kElementWords; ++j) {
        if (!b[j]) continue;
        prod[i + j] ^= b[j] << k;
        if (k) prod[i + j + 1] ^= b[j] >> (64 - k);
      }
    }
  }
  reduce(prod);
  std::array<uint64_t, kElementWords> out{};
  std::copy_n(prod.begin(), kElementWords, out.begin());
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r = *this;
  r += o;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (field_ != o.field_) throw FieldError("mixed-field addition");
  for (int i = 0; i < kElementWords; ++i) limbs_[i] ^= o.limbs_[i];
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldError("mixed-field multiplication");
  return FieldElement(field_, field_->mul_limbs(limbs_, o.limbs_));
}

FieldElement FieldElement::square() const { return *this * *this; }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw FieldError("inverse of zero");
  // a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i).
  FieldElement sq = square();
  FieldElement acc = sq;
  for (int i = 2; i < field_->m_; ++i) {
    sq = sq.square();
    acc = acc * sq;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && limbs_ == o.limbs_;
}

std::vector<uint8_t> FieldElement::to_bytes() const {
  const int nb = field_->element_bytes();
  std::vector<uint8_t> out(nb);
  for (int i = 0; i < nb; ++i)
    out[i] = static_cast<uint8_t>(limbs_[i >> 3] >> ((i & 7) * 8));
  return out;
}

std::string FieldElement::to_hex() const { return bytes_to_hex(to_bytes()); }

}  // namespace rqcs

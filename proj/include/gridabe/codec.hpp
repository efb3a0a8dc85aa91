#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gridabe/hash.hpp"

// Byte-level building blocks shared by every serialized artifact.
//
// Artifact layout: 4-byte magic "GABE", u8 format version, u8 backend id,
// u8 artifact kind, u8 zero, then the artifact body. Group elements and
// scalars inside a body are framed as tag byte + u16 little-endian length +
// payload, with tags 0x01 scalar, 0x02 G1, 0x03 G2, 0x04 Gt.

namespace gridabe {

inline constexpr std::uint8_t kFormatVersion = 1;

inline constexpr std::uint8_t kTagScalar = 0x01;
inline constexpr std::uint8_t kTagG1 = 0x02;
inline constexpr std::uint8_t kTagG2 = 0x03;
inline constexpr std::uint8_t kTagGt = 0x04;

enum class ArtifactKind : std::uint8_t {
  kPublicKey = 0x01,
  kMasterKey = 0x02,
  kDecryptionKey = 0x03,
  kCiphertext = 0x04,
  kSemiCiphertext = 0x05,
  kFinishedCiphertext = 0x06,
  kPreDecryptedCiphertext = 0x07,
};

class ByteWriter {
 public:
  void u8(std::uint8_t x) { buf_.push_back(x); }
  void u16(std::uint16_t x) {
    for (int i = 0; i < 2; ++i) buf_.push_back(std::uint8_t(x >> (8 * i)));
  }
  void u32(std::uint32_t x) {
    for (int i = 0; i < 4; ++i) buf_.push_back(std::uint8_t(x >> (8 * i)));
  }
  void u64(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) buf_.push_back(std::uint8_t(x >> (8 * i)));
  }
  void raw(BytesView b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

  void frame(std::uint8_t tag, BytesView payload) {
    u8(tag);
    u16(std::uint16_t(payload.size()));
    raw(payload);
  }

  // u16 length prefix; labels and payload blobs
  void str(std::string_view s) {
    u16(std::uint16_t(s.size()));
    raw(as_bytes(s));
  }
  void blob32(BytesView b) {
    u32(std::uint32_t(b.size()));
    raw(b);
  }

  void header(std::uint8_t backend_id, ArtifactKind kind) {
    raw(as_bytes("GABE"));
    u8(kFormatVersion);
    u8(backend_id);
    u8(std::uint8_t(kind));
    u8(0);
  }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(BytesView in) : in_(in) {}

  std::uint8_t u8() { return take(1) ? in_[pos_ - 1] : 0; }
  std::uint16_t u16() { return std::uint16_t(le(2)); }
  std::uint32_t u32() { return std::uint32_t(le(4)); }
  std::uint64_t u64() { return le(8); }

  BytesView raw(std::size_t n) {
    if (!take(n)) return {};
    return in_.subspan(pos_ - n, n);
  }

  BytesView frame(std::uint8_t expected_tag) {
    std::uint8_t tag = u8();
    std::uint16_t len = u16();
    if (tag != expected_tag) fail_ = true;
    return raw(len);
  }

  std::string str() {
    std::uint16_t len = u16();
    BytesView b = raw(len);
    return {reinterpret_cast<const char*>(b.data()), b.size()};
  }

  Bytes blob32() {
    std::uint32_t len = u32();
    BytesView b = raw(len);
    return {b.begin(), b.end()};
  }

  bool header(std::uint8_t backend_id, ArtifactKind kind) {
    BytesView magic = raw(4);
    if (fail_ || std::string_view(reinterpret_cast<const char*>(magic.data()), 4) != "GABE")
      fail_ = true;
    if (u8() != kFormatVersion) fail_ = true;
    if (u8() != backend_id) fail_ = true;
    if (u8() != std::uint8_t(kind)) fail_ = true;
    u8();
    return !fail_;
  }

  bool ok() const { return !fail_; }
  bool at_end() const { return pos_ == in_.size(); }
  // a parse is sound only if everything was consumed and nothing failed
  bool done() const { return ok() && at_end(); }

 private:
  bool take(std::size_t n) {
    if (fail_ || in_.size() - pos_ < n) {
      fail_ = true;
      return false;
    }
    pos_ += n;
    return true;
  }

  std::uint64_t le(std::size_t n) {
    if (!take(n)) return 0;
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) v |= std::uint64_t(in_[pos_ - n + i]) << (8 * i);
    return v;
  }

  BytesView in_;
  std::size_t pos_ = 0;
  bool fail_ = false;
};

// framed element helpers used by every artifact serializer

template <typename T>
void put_elem(ByteWriter& w, std::uint8_t tag, const T& e) {
  w.frame(tag, e.to_bytes());
}

template <typename T>
std::optional<T> get_elem(ByteReader& r, std::uint8_t tag) {
  BytesView b = r.frame(tag);
  if (!r.ok()) return std::nullopt;
  return T::from_bytes(b);
}

}  // namespace gridabe

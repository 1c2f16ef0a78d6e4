#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "bigramsey/shapes.hpp"

namespace bigramsey {

enum class Family { devlin, sauer, hyper };

std::string to_string(Family family);
/// Throws std::invalid_argument for an unknown family name.
Family parse_family(std::string_view text);

/// Byte string naming an isomorphism class of shapes.
///
/// Layout: one family tag byte ('D', 'S', 'H'), then sections. Each section is
/// a tag byte, a little-endian u32 item count, and items made of little-endian
/// u16 components. Elements are numbered by linear-order rank (per sort for
/// hypergraph shapes), ⪯ is stored as dense levels, and relation tuples are
/// sorted lexicographically.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string to_hex() const;
  /// Throws MalformedInput on odd length or non-hex characters.
  static CanonicalCode from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

/// Each overload validates the family invariants and throws InvariantViolation
/// when they fail.
CanonicalCode canonical_code(const DevlinShape& shape);
CanonicalCode canonical_code(const SauerShape& shape);
CanonicalCode canonical_code(const HyperShape& shape);

/// Same codes without validation, for enumerators that have already
/// established the invariants.
CanonicalCode canonical_code_unchecked(const DevlinShape& shape);
CanonicalCode canonical_code_unchecked(const SauerShape& shape);
CanonicalCode canonical_code_unchecked(const HyperShape& shape);

/// Family tag of a code; throws MalformedInput on an unknown tag.
Family family_of(const CanonicalCode& code);

/// Decoders return the normalized representative (≤ is the identity on
/// indices; for hypergraph shapes V0 = 0..|V0|-1 and V1 follows). They throw
/// MalformedInput on truncated or inconsistent bytes.
DevlinShape decode_devlin(const CanonicalCode& code);
SauerShape decode_sauer(const CanonicalCode& code);
HyperShape decode_hyper(const CanonicalCode& code);

/// Relabel so that ≤ (per sort) is the identity order on indices.
DevlinShape normalized(const DevlinShape& shape);
SauerShape normalized(const SauerShape& shape);
HyperShape normalized(const HyperShape& shape);

}  // namespace bigramsey

template <>
struct std::hash<bigramsey::CanonicalCode> {
  std::size_t operator()(const bigramsey::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

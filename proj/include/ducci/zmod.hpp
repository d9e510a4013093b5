#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ducci/errors.hpp"

namespace ducci {

inline constexpr std::uint32_t kMinModulus = 2;
inline constexpr std::uint32_t kMaxModulus = 0x7fffffff;  // 2^31 - 1
inline constexpr std::uint32_t kMinLength = 2;
inline constexpr std::uint32_t kMaxLength = 1u << 20;

/// A canonical residue, always in [0, modulus).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of Z_m^n. Length and modulus are fixed at construction and all
/// entries are kept canonical in [0, m), so structural equality is value
/// equality. Immutable after construction; safe to share across threads.
class ZmTuple {
 public:
  /// Builds a tuple, reducing every entry into [0, m).
  /// Throws InvalidDimensions outside 2 <= n <= 2^20, 2 <= m <= 2^31-1.
  ZmTuple(std::uint32_t modulus, std::vector<std::uint32_t> entries);

  static ZmTuple zero(std::uint32_t n, std::uint32_t m);

  /// Parses comma-separated decimal entries, e.g. "0,0,0,1". Entries must be
  /// already canonical: values >= m are rejected (ParseError).
  static ZmTuple from_text(std::string_view text, std::uint32_t m);

  std::uint32_t modulus() const { return m_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(entries_.size()); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::uint32_t> entries() const { return entries_; }

  bool is_zero() const;

  /// "0,0,0,1" (no spaces). Inverse of from_text.
  std::string to_text() const;

  /// Fixed-width little-endian byte serialization, 4 bytes per entry.
  /// Bit-exact key for visited-state indexing.
  std::string key() const;

  friend bool operator==(const ZmTuple&, const ZmTuple&) = default;
  friend auto operator<=>(const ZmTuple& a, const ZmTuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::uint32_t m_;
  std::vector<std::uint32_t> entries_;
};

/// One application of the map (x_1,...,x_n) -> (x_1+x_2, ..., x_n+x_1) mod m.
ZmTuple ducci_step(const ZmTuple& u);

/// r applications of ducci_step; r = 0 returns u unchanged.
ZmTuple ducci_iterate(ZmTuple u, std::uint64_t r);

/// x_1 - x_2 + x_3 - ... + x_{n-1} - x_n mod m. Throws OddLength for odd n.
Residue alternating_sum(const ZmTuple& u);

/// (0, 0, ..., 0, 1) in Z_m^n.
ZmTuple basic_tuple(std::uint32_t n, std::uint32_t m);

/// Entrywise sum mod m. Throws ShapeMismatch if n or m differ.
ZmTuple add_tuples(const ZmTuple& u, const ZmTuple& v);

/// Entrywise scaling (lambda * x_i) mod m.
ZmTuple scale_tuple(const ZmTuple& u, std::uint32_t lambda);

namespace detail {

// Allocation-free step for tight iteration loops. out must not alias in.
void step_into(std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
               std::uint32_t m);

}  // namespace detail

}  // namespace ducci

#include "ducci/zmod.hpp"

#include <charconv>
#include <cstring>

namespace ducci {

namespace {

void check_dimensions(std::size_t n, std::uint32_t m) {
  if (n < kMinLength || n > kMaxLength) {
    throw InvalidDimensions("tuple length must be in [2, 2^20], got " +
                            std::to_string(n));
  }
  if (m < kMinModulus || m > kMaxModulus) {
    throw InvalidDimensions("modulus must be in [2, 2^31-1], got " +
                            std::to_string(m));
  }
}

}  // namespace

ZmTuple::ZmTuple(std::uint32_t modulus, std::vector<std::uint32_t> entries)
    : m_(modulus), entries_(std::move(entries)) {
  check_dimensions(entries_.size(), m_);
  for (auto& e : entries_) {
    if (e >= m_) e %= m_;
  }
}

ZmTuple ZmTuple::zero(std::uint32_t n, std::uint32_t m) {
  check_dimensions(n, m);
  return ZmTuple(m, std::vector<std::uint32_t>(n, 0));
}

ZmTuple ZmTuple::from_text(std::string_view text, std::uint32_t m) {
  std::vector<std::uint32_t> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    std::uint64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty()) {
      throw ParseError("bad tuple entry '" + std::string(field) + "'");
    }
    if (value >= m) {
      throw ParseError("entry " + std::to_string(value) +
                       " not canonical for modulus " + std::to_string(m));
    }
    entries.push_back(static_cast<std::uint32_t>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  check_dimensions(entries.size(), m);
  return ZmTuple(m, std::move(entries));
}

bool ZmTuple::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

std::string ZmTuple::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string ZmTuple::key() const {
  std::string out(entries_.size() * 4, '\0');
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    std::uint32_t e = entries_[i];
    out[4 * i + 0] = static_cast<char>(e & 0xff);
    out[4 * i + 1] = static_cast<char>((e >> 8) & 0xff);
    out[4 * i + 2] = static_cast<char>((e >> 16) & 0xff);
    out[4 * i + 3] = static_cast<char>((e >> 24) & 0xff);
  }
  return out;
}

namespace detail {

void step_into(std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
               std::uint32_t m) {
  const std::size_t n = in.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::uint64_t s = std::uint64_t(in[i]) + in[i + 1];
    out[i] = static_cast<std::uint32_t>(s >= m ? s - m : s);
  }
  std::uint64_t wrap = std::uint64_t(in[n - 1]) + in[0];
  out[n - 1] = static_cast<std::uint32_t>(wrap >= m ? wrap - m : wrap);
}

}  // namespace detail

ZmTuple ducci_step(const ZmTuple& u) {
  std::vector<std::uint32_t> out(u.size());
  detail::step_into(u.entries(), out, u.modulus());
  return ZmTuple(u.modulus(), std::move(out));
}

ZmTuple ducci_iterate(ZmTuple u, std::uint64_t r) {
  if (r == 0) return u;
  std::vector<std::uint32_t> cur(u.entries().begin(), u.entries().end());
  std::vector<std::uint32_t> next(cur.size());
  for (std::uint64_t i = 0; i < r; ++i) {
    detail::step_into(cur, next, u.modulus());
    cur.swap(next);
  }
  return ZmTuple(u.modulus(), std::move(cur));
}

Residue alternating_sum(const ZmTuple& u) {
  if (u.size() % 2 != 0) {
    throw OddLength("alternating sum requires even length, got " +
                    std::to_string(u.size()));
  }
  const std::uint32_t m = u.modulus();
  std::uint32_t acc = 0;
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    std::uint64_t term = (i % 2 == 0) ? u[i] : m - u[i];  // m - 0 reduces below
    std::uint64_t s = acc + term;
    acc = static_cast<std::uint32_t>(s >= m ? s - m : s);
  }
  return Residue{acc, m};
}

ZmTuple basic_tuple(std::uint32_t n, std::uint32_t m) {
  check_dimensions(n, m);
  std::vector<std::uint32_t> entries(n, 0);
  entries[n - 1] = 1;
  return ZmTuple(m, std::move(entries));
}

ZmTuple add_tuples(const ZmTuple& u, const ZmTuple& v) {
  if (u.size() != v.size() || u.modulus() != v.modulus()) {
    throw ShapeMismatch("cannot add tuples of shape (n=" +
                        std::to_string(u.size()) + ", m=" +
                        std::to_string(u.modulus()) + ") and (n=" +
                        std::to_string(v.size()) + ", m=" +
                        std::to_string(v.modulus()) + ")");
  }
  const std::uint32_t m = u.modulus();
  std::vector<std::uint32_t> out(u.size());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    std::uint64_t s = std::uint64_t(u[i]) + v[i];
    out[i] = static_cast<std::uint32_t>(s >= m ? s - m : s);
  }
  return ZmTuple(m, std::move(out));
}

ZmTuple scale_tuple(const ZmTuple& u, std::uint32_t lambda) {
  const std::uint32_t m = u.modulus();
  std::vector<std::uint32_t> out(u.size());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((std::uint64_t(u[i]) * lambda) % m);
  }
  return ZmTuple(m, std::move(out));
}

}  // namespace ducci

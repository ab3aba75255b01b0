#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamplighter {

/// Largest modulus supported by the bit-mask representation.
inline constexpr int kMaxModulus = 62;

class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(int lhs, int rhs);
};

class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of group elements a caller is willing to
/// materialize (element lists, distance tables).
struct Budget {
  std::uint64_t max_elements = std::uint64_t{1} << 26;

  void check(int n, std::string_view what) const;
};

/// An element (x, k) of Z_2 wr Z_n: the set x of lit lamps as a bit mask
/// (bit j = lamp j) and the lamplighter position k.
struct GroupElement {
  std::uint64_t lamps = 0;
  std::uint32_t pos = 0;
  std::uint32_t n = 2;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// Canonical order: modulus, then position, then mask.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    return a.lamps <=> b.lamps;
  }
};

enum class Generator { t, ta, t_inv, ta_inv };

inline constexpr Generator kAllGenerators[] = {Generator::t, Generator::ta, Generator::t_inv,
                                              Generator::ta_inv};

void validate_modulus(int n);

/// Builds a validated element; throws on out-of-range position or lamps.
GroupElement make_element(std::uint64_t lamps, int pos, int n);
GroupElement identity(int n);
GroupElement generator_element(Generator s, int n);

inline std::uint64_t lamp_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// {j + s mod n : j in mask}.
inline std::uint64_t shift_lamps(std::uint64_t mask, int s, int n) {
  s %= n;
  if (s < 0) s += n;
  if (s == 0) return mask;
  return ((mask << s) | (mask >> (n - s))) & lamp_mask(n);
}

/// (x, k)(y, l) = (x xor (y + k), k + l).
GroupElement wreath_mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Right multiplication by a generator, without building the generator.
inline GroupElement apply(const GroupElement& g, Generator s) {
  const std::uint32_t n = g.n;
  const std::uint32_t up = g.pos + 1 == n ? 0 : g.pos + 1;
  const std::uint32_t down = g.pos == 0 ? n - 1 : g.pos - 1;
  switch (s) {
    case Generator::t:
      return {g.lamps, up, n};
    case Generator::ta:
      return {g.lamps ^ (std::uint64_t{1} << up), up, n};
    case Generator::t_inv:
      return {g.lamps, down, n};
    case Generator::ta_inv:
      return {g.lamps ^ (std::uint64_t{1} << g.pos), down, n};
  }
  return g;
}

/// Cayley neighbours g*s for s in {t, ta, t^-1, (ta)^-1}; duplicates removed
/// (only possible for n = 2).
std::vector<GroupElement> neighbors(const GroupElement& g);

/// Rotation of the cycle by power * n/3, applied to lamps and position.
GroupElement rotate(const GroupElement& g, int power = 1);

inline std::uint64_t group_order(int n) { return static_cast<std::uint64_t>(n) << n; }

/// Position-major, mask-ascending index in [0, n * 2^n).
inline std::uint64_t element_index(const GroupElement& g) {
  return (static_cast<std::uint64_t>(g.pos) << g.n) | g.lamps;
}

inline GroupElement element_at(std::uint64_t index, int n) {
  return {index & lamp_mask(n), static_cast<std::uint32_t>(index >> n),
          static_cast<std::uint32_t>(n)};
}

/// Every element once, in canonical order.
std::vector<GroupElement> enumerate_group(int n, const Budget& budget = {});

/// `<hexmask>:<pos>`, mask printed little-endian in the bit sense (bit j = lamp j).
std::string to_string(const GroupElement& g);
GroupElement parse_element(std::string_view text, int n);

}  // namespace lamplighter

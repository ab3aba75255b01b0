#include "lamplighter/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace lamplighter {

ModulusMismatch::ModulusMismatch(int lhs, int rhs)
    : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

void Budget::check(int n, std::string_view what) const {
  if (n > 40 || group_order(n) > max_elements) {
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds the element budget of " + std::to_string(max_elements));
  }
}

void validate_modulus(int n) {
  if (n < 2 || n > kMaxModulus) {
    throw InvalidModulus("modulus must lie in [2, " + std::to_string(kMaxModulus) +
                         "], got " + std::to_string(n));
  }
}

GroupElement make_element(std::uint64_t lamps, int pos, int n) {
  validate_modulus(n);
  if (pos < 0 || pos >= n) {
    throw std::out_of_range("lamplighter position " + std::to_string(pos) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  if ((lamps & ~lamp_mask(n)) != 0) {
    throw std::out_of_range("lamp mask has bits at positions >= n");
  }
  return {lamps, static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(n)};
}

GroupElement identity(int n) { return make_element(0, 0, n); }

GroupElement generator_element(Generator s, int n) {
  return apply(identity(n), s);
}

GroupElement wreath_mul(const GroupElement& g, const GroupElement& h) {
  if (g.n != h.n) throw ModulusMismatch(static_cast<int>(g.n), static_cast<int>(h.n));
  const int n = static_cast<int>(g.n);
  return {g.lamps ^ shift_lamps(h.lamps, static_cast<int>(g.pos), n),
          (g.pos + h.pos) % g.n, g.n};
}

GroupElement inverse(const GroupElement& g) {
  const int n = static_cast<int>(g.n);
  return {shift_lamps(g.lamps, -static_cast<int>(g.pos), n), (g.n - g.pos) % g.n, g.n};
}

std::vector<GroupElement> neighbors(const GroupElement& g) {
  std::vector<GroupElement> out;
  out.reserve(4);
  for (Generator s : kAllGenerators) {
    GroupElement h = apply(g, s);
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  }
  return out;
}

GroupElement rotate(const GroupElement& g, int power) {
  const int n = static_cast<int>(g.n);
  if (n % 3 != 0) {
    throw InvalidModulus("rotation by n/3 needs n divisible by 3, got " + std::to_string(n));
  }
  const int shift = ((power % 3 + 3) % 3) * (n / 3);
  return {shift_lamps(g.lamps, shift, n), static_cast<std::uint32_t>((g.pos + shift) % n), g.n};
}

std::vector<GroupElement> enumerate_group(int n, const Budget& budget) {
  validate_modulus(n);
  budget.check(n, "enumerate_group");
  const std::uint64_t order = group_order(n);
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) out.push_back(element_at(i, n));
  return out;
}

std::string to_string(const GroupElement& g) {
  const int width = std::max(2, (static_cast<int>(g.n) + 3) / 4);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*llx", width, static_cast<unsigned long long>(g.lamps));
  return std::string(buf) + ":" + std::to_string(g.pos);
}

GroupElement parse_element(std::string_view text, int n) {
  validate_modulus(n);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::invalid_argument("element must look like <hexmask>:<pos>, got '" +
                                std::string(text) + "'");
  }
  std::uint64_t mask = 0;
  int pos = 0;
  const char* mb = text.data();
  const char* me = text.data() + colon;
  auto [mp, mec] = std::from_chars(mb, me, mask, 16);
  const char* pb = text.data() + colon + 1;
  const char* pe = text.data() + text.size();
  auto [pp, pec] = std::from_chars(pb, pe, pos, 10);
  if (mec != std::errc{} || mp != me || pec != std::errc{} || pp != pe) {
    throw std::invalid_argument("malformed element '" + std::string(text) + "'");
  }
  if (pos < 0 || pos >= n || (mask & ~lamp_mask(n)) != 0) {
    throw std::invalid_argument("element '" + std::string(text) + "' is out of range for n=" +
                                std::to_string(n));
  }
  return make_element(mask, pos, n);
}

}  // namespace lamplighter

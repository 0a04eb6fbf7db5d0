#include "mwr/array/intermediate.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace mwr::array {
namespace {

constexpr std::array<std::pair<Combination, std::string_view>, 6> kNames{{
    {Combination::kCMRS, "CMRS"},
    {Combination::kCMRC, "CMRC"},
    {Combination::kMRC, "MRC"},
    {Combination::kCMS, "CMS"},
    {Combination::kCMC, "CMC"},
    {Combination::kMC, "MC"},
}};

}  // namespace

std::string_view to_string(Combination kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

Combination combination_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n.size() != name.size()) continue;
    bool same = true;
    for (std::size_t c = 0; c < n.size(); ++c) same = same && (n[c] == std::toupper(static_cast<unsigned char>(name[c])));
    if (same) return k;
  }
  throw DomainError("unknown combination kind: " + std::string(name));
}

}  // namespace mwr::array

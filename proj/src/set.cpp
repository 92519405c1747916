#include "orthoschmidt/set.hpp"

#include <array>
#include <utility>

namespace orthoschmidt {

namespace {

constexpr std::array<std::pair<SetType, std::string_view>, 11> kTypeNames{{
    {SetType::PP, "pp"},
    {SetType::PE, "pe"},
    {SetType::EP, "ep"},
    {SetType::EE, "ee"},
    {SetType::PPP, "ppp"},
    {SetType::PPE, "ppe"},
    {SetType::PPPP, "pppp"},
    {SetType::PPEE, "ppee"},
    {SetType::PM, "pm"},
    {SetType::PMEE, "pmee"},
    {SetType::MMEE, "mmee"},
}};

constexpr std::array<std::pair<Variant, std::string_view>, 4> kVariantNames{{
    {Variant::ASide, "a-side"},
    {Variant::BSide, "b-side"},
    {Variant::Diagonal, "diagonal"},
    {Variant::NonDiagonal, "nondiagonal"},
}};

}  // namespace

std::string_view set_type_name(SetType t) {
  for (const auto& [k, name] : kTypeNames)
    if (k == t) return name;
  return "";
}

std::optional<SetType> parse_set_type(std::string_view s) {
  for (const auto& [k, name] : kTypeNames)
    if (name == s) return k;
  return std::nullopt;
}

std::string_view variant_name(Variant v) {
  for (const auto& [k, name] : kVariantNames)
    if (k == v) return name;
  return "";
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (const auto& [k, name] : kVariantNames)
    if (name == s) return k;
  return std::nullopt;
}

std::size_t set_size(SetType t) { return set_type_name(t).size(); }

}  // namespace orthoschmidt

#include "bridgecensus/fraction.hpp"

#include <cctype>

namespace bridgecensus {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view num_part = s;
  std::string_view den_part = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_part = trim(s.substr(0, slash));
    den_part = trim(s.substr(slash + 1));
  }
  if (!is_decimal(num_part) || !is_decimal(den_part))
    fail(ErrorKind::MalformedInput, "cannot parse fraction: '" + std::string(text) + "'");
  return Fraction(Integer(std::string(num_part), 10), Integer(std::string(den_part), 10));
}

}  // namespace bridgecensus

#include <set>

#include "catalog.hpp"

namespace cartan::verify {

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> out;
    catalog::add_kernel_checks(out);
    catalog::add_bracket_checks(out);
    catalog::add_interior_checks(out);
    catalog::add_operator_checks(out);
    std::set<std::string> seen;
    for (const auto& c : out)
      if (!seen.insert(c.id).second) throw std::logic_error("duplicate check id " + c.id);
    return out;
  }();
  return checks;
}

const IdentityCheck* find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace cartan::verify

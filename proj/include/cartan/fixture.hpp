#ifndef CARTAN_FIXTURE_HPP
#define CARTAN_FIXTURE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cartan/manifold.hpp"

namespace cartan {

struct KillingVector {
  std::string name;
  std::vector<RationalFn> components;
};

/// A named chart + coframe, plus the Killing vectors it declares.
struct Fixture {
  std::string name;
  GeometryPtr geometry;
  std::vector<KillingVector> killing_vectors;
  std::string notes;
};

/// Parses the fixture JSON document
///   { "name", "dim", "coords", "eta", "coframe", "killing_vectors", "notes" }
/// Every declared Killing vector is checked with is_killing; a failure is a
/// GeometryError.
Fixture parse_fixture(std::string_view json_text);

/// Built-in fixture by name, else a path to a fixture file.
Fixture load_fixture(const std::string& name_or_path);

/// Names of the fixtures compiled into the library, sorted.
std::vector<std::string> builtin_fixture_names();

}  // namespace cartan

#endif  // CARTAN_FIXTURE_HPP

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace walkerpc {

/// A shipped manifest with a one-line summary of its expected verdict.
struct Fixture {
  std::string name;
  std::string description;
  std::string manifest;
};

const std::vector<Fixture>& corpus();

/// Throws InputError for unknown names.
const Fixture& find_fixture(std::string_view name);

}  // namespace walkerpc

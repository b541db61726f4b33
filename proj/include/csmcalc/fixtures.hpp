#ifndef CSMCALC_FIXTURES_HPP
#define CSMCALC_FIXTURES_HPP

#include <optional>
#include <string_view>
#include <vector>

namespace csmcalc {

/// Bytes of fixtures/<name> as compiled into the library.
std::optional<std::string_view> fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

}  // namespace csmcalc

#endif  // CSMCALC_FIXTURES_HPP

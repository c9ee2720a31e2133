#pragma once

#include <string>

#include "pga/globalization.hpp"
#include "pga/partial_action.hpp"

namespace pga::test {

std::string data_path(const std::string& name);
std::string golden_path(const std::string& name);
std::string read_file(const std::string& path);

/// C₈ acting on {x1..x4}: D_{g²} = {x1,x2,x4}, D_{g⁴} = {x1,x2},
/// D_{g⁶} = {x1,x2,x3}, odd powers empty. Loaded from tests/data.
PartialAction c8_action();
/// The same action on C₄.
PartialAction c4_action();

/// c8_action typed in directly, without the JSON reader.
PartialActionData c8_action_by_hand();

/// The 12-point β table for c8_action, read verbatim from tests/data.
Globalization c8_envelope_fixture(const PartialAction& action);

}  // namespace pga::test

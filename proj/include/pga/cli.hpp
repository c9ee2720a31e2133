#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "pga/globalization.hpp"
#include "pga/orbit_theory.hpp"
#include "pga/partial_action.hpp"

namespace pga::cli {

enum class Format { Text, Json, Tsv };

/// Exit statuses of run_command.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kSizeCap = 3,
};

/// Builds the group and the raw partial action from an input document:
///
///   {"group": {"kind": "cyclic", "order": 8}
///          | {"kind": "cayley", "elements": [...], "table": [[...]]},
///    "set": ["x1", ...],
///    "domains": {"g^2": ["x1", ...], ...},
///    "maps": {"g^2": {"x1": "x2", ...}, ...}}
///
/// Omitted group elements have empty domain and map, except the identity
/// whose omission means D_1 = X and α_1 = id. Throws Error{Schema} with a
/// JSON pointer, or Error{UnresolvedLabel} naming the label.
PartialActionData parse_spec(const nlohmann::json& doc);

/// Reads and parses an input file; Error{Io} when unreadable or not JSON.
PartialActionData parse_spec_file(const std::string& path);

/// Reads a global action in the output schema of `globalize`
/// ({"elements", "embedding", "perms", "orbits"}) against a partial
/// action's group and carrier.
Globalization parse_global_action(const nlohmann::json& doc, const PartialAction& action);
nlohmann::json read_json_file(const std::string& path);

nlohmann::ordered_json global_action_json(const PartialAction& action, const Globalization& glob);

std::string render_report(const std::string& title, const ValidationReport& report,
                          const Group& group, const FiniteSet& carrier, Format format);
std::string render_orbits(const PartialAction& action, Format format);
std::string render_globalization(const PartialAction& action, const Globalization& glob, Format format);
std::string render_burnside(const GlobalAction& action, const BurnsideCount& count, Format format);

struct CommandOptions {
  std::string command;  // validate | orbits | globalize | verify | burnside
  std::string input;
  Format format = Format::Text;
  std::size_t max_size = kDefaultMaxSize;
  std::optional<std::string> global;  // verify: check this file instead of a fresh globalization
};

/// Runs one command; results go to `out`, diagnostics to `err`.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

Format parse_format(const std::string& name);

}  // namespace pga::cli

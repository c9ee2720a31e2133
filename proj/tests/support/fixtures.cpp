#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "pga/cli.hpp"

namespace pga::test {

std::string data_path(const std::string& name) { return std::string(PGA_TEST_DATA_DIR) + "/" + name; }
std::string golden_path(const std::string& name) { return std::string(PGA_TEST_GOLDEN_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PartialAction c8_action() {
  return PartialAction::create(cli::parse_spec_file(data_path("c8_action.json")));
}

PartialAction c4_action() {
  return PartialAction::create(cli::parse_spec_file(data_path("c4_action.json")));
}

PartialActionData c8_action_by_hand() {
  PartialActionData d(build_cyclic_group(8), FiniteSet::numbered(4));
  d.set_identity_defaults();
  // x1..x4 are 0..3; g^k is k.
  d.domains[2] = {0, 1, 3};
  d.domains[4] = {0, 1};
  d.domains[6] = {0, 1, 2};
  d.maps[2] = {{0, 1}, {1, 0}, {2, 3}};
  d.maps[4] = {{0, 0}, {1, 1}};
  d.maps[6] = {{0, 1}, {1, 0}, {3, 2}};
  return d;
}

Globalization c8_envelope_fixture(const PartialAction& action) {
  return cli::parse_global_action(cli::read_json_file(data_path("c8_envelope.json")), action);
}

}  // namespace pga::test

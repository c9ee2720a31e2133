#include "pga/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pga::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::Schema, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, "missing required key \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) schema_error(pointer, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

GroupPtr parse_group(const json& j) {
  if (!j.is_object()) schema_error("/group", "expected an object");
  const std::string kind = as_string(require(j, "kind", "/group"), "/group/kind");
  if (kind == "cyclic") {
    const json& order = require(j, "order", "/group");
    if (!order.is_number_integer() || order.get<long long>() < 0) {
      schema_error("/group/order", "expected a positive integer");
    }
    return build_cyclic_group(order.get<std::size_t>());
  }
  if (kind == "cayley") {
    auto labels = string_list(require(j, "elements", "/group"), "/group/elements");
    const json& table = require(j, "table", "/group");
    if (!table.is_array()) schema_error("/group/table", "expected an array of rows");
    std::vector<std::vector<Index>> rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
      const std::string rp = "/group/table/" + std::to_string(r);
      if (!table[r].is_array()) schema_error(rp, "expected an array of element indices");
      std::vector<Index> row;
      for (std::size_t c = 0; c < table[r].size(); ++c) {
        const json& e = table[r][c];
        if (!e.is_number_integer() || e.get<long long>() < 0) {
          schema_error(rp + "/" + std::to_string(c), "expected a nonnegative integer");
        }
        row.push_back(e.get<Index>());
      }
      rows.push_back(std::move(row));
    }
    return build_group_from_cayley(std::move(labels), rows);
  }
  schema_error("/group/kind", "unknown group kind \"" + kind + "\" (expected \"cyclic\" or \"cayley\")");
}

Index point(const FiniteSet& set, const std::string& label) {
  if (!set.contains(label)) throw Error(ErrorKind::UnresolvedLabel, "unknown point \"" + label + "\"");
  return set.index_of(label);
}

Index element(const Group& group, const std::string& label) { return group.index_of(label); }

}  // namespace

PartialActionData parse_spec(const json& doc) {
  if (!doc.is_object()) schema_error("", "expected a JSON object");
  GroupPtr group = parse_group(require(doc, "group", ""));
  FiniteSet carrier;
  {
    auto labels = string_list(require(doc, "set", ""), "/set");
    try {
      carrier = FiniteSet(std::move(labels));
    } catch (const Error& e) {
      schema_error("/set", e.what());
    }
  }
  PartialActionData data(group, carrier);
  bool identity_domain = false;
  bool identity_map = false;

  if (auto it = doc.find("domains"); it != doc.end()) {
    if (!it->is_object()) schema_error("/domains", "expected an object keyed by group element");
    for (const auto& [key, value] : it->items()) {
      const std::string p = "/domains/" + pointer_token(key);
      const Index g = element(*group, key);
      for (const auto& label : string_list(value, p)) data.domains[g].push_back(point(carrier, label));
      identity_domain |= g == 0;
    }
  }
  if (auto it = doc.find("maps"); it != doc.end()) {
    if (!it->is_object()) schema_error("/maps", "expected an object keyed by group element");
    for (const auto& [key, value] : it->items()) {
      const std::string p = "/maps/" + pointer_token(key);
      const Index g = element(*group, key);
      if (!value.is_object()) schema_error(p, "expected an object mapping source to target");
      for (const auto& [src, dst] : value.items()) {
        const std::string target = as_string(dst, p + "/" + pointer_token(src));
        data.maps[g].emplace_back(point(carrier, src), point(carrier, target));
      }
      identity_map |= g == 0;
    }
  }
  const auto n = static_cast<Index>(carrier.size());
  if (!identity_domain) {
    for (Index x = 0; x < n; ++x) data.domains[0].push_back(x);
  }
  if (!identity_map) {
    for (Index x = 0; x < n; ++x) data.maps[0].emplace_back(x, x);
  }
  return data;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Io, path + ": invalid JSON: " + e.what());
  }
}

PartialActionData parse_spec_file(const std::string& path) { return parse_spec(read_json_file(path)); }

Globalization parse_global_action(const json& doc, const PartialAction& action) {
  if (!doc.is_object()) schema_error("", "expected a JSON object");
  const Group& group = *action.group();
  FiniteSet elements;
  try {
    elements = FiniteSet(string_list(require(doc, "elements", ""), "/elements"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    schema_error("/elements", e.what());
  }
  const std::size_t t_size = elements.size();

  const json& emb = require(doc, "embedding", "");
  if (!emb.is_object()) schema_error("/embedding", "expected an object");
  std::vector<Index> embedding(action.size(), kNone);
  for (const auto& [key, value] : emb.items()) {
    const Index x = point(action.carrier(), key);
    embedding[x] = point(elements, as_string(value, "/embedding/" + pointer_token(key)));
  }
  for (Index x = 0; x < action.size(); ++x) {
    if (embedding[x] == kNone) schema_error("/embedding", "no image for \"" + action.carrier().label(x) + "\"");
  }

  const json& perms_json = require(doc, "perms", "");
  if (!perms_json.is_object()) schema_error("/perms", "expected an object keyed by group element");
  std::vector<std::vector<Index>> perms(group.order());
  for (const auto& [key, value] : perms_json.items()) {
    const std::string p = "/perms/" + pointer_token(key);
    const Index g = element(group, key);
    if (!value.is_object()) schema_error(p, "expected an object mapping point to point");
    std::vector<Index> row(t_size, kNone);
    for (const auto& [src, dst] : value.items()) {
      row[point(elements, src)] = point(elements, as_string(dst, p + "/" + pointer_token(src)));
    }
    for (Index t = 0; t < t_size; ++t) {
      if (row[t] == kNone) schema_error(p, "no image for \"" + elements.label(t) + "\"");
    }
    perms[g] = std::move(row);
  }
  for (Index g = 0; g < group.order(); ++g) {
    if (!perms[g].empty() || t_size == 0) continue;
    if (g != 0) schema_error("/perms", "missing permutation for \"" + group.label(g) + "\"");
    perms[0].resize(t_size);
    for (Index t = 0; t < t_size; ++t) perms[0][t] = t;
  }
  if (t_size == 0) {
    for (auto& row : perms) row.clear();
  }

  std::optional<std::vector<std::vector<Index>>> orbits;
  if (auto it = doc.find("orbits"); it != doc.end()) {
    if (!it->is_array()) schema_error("/orbits", "expected an array of arrays");
    orbits.emplace();
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::vector<Index> orbit;
      for (const auto& label : string_list((*it)[i], "/orbits/" + std::to_string(i))) {
        orbit.push_back(point(elements, label));
      }
      orbits->push_back(std::move(orbit));
    }
  }
  std::vector<std::pair<Index, Index>> witness(t_size, {kNone, kNone});
  return Globalization{GlobalAction(action.group(), std::move(elements), std::move(perms), std::move(orbits)),
                       std::move(embedding), std::move(witness)};
}

namespace {

std::string join(const std::vector<Index>& items, const std::vector<std::string>& labels,
                 const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += labels[items[i]];
  }
  return out;
}

std::string braces(const std::vector<Index>& items, const std::vector<std::string>& labels) {
  return "{" + join(items, labels) + "}";
}

ordered_json label_array(const std::vector<Index>& items, const std::vector<std::string>& labels) {
  ordered_json arr = ordered_json::array();
  for (Index i : items) arr.push_back(labels[i]);
  return arr;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_report(const std::string& title, const ValidationReport& report, const Group& group,
                          const FiniteSet& carrier, Format format) {
  auto g_label = [&](const std::optional<Index>& g) { return g ? group.label(*g) : std::string(); };
  auto x_label = [&](const std::optional<Index>& x) {
    return x && *x < carrier.size() ? carrier.label(*x) : std::string();
  };
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["command"] = title;
      j["passed"] = report.passed();
      j["checks"] = ordered_json::array();
      for (const auto& c : report.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["cases"] = c.cases;
        if (c.witness) {
          ordered_json w;
          if (c.witness->g) w["g"] = g_label(c.witness->g);
          if (c.witness->h) w["h"] = g_label(c.witness->h);
          if (c.witness->x) w["x"] = x_label(c.witness->x);
          w["detail"] = c.witness->detail;
          e["witness"] = std::move(w);
        }
        j["checks"].push_back(std::move(e));
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      os << "check\tstatus\tcases\tg\th\tx\tdetail\n";
      for (const auto& c : report.checks) {
        os << c.name << "\t" << (c.passed ? "pass" : "FAIL") << "\t" << c.cases;
        if (c.witness) {
          os << "\t" << g_label(c.witness->g) << "\t" << g_label(c.witness->h) << "\t"
             << x_label(c.witness->x) << "\t" << c.witness->detail;
        } else {
          os << "\t\t\t\t";
        }
        os << "\n";
      }
      break;
    case Format::Text:
      os << title << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& c : report.checks) {
        os << "  " << pad(c.name, 24) << (c.passed ? "pass" : "FAIL") << "  (" << c.cases << " cases)";
        if (c.witness) {
          os << "\n    witness:";
          if (c.witness->g) os << " g=" << g_label(c.witness->g);
          if (c.witness->h) os << " h=" << g_label(c.witness->h);
          if (c.witness->x) os << " x=" << x_label(c.witness->x);
          os << " " << c.witness->detail;
        }
        os << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_orbits(const PartialAction& action, Format format) {
  const Group& group = *action.group();
  const auto& gl = group.labels();
  const auto& xl = action.carrier().labels();
  const auto transversal = partial_transversal(action);

  struct Row {
    PartialOrbitReport report;
    std::size_t predicted;
  };
  std::vector<Row> rows;
  for (Index s : transversal) rows.push_back(Row{partial_orbit_report(action, s), global_orbit_size(action, s)});

  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["transversal"] = label_array(transversal, xl);
      j["reports"] = ordered_json::array();
      for (const auto& [r, predicted] : rows) {
        ordered_json e;
        e["base"] = xl[r.base];
        e["orbit"] = label_array(r.orbit, xl);
        e["stabilizer"] = label_array(r.stabilizer.members(), gl);
        e["upper"] = label_array(r.upper, gl);
        e["upper_complement"] = label_array(r.upper_complement, gl);
        e["cosets"] = ordered_json::array();
        for (const auto& c : r.cosets) {
          e["cosets"].push_back(ordered_json{{"representative", gl[c.representative]},
                                             {"members", label_array(c.members, gl)}});
        }
        e["predicted_global_orbit_size"] = predicted;
        j["reports"].push_back(std::move(e));
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      os << "base\torbit\tstabilizer\tupper\tupper_complement\tcosets\tpredicted_global_orbit_size\n";
      for (const auto& [r, predicted] : rows) {
        std::string cosets;
        for (std::size_t i = 0; i < r.cosets.size(); ++i) {
          if (i) cosets += " ";
          cosets += braces(r.cosets[i].members, gl);
        }
        os << xl[r.base] << "\t" << join(r.orbit, xl, ",") << "\t" << join(r.stabilizer.members(), gl, ",")
           << "\t" << join(r.upper, gl, ",") << "\t" << join(r.upper_complement, gl, ",") << "\t" << cosets
           << "\t" << predicted << "\n";
      }
      break;
    case Format::Text:
      os << "partial orbits: " << rows.size() << "\n";
      for (const auto& [r, predicted] : rows) {
        os << "[" << xl[r.base] << "]\n";
        os << "  orbit            " << braces(r.orbit, xl) << "\n";
        os << "  stabilizer       " << braces(r.stabilizer.members(), gl) << "\n";
        os << "  G^x              " << braces(r.upper, gl) << "\n";
        os << "  complement       " << braces(r.upper_complement, gl) << "\n";
        os << "  cosets          ";
        for (const auto& c : r.cosets) os << " " << braces(c.members, gl);
        os << "\n";
        os << "  |G^x|/|G_x|      " << r.upper.size() << "/" << r.stabilizer.size() << " = "
           << r.upper.size() / r.stabilizer.size() << "\n";
        os << "  predicted |O_x|  " << r.orbit.size() << " + " << r.upper_complement.size() << "/"
           << r.stabilizer.size() << " = " << predicted << "\n";
      }
      break;
  }
  return os.str();
}

ordered_json global_action_json(const PartialAction& action, const Globalization& glob) {
  const Group& group = *action.group();
  const GlobalAction& beta = glob.action;
  const auto& tl = beta.carrier().labels();
  ordered_json j;
  j["elements"] = tl;
  j["embedding"] = ordered_json::object();
  for (Index x = 0; x < action.size(); ++x) j["embedding"][action.carrier().label(x)] = tl[glob.embedding[x]];
  j["perms"] = ordered_json::object();
  for (Index g = 0; g < group.order(); ++g) {
    ordered_json row = ordered_json::object();
    for (Index t = 0; t < beta.size(); ++t) row[tl[t]] = tl[beta.apply(g, t)];
    j["perms"][group.label(g)] = std::move(row);
  }
  j["orbits"] = ordered_json::array();
  for (const auto& o : beta.orbit_decomposition()) j["orbits"].push_back(label_array(o, tl));
  return j;
}

std::string render_globalization(const PartialAction& action, const Globalization& glob, Format format) {
  const Group& group = *action.group();
  const GlobalAction& beta = glob.action;
  const auto& tl = beta.carrier().labels();
  std::ostringstream os;
  if (format == Format::Json) {
    os << global_action_json(action, glob).dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Tsv) {
    os << "t";
    for (Index g = 0; g < group.order(); ++g) os << "\t" << group.label(g);
    os << "\n";
    for (Index t = 0; t < beta.size(); ++t) {
      os << tl[t];
      for (Index g = 0; g < group.order(); ++g) os << "\t" << tl[beta.apply(g, t)];
      os << "\n";
    }
    return os.str();
  }
  const auto& orbits = beta.orbit_decomposition();
  os << "T: " << beta.size() << " points, " << orbits.size() << " orbits, sizes ";
  for (std::size_t i = 0; i < orbits.size(); ++i) os << (i ? ", " : "") << orbits[i].size();
  os << "\n";
  std::size_t width = 1;
  for (const auto& l : tl) width = std::max(width, l.size());
  for (const auto& l : group.labels()) width = std::max(width, l.size());
  width += 2;
  auto row = [&](const std::string& head, auto&& cell) {
    std::string line = pad(head, width);
    for (Index g = 0; g < group.order(); ++g) line += pad(cell(g), width);
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  };
  row("t", [&](Index g) { return group.label(g); });
  for (Index t = 0; t < beta.size(); ++t) {
    row(tl[t], [&](Index g) { return tl[beta.apply(g, t)]; });
  }
  os << "orbits:";
  for (const auto& o : orbits) os << " " << braces(o, tl);
  os << "\n";
  return os.str();
}

std::string render_burnside(const GlobalAction& action, const BurnsideCount& count, Format format) {
  const Group& group = *action.group();
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["orbits"] = count.orbits;
      j["fixed_point_total"] = count.total;
      j["group_order"] = group.order();
      j["fixed_points"] = ordered_json::object();
      for (Index g = 0; g < group.order(); ++g) j["fixed_points"][group.label(g)] = count.fixed_points[g];
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      os << "g\tfixed_points\n";
      for (Index g = 0; g < group.order(); ++g) os << group.label(g) << "\t" << count.fixed_points[g] << "\n";
      os << "total\t" << count.total << "\n";
      os << "orbits\t" << count.orbits << "\n";
      break;
    case Format::Text:
      os << "k = " << count.orbits << "  (sum |T_g| = " << count.total << ", |G| = " << group.order() << ")\n";
      for (Index g = 0; g < group.order(); ++g) {
        os << "  |T_" << pad(group.label(g) + "|", 8) << count.fixed_points[g] << "\n";
      }
      break;
  }
  return os.str();
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  throw Error(ErrorKind::Argument, "unknown format \"" + name + "\"");
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const PartialActionData data = parse_spec_file(options.input);
    const ValidationReport validation = validate_partial_action(data);
    if (options.command == "validate" || !validation.passed()) {
      out << render_report("validate", validation, *data.group, data.carrier, options.format);
      if (!validation.passed()) {
        err << "error: " << options.input << " is not a partial action\n";
        return kCheckFailed;
      }
      return kOk;
    }
    const PartialAction action = PartialAction::create(data);

    if (options.command == "orbits") {
      out << render_orbits(action, options.format);
      return kOk;
    }
    if (options.command == "globalize") {
      out << render_globalization(action, globalize(action, options.max_size), options.format);
      return kOk;
    }
    if (options.command == "verify") {
      const Globalization glob = options.global
                                     ? parse_global_action(read_json_file(*options.global), action)
                                     : globalize(action, options.max_size);
      const auto report = verify_globalization(action, glob);
      out << render_report("verify", report, *action.group(), action.carrier(), options.format);
      return report.passed() ? kOk : kCheckFailed;
    }
    if (options.command == "burnside") {
      const auto glob = globalize(action, options.max_size);
      out << render_burnside(glob.action, burnside_count(glob.action), options.format);
      return kOk;
    }
    err << "error: unknown command \"" << options.command << "\"\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Resource: return kSizeCap;
      case ErrorKind::Validation:
      case ErrorKind::TheoremViolation:
      case ErrorKind::InvalidGlobalAction: return kCheckFailed;
      default: return kInputError;
    }
  }
}

}  // namespace pga::cli

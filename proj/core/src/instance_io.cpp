#include "wfbench/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "wfbench/errors.hpp"

namespace wfbench {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const ordered_json& field(const ordered_json& doc, const char* name) {
  if (!doc.contains(name)) fail(name, "missing field");
  return doc.at(name);
}

std::string label_at(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a label string");
  return v.get<std::string>();
}

std::vector<PointId> labels_to_points(const ordered_json& arr,
                                      const std::string& name,
                                      const DistanceSpace& space) {
  if (!arr.is_array()) fail(name, "expected an array of labels");
  std::vector<PointId> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    const std::string l = label_at(arr[i], where);
    auto p = space.find(l);
    if (!p) fail(where, "unknown point \"" + l + "\"");
    out.push_back(*p);
  }
  return out;
}

}  // namespace

Instance instance_from_json(const ordered_json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");

  const auto& pts = field(doc, "points");
  if (!pts.is_array() || pts.empty()) fail("points", "expected a non-empty array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back(label_at(pts[i], "points[" + std::to_string(i) + "]"));
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) fail("points[" + std::to_string(i) + "]", "empty label");
    if (!index.emplace(labels[i], i).second) {
      fail("points[" + std::to_string(i) + "]", "duplicate label \"" + labels[i] + "\"");
    }
  }
  const std::size_t n = labels.size();

  const auto& dists = field(doc, "distances");
  if (!dists.is_array()) fail("distances", "expected an array of triples");
  struct Entry {
    ParsedDecimal value;
    std::size_t source;
  };
  std::map<std::pair<std::size_t, std::size_t>, Entry> entries;
  int digits = 0;
  for (std::size_t e = 0; e < dists.size(); ++e) {
    const std::string where = "distances[" + std::to_string(e) + "]";
    const auto& t = dists[e];
    if (!t.is_array() || t.size() != 3) fail(where, "expected [label, label, value]");
    std::size_t ij[2];
    for (int s = 0; s < 2; ++s) {
      const std::string w = where + "[" + std::to_string(s) + "]";
      const std::string l = label_at(t[s], w);
      auto it = index.find(l);
      if (it == index.end()) fail(w, "unknown point \"" + l + "\"");
      ij[s] = it->second;
    }
    if (!t[2].is_string()) fail(where + "[2]", "expected a decimal string");
    ParsedDecimal value;
    try {
      value = parse_decimal(t[2].get<std::string>());
    } catch (const InputError& err) {
      fail(where + "[2]", err.what());
    }
    if (ij[0] == ij[1]) {
      if (value.mantissa != 0) {
        throw StructuralError(where + ": nonzero diagonal entry d(" +
                              labels[ij[0]] + "," + labels[ij[1]] + ")");
      }
      continue;
    }
    const auto key = std::minmax(ij[0], ij[1]);
    auto [it, inserted] = entries.emplace(key, Entry{value, e});
    if (!inserted) {
      const auto& prior = it->second.value;
      const bool same = prior.mantissa * pow10(value.fraction_digits) ==
                        value.mantissa * pow10(prior.fraction_digits);
      const std::string pair = "(" + labels[ij[0]] + "," + labels[ij[1]] + ")";
      if (!same) {
        throw StructuralError(where + ": asymmetric entry for pair " + pair +
                              ", conflicts with distances[" +
                              std::to_string(it->second.source) + "]");
      }
      fail(where, "pair " + pair + " given more than once");
    }
    digits = std::max(digits, value.fraction_digits);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!entries.count({i, j})) {
        fail("distances", "missing pair (" + labels[i] + "," + labels[j] + ")");
      }
    }
  }
  const Cost scale = pow10(digits);
  std::vector<std::vector<Cost>> matrix(n, std::vector<Cost>(n, 0));
  for (const auto& [key, entry] : entries) {
    const Cost v = to_scaled(entry.value, scale);
    matrix[key.first][key.second] = v;
    matrix[key.second][key.first] = v;
  }

  Instance inst{DistanceSpace::from_matrix(labels, matrix, scale), 0, {}, {}};
  const auto& k = field(doc, "k");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 1) {
    fail("k", "expected a positive integer");
  }
  inst.k = k.get<std::size_t>();
  inst.initial = Configuration(labels_to_points(field(doc, "initial"), "initial", inst.space));
  if (inst.initial.size() != inst.k) {
    fail("initial", "has " + std::to_string(inst.initial.size()) +
                        " labels, expected k = " + std::to_string(inst.k));
  }
  inst.requests = labels_to_points(field(doc, "requests"), "requests", inst.space);
  return inst;
}

Instance parse_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& err) {
    throw InputError(std::string("JSON syntax: ") + err.what());
  }
  return instance_from_json(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const StructuralError& err) {
    throw StructuralError(path.string() + ": " + err.what());
  } catch (const InputError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

ordered_json instance_to_json(const Instance& instance) {
  const auto& space = instance.space;
  ordered_json doc;
  doc["points"] = space.labels();
  ordered_json dists = ordered_json::array();
  for (PointId i = 0; i < space.size(); ++i) {
    for (PointId j = i + 1; j < space.size(); ++j) {
      dists.push_back({space.label(i), space.label(j),
                       space.format(space.distance(i, j))});
    }
  }
  doc["distances"] = std::move(dists);
  doc["k"] = instance.k;
  ordered_json init = ordered_json::array();
  for (PointId p : instance.initial.points()) init.push_back(space.label(p));
  doc["initial"] = std::move(init);
  ordered_json reqs = ordered_json::array();
  for (PointId p : instance.requests) reqs.push_back(space.label(p));
  doc["requests"] = std::move(reqs);
  return doc;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out << instance_to_json(instance).dump(2) << "\n";
  if (!out) throw IoError(path.string() + ": write failed");
}

}  // namespace wfbench

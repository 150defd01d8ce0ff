// Copyright 2026 The latkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latkit/json_io.hpp"

#include <map>

#include "latkit/error.hpp"

namespace latkit {

namespace {

[[noreturn]] void Bad(const std::string& path, const std::string& what) {
  Fail(ErrorCode::kParseError, (path.empty() ? std::string("<root>") : path) +
                                   ": " + what);
}

const Json& Field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) Bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t AsSize(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    Bad(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& AsArray(const Json& j, const std::string& path) {
  if (!j.is_array()) Bad(path, "expected an array");
  return j;
}

std::string AsString(const Json& j, const std::string& path) {
  if (!j.is_string()) Bad(path, "expected a string");
  return j.get<std::string>();
}

// Library errors raised while building a value from valid JSON keep their
// code but gain the location.
template <typename F>
auto At(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(e.code(), (path.empty() ? std::string("<root>") : path) + ": " +
                              e.what());
  }
}

}  // namespace

Json ParseJsonText(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorCode::kParseError, std::string(source) + ": byte " +
                                     std::to_string(e.byte) + ": " + e.what());
  }
}

Json LatticeToJson(const FiniteLattice& lattice) {
  Json j;
  j["size"] = lattice.size();
  Json leq = Json::array();
  for (auto [x, y] : lattice.covers()) leq.push_back({x, y});
  j["leq"] = leq;
  j["covers"] = true;
  if (!lattice.labels().empty()) j["labels"] = lattice.labels();
  return j;
}

FiniteLattice LatticeFromJson(const Json& j, const Budgets& budgets,
                              const std::string& path) {
  if (j.is_object() && j.contains("standard")) {
    const auto text = AsString(j["standard"], path + "/standard");
    return At(path, [&] { return StandardLattice(LatticeKind::Parse(text), budgets); });
  }
  const std::size_t size = AsSize(Field(j, "size", path), path + "/size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& arr = AsArray(j["labels"], path + "/labels");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      labels.push_back(AsString(arr[i], path + "/labels/" + std::to_string(i)));
    }
  }
  if (j.contains("covers") && !j["covers"].is_boolean()) {
    Bad(path + "/covers", "expected a boolean");
  }
  std::vector<ElementPair> pairs;
  const auto& leq = AsArray(Field(j, "leq", path), path + "/leq");
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string p = path + "/leq/" + std::to_string(i);
    if (!leq[i].is_array() || leq[i].size() != 2) Bad(p, "expected a pair [i, j]");
    pairs.emplace_back(static_cast<Element>(AsSize(leq[i][0], p + "/0")),
                       static_cast<Element>(AsSize(leq[i][1], p + "/1")));
  }
  // Cover pairs and full order pairs go through the same closure.
  return At(path, [&] { return BuildLattice(size, pairs, labels, budgets); });
}

Element ElementFromJson(const FiniteLattice& lattice, const Json& j,
                        const std::string& path) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (auto x = lattice.find_label(text)) return *x;
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
      const auto v = std::stoull(text);
      if (v < lattice.size()) return static_cast<Element>(v);
    }
    Bad(path, "no element labeled \"" + text + "\"");
  }
  const std::size_t v = AsSize(j, path);
  if (v >= lattice.size()) Bad(path, "element index out of range");
  return static_cast<Element>(v);
}

Json ElementToJson(const FiniteLattice& lattice, Element x) {
  if (lattice.labels().empty()) return x;
  return lattice.label(x);
}

Json EqToJson(const EquivalenceRelation& t) {
  return Json{{"ground", t.ground_size()}, {"classes", t.classes()}};
}

EquivalenceRelation EqFromJson(const Json& j, const std::string& path) {
  const bool has_ground = j.is_object() && j.contains("ground");
  std::size_t ground = has_ground ? AsSize(j["ground"], path + "/ground") : 0;
  if (j.is_object() && j.contains("labels")) {
    const auto& arr = AsArray(j["labels"], path + "/labels");
    if (has_ground && arr.size() != ground) {
      Bad(path + "/labels", "length differs from ground");
    }
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      labels.push_back(static_cast<std::uint32_t>(
          AsSize(arr[i], path + "/labels/" + std::to_string(i))));
    }
    return EquivalenceRelation::FromLabels(labels);
  }
  const auto& arr = AsArray(Field(j, "classes", path), path + "/classes");
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/classes/" + std::to_string(i);
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < AsArray(arr[i], p).size(); ++k) {
      c.push_back(AsSize(arr[i][k], p + "/" + std::to_string(k)));
    }
    if (!has_ground) ground += c.size();
    classes.push_back(std::move(c));
  }
  return At(path, [&] { return EquivalenceRelation::FromClasses(ground, classes); });
}

Json RepToJson(const Representation& rep) {
  Json j;
  j["lattice"] = LatticeToJson(rep.lattice);
  j["ground"] = rep.ground_size;
  Json alpha = Json::object();
  for (Element r = 0; r < rep.lattice.size(); ++r) {
    alpha[rep.lattice.label(r)] = EqToJson(rep.image(r));
  }
  j["alpha"] = alpha;
  if (!rep.decode.empty()) j["decode"] = rep.decode;
  return j;
}

Representation RepFromJson(const Json& j, const Budgets& budgets,
                           const std::string& path) {
  if (j.is_object() && j.contains("builtin")) {
    const auto name = AsString(j["builtin"], path + "/builtin");
    if (name == "pairs_b2") {
      const auto n = AsSize(Field(j, "n", path), path + "/n");
      return At(path, [&] { return PairsB2Rep(n); });
    }
    if (name == "m3_base") return M3BaseRep();
    if (name == "power") {
      auto base = RepFromJson(Field(j, "base", path), budgets, path + "/base");
      const auto m = AsSize(Field(j, "m", path), path + "/m");
      return At(path, [&] { return PowerRep(base, m, budgets); });
    }
    Bad(path + "/builtin", "unknown representation \"" + name + "\"");
  }
  auto lattice = LatticeFromJson(Field(j, "lattice", path), budgets, path + "/lattice");
  const std::size_t ground = AsSize(Field(j, "ground", path), path + "/ground");
  const auto& alpha_j = Field(j, "alpha", path);
  if (!alpha_j.is_object()) Bad(path + "/alpha", "expected an object");
  std::vector<std::optional<EquivalenceRelation>> alpha(lattice.size());
  for (auto it = alpha_j.begin(); it != alpha_j.end(); ++it) {
    const std::string p = path + "/alpha/" + it.key();
    const Element x = ElementFromJson(lattice, Json(it.key()), p);
    if (alpha[x]) Bad(p, "element given twice");
    alpha[x] = EqFromJson(it.value(), p);
  }
  std::vector<EquivalenceRelation> images;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (!alpha[x]) Bad(path + "/alpha", "no image for element " + lattice.label(x));
    images.push_back(*alpha[x]);
  }
  std::vector<std::string> decode;
  if (j.contains("decode")) {
    const auto& arr = AsArray(j["decode"], path + "/decode");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      decode.push_back(AsString(arr[i], path + "/decode/" + std::to_string(i)));
    }
  }
  return At(path, [&] {
    return MakeRepresentation(std::move(lattice), ground, std::move(images),
                              std::move(decode));
  });
}

std::vector<Representation> FamilyFromJson(const Json& j, const Budgets& budgets) {
  const Json& arr = j.is_object() ? Field(j, "family", "") : j;
  AsArray(arr, "/family");
  std::vector<Representation> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(RepFromJson(arr[i], budgets, "/family/" + std::to_string(i)));
  }
  return out;
}

Json AlgebraToJson(const FiniteAlgebra& algebra) {
  Json ops = Json::array();
  for (const auto& op : algebra.ops()) {
    ops.push_back(Json{{"arity", op.arity}, {"table", op.table}});
  }
  return Json{{"size", algebra.carrier_size()}, {"ops", ops}};
}

FiniteAlgebra AlgebraFromJson(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("builtin")) {
    const auto name = AsString(j["builtin"], path + "/builtin");
    if (name == "cyclic") {
      const auto n = AsSize(Field(j, "n", path), path + "/n");
      return At(path, [&] { return CyclicGroup(n); });
    }
    if (name == "klein") return KleinGroup();
    Bad(path + "/builtin", "unknown algebra \"" + name + "\"");
  }
  const std::size_t size = AsSize(Field(j, "size", path), path + "/size");
  const auto& arr = AsArray(Field(j, "ops", path), path + "/ops");
  std::vector<Operation> ops;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/ops/" + std::to_string(i);
    Operation op;
    op.arity = AsSize(Field(arr[i], "arity", p), p + "/arity");
    const auto& table = AsArray(Field(arr[i], "table", p), p + "/table");
    for (std::size_t k = 0; k < table.size(); ++k) {
      op.table.push_back(static_cast<std::uint32_t>(
          AsSize(table[k], p + "/table/" + std::to_string(k))));
    }
    ops.push_back(std::move(op));
  }
  return At(path, [&] { return FiniteAlgebra::Make(size, std::move(ops)); });
}

Json ElatticeToJson(const EquivalencedLattice& el) {
  Json j = LatticeToJson(el.lattice);
  Json e = Json::array();
  std::map<std::uint32_t, Element> first;
  for (Element x = 0; x < el.lattice.size(); ++x) {
    auto [it, fresh] = first.try_emplace(el.e.class_of(x), x);
    if (!fresh) e.push_back({it->second, x});
  }
  j["E"] = e;
  return j;
}

EquivalencedLattice ElatticeFromJson(const Json& j, const Budgets& budgets) {
  auto lattice = LatticeFromJson(j, budgets);
  std::vector<ElementPair> pairs;
  if (j.contains("E")) {
    const auto& arr = AsArray(j["E"], "/E");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "/E/" + std::to_string(i);
      if (!arr[i].is_array() || arr[i].size() != 2) Bad(p, "expected a pair");
      pairs.emplace_back(ElementFromJson(lattice, arr[i][0], p + "/0"),
                         ElementFromJson(lattice, arr[i][1], p + "/1"));
    }
  }
  return EquivalencedLattice::FromPairs(std::move(lattice), pairs);
}

Json PairFunctionToJson(const PairFunction& f) {
  Json j{{"n", f.n}};
  if (f.values) {
    j["values"] = *f.values;
  } else {
    j["kernel"] = EqToJson(f.kernel);
  }
  return j;
}

PairFunction PairFunctionFromJson(const Json& j) {
  const std::size_t n = AsSize(Field(j, "n", ""), "/n");
  if (j.contains("kernel")) {
    auto kernel = EqFromJson(j["kernel"], "/kernel");
    return At("", [&] { return PairFunction::FromKernel(n, std::move(kernel)); });
  }
  const auto& arr = AsArray(Field(j, "values", ""), "/values");
  std::vector<std::int64_t> values;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_integer()) {
      Bad("/values/" + std::to_string(i), "expected an integer");
    }
    values.push_back(arr[i].get<std::int64_t>());
  }
  return At("", [&] { return PairFunction::FromValues(n, std::move(values)); });
}

Json RankRowToJson(const RankedLattice& ranked, bool blass, bool gaifman) {
  const auto& l = ranked.lattice();
  Json rankset = Json::array();
  for (auto x : ranked.rankset()) rankset.push_back(ElementToJson(l, x));
  return Json{{"rho", ranked.rho()},
              {"rankset", rankset},
              {"blass", blass},
              {"gaifman", gaifman},
              {"flags", RankFlags(ranked)}};
}

Json CertificateToJson(const CppCertificate& root, const Representation& rep) {
  // Shared subtrees are written once; later occurrences become {"ref": id}.
  std::map<const CppCertificate*, std::size_t> ids;
  auto point_names = [&](const std::vector<std::size_t>& points) {
    Json out = Json::array();
    for (auto p : points) {
      if (rep.decode.empty()) {
        out.push_back(p);
      } else {
        out.push_back(rep.decode[p]);
      }
    }
    return out;
  };
  auto emit = [&](auto&& self, const CppCertificate& node) -> Json {
    if (auto it = ids.find(&node); it != ids.end()) return Json{{"ref", it->second}};
    const std::size_t id = ids.size();
    ids.emplace(&node, id);
    Json j{{"id", id},
           {"depth", node.depth},
           {"points", point_names(node.points)},
           {"holds", node.holds}};
    if (node.two_class_element) {
      j["two_class_element"] = ElementToJson(rep.lattice, *node.two_class_element);
    }
    if (node.failing_theta) j["failing_theta"] = EqToJson(*node.failing_theta);
    if (!node.choices.empty()) {
      Json choices = Json::array();
      for (const auto& c : node.choices) {
        choices.push_back(Json{{"theta", EqToJson(c.theta)},
                               {"subset", point_names(c.subset)},
                               {"canonical_element",
                                ElementToJson(rep.lattice, c.canonical_element)},
                               {"child", self(self, *c.child)}});
      }
      j["choices"] = choices;
    }
    return j;
  };
  return emit(emit, root);
}

}  // namespace latkit

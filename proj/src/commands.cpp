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

#include "latkit/commands.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "latkit/dot.hpp"
#include "latkit/error.hpp"

namespace latkit {

namespace {

struct Context {
  const Json& request;
  Budgets budgets;
  std::map<std::string, Json> parsed;
  Json budget_flags = Json::array();

  const Json& options() const {
    static const Json empty = Json::object();
    auto it = request.find("options");
    return it == request.end() ? empty : *it;
  }

  const Json& Input(const std::string& role) {
    if (auto it = parsed.find(role); it != parsed.end()) return it->second;
    const auto& inputs = request.at("inputs");
    auto it = inputs.find(role);
    if (it == inputs.end()) {
      Fail(ErrorCode::kInvalidParameter, "missing input: " + role);
    }
    const std::string name = it->value("name", role);
    const std::string text = it->at("text").get<std::string>();
    return parsed.emplace(role, ParseJsonText(text, name)).first->second;
  }

  bool HasInput(const std::string& role) const {
    auto it = request.find("inputs");
    return it != request.end() && it->contains(role);
  }

  bool Flag(const char* key, bool fallback = false) const {
    const auto& o = options();
    if (!o.contains(key)) return fallback;
    if (!o[key].is_boolean()) {
      Fail(ErrorCode::kParseError, std::string("option ") + key + ": expected a boolean");
    }
    return o[key].get<bool>();
  }

  std::size_t Size(const char* key, std::size_t fallback) const {
    const auto& o = options();
    if (!o.contains(key) || o[key].is_null()) return fallback;
    if (!o[key].is_number_integer() || o[key].get<std::int64_t>() < 0) {
      Fail(ErrorCode::kParseError,
           std::string("option ") + key + ": expected a non-negative integer");
    }
    return o[key].get<std::size_t>();
  }
};

Json Labels(const FiniteLattice& l, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(ElementToJson(l, x));
  return out;
}

Json EmbeddingJson(const FiniteLattice& pattern, const FiniteLattice& host,
                   const LatticeEmbedding& e) {
  Json out = Json::object();
  for (Element x = 0; x < e.map.size(); ++x) {
    out[pattern.label(x)] = ElementToJson(host, e.map[x]);
  }
  return out;
}

Verdict FromBool(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }

CommandResult Analyze(Context& ctx) {
  const auto l = LatticeFromJson(ctx.Input("lattice"), ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  res["size"] = l.size();
  res["lattice"] = LatticeToJson(l);
  res["axiom_violations"] = ValidateLatticeAxioms(l);
  const auto forb = IsDistributive(l, ctx.budgets);
  const auto law = DistributiveLawViolation(l);
  const auto birk = BirkhoffOracle(l, ctx.budgets);
  Json f{{"distributive", forb.distributive}};
  if (!forb.distributive) {
    const auto pattern = forb.pattern == "m3" ? MLattice(3) : Pentagon();
    f["pattern"] = forb.pattern;
    f["witness"] = EmbeddingJson(pattern, l, *forb.witness);
  }
  res["forbidden_sublattice"] = f;
  Json d{{"distributive", !law.has_value()}};
  if (law) d["violation"] = Labels(l, *law);
  res["distributive_law"] = d;
  res["birkhoff"] = Json{{"distributive", birk.distributive},
                         {"join_irreducibles", Labels(l, birk.join_irreducibles)},
                         {"down_set_count", birk.down_set_count}};
  Json copies = Json::object();
  const std::pair<const char*, FiniteLattice> patterns[] = {{"m3", MLattice(3)},
                                                           {"pentagon", Pentagon()}};
  for (const auto& [name, pattern] : patterns) {
    auto e = FindSublatticeCopy(l, pattern, ctx.budgets);
    copies[name] = e ? EmbeddingJson(pattern, l, *e) : Json(nullptr);
  }
  res["sublattice_witnesses"] = copies;
  const bool agree = forb.distributive == !law.has_value() &&
                     forb.distributive == birk.distributive;
  res["methods_agree"] = agree;
  r.report["summary"] = Json{{"distributive", forb.distributive}};
  r.verdict = FromBool(forb.distributive);
  return r;
}

CommandResult Ranks(Context& ctx) {
  const auto l = LatticeFromJson(ctx.Input("lattice"), ctx.budgets);
  RankRequirements req{ctx.Flag("blass"), ctx.Flag("gaifman")};
  const auto ranks = EnumerateRanks(l, req, ctx.budgets);
  CommandResult r;
  Json rows = Json::array();
  std::vector<std::vector<Element>> ranksets;
  for (const auto& rk : ranks) {
    rows.push_back(RankRowToJson(rk, CheckBlass(rk).holds, CheckGaifman(rk).holds));
    auto rs = rk.rankset();
    if (std::find(ranksets.begin(), ranksets.end(), rs) == ranksets.end()) {
      ranksets.push_back(rs);
    }
  }
  Json distinct = Json::array();
  for (const auto& rs : ranksets) distinct.push_back(Labels(l, rs));
  Json& res = r.report["results"];
  res["require"] = Json{{"blass", req.blass}, {"gaifman", req.gaifman}};
  res["count"] = ranks.size();
  res["ranksets"] = distinct;
  res["rows"] = rows;
  r.report["summary"] = Json{{"count", ranks.size()}};
  r.verdict = FromBool(!ranks.empty());
  return r;
}

CommandResult RepVerify(Context& ctx) {
  const auto rep = RepFromJson(ctx.Input("rep"), ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  const auto pseudo = VerifyPseudoRep(rep);
  Json violations = Json::array();
  for (const auto& v : pseudo.violations) {
    Json j{{"law", v.law}};
    if (v.pair) j["pair"] = Labels(rep.lattice, {v.pair->first, v.pair->second});
    violations.push_back(j);
  }
  const auto inj = IsRepresentation(rep);
  const auto zero = IsZeroCpp(rep);
  res["ground"] = rep.ground_size;
  res["degenerate"] = rep.degenerate();
  res["pseudo_representation"] = pseudo.valid();
  res["violations"] = violations;
  res["injective"] = inj.injective;
  if (inj.witness) {
    res["injectivity_witness"] =
        Labels(rep.lattice, {inj.witness->first, inj.witness->second});
  }
  Json classes = Json::object();
  for (Element x = 0; x < rep.lattice.size(); ++x) {
    classes[rep.lattice.label(x)] = rep.image(x).num_classes();
  }
  res["class_counts"] = classes;
  res["zero_cpp"] = zero.holds;
  if (zero.witness) res["two_class_element"] = ElementToJson(rep.lattice, *zero.witness);
  const bool ok = pseudo.valid() && inj.injective;
  r.report["summary"] = Json{{"representation", ok}};
  r.verdict = FromBool(ok);
  return r;
}

CommandResult RepCpp(Context& ctx) {
  const auto rep = RepFromJson(ctx.Input("rep"), ctx.budgets);
  const std::size_t depth = ctx.Size("depth", 0);
  const auto cert = IsNCpp(rep, depth, ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  res["depth"] = depth;
  res["ground"] = rep.ground_size;
  res["holds"] = cert->holds;
  if (cert->two_class_element) {
    res["witness_element"] = ElementToJson(rep.lattice, *cert->two_class_element);
  }
  if (cert->failing_theta) res["failing_theta"] = EqToJson(*cert->failing_theta);
  if (ctx.Flag("certificate")) res["certificate"] = CertificateToJson(*cert, rep);
  r.report["summary"] = Json{{"cpp", cert->holds}};
  r.verdict = FromBool(cert->holds);
  return r;
}

CommandResult RepRanked(Context& ctx) {
  const auto rep = RepFromJson(ctx.Input("rep"), ctx.budgets);
  const auto& opts = ctx.options();
  if (!opts.contains("rho") || !opts["rho"].is_array()) {
    Fail(ErrorCode::kInvalidParameter, "rep ranked needs a rho array");
  }
  RankMap rho;
  for (std::size_t i = 0; i < opts["rho"].size(); ++i) {
    rho.push_back(ElementFromJson(rep.lattice, opts["rho"][i],
                                  "/options/rho/" + std::to_string(i)));
  }
  const ThresholdRankContext rc(ctx.Size("bound", 1));
  const auto v = CheckRankedRep(rep, rho, rc);
  CommandResult r;
  Json& res = r.report["results"];
  res["bound"] = rc.bound();
  res["rho"] = Labels(rep.lattice, rho);
  res["holds"] = v.holds;
  if (v.violation) {
    res["violation"] = Json{
        {"r", ElementToJson(rep.lattice, v.violation->first)},
        {"s", ElementToJson(rep.lattice, v.violation->second)},
        {"s_below_rank_of_r", v.rank_says_bounded},
        {"max_split", v.max_split}};
  }
  r.report["summary"] = Json{{"ranked", v.holds}};
  r.verdict = FromBool(v.holds);
  return r;
}

CommandResult RepFamily(Context& ctx) {
  const auto family = FamilyFromJson(ctx.Input("family"), ctx.budgets);
  const auto v = FamilyClosureCheck(family, ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  res["members"] = family.size();
  res["holds"] = v.holds;
  if (!v.holds) {
    res["failing_member"] = *v.failing_member;
    res["reason"] = v.reason;
    if (v.failing_theta) res["failing_theta"] = EqToJson(*v.failing_theta);
  } else {
    Json ws = Json::array();
    for (const auto& w : v.witnesses) {
      ws.push_back(Json{{"member", w.member},
                        {"theta", EqToJson(w.theta)},
                        {"subset", w.subset},
                        {"matched_member", w.matched_member},
                        {"canonical_element",
                         ElementToJson(family[w.member].lattice, w.canonical_element)}});
    }
    res["witnesses"] = ws;
  }
  r.report["summary"] = Json{{"closed", v.holds}};
  r.verdict = FromBool(v.holds);
  return r;
}

Json FormsJson(const CanonicalFormResult& f) {
  Json forms = Json::array();
  for (auto form : f.forms) forms.push_back(std::string(CanonicalFormName(form)));
  return forms;
}

CommandResult Crt2(Context& ctx) {
  CommandResult r;
  Json& res = r.report["results"];
  const std::size_t k = ctx.Size("k", 3);
  if (ctx.HasInput("function")) {
    const auto f = PairFunctionFromJson(ctx.Input("function"));
    const auto found = FindCanonicalSubset(f, k, ctx.budgets);
    res["n"] = f.n;
    res["k"] = k;
    res["found"] = found.has_value();
    if (found) {
      res["subset"] = found->subset;
      res["forms"] = FormsJson(found->result);
      res["form"] = std::string(CanonicalFormName(*found->result.primary()));
    }
    r.report["summary"] = Json{{"canonical_subset", found.has_value()}};
    r.verdict = FromBool(found.has_value());
    return r;
  }
  const std::size_t n = ctx.Size("n", 0);
  const auto survey = RunCrt2Survey(n, k, ctx.budgets);
  res["n"] = n;
  res["k"] = k;
  res["kernels"] = survey.kernels;
  res["admitting"] = survey.admitting;
  res["failing"] = survey.failing;
  Json failing = Json::array();
  for (auto id : survey.failing_ids) {
    failing.push_back(Json{{"kernel_id", id},
                           {"kernel", EqText(survey.records[id].kernel)}});
  }
  res["failing_kernels"] = failing;
  r.artifact = Crt2Csv(survey);
  r.artifact_type = "text/csv";
  r.report["summary"] = Json{{"all_admit", survey.failing == 0}};
  r.verdict = FromBool(survey.failing == 0);
  return r;
}

Json CongruencesJson(const CongruenceLattice& cg) {
  Json members = Json::array();
  for (const auto& m : cg.members) members.push_back(EqToJson(m));
  return Json{{"size", cg.members.size()},
              {"lattice", LatticeToJson(cg.lattice)},
              {"members", members},
              {"join_repairs", cg.join_repairs}};
}

CommandResult AlgCg(Context& ctx) {
  const auto a = AlgebraFromJson(ctx.Input("algebra"));
  const auto cg = ComputeCongruenceLattice(a, ctx.budgets);
  CommandResult r;
  r.report["results"] = CongruencesJson(cg);
  r.report["summary"] = Json{{"congruences", cg.members.size()}};
  return r;
}

CommandResult AlgCheck(Context& ctx) {
  const auto a = AlgebraFromJson(ctx.Input("algebra"));
  CommandResult r;
  Json& res = r.report["results"];
  if (ctx.HasInput("theta")) {
    const auto theta = EqFromJson(ctx.Input("theta"));
    const auto v = IsCongruence(theta, a);
    res["congruence"] = v.holds;
    if (v.witness) {
      res["witness"] = Json{{"op", v.witness->op}, {"a", v.witness->a}, {"b", v.witness->b}};
    }
    r.report["summary"] = Json{{"congruence", v.holds}};
    r.verdict = FromBool(v.holds);
    return r;
  }
  const auto l = LatticeFromJson(ctx.Input("lattice"), ctx.budgets);
  const auto v = IsCongruenceRepresentation(l, a, ctx.budgets);
  res["congruence_representation"] = v.holds;
  res["congruences"] = CongruencesJson(v.congruences);
  if (v.isomorphism) {
    Json iso = Json::object();
    for (Element x = 0; x < l.size(); ++x) {
      iso[l.label(x)] = EqToJson(v.congruences.members[(*v.isomorphism)[x]]);
    }
    res["isomorphism"] = iso;
  }
  r.report["summary"] = Json{{"congruence_representation", v.holds}};
  r.verdict = FromBool(v.holds);
  return r;
}

CommandResult AlgSearch(Context& ctx) {
  const auto l = LatticeFromJson(ctx.Input("lattice"), ctx.budgets);
  AlgebraSearchOptions o;
  o.max_carrier = ctx.Size("max_carrier", o.max_carrier);
  o.max_unary_ops = ctx.Size("max_unary_ops", o.max_unary_ops);
  o.max_binary_ops = ctx.Size("max_binary_ops", o.max_binary_ops);
  o.match_dual = ctx.Flag("dual");
  const auto found = SearchAlgebra(l, o, ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  res["bounds"] = Json{{"max_carrier", o.max_carrier},
                       {"max_unary_ops", o.max_unary_ops},
                       {"max_binary_ops", o.max_binary_ops},
                       {"dual", o.match_dual}};
  res["candidates"] = found.candidates;
  res["found"] = found.algebra.has_value();
  if (found.algebra) {
    res["algebra"] = AlgebraToJson(*found.algebra);
    res["congruences"] =
        CongruencesJson(ComputeCongruenceLattice(*found.algebra, ctx.budgets));
  } else {
    res["note"] = "no algebra within these bounds; this is not evidence that none exists";
  }
  if (found.budget_exhausted) ctx.budget_flags.push_back("search_tables");
  r.report["summary"] = Json{{"found", found.algebra.has_value()}};
  r.verdict = FromBool(found.algebra.has_value());
  return r;
}

CommandResult Reasonable(Context& ctx) {
  const auto el = ElatticeFromJson(ctx.Input("elattice"), ctx.budgets);
  ReasonableOptions o;
  o.use_fast_path = ctx.Flag("fast_path", true);
  const auto v = IsReasonable(el, o, ctx.budgets);
  CommandResult r;
  Json& res = r.report["results"];
  res["reasonable"] = v.reasonable;
  res["fast_path_used"] = v.fast_path_used;
  res["orders_examined"] = v.orders_examined;
  if (v.order) res["order"] = Labels(el.lattice, *v.order);
  if (v.obstruction) {
    res["obstruction"] = Labels(el.lattice, {v.obstruction->first, v.obstruction->second});
  }
  r.report["summary"] = Json{{"reasonable", v.reasonable}};
  r.verdict = FromBool(v.reasonable);
  return r;
}

CommandResult ExportDot(Context& ctx) {
  const auto l = LatticeFromJson(ctx.Input("lattice"), ctx.budgets);
  CommandResult r;
  const std::string name =
      ctx.options().contains("name") ? ctx.options()["name"].get<std::string>() : "L";
  r.artifact = HasseDot(l, name);
  r.artifact_type = "text/vnd.graphviz";
  r.report["results"] = Json{{"size", l.size()}, {"covers", l.covers().size()}};
  return r;
}

CommandResult Standard(Context& ctx) {
  const auto& o = ctx.options();
  if (!o.contains("name") || !o["name"].is_string()) {
    Fail(ErrorCode::kInvalidParameter, "standard needs a lattice name");
  }
  const auto kind = LatticeKind::Parse(o["name"].get<std::string>());
  const auto l = StandardLattice(kind, ctx.budgets);
  CommandResult r;
  r.report["results"] =
      Json{{"name", kind.ToString()}, {"degenerate", kind.degenerate()},
           {"lattice", LatticeToJson(l)}};
  return r;
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json BudgetsToJson(const Budgets& b) {
  return Json{{"lattice_elements", b.lattice_elements},
              {"search_target", b.search_target},
              {"rank_elements", b.rank_elements},
              {"birkhoff_irreducibles", b.birkhoff_irreducibles},
              {"cpp_ground", b.cpp_ground},
              {"iso_ground", b.iso_ground},
              {"power_ground", b.power_ground},
              {"carrier", b.carrier},
              {"reasonable_elements", b.reasonable_elements},
              {"partitions", b.partitions},
              {"search_tables", b.search_tables}};
}

Budgets BudgetsFromJson(const Json& j, Budgets b) {
  if (!j.is_object()) Fail(ErrorCode::kParseError, "budgets: expected an object");
  const std::map<std::string, std::size_t*> fields{
      {"lattice_elements", &b.lattice_elements},
      {"search_target", &b.search_target},
      {"rank_elements", &b.rank_elements},
      {"birkhoff_irreducibles", &b.birkhoff_irreducibles},
      {"cpp_ground", &b.cpp_ground},
      {"iso_ground", &b.iso_ground},
      {"power_ground", &b.power_ground},
      {"carrier", &b.carrier},
      {"reasonable_elements", &b.reasonable_elements},
      {"partitions", &b.partitions},
      {"search_tables", &b.search_tables}};
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto f = fields.find(it.key());
    if (f == fields.end()) Fail(ErrorCode::kParseError, "budgets: unknown key " + it.key());
    if (!it.value().is_number_unsigned()) {
      Fail(ErrorCode::kParseError, "budgets/" + it.key() + ": expected a non-negative integer");
    }
    *f->second = it.value().get<std::size_t>();
  }
  return b;
}

CommandResult RunCommand(const Json& request) {
  if (!request.is_object() || !request.contains("command") ||
      !request["command"].is_string()) {
    Fail(ErrorCode::kParseError, "request: missing command");
  }
  const std::string command = request["command"].get<std::string>();
  Context ctx{request, {}, {}, Json::array()};
  if (request.contains("budgets")) ctx.budgets = BudgetsFromJson(request["budgets"]);

  static const std::map<std::string, std::function<CommandResult(Context&)>> table{
      {"analyze", Analyze},        {"ranks", Ranks},
      {"rep verify", RepVerify},   {"rep cpp", RepCpp},
      {"rep ranked", RepRanked},   {"rep family-closure", RepFamily},
      {"crt2", Crt2},              {"alg cg", AlgCg},
      {"alg check", AlgCheck},     {"alg search", AlgSearch},
      {"reasonable", Reasonable},  {"export-dot", ExportDot},
      {"standard", Standard}};
  auto handler = table.find(command);
  if (handler == table.end()) {
    Fail(ErrorCode::kInvalidParameter, "unknown command: " + command);
  }

  std::uint64_t digest = 0xcbf29ce484222325ULL;
  if (request.contains("inputs")) {
    for (const auto& [role, input] : request["inputs"].items()) {
      digest = Fnv1a64(role, digest);
      digest = Fnv1a64(std::string_view("\0", 1), digest);
      digest = Fnv1a64(input.at("text").get<std::string>(), digest);
      digest = Fnv1a64(std::string_view("\0", 1), digest);
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));

  const auto start = std::chrono::steady_clock::now();
  CommandResult result = handler->second(ctx);
  const auto stop = std::chrono::steady_clock::now();

  Json report;
  report["tool"] = "latkit";
  report["command"] = command;
  report["echo"] = request.value("echo", Json::array());
  report["input_digest"] = std::string("fnv1a64:") + hex;
  report["budgets"] = BudgetsToJson(ctx.budgets);
  report["verdict"] = result.verdict == Verdict::kNone
                          ? Json(nullptr)
                          : Json(result.verdict == Verdict::kTrue);
  if (result.report.contains("summary")) report["summary"] = result.report["summary"];
  report["results"] = result.report.value("results", Json::object());
  report["budget_flags"] = ctx.budget_flags;
  if (request.value("timings", false)) {
    report["timings_ms"] = Json{
        {"total", std::chrono::duration<double, std::milli>(stop - start).count()}};
  }
  result.report = std::move(report);
  return result;
}

}  // namespace latkit

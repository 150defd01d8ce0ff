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

#include "latkit/latkit.h"

#include <cstring>
#include <new>
#include <string>

#include "latkit/commands.hpp"
#include "latkit/diversity.hpp"
#include "latkit/dot.hpp"
#include "latkit/error.hpp"
#include "latkit/json_io.hpp"

struct latkit_lattice {
  latkit::FiniteLattice value;
};
struct latkit_rep {
  latkit::Representation value;
};
struct latkit_algebra {
  latkit::FiniteAlgebra value;
};
struct latkit_elattice {
  latkit::EquivalencedLattice value;
};

namespace {

thread_local std::string last_error;

latkit::Budgets ToBudgets(const latkit_budgets* b) {
  latkit::Budgets out;
  if (b == nullptr) return out;
  out.lattice_elements = b->lattice_elements;
  out.search_target = b->search_target;
  out.rank_elements = b->rank_elements;
  out.birkhoff_irreducibles = b->birkhoff_irreducibles;
  out.cpp_ground = b->cpp_ground;
  out.iso_ground = b->iso_ground;
  out.power_ground = b->power_ground;
  out.carrier = b->carrier;
  out.reasonable_elements = b->reasonable_elements;
  out.partitions = b->partitions;
  out.search_tables = b->search_tables;
  return out;
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

latkit_status Record(latkit_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
latkit_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return LATKIT_OK;
  } catch (const latkit::Error& e) {
    return Record(static_cast<latkit_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(LATKIT_ERR_SIZE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return Record(LATKIT_ERR_INTERNAL, e.what());
  }
}

#define LATKIT_REQUIRE(ptr)                                                 \
  do {                                                                      \
    if ((ptr) == nullptr) {                                                 \
      return Record(LATKIT_ERR_NULL_ARGUMENT, "null argument: " #ptr);      \
    }                                                                       \
  } while (0)

}  // namespace

extern "C" {

const char* latkit_version(void) { return "0.1.0"; }

const char* latkit_last_error(void) { return last_error.c_str(); }

const char* latkit_status_name(latkit_status status) {
  switch (status) {
    case LATKIT_OK: return "Ok";
    case LATKIT_ERR_NULL_ARGUMENT: return "NullArgument";
    case LATKIT_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= LATKIT_ERR_NOT_A_PARTIAL_ORDER && status <= LATKIT_ERR_PARSE) {
    return latkit::ErrorCodeName(static_cast<latkit::ErrorCode>(status)).data();
  }
  return "Unknown";
}

void latkit_string_free(char* s) { delete[] s; }

void latkit_budgets_default(latkit_budgets* out) {
  if (out == nullptr) return;
  const latkit::Budgets b;
  *out = latkit_budgets{b.lattice_elements, b.search_target, b.rank_elements,
                        b.birkhoff_irreducibles, b.cpp_ground, b.iso_ground,
                        b.power_ground, b.carrier, b.reasonable_elements,
                        b.partitions, b.search_tables};
}

latkit_status latkit_lattice_from_json(const char* json, latkit_lattice** out) {
  LATKIT_REQUIRE(json);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    auto j = latkit::ParseJsonText(json, "lattice");
    *out = new latkit_lattice{latkit::LatticeFromJson(j)};
  });
}

latkit_status latkit_lattice_standard(const char* name, latkit_lattice** out) {
  LATKIT_REQUIRE(name);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    *out = new latkit_lattice{
        latkit::StandardLattice(latkit::LatticeKind::Parse(name))};
  });
}

latkit_status latkit_lattice_to_json(const latkit_lattice* l, char** out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  return Guard([&] { *out = CopyString(latkit::LatticeToJson(l->value).dump()); });
}

latkit_status latkit_lattice_size(const latkit_lattice* l, size_t* out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  *out = l->value.size();
  return LATKIT_OK;
}

latkit_status latkit_lattice_meet(const latkit_lattice* l, uint32_t x, uint32_t y,
                                  uint32_t* out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  if (x >= l->value.size() || y >= l->value.size()) {
    return Record(LATKIT_ERR_INVALID_PARAMETER, "element out of range");
  }
  *out = l->value.meet(x, y);
  return LATKIT_OK;
}

latkit_status latkit_lattice_join(const latkit_lattice* l, uint32_t x, uint32_t y,
                                  uint32_t* out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  if (x >= l->value.size() || y >= l->value.size()) {
    return Record(LATKIT_ERR_INVALID_PARAMETER, "element out of range");
  }
  *out = l->value.join(x, y);
  return LATKIT_OK;
}

latkit_status latkit_lattice_is_distributive(const latkit_lattice* l,
                                             const latkit_budgets* budgets,
                                             int* out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    *out = latkit::IsDistributive(l->value, ToBudgets(budgets)).distributive ? 1 : 0;
  });
}

latkit_status latkit_lattice_dot(const latkit_lattice* l, char** out) {
  LATKIT_REQUIRE(l);
  LATKIT_REQUIRE(out);
  return Guard([&] { *out = CopyString(latkit::HasseDot(l->value)); });
}

void latkit_lattice_free(latkit_lattice* l) { delete l; }

latkit_status latkit_rep_from_json(const char* json, latkit_rep** out) {
  LATKIT_REQUIRE(json);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    auto j = latkit::ParseJsonText(json, "representation");
    *out = new latkit_rep{latkit::RepFromJson(j)};
  });
}

latkit_status latkit_rep_to_json(const latkit_rep* rep, char** out) {
  LATKIT_REQUIRE(rep);
  LATKIT_REQUIRE(out);
  return Guard([&] { *out = CopyString(latkit::RepToJson(rep->value).dump()); });
}

latkit_status latkit_rep_is_ncpp(const latkit_rep* rep, size_t depth,
                                 const latkit_budgets* budgets, int* out) {
  LATKIT_REQUIRE(rep);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    *out = latkit::IsNCpp(rep->value, depth, ToBudgets(budgets))->holds ? 1 : 0;
  });
}

void latkit_rep_free(latkit_rep* rep) { delete rep; }

latkit_status latkit_algebra_from_json(const char* json, latkit_algebra** out) {
  LATKIT_REQUIRE(json);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    auto j = latkit::ParseJsonText(json, "algebra");
    *out = new latkit_algebra{latkit::AlgebraFromJson(j)};
  });
}

latkit_status latkit_algebra_to_json(const latkit_algebra* a, char** out) {
  LATKIT_REQUIRE(a);
  LATKIT_REQUIRE(out);
  return Guard([&] { *out = CopyString(latkit::AlgebraToJson(a->value).dump()); });
}

latkit_status latkit_algebra_congruence_lattice(const latkit_algebra* a,
                                                const latkit_budgets* budgets,
                                                latkit_lattice** out) {
  LATKIT_REQUIRE(a);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    auto cg = latkit::ComputeCongruenceLattice(a->value, ToBudgets(budgets));
    *out = new latkit_lattice{std::move(cg.lattice)};
  });
}

void latkit_algebra_free(latkit_algebra* a) { delete a; }

latkit_status latkit_elattice_from_json(const char* json, latkit_elattice** out) {
  LATKIT_REQUIRE(json);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    auto j = latkit::ParseJsonText(json, "equivalenced lattice");
    *out = new latkit_elattice{latkit::ElatticeFromJson(j)};
  });
}

latkit_status latkit_elattice_is_reasonable(const latkit_elattice* el,
                                            const latkit_budgets* budgets,
                                            int* out) {
  LATKIT_REQUIRE(el);
  LATKIT_REQUIRE(out);
  return Guard([&] {
    *out = latkit::IsReasonable(el->value, {}, ToBudgets(budgets)).reasonable ? 1 : 0;
  });
}

void latkit_elattice_free(latkit_elattice* el) { delete el; }

latkit_status latkit_run(const char* request_json, char** report, char** artifact,
                         int* verdict) {
  LATKIT_REQUIRE(request_json);
  LATKIT_REQUIRE(report);
  *report = nullptr;
  if (artifact != nullptr) *artifact = nullptr;
  if (verdict != nullptr) *verdict = -1;
  latkit::Json request;
  const latkit_status status = Guard([&] {
    request = latkit::ParseJsonText(request_json, "request");
    auto result = latkit::RunCommand(request);
    *report = CopyString(result.report.dump());
    if (artifact != nullptr && !result.artifact.empty()) {
      *artifact = CopyString(result.artifact);
    }
    if (verdict != nullptr) *verdict = static_cast<int>(result.verdict);
  });
  if (status != LATKIT_OK) {
    latkit::Json err;
    err["tool"] = "latkit";
    if (request.is_object()) {
      err["command"] = request.value("command", "");
      err["echo"] = request.value("echo", latkit::Json::array());
    }
    err["error"] = latkit::Json{{"status", latkit_status_name(status)},
                                {"message", last_error}};
    // Budget errors name their dimension in the message.
    *report = CopyString(err.dump());
  }
  return status;
}

}  // extern "C"

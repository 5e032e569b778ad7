/*
Copyright 2026 The emb7 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "emb7/emb7.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "emb7/classifier.hpp"
#include "emb7/error.hpp"
#include "emb7/gausslink.hpp"
#include "emb7/invariants.hpp"
#include "emb7/json_io.hpp"
#include "emb7/manifold.hpp"
#include "emb7/moves.hpp"

struct emb7_manifold {
  emb7::ManifoldData data;
  emb7::ValidationReport report;
};

struct emb7_fiber_iter {
  emb7::FiberCursor cursor;
};

namespace {

using emb7::ErrorKind;
using emb7::json_io::json;
namespace jio = emb7::json_io;

thread_local std::string last_error;

constexpr const char* kBasepointNote =
    "beta coordinates are relative to an unspecified basepoint embedding of the (u, L) fiber";

emb7_status status_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidManifold:
  case ErrorKind::Inadmissible:
  case ErrorKind::NotSymmetric:
  case ErrorKind::BetaUnknown:
  case ErrorKind::InfiniteFiber:
  case ErrorKind::EnumerationTooLarge:
  case ErrorKind::SeparationTooSmall:
  case ErrorKind::Unconverged:
    return EMB7_DOMAIN_ERROR;
  case ErrorKind::DimensionMismatch:
  case ErrorKind::InvalidArgument:
  case ErrorKind::UnknownName:
  case ErrorKind::Parse:
    return EMB7_USAGE_ERROR;
  }
  return EMB7_INTERNAL_ERROR;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, which returns the JSON result, and translates exceptions.
template <class F>
emb7_status guarded(char** out, F&& body) {
  if (!out) {
    last_error = "output pointer is null";
    return EMB7_USAGE_ERROR;
  }
  try {
    json result = body();
    *out = duplicate(result.dump());
    return EMB7_OK;
  } catch (const emb7::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("JSON error: ") + e.what();
    return EMB7_USAGE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EMB7_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EMB7_INTERNAL_ERROR;
  }
}

const emb7::ManifoldData& valid_data(const emb7_manifold* m) {
  if (!m) emb7::fail(ErrorKind::InvalidArgument, "manifold handle is null");
  if (!m->report.ok()) emb7::require_valid(m->data);
  return m->data;
}

std::string text(const char* s, const char* what) {
  if (!s) emb7::fail(ErrorKind::InvalidArgument, std::string(what) + " is null");
  return s;
}

json parse_arg(const char* s, const char* what) { return jio::parse(text(s, what)); }

emb7::IntVector vector_arg(const char* s, const char* what) {
  return jio::to_vector(parse_arg(s, what));
}

emb7::IntMatrix matrix_arg(const char* s, const char* what, std::size_t empty_cols = 0) {
  return jio::to_matrix(parse_arg(s, what), empty_cols);
}

emb7::Int int_arg(const char* s, const char* what) {
  return jio::to_int(json(text(s, what)));
}

json tau_pair(const std::pair<emb7::Int, emb7::Int>& p) {
  return {{"l", jio::from_int(p.first)}, {"b", jio::from_int(p.second)}};
}

} // namespace

extern "C" {

const char* emb7_version(void) { return "0.1.0"; }

const char* emb7_last_error(void) { return last_error.c_str(); }

void emb7_string_free(char* s) { std::free(s); }

emb7_status emb7_manifold_builtin(const char* name, emb7_manifold** out) {
  if (!out) return EMB7_USAGE_ERROR;
  try {
    auto* m = new emb7_manifold{emb7::builtin(text(name, "name")), {}};
    m->report = emb7::validate(m->data);
    *out = m;
    return EMB7_OK;
  } catch (const emb7::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return EMB7_INTERNAL_ERROR;
  }
}

emb7_status emb7_manifold_from_json(const char* json_text, emb7_manifold** out) {
  if (!out) return EMB7_USAGE_ERROR;
  try {
    auto data = jio::to_manifold(parse_arg(json_text, "manifold JSON"));
    auto* m = new emb7_manifold{std::move(data), {}};
    m->report = emb7::validate(m->data);
    *out = m;
    return EMB7_OK;
  } catch (const emb7::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("JSON error: ") + e.what();
    return EMB7_USAGE_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EMB7_INTERNAL_ERROR;
  }
}

void emb7_manifold_free(emb7_manifold* m) { delete m; }

emb7_status emb7_manifold_to_json(const emb7_manifold* m, char** out) {
  return guarded(out, [&] {
    if (!m) emb7::fail(ErrorKind::InvalidArgument, "manifold handle is null");
    return jio::from_manifold(m->data);
  });
}

emb7_status emb7_manifold_validate(const emb7_manifold* m, char** report) {
  emb7_status st = guarded(report, [&] {
    if (!m) emb7::fail(ErrorKind::InvalidArgument, "manifold handle is null");
    return jio::from_report(m->report);
  });
  if (st != EMB7_OK) return st;
  if (!m->report.ok()) {
    last_error = "manifold data failed validation";
    return EMB7_DOMAIN_ERROR;
  }
  return EMB7_OK;
}

emb7_status emb7_snf(const char* matrix_json, char** out) {
  return guarded(out, [&] { return jio::from_snf(emb7::smith_normal_form(matrix_arg(matrix_json, "matrix"))); });
}

emb7_status emb7_cokernel(size_t ambient_rank, const char* relations_json, char** out) {
  return guarded(out, [&] {
    return jio::from_group(emb7::cokernel(ambient_rank, matrix_arg(relations_json, "relations")));
  });
}

emb7_status emb7_kappa_check(const emb7_manifold* m, const char* u_json, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto u = vector_arg(u_json, "u");
    return json{{"u", jio::from_vector(u)},
                {"admissible", emb7::is_kappa_admissible(d, u)},
                {"divisibility", jio::from_int(emb7::divisibility(u))}};
  });
}

emb7_status emb7_kappa_enum(const emb7_manifold* m, long bound, uint64_t cap, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto values =
        emb7::enumerate_kappa(d, bound, cap == 0 ? emb7::kDefaultEnumerationCap : cap);
    json list = json::array();
    for (const auto& u : values) list.push_back(jio::from_vector(u));
    return json{{"bound", std::to_string(bound)},
                {"count", std::to_string(values.size())},
                {"values", list}};
  });
}

emb7_status emb7_sym_check(const emb7_manifold* m, const char* u_json, const char* l_json,
                           char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    return json{{"symmetric", emb7::is_symmetric_pair(d, vector_arg(u_json, "u"),
                                                      matrix_arg(l_json, "L", d.b3))}};
  });
}

emb7_status emb7_base_lambda(const emb7_manifold* m, const char* u_json, char** out) {
  return guarded(out, [&] {
    return json{{"L", jio::from_matrix(emb7::base_lambda(valid_data(m), vector_arg(u_json, "u")))}};
  });
}

emb7_status emb7_k_group(const emb7_manifold* m, const char* u_json, const char* l_json,
                         char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto l = matrix_arg(l_json, "L", d.b3);
    json j = jio::from_kgroup(emb7::k_group(d, vector_arg(u_json, "u"), l));
    j["adjoint"] = jio::from_matrix(emb7::lambda_adjoint(d, l));
    return j;
  });
}

emb7_status emb7_whitney(const emb7_manifold* m, const char* l_json, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto w = emb7::whitney_w(d, matrix_arg(l_json, "L", d.b3));
    json bits = json::array();
    for (int x : w) bits.push_back(std::to_string(x));
    return json{{"W", bits}};
  });
}

emb7_status emb7_reghom(const char* l0_json, const char* l1_json, char** out) {
  return guarded(out, [&] {
    return json{{"regular_homotopic",
                 emb7::regular_homotopy_equivalent(matrix_arg(l0_json, "L0"),
                                                   matrix_arg(l1_json, "L1"))}};
  });
}

emb7_status emb7_compress_check(const char* u_json, const char* l_json, char** out) {
  return guarded(out, [&] {
    return json{{"necessary_condition", emb7::compression_obstruction(vector_arg(u_json, "u"),
                                                                       matrix_arg(l_json, "L"))},
                {"note", "kappa = 0 and lambda = 0 is necessary, not sufficient, for "
                         "compression into S^6"}};
  });
}

emb7_status emb7_move_apply(const emb7_manifold* m, const char* class_json, const char* move_json,
                            char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto cls = jio::to_class(parse_arg(class_json, "class"));
    const auto mv = jio::to_move(parse_arg(move_json, "move"));
    json j = jio::from_class(emb7::apply_move(d, cls, mv));
    j["note"] = kBasepointNote;
    return j;
  });
}

emb7_status emb7_decompose(const emb7_manifold* m, const char* form_json, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto moves = emb7::decompose_symmetric_form(d, matrix_arg(form_json, "form", d.b3));
    json list = json::array();
    for (const auto& mv : moves)
      list.push_back({{"s", jio::from_vector(mv.s)}, {"l", jio::from_int(mv.l)}});
    return json{{"moves", list},
                {"net_effect", jio::from_matrix(emb7::net_lambda_effect(d, moves))}};
  });
}

emb7_status emb7_tau_normal_form(const char* l, const char* b, char** out) {
  return guarded(out, [&] { return tau_pair(emb7::tau_normal_form(int_arg(l, "l"), int_arg(b, "b"))); });
}

emb7_status emb7_tau_equal(const char* l, const char* b, const char* l2, const char* b2,
                           char** out) {
  return guarded(out, [&] {
    return json{{"equal", emb7::tau_equal(int_arg(l, "l"), int_arg(b, "b"), int_arg(l2, "l'"),
                                          int_arg(b2, "b'"))}};
  });
}

emb7_status emb7_tau_compose(const char* l, const char* b, const char* l2, const char* b2,
                             char** out) {
  return guarded(out, [&] {
    return tau_pair(emb7::tau_compose(int_arg(l, "l"), int_arg(b, "b"), int_arg(l2, "l'"),
                                      int_arg(b2, "b'")));
  });
}

emb7_status emb7_classify_equal(const emb7_manifold* m, const char* class1_json,
                                const char* class2_json, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const bool eq = emb7::classes_equal(d, jio::to_class(parse_arg(class1_json, "class 1")),
                                        jio::to_class(parse_arg(class2_json, "class 2")));
    return json{{"equal", eq}, {"note", kBasepointNote}};
  });
}

emb7_status emb7_fiber(const emb7_manifold* m, const char* u_json, const char* l_json,
                       int enumerate, long long cap, char** out) {
  return guarded(out, [&] {
    const auto& d = valid_data(m);
    const auto u = vector_arg(u_json, "u");
    const auto l = matrix_arg(l_json, "L", d.b3);
    const emb7::KGroup k = emb7::fiber_group(d, u, l);
    json j;
    j["d"] = jio::from_int(k.d);
    j["factors"] = jio::from_vector(k.group.invariant_factors);
    j["group"] = jio::from_kgroup(k);
    const auto order = k.group.order();
    j["size"] = order ? json(order->get_str()) : json("infinite");
    if (enumerate) {
      std::optional<std::size_t> c;
      if (cap >= 0) c = static_cast<std::size_t>(cap);
      const auto e = emb7::enumerate_fiber(d, u, l, c);
      json reps = json::array();
      for (const auto& r : e.representatives) reps.push_back(jio::from_vector(r));
      j["representatives"] = reps;
      j["truncated"] = e.truncated;
      j["note"] = kBasepointNote;
    }
    return j;
  });
}

emb7_status emb7_fiber_iter_new(const emb7_manifold* m, const char* u_json, const char* l_json,
                                emb7_fiber_iter** out) {
  if (!out) return EMB7_USAGE_ERROR;
  char* unused = nullptr;
  emb7_fiber_iter* it = nullptr;
  emb7_status st = guarded(&unused, [&] {
    const auto& d = valid_data(m);
    const emb7::KGroup k =
        emb7::fiber_group(d, vector_arg(u_json, "u"), matrix_arg(l_json, "L", d.b3));
    it = new emb7_fiber_iter{emb7::FiberCursor(k.group)};
    return json(nullptr);
  });
  std::free(unused);
  if (st == EMB7_OK) *out = it;
  return st;
}

emb7_status emb7_fiber_iter_next(emb7_fiber_iter* it, char** out) {
  bool end = false;
  emb7_status st = guarded(out, [&] {
    if (!it) emb7::fail(ErrorKind::InvalidArgument, "iterator handle is null");
    auto rep = it->cursor.next();
    if (!rep) {
      end = true;
      return json(nullptr);
    }
    return jio::from_vector(*rep);
  });
  if (st == EMB7_OK && end) {
    std::free(*out);
    *out = nullptr;
    return EMB7_END;
  }
  return st;
}

void emb7_fiber_iter_free(emb7_fiber_iter* it) { delete it; }

emb7_status emb7_link_tau(long l, long b, int resolution, char** out) {
  return guarded(out, [&] {
    emb7::gauss::LinkOptions opt;
    opt.resolution = resolution;
    const auto report = emb7::gauss::verify_lambda_tau(l, b, opt);
    json j = jio::from_link(report.link);
    j["l"] = std::to_string(l);
    j["b"] = std::to_string(b);
    j["resolution"] = std::to_string(resolution);
    j["pass"] = report.pass;
    return j;
  });
}

} // extern "C"

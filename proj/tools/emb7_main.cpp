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
// emb7 command-line front end. Every subcommand is a thin call into the C
// API; results are printed as one JSON document on stdout.
//
// Exit codes: 0 success, 1 domain failure (JSON error object on stdout),
// 2 usage error (diagnostic on stderr).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emb7/emb7.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ManifoldDeleter {
  void operator()(emb7_manifold* m) const { emb7_manifold_free(m); }
};
using ManifoldHandle = std::unique_ptr<emb7_manifold, ManifoldDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or the contents of a file when written as @path.
std::string json_arg(const std::string& value) {
  if (!value.empty() && value.front() == '@') return read_file(value.substr(1));
  return value;
}

bool is_builtin(const std::string& name) {
  for (const char* b : {"s4", "s1xs3", "cp2", "s2xs2", "t2xs2"})
    if (name == b) return true;
  return false;
}

int report(emb7_status st, char*& out) {
  if (st == EMB7_OK) {
    std::cout << out << '\n';
    emb7_string_free(out);
    return kExitOk;
  }
  if (st == EMB7_USAGE_ERROR) {
    std::cerr << "emb7: " << emb7_last_error() << '\n';
    return kExitUsage;
  }
  json err{{"error", emb7_last_error()},
           {"status", st == EMB7_DOMAIN_ERROR ? "domain_error" : "internal_error"}};
  std::cout << err.dump() << '\n';
  return kExitDomain;
}

// Returns a handle or throws UsageError; domain problems surface later.
ManifoldHandle load_manifold(const std::string& source) {
  emb7_manifold* m = nullptr;
  emb7_status st = is_builtin(source) ? emb7_manifold_builtin(source.c_str(), &m)
                                        : emb7_manifold_from_json(json_arg("@" + source).c_str(), &m);
  if (st != EMB7_OK) throw UsageError(emb7_last_error());
  return ManifoldHandle(m);
}

json manifold_json(const emb7_manifold* m) {
  char* out = nullptr;
  if (emb7_manifold_to_json(m, &out) != EMB7_OK) throw UsageError(emb7_last_error());
  json j = json::parse(out);
  emb7_string_free(out);
  return j;
}

// Zero vector of length b2, used when --u is omitted.
std::string default_u(const emb7_manifold* m) {
  const std::size_t b2 = manifold_json(m)["b2"].get<std::size_t>();
  return json(std::vector<std::string>(b2, "0")).dump();
}

// "s1,...,sk,l,b" -> {"s": [s1..sk], "l": l, "b": b}; JSON objects pass through.
std::string move_arg(const std::string& value) {
  std::string text = json_arg(value);
  if (!text.empty() && text.front() == '{') return text;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() < 2) throw UsageError("--move expects s1,...,sk,l,b");
  json s = json::array();
  for (std::size_t i = 0; i + 2 < parts.size(); ++i) s.push_back(parts[i]);
  return json{{"s", s}, {"l", parts[parts.size() - 2]}, {"b", parts.back()}}.dump();
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("EMB7_ENUM_CAP");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("EMB7_ENUM_CAP must be a positive integer");
  return v;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embeddings of 4-manifolds in S^7 modulo knots: invariants, classification and "
               "numerical linking numbers",
               "emb7"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(emb7_version()));

  std::string manifold;
  std::string u_text;
  std::string l_text;
  std::function<int()> action;

  auto add_manifold = [&](CLI::App* sub) {
    sub->add_option("--manifold,-m", manifold, "builtin name or path to manifold JSON")->required();
  };

  // validate
  auto* validate = app.add_subcommand("validate", "check manifold data");
  std::string validate_path;
  validate->add_option("file", validate_path, "manifold JSON file or builtin name")->required();
  validate->callback([&] {
    action = [&] {
      auto m = load_manifold(validate_path);
      char* out = nullptr;
      emb7_status st = emb7_manifold_validate(m.get(), &out);
      if (st == EMB7_DOMAIN_ERROR && out) {
        std::cout << out << '\n';
        emb7_string_free(out);
        return kExitDomain;
      }
      return report(st, out);
    };
  });

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string matrix_text;
  snf->add_option("--matrix", matrix_text, "matrix JSON")->required();
  snf->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_snf(json_arg(matrix_text).c_str(), &out), out);
    };
  });

  // cokernel
  auto* coker = app.add_subcommand("cokernel", "invariant factors of Z^rank / span(columns)");
  std::size_t rank = 0;
  std::string relations_text;
  coker->add_option("--rank", rank, "ambient rank")->required();
  coker->add_option("--relations", relations_text, "relation matrix JSON (columns)")->required();
  coker->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_cokernel(rank, json_arg(relations_text).c_str(), &out), out);
    };
  });

  // kappa-check
  auto* kcheck = app.add_subcommand("kappa-check", "is u an admissible kappa value");
  add_manifold(kcheck);
  kcheck->add_option("--u", u_text, "vector JSON")->required();
  kcheck->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_kappa_check(m.get(), json_arg(u_text).c_str(), &out), out);
    };
  });

  // kappa-enum
  auto* kenum = app.add_subcommand("kappa-enum", "admissible kappa values in a box");
  add_manifold(kenum);
  long bound = 0;
  kenum->add_option("--bound", bound, "coordinate bound")->required();
  kenum->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_kappa_enum(m.get(), bound, enumeration_cap(), &out), out);
    };
  });

  // sym-check
  auto* sym = app.add_subcommand("sym-check", "is (u, L) a symmetric pair");
  add_manifold(sym);
  sym->add_option("--u", u_text, "vector JSON (default zero)");
  sym->add_option("--L", l_text, "matrix JSON")->required();
  sym->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      const std::string u = u_text.empty() ? default_u(m.get()) : json_arg(u_text);
      char* out = nullptr;
      return report(emb7_sym_check(m.get(), u.c_str(), json_arg(l_text).c_str(), &out), out);
    };
  });

  // base-lambda
  auto* base = app.add_subcommand("base-lambda", "canonical u-symmetric form");
  add_manifold(base);
  base->add_option("--u", u_text, "vector JSON")->required();
  base->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_base_lambda(m.get(), json_arg(u_text).c_str(), &out), out);
    };
  });

  // k-group
  auto* kgroup = app.add_subcommand("k-group", "beta value group of a symmetric pair");
  add_manifold(kgroup);
  kgroup->add_option("--u", u_text, "vector JSON (default zero)");
  kgroup->add_option("--L", l_text, "matrix JSON")->required();
  kgroup->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      const std::string u = u_text.empty() ? default_u(m.get()) : json_arg(u_text);
      char* out = nullptr;
      return report(emb7_k_group(m.get(), u.c_str(), json_arg(l_text).c_str(), &out), out);
    };
  });

  // whitney
  auto* whitney = app.add_subcommand("whitney", "mod 2 class W with L(x,x) = W.x");
  add_manifold(whitney);
  whitney->add_option("--L", l_text, "matrix JSON")->required();
  whitney->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_whitney(m.get(), json_arg(l_text).c_str(), &out), out);
    };
  });

  // reghom
  auto* reghom = app.add_subcommand("reghom", "regular homotopy criterion for two forms");
  std::string l0_text, l1_text;
  reghom->add_option("--L0", l0_text, "matrix JSON")->required();
  reghom->add_option("--L1", l1_text, "matrix JSON")->required();
  reghom->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_reghom(json_arg(l0_text).c_str(), json_arg(l1_text).c_str(), &out), out);
    };
  });

  // compress-check
  auto* compress = app.add_subcommand("compress-check", "necessary condition for compression into S^6");
  compress->add_option("--u", u_text, "vector JSON")->required();
  compress->add_option("--L", l_text, "matrix JSON")->required();
  compress->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_compress_check(json_arg(u_text).c_str(), json_arg(l_text).c_str(), &out),
                    out);
    };
  });

  // move apply
  auto* move = app.add_subcommand("move", "parametric connected sum on invariants");
  move->require_subcommand(1);
  auto* move_apply = move->add_subcommand("apply", "apply one move to a class");
  std::string class_text, move_text;
  add_manifold(move_apply);
  move_apply->add_option("--class", class_text, "class JSON")->required();
  move_apply->add_option("--move", move_text, "s1,...,sk,l,b or move JSON")->required();
  move_apply->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      const std::string mv = move_arg(move_text);
      char* out = nullptr;
      return report(emb7_move_apply(m.get(), json_arg(class_text).c_str(), mv.c_str(), &out), out);
    };
  });

  // decompose
  auto* decompose = app.add_subcommand("decompose", "moves realizing a symmetric form");
  std::string form_text;
  add_manifold(decompose);
  decompose->add_option("--form", form_text, "symmetric matrix JSON")->required();
  decompose->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_decompose(m.get(), json_arg(form_text).c_str(), &out), out);
    };
  });

  // tau
  auto* tau = app.add_subcommand("tau", "knotted tori S^1 x S^3 -> S^7");
  tau->require_subcommand(1);
  std::vector<std::string> tau_args;
  auto* tau_nf = tau->add_subcommand("normal-form", "reduce (l, b)");
  tau_nf->add_option("values", tau_args, "l b")->expected(2)->required();
  tau_nf->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_tau_normal_form(tau_args[0].c_str(), tau_args[1].c_str(), &out), out);
    };
  });
  auto* tau_eq = tau->add_subcommand("equal", "compare tau(l, b) and tau(l', b')");
  tau_eq->add_option("values", tau_args, "l b l2 b2")->expected(4)->required();
  tau_eq->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_tau_equal(tau_args[0].c_str(), tau_args[1].c_str(), tau_args[2].c_str(),
                                   tau_args[3].c_str(), &out),
                    out);
    };
  });
  auto* tau_comp = tau->add_subcommand("compose", "representative of the sum along S^1");
  tau_comp->add_option("values", tau_args, "l b l2 b2")->expected(4)->required();
  tau_comp->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_tau_compose(tau_args[0].c_str(), tau_args[1].c_str(),
                                     tau_args[2].c_str(), tau_args[3].c_str(), &out),
                    out);
    };
  });

  // classify equal
  auto* classify = app.add_subcommand("classify", "class-level decisions");
  classify->require_subcommand(1);
  auto* classify_eq = classify->add_subcommand("equal", "are two classes equal modulo knots");
  std::string class1_text, class2_text;
  add_manifold(classify_eq);
  classify_eq->add_option("--class1", class1_text, "class JSON")->required();
  classify_eq->add_option("--class2", class2_text, "class JSON")->required();
  classify_eq->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      char* out = nullptr;
      return report(emb7_classify_equal(m.get(), json_arg(class1_text).c_str(),
                                        json_arg(class2_text).c_str(), &out),
                    out);
    };
  });

  // fiber
  auto* fiber = app.add_subcommand("fiber", "classes over a symmetric pair (u, L)");
  bool enumerate = false;
  long long cap = -1;
  add_manifold(fiber);
  fiber->add_option("--u", u_text, "vector JSON (default zero)");
  fiber->add_option("--L", l_text, "matrix JSON")->required();
  fiber->add_flag("--enumerate", enumerate, "list coset representatives");
  fiber->add_option("--cap", cap, "maximum number of representatives")->check(CLI::NonNegativeNumber);
  fiber->callback([&] {
    action = [&] {
      auto m = load_manifold(manifold);
      const std::string u = u_text.empty() ? default_u(m.get()) : json_arg(u_text);
      char* out = nullptr;
      return report(emb7_fiber(m.get(), u.c_str(), json_arg(l_text).c_str(), enumerate ? 1 : 0,
                               cap, &out),
                    out);
    };
  });

  // link tau
  auto* link = app.add_subcommand("link", "numerical linking numbers");
  link->require_subcommand(1);
  auto* link_tau = link->add_subcommand("tau", "lk of the fibers over (1,0), (-1,0) of tau(l, b)");
  long link_l = 0, link_b = 0;
  int resolution = 12;
  bool json_flag = true;
  link_tau->add_option("--l", link_l, "l")->required();
  link_tau->add_option("--b", link_b, "b")->required();
  link_tau->add_option("--resolution", resolution, "quadrature resolution")->check(CLI::Range(2, 64));
  link_tau->add_flag("--json", json_flag, "JSON output (the only mode)");
  link_tau->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(emb7_link_tau(link_l, link_b, resolution, &out), out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "emb7: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "emb7: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "emb7: " << e.what() << '\n';
    return kExitUsage;
  }
}

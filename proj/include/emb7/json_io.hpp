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
#ifndef EMB7_JSON_IO_HPP
#define EMB7_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "emb7/classifier.hpp"
#include "emb7/gausslink.hpp"
#include "emb7/manifold.hpp"
#include "emb7/moves.hpp"

// Integers are written as decimal strings so that no consumer truncates them;
// readers accept strings and plain JSON integers alike.
namespace emb7::json_io {

using nlohmann::json;

json parse(const std::string& text);

Int to_int(const json& j);
IntVector to_vector(const json& j);
/// An empty array yields a 0 x `empty_cols` matrix.
IntMatrix to_matrix(const json& j, std::size_t empty_cols = 0);

json from_int(const Int& v);
json from_vector(const IntVector& v);
json from_matrix(const IntMatrix& m);

ManifoldData to_manifold(const json& j);
json from_manifold(const ManifoldData& d);

json from_report(const ValidationReport& r);

/// {"u": [...], "L": [[...]], "beta": [...] | null}
EmbeddingClass to_class(const json& j);
json from_class(const EmbeddingClass& c);

/// {"s": [...], "l": "..", "b": ".."}
Move to_move(const json& j);
json from_move(const Move& m);

json from_group(const AbelianGroupPresentation& g);
json from_kgroup(const KGroup& k);
json from_snf(const SNFResult& s);

json from_link(const gauss::LinkResult& r);

} // namespace emb7::json_io

#endif

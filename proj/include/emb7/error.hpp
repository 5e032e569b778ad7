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
#ifndef EMB7_ERROR_HPP
#define EMB7_ERROR_HPP

#include <stdexcept>
#include <string>

namespace emb7 {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  UnknownName,
  InvalidManifold,
  Inadmissible,
  NotSymmetric,
  BetaUnknown,
  InfiniteFiber,
  EnumerationTooLarge,
  SeparationTooSmall,
  Unconverged,
  Parse,
};

// All library failures are reported through this type; the C API maps
// `kind()` onto its status codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::DimensionMismatch, what);
}

} // namespace emb7

#endif

// Copyright 2026 The HNN Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HNN_PICKLE_H_
#define HNN_PICKLE_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hnn::pickle {

// Decoded Python object. Only the shapes that show up in the public
// hypergraph dataset dumps are modelled: builtin containers, numpy arrays
// and scalars, and plain class instances with their state.
struct Value;
using ValuePtr = std::shared_ptr<Value>;

enum class Kind {
  kNone, kBool, kInt, kFloat, kStr, kBytes, kList, kTuple, kDict, kSet,
  kGlobal, kDtype, kArray, kObject,
};

struct Value {
  Kind kind = Kind::kNone;
  bool b = false;
  std::int64_t i = 0;
  double f = 0.0;
  std::string s;                 // str (UTF-8), bytes, dtype code, global name
  std::vector<ValuePtr> items;   // list, tuple, set
  std::vector<std::pair<ValuePtr, ValuePtr>> entries;  // dict, object state
  // Arrays: element values widened to double, row-major.
  std::vector<std::size_t> shape;
  std::vector<double> data;
  char byteorder = '<';
  ValuePtr cls;                  // object class (a kGlobal)

  bool is_number() const { return kind == Kind::kInt || kind == Kind::kFloat || kind == Kind::kBool; }
  double number() const;
  std::int64_t integer() const;  // throws unless integral
  const ValuePtr* find(const std::string& key) const;  // dict or object state
};

// Throws DataError on unsupported opcodes or malformed streams.
ValuePtr loads(const std::string& bytes, const std::string& source = "pickle");
ValuePtr load_file(const std::filesystem::path& path);

std::string describe(Kind kind);

}  // namespace hnn::pickle

#endif  // HNN_PICKLE_H_

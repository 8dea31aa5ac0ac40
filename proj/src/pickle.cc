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

#include "hnn/pickle.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hnn/common.h"

namespace hnn::pickle {
namespace {

ValuePtr make(Kind k) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  return v;
}

ValuePtr make_int(std::int64_t i) {
  auto v = make(Kind::kInt);
  v->i = i;
  return v;
}

ValuePtr make_float(double f) {
  auto v = make(Kind::kFloat);
  v->f = f;
  return v;
}

ValuePtr make_str(Kind k, std::string s) {
  auto v = make(k);
  v->s = std::move(s);
  return v;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// UTF-8 text to bytes, one byte per code point (latin-1).
std::string latin1_bytes(const std::string& utf8, const std::string& source) {
  std::string out;
  for (std::size_t i = 0; i < utf8.size();) {
    const auto c = static_cast<unsigned char>(utf8[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
    } else if ((c & 0xE0) == 0xC0 && i + 1 < utf8.size()) {
      const unsigned cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(utf8[i + 1]) & 0x3Fu);
      if (cp > 0xFF) throw DataError(source + ": latin-1 payload out of range");
      out.push_back(static_cast<char>(cp));
      i += 2;
    } else {
      throw DataError(source + ": latin-1 payload out of range");
    }
  }
  return out;
}

double decode_element(const unsigned char* p, char kind, std::size_t size, bool big) {
  unsigned char buf[8];
  for (std::size_t b = 0; b < size; ++b) buf[b] = big ? p[size - 1 - b] : p[b];
  switch (kind) {
    case 'f': {
      if (size == 8) {
        double d;
        std::memcpy(&d, buf, 8);
        return d;
      }
      float f;
      std::memcpy(&f, buf, 4);
      return f;
    }
    case 'i': {
      std::uint64_t u = 0;
      for (std::size_t b = 0; b < size; ++b) u |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
      if (size < 8 && (buf[size - 1] & 0x80)) u |= ~std::uint64_t{0} << (8 * size);
      return static_cast<double>(static_cast<std::int64_t>(u));
    }
    default: {  // 'u', 'b'
      std::uint64_t u = 0;
      for (std::size_t b = 0; b < size; ++b) u |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
      return static_cast<double>(u);
    }
  }
}

void parse_dtype(const Value& dtype, char& kind, std::size_t& size, bool& big,
                 const std::string& source) {
  std::string code = dtype.s;
  char order = dtype.byteorder;
  if (!code.empty() && (code[0] == '<' || code[0] == '>' || code[0] == '|' || code[0] == '=')) {
    order = code[0];
    code = code.substr(1);
  }
  if (code.size() < 2 || std::string("fiub").find(code[0]) == std::string::npos) {
    throw DataError(source + ": unsupported array dtype '" + dtype.s + "'");
  }
  kind = code[0];
  size = static_cast<std::size_t>(std::stoul(code.substr(1)));
  if (!(size == 1 || size == 2 || size == 4 || size == 8) || (kind == 'f' && size < 4)) {
    throw DataError(source + ": unsupported array dtype '" + dtype.s + "'");
  }
  big = order == '>';
}

void fill_array(Value& arr, const std::vector<std::size_t>& shape, const Value& dtype,
                const std::string& raw, bool fortran, const std::string& source) {
  char kind;
  std::size_t size;
  bool big;
  parse_dtype(dtype, kind, size, big, source);
  std::size_t count = 1;
  for (const auto d : shape) count *= d;
  if (raw.size() != count * size) throw DataError(source + ": array payload size mismatch");
  std::vector<double> data(count);
  const auto* p = reinterpret_cast<const unsigned char*>(raw.data());
  for (std::size_t k = 0; k < count; ++k) data[k] = decode_element(p + k * size, kind, size, big);
  if (fortran && shape.size() == 2) {
    std::vector<double> rm(count);
    for (std::size_t r = 0; r < shape[0]; ++r) {
      for (std::size_t c = 0; c < shape[1]; ++c) rm[r * shape[1] + c] = data[c * shape[0] + r];
    }
    data.swap(rm);
  }
  arr.kind = Kind::kArray;
  arr.shape = shape;
  arr.data = std::move(data);
  arr.s = std::string(1, kind) + std::to_string(size);
}

std::vector<std::size_t> shape_of(const Value& t, const std::string& source) {
  std::vector<std::size_t> shape;
  if (t.kind == Kind::kInt) return {static_cast<std::size_t>(t.i)};
  if (t.kind != Kind::kTuple && t.kind != Kind::kList) throw DataError(source + ": bad array shape");
  for (const auto& d : t.items) shape.push_back(static_cast<std::size_t>(d->integer()));
  return shape;
}

class Machine {
 public:
  Machine(const std::string& bytes, std::string source) : in_(bytes), source_(std::move(source)) {}

  ValuePtr run() {
    while (true) {
      const auto op = static_cast<unsigned char>(take(1)[0]);
      switch (op) {
        case 0x80: take(1); break;                      // PROTO
        case 0x95: take(8); break;                      // FRAME
        case '.': return pop();                         // STOP
        case '(': marks_.push_back(stack_.size()); break;
        case '0': pop(); break;
        case '1': pop_mark(); break;
        case '2': push(top()); break;
        case 'N': push(make(Kind::kNone)); break;
        case 0x88: case 0x89: {
          auto v = make(Kind::kBool);
          v->b = op == 0x88;
          push(v);
          break;
        }
        case 'J': push(make_int(static_cast<std::int32_t>(le(4)))); break;
        case 'K': push(make_int(static_cast<std::int64_t>(le(1)))); break;
        case 'M': push(make_int(static_cast<std::int64_t>(le(2)))); break;
        case 0x8a: push(make_int(long_bytes(le(1)))); break;
        case 0x8b: push(make_int(long_bytes(le(4)))); break;
        case 'I': {
          const std::string line = readline();
          if (line == "01" || line == "00") {
            auto v = make(Kind::kBool);
            v->b = line == "01";
            push(v);
          } else {
            push(make_int(std::stoll(line)));
          }
          break;
        }
        case 'L': {
          std::string line = readline();
          if (!line.empty() && line.back() == 'L') line.pop_back();
          push(make_int(std::stoll(line)));
          break;
        }
        case 'F': push(make_float(std::stod(readline()))); break;
        case 'G': {
          const std::string b = take(8);
          std::uint64_t u = 0;
          for (int k = 0; k < 8; ++k) u = (u << 8) | static_cast<unsigned char>(b[k]);
          push(make_float(std::bit_cast<double>(u)));
          break;
        }
        case 'X': push(make_str(Kind::kStr, take(le(4)))); break;
        case 0x8c: push(make_str(Kind::kStr, take(le(1)))); break;
        case 0x8d: push(make_str(Kind::kStr, take(le(8)))); break;
        case 'V': push(make_str(Kind::kStr, readline())); break;
        case 'T': push(make_str(Kind::kBytes, take(le(4)))); break;
        case 'U': push(make_str(Kind::kBytes, take(le(1)))); break;
        case 'B': push(make_str(Kind::kBytes, take(le(4)))); break;
        case 'C': push(make_str(Kind::kBytes, take(le(1)))); break;
        case 0x8e: push(make_str(Kind::kBytes, take(le(8)))); break;
        case 0x96: push(make_str(Kind::kBytes, take(le(8)))); break;
        case 'S': push(make_str(Kind::kBytes, unquote(readline()))); break;
        case ')': push(make(Kind::kTuple)); break;
        case ']': push(make(Kind::kList)); break;
        case '}': push(make(Kind::kDict)); break;
        case 0x8f: push(make(Kind::kSet)); break;
        case 't': {
          auto v = make(Kind::kTuple);
          v->items = pop_mark();
          push(v);
          break;
        }
        case 0x85: case 0x86: case 0x87: {
          auto v = make(Kind::kTuple);
          v->items.resize(op - 0x84);
          for (auto it = v->items.rbegin(); it != v->items.rend(); ++it) *it = pop();
          push(v);
          break;
        }
        case 'l': {
          auto v = make(Kind::kList);
          v->items = pop_mark();
          push(v);
          break;
        }
        case 0x91: {
          auto v = make(Kind::kSet);
          v->items = pop_mark();
          push(v);
          break;
        }
        case 'd': {
          auto v = make(Kind::kDict);
          const auto items = pop_mark();
          pairs_into(*v, items);
          push(v);
          break;
        }
        case 'a': {
          auto item = pop();
          append(top(), {item});
          break;
        }
        case 'e': {
          auto items = pop_mark();
          append(top(), items);
          break;
        }
        case 0x90: {
          auto items = pop_mark();
          append(top(), items);
          break;
        }
        case 's': {
          auto value = pop();
          auto key = pop();
          pairs_into(*top(), {key, value});
          break;
        }
        case 'u': {
          auto items = pop_mark();
          pairs_into(*top(), items);
          break;
        }
        case 'p': memo_[std::stoul(readline())] = top(); break;
        case 'q': memo_[le(1)] = top(); break;
        case 'r': memo_[le(4)] = top(); break;
        case 0x94: memo_[memo_.size()] = top(); break;
        case 'g': push(memo(std::stoul(readline()))); break;
        case 'h': push(memo(le(1))); break;
        case 'j': push(memo(le(4))); break;
        case 'c': {
          std::string module = readline();
          std::string name = readline();
          push(make_str(Kind::kGlobal, module + "." + name));
          break;
        }
        case 0x93: {
          auto name = pop();
          auto module = pop();
          push(make_str(Kind::kGlobal, module->s + "." + name->s));
          break;
        }
        case 'R': {
          auto args = pop();
          auto callable = pop();
          push(reduce(callable, args));
          break;
        }
        case 0x81: {
          auto args = pop();
          auto cls = pop();
          push(instantiate(cls, args));
          break;
        }
        case 0x92: {
          pop();  // kwargs
          auto args = pop();
          auto cls = pop();
          push(instantiate(cls, args));
          break;
        }
        case 'b': {
          auto state = pop();
          build(top(), state);
          break;
        }
        default: {
          char hex[8];
          std::snprintf(hex, sizeof(hex), "0x%02x", op);
          throw DataError(source_ + ": unsupported pickle opcode " + hex + " at byte " +
                          std::to_string(pos_ - 1));
        }
      }
    }
  }

 private:
  std::string take(std::uint64_t n) {
    if (n > in_.size() - pos_) throw DataError(source_ + ": truncated pickle stream");
    std::string out = in_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint64_t le(int n) {
    const std::string b = take(n);
    std::uint64_t u = 0;
    for (int k = n - 1; k >= 0; --k) u = (u << 8) | static_cast<unsigned char>(b[k]);
    return u;
  }

  std::int64_t long_bytes(std::uint64_t n) {
    if (n > 8) throw DataError(source_ + ": integer too large");
    if (n == 0) return 0;
    const std::string b = take(n);
    std::uint64_t u = 0;
    for (std::size_t k = n; k-- > 0;) u = (u << 8) | static_cast<unsigned char>(b[k]);
    if (n < 8 && (static_cast<unsigned char>(b[n - 1]) & 0x80)) u |= ~std::uint64_t{0} << (8 * n);
    return static_cast<std::int64_t>(u);
  }

  std::string readline() {
    const auto nl = in_.find('\n', pos_);
    if (nl == std::string::npos) throw DataError(source_ + ": truncated pickle stream");
    std::string line = in_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  std::string unquote(const std::string& s) {
    if (s.size() >= 2 && (s[0] == '\'' || s[0] == '"') && s.back() == s[0]) {
      return s.substr(1, s.size() - 2);
    }
    throw DataError(source_ + ": unsupported quoted string");
  }

  void push(ValuePtr v) { stack_.push_back(std::move(v)); }

  ValuePtr pop() {
    if (stack_.empty() || (!marks_.empty() && stack_.size() <= marks_.back())) {
      throw DataError(source_ + ": pickle stack underflow");
    }
    auto v = std::move(stack_.back());
    stack_.pop_back();
    return v;
  }

  const ValuePtr& top() {
    if (stack_.empty()) throw DataError(source_ + ": pickle stack underflow");
    return stack_.back();
  }

  std::vector<ValuePtr> pop_mark() {
    if (marks_.empty()) throw DataError(source_ + ": pickle mark missing");
    const std::size_t m = marks_.back();
    marks_.pop_back();
    std::vector<ValuePtr> items(stack_.begin() + static_cast<std::ptrdiff_t>(m), stack_.end());
    stack_.resize(m);
    return items;
  }

  ValuePtr memo(std::uint64_t k) {
    const auto it = memo_.find(k);
    if (it == memo_.end()) throw DataError(source_ + ": pickle memo miss");
    return it->second;
  }

  void append(const ValuePtr& target, const std::vector<ValuePtr>& items) {
    if (target->kind != Kind::kList && target->kind != Kind::kSet) {
      throw DataError(source_ + ": append to a " + describe(target->kind));
    }
    target->items.insert(target->items.end(), items.begin(), items.end());
  }

  void pairs_into(Value& target, const std::vector<ValuePtr>& items) {
    if (target.kind != Kind::kDict && target.kind != Kind::kObject) {
      throw DataError(source_ + ": setitem on a " + describe(target.kind));
    }
    if (items.size() % 2 != 0) throw DataError(source_ + ": odd number of dict items");
    for (std::size_t k = 0; k < items.size(); k += 2) target.entries.emplace_back(items[k], items[k + 1]);
  }

  const ValuePtr& arg(const ValuePtr& args, std::size_t k) {
    if (args->kind != Kind::kTuple || args->items.size() <= k) {
      throw DataError(source_ + ": unexpected call arguments");
    }
    return args->items[k];
  }

  ValuePtr instantiate(const ValuePtr& cls, const ValuePtr& args) {
    if (cls->kind != Kind::kGlobal) throw DataError(source_ + ": NEWOBJ on a non-class");
    const std::string& name = cls->s;
    if (name == "builtins.set" || name == "builtins.frozenset" || name == "__builtin__.set" ||
        name == "__builtin__.frozenset") {
      auto v = make(Kind::kSet);
      if (!args->items.empty()) v->items = arg(args, 0)->items;
      return v;
    }
    if (name == "collections.OrderedDict" || name == "builtins.dict") return make(Kind::kDict);
    auto v = make(Kind::kObject);
    v->cls = cls;
    v->items = args->items;
    return v;
  }

  ValuePtr reduce(const ValuePtr& callable, const ValuePtr& args) {
    if (callable->kind != Kind::kGlobal) throw DataError(source_ + ": call of a non-global");
    const std::string& name = callable->s;
    if (ends_with(name, "multiarray._reconstruct")) {
      auto v = make(Kind::kArray);
      v->cls = arg(args, 0);
      return v;
    }
    if (name == "numpy.dtype") {
      auto v = make(Kind::kDtype);
      v->s = arg(args, 0)->s;
      return v;
    }
    if (ends_with(name, "._frombuffer")) {
      auto v = make(Kind::kArray);
      const auto& buf = arg(args, 0);
      const auto& order = arg(args, 3);
      fill_array(*v, shape_of(*arg(args, 2), source_), *arg(args, 1), buf->s,
                 order->s == "F", source_);
      return v;
    }
    if (ends_with(name, "multiarray.scalar")) {
      auto arr = make(Kind::kArray);
      fill_array(*arr, {}, *arg(args, 0), arg(args, 1)->s, false, source_);
      return arr->s[0] == 'f' ? make_float(arr->data[0])
                              : make_int(static_cast<std::int64_t>(arr->data[0]));
    }
    if (name == "_codecs.encode") {
      return make_str(Kind::kBytes, latin1_bytes(arg(args, 0)->s, source_));
    }
    if (name == "builtins.bytearray" || name == "builtins.bytes") {
      if (args->items.empty()) return make_str(Kind::kBytes, "");
      const auto& a = arg(args, 0);
      if (a->kind == Kind::kStr) return make_str(Kind::kBytes, latin1_bytes(a->s, source_));
      return make_str(Kind::kBytes, a->s);
    }
    if (name == "copyreg._reconstructor") return instantiate(arg(args, 0), make(Kind::kTuple));
    if (name == "copyreg.__newobj__") {
      auto rest = make(Kind::kTuple);
      rest->items.assign(args->items.begin() + 1, args->items.end());
      return instantiate(arg(args, 0), rest);
    }
    return instantiate(callable, args);
  }

  void build(const ValuePtr& target, const ValuePtr& state) {
    switch (target->kind) {
      case Kind::kArray: {
        // (version, shape, dtype, is_fortran, raw)
        if (state->kind != Kind::kTuple || state->items.size() < 5) {
          throw DataError(source_ + ": unexpected array state");
        }
        const auto& raw = state->items[4];
        if (raw->kind == Kind::kList) {
          throw DataError(source_ + ": object arrays are not supported");
        }
        const std::string bytes =
            raw->kind == Kind::kStr ? latin1_bytes(raw->s, source_) : raw->s;
        fill_array(*target, shape_of(*state->items[1], source_), *state->items[2], bytes,
                   state->items[3]->kind == Kind::kBool && state->items[3]->b, source_);
        break;
      }
      case Kind::kDtype:
        if (state->kind == Kind::kTuple && state->items.size() > 1 &&
            state->items[1]->kind == Kind::kStr && !state->items[1]->s.empty()) {
          target->byteorder = state->items[1]->s[0];
        }
        break;
      case Kind::kObject:
        if (state->kind == Kind::kDict) {
          target->entries.insert(target->entries.end(), state->entries.begin(), state->entries.end());
        } else if (state->kind == Kind::kTuple) {
          for (const auto& part : state->items) {
            if (part->kind == Kind::kDict) {
              target->entries.insert(target->entries.end(), part->entries.begin(), part->entries.end());
            }
          }
        }
        break;
      default:
        break;
    }
  }

  const std::string& in_;
  std::string source_;
  std::size_t pos_ = 0;
  std::vector<ValuePtr> stack_;
  std::vector<std::size_t> marks_;
  std::unordered_map<std::uint64_t, ValuePtr> memo_;
};

}  // namespace

double Value::number() const {
  switch (kind) {
    case Kind::kInt: return static_cast<double>(i);
    case Kind::kFloat: return f;
    case Kind::kBool: return b ? 1.0 : 0.0;
    default: throw DataError("expected a number, found " + describe(kind));
  }
}

std::int64_t Value::integer() const {
  if (kind == Kind::kInt) return i;
  if (kind == Kind::kBool) return b ? 1 : 0;
  if (kind == Kind::kFloat && f == std::floor(f)) return static_cast<std::int64_t>(f);
  throw DataError("expected an integer, found " + describe(kind));
}

const ValuePtr* Value::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if ((k->kind == Kind::kStr || k->kind == Kind::kBytes) && k->s == key) return &v;
  }
  return nullptr;
}

std::string describe(Kind kind) {
  switch (kind) {
    case Kind::kNone: return "None";
    case Kind::kBool: return "bool";
    case Kind::kInt: return "int";
    case Kind::kFloat: return "float";
    case Kind::kStr: return "str";
    case Kind::kBytes: return "bytes";
    case Kind::kList: return "list";
    case Kind::kTuple: return "tuple";
    case Kind::kDict: return "dict";
    case Kind::kSet: return "set";
    case Kind::kGlobal: return "global";
    case Kind::kDtype: return "dtype";
    case Kind::kArray: return "ndarray";
    case Kind::kObject: return "object";
  }
  return "unknown";
}

ValuePtr loads(const std::string& bytes, const std::string& source) {
  Machine m(bytes, source);
  try {
    return m.run();
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(source + ": malformed pickle: " + e.what());
  }
}

ValuePtr load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return loads(ss.str(), path.string());
}

}  // namespace hnn::pickle

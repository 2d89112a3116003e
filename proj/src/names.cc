// Copyright 2026 The hammerkit Authors.
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

#include "hammerkit/names.h"

#include <cctype>

#include "hammerkit/hol.h"

namespace hammerkit::tptp {

std::string mangle(std::string_view name) {
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(name.size() + 4);
  for (char ch : name) {
    const auto byte = static_cast<unsigned char>(ch);
    if (std::isalnum(byte)) {
      out += ch;
    } else if (ch == '_') {
      out += "u_";
    } else {
      out += 'u';
      out += kHex[byte >> 4];
      out += kHex[byte & 0xf];
      out += '_';
    }
  }
  return out;
}

std::string lower_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string upper_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string axiom_label(std::string_view name) { return "a" + mangle(name); }

std::string export_name(const std::string& id) {
  if (id == hol::logic::kTrue) return "T";
  if (id == hol::logic::kFalse) return "F";
  return id;
}

}  // namespace hammerkit::tptp

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

#ifndef HAMMERKIT_NAMES_H_
#define HAMMERKIT_NAMES_H_

#include <string>
#include <string_view>

namespace hammerkit::tptp {

// Escapes a HOL name into TPTP word characters: `_` becomes `u_`, any other
// non-alphanumeric byte becomes `u` followed by two hex digits and `_`.
// REAL_INV_INV -> REALu_INVu_INV.
std::string mangle(std::string_view name);

std::string lower_first(std::string s);
std::string upper_first(std::string s);

// Formula label for a named fact: `a` + mangled name.
std::string axiom_label(std::string_view name);

// Export name of a constant id (the truth values print as T and F).
std::string export_name(const std::string& id);

}  // namespace hammerkit::tptp

#endif  // HAMMERKIT_NAMES_H_

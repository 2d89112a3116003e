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

// String features of a statement: type constructors, constants, atomic
// formulas and their argument subterms, all printed after type-variable and
// term-variable normalization.
//
// Terms print in prefix form with constants bare: `(real_lt x e)`. A
// variable prints as its normalized name, which depends on the mode:
//   syms0  every variable is A0
//   syms   free variables A0, A1, ... first; a bound variable is numbered
//          by its scope depth after them
//   symst  A followed by the type, type variables all printed as A
//   symsd  as symst, but type variables numbered A0, A1, ... per statement

#ifndef HAMMERKIT_FEATURES_H_
#define HAMMERKIT_FEATURES_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hammerkit/hol.h"

namespace hammerkit::corpus {
class Corpus;
}

namespace hammerkit::features {

enum class NormMode { kSyms0, kSyms, kSymst, kSymsd };

std::string mode_name(NormMode mode);
NormMode parse_mode(const std::string& name);

// Sorted, duplicate-free.
using FeatureSet = std::vector<std::string>;

struct FeatureCounts {
  std::map<std::string, int> counts;
  FeatureSet set() const;
};

FeatureCounts extract_feature_counts(const hol::Term& statement, NormMode mode,
                                     bool include_trivial = false);
FeatureSet extract_features(const hol::Term& statement, NormMode mode,
                            bool include_trivial = false);

// One `name: "f1", "f2", ...` line per entry, chronological order.
void write_feature_file(const corpus::Corpus& corpus, NormMode mode, bool include_trivial,
                        std::ostream& out);

struct NamedFeatures {
  std::string name;
  FeatureSet features;
};
std::vector<NamedFeatures> read_feature_file(std::istream& in);

}  // namespace hammerkit::features

#endif  // HAMMERKIT_FEATURES_H_

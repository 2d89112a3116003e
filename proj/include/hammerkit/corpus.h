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

// The ordered theorem library.
//
// Ingestion is one pass over the statements file in chronological order:
// parse, beta-normalize, split top-level conjunctions, collapse alpha-equal
// duplicates onto their first name, then attach dependency records resolved
// through the alias table. After ingestion the signature is sealed and the
// corpus is immutable.

#ifndef HAMMERKIT_CORPUS_H_
#define HAMMERKIT_CORPUS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hammerkit/hol.h"
#include "hammerkit/hol_parser.h"
#include "hammerkit/translate.h"

namespace hammerkit::corpus {

enum class Kind { kProved, kDefinition };

struct TheoremEntry {
  std::string name;
  std::size_t index = 0;
  hol::Term statement;
  Kind kind = Kind::kDefinition;
};

struct DepRecord {
  std::string name;
  std::vector<std::string> deps;
};

class ChronologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splits `!xs. c0 /\ c1 /\ ...` into `<name>_conjunctN` entries, each closed
// only over the binders free in it. The index of every piece is copied from
// `entry`; the caller renumbers.
std::vector<TheoremEntry> split_conjuncts(const TheoremEntry& entry);

// Raw dependency graph over integer ids; ids absent from `names` are unnamed.
using RawDeps = std::map<long, std::vector<long>>;

// For every named id with a record, its dependencies with unnamed ids
// replaced recursively by their own dependencies, deduplicated in order of
// first appearance. Throws CycleError on a cyclic raw graph.
std::map<long, std::vector<long>> expand_unnamed(const RawDeps& raw,
                                                 const std::map<long, std::string>& names);

// `name: dep1 dep2 ...` lines.
std::vector<DepRecord> read_dep_lines(std::istream& in);

// Facts with no first-order content that are dropped from problems.
const std::vector<std::string>& default_trivial_names();

struct ProblemInput {
  hol::Term goal;
  std::vector<tptp::NamedFormula> premises;
};

class Corpus {
 public:
  // Builds a corpus from already-read inputs. `sig` may be preloaded; it is
  // used in open mode during ingestion and sealed afterwards.
  static Corpus ingest(const std::vector<hol::Statement>& statements,
                       const std::vector<DepRecord>& deps,
                       const std::vector<std::string>& trivial,
                       hol::Signature sig = hol::Signature());

  static Corpus ingest_files(const std::string& statements_path, const std::string& deps_path,
                             const std::string& trivial_path,
                             const std::string& signature_path = "");

  const std::vector<TheoremEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const TheoremEntry& at(std::size_t index) const { return entries_.at(index); }
  const TheoremEntry* find(const std::string& name) const;
  const TheoremEntry& get(const std::string& name) const;  // throws CorpusError

  // Canonical entry names that `name` stands for: itself, its first-name
  // alias, or all its conjuncts. Empty if unknown.
  std::vector<std::string> resolve(const std::string& name) const;

  // Dependencies of a proved entry (canonical names); nullptr otherwise.
  const std::vector<std::string>* deps(const std::string& name) const;
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  bool is_trivial(const std::string& name) const { return trivial_.count(name) > 0; }
  const std::set<std::string>& trivial() const { return trivial_; }

  const hol::Signature& signature() const { return sig_; }
  hol::Signature& mutable_signature() { return sig_; }

  ProblemInput build_reproving_input(const std::string& name) const;
  ProblemInput build_advised_input(const std::string& name,
                                   const std::vector<std::string>& ranking,
                                   std::size_t slice) const;

  void save(std::ostream& out) const;
  static Corpus load(std::istream& in);
  void save_file(const std::string& path) const;
  static Corpus load_file(const std::string& path);

 private:
  void index_names();
  void check_chronology() const;

  hol::Signature sig_;
  std::vector<TheoremEntry> entries_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::vector<std::string>> deps_;
  std::map<std::string, std::string> aliases_;
  std::map<std::string, std::vector<std::string>> splits_;
  std::set<std::string> trivial_;
};

}  // namespace hammerkit::corpus

#endif  // HAMMERKIT_CORPUS_H_

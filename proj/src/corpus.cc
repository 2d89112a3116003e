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

#include "hammerkit/corpus.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace hammerkit::corpus {

using hol::Term;

std::vector<TheoremEntry> split_conjuncts(const TheoremEntry& entry) {
  auto [vars, body] = hol::strip_forall(entry.statement);
  std::vector<Term> parts = hol::conjuncts(body);
  if (parts.size() <= 1) return {entry};
  std::vector<TheoremEntry> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<Term> keep;
    for (const auto& v : vars) {
      if (hol::occurs_free(v, parts[k])) keep.push_back(v);
    }
    out.push_back({entry.name + "_conjunct" + std::to_string(k), entry.index,
                   hol::list_mk_forall(keep, parts[k]), entry.kind});
  }
  return out;
}

std::map<long, std::vector<long>> expand_unnamed(const RawDeps& raw,
                                                 const std::map<long, std::string>& names) {
  enum class Mark { kNone, kActive, kDone };
  std::map<long, Mark> mark;
  std::function<void(long)> visit = [&](long id) {
    Mark& m = mark[id];
    if (m == Mark::kDone) return;
    if (m == Mark::kActive) throw CycleError("cyclic dependency through id " + std::to_string(id));
    m = Mark::kActive;
    if (auto it = raw.find(id); it != raw.end()) {
      for (long d : it->second) visit(d);
    }
    mark[id] = Mark::kDone;
  };
  for (const auto& [id, deps] : raw) visit(id);

  std::map<long, std::vector<long>> memo;
  std::function<const std::vector<long>&(long)> expand = [&](long id) -> const std::vector<long>& {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    std::vector<long> out;
    std::set<long> seen;
    if (auto it = raw.find(id); it != raw.end()) {
      for (long d : it->second) {
        if (names.count(d)) {
          if (seen.insert(d).second) out.push_back(d);
        } else {
          for (long e : expand(d)) {
            if (seen.insert(e).second) out.push_back(e);
          }
        }
      }
    }
    return memo[id] = std::move(out);
  };

  std::map<long, std::vector<long>> result;
  for (const auto& [id, deps] : raw) {
    if (names.count(id)) result[id] = expand(id);
  }
  return result;
}

std::vector<DepRecord> read_dep_lines(std::istream& in) {
  std::vector<DepRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw CorpusError("dependency line " + std::to_string(lineno) + " lacks ':'");
    }
    DepRecord rec;
    std::istringstream owner(line.substr(0, colon));
    owner >> rec.name;
    if (rec.name.empty()) throw CorpusError("empty theorem name on line " + std::to_string(lineno));
    std::istringstream rest(line.substr(colon + 1));
    std::string dep;
    while (rest >> dep) rec.deps.push_back(dep);
    out.push_back(std::move(rec));
  }
  return out;
}

const std::vector<std::string>& default_trivial_names() {
  static const std::vector<std::string> kNames = {
      "T_DEF",       "TRUTH",      "AND_DEF",   "IMP_DEF",     "FORALL_DEF",
      "EXISTS_DEF",  "OR_DEF",     "F_DEF",     "NOT_DEF",     "EXISTS_UNIQUE_DEF",
      "REFL_CLAUSE", "EQ_CLAUSES", "IMP_CLAUSES", "AND_CLAUSES", "OR_CLAUSES",
      "NOT_CLAUSES", "BOOL_CASES_AX", "EQ_EXT", "ETA_AX", "SELECT_AX",
      "EQ_REFL", "EQ_SYM_EQ", "FORALL_SIMP", "EXISTS_SIMP", "TAUT"};
  return kNames;
}

Corpus Corpus::ingest(const std::vector<hol::Statement>& statements,
                      const std::vector<DepRecord>& deps, const std::vector<std::string>& trivial,
                      hol::Signature sig) {
  Corpus c;
  c.sig_ = std::move(sig);
  c.sig_.set_mode(hol::Signature::Mode::kOpen);
  std::map<std::string, std::string> first_by_key;
  std::set<std::string> seen_names;
  for (const auto& st : statements) {
    if (!seen_names.insert(st.name).second) throw CorpusError("duplicate theorem name " + st.name);
    Term t = hol::beta_normalize(hol::parse_term(st.text, c.sig_));
    if (!t.type().is_bool()) throw CorpusError("statement " + st.name + " is not boolean");
    std::vector<TheoremEntry> pieces = split_conjuncts({st.name, 0, t, Kind::kDefinition});
    if (pieces.size() > 1) {
      for (const auto& p : pieces) c.splits_[st.name].push_back(p.name);
    }
    for (auto& p : pieces) {
      const std::string key = hol::print_term(p.statement);
      auto [it, fresh] = first_by_key.emplace(key, p.name);
      if (!fresh) {
        c.aliases_[p.name] = it->second;
        continue;
      }
      p.index = c.entries_.size();
      c.entries_.push_back(std::move(p));
    }
  }
  c.index_names();

  for (const auto& rec : deps) {
    if (c.aliases_.count(rec.name)) continue;  // records of duplicates are dropped
    std::vector<std::string> owners = c.resolve(rec.name);
    if (owners.empty()) throw CorpusError("dependency record for unknown theorem " + rec.name);
    std::vector<std::string> resolved;
    for (const auto& d : rec.deps) {
      std::vector<std::string> r = c.resolve(d);
      if (r.empty()) throw CorpusError("unknown dependency " + d + " of " + rec.name);
      for (auto& n : r) {
        if (std::find(resolved.begin(), resolved.end(), n) == resolved.end()) {
          resolved.push_back(std::move(n));
        }
      }
    }
    for (const auto& owner : owners) {
      std::vector<std::string> own;
      for (const auto& n : resolved) {
        if (n != owner) own.push_back(n);
      }
      c.entries_[c.by_name_.at(owner)].kind = Kind::kProved;
      c.deps_[owner] = std::move(own);
    }
  }
  for (const auto& name : trivial) {
    for (auto& n : c.resolve(name)) c.trivial_.insert(std::move(n));
  }
  c.check_chronology();
  c.sig_.set_mode(hol::Signature::Mode::kSealed);
  return c;
}

namespace {

std::vector<std::string> read_name_lines(const std::string& path) {
  std::vector<std::string> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    if (ls >> name && name[0] != '#') out.push_back(name);
  }
  return out;
}

}  // namespace

Corpus Corpus::ingest_files(const std::string& statements_path, const std::string& deps_path,
                            const std::string& trivial_path, const std::string& signature_path) {
  hol::Signature sig;
  if (!signature_path.empty()) {
    std::ifstream in(signature_path);
    if (!in) throw CorpusError("cannot open " + signature_path);
    sig.load(in);
  }
  std::ifstream st(statements_path);
  if (!st) throw CorpusError("cannot open " + statements_path);
  std::ifstream dp(deps_path);
  if (!dp) throw CorpusError("cannot open " + deps_path);
  std::vector<std::string> trivial =
      trivial_path.empty() ? default_trivial_names() : read_name_lines(trivial_path);
  return ingest(hol::read_statement_lines(st), read_dep_lines(dp), trivial, std::move(sig));
}

void Corpus::index_names() {
  by_name_.clear();
  for (const auto& e : entries_) by_name_.emplace(e.name, e.index);
}

void Corpus::check_chronology() const {
  for (const auto& [owner, ds] : deps_) {
    const std::size_t oi = by_name_.at(owner);
    for (const auto& d : ds) {
      if (by_name_.at(d) >= oi) {
        throw ChronologyError("dependency " + d + " of " + owner + " is not earlier");
      }
    }
  }
}

const TheoremEntry* Corpus::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &entries_[it->second];
}

const TheoremEntry& Corpus::get(const std::string& name) const {
  const TheoremEntry* e = find(name);
  if (!e) throw CorpusError("unknown theorem " + name);
  return *e;
}

std::vector<std::string> Corpus::resolve(const std::string& name) const {
  if (by_name_.count(name)) return {name};
  if (auto it = aliases_.find(name); it != aliases_.end()) return {it->second};
  std::vector<std::string> out;
  if (auto it = splits_.find(name); it != splits_.end()) {
    for (const auto& piece : it->second) {
      for (auto& n : resolve(piece)) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
      }
    }
  }
  return out;
}

const std::vector<std::string>* Corpus::deps(const std::string& name) const {
  auto it = deps_.find(name);
  return it == deps_.end() ? nullptr : &it->second;
}

ProblemInput Corpus::build_reproving_input(const std::string& name) const {
  const TheoremEntry& e = get(name);
  if (e.kind != Kind::kProved) throw CorpusError(name + " is a definition or axiom");
  ProblemInput out{e.statement, {}};
  for (const auto& d : deps_.at(name)) {
    if (!is_trivial(d)) out.premises.push_back({d, get(d).statement});
  }
  return out;
}

ProblemInput Corpus::build_advised_input(const std::string& name,
                                         const std::vector<std::string>& ranking,
                                         std::size_t slice) const {
  const TheoremEntry& e = get(name);
  ProblemInput out{e.statement, {}};
  for (const auto& r : ranking) {
    const TheoremEntry& p = get(r);
    if (p.index >= e.index) {
      throw ChronologyError("ranking for " + name + " contains later theorem " + r);
    }
  }
  const std::size_t n = std::min(slice, ranking.size());
  for (std::size_t k = 0; k < n; ++k) out.premises.push_back({ranking[k], get(ranking[k]).statement});
  return out;
}

namespace {

constexpr char kMagic[8] = {'H', 'K', 'C', 'O', 'R', 'P', 'U', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw CorpusError("truncated corpus cache");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::string get_str(std::istream& in) {
  std::string s(get_u32(in), '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(s.size()))) {
    throw CorpusError("truncated corpus cache");
  }
  return s;
}

void put_names(std::ostream& out, const std::vector<std::string>& names) {
  put_u32(out, static_cast<std::uint32_t>(names.size()));
  for (const auto& n : names) put_str(out, n);
}

std::vector<std::string> get_names(std::istream& in) {
  std::vector<std::string> out(get_u32(in));
  for (auto& n : out) n = get_str(in);
  return out;
}

}  // namespace

void Corpus::save(std::ostream& out) const {
  out.write(kMagic, sizeof kMagic);
  put_u32(out, kVersion);
  std::ostringstream sig_text;
  sig_.save(sig_text);
  put_str(out, sig_text.str());
  put_u32(out, static_cast<std::uint32_t>(entries_.size()));
  for (const auto& e : entries_) {
    put_str(out, e.name);
    put_u32(out, e.kind == Kind::kProved ? 1 : 0);
    put_str(out, hol::print_term(e.statement, {.rename_bound = false}));
  }
  put_u32(out, static_cast<std::uint32_t>(deps_.size()));
  for (const auto& [name, ds] : deps_) {
    put_str(out, name);
    put_names(out, ds);
  }
  put_u32(out, static_cast<std::uint32_t>(aliases_.size()));
  for (const auto& [from, to] : aliases_) {
    put_str(out, from);
    put_str(out, to);
  }
  put_u32(out, static_cast<std::uint32_t>(splits_.size()));
  for (const auto& [name, pieces] : splits_) {
    put_str(out, name);
    put_names(out, pieces);
  }
  put_names(out, std::vector<std::string>(trivial_.begin(), trivial_.end()));
}

Corpus Corpus::load(std::istream& in) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic)) {
    throw CorpusError("not a corpus cache");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kVersion) {
    throw CorpusError("unsupported corpus cache version " + std::to_string(version));
  }
  Corpus c;
  std::istringstream sig_text(get_str(in));
  c.sig_.load(sig_text);
  c.sig_.set_mode(hol::Signature::Mode::kSealed);
  const std::uint32_t n = get_u32(in);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::string name = get_str(in);
    const Kind kind = get_u32(in) ? Kind::kProved : Kind::kDefinition;
    Term statement = hol::parse_term(get_str(in), c.sig_);
    c.entries_.push_back({std::move(name), k, std::move(statement), kind});
  }
  for (std::uint32_t k = 0, m = get_u32(in); k < m; ++k) {
    std::string name = get_str(in);
    c.deps_[name] = get_names(in);
  }
  for (std::uint32_t k = 0, m = get_u32(in); k < m; ++k) {
    std::string from = get_str(in);
    c.aliases_[from] = get_str(in);
  }
  for (std::uint32_t k = 0, m = get_u32(in); k < m; ++k) {
    std::string name = get_str(in);
    c.splits_[name] = get_names(in);
  }
  for (auto& t : get_names(in)) c.trivial_.insert(std::move(t));
  c.index_names();
  c.check_chronology();
  return c;
}

void Corpus::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write " + path);
  save(out);
}

Corpus Corpus::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path);
  return load(in);
}

}  // namespace hammerkit::corpus

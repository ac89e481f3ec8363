#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "implab/canonical.hpp"
#include "implab/graph.hpp"
#include "implab/io.hpp"

#ifndef IMPLAB_DEFAULT_FIXTURE_DIR
#define IMPLAB_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace implab {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// IMPLAB_FIXTURE_DIR when set, else the directory baked in at build time.
inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("IMPLAB_FIXTURE_DIR"); env && *env) return env;
  return IMPLAB_DEFAULT_FIXTURE_DIR;
}

/// Lines of "graph6 [name]"; '#' starts a comment. Unnamed graphs are numbered.
inline std::vector<NamedGraph> parse_fixture_set(const std::string& text) {
  std::vector<NamedGraph> out;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string code, name;
    if (!(fields >> code)) continue;
    std::getline(fields >> std::ws, name);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    try {
      NamedGraph ng{name.empty() ? "#" + std::to_string(out.size() + 1) : name, graph6::decode(code)};
      out.push_back(std::move(ng));
    } catch (const ParseError& e) {
      throw ParseError(std::string("fixture line: ") + e.what(), line_start + e.offset());
    }
  }
  return out;
}

/// Loads `<dir>/<name>.g6`. Throws std::runtime_error when missing.
inline std::vector<NamedGraph> load_fixture_set(const std::string& name,
                                                const std::filesystem::path& dir = fixture_dir()) {
  const auto path = dir / (name + ".g6");
  std::ifstream file(path);
  if (!file) throw std::runtime_error("fixture set not found: " + path.string());
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_fixture_set(buf.str());
}

struct FixtureDiff {
  std::vector<std::string> matched;
  std::vector<std::string> missing;    // fixtures with no isomorphic candidate
  std::vector<std::size_t> unmatched;  // candidate indices with no isomorphic fixture

  bool exact() const { return missing.empty() && unmatched.empty(); }
};

/// Isomorphism-set comparison.
inline FixtureDiff diff_fixtures(const std::vector<Graph>& candidates, const std::vector<NamedGraph>& fixtures) {
  std::vector<CanonicalForm::Key> keys;
  for (const auto& g : candidates) keys.push_back(canonical_form(g).key());
  std::vector<bool> used(candidates.size(), false);
  FixtureDiff d;
  for (const auto& f : fixtures) {
    const auto key = canonical_form(f.graph).key();
    bool found = false;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) {
        used[i] = true;
        found = true;
      }
    }
    (found ? d.matched : d.missing).push_back(f.name);
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) d.unmatched.push_back(i);
  return d;
}

}  // namespace implab

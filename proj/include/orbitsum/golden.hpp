#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/monomial.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/poly_io.hpp"

namespace orbitsum {

/// `key = value` lines; `#` starts a comment. The `ring` entry lists the
/// variables, comma separated.
class GoldenFile {
 public:
  static GoldenFile load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::data_integrity, "cannot open golden file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
  }

  static GoldenFile parse(const std::string& text, const std::string& origin = "<text>") {
    GoldenFile g;
    g.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::parse, origin + ":" + std::to_string(lineno) + ": expected key = value");
      }
      g.entries_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    if (!g.entries_.count("ring")) throw Error(ErrorKind::parse, origin + ": missing ring entry");
    std::vector<std::string> names;
    std::istringstream rs(g.entries_["ring"]);
    for (std::string name; std::getline(rs, name, ',');) names.push_back(trim(name));
    g.ring_ = VarSet(names);
    return g;
  }

  const VarSet& ring() const { return ring_; }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw Error(ErrorKind::data_integrity, origin_ + ": no entry " + key);
    return it->second;
  }

  MultiPoly poly(const std::string& key) const { return parse_poly(text(key), ring_); }
  MultiPoly poly(const std::string& key, const VarSet& ring) const { return change_ring(poly(key), ring); }
  long integer(const std::string& key) const { return std::stol(text(key)); }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::string origin_;
  std::map<std::string, std::string> entries_;
  VarSet ring_{"x"};
};

}  // namespace orbitsum

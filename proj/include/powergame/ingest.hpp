#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "powergame/types.hpp"

namespace powergame {

// Maps external country codes to dense 0-based ids, assigned in order of
// first appearance so the same inputs always produce the same ids.
class SymbolTable {
 public:
  int intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }
  int lookup(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

struct RelationsResult {
  SignedNetwork net;
  SymbolTable symbols;
  std::vector<std::string> warnings;
};

// Builds a signed network from a dyadic-event CSV with header
// country_a,country_b,year,cooperation_count,conflict_count. Rows for the
// requested year are aggregated per unordered pair (counts summed); a pair
// becomes a positive edge when cooperation outscores conflict, negative when
// conflict outscores cooperation, and no edge on a tie.
RelationsResult load_relations(const std::string& path, int year);

struct PowersResult {
  PowerVector powers;
  std::vector<std::string> warnings;
};

// Loads per-country capabilities (header country,year,capability with
// capability in [0, 1]) and quantizes them: p_i = max(min_power,
// round(capability * scale)). Countries known to the symbol table but absent
// from the file fall back to min_power with a warning.
PowersResult load_powers(const std::string& path, int year, const SymbolTable& symbols,
                         double scale = 1000.0, int min_power = 1);

}  // namespace powergame

#include "powergame/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>

#include "powergame/io.hpp"

namespace powergame {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void check_header(const std::string& path, const std::string& line,
                  const std::vector<std::string>& expected) {
  const auto fields = split_csv_line(line);
  if (fields.size() != expected.size()) {
    throw Error(path + ": expected header with " + std::to_string(expected.size()) + " columns");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (lower(fields[i]) != expected[i]) {
      throw Error(path + ": expected header column '" + expected[i] + "', got '" + fields[i] + "'");
    }
  }
}

long long parse_count(const std::string& path, int line_no, const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    if (v < 0) throw Error(path + ":" + std::to_string(line_no) + ": negative count");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(path + ":" + std::to_string(line_no) + ": malformed integer '" + s + "'");
  }
}

}  // namespace

RelationsResult load_relations(const std::string& path, int year) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open relations file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty relations file: " + path);
  check_header(path, line,
               {"country_a", "country_b", "year", "cooperation_count", "conflict_count"});

  RelationsResult res;
  // ordered pair (minId, maxId) -> summed counts; std::map keeps edge
  // construction order deterministic.
  std::map<std::pair<int, int>, std::pair<long long, long long>> tallies;
  int line_no = 1;
  bool saw_year = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) {
      throw Error(path + ":" + std::to_string(line_no) + ": expected 5 fields, got " +
                  std::to_string(f.size()));
    }
    const long long row_year = parse_count(path, line_no, f[2]);
    if (row_year != year) continue;
    saw_year = true;
    if (f[0].empty() || f[1].empty()) {
      throw Error(path + ":" + std::to_string(line_no) + ": empty country name");
    }
    if (f[0] == f[1]) {
      throw Error(path + ":" + std::to_string(line_no) + ": self relation '" + f[0] + "'");
    }
    const long long coop = parse_count(path, line_no, f[3]);
    const long long conf = parse_count(path, line_no, f[4]);
    const int a = res.symbols.intern(f[0]);
    const int b = res.symbols.intern(f[1]);
    auto key = std::minmax(a, b);
    auto& t = tallies[{key.first, key.second}];
    t.first += coop;
    t.second += conf;
  }
  if (!saw_year) {
    res.warnings.push_back("no rows for year " + std::to_string(year) + "; network is empty");
  }

  std::vector<std::array<int, 3>> edges;
  for (const auto& [pair, counts] : tallies) {
    if (counts.first > counts.second) {
      edges.push_back({pair.first, pair.second, 1});
    } else if (counts.second > counts.first) {
      edges.push_back({pair.first, pair.second, -1});
    }
    // tie: neither side outscores, no edge
  }
  res.net = SignedNetwork::from_edges(res.symbols.size(), edges);
  return res;
}

PowersResult load_powers(const std::string& path, int year, const SymbolTable& symbols,
                         double scale, int min_power) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open capabilities file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty capabilities file: " + path);
  check_header(path, line, {"country", "year", "capability"});

  PowersResult res;
  res.powers.p.assign(symbols.size(), -1);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) {
      throw Error(path + ":" + std::to_string(line_no) + ": expected 3 fields, got " +
                  std::to_string(f.size()));
    }
    const long long row_year = parse_count(path, line_no, f[1]);
    if (row_year != year) continue;
    double capability = 0.0;
    try {
      std::size_t pos = 0;
      capability = std::stod(f[2], &pos);
      if (pos != f[2].size()) throw std::invalid_argument(f[2]);
    } catch (const std::exception&) {
      throw Error(path + ":" + std::to_string(line_no) + ": malformed capability '" + f[2] + "'");
    }
    if (capability < 0.0) {
      throw Error(path + ":" + std::to_string(line_no) + ": negative capability");
    }
    const int id = symbols.lookup(f[0]);
    if (id < 0) {
      res.warnings.push_back(path + ":" + std::to_string(line_no) + ": country '" + f[0] +
                             "' not present in relations; ignored");
      continue;
    }
    const int p = std::max(min_power, static_cast<int>(std::llround(capability * scale)));
    if (res.powers.p[id] != -1) {
      res.warnings.push_back(path + ":" + std::to_string(line_no) + ": duplicate entry for '" +
                             f[0] + "'; keeping the last value");
    }
    res.powers.p[id] = p;
  }
  for (int i = 0; i < symbols.size(); ++i) {
    if (res.powers.p[i] == -1) {
      res.powers.p[i] = min_power;
      res.warnings.push_back("country '" + symbols.names()[i] + "' missing capability for year " +
                             std::to_string(year) + "; defaulting to " +
                             std::to_string(min_power));
    }
  }
  return res;
}

}  // namespace powergame

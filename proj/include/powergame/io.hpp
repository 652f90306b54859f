#pragma once

#include <string>
#include <vector>

#include "powergame/types.hpp"

namespace powergame {

// Shared network file format: JSON {"n": int, "edges": [[i, j, sign], ...]}
// with sign in {+1, -1}; an optional "labels" array carries country names.
// Edge order in files is normalized to i < j, lexicographic.
struct NetworkFile {
  SignedNetwork net;
  std::vector<std::string> labels;  // empty when absent
};

void write_network_json(const std::string& path, const SignedNetwork& net,
                        const std::vector<std::string>& labels = {});
NetworkFile read_network_json(const std::string& path);

// Edge-list CSV with header "i,j,sign".
void write_network_csv(const std::string& path, const SignedNetwork& net);
SignedNetwork read_network_csv(const std::string& path);

// Powers CSV with header "node,power" and an optional third "country"
// column.
void write_powers_csv(const std::string& path, const std::vector<int>& powers,
                      const std::vector<std::string>& labels = {});
std::vector<int> read_powers_csv(const std::string& path);

// Strategy matrix JSON: {"n": int, "x": [[...], ...]}. Extra keys written by
// the CLI (states, iterations, ...) are ignored on read.
void write_matrix_json(const std::string& path, const StrategyMatrix& X);
StrategyMatrix read_matrix_json(const std::string& path);

// CSV field splitting shared with ingest: comma-separated, fields trimmed of
// surrounding whitespace and CR.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace powergame

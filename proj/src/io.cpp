#include "powergame/io.hpp"

#include <fstream>

#include "json.hpp"

namespace powergame {

namespace {

using nlohmann::json;

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file for reading: " + path);
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  return out;
}

json network_to_json(const SignedNetwork& net, const std::vector<std::string>& labels) {
  json j;
  j["n"] = net.n();
  j["edges"] = json::array();
  for (const auto& e : net.edges()) j["edges"].push_back({e[0], e[1], e[2]});
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

}  // namespace

void write_network_json(const std::string& path, const SignedNetwork& net,
                        const std::vector<std::string>& labels) {
  auto out = open_for_write(path);
  out << network_to_json(net, labels).dump(2) << "\n";
}

NetworkFile read_network_json(const std::string& path) {
  auto in = open_for_read(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) {
    throw Error("network file " + path + " must contain fields 'n' and 'edges'");
  }
  NetworkFile nf;
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw Error("bad edge entry in " + path);
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  nf.net = SignedNetwork::from_edges(j["n"].get<int>(), edges);
  if (j.contains("labels")) nf.labels = j["labels"].get<std::vector<std::string>>();
  return nf;
}

void write_network_csv(const std::string& path, const SignedNetwork& net) {
  auto out = open_for_write(path);
  out << "i,j,sign\n";
  for (const auto& e : net.edges()) out << e[0] << "," << e[1] << "," << e[2] << "\n";
}

SignedNetwork read_network_csv(const std::string& path) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty edge-list file: " + path);
  std::vector<std::array<int, 3>> edges;
  int n = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) throw Error(path + ":" + std::to_string(line_no) + ": expected i,j,sign");
    try {
      const int i = std::stoi(f[0]), j = std::stoi(f[1]), s = std::stoi(f[2]);
      edges.push_back({i, j, s});
      n = std::max({n, i + 1, j + 1});
    } catch (const std::exception&) {
      throw Error(path + ":" + std::to_string(line_no) + ": non-integer field");
    }
  }
  return SignedNetwork::from_edges(n, edges);
}

void write_powers_csv(const std::string& path, const std::vector<int>& powers,
                      const std::vector<std::string>& labels) {
  auto out = open_for_write(path);
  out << (labels.empty() ? "node,power" : "node,power,country") << "\n";
  for (std::size_t i = 0; i < powers.size(); ++i) {
    out << i << "," << powers[i];
    if (!labels.empty()) out << "," << labels[i];
    out << "\n";
  }
}

std::vector<int> read_powers_csv(const std::string& path) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty powers file: " + path);
  std::vector<std::pair<int, int>> entries;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() < 2) throw Error(path + ":" + std::to_string(line_no) + ": expected node,power");
    try {
      entries.emplace_back(std::stoi(f[0]), std::stoi(f[1]));
    } catch (const std::exception&) {
      throw Error(path + ":" + std::to_string(line_no) + ": non-integer field");
    }
  }
  int n = 0;
  for (const auto& [node, power] : entries) {
    (void)power;
    if (node < 0) throw Error("negative node id in " + path);
    n = std::max(n, node + 1);
  }
  std::vector<int> powers(n, -1);
  for (const auto& [node, power] : entries) {
    if (powers[node] != -1) throw Error("duplicate node id in " + path);
    powers[node] = power;
  }
  for (int i = 0; i < n; ++i) {
    if (powers[i] == -1) throw Error("missing node " + std::to_string(i) + " in " + path);
  }
  return powers;
}

void write_matrix_json(const std::string& path, const StrategyMatrix& X) {
  auto out = open_for_write(path);
  json j;
  j["n"] = X.n();
  j["x"] = json::array();
  for (int i = 0; i < X.n(); ++i) j["x"].push_back(X.row(i));
  out << j.dump(2) << "\n";
}

StrategyMatrix read_matrix_json(const std::string& path) {
  auto in = open_for_read(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("x")) {
    throw Error("matrix file " + path + " must contain fields 'n' and 'x'");
  }
  const int n = j["n"].get<int>();
  StrategyMatrix X(n);
  if (static_cast<int>(j["x"].size()) != n) throw Error("matrix row count mismatch in " + path);
  for (int i = 0; i < n; ++i) {
    const auto row = j["x"][i].get<std::vector<int>>();
    if (static_cast<int>(row.size()) != n) throw Error("matrix column count mismatch in " + path);
    X.set_row(i, row);
  }
  return X;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    while (!f.empty() && (f.back() == '\r' || f.back() == ' ' || f.back() == '\t')) f.pop_back();
    std::size_t b = 0;
    while (b < f.size() && (f[b] == ' ' || f[b] == '\t')) ++b;
    f = f.substr(b);
  }
  return out;
}

}  // namespace powergame

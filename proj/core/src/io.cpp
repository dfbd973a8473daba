#include "coverbound/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace coverbound {

namespace {

[[noreturn]] void input_error(const std::string& what, int line) {
  throw std::runtime_error(what + " (line " + std::to_string(line) + ")");
}

}  // namespace

Graph read_dimacs(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long declared_edges = -1;
  Graph g(1);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) input_error("duplicate problem line", lineno);
      std::string fmt;
      if (!(ss >> fmt >> n >> declared_edges) || fmt != "edge" || n < 1)
        input_error("malformed problem line, expected 'p edge <n> <m>'", lineno);
      g = Graph(n, name);
      continue;
    }
    if (tag == "e") {
      if (n < 0) input_error("edge before problem line", lineno);
      int u, v;
      if (!(ss >> u >> v)) input_error("malformed edge line", lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        input_error("edge endpoint out of range", lineno);
      if (u == v) input_error("self-loop", lineno);
      g.add_edge(u - 1, v - 1);
      continue;
    }
    input_error("unrecognized line tag '" + tag + "'", lineno);
  }
  if (n < 0) throw std::runtime_error("DIMACS input has no problem line");
  return g;
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dimacs(in, path);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  if (!g.name().empty()) out << "c " << g.name() << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

void write_dimacs_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dimacs(g, out);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_double(const std::string& s, double& v) {
  const char* b = s.c_str();
  char* e = nullptr;
  v = std::strtod(b, &e);
  if (e == b) return false;
  while (*e == ' ' || *e == '\t') ++e;
  return *e == '\0';
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

FiniteMetricSpace read_distance_csv(std::istream& in, const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_csv(line));
  }
  if (rows.empty()) throw std::runtime_error("empty distance CSV");

  std::vector<std::string> labels;
  std::size_t first_data = 0;
  double probe;
  if (!parse_double(trim(rows[0][0]), probe)) {
    for (auto& f : rows[0]) labels.push_back(trim(f));
    first_data = 1;
  }
  std::size_t m = rows.size() - first_data;
  if (m == 0) throw std::runtime_error("distance CSV has labels but no matrix rows");
  if (!labels.empty() && labels.size() != m)
    throw std::runtime_error("distance CSV label count does not match row count");

  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[first_data + i];
    if (row.size() != m)
      throw std::runtime_error("distance CSV row " + std::to_string(i + 1) + " has " +
                               std::to_string(row.size()) + " fields, expected " +
                               std::to_string(m));
    for (std::size_t j = 0; j < m; ++j) {
      double v;
      if (!parse_double(trim(row[j]), v))
        throw std::runtime_error("distance CSV: bad number '" + row[j] + "'");
      dist[i * m + j] = v;
    }
  }
  return FiniteMetricSpace(static_cast<int>(m), std::move(dist), std::move(labels), name);
}

FiniteMetricSpace read_distance_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_distance_csv(in, path);
}

void write_distance_csv(const FiniteMetricSpace& space, std::ostream& out) {
  int m = space.point_count();
  if (!space.labels().empty()) {
    for (int j = 0; j < m; ++j) out << (j ? "," : "") << space.labels()[j];
    out << "\n";
  }
  char buf[32];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", space.distance(i, j));
      out << (j ? "," : "") << buf;
    }
    out << "\n";
  }
}

void write_distance_csv_file(const FiniteMetricSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_distance_csv(space, out);
}

}  // namespace coverbound

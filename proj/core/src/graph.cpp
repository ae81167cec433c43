#include "zagreb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zagreb/errors.hpp"

namespace zagreb {

SimpleGraph::SimpleGraph(int order) : order_(order) {
  if (order < 0) throw DomainError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(order) + 1);
}

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges)
    : SimpleGraph(order) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 1 || v > order_) {
    throw DomainError("vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(order_));
  }
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > order_ || v > order_ || u == v) return false;
  return edges_.contains(Edge(u, v));
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (!edges_.insert(Edge(u, v)).second) {
    throw DomainError("duplicate edge " + std::to_string(u) + " " +
                      std::to_string(v));
  }
  auto& nu = adj_[u];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

void SimpleGraph::remove_edge(int u, int v) {
  if (edges_.erase(Edge(u, v)) == 0) {
    throw DomainError("missing edge " + std::to_string(u) + " " +
                      std::to_string(v));
  }
  auto& nu = adj_[u];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
}

M2Value second_zagreb(const SimpleGraph& g) {
  M2Value total = 0;
  for (const auto& e : g.edges()) {
    total += static_cast<M2Value>(g.degree(e.u)) * g.degree(e.v);
  }
  return total;
}

DegreeSequence degree_sequence_of(const SimpleGraph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw DomainError("vertex " + std::to_string(v) + " is isolated");
    }
    degrees.push_back(g.degree(v));
  }
  return DegreeSequence::from_degrees(std::move(degrees));
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw DomainError("permutation size does not match graph order");
  }
  SimpleGraph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u - 1], perm[e.v - 1]);
  return out;
}

namespace {

std::vector<long> parse_line(std::string_view line, int line_no) {
  std::vector<long> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected an integer");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
        line[pos] != '\r') {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unexpected character");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::vector<int> line_numbers;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    auto values = parse_line(text.substr(pos, nl - pos), line_no);
    if (!values.empty()) {
      rows.push_back(std::move(values));
      line_numbers.push_back(line_no);
    }
    pos = nl + 1;
  }
  if (rows.empty()) throw ParseError("missing header line \"n m\"");
  const auto& header = rows.front();
  if (header.size() != 2 || header[0] < 0 || header[1] < 0 ||
      header[0] > 1'000'000) {
    throw ParseError("header must be two non-negative integers \"n m\"");
  }
  const int n = static_cast<int>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  if (rows.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but found " + std::to_string(rows.size() - 1));
  }
  SimpleGraph g(n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto where = "line " + std::to_string(line_numbers[i]) + ": ";
    if (row.size() != 2) throw ParseError(where + "expected \"u v\"");
    if (row[0] < 1 || row[0] > n || row[1] < 1 || row[1] > n) {
      throw ParseError(where + "label out of range 1.." + std::to_string(n));
    }
    const int u = static_cast<int>(row[0]);
    const int v = static_cast<int>(row[1]);
    if (u == v) throw ParseError(where + "loop");
    if (g.has_edge(u, v)) throw ParseError(where + "duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

std::string serialize_edge_list(const SimpleGraph& g) {
  std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.size()) + '\n';
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zagreb

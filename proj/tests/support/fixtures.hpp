#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zagreb/graph.hpp"

namespace zagreb::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ZAGREB_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline SimpleGraph load_graph(const std::string& name) {
  return parse_edge_list(read_fixture(name));
}

}  // namespace zagreb::testing

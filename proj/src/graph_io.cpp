#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeldet/multigraph.hpp"

namespace skeldet {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string token;
  while (in >> token) {
    out.push_back(token);
  }
  return out;
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
  BigInt value;
  try {
    value = parse_bigint(token);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                                token + "'");
  }
  if (value < 0 || !value.fits_ulong_p()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad vertex index '" +
                                token + "'");
  }
  return value.get_ui();
}

nlohmann::json multiplicity_json(const BigInt& m) {
  if (m.fits_slong_p()) {
    return m.get_si();
  }
  return to_string(m);
}

}  // namespace

Multigraph read_graph_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Multigraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) {
      continue;
    }
    if (!g) {
      if (tokens.size() != 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected the vertex count n");
      }
      const std::size_t n = parse_index(tokens[0], line_no);
      if (n < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": n must be at least 1");
      }
      g.emplace(n);
      continue;
    }
    if (tokens.size() != 3) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'i j m', got " + std::to_string(tokens.size()) +
                                  " fields");
    }
    const std::size_t i = parse_index(tokens[0], line_no);
    const std::size_t j = parse_index(tokens[1], line_no);
    BigInt m;
    try {
      m = parse_bigint(tokens[2]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad multiplicity '" +
                                  tokens[2] + "'");
    }
    if (!(i < j) || j > g->n()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": need 0 <= i < j <= " + std::to_string(g->n()));
    }
    if (m < 1) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": multiplicity must be at least 1");
    }
    g->set_multiplicity(i, j, m);
  }
  if (!g) {
    throw std::invalid_argument("graph file is empty");
  }
  return *g;
}

void write_graph_text(std::ostream& out, const Multigraph& g) {
  out << g.n() << '\n';
  for (std::size_t i = 0; i <= g.n(); ++i) {
    for (std::size_t j = i + 1; j <= g.n(); ++j) {
      if (g.multiplicity(i, j) != 0) {
        out << i << ' ' << j << ' ' << to_string(g.multiplicity(i, j)) << '\n';
      }
    }
  }
}

nlohmann::json graph_to_json(const Multigraph& g) {
  auto adj = nlohmann::json::array();
  for (std::size_t i = 0; i <= g.n(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j <= g.n(); ++j) {
      row.push_back(multiplicity_json(g.multiplicity(i, j)));
    }
    adj.push_back(std::move(row));
  }
  return {{"n", g.n()}, {"adj", std::move(adj)}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("adj")) {
    throw std::invalid_argument("graph JSON needs keys \"n\" and \"adj\"");
  }
  const auto n = j.at("n").get<long long>();
  IntegerMatrix adj = matrix_from_json(j.at("adj"));
  if (n < 1 || adj.order() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("graph JSON: adj must be (n+1) x (n+1) with n >= 1");
  }
  return Multigraph::from_adjacency(adj);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    return graph_from_json(nlohmann::json::parse(content));
  }
  std::istringstream text(content);
  return read_graph_text(text);
}

}  // namespace skeldet

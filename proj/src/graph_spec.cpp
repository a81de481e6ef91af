#include "rainbowdom/graph_spec.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace rainbowdom {

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges") return GraphFormat::EdgeList;
  throw Error(ErrorCode::InvalidArgument, "unknown graph format '" + name + "'");
}

std::optional<Graph> named_graph(const std::string& name) {
  static const std::regex family(R"(([PCKS])(\d{1,4}))");
  static const std::regex glued(R"(GLUED(\d{1,3}),(\d{1,3}))");
  std::smatch m;
  if (name == "DC4") return gen_double_c4();
  if (std::regex_match(name, m, family)) {
    const int n = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'P': return gen_path(n);
      case 'C': return gen_cycle(n);
      case 'K': return gen_complete(n);
      default: return gen_star(n);
    }
  }
  if (std::regex_match(name, m, glued)) return gen_glued_paths(std::stoi(m[1]), std::stoi(m[2]));
  return std::nullopt;
}

Graph load_graph(const std::string& spec, GraphFormat format) {
  if (auto g = named_graph(spec)) return *g;
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));

  std::ifstream in(spec, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "no graph named or stored at '" + spec + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  if (format == GraphFormat::Auto) {
    const auto ends_with = [&](const std::string& ext) {
      return spec.size() >= ext.size() && spec.compare(spec.size() - ext.size(), ext.size(), ext) == 0;
    };
    if (ends_with(".g6")) format = GraphFormat::Graph6;
    else if (ends_with(".edges")) format = GraphFormat::EdgeList;
    else throw Error(ErrorCode::MalformedInput, "cannot tell the format of '" + spec + "'; use --format");
  }
  if (format == GraphFormat::Graph6) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_graph6(text);
  }
  return parse_edge_list(text);
}

}  // namespace rainbowdom

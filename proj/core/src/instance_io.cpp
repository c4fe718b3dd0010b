#include "k4steiner/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "k4steiner/error.hpp"

namespace k4st {

namespace {

Weight::Rep power_of_ten(int scale) {
  if (scale < 0 || scale > 18) throw Error(ErrorCode::kInvalidArgument, "scale must be in 0..18");
  Weight::Rep p = 1;
  for (int i = 0; i < scale; ++i) p *= 10;
  return p;
}

class Parser {
 public:
  Parser(std::istream& in, int scale) : scale_(scale) {
    for (std::string line; std::getline(in, line);) lines_.push_back(std::move(line));
  }

  Instance run() {
    std::vector<std::string> tok;
    if (!next(tok) || tok.size() != 2 || tok[0] != "VEST" || tok[1] != "1") fail("expected header 'VEST 1'");
    bool seen_graph = false;
    while (next(tok)) {
      if (tok.size() == 1 && tok[0] == "EOF") return finish(seen_graph);
      if (tok.size() != 2 || tok[0] != "SECTION") fail("expected 'SECTION <name>' or 'EOF'");
      if (tok[1] == "Graph") {
        if (seen_graph) fail("duplicate Graph section");
        graph_section();
        seen_graph = true;
      } else if (tok[1] == "Terminals") {
        if (!seen_graph) fail("Terminals section before Graph");
        terminal_section();
      } else if (tok[1] == "VirtualEdges") {
        if (!seen_graph) fail("VirtualEdges section before Graph");
        virtual_section();
      } else {
        fail("unknown section '" + tok[1] + "'");
      }
    }
    fail("missing EOF");
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no_) + ": " + why);
  }

  // Next non-blank, non-comment line split on whitespace.
  bool next(std::vector<std::string>& tok) {
    while (line_no_ < lines_.size()) {
      tok.clear();
      std::istringstream ss(lines_[line_no_++]);
      for (std::string t; ss >> t;) tok.push_back(t);
      if (tok.empty() || tok[0].starts_with('#')) continue;
      return true;
    }
    return false;
  }

  // Reads section lines until END or the next SECTION/EOF, which is pushed back.
  template <typename F>
  void section_lines(F&& handle) {
    std::vector<std::string> tok;
    while (true) {
      const std::size_t mark = line_no_;
      if (!next(tok)) fail("unterminated section");
      if (tok.size() == 1 && tok[0] == "END") return;
      if (tok[0] == "SECTION" || tok[0] == "EOF") {
        line_no_ = mark;
        return;
      }
      handle(tok);
    }
  }

  std::size_t count(const std::string& s) const {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail("expected a nonnegative integer, got '" + s + "'");
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      fail("integer out of range: '" + s + "'");
    }
  }

  VertexId vertex(const std::string& s) const {
    const std::size_t v = count(s);
    if (v < 1 || v > nodes_) fail("vertex " + s + " out of range 1.." + std::to_string(nodes_));
    return static_cast<VertexId>(v - 1);
  }

  Weight weight(const std::string& s, bool allow_infinity) const {
    try {
      return parse_weight(s, scale_, allow_infinity);
    } catch (const Error& err) {
      fail(err.what());
    }
  }

  void graph_section() {
    std::size_t declared_edges = 0;
    bool have_nodes = false;
    bool have_edges = false;
    section_lines([&](const std::vector<std::string>& tok) {
      if (tok[0] == "Nodes" && tok.size() == 2) {
        if (have_nodes) fail("duplicate Nodes line");
        nodes_ = count(tok[1]);
        graph_ = Multigraph(nodes_);
        have_nodes = true;
      } else if (tok[0] == "Edges" && tok.size() == 2) {
        declared_edges = count(tok[1]);
        have_edges = true;
      } else if (tok[0] == "E" && tok.size() == 4) {
        if (!have_nodes) fail("edge before Nodes line");
        const VertexId u = vertex(tok[1]);
        const VertexId v = vertex(tok[2]);
        if (u == v) fail("self-loop");
        graph_.add_edge(u, v, weight(tok[3], false));
      } else {
        fail("unexpected line in Graph section");
      }
    });
    if (!have_nodes) fail("Graph section without Nodes");
    if (have_edges && declared_edges != graph_.edge_count()) {
      fail("Edges says " + std::to_string(declared_edges) + " but " + std::to_string(graph_.edge_count()) +
           " edges were listed");
    }
  }

  void terminal_section() {
    section_lines([&](const std::vector<std::string>& tok) {
      if (tok[0] == "Terminals" && tok.size() == 2) return;
      if (tok[0] != "T" || tok.size() != 2) fail("expected 'T t'");
      const VertexId t = vertex(tok[1]);
      if (std::find(terminals_.begin(), terminals_.end(), t) != terminals_.end()) fail("duplicate terminal");
      terminals_.push_back(t);
    });
  }

  void virtual_section() {
    section_lines([&](const std::vector<std::string>& tok) {
      if (tok[0] != "VE" || tok.size() != 7) fail("expected 'VE u v wu wv wc wd'");
      VirtualEdge ve;
      ve.u = vertex(tok[1]);
      ve.v = vertex(tok[2]);
      if (ve.u == ve.v) fail("virtual self-loop");
      ve.weight_u = weight(tok[3], true);
      ve.weight_v = weight(tok[4], true);
      ve.weight_connect = weight(tok[5], true);
      ve.weight_disconnect = weight(tok[6], true);
      if (ve.weight_disconnect > min(ve.weight_u, ve.weight_v)) fail("virtual edge violates w(d) <= min(w(u), w(v))");
      virtual_edges_.push_back(std::move(ve));
    });
  }

  Instance finish(bool seen_graph) {
    if (!seen_graph) fail("missing Graph section");
    std::sort(terminals_.begin(), terminals_.end());
    return Instance::from_parts(std::move(graph_), std::move(terminals_), std::move(virtual_edges_));
  }

  std::vector<std::string> lines_;
  int scale_;
  std::size_t line_no_ = 0;
  std::size_t nodes_ = 0;
  Multigraph graph_;
  std::vector<VertexId> terminals_;
  std::vector<VirtualEdge> virtual_edges_;
};

}  // namespace

Weight parse_weight(std::string_view text, int scale, bool allow_infinity) {
  const Weight::Rep factor = power_of_ten(scale);
  if (allow_infinity && (text == "inf" || text == "INF")) return Weight::infinity();
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  auto digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (whole.empty() || !digits(whole) || !digits(frac) || (dot != std::string_view::npos && frac.empty())) {
    throw Error(ErrorCode::kParseError, "bad weight '" + std::string(text) + "'");
  }
  auto overflow = [&] { return Error(ErrorCode::kParseError, "weight '" + std::string(text) + "' too large"); };
  Weight::Rep value = 0;
  for (char c : whole) {
    if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, c - '0', &value)) throw overflow();
  }
  if (__builtin_mul_overflow(value, factor, &value)) throw overflow();
  Weight::Rep place = factor;
  for (char c : frac) {
    place /= 10;
    if (place == 0) {
      if (c != '0') {
        throw Error(ErrorCode::kParseError,
                    "weight '" + std::string(text) + "' is not integral at scale " + std::to_string(scale));
      }
      continue;
    }
    if (__builtin_add_overflow(value, (c - '0') * place, &value)) throw overflow();
  }
  const Weight w(value);
  if (w.is_infinite()) throw overflow();
  return w;
}

std::string format_weight(Weight w, int scale) {
  if (w.is_infinite()) return "inf";
  const Weight::Rep factor = power_of_ten(scale);
  std::string out = std::to_string(w.value() / factor);
  Weight::Rep rest = w.value() % factor;
  if (rest == 0) return out;
  std::string frac = std::to_string(rest);
  frac.insert(0, static_cast<std::size_t>(scale) - frac.size(), '0');
  while (frac.back() == '0') frac.pop_back();
  return out + "." + frac;
}

Instance parse_instance(std::istream& in, int scale) {
  power_of_ten(scale);
  return Parser(in, scale).run();
}

Instance parse_instance(std::string_view text, int scale) {
  std::istringstream in{std::string(text)};
  return parse_instance(in, scale);
}

Instance read_instance(const std::filesystem::path& path, int scale) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  return parse_instance(in, scale);
}

std::string render_instance(const Instance& inst, int scale) {
  std::ostringstream out;
  out << "VEST 1\nSECTION Graph\nNodes " << inst.vertex_count() << "\nEdges " << inst.graph.edge_count() << '\n';
  for (const Edge& e : inst.graph.edges()) {
    out << "E " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_weight(e.weight, scale) << '\n';
  }
  out << "END\nSECTION Terminals\nTerminals " << inst.terminals.size() << '\n';
  for (VertexId t : inst.terminals) out << "T " << t + 1 << '\n';
  out << "END\n";
  if (!inst.virtual_edges.empty()) {
    out << "SECTION VirtualEdges\n";
    for (const VirtualEdge& ve : inst.virtual_edges) {
      out << "VE " << ve.u + 1 << ' ' << ve.v + 1 << ' ' << format_weight(ve.weight_u, scale) << ' '
          << format_weight(ve.weight_v, scale) << ' ' << format_weight(ve.weight_connect, scale) << ' '
          << format_weight(ve.weight_disconnect, scale) << '\n';
    }
    out << "END\n";
  }
  out << "EOF\n";
  return out.str();
}

}  // namespace k4st

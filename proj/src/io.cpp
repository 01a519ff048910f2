#include "dicut/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dicut {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in{std::string(text.substr(pos, end - pos))};
    Line line{number, {}};
    for (std::string tok; in >> tok;) {
      if (tok.front() == '#') break;
      line.tokens.push_back(std::move(tok));
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

bool plain_token(const std::string& s) {
  if (s.empty() || s.front() == '#' || s.front() == '@') return false;
  for (unsigned char c : s)
    if (std::isspace(c)) return false;
  return true;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  Digraph d;
  auto vertex = [&](const std::string& name) {
    auto v = d.find_vertex(name);
    return v ? *v : d.add_vertex(name);
  };
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0].front() == '@') {
      if (t[0] != "@vertex") throw ParseError(line.number, "unknown directive " + t[0]);
      if (t.size() != 2) throw ParseError(line.number, "@vertex takes one name");
      if (!plain_token(t[1])) throw ParseError(line.number, "bad vertex name " + t[1]);
      if (d.find_vertex(t[1])) throw ParseError(line.number, "vertex " + t[1] + " declared twice");
      d.add_vertex(t[1]);
      continue;
    }
    if (t.size() != 2) throw ParseError(line.number, "expected TAIL HEAD");
    if (!plain_token(t[1])) throw ParseError(line.number, "bad vertex name " + t[1]);
    if (t[0] == t[1]) throw ParseError(line.number, "loop at " + t[0]);
    const VertexId tail = vertex(t[0]);
    const VertexId head = vertex(t[1]);
    d.add_edge(tail, head);
  }
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::string out;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (!plain_token(d.name(v))) throw std::invalid_argument("vertex name not writable: " + d.name(v));
    out += "@vertex " + d.name(v) + "\n";
  }
  for (const Edge& e : d.edges()) out += d.name(e.tail) + " " + d.name(e.head) + "\n";
  return out;
}

std::vector<Dicut> parse_class(const Digraph& d, std::string_view text) {
  std::vector<Dicut> out;
  for (const Line& line : tokenize(text)) {
    VertexSet y = d.no_vertices();
    for (const auto& name : line.tokens) {
      auto v = d.find_vertex(name);
      if (!v) throw ParseError(line.number, "unknown vertex " + name);
      y.insert(*v);
    }
    if (y.is_full()) throw ParseError(line.number, "in-shore is the whole vertex set");
    if (!out_cut(d, y).empty()) throw ParseError(line.number, "not a dicut: an edge leaves the shore");
    out.emplace_back(d, std::move(y));
  }
  return out;
}

std::string serialize_class(const Digraph& d, const std::vector<Dicut>& members) {
  std::string out;
  for (const auto& b : members) {
    std::string line;
    b.in_shore().for_each([&](VertexId v) {
      if (!line.empty()) line += ' ';
      line += d.name(v);
    });
    out += line + "\n";
  }
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph h;
  for (const Line& line : tokenize(text)) {
    for (const auto& t : line.tokens)
      if (!plain_token(t)) throw ParseError(line.number, "bad vertex token " + t);
    h.add_edge_by_names(line.tokens);
  }
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    std::string line;
    for (HyperVertex v : e) {
      if (!line.empty()) line += ' ';
      line += h.name(v);
    }
    out += line + "\n";
  }
  return out;
}

MengerInput parse_menger(std::string_view text) {
  MengerInput in;
  std::map<std::string, std::uint32_t> ids;
  auto vertex = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    const auto id = in.graph.add_vertex(name);
    ids.emplace(name, id);
    return id;
  };
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "@A" || t[0] == "@B") {
      auto& side = t[0] == "@A" ? in.a : in.b;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!plain_token(t[i])) throw ParseError(line.number, "bad vertex name " + t[i]);
        side.push_back(vertex(t[i]));
      }
      continue;
    }
    if (t[0].front() == '@') throw ParseError(line.number, "unknown directive " + t[0]);
    if (t.size() != 2) throw ParseError(line.number, "expected U V");
    if (!plain_token(t[1])) throw ParseError(line.number, "bad vertex name " + t[1]);
    in.graph.add_edge(vertex(t[0]), vertex(t[1]));
  }
  for (auto* side : {&in.a, &in.b}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  return in;
}

std::string serialize_class_map(const FamilyWindow& w) {
  std::string out;
  for (VertexId v = 0; v < w.digraph.num_vertices(); ++v) {
    out += "class " + w.digraph.name(v);
    for (const auto& s : w.class_members[v]) out += " " + s;
    out += "\n";
  }
  return out;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dicut

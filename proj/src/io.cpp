#include "fatgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace fg {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": bad integer '" + tok + "'");
  }
}

}  // namespace

RotationSystem parse_rotation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool header = false;
  RotationSystem rs;
  std::map<int, std::vector<Dart>> verts;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      std::istringstream h(line);
      std::string magic, version, kind;
      h >> magic >> version >> kind;
      if (magic != "fatgraph" || version != "v1")
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'fatgraph v1' header");
      if (kind.empty() || kind == "bordered") rs.kind = Kind::Bordered;
      else if (kind == "punctured") rs.kind = Kind::Punctured;
      else throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
      header = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": missing ':'");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::istringstream body(line.substr(colon + 1));
    std::vector<Dart> darts;
    std::string tok;
    while (body >> tok) darts.push_back(parse_int(tok, lineno));
    if (key == "tail") {
      if (darts.size() != 1) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": tail takes one dart");
      rs.tail = darts[0];
    } else if (key.size() > 1 && key[0] == 'v') {
      int k = parse_int(key.substr(1), lineno);
      if (!verts.emplace(k, std::move(darts)).second)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": duplicate vertex " + key);
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!header) throw Error(ErrorKind::Parse, "missing header");
  for (auto& [k, v] : verts) rs.vertices.push_back(std::move(v));
  return rs;
}

Fatgraph parse_fatgraph(std::string_view text) { return Fatgraph::make(parse_rotation(text)); }

std::string serialize(const RotationSystem& rs) {
  std::ostringstream out;
  out << "fatgraph v1 " << to_string(rs.kind) << '\n';
  if (rs.tail) out << "tail: " << *rs.tail << '\n';
  for (std::size_t v = 0; v < rs.vertices.size(); ++v) {
    out << 'v' << v << ':';
    for (Dart d : rs.vertices[v]) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Fatgraph& g) { return serialize(g.rotation()); }

RotationSystem read_rotation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rotation(ss.str());
}

Fatgraph read_fatgraph(const std::string& path) { return Fatgraph::make(read_rotation(path)); }

void write_fatgraph(const std::string& path, const Fatgraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << serialize(g);
}

}  // namespace fg

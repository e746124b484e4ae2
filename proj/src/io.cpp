#include "ssg/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

VertexId parse_id(std::string_view token, std::size_t line) {
  VertexId id = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || ptr != token.data() + token.size() || id == kNoVertex) {
    throw ParseError(line, "bad vertex id '" + std::string(token) + "'");
  }
  return id;
}

struct Pending {
  Vertex vertex;
  std::size_t line;
};

}  // namespace

Game parse_game(std::string_view text) {
  std::map<VertexId, Pending> seen;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "ssg" || tokens[1] != "1") {
        throw ParseError(line_no, "expected header 'ssg 1'");
      }
      header = true;
      continue;
    }
    if (tokens.size() < 2) throw ParseError(line_no, "expected '<id> <kind> ...'");
    const VertexId id = parse_id(tokens[0], line_no);
    if (const auto it = seen.find(id); it != seen.end()) {
      throw ParseError(line_no, "duplicate vertex id " + std::to_string(id) + " (first on line " +
                                    std::to_string(it->second.line) + ")");
    }
    Vertex v;
    const std::string_view kind = tokens[1];
    if (kind == "sink") {
      if (tokens.size() != 3) throw ParseError(line_no, "sink needs exactly one value");
      try {
        v.value = parse_rational(tokens[2]);
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
      if (v.value < 0 || v.value > 1) {
        throw ParseError(line_no, "sink value " + to_string(v.value) + " outside [0,1]");
      }
      v.kind = Kind::Sink;
      v.successors = {id};
    } else {
      if (kind == "max") {
        v.kind = Kind::Max;
      } else if (kind == "min") {
        v.kind = Kind::Min;
      } else if (kind == "ave") {
        v.kind = Kind::Ave;
      } else {
        throw ParseError(line_no, "unknown vertex kind '" + std::string(kind) + "'");
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) v.successors.push_back(parse_id(tokens[i], line_no));
      if (v.kind == Kind::Ave && v.successors.size() != 2) {
        throw ParseError(line_no, "ave needs exactly two successors");
      }
      if (v.successors.empty()) throw ParseError(line_no, "vertex needs at least one successor");
    }
    seen.emplace(id, Pending{std::move(v), line_no});
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'ssg 1'");

  std::vector<Vertex> vertices;
  vertices.reserve(seen.size());
  for (const auto& [id, p] : seen) {
    if (id != vertices.size()) {
      throw ParseError(p.line, "vertex ids must be dense from 0; id " +
                                   std::to_string(vertices.size()) + " is missing");
    }
    vertices.push_back(p.vertex);
  }
  for (const auto& [id, p] : seen) {
    for (VertexId y : p.vertex.successors) {
      if (y >= vertices.size()) {
        throw ParseError(p.line, "successor " + std::to_string(y) + " of vertex " +
                                     std::to_string(id) + " does not exist");
      }
    }
  }
  return Game(std::move(vertices));
}

std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "ssg 1\n";
  for (VertexId x = 0; x < game.size(); ++x) {
    out << x << ' ' << to_string(game.kind(x));
    if (game.is_sink(x)) {
      out << ' ' << to_string(game.sink_value(x));
    } else {
      for (VertexId y : game.successors(x)) out << ' ' << y;
    }
    out << '\n';
  }
  return out.str();
}

Game read_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

void write_game_file(const std::string& path, const Game& game) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << serialize_game(game);
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace ssg

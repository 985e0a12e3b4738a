#include "dicut/stream.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "dicut/error.hpp"

namespace dicut {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on blanks and parses unsigned integers; returns false on junk.
bool parse_fields(std::string_view s, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos == s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
    if (ec != std::errc{} || ptr != s.data() + end) return false;
    out.push_back(v);
    pos = end;
  }
  return true;
}

}  // namespace

Multigraph EdgeStream::to_graph() const {
  Multigraph g(n);
  for (const auto& e : edges) g.add_edge(e.from, e.to);
  return g;
}

EdgeStream parse_stream(std::istream& in) {
  EdgeStream s;
  bool have_header = false;
  std::string raw;
  std::vector<std::uint64_t> f;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!have_header) {
      if (text.size() < 2 || text[0] != 'n' || (text[1] != ' ' && text[1] != '\t'))
        throw ParseError(line, "expected header \"n <N>\"");
      if (!parse_fields(text.substr(1), f) || f.size() != 1 || f[0] < 1 || f[0] > 0xffffffffULL)
        throw ParseError(line, "bad vertex count in header");
      s.n = f[0];
      have_header = true;
      continue;
    }
    if (!parse_fields(text, f) || f.size() != 2) throw ParseError(line, "expected \"u v\"");
    if (f[0] < 1 || f[0] > s.n || f[1] < 1 || f[1] > s.n) throw ParseError(line, "vertex id outside 1..n");
    if (f[0] == f[1]) throw ParseError(line, "self-loop");
    s.edges.push_back({static_cast<VertexId>(f[0]), static_cast<VertexId>(f[1])});
  }
  if (!have_header) throw ParseError(0, "missing header \"n <N>\"");
  return s;
}

EdgeStream read_stream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open stream file " + path.string());
  return parse_stream(in);
}

void write_stream(std::ostream& out, const EdgeStream& s) {
  out << "n " << s.n << '\n';
  for (const auto& e : s.edges) out << e.from << ' ' << e.to << '\n';
}

void write_stream(const std::filesystem::path& path, const EdgeStream& s) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write stream file " + path.string());
  write_stream(out, s);
}

}  // namespace dicut

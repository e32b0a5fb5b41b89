#include "ehcert/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::int64_t to_int(const Line& line, const std::string& tok, const char* field) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, std::string("expected integer ") + field + ", got '" + tok + "'");
  }
  return value;
}

int to_vertex(const Line& line, const std::string& tok) {
  std::int64_t v = to_int(line, tok, "vertex");
  if (v < 0 || v > 100'000'000) fail(line, "vertex " + tok + " out of range");
  return static_cast<int>(v);
}

Id to_id(const Line& line, const std::string& tok) {
  Id id = to_int(line, tok, "id");
  if (id < 0) fail(line, "ids must be non-negative, got " + tok);
  return id;
}

int to_part(const Line& line, const std::string& tok) {
  std::int64_t p = to_int(line, tok, "part");
  if (p != 1 && p != 2) fail(line, "part must be 1 or 2, got " + tok);
  return static_cast<int>(p);
}

Rational to_rational(const Line& line, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

void add_label(std::map<Id, int>& labels, const Line& line) {
  if (line.tokens.size() != 3) fail(line, "expected 'P <id> <part>'");
  Id id = to_id(line, line.tokens[1]);
  if (!labels.emplace(id, to_part(line, line.tokens[2])).second) fail(line, "id " + line.tokens[1] + " labelled twice");
}

void write_ids(std::ostream& os, const std::vector<Id>& ids) {
  for (Id id : ids) os << ' ' << id;
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty input");
  const std::string& first = lines.front().tokens.front();
  if (first == "I") return FileKind::intervals;
  if (first == "T") return FileKind::subtrees;
  if (first == "G") return FileKind::graph;
  if (first == "BICLIQUE") return FileKind::certificate;
  if (first[0] == '(' || std::isdigit(static_cast<unsigned char>(first[0]))) return FileKind::cotree;
  fail(lines.front(), "cannot tell the file format from '" + first + "'");
}

IntervalFamily parse_intervals(std::string_view text) {
  std::vector<IntervalMember> members;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] != "I") fail(line, "expected 'I', got '" + t[0] + "'");
    if (t.size() != 4 && t.size() != 5) fail(line, "expected 'I <id> <left> <right> [<part>]'");
    IntervalMember m{to_id(line, t[1]), std::nullopt, to_rational(line, t[2]), to_rational(line, t[3])};
    if (t.size() == 5) m.part = to_part(line, t[4]);
    if (m.right < m.left) fail(line, "interval " + t[1] + " has left > right");
    members.push_back(m);
  }
  return IntervalFamily(std::move(members));
}

std::string write_intervals(const IntervalFamily& fam) {
  std::ostringstream os;
  for (const auto& m : fam.members()) {
    os << "I " << m.id << ' ' << m.left << ' ' << m.right;
    if (m.part) os << ' ' << *m.part;
    os << '\n';
  }
  return os.str();
}

SubtreeFamily parse_subtrees(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<SubtreeMember> members;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "T") {
      if (n >= 0) fail(line, "second 'T' header");
      if (t.size() != 2) fail(line, "expected 'T <n>'");
      n = to_vertex(line, t[1]);
      if (n < 1) fail(line, "ambient tree needs at least one vertex");
    } else if (t[0] == "E") {
      if (t.size() != 3) fail(line, "expected 'E <u> <v>'");
      edges.emplace_back(to_vertex(line, t[1]), to_vertex(line, t[2]));
    } else if (t[0] == "S") {
      std::size_t colon = 0;
      while (colon < t.size() && t[colon] != ":") ++colon;
      if (colon != 2 && colon != 3) fail(line, "expected 'S <id> [<part>] : <vertices>'");
      SubtreeMember m{to_id(line, t[1]), std::nullopt, {}};
      if (colon == 3) m.part = to_part(line, t[2]);
      std::vector<int> vs;
      for (std::size_t i = colon + 1; i < t.size(); ++i) vs.push_back(to_vertex(line, t[i]));
      if (vs.empty()) fail(line, "subtree " + t[1] + " has no vertices");
      try {
        m.subtree = Subtree(std::move(vs));
      } catch (const InputError& e) {
        fail(line, e.what());
      }
      members.push_back(std::move(m));
    } else {
      fail(line, "unknown record '" + t[0] + "'");
    }
  }
  if (n < 0) throw InputError("missing 'T <n>' header");
  return SubtreeFamily(Tree(n, edges), std::move(members));
}

std::string write_subtrees(const SubtreeFamily& fam) {
  std::ostringstream os;
  os << "T " << fam.ambient().size() << '\n';
  for (auto [u, v] : fam.ambient().edges()) os << "E " << u << ' ' << v << '\n';
  for (const auto& m : fam.members()) {
    os << "S " << m.id;
    if (m.part) os << ' ' << *m.part;
    os << " :";
    for (int v : m.subtree.vertices()) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

GraphFile parse_graph(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::map<Id, int> labels;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "G") {
      if (n >= 0) fail(line, "second 'G' header");
      if (t.size() != 2) fail(line, "expected 'G <n>'");
      n = to_vertex(line, t[1]);
    } else if (t[0] == "E") {
      if (t.size() != 3) fail(line, "expected 'E <u> <v>'");
      edges.emplace_back(to_vertex(line, t[1]), to_vertex(line, t[2]));
    } else if (t[0] == "P") {
      add_label(labels, line);
    } else {
      fail(line, "unknown record '" + t[0] + "'");
    }
  }
  if (n < 0) throw InputError("missing 'G <n>' header");
  GraphFile out{Graph(n, edges), std::nullopt};
  if (!labels.empty()) {
    if (labels.size() != static_cast<std::size_t>(n) || labels.rbegin()->first >= n) {
      throw InputError("P lines must label every vertex 0.." + std::to_string(n - 1));
    }
    out.partition = Partition(std::move(labels));
  }
  return out;
}

std::string write_graph(const Graph& g, const Partition* partition) {
  std::ostringstream os;
  os << "G " << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << "E " << u << ' ' << v << '\n';
  if (partition) {
    for (auto [id, part] : partition->assignment()) os << "P " << id << ' ' << part << '\n';
  }
  return os.str();
}

CotreeFile parse_cotree_file(std::string_view text) {
  // P lines are blanked out in place so parser offsets still match the file.
  std::string expr(text);
  std::map<Id, int> labels;
  std::size_t pos = 0;
  int number = 0;
  while (pos < expr.size()) {
    std::size_t end = expr.find('\n', pos);
    if (end == std::string::npos) end = expr.size();
    ++number;
    std::size_t first = expr.find_first_not_of(" \t\r", pos);
    if (first < end && expr[first] == 'P') {
      auto lines = tokenize(std::string_view(expr).substr(pos, end - pos));
      Line line{number, lines.empty() ? std::vector<std::string>{} : lines.front().tokens};
      add_label(labels, line);
      std::fill(expr.begin() + static_cast<std::ptrdiff_t>(pos), expr.begin() + static_cast<std::ptrdiff_t>(end), ' ');
    }
    pos = end + 1;
  }
  CotreeFile out{parse_cotree(expr), std::nullopt};
  if (!labels.empty()) {
    Partition partition(std::move(labels));
    for (Id id : out.cotree.leaves()) {
      if (!partition.part_of(id)) throw InputError("cotree leaf " + std::to_string(id) + " has no P line");
    }
    if (partition.size() != out.cotree.leaf_count()) throw InputError("P line names an id that is not a leaf");
    out.partition = std::move(partition);
  }
  return out;
}

std::string write_cotree_file(const Cotree& ct, const Partition* partition) {
  std::ostringstream os;
  os << ct.str() << '\n';
  if (partition) {
    for (auto [id, part] : partition->assignment()) os << "P " << id << ' ' << part << '\n';
  }
  return os.str();
}

BicliqueCertificate parse_certificate(std::string_view text) {
  BicliqueCertificate cert;
  bool header = false, has_a = false, has_b = false;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "BICLIQUE") {
      if (header) fail(line, "second BICLIQUE header");
      if (t.size() != 2) fail(line, "expected 'BICLIQUE kind=<complete|empty>'");
      if (t[1] == "kind=complete") {
        cert.kind = BicliqueKind::complete;
      } else if (t[1] == "kind=empty") {
        cert.kind = BicliqueKind::empty;
      } else {
        fail(line, "unknown kind '" + t[1] + "'");
      }
      header = true;
    } else if (t[0] == "A:" || t[0] == "B:") {
      bool& seen = t[0] == "A:" ? has_a : has_b;
      if (seen) fail(line, "side " + t[0] + " given twice");
      seen = true;
      auto& side = t[0] == "A:" ? cert.side_a : cert.side_b;
      for (std::size_t i = 1; i < t.size(); ++i) side.push_back(to_id(line, t[i]));
    } else {
      fail(line, "unknown record '" + t[0] + "'");
    }
  }
  if (!header || !has_a || !has_b) throw InputError("certificate needs BICLIQUE, A: and B: lines");
  return cert;
}

std::string write_certificate(const BicliqueCertificate& cert) {
  std::ostringstream os;
  os << "BICLIQUE kind=" << to_string(cert.kind) << "\nA:";
  write_ids(os, cert.side_a);
  os << "\nB:";
  write_ids(os, cert.side_b);
  os << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace ehcert

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ehcert/certificate.hpp"
#include "ehcert/cotree.hpp"
#include "ehcert/family.hpp"
#include "ehcert/graph.hpp"

namespace ehcert {

// Line formats (`#` starts a comment anywhere on a line):
//   intervals    I <id> <left> <right> [<part>]
//   subtrees     T <n> / E <u> <v> / S <id> [<part>] : <v1> <v2> ...
//   graph        G <n> / E <u> <v> / P <v> <part>
//   cotree       one s-expression, then optional P <id> <part> lines
//   certificate  BICLIQUE kind=<complete|empty> / A: <ids> / B: <ids>

enum class FileKind { intervals, subtrees, graph, cotree, certificate };

/// Decided by the first token: I, T, G, BICLIQUE, or '(' / a number for cotrees.
FileKind detect_kind(std::string_view text);

IntervalFamily parse_intervals(std::string_view text);
std::string write_intervals(const IntervalFamily& fam);

SubtreeFamily parse_subtrees(std::string_view text);
std::string write_subtrees(const SubtreeFamily& fam);

struct GraphFile {
  Graph graph;
  std::optional<Partition> partition;
};
GraphFile parse_graph(std::string_view text);
std::string write_graph(const Graph& g, const Partition* partition = nullptr);

struct CotreeFile {
  Cotree cotree = Cotree::leaf(0);
  std::optional<Partition> partition;
};
CotreeFile parse_cotree_file(std::string_view text);
std::string write_cotree_file(const Cotree& ct, const Partition* partition = nullptr);

BicliqueCertificate parse_certificate(std::string_view text);
std::string write_certificate(const BicliqueCertificate& cert);

/// Whole file as a string; InputError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ehcert

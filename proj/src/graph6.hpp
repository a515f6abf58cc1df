#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace critic {

// Canonical graph6 text form (McKay's format): size prefix, then the upper
// triangle in column-major order packed into 6-bit chunks offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

struct CorpusLine {
  int line_no = 0;  // 1-based line in the source file
  std::string graph6;
  Graph graph;
};

struct CorpusReadResult {
  std::vector<CorpusLine> graphs;
  std::vector<std::string> warnings;  // populated in skip_bad mode
};

// Reads a graph6 corpus file: one graph per line, '#' comment lines and blank
// lines ignored.  Malformed lines raise Err::Malformed naming the line number
// unless skip_bad is set, in which case they are collected as warnings.
CorpusReadResult read_graph6_file(const std::string& path, bool skip_bad);
CorpusReadResult read_graph6_text(const std::string& text, bool skip_bad);

}  // namespace critic

#include "graph6.hpp"

#include <fstream>
#include <sstream>

namespace critic {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 258047) fail(Err::UnsupportedOrder, "graph6 encoder supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back((char)(63 + n));
  } else {
    out.push_back(126);
    out.push_back((char)(63 + ((n >> 12) & 63)));
    out.push_back((char)(63 + ((n >> 6) & 63)));
    out.push_back((char)(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back((char)(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back((char)(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(const std::string& text) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (text.size() < pos + k) fail(Err::Malformed, "graph6 string truncated");
  };
  auto byte = [&](size_t i) {
    int c = (unsigned char)text[i];
    if (c < 63 || c > 126) fail(Err::Malformed, "graph6 byte out of range at offset " + std::to_string(i));
    return c - 63;
  };
  need(1);
  long long n;
  if ((unsigned char)text[0] == 126) {
    need(4);
    if ((unsigned char)text[1] == 126) fail(Err::UnsupportedOrder, "graph6 8-byte order form not supported");
    n = ((long long)byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  long long bits = n * (n - 1) / 2;
  size_t body = (size_t)((bits + 5) / 6);
  if (text.size() != pos + body) fail(Err::Malformed, "graph6 length mismatch for order " + std::to_string(n));
  std::vector<std::pair<int, int>> es;
  long long t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      int chunk = byte(pos + (size_t)(t / 6));
      if ((chunk >> (5 - t % 6)) & 1) es.emplace_back(i, j);
    }
  // trailing pad bits must be zero
  if (bits % 6 != 0) {
    int chunk = byte(text.size() - 1);
    int pad = (int)(6 - bits % 6);
    if (chunk & ((1 << pad) - 1)) fail(Err::Malformed, "graph6 nonzero padding bits");
  }
  return Graph::build((int)n, std::move(es));
}

CorpusReadResult read_graph6_text(const std::string& text, bool skip_bad) {
  CorpusReadResult out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    std::string tok = line.substr(first);
    size_t last = tok.find_last_not_of(" \t");
    tok = tok.substr(0, last + 1);
    try {
      Graph g = from_graph6(tok);
      out.graphs.push_back({line_no, tok, std::move(g)});
    } catch (const CriticError& e) {
      std::string msg = "line " + std::to_string(line_no) + ": " + e.what();
      if (!skip_bad) fail(Err::Malformed, msg);
      out.warnings.push_back(msg);
    }
  }
  return out;
}

CorpusReadResult read_graph6_file(const std::string& path, bool skip_bad) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph6_text(buf.str(), skip_bad);
}

}  // namespace critic

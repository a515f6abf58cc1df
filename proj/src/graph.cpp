#include "graph.hpp"

#include <algorithm>
#include <sstream>

namespace critic {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) fail(Err::BadParam, "graph order must be nonnegative");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::OutOfRange, "edge endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) fail(Err::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  g.edges_ = std::move(edge_list);
  g.nbr_.assign(n, {});
  g.nbr_eid_.assign(n, {});
  g.adj_.assign((size_t)n * g.words_, 0);
  for (int eid = 0; eid < (int)g.edges_.size(); ++eid) {
    auto [u, v] = g.edges_[eid];
    g.nbr_[u].push_back(v);
    g.nbr_eid_[u].push_back(eid);
    g.nbr_[v].push_back(u);
    g.nbr_eid_[v].push_back(eid);
    g.adj_[(size_t)u * g.words_ + v / 64] |= 1ULL << (v % 64);
    g.adj_[(size_t)v * g.words_ + u / 64] |= 1ULL << (u % 64);
  }
  // neighbor lists come out sorted for u (edges are lex sorted) but not for v
  for (int v = 0; v < n; ++v) {
    std::vector<int> idx(g.nbr_[v].size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return g.nbr_[v][a] < g.nbr_[v][b]; });
    std::vector<int> nb(idx.size());
    std::vector<int> ne(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
      nb[i] = g.nbr_[v][idx[i]];
      ne[i] = g.nbr_eid_[v][idx[i]];
    }
    g.nbr_[v] = std::move(nb);
    g.nbr_eid_[v] = std::move(ne);
  }
  return g;
}

std::pair<int, int> Graph::edge(int eid) const {
  if (eid < 0 || eid >= (int)edges_.size()) fail(Err::NotAnEdge, "edge id " + std::to_string(eid) + " out of range");
  return edges_[eid];
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, (int)nbr_[v].size());
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = (int)nbr_[0].size();
  for (int v = 1; v < n_; ++v) d = std::min(d, (int)nbr_[v].size());
  return d;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (adj_[(size_t)u * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int Graph::edge_id(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = nbr_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return nbr_eid_[u][it - nb.begin()];
}

std::vector<int> Graph::component_of(int v) const {
  check_vertex(v);
  std::vector<char> vis(n_, 0);
  std::vector<int> stack{v}, comp;
  vis[v] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (int w : nbr_[u])
      if (!vis[w]) {
        vis[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  return (int)component_of(0).size() == n_;
}

Graph Graph::remove_edge(int eid) const {
  auto [u, v] = edge(eid);
  std::vector<std::pair<int, int>> es = edges_;
  es.erase(es.begin() + eid);
  (void)u;
  (void)v;
  return build(n_, std::move(es));
}

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Err::SelfLoop, "self-loop at vertex " + std::to_string(u));
  std::vector<std::pair<int, int>> es = edges_;
  es.emplace_back(u, v);
  return build(n_, std::move(es));
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " m=" << edges_.size() << " edges=[";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << " ";
    os << edges_[i].first << "-" << edges_[i].second;
  }
  os << "]";
  return os.str();
}

Graph make_path(int n) {
  if (n < 1) fail(Err::BadParam, "path needs at least 1 vertex");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::build(n, std::move(es));
}

Graph make_cycle(int n) {
  if (n < 3) fail(Err::BadParam, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::build(n, std::move(es));
}

Graph make_complete(int n) {
  if (n < 1) fail(Err::BadParam, "complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::build(n, std::move(es));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) fail(Err::BadParam, "bad bipartition sizes");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph::build(a + b, std::move(es));
}

Graph make_star(int n) {
  if (n < 1) fail(Err::BadParam, "star needs at least 1 vertex");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return Graph::build(n, std::move(es));
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    es.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::build(10, std::move(es));
}

Graph make_subdivided_complete(int m) {
  if (m < 3) fail(Err::BadParam, "subdivided complete graph needs m >= 3");
  // K_m on 0..m-1 with edge (0,1) replaced by the path 0 - m - 1
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(i == 0 && j == 1)) es.emplace_back(i, j);
  es.emplace_back(0, m);
  es.emplace_back(1, m);
  return Graph::build(m + 1, std::move(es));
}

Graph make_random(int n, const Rational& p, uint64_t seed) {
  if (n < 0) fail(Err::BadParam, "random graph order must be nonnegative");
  if (p < Rational(0) || p > Rational(1)) fail(Err::BadParam, "edge probability outside [0,1]");
  uint64_t state = seed;
  std::vector<std::pair<int, int>> es;
  // edge uv kept iff u < 2^53 * p, drawn in lex edge order so the graph is a
  // pure function of (n, p, seed)
  const uint64_t scale = 1ULL << 53;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      uint64_t draw = splitmix64(state) >> 11;  // 53 uniform bits
      if ((__int128)draw * p.den() < (__int128)p.num() * scale) es.emplace_back(u, v);
    }
  return Graph::build(n, std::move(es));
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else
      cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(Err::Malformed, "trailing junk in integer: " + s);
    return v;
  } catch (const CriticError&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::Malformed, "bad integer: " + s);
  }
}

}  // namespace

Graph generate(const std::string& family_spec) {
  std::string name = family_spec, args;
  auto colon = family_spec.find(':');
  // accept both "cycle:5" and "cycle(5)"
  auto paren = family_spec.find('(');
  if (colon != std::string::npos) {
    name = family_spec.substr(0, colon);
    args = family_spec.substr(colon + 1);
  } else if (paren != std::string::npos && family_spec.back() == ')') {
    name = family_spec.substr(0, paren);
    args = family_spec.substr(paren + 1, family_spec.size() - paren - 2);
  }
  auto a = split_args(args);
  auto want = [&](size_t k) {
    if (args.empty() || a.size() != k)
      fail(Err::BadParam, "family " + name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "petersen") {
    if (!args.empty()) fail(Err::BadParam, "petersen takes no parameters");
    return make_petersen();
  }
  if (name == "path") {
    want(1);
    return make_path((int)parse_int(a[0]));
  }
  if (name == "cycle") {
    want(1);
    return make_cycle((int)parse_int(a[0]));
  }
  if (name == "complete") {
    want(1);
    return make_complete((int)parse_int(a[0]));
  }
  if (name == "complete_bipartite") {
    want(2);
    return make_complete_bipartite((int)parse_int(a[0]), (int)parse_int(a[1]));
  }
  if (name == "star") {
    want(1);
    return make_star((int)parse_int(a[0]));
  }
  if (name == "subdivided_complete") {
    want(1);
    return make_subdivided_complete((int)parse_int(a[0]));
  }
  if (name == "random") {
    want(3);
    return make_random((int)parse_int(a[0]), Rational::parse(a[1]), (uint64_t)parse_int(a[2]));
  }
  fail(Err::BadParam, "unknown family: " + name);
}

DegreeProfile degree_stats(const Graph& g, const std::vector<Rational>& thresholds) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  for (const auto& q : thresholds) p.threshold_sets.emplace_back(q, vertices_with_degree_at_least(g, q));
  return p;
}

std::vector<int> vertices_with_degree_at_least(const Graph& g, const Rational& q) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (Rational(g.degree(v)) >= q) out.push_back(v);
  return out;
}

uint64_t mix_seed(uint64_t seed, const std::string& tag, uint64_t a, uint64_t b) {
  uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;  // FNV-1a step keeps this platform independent
  }
  uint64_t s = h;
  h = splitmix64(s) ^ a;
  h = splitmix64(h) ^ b;
  return splitmix64(h);
}

uint64_t uniform_below(uint64_t& state, uint64_t bound) {
  if (bound == 0) fail(Err::BadParam, "uniform_below(0)");
  // rejection sampling on the top multiple of bound
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = splitmix64(state);
  } while (x >= limit);
  return x % bound;
}

}  // namespace critic

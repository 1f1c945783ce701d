#include "chipfire/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace chipfire {

int ModelGraph::add_vertex(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t#") != std::string::npos) {
    fail(errc::invalid_parameter, "bad vertex name: '" + name + "'");
  }
  if (vertex_index_.count(name)) fail(errc::invalid_parameter, "duplicate vertex: " + name);
  int id = vertex_count();
  vertex_names_.push_back(name);
  vertex_index_[name] = id;
  return id;
}

int ModelGraph::add_edge(const std::string& name, int tail, int head, const Rational& length) {
  if (name.empty() || name.find_first_of(" \t#") != std::string::npos) {
    fail(errc::invalid_parameter, "bad edge name: '" + name + "'");
  }
  if (edge_index_.count(name)) fail(errc::invalid_parameter, "duplicate edge: " + name);
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) {
    fail(errc::invalid_parameter, "edge endpoint out of range");
  }
  if (tail == head) fail(errc::invalid_parameter, "self-loop edges are not allowed: " + name);
  if (!length.is_positive()) fail(errc::invalid_parameter, "edge length must be positive: " + name);
  int id = edge_count();
  edges_.push_back(EdgeRecord{name, tail, head, length});
  edge_index_[name] = id;
  return id;
}

int ModelGraph::add_edge(const std::string& name, const std::string& tail,
                         const std::string& head, const Rational& length) {
  auto t = find_vertex(tail);
  auto h = find_vertex(head);
  if (!t || !h) fail(errc::invalid_parameter, "unknown endpoint for edge " + name);
  return add_edge(name, *t, *h, length);
}

std::optional<int> ModelGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ModelGraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int ModelGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

bool ModelGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  std::vector<std::vector<int>> adj(vertex_count());
  for (const auto& e : edges_) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached == vertex_count();
}

int ModelGraph::genus() const {
  if (!is_connected()) fail(errc::invalid_input, "genus of a disconnected graph");
  return edge_count() - vertex_count() + 1;
}

Rational ModelGraph::length_gcd() const {
  Rational g = 0;
  for (const auto& e : edges_) g = rational_gcd(g, e.length);
  return g;
}

MetricPoint ModelGraph::point_on_edge(int e, const Rational& offset) const {
  if (e < 0 || e >= edge_count()) fail(errc::invalid_parameter, "edge index out of range");
  const auto& rec = edges_[e];
  if (offset.is_negative() || offset > rec.length) {
    fail(errc::invalid_parameter,
         "offset " + offset.str() + " outside [0," + rec.length.str() + "] on " + rec.name);
  }
  if (offset.is_zero()) return MetricPoint::at_vertex(rec.tail);
  if (offset == rec.length) return MetricPoint::at_vertex(rec.head);
  MetricPoint p;
  p.edge = e;
  p.offset = offset;
  return p;
}

std::string ModelGraph::point_name(const MetricPoint& p) const {
  if (p.is_vertex()) return vertex_name(p.vertex);
  return edge(p.edge).name + "@" + p.offset.str();
}

std::string ModelGraph::to_text() const {
  std::ostringstream os;
  for (const auto& name : vertex_names_) os << "vertex " << name << "\n";
  for (const auto& e : edges_) {
    os << "edge " << e.name << " " << vertex_names_[e.tail] << " " << vertex_names_[e.head] << " "
       << e.length.str(/*force_fraction=*/true) << "\n";
  }
  return os.str();
}

ModelGraph ModelGraph::parse(std::istream& in) {
  ModelGraph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto bad = [&](const std::string& why) {
      fail(errc::parse_error, "graph line " + std::to_string(lineno) + ": " + why);
    };
    try {
      if (kind == "vertex") {
        std::string name;
        if (!(ls >> name)) bad("expected `vertex <name>`");
        g.add_vertex(name);
      } else if (kind == "edge") {
        std::string name, tail, head, len;
        if (!(ls >> name >> tail >> head >> len)) {
          bad("expected `edge <name> <tail> <head> <len>`");
        }
        g.add_edge(name, tail, head, Rational::parse(len));
      } else {
        bad("unknown declaration '" + kind + "'");
      }
      std::string extra;
      if (ls >> extra) bad("trailing token '" + extra + "'");
    } catch (const Error& e) {
      if (e.code() == errc::parse_error) throw;
      bad(e.what());
    }
  }
  return g;
}

ModelGraph ModelGraph::parse(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

Rational point_distance(const ModelGraph& g, const MetricPoint& a, const MetricPoint& b) {
  if (a == b) return 0;
  // Dijkstra over vertices, with the two points attached as temporary nodes.
  struct Item {
    Rational dist;
    int node;
    bool operator>(const Item& o) const { return o.dist < dist; }
  };
  int n = g.vertex_count();
  auto node_of = [&](const MetricPoint& p, int extra_id) { return p.is_vertex() ? p.vertex : extra_id; };
  int na = node_of(a, n);
  int nb = node_of(b, na == n ? n + 1 : n);
  int total = n + (a.is_vertex() ? 0 : 1) + (b.is_vertex() ? 0 : 1);

  std::vector<std::vector<std::pair<int, Rational>>> adj(total);
  auto connect = [&](int u, int v, const Rational& w) {
    adj[u].push_back({v, w});
    adj[v].push_back({u, w});
  };
  std::vector<std::pair<int, const MetricPoint*>> interior;
  if (!a.is_vertex()) interior.push_back({na, &a});
  if (!b.is_vertex()) interior.push_back({nb, &b});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    // Interior points on this edge split it; collect and sort them.
    std::vector<std::pair<Rational, int>> cuts;
    for (auto& [id, p] : interior) {
      if (p->edge == e) cuts.push_back({p->offset, id});
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    int prev = rec.tail;
    Rational at = 0;
    for (auto& [off, id] : cuts) {
      connect(prev, id, off - at);
      prev = id;
      at = off;
    }
    connect(prev, rec.head, rec.length - at);
  }

  std::vector<std::optional<Rational>> dist(total);
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[na] = Rational(0);
  pq.push({Rational(0), na});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (!dist[v] || *dist[v] < d) continue;
    if (v == nb) return d;
    for (auto& [u, w] : adj[v]) {
      Rational nd = d + w;
      if (!dist[u] || nd < *dist[u]) {
        dist[u] = nd;
        pq.push({nd, u});
      }
    }
  }
  fail(errc::invalid_input, "points are in different components");
}

}  // namespace chipfire

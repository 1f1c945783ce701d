#include "chipfire/chain.hpp"

namespace chipfire {

Rational default_long_length(int g) { return g == 1 ? Rational(1) : Rational(2 * g - 2); }

ChainOfLoops build_chain_of_loops(int g, std::optional<Rational> ell, const Rational& m) {
  if (g < 1) fail(errc::invalid_parameter, "chain of loops needs g >= 1");
  Rational long_len = ell.value_or(default_long_length(g));
  if (!long_len.is_positive() || !m.is_positive()) {
    fail(errc::invalid_parameter, "chain edge lengths must be positive");
  }

  ChainOfLoops chain;
  chain.g = g;
  chain.ell = long_len;
  chain.m = m;
  chain.genericity_warning = long_len < Rational(2 * g - 2);

  for (int i = 0; i <= g; ++i) chain.graph.add_vertex("v" + std::to_string(i));
  for (int i = 1; i <= g; ++i) {
    chain.graph.add_edge("I" + std::to_string(i), i - 1, i, m);
    chain.graph.add_edge("J" + std::to_string(i), i - 1, i, long_len);
  }
  return chain;
}

ModelGraph ChainOfLoops::prefix_subgraph(int i) const {
  if (i < 0 || i > g) fail(errc::invalid_parameter, "prefix index out of range");
  ModelGraph sub;
  for (int v = 0; v <= i; ++v) sub.add_vertex(graph.vertex_name(v));
  for (int k = 1; k <= i; ++k) {
    sub.add_edge(graph.edge(short_edge(k)).name, k - 1, k, m);
    sub.add_edge(graph.edge(long_edge(k)).name, k - 1, k, ell);
  }
  return sub;
}

}  // namespace chipfire

#include "chipfire/divisor.hpp"

#include <sstream>

namespace chipfire {

std::string Divisor::to_text(const ModelGraph& g) const {
  std::ostringstream os;
  for (auto& [p, c] : chips_) {
    if (p.is_vertex()) {
      os << "chip " << g.vertex_name(p.vertex) << " " << c << "\n";
    } else {
      os << "chip " << g.edge(p.edge).name << " " << p.offset.str(/*force_fraction=*/true) << " "
         << c << "\n";
    }
  }
  return os.str();
}

Divisor Divisor::parse(const ModelGraph& g, std::istream& in) {
  Divisor d;
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
      fail(errc::parse_error, "divisor line " + std::to_string(lineno) + ": " + why);
    };
    if (kind != "chip") bad("expected `chip ...`, got '" + kind + "'");
    std::string place;
    if (!(ls >> place)) bad("missing location");
    std::string tok1, tok2;
    ls >> tok1;
    bool has2 = static_cast<bool>(ls >> tok2);
    try {
      if (auto v = g.find_vertex(place); v && !has2) {
        if (tok1.empty()) bad("missing count");
        d.add(MetricPoint::at_vertex(*v), std::stoll(tok1));
      } else if (auto e = g.find_edge(place); e && has2) {
        d.add(g.point_on_edge(*e, Rational::parse(tok1)), std::stoll(tok2));
      } else {
        bad("unknown location '" + place + "' or wrong field count");
      }
    } catch (const Error& err) {
      if (err.code() == errc::parse_error) throw;
      bad(err.what());
    } catch (const std::exception& ex) {
      bad(ex.what());
    }
    std::string extra;
    if (ls >> extra) bad("trailing token '" + extra + "'");
  }
  return d;
}

Divisor Divisor::parse(const ModelGraph& g, const std::string& text) {
  std::istringstream is(text);
  return parse(g, is);
}

Divisor canonical_divisor(const ModelGraph& g) {
  Divisor k;
  for (int v = 0; v < g.vertex_count(); ++v) k.add(MetricPoint::at_vertex(v), g.degree(v) - 2);
  return k;
}

}  // namespace chipfire

#include "schubert/json_io.hpp"

#include <stdexcept>

namespace schubert {

using nlohmann::json;

json partition_json(const Partition& p) {
  return json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

json symbol_json(const SchubertSymbol& s) {
  return json(std::vector<int>(s.indices().begin(), s.indices().end()));
}

json to_json(const CycleClass& c) {
  json terms = json::array();
  for (const auto& [a, coeff] : c.terms()) {
    terms.push_back({{"partition", partition_json(a)}, {"coeff", coeff}});
  }
  return {{"k", c.context().k()}, {"n", c.context().n()}, {"terms", std::move(terms)}};
}

CycleClass cycle_class_from_json(const json& j) {
  CycleClass c(GrassmannContext(j.at("k").get<int>(), j.at("n").get<int>()));
  for (const json& term : j.at("terms")) {
    c.add_term(Partition(term.at("partition").get<std::vector<int>>()),
               term.at("coeff").get<Coefficient>());
  }
  return c;
}

json to_json(const ZeroPair& z) {
  return {{"a", partition_json(z.a)}, {"b", partition_json(z.b)}, {"codim_sum", z.codim_sum}};
}

json to_json(const MdPair& p) {
  const auto [i, j] = p.type();
  return {{"a", partition_json(p.a)},
          {"b", partition_json(p.b)},
          {"codims", {p.codim_a(), p.codim_b()}},
          {"type", {i, j}}};
}

json to_json(const SearchReport& r) {
  json zero = json::array();
  for (const ZeroPair& z : r.zero_pairs) zero.push_back(to_json(z));
  json md = json::array();
  for (const MdPair& p : r.md_pairs) md.push_back(to_json(p));
  json out = {{"k", r.ctx.k()},
              {"n", r.ctx.n()},
              {"scanned", r.scanned},
              {"egd", r.egd},
              {"zero_pairs", std::move(zero)},
              {"md_pairs", std::move(md)},
              {"elapsed_ms", r.elapsed.count()}};
  if (r.cross_validated) {
    json bad = json::array();
    for (const ZeroPair& z : r.disagreements) bad.push_back(to_json(z));
    out["cross_validation"] = {{"disagreements", std::move(bad)}};
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json counter = json::array();
  for (const Counterexample& c : r.counterexamples) {
    counter.push_back({{"a", partition_json(c.a)}, {"b", partition_json(c.b)}, {"reason", c.reason}});
  }
  json exceptional = json::array();
  for (const auto& [a, b] : r.exceptional_pairs) {
    exceptional.push_back({partition_json(a), partition_json(b)});
  }
  return {{"claim", r.claim},
          {"k", r.k},
          {"n", r.n},
          {"status", r.passed ? "pass" : "fail"},
          {"counterexamples", std::move(counter)},
          {"hypothesis_count", r.hypothesis_count},
          {"exceptional_pairs", std::move(exceptional)}};
}

json to_json(const ClassificationOutcome& o) {
  return {{"l", o.query.l},
          {"k", o.query.k},
          {"n", o.query.n},
          {"verdict", to_string(o.verdict)},
          {"reason", {{"branch", to_string(o.branch)}, {"details", o.details}}}};
}

json table_json(int n, const std::vector<std::vector<ClassificationOutcome>>& table) {
  json rows = json::array();
  json glyphs = json::array();
  for (const auto& row : table) {
    json cells = json::array();
    std::string line;
    for (const ClassificationOutcome& cell : row) {
      cells.push_back(to_json(cell));
      line += verdict_glyph(cell.verdict);
    }
    rows.push_back(std::move(cells));
    glyphs.push_back(line);
  }
  return {{"n", n}, {"cells", std::move(rows)}, {"grid", std::move(glyphs)}};
}

}  // namespace schubert

#include "qpolis/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qpolis/metric.hpp"
#include "qpolis/reals.hpp"
#include "qpolis/space_builders.hpp"

namespace qpolis {

namespace {

[[noreturn]] void schema_fail(const std::string& what) { fail("SCHEMA_ERROR", what); }

std::vector<std::string> names_of(const Json& j) {
  if (!j.is_array()) schema_fail("'points' must be an array of names");
  std::vector<std::string> names;
  for (const auto& p : j) {
    if (!p.is_string()) schema_fail("point names must be strings");
    names.push_back(p.get<std::string>());
  }
  return names;
}

std::map<std::string, std::uint32_t> index_names(const std::vector<std::string>& names) {
  std::map<std::string, std::uint32_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (idx.count(names[i])) schema_fail("duplicate point name '" + names[i] + "'");
    idx[names[i]] = static_cast<std::uint32_t>(i);
  }
  return idx;
}

}  // namespace

Json space_to_json(const FiniteSpace& x) {
  Json j;
  j["schema"] = "qpolis/v1/finite-space";
  j["points"] = x.names();
  Json opens = Json::array();
  for (PointSet u : x.opens()) {
    Json open = Json::array();
    for (std::uint32_t p = 0; p < x.size(); ++p)
      if ((u >> p) & 1) open.push_back(x.name(p));
    opens.push_back(open);
  }
  j["opens"] = opens;
  return j;
}

FiniteSpace space_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
      schema_fail("finite space needs 'points' and 'opens'");
    auto names = names_of(j["points"]);
    auto idx = index_names(names);
    std::vector<PointSet> gens;
    if (!j["opens"].is_array()) schema_fail("'opens' must be an array");
    for (const auto& open : j["opens"]) {
      if (!open.is_array()) schema_fail("each open must be an array of names");
      PointSet u = 0;
      for (const auto& p : open) {
        auto it = idx.find(p.get<std::string>());
        if (it == idx.end()) schema_fail("open mentions unknown point");
        u |= 1ull << it->second;
      }
      gens.push_back(u);
    }
    bool quotient = j.value("t0_quotient", false);
    return quotient ? FiniteSpace::t0_quotient(names, gens)
                    : FiniteSpace::from_opens(std::move(names), gens);
  } catch (const Json::exception& e) {
    schema_fail(e.what());
  }
}

Json map_to_json(const FiniteMap& f) {
  Json j;
  j["schema"] = "qpolis/v1/finite-map";
  j["source"] = space_to_json(f.source);
  j["target"] = space_to_json(f.target);
  Json graph = Json::object();
  for (std::uint32_t x = 0; x < f.source.size(); ++x)
    graph[f.source.name(x)] = f.target.name(f.graph[x]);
  j["graph"] = graph;
  return j;
}

FiniteMap map_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("graph"))
      schema_fail("finite map needs 'source', 'target' and 'graph'");
    FiniteSpace src = space_from_json(j["source"]);
    FiniteSpace tgt = space_from_json(j["target"]);
    auto tgt_idx = index_names(tgt.names());
    std::vector<std::uint32_t> graph(src.size(), 0);
    for (std::uint32_t x = 0; x < src.size(); ++x) {
      auto it = j["graph"].find(src.name(x));
      if (it == j["graph"].end()) schema_fail("graph misses point '" + src.name(x) + "'");
      auto t = tgt_idx.find(it->get<std::string>());
      if (t == tgt_idx.end()) schema_fail("graph value is not a target point");
      graph[x] = t->second;
    }
    return FiniteMap(std::move(src), std::move(tgt), std::move(graph));
  } catch (const Json::exception& e) {
    schema_fail(e.what());
  }
}

namespace {

Json code_to_json(const OpenCode& c) {
  if (!c.generators().finite()) return Json("countable");
  Json arr = Json::array();
  for (std::size_t g = 0; g < c.generators().size(); ++g)
    arr.push_back(c.generators().at(g).indices);
  return arr;
}

OpenCode code_from_json(const Json& j) {
  if (!j.is_array()) schema_fail("open code must be an array of index arrays");
  std::vector<BasicOpen> gens;
  for (const auto& g : j) {
    if (!g.is_array()) schema_fail("basic open must be an index array");
    BasicOpen b;
    for (const auto& i : g) b.indices.push_back(i.get<std::uint64_t>());
    std::sort(b.indices.begin(), b.indices.end());
    gens.push_back(std::move(b));
  }
  return OpenCode::from_basics(std::move(gens));
}

}  // namespace

Json copres_to_json(const Copresentation& c) {
  Json j;
  j["schema"] = "qpolis/v1/copresentation";
  if (c.domain.is_finite)
    j["indices"] = c.domain.count;
  else
    j["indices"] = "countable";
  j["provenance"] = c.provenance;
  if (c.relations.finite()) {
    Json rels = Json::array();
    for (std::size_t r = 0; r < c.relations.size(); ++r) {
      const auto rel = c.relations.at(r);
      Json jr;
      jr["U"] = code_to_json(rel.antecedent);
      jr["V"] = code_to_json(rel.consequent);
      if (!rel.label.empty()) jr["label"] = rel.label;
      rels.push_back(jr);
    }
    j["relations"] = rels;
  } else {
    j["relations"] = "countable";
  }
  return j;
}

Copresentation copres_from_json(const Json& j) {
  try {
    if (!j.is_object()) schema_fail("copresentation must be an object");
    if (j.contains("builtin")) {
      std::string name = j["builtin"].get<std::string>();
      if (name == "reals") return reals_dedekind();
      if (name == "completion") {
        std::uint32_t den = j.value("grid_denominator", 64u);
        return metric_completion(dyadic_grid(den));
      }
      if (name == "sierpinski_power") {
        if (j.contains("n") && j["n"].is_string())
          return sierpinski_power_countable();
        return sierpinski_power(j.value("n", 1u));
      }
      schema_fail("unknown builtin copresentation '" + name + "'");
    }
    if (!j.contains("indices") || !j.contains("relations"))
      schema_fail("copresentation needs 'indices' and 'relations'");
    Copresentation c;
    if (j["indices"].is_string())
      c.domain = IndexDomain::countable();
    else
      c.domain = IndexDomain::finite_n(j["indices"].get<std::uint32_t>());
    std::vector<Pi02Relation> rels;
    for (const auto& jr : j["relations"]) {
      Pi02Relation r;
      r.antecedent = code_from_json(jr.at("U"));
      r.consequent = code_from_json(jr.at("V"));
      r.label = jr.value("label", "");
      rels.push_back(std::move(r));
    }
    c.relations = Enumerable<Pi02Relation>(std::move(rels));
    c.provenance = j.value("provenance", "json");
    c.validate();
    return c;
  } catch (const Json::exception& e) {
    schema_fail(e.what());
  }
}

Json posite_to_json(const Posite& p) {
  Json j;
  j["schema"] = "qpolis/v1/posite";
  j["carrier"] = p.names();
  Json leq = Json::array();
  for (std::uint32_t u = 0; u < p.size(); ++u)
    for (std::uint32_t v = 0; v < p.size(); ++v)
      if (u != v && p.leq(u, v)) leq.push_back({p.names()[u], p.names()[v]});
  j["leq"] = leq;
  Json covers = Json::array();
  for (const Cover& c : p.covers()) {
    Json jc;
    jc["U"] = p.names()[c.covered];
    Json members = Json::array();
    for (std::uint32_t v : c.members) members.push_back(p.names()[v]);
    jc["V"] = members;
    covers.push_back(jc);
  }
  j["covers"] = covers;
  return j;
}

Posite posite_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("carrier"))
      schema_fail("posite needs 'carrier'");
    auto names = names_of(j["carrier"]);
    auto idx = index_names(names);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
    for (const auto& pr : j.value("leq", Json::array())) {
      if (!pr.is_array() || pr.size() != 2) schema_fail("leq entries are pairs");
      auto a = idx.find(pr[0].get<std::string>());
      auto b = idx.find(pr[1].get<std::string>());
      if (a == idx.end() || b == idx.end()) schema_fail("leq mentions unknown element");
      leq.emplace_back(a->second, b->second);
    }
    std::vector<Cover> covers;
    for (const auto& jc : j.value("covers", Json::array())) {
      Cover c;
      auto u = idx.find(jc.at("U").get<std::string>());
      if (u == idx.end()) schema_fail("cover of unknown element");
      c.covered = u->second;
      for (const auto& v : jc.at("V")) {
        auto m = idx.find(v.get<std::string>());
        if (m == idx.end()) schema_fail("cover member unknown");
        c.members.push_back(m->second);
      }
      covers.push_back(std::move(c));
    }
    return Posite::make(std::move(names), leq, std::move(covers));
  } catch (const Json::exception& e) {
    schema_fail(e.what());
  }
}

Json report_to_json(const Report& r) {
  Json j;
  j["ok"] = r.ok;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json jf;
    jf["what"] = f.what;
    for (const auto& [k, v] : f.data) jf[k] = v;
    fails.push_back(jf);
  }
  j["failures"] = fails;
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json j;
  j["schema"] = "qpolis/v1/check-report";
  j["violations"] = r.violations;
  j["pending"] = r.pending;
  Json rels = Json::array();
  for (const auto& c : r.relations) {
    Json jc;
    jc["index"] = c.index;
    if (!c.label.empty()) jc["label"] = c.label;
    jc["status"] = c.status == RelStatus::SatisfiedSoFar ? "satisfied-so-far"
                   : c.status == RelStatus::Pending      ? "pending"
                                                         : "violated";
    jc["depth"] = c.depth;
    rels.push_back(jc);
  }
  j["relations"] = rels;
  return j;
}

Json history_to_json(const FiniteSpace& x, const GameHistory& h) {
  Json j;
  j["schema"] = "qpolis/v1/game-history";
  Json rounds = Json::array();
  auto open_names = [&](PointSet u) {
    Json arr = Json::array();
    for (std::uint32_t p = 0; p < x.size(); ++p)
      if ((u >> p) & 1) arr.push_back(x.name(p));
    return arr;
  };
  for (const auto& r : h.rounds) {
    Json jr;
    jr["U"] = open_names(r.i.open);
    jr["x"] = x.name(r.i.point);
    if (r.has_ii) jr["V"] = open_names(r.ii);
    rounds.push_back(jr);
  }
  j["rounds"] = rounds;
  j["legal"] = h.legal();
  if (!h.legal()) {
    j["offender"] = h.offender == Offender::PlayerI ? "I" : "II";
    j["offending_round"] = h.offending_round;
  }
  if (h.empty_space) j["empty_space"] = true;
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "SCHEMA_ERROR", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "SCHEMA_ERROR", "cannot write '" + path + "'");
  out << bytes;
}

Json load_json(const std::string& path) {
  std::string bytes = read_file(path);
  Json j = Json::parse(bytes, nullptr, false);
  require(!j.is_discarded(), "SCHEMA_ERROR", "malformed JSON in '" + path + "'");
  return j;
}

}  // namespace qpolis

#include "wpi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "wpi/errors.hpp"

namespace wpi {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + " is missing \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer()) throw InputError(what + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_array()) throw InputError(what + ": \"" + key + "\" must be an array");
  return v;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (byte " + std::to_string(e.byte) + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_version(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  auto it = j.find("v");
  if (it != j.end() && *it != kSchemaVersion)
    throw InputError(what + ": unsupported schema version " + it->dump());
}

Json scalar_to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Pyramid& pi) { return {{"rows", pi.rows()}}; }

Pyramid pyramid_from_json(const Json& j) {
  check_version(j, "pyramid");
  std::vector<int> rows;
  for (const auto& r : array_field(j, "rows", "pyramid")) {
    if (!r.is_number_integer()) throw InputError("pyramid rows must be integers");
    rows.push_back(r.get<int>());
  }
  return Pyramid(rows);
}

Json to_json(const TriIndex& t) { return {{"k", t.k}, {"i", t.i}, {"j", t.j}}; }

TriIndex triple_from_json(const Json& j) {
  return {int_field(j, "k", "triple"), int_field(j, "i", "triple"), int_field(j, "j", "triple")};
}

TriIndex parse_triple(std::string_view text) {
  std::string s(text);
  TriIndex t;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> t.k >> c1 >> t.i >> c2 >> t.j) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw InputError("triple must look like k,i,j: \"" + s + "\"");
  return t;
}

Json to_json(const Relation& r) {
  return {{"greater", to_json(r.greater)}, {"lesser", to_json(r.lesser)}, {"strict", r.strict}};
}

Json to_json(const RelationSet& c) {
  Json edges = Json::array();
  for (const auto& r : c.edges()) edges.push_back(to_json(r));
  return {{"edges", edges}};
}

RelationSet relations_from_json(const Json& j, const Pyramid& pi) {
  check_version(j, "relations");
  std::set<Relation> edges;
  for (const auto& e : array_field(j, "edges", "relations")) {
    Relation r;
    r.greater = triple_from_json(field(e, "greater", "edge"));
    r.lesser = triple_from_json(field(e, "lesser", "edge"));
    const Json& s = field(e, "strict", "edge");
    if (!s.is_boolean()) throw InputError("edge: \"strict\" must be a boolean");
    r.strict = s.get<bool>();
    for (const auto& t : {r.greater, r.lesser})
      if (!is_valid(pi, t)) throw InputError("triple " + to_string(t) + " is not in the pyramid");
    edges.insert(r);
  }
  return RelationSet(pi, std::move(edges));
}

Json to_json(const Tableau& l) {
  const Pyramid& pi = l.pyramid();
  Json entries = Json::array();
  for (const auto& t : triples(pi)) {
    const Entry& e = l.at(t);
    entries.push_back({{"k", t.k}, {"i", t.i}, {"j", t.j}, {"class", e.cls}, {"offset", e.offset}});
  }
  return {{"pyramid", to_json(pi)}, {"entries", entries}};
}

Tableau tableau_from_json(const Json& j) {
  check_version(j, "tableau");
  Pyramid pi = pyramid_from_json(field(j, "pyramid", "tableau"));
  std::vector<std::optional<Entry>> slots(triple_count(pi));
  for (const auto& e : array_field(j, "entries", "tableau")) {
    TriIndex t = triple_from_json(e);
    if (!is_valid(pi, t)) throw InputError("tableau entry " + to_string(t) + " is not in the pyramid");
    const Json& cls = field(e, "class", "tableau entry");
    const Json& off = field(e, "offset", "tableau entry");
    if (!cls.is_string() || !off.is_number_integer())
      throw InputError("tableau entry " + to_string(t) + " needs a string class and an integer offset");
    auto& slot = slots[triple_position(pi, t)];
    if (slot) throw InputError("tableau entry " + to_string(t) + " given twice");
    slot = Entry{cls.get<std::string>(), off.get<long>()};
  }
  std::vector<Entry> entries;
  auto all = triples(pi);
  for (std::size_t p = 0; p < slots.size(); ++p) {
    if (!slots[p]) throw InputError("tableau entry " + to_string(all[p]) + " missing");
    entries.push_back(*slots[p]);
  }
  return Tableau(pi, std::move(entries));
}

Json delta_to_json(const Pyramid& pi, const TableauDelta& d) {
  Json out = Json::array();
  for (const auto& t : triples(pi)) {
    int z = d.get(pi, t);
    if (z != 0) out.push_back({{"k", t.k}, {"i", t.i}, {"j", t.j}, {"z", z}});
  }
  return out;
}

WeightsInput weights_from_json(const Json& j) {
  check_version(j, "weights");
  WeightsInput in;
  for (const auto& w : array_field(j, "weights", "weights")) {
    if (!w.is_array() || w.empty()) throw InputError("each weight must be a nonempty array");
    GlWeight g;
    for (const auto& x : w) g.lambda.push_back(scalar_from_json(x));
    in.weights.push_back(std::move(g));
  }
  if (in.weights.empty()) throw InputError("weights: at least one weight is needed");
  if (j.contains("points")) {
    for (const auto& x : array_field(j, "points", "weights")) in.points.push_back(scalar_from_json(x));
    if (in.points.size() != in.weights.size()) throw InputError("weights: one point per weight");
  } else {
    in.points.assign(in.weights.size(), Scalar(0));
  }
  return in;
}

Json to_json(const GlWeight& w) {
  Json out = Json::array();
  for (const auto& x : w.lambda) out.push_back(scalar_to_json(x));
  return out;
}

Json to_json(const AdmissibilityCertificate& cert) {
  Json ts = Json::array(), es = Json::array();
  for (const auto& t : cert.triples) ts.push_back(to_json(t));
  for (const auto& e : cert.edges) es.push_back(to_json(e));
  return {{"admissible", cert.admissible}, {"reason", cert.reason}, {"triples", ts}, {"edges", es}};
}

Json to_json(const Pyramid& pi, const VerificationReport& report) {
  Json fams = Json::array();
  for (const auto& f : report.families)
    fams.push_back({{"family", f.family},
                    {"checked", f.checked},
                    {"skipped", f.skipped},
                    {"violations", f.violations},
                    {"passed", f.violations == 0 && f.checked > 0}});
  Json out = {{"passed", report.passed()},
              {"window_overflow", report.window_overflow()},
              {"radius", report.radius},
              {"budget", report.budget},
              {"instantiations", report.instantiations},
              {"families", fams},
              {"first_violation", nullptr}};
  if (const auto& v = report.first_violation)
    out["first_violation"] = {{"instantiation", v->instantiation},
                              {"family", v->family},
                              {"instance", v->instance},
                              {"at", delta_to_json(pi, v->at)},
                              {"target", delta_to_json(pi, v->target)},
                              {"coefficient", scalar_to_json(v->coefficient)}};
  return out;
}

Json to_json(const SingularCount& s) {
  return {{"kappa", s.kappa}, {"depth", s.depth}, {"dimension", s.dimension}, {"singular", s.singular}};
}

}  // namespace wpi

#include "wpi/cli.hpp"

#include <map>
#include <numeric>

#include "wpi/errors.hpp"

namespace wpi {

namespace {

struct Inputs {
  std::optional<Pyramid> pyramid;
  std::optional<RelationSet> relations;
  std::optional<Tableau> tableau;
  std::optional<WeightsInput> weights;
  std::optional<TriIndex> triple;
};

Inputs load(const JobSpec& job) {
  Inputs in;
  std::optional<Json> relations_doc;
  if (job.pyramid) in.pyramid = pyramid_from_json(read_json_file(*job.pyramid));
  if (job.tableau) {
    in.tableau = tableau_from_json(read_json_file(*job.tableau));
    if (in.pyramid && !(*in.pyramid == in.tableau->pyramid()))
      throw InputError("the tableau lives on a different pyramid than --pyramid");
    in.pyramid = in.tableau->pyramid();
  }
  if (job.relations) relations_doc = read_json_file(*job.relations);
  if (job.weights) in.weights = weights_from_json(read_json_file(*job.weights));
  if (job.triple) in.triple = parse_triple(*job.triple);
  if (relations_doc) {
    if (!in.pyramid) throw InputError("--relations needs --pyramid or --tableau");
    in.relations = relations_from_json(*relations_doc, *in.pyramid);
  }
  return in;
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InputError(std::string(flag) + " is required for this command");
  return *v;
}

Json header(const JobSpec& job) { return {{"v", kSchemaVersion}, {"command", job.command}}; }

JobResult check_admissible(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  Json out = header(job);
  auto cert = is_admissible(c);
  out["pyramid"] = to_json(c.pyramid());
  out["certificate"] = to_json(cert);
  return {cert.admissible ? kExitOk : kExitFalse, out};
}

JobResult reduce_job(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  Json out = header(job);
  out["relations"] = to_json(reduce(c));
  return {kExitOk, out};
}

JobResult rr_remove_job(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  const auto& t = need(in.triple, "--triple");
  Json out = header(job);
  out["triple"] = to_json(t);
  out["relations"] = to_json(rr_remove(c, t));
  return {kExitOk, out};
}

JobResult enumerate_job(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  const auto& l = need(in.tableau, "--tableau");
  auto members = enumerate_basis(c, l, job.radius);
  Json list = Json::array();
  for (const auto& z : members) list.push_back(delta_to_json(l.pyramid(), z));
  Json out = header(job);
  out["radius"] = job.radius;
  out["count"] = members.size();
  out["members"] = list;
  return {kExitOk, out};
}

JobResult verify_job(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  const auto& l = need(in.tableau, "--tableau");
  VerifyOptions opt;
  opt.radius = job.radius;
  opt.budget = job.budget;
  opt.instantiations = job.instantiations;
  opt.seed = job.seed;
  auto report = verify_defining_relations(c, l, opt);
  Json out = header(job);
  out["seed"] = job.seed;
  out["report"] = to_json(l.pyramid(), report);
  int code = !report.passed() ? kExitFalse : report.window_overflow() ? kExitWindow : kExitOk;
  return {code, out};
}

JobResult irreducible_job(const JobSpec& job, const Inputs& in) {
  const auto& c = need(in.relations, "--relations");
  const auto& l = need(in.tableau, "--tableau");
  if (!satisfies(c, l)) throw PreconditionError("the tableau does not satisfy the relations");
  bool irr = is_irreducible(c, l);
  Json out = header(job);
  out["irreducible"] = irr;
  out["maximal_set"] = to_json(maximal_set(l));
  return {irr ? kExitOk : kExitFalse, out};
}

JobResult tensor_job(const JobSpec& job, const Inputs& in) {
  const auto& w = need(in.weights, "--weights");
  for (const auto& g : w.weights)
    if (g.n() != w.weights.front().n()) throw InputError("weights of different rank");
  if (!is_good(w.weights)) throw InputError("every weight must be good");
  if (job.depth < 0) throw InputError("--depth must be nonnegative");
  Json cond;
  if (job.mode == "generic") {
    cond = {{"name", "generic"}, {"holds", is_generic(w.weights)}};
  } else if (job.mode == "integral") {
    if (w.weights.size() != 2) throw InputError("integral mode needs exactly two weights");
    cond = {{"name", "integral"}, {"holds", integral_condition(w.weights[0], w.weights[1])}};
  } else {
    throw InputError("--mode must be generic or integral");
  }
  TensorModule m(w.weights, w.points, job.depth);
  int order = default_singular_order(m.n(), job.depth);
  auto profile = singular_profile(m, job.depth, order);
  std::map<int, std::pair<std::size_t, std::size_t>> per_depth;
  Json spaces = Json::array();
  for (const auto& s : profile) {
    spaces.push_back(to_json(s));
    per_depth[s.depth].first += s.dimension;
    per_depth[s.depth].second += s.singular;
  }
  Json depths = Json::array();
  for (const auto& [d, v] : per_depth)
    depths.push_back({{"depth", d}, {"dimension", v.first}, {"singular", v.second}});
  bool top_only = only_top_singular(profile);
  Json weights = Json::array(), points = Json::array();
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    weights.push_back(to_json(w.weights[k]));
    points.push_back(scalar_to_json(w.points[k]));
  }
  Json out = header(job);
  out["weights"] = weights;
  out["points"] = points;
  out["depth"] = job.depth;
  out["series_order"] = order;
  out["condition"] = cond;
  out["weight_spaces"] = spaces;
  out["per_depth"] = depths;
  out["only_top_singular"] = top_only;
  return {top_only ? kExitOk : kExitFalse, out};
}

JobResult error_result(const JobSpec& job, int code, const char* kind, const std::string& msg) {
  Json out = header(job);
  out["error"] = {{"kind", kind}, {"message", msg}};
  return {code, out};
}

}  // namespace

JobResult run(const JobSpec& job) {
  static const std::map<std::string, JobResult (*)(const JobSpec&, const Inputs&)> commands{
      {"check-admissible", check_admissible}, {"reduce", reduce_job},
      {"rr-remove", rr_remove_job},           {"enumerate-basis", enumerate_job},
      {"verify-relations", verify_job},       {"irreducible", irreducible_job},
      {"tensor-check", tensor_job},
  };
  try {
    auto it = commands.find(job.command);
    if (it == commands.end()) throw InputError("unknown command \"" + job.command + "\"");
    if (job.radius < 0 || job.budget < 1 || job.instantiations < 1)
      throw InputError("--radius must be >= 0, --budget and --instantiations >= 1");
    Inputs in = load(job);
    return it->second(job, in);
  } catch (const WindowOverflowError& e) {
    return error_result(job, kExitWindow, "window-overflow", e.what());
  } catch (const InputError& e) {
    return error_result(job, kExitInput, "input", e.what());
  } catch (const PreconditionError& e) {
    return error_result(job, kExitInput, "precondition", e.what());
  } catch (const CriticalTableauError& e) {
    return error_result(job, kExitInput, "critical", e.what());
  }
}

}  // namespace wpi

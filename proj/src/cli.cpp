// Copyright 2026 The crclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crclab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crclab/families.hpp"
#include "crclab/graphs.hpp"
#include "crclab/parallel.hpp"

namespace crclab::cli {

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kFastLimit = std::uint64_t{1} << 22;

// ---------------------------------------------------------------- serialization

json array_json(const IntersectionArray& ia) { return {{"b", ia.b}, {"c", ia.c}, {"text", to_string(ia)}}; }

json claims_json(const Claims& c) {
  json j = {{"n", c.n}, {"k", c.k}};
  if (c.d) j["d"] = *c.d;
  if (c.rho) j["rho"] = *c.rho;
  if (c.s) j["s"] = *c.s;
  if (c.array) j["array"] = array_json(*c.array);
  if (c.cr) j["cr"] = *c.cr;
  if (c.up) j["up"] = *c.up;
  return j;
}

json origin_json(const Origin& o) {
  return {{"kind", to_string(o.kind)}, {"p", o.p},           {"j", o.j},
          {"ext_degree", o.ext_degree}, {"m_ext", o.m_ext}, {"m_base", o.m_base},
          {"ext_first", o.ext_first},   {"nested", o.nested}};
}

Origin origin_from(const json& j) {
  Origin o;
  o.kind = provenance_from_string(j.at("kind").get<std::string>());
  o.p = j.at("p");
  o.j = j.at("j");
  o.ext_degree = j.at("ext_degree");
  o.m_ext = j.at("m_ext");
  o.m_base = j.at("m_base");
  o.ext_first = j.at("ext_first");
  o.nested = j.at("nested");
  return o;
}

json manifest_json(const FamilyMember& m) {
  json params = json::object();
  for (const auto& [k, v] : m.spec.params) params[k] = v;
  json j = {{"schema_version", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"kind", to_string(m.spec.kind)},
            {"label", m.spec.label},
            {"params", params},
            {"field_order", m.spec.field_order},
            {"claims", claims_json(m.spec.claims)},
            {"degenerate", m.spec.degenerate},
            {"origin", origin_json(m.code.origin())}};
  if (m.spec.complete_transitivity) j["complete_transitivity"] = *m.spec.complete_transitivity;
  return j;
}

// ---------------------------------------------------------------- reports

class Report {
 public:
  Report(std::string command, bool timing) : timing_(timing) {
    j_ = {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", std::move(command)},
          {"spec", nullptr},
          {"params", json::object()},
          {"verdicts", json::object()},
          {"witness", nullptr},
          {"timing", json::object()},
          {"mode", json::object()}};
  }

  json& operator[](const char* key) { return j_[key]; }

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    if (timing_) j_["timing"][phase] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  /// Records the first failure only.
  void fail(json witness) {
    if (j_["witness"].is_null()) j_["witness"] = std::move(witness);
  }
  bool failed() const { return !j_.at("witness").is_null(); }

  int finish(std::ostream& out, const std::string& path) {
    const int code = failed() ? kClaimFailed : kOk;
    j_["exit_code"] = code;
    if (path.empty()) {
      out << j_.dump(2) << '\n';
    } else {
      std::ofstream f(path);
      if (!f) throw Error(ErrorCode::ParseError, "cannot write report " + path);
      f << j_.dump(2) << '\n';
      out << j_["command"].get<std::string>() << ": " << (code == kOk ? "ok" : "claim failed") << " (report " << path
          << ")\n";
    }
    return code;
  }

 private:
  json j_;
  bool timing_;
};

// ---------------------------------------------------------------- shared options

struct Common {
  bool slow = false;
  std::optional<std::uint64_t> max_syndromes;
  std::string report;
  bool no_timing = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--slow", c.slow, "Allow more than 2^22 syndromes or dual words");
  app->add_option("--max-syndromes", c.max_syndromes, "Syndrome-space cap (overrides CRCLAB_MAX_SYNDROMES)");
  app->add_option("--report", c.report, "Write the JSON report here instead of stdout");
  app->add_flag("--no-timing", c.no_timing, "Omit timing values so reports are byte-reproducible");
}

Limits limits_for(const Common& c) {
  Limits l;
  if (const char* env = std::getenv("CRCLAB_MAX_SYNDROMES")) {
    try {
      l.max_syndromes = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameters, "CRCLAB_MAX_SYNDROMES is not a number");
    }
  }
  if (c.max_syndromes) l.max_syndromes = *c.max_syndromes;
  return l;
}

json limits_json(const Limits& l, const Common& c) {
  return {{"max_syndromes", l.max_syndromes}, {"max_dual_words", l.max_dual_words},
          {"max_ambient", l.max_ambient},     {"max_graph_vertices", l.max_graph_vertices},
          {"slow", c.slow},                   {"threads", worker_count()}};
}

/// Syndrome space and dual code both have Q^m elements.
void gate(const LinearCode& code, const Common& c) {
  long double size = 1;
  for (std::size_t i = 0; i < code.redundancy(); ++i) size *= code.field()->order();
  if (!c.slow && size > static_cast<long double>(kFastLimit))
    throw Error(ErrorCode::SlowModeRequired, "Q^m = " + std::to_string(static_cast<std::uint64_t>(std::min(size, 9.2e18L))) +
                                                 " exceeds 2^22; rerun with --slow");
}

std::set<std::string> split_list(const std::string& s, const std::set<std::string>& allowed) {
  std::set<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!allowed.count(item)) throw Error(ErrorCode::BadParameters, "unknown item '" + item + "'");
    out.insert(item);
  }
  return out;
}

struct Loaded {
  LinearCode code;
  json manifest;  // null when absent
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  auto h = read_matrix(in);
  json manifest = nullptr;
  Origin origin;
  const std::string mpath = path + ".manifest.json";
  if (std::filesystem::exists(mpath)) {
    std::ifstream min(mpath);
    try {
      manifest = json::parse(min);
      origin = origin_from(manifest.at("origin"));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, "bad manifest " + mpath + ": " + e.what());
    }
  }
  return {LinearCode(std::move(h), origin), std::move(manifest)};
}

const json* claim_of(const json& manifest, const char* key) {
  if (manifest.is_null() || !manifest.contains("claims") || !manifest["claims"].contains(key)) return nullptr;
  return &manifest["claims"][key];
}

void compare(Report& r, json& results, const char* name, const json* claimed, const json& computed) {
  if (!claimed) return;
  const bool holds = *claimed == computed;
  results.push_back({{"name", name}, {"claimed", *claimed}, {"computed", computed}, {"holds", holds}});
  if (!holds) r.fail({{"check", "claim"}, {"name", name}, {"claimed", *claimed}, {"computed", computed}});
}

json cr_witness_json(const CrWitness& w) {
  return {{"check", "cr"},         {"layer", w.layer},       {"first", w.first},        {"second", w.second},
          {"first_c", w.first_c},  {"first_b", w.first_b},   {"second_c", w.second_c}, {"second_b", w.second_b}};
}

json drg_witness_json(const DrgWitness& w) {
  return {{"check", "drg"},           {"base", w.base},         {"vertex", w.vertex},
          {"distance", w.distance},   {"quantity", w.quantity}, {"expected", w.expected},
          {"found", w.found}};
}

json iso_json(const BilinearIso& iso) {
  json j = {{"verified", iso.verified}, {"rows", iso.rows}, {"cols", iso.cols}, {"edge_checked", iso.edge_checked}};
  j["mismatch"] = iso.mismatch ? json(*iso.mismatch) : json(nullptr);
  j["failing_generator"] = iso.failing_generator ? json(*iso.failing_generator) : json(nullptr);
  return j;
}

json d_json(const std::optional<unsigned>& d) { return d ? json(*d) : json(">4"); }

// ---------------------------------------------------------------- construct

struct ConstructOpts {
  Common common;
  std::string family;
  std::optional<std::uint64_t> q;
  std::optional<unsigned> u, ma, mb, m, r, a, b, nb, item;
  std::string output = "code.mat";
};

unsigned need(const std::optional<unsigned>& v, const char* name) {
  if (!v) throw Error(ErrorCode::BadParameters, std::string("missing --") + name);
  return *v;
}

FamilyMember build(const ConstructOpts& o) {
  const auto q = [&] {
    if (!o.q) throw Error(ErrorCode::BadParameters, "missing --q");
    return *o.q;
  };
  if (o.family == "kronecker") return kronecker_code(q(), o.u.value_or(1), need(o.ma, "ma"), need(o.mb, "mb"));
  if (o.family == "lifted") return lifted_code(q(), need(o.m, "m"), need(o.r, "r"));
  if (o.family == "up") return up_family(q(), o.u.value_or(1), need(o.m, "m"), need(o.nb, "nb"));
  if (o.family == "remark") return remark_counterexample(o.common.slow);
  const unsigned item = need(o.item, "item");
  if (item < 1 || item > 5) throw Error(ErrorCode::BadParameters, "--item must be 1..5");
  auto members = theorem_main_family(q(), need(o.a, "a"), need(o.b, "b"), o.u.value_or(1));
  return std::move(members[item - 1]);
}

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  Report r("construct", !o.common.no_timing);
  auto member = r.timed("construct", [&] { return build(o); });
  {
    std::ofstream f(o.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.output);
    write_matrix(f, member.code.parity_check());
  }
  const auto manifest = manifest_json(member);
  {
    std::ofstream f(o.output + ".manifest.json");
    if (!f) throw Error(ErrorCode::ParseError, "cannot write manifest");
    f << manifest.dump(2) << '\n';
  }
  r["spec"] = manifest;
  r["params"] = {{"family", o.family}, {"output", o.output}};
  r["verdicts"] = {{"rows", member.code.parity_check().rows()},
                   {"cols", member.code.parity_check().cols()},
                   {"field_order", member.code.field()->order()},
                   {"matrix", o.output},
                   {"manifest", o.output + ".manifest.json"}};
  r["mode"] = {{"slow", o.common.slow}};
  return r.finish(out, o.common.report);
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  Common common;
  std::string file;
  std::string checks = "cr,ia,d,up";
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const auto checks = split_list(o.checks, {"cr", "up", "ia", "d", "alpha"});
  auto loaded = load(o.file);
  const auto& code = loaded.code;
  const auto& manifest = loaded.manifest;
  const Limits limits = limits_for(o.common);

  Report r("verify", !o.common.no_timing);
  r["spec"] = manifest;
  r["params"] = {{"file", o.file}, {"checks", std::vector<std::string>(checks.begin(), checks.end())}};
  r["mode"] = limits_json(limits, o.common);
  gate(code, o.common);

  json& v = r["verdicts"];
  json claims = json::array();
  v["n"] = code.length();
  v["k"] = code.dimension();
  v["field_order"] = code.field()->order();
  compare(r, claims, "n", claim_of(manifest, "n"), code.length());
  compare(r, claims, "k", claim_of(manifest, "k"), code.dimension());

  if (checks.count("d")) {
    const auto d = r.timed("min_distance", [&] { return min_distance_upto4(code); });
    v["d"] = d_json(d);
    compare(r, claims, "d", claim_of(manifest, "d"), d_json(d));
  }

  std::optional<CosetTable> table;
  if (checks.count("cr") || checks.count("ia") || checks.count("up")) {
    table = r.timed("coset_weights", [&] { return coset_weights(code, limits); });
    v["rho"] = table->rho;
    v["coset_leaders_per_weight"] = table->mu;
    compare(r, claims, "rho", claim_of(manifest, "rho"), table->rho);
  }

  if (checks.count("cr") || checks.count("ia")) {
    const auto cr = r.timed("cr_scan", [&] { return check_completely_regular(*table); });
    json jcr = {{"completely_regular", cr.completely_regular()}};
    if (cr.array) {
      jcr["array"] = array_json(*cr.array);
      jcr["mu_recurrence"] = verify_mu_recurrence(*table, *cr.array);
    }
    if (cr.witness) jcr["witness"] = cr_witness_json(*cr.witness);
    v["cr"] = jcr;
    if (checks.count("cr") && cr.witness) r.fail(cr_witness_json(*cr.witness));
    if (checks.count("ia")) {
      const json* claimed = claim_of(manifest, "array");
      if (claimed) compare(r, claims, "array", &(*claimed)["text"], cr.array ? json(to_string(*cr.array)) : json(nullptr));
      if (cr.array && !verify_mu_recurrence(*table, *cr.array)) r.fail({{"check", "mu_recurrence"}});
    }
  }

  if (checks.count("up")) {
    const unsigned s = r.timed("outer_distance", [&] { return outer_distance(code, limits); });
    v["s"] = s;
    compare(r, claims, "s", claim_of(manifest, "s"), s);
    const bool up = table->rho == s;
    v["up"] = {{"uniformly_packed", up}, {"rho", table->rho}, {"s", s}};
    if (!up) r.fail({{"check", "up"}, {"rho", table->rho}, {"s", s}});
  }

  if (checks.count("alpha")) {
    const auto alpha = r.timed("alpha", [&] { return solve_alpha(code, limits); });
    json ja = {{"solved", alpha.has_value()}};
    if (alpha) {
      std::vector<std::string> vals;
      for (const auto& a : *alpha) vals.push_back(a.str());
      ja["values"] = vals;
    }
    v["alpha"] = ja;
    if (!alpha) r.fail({{"check", "alpha"}, {"reason", "no rational solution"}});
  }

  v["claims"] = claims;
  return r.finish(out, o.common.report);
}

// ---------------------------------------------------------------- graph

struct GraphOpts {
  Common common;
  std::string file;
  std::string actions = "drg";
  std::string drg_mode = "auto";
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::optional<std::string> shape;
  std::string edges;
  bool generic_check = false;
};

std::optional<std::pair<std::size_t, std::size_t>> parse_shape(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  const auto x = s->find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    return std::pair{std::stoul(s->substr(0, x)), std::stoul(s->substr(x + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParameters, "--shape must look like 3x2");
  }
}

int cmd_graph(const GraphOpts& o, std::ostream& out) {
  const auto actions = split_list(o.actions, {"drg", "bilinear-iso", "antipodal", "export"});
  auto loaded = load(o.file);
  const auto& code = loaded.code;
  Limits limits = limits_for(o.common);

  Report r("graph", !o.common.no_timing);
  r["spec"] = loaded.manifest;
  r["params"] = {{"file", o.file}, {"actions", std::vector<std::string>(actions.begin(), actions.end())}};
  json mode = limits_json(limits, o.common);
  gate(code, o.common);

  const auto table = r.timed("coset_weights", [&] { return coset_weights(code, limits); });
  const auto g = r.timed("coset_graph", [&] { return coset_graph(table, limits); });
  json& v = r["verdicts"];
  v["vertices"] = g.vertex_count();
  v["edges"] = g.edge_count();
  v["degree"] = g.degree(0);

  if (actions.count("drg")) {
    DrgMode m = default_drg_mode(g);
    if (o.drg_mode == "full") m.kind = DrgMode::Kind::full;
    else if (o.drg_mode == "sampled") m.kind = DrgMode::Kind::sampled;
    m.seed = o.seed;
    m.samples = o.samples;
    const auto drg = r.timed("drg", [&] { return check_distance_regular(g, m); });
    json jd = {{"distance_regular", drg.distance_regular()}, {"mode", drg.mode}, {"bases", drg.bases.size()}};
    if (drg.array) jd["array"] = array_json(*drg.array);
    if (drg.witness) {
      jd["witness"] = drg_witness_json(*drg.witness);
      r.fail(drg_witness_json(*drg.witness));
    }
    if (drg.array) {
      const json* claimed = claim_of(loaded.manifest, "array");
      if (claimed && (*claimed)["text"] != to_string(*drg.array)) {
        jd["matches_claim"] = false;
        r.fail({{"check", "drg_array"}, {"claimed", (*claimed)["text"]}, {"computed", to_string(*drg.array)}});
      } else if (claimed) {
        jd["matches_claim"] = true;
      }
    }
    v["drg"] = jd;
    mode["drg"] = drg.mode;
  }

  if (actions.count("bilinear-iso")) {
    const auto iso = r.timed("bilinear_iso", [&] { return explicit_bilinear_isomorphism(code, table, parse_shape(o.shape)); });
    json ji = iso_json(iso);
    if (iso.verified && o.generic_check) {
      const auto& orig = code.origin();
      const auto bg = bilinear_forms_graph(field_create(orig.p, orig.j), iso.rows, iso.cols, limits);
      const auto phi = r.timed("generic_iso", [&] { return graph_isomorphic(g, bg); });
      ji["generic"] = phi.has_value();
      if (!phi) r.fail({{"check", "generic_iso"}, {"reason", "generic search found no isomorphism"}});
    }
    v["bilinear_iso"] = ji;
    if (!iso.verified) r.fail({{"check", "bilinear_iso"}, {"mismatch", ji["mismatch"]}, {"failing_generator", ji["failing_generator"]}});
  }

  if (actions.count("antipodal")) {
    const auto a = r.timed("antipodal", [&] { return check_antipodal(g); });
    v["antipodal"] = to_string(a);
  }

  if (actions.count("export")) {
    const std::string path = o.edges.empty() ? o.file + ".edges" : o.edges;
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    write_edge_list(f, g);
    v["export"] = {{"path", path}, {"lines", g.edge_count()}};
  }

  r["mode"] = mode;
  return r.finish(out, o.common.report);
}

// ---------------------------------------------------------------- family

struct FamilyOpts {
  Common common;
  std::uint64_t q = 2;
  unsigned a = 1, b = 1, u = 1;
  bool equal_ia = false;
  bool graph_iso = false;
  bool corollary = false;
};

int cmd_family(const FamilyOpts& o, std::ostream& out) {
  const Limits limits = limits_for(o.common);
  Report r("family", !o.common.no_timing);
  r["params"] = {{"q", o.q}, {"a", o.a}, {"b", o.b}, {"u", o.u}, {"verify_equal_ia", o.equal_ia},
                 {"verify_graph_iso", o.graph_iso}, {"corollary", o.corollary}};
  r["mode"] = limits_json(limits, o.common);

  std::vector<FamilyMember> members;
  std::pair<std::size_t, std::size_t> shape;
  json& v = r["verdicts"];
  if (o.corollary) {
    auto fam = r.timed("construct", [&] { return corollary_family(o.q, o.a, o.b); });
    v["corollary"] = {{"constructed", fam.constructed},
                      {"distinct", fam.members.size()},
                      {"field_choices", fam.field_choices},
                      {"bound", fam.bound},
                      {"within_bound", fam.field_choices <= fam.bound}};
    if (fam.field_choices > fam.bound)
      r.fail({{"check", "corollary_bound"}, {"field_choices", fam.field_choices}, {"bound", fam.bound}});
    members = std::move(fam.members);
    shape = {o.b, o.a};
  } else {
    members = r.timed("construct", [&] { return theorem_main_family(o.q, o.a, o.b, o.u); });
    shape = {o.b, std::size_t{o.u} * o.a};
  }
  r["spec"] = {{"family", o.corollary ? "corollary_family" : "main_family"}};

  json jm = json::array();
  std::vector<CosetTable> tables;
  std::vector<std::optional<IntersectionArray>> arrays;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    gate(m.code, o.common);
    const std::string tag = "member" + std::to_string(i + 1);
    auto table = r.timed(tag + ".coset_weights", [&] { return coset_weights(m.code, limits); });
    const auto cr = r.timed(tag + ".cr_scan", [&] { return check_completely_regular(table); });
    const unsigned s = r.timed(tag + ".outer_distance", [&] { return outer_distance(m.code, limits); });
    const auto d = min_distance_upto4(m.code);

    json entry = {{"label", m.spec.label},
                  {"field_order", m.spec.field_order},
                  {"n", m.code.length()},
                  {"k", m.code.dimension()},
                  {"d", d_json(d)},
                  {"rho", table.rho},
                  {"s", s},
                  {"completely_regular", cr.completely_regular()},
                  {"degenerate", m.spec.degenerate},
                  {"claims", claims_json(m.spec.claims)}};
    if (m.spec.complete_transitivity) entry["complete_transitivity"] = *m.spec.complete_transitivity;
    if (cr.array) entry["array"] = array_json(*cr.array);

    json results = json::array();
    const json claims = claims_json(m.spec.claims);
    compare(r, results, "n", &claims["n"], m.code.length());
    compare(r, results, "k", &claims["k"], m.code.dimension());
    if (claims.contains("d")) compare(r, results, "d", &claims["d"], d_json(d));
    if (claims.contains("rho")) compare(r, results, "rho", &claims["rho"], table.rho);
    if (claims.contains("s")) compare(r, results, "s", &claims["s"], s);
    if (claims.contains("array"))
      compare(r, results, "array", &claims["array"]["text"], cr.array ? json(to_string(*cr.array)) : json(nullptr));
    if (cr.witness) r.fail(cr_witness_json(*cr.witness));
    entry["claim_results"] = results;
    jm.push_back(entry);

    arrays.push_back(cr.array);
    tables.push_back(std::move(table));
  }
  v["members"] = jm;

  if (o.equal_ia) {
    bool equal = !arrays.empty() && arrays.front().has_value();
    for (const auto& a : arrays) equal = equal && a == arrays.front();
    v["equal_arrays"] = equal;
    if (equal) v["common_array"] = array_json(*arrays.front());
    else r.fail({{"check", "equal_arrays"}});
  }

  if (o.graph_iso) {
    // One representative per distinct code.
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool dup = false;
      for (auto k : reps) dup = dup || same_columns(members[i].code, members[k].code);
      if (!dup) reps.push_back(i);
    }
    const auto base = field_create(prime_power(o.q).first, prime_power(o.q).second);
    json jg = {{"distinct_graphs", reps.size()}, {"shape", {shape.first, shape.second}}};
    json explicit_maps = json::array();
    bool all_ok = true;
    std::vector<SimpleGraph> graphs;
    for (auto i : reps) {
      const auto iso = r.timed("member" + std::to_string(i + 1) + ".bilinear_iso",
                               [&] { return explicit_bilinear_isomorphism(members[i].code, tables[i], shape); });
      json e = iso_json(iso);
      e["member"] = i + 1;
      explicit_maps.push_back(e);
      all_ok = all_ok && iso.verified;
      graphs.push_back(coset_graph(tables[i], limits));
    }
    jg["explicit"] = explicit_maps;

    if (!graphs.empty() && graphs.front().vertex_count() <= kGenericIsoLimit) {
      const auto bg = bilinear_forms_graph(base, shape.first, shape.second, limits);
      json pairs = json::array();
      for (std::size_t x = 0; x < graphs.size(); ++x) {
        const bool ok = r.timed("generic_iso.bilinear." + std::to_string(reps[x] + 1),
                                [&] { return graph_isomorphic(graphs[x], bg).has_value(); });
        pairs.push_back({{"first", reps[x] + 1}, {"second", "bilinear"}, {"isomorphic", ok}});
        all_ok = all_ok && ok;
        for (std::size_t y = x + 1; y < graphs.size(); ++y) {
          const bool pair_ok = r.timed("generic_iso." + std::to_string(reps[x] + 1) + "." + std::to_string(reps[y] + 1),
                                       [&] { return graph_isomorphic(graphs[x], graphs[y]).has_value(); });
          pairs.push_back({{"first", reps[x] + 1}, {"second", reps[y] + 1}, {"isomorphic", pair_ok}});
          all_ok = all_ok && pair_ok;
        }
      }
      jg["generic"] = pairs;
    } else {
      jg["generic"] = "skipped (above generic search cap)";
    }
    jg["all_isomorphic"] = all_ok;
    v["graph_iso"] = jg;
    if (!all_ok) r.fail({{"check", "graph_iso"}});
  }

  return r.finish(out, o.common.report);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"crclab: construct and verify completely regular codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "Build a family member and write its matrix and manifest");
  construct->add_option("--family", co.family, "kronecker | lifted | main | up | remark")
      ->required()
      ->check(CLI::IsMember({"kronecker", "lifted", "main", "up", "remark"}));
  construct->add_option("--q", co.q, "Base field order");
  construct->add_option("--u", co.u, "Extension degree");
  construct->add_option("--ma", co.ma, "Redundancy of the extension-field Hamming factor");
  construct->add_option("--mb", co.mb, "Redundancy of the base-field Hamming factor");
  construct->add_option("--m", co.m, "Hamming redundancy");
  construct->add_option("--r", co.r, "Lift degree");
  construct->add_option("--a", co.a);
  construct->add_option("--b", co.b);
  construct->add_option("--nb", co.nb, "Repetition length");
  construct->add_option("--item", co.item, "Main-family item 1..5");
  construct->add_option("-o,--output", co.output, "Matrix file (manifest goes to FILE.manifest.json)");
  add_common(construct, co.common);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Verify a code against its manifest");
  verify->add_option("file", vo.file)->required();
  verify->add_option("--checks", vo.checks, "Comma list of cr, up, ia, d, alpha");
  add_common(verify, vo.common);

  GraphOpts go;
  auto* graph = app.add_subcommand("graph", "Coset graph analyses");
  graph->add_option("file", go.file)->required();
  graph->add_option("--actions", go.actions, "Comma list of drg, bilinear-iso, antipodal, export");
  graph->add_option("--drg-mode", go.drg_mode)->check(CLI::IsMember({"auto", "full", "sampled"}));
  graph->add_option("--seed", go.seed, "Seed for sampled distance-regularity");
  graph->add_option("--samples", go.samples, "Base vertices in sampled mode");
  graph->add_option("--shape", go.shape, "Target bilinear forms shape, e.g. 3x2");
  graph->add_option("--edges", go.edges, "Edge-list path for export (default FILE.edges)");
  graph->add_flag("--generic-check", go.generic_check, "Cross-check the explicit map with generic search");
  add_common(graph, go.common);

  FamilyOpts fo;
  auto* family = app.add_subcommand("family", "Build and verify the five-member family (or the corollary family)");
  family->add_option("--q", fo.q)->required();
  family->add_option("--a", fo.a)->required();
  family->add_option("--b", fo.b)->required();
  family->add_option("--u", fo.u);
  family->add_flag("--verify-equal-ia", fo.equal_ia);
  family->add_flag("--verify-graph-iso", fo.graph_iso);
  family->add_flag("--corollary", fo.corollary);
  add_common(family, fo.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*construct) return cmd_construct(co, out);
    if (*verify) return cmd_verify(vo, out);
    if (*graph) return cmd_graph(go, out);
    if (*family) return cmd_family(fo, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace crclab::cli

#include "chern/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "chern/invariants.hpp"
#include "chern/sampler.hpp"

namespace chern::cli {

std::uint32_t default_characteristic() {
  const char* env = std::getenv("CHERN_CHARACTERISTIC");
  if (env == nullptr || *env == '\0') return 32003;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v > 0xFFFFFFFFULL) {
    throw SchemaError(std::string("CHERN_CHARACTERISTIC: not a characteristic: '") + env + "'");
  }
  return static_cast<std::uint32_t>(v);
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string() + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace {

// ---------------------------------------------------------------------------
// schema helpers

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void check_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw SchemaError(sub(path, it.key()) + ": unknown field");
    }
  }
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw SchemaError(sub(path, key) + ": missing required field");
  return j.at(key);
}

long long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<long long>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(get_string(j[i], at(path, i)));
  return out;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
    out.push_back(static_cast<int>(get_int(j[i], at(path, i))));
  }
  return out;
}

json optional_list(const std::vector<std::optional<long long>>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x ? json(*x) : json(nullptr));
  return out;
}

// ---------------------------------------------------------------------------
// job model

struct OpSpec {
  std::string op;
  std::string ideal = "Q";
  int n_max = 8;
  std::optional<std::string> h;
  std::string path;
};

template <class F>
struct BrimSpec {
  std::vector<Poly<F>> ring_relations;
  std::vector<std::vector<Poly<F>>> matrix;
  int n_max = -1;
};

template <class F>
struct BrimSampleSpec {
  std::vector<Poly<F>> ring_relations;
  int rank = 1;
  std::vector<int> degrees;
  int count = 5;
};

template <class F>
struct SweepSpec {
  std::vector<std::string> pattern;
  std::vector<int> ell;
  std::vector<std::vector<Poly<F>>> ideals;  // one per ell
};

template <class F>
struct Job {
  std::string name;
  RingPtr<F> ring;
  std::optional<GradedModule<F>> module;
  std::map<std::string, std::vector<Poly<F>>> ideals;
  std::vector<OpSpec> ops;
  SampleConfig sample;
  std::optional<BrimSpec<F>> brim;
  std::optional<BrimSampleSpec<F>> brim_sample;
  std::optional<SweepSpec<F>> sweep;
  json expect = json::object();
  std::string format = "json";
};

struct OpInfo {
  const char* module;
  bool needs_module;
  bool needs_ideal;
};

const std::map<std::string, OpInfo>& op_table() {
  static const std::map<std::string, OpInfo> table{
      {"hilbert-series", {"hilbert-engine", true, false}},
      {"betti", {"gb-engine", true, false}},
      {"hilbert-samuel", {"hilbert-engine", true, true}},
      {"hilbert-coefficients", {"hilbert-engine", true, true}},
      {"koszul", {"koszul", true, true}},
      {"local-cohomology", {"homology", true, false}},
      {"unmixed", {"homology", true, false}},
      {"classify", {"homology", true, false}},
      {"estimate-lambda", {"sampler", true, false}},
      {"estimate-xi", {"sampler", true, false}},
      {"hdeg", {"invariants", true, true}},
      {"bounds", {"invariants", true, true}},
      {"superficial", {"hilbert-engine", true, true}},
      {"d-sequence", {"invariants", true, true}},
      {"betti-bound", {"invariants", true, true}},
      {"buchsbaum-rim", {"brim", false, false}},
      {"brim-sample", {"brim", false, false}},
      {"sweep", {"hilbert-engine", true, false}},
  };
  return table;
}

const std::vector<std::string_view>& expect_keys() {
  static const std::vector<std::string_view> keys{
      "betti",        "br",           "br1",          "br_table_prefix",        "buchsbaum",
      "cohen_macaulay", "colength",   "d_sequence",   "depth",                  "dim",
      "e",            "equality_case", "generalized_cm", "hdeg",                "hdeg_equality",
      "hilbert_characteristic", "lambda", "lambda_unbounded", "local_cohomology", "torsion1",
      "u_length",     "unmixed",      "xi"};
  return keys;
}

template <class F>
Poly<F> parse_poly(const PolyRing<F>& ring, const json& j, const std::string& path) {
  const auto text = get_string(j, path);
  try {
    return ring.parse(text);
  } catch (const ParseError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

template <class F>
std::vector<Poly<F>> parse_polys(const PolyRing<F>& ring, const json& j, const std::string& path) {
  std::vector<Poly<F>> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(parse_poly(ring, j[i], at(path, i)));
  return out;
}

template <class F>
std::vector<std::vector<Poly<F>>> parse_matrix(const PolyRing<F>& ring, const json& j, const std::string& path) {
  std::vector<std::vector<Poly<F>>> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(parse_polys(ring, j[i], at(path, i)));
  return out;
}

template <class Fn>
auto as_schema(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

template <class Fn>
auto guarded(const std::string& module, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const ComputeError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComputeError(module, e.what());
  }
}

template <class F>
GradedModule<F> parse_module(const RingPtr<F>& ring, const json& j) {
  const std::string path = "job.module";
  check_keys(j, path, {"quotient", "twists", "relations"});
  if (j.contains("quotient")) {
    if (j.contains("twists") || j.contains("relations")) {
      throw SchemaError(path + ": give either quotient or twists/relations");
    }
    auto gens = parse_polys(*ring, j["quotient"], sub(path, "quotient"));
    return as_schema(sub(path, "quotient"), [&] { return GradedModule<F>::quotient_ring(ring, gens); });
  }
  const auto twists = int_list(need(j, "twists", path), sub(path, "twists"));
  if (twists.empty()) throw SchemaError(sub(path, "twists") + ": rank must be positive");
  std::vector<std::vector<Poly<F>>> columns;
  if (j.contains("relations")) columns = parse_matrix(*ring, j["relations"], sub(path, "relations"));
  return as_schema(sub(path, "relations"), [&] {
    FreeModule<F> ambient(ring, twists);
    std::vector<Poly<F>> rels;
    for (const auto& c : columns) rels.push_back(ambient.from_entries(c));
    return GradedModule<F>::cokernel(ambient, rels);
  });
}

std::string substitute(std::string text, const std::string& key, const std::string& value) {
  for (std::size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

template <class F>
Job<F> parse_job(const json& j, RingPtr<F> ring) {
  Job<F> job;
  job.ring = std::move(ring);
  job.name = j.contains("name") ? get_string(j["name"], "job.name") : "job";
  if (j.contains("module")) job.module = parse_module(job.ring, j["module"]);
  if (j.contains("ideals")) {
    const auto& ideals = j["ideals"];
    if (!ideals.is_object()) throw SchemaError("job.ideals: expected an object");
    for (auto it = ideals.begin(); it != ideals.end(); ++it) {
      job.ideals[it.key()] = parse_polys(*job.ring, it.value(), sub("job.ideals", it.key()));
    }
  }
  if (j.contains("sample")) {
    const auto& s = j["sample"];
    check_keys(s, "job.sample", {"seed", "count", "degree_bounds", "retry_limit"});
    if (s.contains("seed")) {
      if (!s["seed"].is_number_unsigned()) throw SchemaError("job.sample.seed: expected a nonnegative integer");
      job.sample.seed = s["seed"].get<std::uint64_t>();
    }
    if (s.contains("count")) job.sample.count = static_cast<int>(get_int(s["count"], "job.sample.count"));
    if (s.contains("degree_bounds")) job.sample.degree_bounds = int_list(s["degree_bounds"], "job.sample.degree_bounds");
    if (s.contains("retry_limit")) {
      job.sample.retry_limit = static_cast<int>(get_int(s["retry_limit"], "job.sample.retry_limit"));
    }
    if (job.sample.count < 0) throw SchemaError("job.sample.count: must be nonnegative");
    if (job.sample.degree_bounds.empty()) throw SchemaError("job.sample.degree_bounds: must not be empty");
    for (int d : job.sample.degree_bounds) {
      if (d < 1) throw SchemaError("job.sample.degree_bounds: degrees must be positive");
    }
  }
  if (j.contains("operations")) {
    const auto& ops = get_array(j["operations"], "job.operations");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const auto path = at("job.operations", i);
      check_keys(ops[i], path, {"op", "ideal", "n_max", "h"});
      OpSpec spec;
      spec.path = path;
      spec.op = get_string(need(ops[i], "op", path), sub(path, "op"));
      auto info = op_table().find(spec.op);
      if (info == op_table().end()) throw SchemaError(sub(path, "op") + ": unknown operation '" + spec.op + "'");
      if (ops[i].contains("ideal")) spec.ideal = get_string(ops[i]["ideal"], sub(path, "ideal"));
      if (ops[i].contains("n_max")) spec.n_max = static_cast<int>(get_int(ops[i]["n_max"], sub(path, "n_max")));
      if (ops[i].contains("h")) {
        spec.h = get_string(ops[i]["h"], sub(path, "h"));
        parse_poly(*job.ring, ops[i]["h"], sub(path, "h"));
      }
      if (info->second.needs_module && !job.module) throw SchemaError(path + ": operation needs job.module");
      if (info->second.needs_ideal && !job.ideals.count(spec.ideal)) {
        throw SchemaError(sub(path, "ideal") + ": no ideal named '" + spec.ideal + "' in job.ideals");
      }
      job.ops.push_back(std::move(spec));
    }
  }
  if (j.contains("brim")) {
    const auto& b = j["brim"];
    check_keys(b, "job.brim", {"ring_relations", "matrix", "n_max"});
    BrimSpec<F> spec;
    if (b.contains("ring_relations")) spec.ring_relations = parse_polys(*job.ring, b["ring_relations"], "job.brim.ring_relations");
    spec.matrix = parse_matrix(*job.ring, need(b, "matrix", "job.brim"), "job.brim.matrix");
    if (b.contains("n_max")) spec.n_max = static_cast<int>(get_int(b["n_max"], "job.brim.n_max"));
    job.brim = std::move(spec);
  }
  if (j.contains("brim_sample")) {
    const auto& b = j["brim_sample"];
    check_keys(b, "job.brim_sample", {"ring_relations", "rank", "degrees", "count"});
    BrimSampleSpec<F> spec;
    if (b.contains("ring_relations")) {
      spec.ring_relations = parse_polys(*job.ring, b["ring_relations"], "job.brim_sample.ring_relations");
    }
    spec.rank = static_cast<int>(get_int(need(b, "rank", "job.brim_sample"), "job.brim_sample.rank"));
    spec.degrees = int_list(need(b, "degrees", "job.brim_sample"), "job.brim_sample.degrees");
    if (b.contains("count")) spec.count = static_cast<int>(get_int(b["count"], "job.brim_sample.count"));
    if (spec.rank < 1) throw SchemaError("job.brim_sample.rank: must be positive");
    job.brim_sample = std::move(spec);
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    check_keys(s, "job.sweep", {"ideal", "ell"});
    SweepSpec<F> spec;
    spec.pattern = string_list(need(s, "ideal", "job.sweep"), "job.sweep.ideal");
    spec.ell = int_list(need(s, "ell", "job.sweep"), "job.sweep.ell");
    for (int ell : spec.ell) {
      std::vector<Poly<F>> gens;
      for (std::size_t i = 0; i < spec.pattern.size(); ++i) {
        const auto text = substitute(spec.pattern[i], "{ell}", std::to_string(ell));
        gens.push_back(parse_poly(*job.ring, json(text), at("job.sweep.ideal", i)));
      }
      spec.ideals.push_back(std::move(gens));
    }
    job.sweep = std::move(spec);
  }
  if (j.contains("expect")) {
    job.expect = j["expect"];
    if (!job.expect.is_object()) throw SchemaError("job.expect: expected an object");
    for (auto it = job.expect.begin(); it != job.expect.end(); ++it) {
      const auto& keys = expect_keys();
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
        throw SchemaError(sub("job.expect", it.key()) + ": unknown claim");
      }
    }
  }
  if (j.contains("output")) {
    check_keys(j["output"], "job.output", {"format"});
    if (j["output"].contains("format")) job.format = get_string(j["output"]["format"], "job.output.format");
    if (job.format != "json" && job.format != "csv") throw SchemaError("job.output.format: expected json or csv");
  }
  return job;
}

// ---------------------------------------------------------------------------
// shared computations

template <class F>
std::vector<std::string> poly_strings(const PolyRing<F>& ring, const std::vector<Poly<F>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(ring.to_string(p));
  return out;
}

template <class F>
json profile_json(const CohomologyProfile<F>& prof) {
  json out;
  out["dim"] = prof.dim == kDimensionOfZero ? json(nullptr) : json(prof.dim);
  out["depth"] = prof.depth == kDepthOfZero ? json(nullptr) : json(prof.depth);
  out["projective_dimension"] = prof.projective_dimension;
  out["local_cohomology"] = optional_list(prof.h);
  out["dual_dimensions"] = prof.dual_dims;
  out["cohen_macaulay"] = prof.cohen_macaulay();
  out["generalized_cm"] = prof.generalized_cm();
  return out;
}

json betti_json(const std::vector<std::map<int, int>>& graded) {
  json out = json::array();
  for (const auto& row : graded) {
    json r = json::object();
    for (const auto& [deg, mult] : row) r[std::to_string(deg)] = mult;
    out.push_back(r);
  }
  return out;
}

/// Homogeneous h = sum c_i q_i with random scalars; needs equal degrees.
template <class F>
std::optional<Poly<F>> random_section(const PolyRing<F>& ring, const ParameterIdeal<F>& q, std::mt19937_64& rng) {
  if (q.gens.empty()) return std::nullopt;
  for (int d : q.degrees) {
    if (d != q.degrees.front()) return std::nullopt;
  }
  Poly<F> h;
  for (const auto& g : q.gens) h = ring.add(h, ring.scale(g, random_coefficient(ring.field(), rng)));
  if (h.is_zero()) return std::nullopt;
  return h;
}

template <class F>
class Runner {
 public:
  Runner(const Job<F>& job, std::uint64_t seed, int jobs) : job_(job), seed_(seed), jobs_(jobs) {}

  json run(const OpSpec& spec) {
    const auto& info = op_table().at(spec.op);
    json out = guarded(info.module, [&] { return dispatch(spec); });
    out["op"] = spec.op;
    if (info.needs_ideal) out["ideal"] = spec.ideal;
    if (!out.contains("checks")) out["checks"] = json::object();
    return out;
  }

 private:
  const GradedModule<F>& m() const { return *job_.module; }
  const PolyRing<F>& ring() const { return *job_.ring; }

  ParameterIdeal<F> ideal(const std::string& name) const {
    return guarded("hilbert-engine", [&] { return make_parameter_ideal(m(), job_.ideals.at(name)); });
  }

  SampleConfig sample_config() const {
    auto cfg = job_.sample;
    cfg.seed = seed_;
    return cfg;
  }

  json dispatch(const OpSpec& s) {
    json out;
    if (s.op == "hilbert-series") {
      auto hs = hilbert_series(m()).reduced();
      out["numerator"] = hs.numerator().to_string();
      out["numerator_low"] = hs.numerator().low;
      out["numerator_coefficients"] = hs.numerator().coeffs;
      out["denominator_power"] = hs.denominator_power();
      out["dim"] = hs.dimension() == kDimensionOfZero ? json(nullptr) : json(hs.dimension());
      out["multiplicity"] = hs.multiplicity();
      auto len = hs.length();
      out["length"] = len ? json(*len) : json(nullptr);
    } else if (s.op == "betti") {
      auto res = minimal_free_resolution(m());
      out["betti"] = res.betti();
      out["graded_betti"] = betti_json(res.graded_betti());
      out["projective_dimension"] = res.length();
    } else if (s.op == "hilbert-samuel") {
      auto q = ideal(s.ideal);
      auto t = hilbert_samuel(m(), q, s.n_max);
      out["table"] = t.values;
    } else if (s.op == "hilbert-coefficients") {
      auto q = ideal(s.ideal);
      auto c = hilbert_coefficients(m(), q);
      out["e"] = c.e;
      out["colength"] = q.colength;
      out["stabilized_at"] = c.stabilized_at;
      out["checks"]["e1_nonpositive"] = c.e_at(1) <= 0;
    } else if (s.op == "koszul") {
      auto q = ideal(s.ideal);
      auto k = koszul_homology(m(), q);
      auto serre = guarded("hilbert-engine", [&] { return chi1_serre(m(), q); });
      out["lengths"] = k.lengths;
      out["chi"] = k.chi;
      out["chi1"] = k.chi1;
      out["partial"] = k.partial;
      out["chi1_serre"] = serre;
      out["checks"]["serre_identity"] = k.chi1 == serre;
      out["checks"]["chi1_nonnegative"] = k.chi1 >= 0;
    } else if (s.op == "local-cohomology") {
      out = profile_json(local_cohomology_lengths(m()));
    } else if (s.op == "unmixed") {
      auto u = unmixed_component(m());
      out["u_length"] = u.u_length < 0 ? json(nullptr) : json(u.u_length);
      out["u_dim"] = u.u_dim == kDimensionOfZero ? json(nullptr) : json(u.u_dim);
      out["unmixed"] = is_zero_module(u.u);
    } else if (s.op == "classify") {
      out = classify();
    } else if (s.op == "estimate-lambda" || s.op == "estimate-xi") {
      auto records = guarded("sampler", [&] { return sample_parameter_ideals(m(), sample_config(), jobs_); });
      std::vector<long long> values;
      for (const auto& r : records) {
        values.push_back(s.op == "estimate-xi" ? r.chi1 : (r.e.size() > 1 ? r.e[1] : 0));
      }
      auto est = summarize(values);
      out["values"] = est.values;
      out["distinct"] = std::vector<long long>(est.distinct.begin(), est.distinct.end());
      out["min"] = est.min;
      out["max"] = est.max;
      out["samples"] = static_cast<int>(records.size());
      if (s.op == "estimate-lambda") {
        out["checks"]["e1_nonpositive"] = est.values.empty() || est.max <= 0;
      } else {
        out["checks"]["chi1_nonnegative"] = est.values.empty() || est.min >= 0;
      }
    } else if (s.op == "hdeg") {
      auto q = ideal(s.ideal);
      auto rep = hdeg(m(), q);
      out["hdeg"] = rep.hdeg;
      out["deg"] = rep.deg;
      out["torsions"] = rep.torsions;
      out["dual_hdeg"] = rep.dual_hdeg;
      out["checks"]["chain"] = rep.chain_holds();
    } else if (s.op == "bounds") {
      auto q = ideal(s.ideal);
      auto c = hilbert_coefficients(m(), q);
      auto rep = hdeg(m(), q);
      auto k = koszul_homology(m(), q);
      out["e1"] = c.e_at(1);
      out["chi1"] = k.chi1;
      out["hdeg"] = rep.hdeg;
      out["deg"] = rep.deg;
      if (c.r >= 2) {
        out["torsion1"] = rep.torsion(1);
        out["checks"]["e1_torsion_bound"] = -c.e_at(1) <= rep.torsion(1);
      }
      if (c.r >= 1) out["checks"]["chi1_hdeg_bound"] = k.chi1 <= rep.hdeg - rep.deg && q.colength <= rep.hdeg;
    } else if (s.op == "superficial") {
      auto q = ideal(s.ideal);
      Poly<F> h;
      if (s.h) {
        h = ring().parse(*s.h);
      } else {
        auto rng = sample_stream(seed_, 0);
        auto drawn = random_section(ring(), q, rng);
        if (!drawn) throw ComputeError("hilbert-engine", "generators of " + s.ideal + " have different degrees; give h");
        h = *drawn;
      }
      auto rep = superficial_check(m(), q, h);
      out["h"] = ring().to_string(h);
      out["e_module"] = rep.e_module;
      out["e_quotient"] = rep.e_quotient;
      out["colon_length"] = rep.colon_length;
      out["h0_quotient"] = rep.h0_quotient;
      out["checks"]["superficial"] = rep.pass;
    } else if (s.op == "d-sequence") {
      auto q = ideal(s.ideal);
      const bool dseq = is_d_sequence(m(), q.gens);
      const long long hc = hilbert_characteristic(m(), q);
      out["d_sequence"] = dseq;
      out["hilbert_characteristic"] = hc;
      out["colength"] = q.colength;
      if (dseq) out["checks"]["hilbert_characteristic"] = hc == q.colength;
    } else if (s.op == "betti-bound") {
      auto q = ideal(s.ideal);
      const bool linear = std::all_of(q.degrees.begin(), q.degrees.end(), [](int d) { return d == 1; });
      const bool eligible = linear && is_d_sequence(m(), q.gens);
      out["eligible"] = eligible;
      if (eligible) {
        auto rep = betti_bound_check(m(), q);
        out["colength"] = rep.colength;
        out["betti_module"] = rep.betti_module;
        out["betti_residue_field"] = rep.betti_residue_field;
        out["checks"]["betti_bound"] = rep.pass;
      }
    } else if (s.op == "buchsbaum-rim") {
      if (!job_.brim) throw SchemaError(s.path + ": operation needs job.brim");
      out = brim_json(*job_.brim);
    } else if (s.op == "brim-sample") {
      if (!job_.brim_sample) throw SchemaError(s.path + ": operation needs job.brim_sample");
      out = brim_sample_json(*job_.brim_sample);
    } else if (s.op == "sweep") {
      if (!job_.sweep) throw SchemaError(s.path + ": operation needs job.sweep");
      out = sweep_json(*job_.sweep);
    }
    return out;
  }

  json classify() {
    auto prof = local_cohomology_lengths(m());
    json out = profile_json(prof);
    out["unmixed"] = is_unmixed(m());
    auto records = guarded("sampler", [&] { return sample_parameter_ideals(m(), sample_config(), jobs_); });
    std::set<long long> lambda;
    for (const auto& r : records) lambda.insert(r.e.size() > 1 ? r.e[1] : 0);
    out["lambda"] = std::vector<long long>(lambda.begin(), lambda.end());
    out["samples"] = static_cast<int>(records.size());
    if (prof.generalized_cm() && prof.dim >= 1) {
      auto data = buchsbaum_data(prof);
      bool standard = true;
      for (const auto& r : records) standard = standard && r.chi1 == data.i_m;
      out["i_m"] = data.i_m;
      out["bound_s"] = data.bound_s;
      out["buchsbaum_sampled"] = standard;
    } else {
      out["buchsbaum_sampled"] = false;
    }
    return out;
  }

  json brim_json(const BrimSpec<F>& spec) {
    auto e = as_schema("job.brim", [&] {
      return guarded("brim", [&] { return make_parameter_module(job_.ring, spec.ring_relations, spec.matrix); });
    });
    auto rep = guarded("brim", [&] { return br_coefficients(e, spec.n_max); });
    json out;
    out["d"] = e.d;
    out["r"] = e.r;
    out["m"] = e.m;
    out["colength"] = e.colength;
    out["parameter"] = e.is_parameter();
    out["table"] = rep.table;
    out["degree"] = rep.degree;
    out["expected_degree"] = rep.expected_degree;
    out["br"] = rep.br;
    out["br1"] = rep.br1;
    out["coefficients"] = rep.coefficients;
    out["stabilized_at"] = rep.stabilized_at;
    out["equality_case"] = rep.equality_case;
    out["checks"]["table_degree"] = rep.degree == rep.expected_degree;
    out["checks"]["lower_bound"] = rep.lower_bound;
    if (e.is_parameter()) out["checks"]["br1_nonpositive"] = rep.br1 <= 0;
    if (rep.equality_case) out["checks"]["equality_everywhere"] = rep.equality_everywhere;
    return out;
  }

  json brim_sample_json(const BrimSampleSpec<F>& spec) {
    json samples = json::array();
    bool degree_ok = true, br1_ok = true;
    for (int i = 0; i < spec.count; ++i) {
      auto rng = sample_stream(seed_ ^ 0x6272696dULL, static_cast<std::uint64_t>(i));
      auto e = guarded("sampler", [&] {
        return random_parameter_module(job_.ring, spec.ring_relations, spec.rank, spec.degrees, rng);
      });
      auto rep = guarded("brim", [&] { return br_coefficients(e); });
      degree_ok = degree_ok && rep.degree == rep.expected_degree;
      br1_ok = br1_ok && rep.br1 <= 0;
      json row;
      json matrix = json::array();
      for (int r = 0; r < e.r; ++r) {
        json line = json::array();
        for (int c = 0; c < e.m; ++c) line.push_back(ring().to_string(e.phi.entry(r, c)));
        matrix.push_back(line);
      }
      row["matrix"] = matrix;
      row["br"] = rep.br;
      row["br1"] = rep.br1;
      row["degree"] = rep.degree;
      samples.push_back(row);
    }
    json out;
    out["samples"] = samples;
    out["checks"]["table_degree"] = degree_ok;
    out["checks"]["br1_nonpositive"] = br1_ok;
    return out;
  }

  json sweep_json(const SweepSpec<F>& spec) {
    json rows = json::array();
    std::vector<long long> e1s;
    for (std::size_t i = 0; i < spec.ell.size(); ++i) {
      auto q = guarded("hilbert-engine", [&] { return make_parameter_ideal(m(), spec.ideals[i]); });
      auto c = hilbert_coefficients(m(), q);
      e1s.push_back(c.e_at(1));
      json row;
      row["ell"] = spec.ell[i];
      row["e"] = c.e;
      row["colength"] = q.colength;
      rows.push_back(row);
    }
    bool growing = e1s.size() >= 2;
    for (std::size_t i = 1; i < e1s.size(); ++i) growing = growing && -e1s[i] > -e1s[i - 1];
    json out;
    out["pattern"] = spec.pattern;
    out["rows"] = rows;
    out["e1"] = e1s;
    out["strictly_growing"] = growing;
    return out;
  }

  const Job<F>& job_;
  std::uint64_t seed_;
  int jobs_;
};

bool all_checks_pass(const json& result) {
  for (const auto& [k, v] : result.at("checks").items()) {
    if (!v.get<bool>()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// theorem suite

struct Verdict {
  int applicable = 0;
  int failed = 0;
  void record(bool ok) {
    ++applicable;
    if (!ok) ++failed;
  }
  json to_json() const {
    json out;
    out["verdict"] = applicable == 0 ? "n/a" : (failed == 0 ? "pass" : "fail");
    out["count"] = applicable;
    if (failed > 0) out["failures"] = failed;
    return out;
  }
};

template <class F>
class Suite {
 public:
  Suite(const Job<F>& job, std::uint64_t seed) : job_(job), seed_(seed) {}

  json run() {
    json details;
    if (job_.module) details["module"] = module_checks();
    if (job_.brim) details["buchsbaum_rim"] = brim_checks();
    if (job_.brim_sample) details["brim_sample"] = brim_sample_checks();
    if (job_.sweep) details["sweep"] = sweep_checks();
    claims(details);
    json matrix = json::object();
    for (const auto& [k, v] : verdicts_) matrix[k] = v.to_json();
    json out;
    out["instance"] = job_.name;
    out["seed"] = seed_;
    out["matrix"] = matrix;
    out["details"] = details;
    out["claims"] = claim_results_;
    return out;
  }

 private:
  const GradedModule<F>& m() const { return *job_.module; }
  const PolyRing<F>& ring() const { return *job_.ring; }

  Verdict& v(const std::string& theorem) { return verdicts_[theorem]; }

  json module_checks() {
    auto prof = guarded("homology", [&] { return local_cohomology_lengths(m()); });
    profile_ = profile_json(prof);
    const bool unmixed = guarded("homology", [&] { return is_unmixed(m()); });
    auto unmixed_dec = guarded("homology", [&] { return unmixed_component(m()); });
    profile_["unmixed"] = unmixed;
    profile_["u_length"] = unmixed_dec.u_length < 0 ? json(nullptr) : json(unmixed_dec.u_length);
    auto res = guarded("gb-engine", [&] { return minimal_free_resolution(m()); });
    profile_["betti"] = res.betti();
    const int r = prof.dim == kDimensionOfZero ? -1 : prof.dim;
    const bool gcm = prof.generalized_cm() && r >= 1;
    BuchsbaumData bdata;
    if (gcm) {
      bdata = buchsbaum_data(prof);
      profile_["i_m"] = bdata.i_m;
      profile_["bound_s"] = bdata.bound_s;
    }
    const bool buchsbaum_claim = job_.expect.value("buchsbaum", false);

    std::vector<std::pair<std::string, ParameterIdeal<F>>> ideals;
    if (job_.ideals.count("Q")) {
      ideals.emplace_back("Q", guarded("hilbert-engine", [&] { return make_parameter_ideal(m(), job_.ideals.at("Q")); }));
    }
    SampleConfig cfg = job_.sample;
    cfg.seed = seed_;
    if (r >= 1) {
      auto records = guarded("sampler", [&] { return sample_parameter_ideals(m(), cfg, 1); });
      for (std::size_t i = 0; i < records.size(); ++i) {
        ideals.emplace_back("sample" + std::to_string(i), records[i].q);
      }
    }

    json rows = json::array();
    std::set<long long> lambda, xi;
    std::mt19937_64 section_rng = sample_stream(seed_, 0x68);
    for (const auto& [label, q] : ideals) {
      json row;
      row["label"] = label;
      row["gens"] = poly_strings(ring(), q.gens);
      row["colength"] = q.colength;
      auto c = guarded("hilbert-engine", [&] { return hilbert_coefficients(m(), q); });
      auto k = guarded("koszul", [&] { return koszul_homology(m(), q); });
      const long long e0 = c.e_at(0), e1 = c.e_at(1);
      const long long serre = q.colength - e0;
      row["e"] = c.e;
      row["koszul"] = k.lengths;
      row["chi1"] = k.chi1;
      if (label == "Q") {
        q_e_ = c.e;
        q_chi1_ = k.chi1;
        q_colength_ = q.colength;
      } else {
        lambda.insert(e1);
        xi.insert(k.chi1);
      }

      v("serre-identity").record(k.chi1 == serre);
      if (r >= 1) v("e1-negativity").record(e1 <= 0 && k.chi1 >= 0);
      if (unmixed && r >= 1) v("cm-characterization").record((e1 == 0) == prof.cohen_macaulay());
      if (gcm) v("generalized-cm-bound").record(e1 <= 0 && e1 >= -bdata.bound_s);
      if (gcm && r >= 2) v("standardness").record((e1 == -bdata.bound_s) == (serre == bdata.i_m));
      if (buchsbaum_claim && gcm) v("buchsbaum-constancy").record(e1 == -bdata.bound_s && serre == bdata.i_m);

      if (r >= 1) {
        auto h = guarded("invariants", [&] { return hdeg(m(), q); });
        row["hdeg"] = h.hdeg;
        row["torsions"] = h.torsions;
        if (r >= 2) v("e1-torsion-bound").record(-e1 <= h.torsion(1));
        v("chi1-hdeg-bound").record(k.chi1 <= h.hdeg - h.deg && q.colength <= h.hdeg);
        if (label == "Q") q_hdeg_ = h;
        if (auto section = random_section(ring(), q, section_rng)) {
          auto sup = guarded("hilbert-engine", [&] { return superficial_check(m(), q, *section); });
          row["superficial"] = sup.pass;
          v("superficial").record(sup.pass);
          if (label == "Q") {
            auto ax = guarded("invariants", [&] { return hdeg_axioms(m(), q, *section); });
            v("hdeg-axioms").record(ax.pass);
          }
        }
        const bool dseq = guarded("invariants", [&] { return is_d_sequence(m(), q.gens); });
        row["d_sequence"] = dseq;
        if (dseq) {
          const long long hc = guarded("invariants", [&] { return hilbert_characteristic(m(), q); });
          row["hilbert_characteristic"] = hc;
          if (label == "Q") q_hc_ = hc;
          v("hilbert-characteristic").record(hc == q.colength);
          if (label == "Q") {
            auto qd = guarded("invariants", [&] { return quasi_degree_check(m(), q); });
            v("quasi-degree").record(qd.pass);
          }
          const bool linear = std::all_of(q.degrees.begin(), q.degrees.end(), [](int d) { return d == 1; });
          if (linear) {
            auto bb = guarded("invariants", [&] { return betti_bound_check(m(), q); });
            v("betti-bound").record(bb.pass);
          }
        }
        if (label == "Q") q_dseq_ = dseq;
      }
      rows.push_back(row);
    }
    lambda_ = std::vector<long long>(lambda.begin(), lambda.end());
    xi_ = std::vector<long long>(xi.begin(), xi.end());
    json out;
    out["profile"] = profile_;
    out["ideals"] = rows;
    out["lambda"] = lambda_;
    out["xi"] = xi_;
    return out;
  }

  json brim_checks() {
    const auto& spec = *job_.brim;
    auto e = guarded("brim", [&] { return make_parameter_module(job_.ring, spec.ring_relations, spec.matrix); });
    auto rep = guarded("brim", [&] { return br_coefficients(e, spec.n_max); });
    auto& verdict = v("buchsbaum-rim");
    verdict.record(rep.degree == rep.expected_degree);
    verdict.record(rep.lower_bound);
    if (e.is_parameter()) verdict.record(rep.br1 <= 0);
    if (rep.equality_case) verdict.record(rep.equality_everywhere);
    brim_ = json::object();
    brim_["table"] = rep.table;
    brim_["br"] = rep.br;
    brim_["br1"] = rep.br1;
    brim_["degree"] = rep.degree;
    brim_["expected_degree"] = rep.expected_degree;
    brim_["equality_case"] = rep.equality_case;
    brim_["colength"] = e.colength;
    return brim_;
  }

  json brim_sample_checks() {
    const auto& spec = *job_.brim_sample;
    json rows = json::array();
    for (int i = 0; i < spec.count; ++i) {
      auto rng = sample_stream(seed_ ^ 0x6272696dULL, static_cast<std::uint64_t>(i));
      auto e = guarded("sampler", [&] {
        return random_parameter_module(job_.ring, spec.ring_relations, spec.rank, spec.degrees, rng);
      });
      auto rep = guarded("brim", [&] { return br_coefficients(e); });
      auto& verdict = v("buchsbaum-rim");
      verdict.record(rep.degree == rep.expected_degree && rep.br1 <= 0 && rep.lower_bound);
      json row;
      row["br"] = rep.br;
      row["br1"] = rep.br1;
      row["degree"] = rep.degree;
      row["colength"] = e.colength;
      rows.push_back(row);
    }
    return rows;
  }

  json sweep_checks() {
    const auto& spec = *job_.sweep;
    std::vector<long long> e1s;
    for (const auto& gens : spec.ideals) {
      auto q = guarded("hilbert-engine", [&] { return make_parameter_ideal(m(), gens); });
      e1s.push_back(guarded("hilbert-engine", [&] { return hilbert_coefficients(m(), q); }).e_at(1));
      v("e1-negativity").record(e1s.back() <= 0);
    }
    bool growing = e1s.size() >= 2;
    for (std::size_t i = 1; i < e1s.size(); ++i) growing = growing && -e1s[i] > -e1s[i - 1];
    sweep_growing_ = growing;
    json out;
    out["ell"] = spec.ell;
    out["e1"] = e1s;
    out["strictly_growing"] = growing;
    return out;
  }

  void claim(const std::string& key, const json& actual) {
    const json& expected = job_.expect.at(key);
    json row;
    row["expected"] = expected;
    row["actual"] = actual;
    const bool ok = expected == actual;
    row["verdict"] = ok ? "pass" : "fail";
    claim_results_[key] = row;
    v("claims").record(ok);
  }

  void claims(const json&) {
    for (auto it = job_.expect.begin(); it != job_.expect.end(); ++it) {
      const std::string key = it.key();
      json actual;
      if (key == "cohen_macaulay" || key == "generalized_cm" || key == "dim" || key == "depth" ||
          key == "unmixed" || key == "local_cohomology" || key == "u_length" || key == "betti") {
        actual = profile_.contains(key) ? profile_[key] : json(nullptr);
      } else if (key == "buchsbaum") {
        const auto found = verdicts_.find("buchsbaum-constancy");
        actual = found != verdicts_.end() && found->second.applicable > 0 && found->second.failed == 0;
      } else if (key == "e") {
        actual = q_e_ ? json(*q_e_) : json(nullptr);
      } else if (key == "colength") {
        actual = q_colength_ ? json(*q_colength_) : json(nullptr);
      } else if (key == "lambda") {
        actual = lambda_;
      } else if (key == "xi") {
        actual = xi_;
      } else if (key == "hdeg") {
        actual = q_hdeg_ ? json(q_hdeg_->hdeg) : json(nullptr);
      } else if (key == "torsion1") {
        actual = q_hdeg_ && q_hdeg_->r >= 2 ? json(q_hdeg_->torsion(1)) : json(nullptr);
      } else if (key == "hdeg_equality") {
        bool eq = false;
        if (q_hdeg_ && q_e_ && q_chi1_) {
          const long long e1 = q_e_->size() > 1 ? (*q_e_)[1] : 0;
          const bool torsion_eq = q_hdeg_->r < 2 || -e1 == q_hdeg_->torsion(1);
          eq = torsion_eq && *q_chi1_ == q_hdeg_->hdeg - q_hdeg_->deg;
        }
        actual = eq;
      } else if (key == "d_sequence") {
        actual = q_dseq_ ? json(*q_dseq_) : json(nullptr);
      } else if (key == "hilbert_characteristic") {
        actual = q_hc_ ? json(*q_hc_) : json(nullptr);
      } else if (key == "br" || key == "br1" || key == "equality_case") {
        actual = brim_.contains(key) ? brim_[key] : json(nullptr);
      } else if (key == "br_table_prefix") {
        json prefix = json::array();
        if (brim_.contains("table")) {
          const auto& t = brim_["table"];
          for (std::size_t i = 0; i < it.value().size() && i < t.size(); ++i) prefix.push_back(t[i]);
        }
        actual = prefix;
      } else if (key == "lambda_unbounded") {
        actual = sweep_growing_ ? json(*sweep_growing_) : json(nullptr);
      }
      claim(key, actual);
    }
  }

  const Job<F>& job_;
  std::uint64_t seed_;
  std::map<std::string, Verdict> verdicts_;
  json claim_results_ = json::object();
  json profile_ = json::object();
  json brim_ = json::object();
  std::vector<long long> lambda_, xi_;
  std::optional<HdegReport> q_hdeg_;
  std::optional<std::vector<long long>> q_e_;
  std::optional<long long> q_chi1_, q_colength_, q_hc_;
  std::optional<bool> q_dseq_, sweep_growing_;
};

// ---------------------------------------------------------------------------
// entry points

enum class Mode { kCompute, kCheck };

std::uint64_t effective_seed(const json& j, const RunOptions& options) {
  if (options.seed) return *options.seed;
  if (j.contains("sample") && j["sample"].is_object() && j["sample"].contains("seed") &&
      j["sample"]["seed"].is_number_unsigned()) {
    return j["sample"]["seed"].get<std::uint64_t>();
  }
  return 0;
}

template <class F>
RunResult execute(const json& j, RingPtr<F> ring, const RunOptions& options, Mode mode, json field) {
  auto job = parse_job(j, std::move(ring));
  const std::uint64_t seed = effective_seed(j, options);
  RunResult result;
  if (mode == Mode::kCheck) {
    const std::uint64_t instance_seed = seed ^ fnv1a(job.name);
    result.report = Suite<F>(job, instance_seed).run();
    result.report["field"] = field;
    for (const auto& [k, v] : result.report["matrix"].items()) {
      if (v["verdict"] == "fail") result.passed = false;
    }
    return result;
  }
  std::vector<json> outputs(job.ops.size());
  std::vector<double> millis(job.ops.size(), 0.0);
  Runner<F> runner(job, seed, options.jobs);
  parallel_for(static_cast<int>(job.ops.size()), options.jobs, [&](int i) {
    const auto start = std::chrono::steady_clock::now();
    outputs[static_cast<std::size_t>(i)] = runner.run(job.ops[static_cast<std::size_t>(i)]);
    millis[static_cast<std::size_t>(i)] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });
  json report;
  report["tool"] = {{"name", "chern"}, {"version", kVersion}};
  report["job"] = j;
  report["seed"] = seed;
  report["field"] = field;
  report["format"] = job.format;
  report["results"] = outputs;
  for (const auto& o : outputs) result.passed = result.passed && all_checks_pass(o);
  report["passed"] = result.passed;
  if (options.timings) {
    json t = json::array();
    for (double ms : millis) t.push_back(std::round(ms * 1000.0) / 1000.0);
    report["timings_ms"] = t;
  }
  result.report = std::move(report);
  return result;
}

RunResult run(const json& j, const RunOptions& options, Mode mode) {
  check_keys(j, "job",
             {"name", "description", "ring", "module", "ideals", "operations", "sample", "output", "expect", "brim",
              "brim_sample", "sweep"});
  const auto& ring_j = need(j, "ring", "job");
  check_keys(ring_j, "job.ring", {"field", "variables"});
  const auto vars = string_list(need(ring_j, "variables", "job.ring"), "job.ring.variables");
  if (ring_j.contains("field") && ring_j["field"].is_string()) {
    if (ring_j["field"] != "QQ") throw SchemaError("job.ring.field: expected a prime or \"QQ\"");
    auto ring = as_schema("job.ring", [&] {
      return std::make_shared<const PolyRing<RationalField>>(RationalField(), vars);
    });
    return execute<RationalField>(j, ring, options, mode, "QQ");
  }
  const long long p = ring_j.contains("field") ? get_int(ring_j["field"], "job.ring.field") : default_characteristic();
  if (p < 0 || p > 0xFFFFFFFFLL) throw SchemaError("job.ring.field: out of range");
  auto ring = as_schema("job.ring", [&] {
    try {
      return std::make_shared<const PolyRing<PrimeField>>(PrimeField(static_cast<std::uint32_t>(p)), vars);
    } catch (const FieldError& e) {
      throw std::invalid_argument(e.what());
    }
  });
  return execute<PrimeField>(j, ring, options, mode, p);
}

}  // namespace

RunResult run_job(const json& job, const RunOptions& options) { return run(job, options, Mode::kCompute); }

RunResult check_instance(const json& job, const RunOptions& options) { return run(job, options, Mode::kCheck); }

RunResult check_corpus(const std::filesystem::path& dir, const RunOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw SchemaError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<json> jobs;
  for (const auto& f : files) {
    auto j = load_json(f);
    if (j.is_object() && !j.contains("name")) j["name"] = f.stem().string();
    jobs.push_back(std::move(j));
  }
  std::vector<RunResult> results(jobs.size());
  RunOptions inner = options;
  inner.jobs = 1;
  parallel_for(static_cast<int>(jobs.size()), options.jobs, [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = check_instance(jobs[idx], inner);
    } catch (const SchemaError& e) {
      throw SchemaError(files[idx].filename().string() + ": " + e.what());
    } catch (const ComputeError& e) {
      throw ComputeError(e.module(), files[idx].filename().string() + ": " + e.what());
    }
  });
  RunResult out;
  json matrix = json::object();
  json instances = json::object();
  json failures = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& rep = results[i].report;
    const std::string name = rep["instance"];
    if (instances.contains(name)) throw SchemaError(files[i].filename().string() + ": duplicate instance name " + name);
    instances[name] = rep;
    for (const auto& [theorem, cell] : rep["matrix"].items()) {
      matrix[theorem][name] = cell;
      if (cell["verdict"] == "fail") failures.push_back(theorem + "/" + name);
    }
    out.passed = out.passed && results[i].passed;
  }
  json totals = json::object();
  for (const auto& [theorem, row] : matrix.items()) {
    int count = 0, failed = 0;
    for (const auto& [name, cell] : row.items()) {
      count += cell["count"].get<int>();
      failed += cell.value("failures", 0);
    }
    totals[theorem] = {{"count", count}, {"failures", failed}};
  }
  out.report["tool"] = {{"name", "chern"}, {"version", kVersion}};
  out.report["seed"] = options.seed.value_or(0);
  out.report["matrix"] = matrix;
  out.report["totals"] = totals;
  out.report["instances"] = instances;
  out.report["failures"] = failures;
  out.report["passed"] = out.passed;
  return out;
}

std::string to_csv(const json& report) {
  std::ostringstream out;
  out << "op,index,n,value\n";
  if (!report.contains("results")) return out.str();
  const auto& results = report["results"];
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const std::string op = r.value("op", "");
    if (r.contains("table")) {
      const auto& t = r["table"];
      // Hilbert-Samuel rows are lambda(M/Q^{n+1}M); Buchsbaum-Rim rows are lambda(F^n/E^n).
      const int offset = op == "hilbert-samuel" ? 1 : 0;
      for (std::size_t n = 0; n < t.size(); ++n) out << op << ',' << i << ',' << n + offset << ',' << t[n] << '\n';
    }
    if (op == "sweep") {
      for (const auto& row : r["rows"]) {
        out << op << ',' << i << ',' << row["ell"] << ',' << (row["e"].size() > 1 ? row["e"][1] : json(0)) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace chern::cli

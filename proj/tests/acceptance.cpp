// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "chern/cli.hpp"
#include "chern/invariants.hpp"
#include "chern/sampler.hpp"

using namespace chern;
using cli::json;
using K = PrimeField;

namespace {

const std::filesystem::path kCorpus = CHERN_CORPUS_DIR;

constexpr double kSerreSeconds = 60.0;
constexpr double kBrSeconds = 120.0;
constexpr int kSerreInstances = 30;
constexpr int kNegativitySamples = 200;
constexpr int kTwoPlaneIdeals = 25;
constexpr int kSuperficialInstances = 20;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Suite {
  json report;
  double seconds = 0;

  int count(const std::string& theorem) const {
    return report["totals"].contains(theorem) ? report["totals"][theorem]["count"].get<int>() : 0;
  }
  int failures(const std::string& theorem) const {
    return report["totals"].contains(theorem) ? report["totals"][theorem]["failures"].get<int>() : 0;
  }
  bool clean(const std::string& theorem) const { return count(theorem) > 0 && failures(theorem) == 0; }
  std::string tally(const std::string& theorem) const {
    return theorem + " " + std::to_string(count(theorem)) + " checked, " + std::to_string(failures(theorem)) +
           " failed";
  }
  int sampled_ideals() const {
    int n = 0;
    for (const auto& [name, inst] : report["instances"].items()) {
      if (!inst["details"].contains("module")) continue;
      for (const auto& row : inst["details"]["module"]["ideals"]) {
        if (row["label"].get<std::string>().rfind("sample", 0) == 0) ++n;
      }
    }
    return n;
  }
};

RingPtr<K> ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing<K>>(PrimeField(32003), std::move(names));
}

std::vector<Poly<K>> polys(const PolyRing<K>& r, const std::vector<std::string>& texts) {
  std::vector<Poly<K>> out;
  for (const auto& t : texts) out.push_back(r.parse(t));
  return out;
}

Outcome serre(const Suite& s) {
  const bool ok = s.clean("serre-identity") && s.count("serre-identity") >= kSerreInstances &&
                  s.seconds < kSerreSeconds;
  char buf[64];
  std::snprintf(buf, sizeof buf, ", full suite %.1f s", s.seconds);
  return {ok, s.tally("serre-identity") + buf};
}

Outcome negativity(const Suite& s) {
  const int samples = s.sampled_ideals();
  const bool ok = s.failures("e1-negativity") == 0 && samples >= kNegativitySamples;
  return {ok, s.tally("e1-negativity") + ", " + std::to_string(samples) + " sampled ideals"};
}

Outcome cm_characterization(const Suite& s) {
  // Both directions need witnesses: unmixed CM members and unmixed non-CM members.
  int cm = 0, non_cm = 0;
  for (const auto& [name, inst] : s.report["instances"].items()) {
    if (!inst["details"].contains("module")) continue;
    const auto& prof = inst["details"]["module"]["profile"];
    if (!prof["unmixed"].get<bool>() || prof["dim"].is_null() || prof["dim"].get<int>() < 1) continue;
    (prof["cohen_macaulay"].get<bool>() ? cm : non_cm) += 1;
  }
  const bool ok = s.clean("cm-characterization") && cm > 0 && non_cm > 0;
  return {ok, s.tally("cm-characterization") + ", " + std::to_string(cm) + " CM and " + std::to_string(non_cm) +
                  " non-CM unmixed members"};
}

Outcome buchsbaum_constancy() {
  auto r = ring({"x", "y", "z", "w"});
  auto m = GradedModule<K>::quotient_ring(r, polys(*r, {"x*z", "x*w", "y*z", "y*w"}));
  auto prof = local_cohomology_lengths(m);
  auto data = buchsbaum_data(prof);
  SampleConfig cfg{.seed = 2024, .count = kTwoPlaneIdeals, .degree_bounds = {1}};
  auto records = sample_parameter_ideals(m, cfg, 4);
  int good = 0;
  for (const auto& rec : records) {
    const long long e1 = rec.e.size() > 1 ? rec.e[1] : 0;
    if (e1 == -1 && e1 == -data.bound_s && rec.chi1 == data.i_m && data.i_m == 1) ++good;
  }
  return {good == kTwoPlaneIdeals && static_cast<int>(records.size()) == kTwoPlaneIdeals,
          std::to_string(good) + "/" + std::to_string(kTwoPlaneIdeals) + " ideals with e1 = -1 = -bound and I(M) = 1"};
}

Outcome generalized_cm_bound(const Suite& s) { return {s.clean("generalized-cm-bound"), s.tally("generalized-cm-bound")}; }

Outcome hdeg_bounds(const Suite& s) {
  bool equality = true;
  {
    auto r = ring({"x", "y"});
    auto m = GradedModule<K>::quotient_ring(r, polys(*r, {"x^2", "x*y"}));
    auto q = make_parameter_ideal(m, polys(*r, {"y"}));
    auto b = check_chi1_hdeg_bound(m, q);
    equality = equality && b.pass && b.slack == 0;
  }
  {
    auto r = ring({"x", "y", "z", "w"});
    auto m = GradedModule<K>::quotient_ring(r, polys(*r, {"x*z", "x*w", "y*z", "y*w"}));
    auto q = make_parameter_ideal(m, polys(*r, {"x + z", "y + w"}));
    auto a = check_e1_torsion_bound(m, q);
    auto b = check_chi1_hdeg_bound(m, q);
    equality = equality && a.pass && a.slack == 0 && b.pass && b.slack == 0;
  }
  const bool ok = s.clean("e1-torsion-bound") && s.clean("chi1-hdeg-bound") && equality;
  return {ok, s.tally("e1-torsion-bound") + "; " + s.tally("chi1-hdeg-bound") +
                  (equality ? "; equality on both worked examples" : "; equality missing on a worked example")};
}

Outcome superficial(const Suite& s) {
  return {s.clean("superficial") && s.count("superficial") >= kSuperficialInstances, s.tally("superficial")};
}

Outcome hilbert_characteristic(const Suite& s) {
  return {s.clean("hilbert-characteristic") && s.clean("betti-bound"),
          s.tally("hilbert-characteristic") + "; " + s.tally("betti-bound")};
}

Outcome buchsbaum_rim(const Suite& s) {
  const auto start = std::chrono::steady_clock::now();
  auto r = ring({"x"});
  auto e = make_parameter_module(r, {}, {polys(*r, {"x", "0"}), polys(*r, {"0", "x"})});
  auto rep = br_coefficients(e);
  bool table = true;
  for (int n = 0; n < static_cast<int>(rep.table.size()); ++n) {
    table = table && rep.table[static_cast<std::size_t>(n)] == static_cast<long long>(n) * (n + 1);
  }
  const bool example = table && rep.br == 2 && rep.br1 == 0 && rep.equality_case && rep.degree == 2;
  // Random parameter modules with d + r <= 4.
  bool sampled = true;
  auto plane = ring({"x", "y"});
  auto space = ring({"x", "y", "z"});
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto rng = sample_stream(77, i);
    auto a = br_coefficients(random_parameter_module(plane, {}, 2, {1, 1, 1}, rng));
    auto b = br_coefficients(random_parameter_module(space, {}, 1, {1, 2, 1}, rng));
    sampled = sampled && a.degree == a.expected_degree && a.br1 <= 0 && b.degree == b.expected_degree && b.br1 <= 0;
  }
  const double secs = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof buf, "; xF example %s; 8 random modules %s; %.1f s", example ? "ok" : "wrong",
                sampled ? "ok" : "violate", secs);
  return {example && sampled && s.clean("buchsbaum-rim") && secs < kBrSeconds, s.tally("buchsbaum-rim") + buf};
}

Outcome determinism(const Suite& s) {
  auto again = cli::check_corpus(kCorpus, {.seed = 0, .jobs = 4, .timings = false});
  const bool same = again.report.dump() == s.report.dump();
  return {same, same ? "two runs (1 and 4 workers) bit-identical" : "reports differ between runs"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  Suite suite;
  suite.report = cli::check_corpus(kCorpus, {.seed = 0, .jobs = 1, .timings = false}).report;
  suite.seconds = seconds_since(start);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Serre identity", [&] { return serre(suite); }},
      {"2 negativity", [&] { return negativity(suite); }},
      {"3 CM characterization", [&] { return cm_characterization(suite); }},
      {"4 Buchsbaum constancy", [] { return buchsbaum_constancy(); }},
      {"5 generalized CM bound", [&] { return generalized_cm_bound(suite); }},
      {"6 hdeg bounds", [&] { return hdeg_bounds(suite); }},
      {"7 superficial rules", [&] { return superficial(suite); }},
      {"8 Hilbert characteristic", [&] { return hilbert_characteristic(suite); }},
      {"9 Buchsbaum-Rim", [&] { return buchsbaum_rim(suite); }},
      {"10 determinism", [&] { return determinism(suite); }},
  };
  int failed = 0;
  for (const auto& [label, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", label.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

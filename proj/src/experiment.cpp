#include "nca/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "nca/advice.hpp"
#include "nca/algorithms.hpp"
#include "nca/classification.hpp"
#include "nca/errors.hpp"
#include "nca/offline.hpp"

namespace nca {

unsigned thread_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NCA_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

namespace {

Json exact_and_decimal(const Rational& v) { return {{"exact", to_string(v)}, {"decimal", to_double(v)}}; }

void check_weights(const std::string& alg, const std::vector<WeightedPoint>& pts, const std::optional<Rational>& upper) {
  for (const auto& p : pts) {
    if (p.weight <= 0) throw Error("point " + std::to_string(p.id) + " has a non-positive weight");
    if (alg == "twm" && p.weight != 1 && p.weight != *upper)
      throw Error("twm needs weights in {1, U}; point " + std::to_string(p.id) + " has " + to_string(p.weight));
    if (alg == "wam" && (p.weight < 1 || p.weight > *upper))
      throw Error("wam needs weights in [1, U]; point " + std::to_string(p.id) + " has " + to_string(p.weight));
    if (alg == "rrm" && p.weight != 1) throw Error("rrm is defined for unit weights");
  }
}

struct TrialInput {
  Space space;
  std::vector<WeightedPoint> points;
};

TrialInput trial_input(const ExperimentConfig& c, std::uint64_t seed, const PointFile* file) {
  if (file) return {file->space, file->points};
  GeneratorSpec g{c.generator, c.points, WeightSpec{c.weights, c.upper}, seed};
  return {generator_space(c.generator), generate(g)};
}

TrialRecord run_trial(const ExperimentConfig& c, std::uint64_t seed, const PointFile* file,
                      const std::optional<BitString>& tape, Json* snapshot) {
  TrialInput in = trial_input(c, seed, file);
  check_weights(c.algorithm, in.points, c.upper);
  MatcherParams params{c.upper, c.bim_r, derive_seed(seed, 1), {}};
  if (c.algorithm == "sam") {
    if (in.points.size() % 2 != 0) throw Error("sam needs an even number of points");
    const unsigned n = static_cast<unsigned>(in.points.size() / 2);
    // Always go through the encoded tape, so replays exercise the decoder.
    const BitString bits = tape ? *tape : advice_tape(in.points);
    params.advice = to_bits(decode_advice_tape(bits, n));
  }
  auto alg = make_matcher(c.algorithm, in.space, params);
  TrialRecord rec;
  rec.seed = seed;
  rec.n = in.points.size();
  try {
    for (const auto& p : in.points) alg->on_arrival(p);
  } catch (const InvariantViolation& e) {
    rec.violations.push_back(e.what());
  }
  const MatchingState& s = alg->state();
  for (auto& v : alg->audit()) rec.violations.push_back(std::move(v));
  for (const auto& [e, f] : validate_non_crossing(s.points(), s.edges()))
    rec.violations.push_back("final matching: " + to_string(e) + " crosses " + to_string(f));
  const RunOutcome o = s.outcome();
  if (o.matched_weight > o.total_weight) rec.violations.push_back("matched weight exceeds total weight");
  rec.total = o.total_weight;
  rec.matched = o.matched_weight;
  rec.pairs = o.matched_pairs;
  rec.revokes = s.revoked().size();
  rec.matched_flags = o.matched;
  if (snapshot) *snapshot = snapshot_to_json(s, alg->region_tree());
  return rec;
}

Rational ratio_of(const TrialRecord& t) { return t.total == 0 ? Rational(1) : Rational(t.matched / t.total); }

void add_bounds(ExperimentResult& r) {
  const auto& c = r.config;
  const std::string& a = c.algorithm;
  auto all = [&](const std::string& name, double bound, auto&& ok) {
    bool pass = true;
    for (const auto& t : r.trials) pass = pass && ok(t);
    r.bounds.push_back({name, to_double(r.min_ratio), bound, pass});
  };
  if (a == "tgm") {
    r.bounds.push_back({"mean ratio >= 1/3 - ci", r.mean_ratio, 1.0 / 3 - r.ratio_half_width,
                        r.mean_ratio >= 1.0 / 3 - r.ratio_half_width});
  } else if (a == "rrm") {
    double expect = 0;
    for (const auto& t : r.trials) expect += (static_cast<double>(t.n) - 1) / 4;
    expect /= static_cast<double>(r.trials.size());
    r.bounds.push_back({"mean pairs >= (N-1)/4 - ci", r.mean_pairs, expect - r.pairs_half_width,
                        r.mean_pairs >= expect - r.pairs_half_width});
  } else if (a == "sam") {
    all("ratio = 1", 1.0, [](const TrialRecord& t) { return t.matched == t.total; });
  } else if (a == "twm") {
    all("matched >= W/3 - 1", 0.0, [](const TrialRecord& t) { return 3 * t.matched >= t.total - 3; });
  } else if (a == "wam") {
    const unsigned k = WeightClasses(*c.upper).k();
    const Rational bound = pow(Rational(1, 2), 2 * k + 4);
    all("ratio >= 2^-(2k+4)", to_double(bound), [&](const TrialRecord& t) { return ratio_of(t) >= bound; });
  } else if (a == "bim") {
    const Rational rr = c.bim_r ? *c.bim_r : balanced_revoke_parameter();
    const Rational bound = revoke_ratio_bound(rr);
    all("ratio >= min{(r^2-1)/r^3, 1/(1+2r)}", to_double(bound),
        [&](const TrialRecord& t) { return ratio_of(t) >= bound; });
  }
}

void validate(const ExperimentConfig& c) {
  const auto names = matcher_names();
  if (std::find(names.begin(), names.end(), c.algorithm) == names.end())
    throw Error("unknown algorithm '" + c.algorithm + "'");
  if (c.input && !c.generator.empty()) throw Error("give either --input or --gen, not both");
  if (!c.input && c.generator.empty()) throw Error("no input: give --input or --gen");
  if (c.tape && c.algorithm != "sam") throw Error("--tape only applies to sam");
  if (c.tape && !c.input) throw Error("--tape needs --input");
  if (c.trials == 0) throw Error("--trials must be positive");
  if ((c.algorithm == "twm" || c.algorithm == "wam") && !c.upper) throw Error(c.algorithm + " needs --U");
  if (!c.generator.empty()) {
    const Space s = generator_space(c.generator);
    if (c.algorithm == "rrm" && s != Space::Line) throw Error("rrm needs line input");
    if (c.algorithm != "rrm" && c.algorithm != "greedy" && c.algorithm != "never" && s == Space::Line)
      throw Error(c.algorithm + " needs plane or circle input");
  }
}

}  // namespace

std::size_t ExperimentResult::violation_count() const {
  std::size_t n = 0;
  for (const auto& t : trials) n += t.violations.size();
  return n;
}

int ExperimentResult::exit_code() const {
  if (violation_count() > 0) return kExitInvariant;
  for (const auto& b : bounds)
    if (!b.pass) return kExitBound;
  return kExitPass;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::optional<PointFile> file;
  std::optional<BitString> tape;
  if (config.input) {
    file = read_points_file(*config.input);
    std::vector<Position> pos;
    for (const auto& p : file->points) pos.push_back(p.pos);
    const auto report = general_position_check(pos);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      std::string ids;
      for (std::size_t i : v.indices) ids += " " + std::to_string(i + 1);
      throw Error(std::string("input not in general position: ") +
                  (v.kind == GeneralPositionViolation::Kind::Duplicate ? "duplicate points" : "collinear points") + ids);
    }
  }
  if (config.tape) tape = read_tape_file(*config.tape);
  const std::size_t trials = file ? (config.algorithm == "tgm" || config.algorithm == "rrm" ? config.trials : 1)
                                  : config.trials;

  ExperimentResult r;
  r.config = config;
  r.trials.resize(trials);
  parallel_for(trials, thread_count(config.threads), [&](std::size_t i) {
    r.trials[i] = run_trial(config, derive_seed(config.seed, i), file ? &*file : nullptr, tape,
                            i == 0 ? &r.first_snapshot : nullptr);
  });

  std::vector<double> ratios, pairs;
  r.min_ratio = ratio_of(r.trials.front());
  for (const auto& t : r.trials) {
    const Rational q = ratio_of(t);
    ratios.push_back(to_double(q));
    pairs.push_back(static_cast<double>(t.pairs));
    if (q < r.min_ratio) r.min_ratio = q;
  }
  std::tie(r.mean_ratio, r.ratio_half_width) = mean_and_half_width(ratios);
  std::tie(r.mean_pairs, r.pairs_half_width) = mean_and_half_width(pairs);
  bool same_size = true;
  for (const auto& t : r.trials) same_size = same_size && t.n == r.trials.front().n;
  if (same_size && r.trials.front().n > 0) {
    double lo = 1;
    for (std::size_t p = 0; p < r.trials.front().n; ++p) {
      std::size_t hits = 0;
      for (const auto& t : r.trials) hits += t.matched_flags[p];
      lo = std::min(lo, static_cast<double>(hits) / static_cast<double>(trials));
    }
    r.min_point_frequency = lo;
  }
  add_bounds(r);
  return r;
}

Json report_json(const ExperimentResult& r) {
  const auto& c = r.config;
  Json j;
  j["schema"] = "nca/1";
  j["command"] = "run";
  Json cfg;
  cfg["algorithm"] = c.algorithm;
  if (c.upper) cfg["U"] = to_string(*c.upper);
  if (c.bim_r) cfg["r"] = to_string(*c.bim_r);
  if (c.input) cfg["input"] = c.input->string();
  if (c.tape) cfg["tape"] = c.tape->string();
  if (!c.generator.empty()) {
    cfg["generator"] = c.generator;
    cfg["points"] = c.points;
    cfg["weights"] = c.weights;
  }
  cfg["trials"] = c.trials;
  cfg["seed"] = c.seed;
  j["config"] = std::move(cfg);
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json tj;
    tj["seed"] = t.seed;
    tj["n"] = t.n;
    tj["W"] = to_string(t.total);
    tj["matched_weight"] = to_string(t.matched);
    tj["ratio"] = exact_and_decimal(ratio_of(t));
    tj["pairs"] = t.pairs;
    tj["revokes"] = t.revokes;
    tj["violations"] = t.violations.size();
    if (!t.violations.empty()) tj["violation_messages"] = t.violations;
    trials.push_back(std::move(tj));
  }
  j["trials"] = std::move(trials);
  Json agg;
  agg["mean_ratio"] = r.mean_ratio;
  agg["ratio_ci99_half_width"] = r.ratio_half_width;
  agg["min_ratio"] = exact_and_decimal(r.min_ratio);
  agg["mean_pairs"] = r.mean_pairs;
  agg["pairs_ci99_half_width"] = r.pairs_half_width;
  if (r.min_point_frequency) agg["min_point_match_frequency"] = *r.min_point_frequency;
  agg["violations"] = r.violation_count();
  j["aggregate"] = std::move(agg);
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back({{"name", b.name}, {"value", b.value}, {"bound", b.bound}, {"pass", b.pass}});
  j["bounds"] = std::move(bounds);
  j["final"] = r.first_snapshot;
  j["exit_code"] = r.exit_code();
  return j;
}

std::vector<std::string> adversary_names() { return {"two-weight", "restricted", "revoking", "collinear-revoking"}; }

std::unique_ptr<Adversary> make_adversary(const DuelConfig& c) {
  auto need_upper = [&]() -> const Rational& {
    if (!c.upper) throw Error("adversary " + c.adversary + " needs --U");
    return *c.upper;
  };
  if (c.adversary == "two-weight") {
    if (c.k == 0) throw Error("two-weight adversary needs --k");
    return std::make_unique<TwoWeightAdversary>(need_upper(), c.k);
  }
  if (c.adversary == "restricted") {
    if (c.m == 0) throw Error("restricted adversary needs --m");
    return std::make_unique<RestrictedAdversary>(need_upper(), c.m);
  }
  if (c.adversary == "revoking") {
    if (c.n == 0) throw Error("revoking adversary needs --n");
    return std::make_unique<RevokingAdversary>(c.n);
  }
  if (c.adversary == "collinear-revoking") {
    if (c.n == 0) throw Error("collinear-revoking adversary needs --n");
    return std::make_unique<CollinearRevokingAdversary>(c.n);
  }
  throw Error("unknown adversary '" + c.adversary + "'");
}

int DuelOutcome::exit_code() const {
  if (result.aborted || !result.audit.empty() || !result.crossings.empty()) return kExitInvariant;
  if (!result.adversary.violations.empty()) return kExitBound;
  return kExitPass;
}

DuelOutcome run_duel(const DuelConfig& config) {
  auto adv = make_adversary(config);
  MatcherParams params{config.upper, config.bim_r, config.seed, {}};
  if (config.algorithm == "sam") throw Error("sam needs its advice up front and cannot face an adaptive adversary");
  auto alg = make_matcher(config.algorithm, adv->space(), params);
  DuelOutcome out;
  out.config = config;
  out.result = run_duel(*adv, *alg);
  out.snapshot = snapshot_to_json(alg->state(), alg->region_tree());
  return out;
}

Json report_json(const DuelOutcome& d) {
  const auto& c = d.config;
  const auto& res = d.result;
  Json j;
  j["schema"] = "nca/1";
  j["command"] = "duel";
  Json cfg;
  cfg["algorithm"] = c.algorithm;
  cfg["adversary"] = c.adversary;
  if (c.upper) cfg["U"] = to_string(*c.upper);
  if (c.bim_r) cfg["r"] = to_string(*c.bim_r);
  if (c.k) cfg["k"] = c.k;
  if (c.m) cfg["m"] = c.m;
  if (c.n) cfg["n"] = c.n;
  cfg["seed"] = c.seed;
  j["config"] = std::move(cfg);
  Json o;
  o["emitted"] = res.transcript.size();
  o["W"] = to_string(res.outcome.total_weight);
  o["matched_weight"] = to_string(res.outcome.matched_weight);
  o["ratio"] = exact_and_decimal(res.outcome.ratio());
  o["pairs"] = res.outcome.matched_pairs;
  j["outcome"] = std::move(o);
  Json facts = Json::object();
  for (const auto& [k, v] : res.adversary.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  Json certs = Json::array();
  for (const auto& cert : res.adversary.certificates)
    certs.push_back({{"label", cert.label},
                     {"value", exact_and_decimal(cert.value)},
                     {"bound", exact_and_decimal(cert.bound)},
                     {"pass", cert.value <= cert.bound}});
  j["certificates"] = std::move(certs);
  j["bound_violations"] = res.adversary.violations;
  j["audit_violations"] = res.audit;
  j["crossings"] = res.crossings;
  if (res.aborted) j["aborted"] = *res.aborted;
  j["final"] = d.snapshot;
  j["exit_code"] = d.exit_code();
  return j;
}

std::string run_sweep(const ExperimentConfig& base, const std::string& param, const std::vector<Rational>& values) {
  if (param != "r" && param != "U") throw Error("sweep parameter must be r or U");
  std::ostringstream csv;
  csv << "algorithm,param,value,trials,mean_ratio,ci99_half_width,min_ratio,formula_bound,violations,exit_code\n";
  for (const Rational& v : values) {
    ExperimentConfig c = base;
    (param == "r" ? c.bim_r : c.upper) = v;
    const ExperimentResult r = run_experiment(c);
    std::string formula;
    if (c.algorithm == "bim") formula = std::to_string(to_double(revoke_ratio_bound(c.bim_r ? *c.bim_r : balanced_revoke_parameter())));
    else if (c.algorithm == "wam" && c.upper) formula = std::to_string(std::ldexp(1.0, -static_cast<int>(2 * WeightClasses(*c.upper).k() + 4)));
    csv << c.algorithm << ',' << param << ',' << to_double(v) << ',' << r.trials.size() << ',' << r.mean_ratio << ','
        << r.ratio_half_width << ',' << to_double(r.min_ratio) << ',' << formula << ',' << r.violation_count() << ','
        << r.exit_code() << '\n';
  }
  return csv.str();
}

}  // namespace nca

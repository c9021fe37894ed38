#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "../vendor/CLI11.hpp"
#include "nca/advice.hpp"
#include "nca/errors.hpp"
#include "nca/experiment.hpp"
#include "nca/io.hpp"
#include "nca/offline.hpp"
#include "nca/svg.hpp"

namespace fs = std::filesystem;
using namespace nca;

namespace {

std::optional<Rational> opt_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct RunArgs {
  std::string alg, U, r, input, tape, gen, weights = "unit", out, svg;
  std::size_t pairs = 0, points = 0, trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--alg", a.alg, "greedy | never | twm | wam | tgm | bim | rrm | sam")->required();
  cmd->add_option("--U", a.U, "upper weight bound (twm, wam, weight generators)");
  cmd->add_option("--r", a.r, "bim revoke factor; default balances both bound terms");
  cmd->add_option("--input", a.input, "JSONL point file");
  cmd->add_option("--tape", a.tape, "advice tape for sam (with --input)");
  cmd->add_option("--gen", a.gen, "random-disk | random-line | yao | collinear");
  cmd->add_option("--n", a.pairs, "generated instance size in pairs (2n points)");
  cmd->add_option("--points", a.points, "generated instance size in points; overrides --n");
  cmd->add_option("--weights", a.weights, "unit | two-weight | restricted | arbitrary");
  cmd->add_option("--trials", a.trials, "number of trials");
  cmd->add_option("--seed", a.seed, "base seed; trial seeds are derived from it");
  cmd->add_option("--threads", a.threads, "worker threads (NCA_THREADS caps this)");
}

ExperimentConfig to_config(const RunArgs& a) {
  ExperimentConfig c;
  c.algorithm = a.alg;
  c.upper = opt_rational(a.U);
  c.bim_r = opt_rational(a.r);
  if (!a.input.empty()) c.input = a.input;
  if (!a.tape.empty()) c.tape = a.tape;
  c.generator = a.gen;
  c.points = a.points ? a.points : 2 * a.pairs;
  if (!a.gen.empty() && c.points == 0) throw Error("generated input needs --n or --points");
  c.weights = a.weights;
  c.trials = a.trials;
  c.seed = a.seed;
  c.threads = a.threads;
  return c;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  if (out.empty()) throw Error("empty --values list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online weighted non-crossing matching lab"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "stream inputs through an online algorithm");
  add_run_options(run, run_args);
  run->add_option("--out", run_args.out, "report JSON path (default stdout)");
  run->add_option("--svg", run_args.svg, "also render the first trial's final state");

  std::string duel_alg, duel_adv, duel_U, duel_r, duel_out, duel_transcript, duel_svg;
  unsigned duel_k = 60;
  std::size_t duel_m = 20, duel_n = 150;
  std::uint64_t duel_seed = 0;
  auto* duel = app.add_subcommand("duel", "play an algorithm against an adaptive adversary");
  duel->add_option("--alg", duel_alg, "algorithm")->required();
  duel->add_option("--adv", duel_adv, "two-weight | restricted | revoking | collinear-revoking")->required();
  duel->add_option("--U", duel_U, "upper weight bound");
  duel->add_option("--r", duel_r, "bim revoke factor");
  duel->add_option("--k", duel_k, "two-weight: first-phase length parameter");
  duel->add_option("--m", duel_m, "restricted: number of first-phase edges");
  duel->add_option("--n", duel_n, "revoking adversaries: size parameter");
  duel->add_option("--seed", duel_seed, "algorithm seed (randomized algorithms)");
  duel->add_option("--out", duel_out, "report JSON path (default stdout)");
  duel->add_option("--transcript", duel_transcript, "transcript JSONL path");
  duel->add_option("--svg", duel_svg, "render the final state");

  std::string adv_input, adv_tape, adv_out, adv_verify;
  auto* advice = app.add_subcommand("advice", "compute the advice tape for an input, or verify one");
  advice->add_option("--input", adv_input, "JSONL point file (even count, plane or circle)")->required();
  advice->add_option("--tape", adv_tape, "tape path to write (default: input with .tape)");
  advice->add_option("--verify", adv_verify, "decode this tape and replay it instead of writing one");
  advice->add_option("--out", adv_out, "report JSON path (default stdout)");

  std::string render_from, render_out;
  auto* render = app.add_subcommand("render", "draw a report's final state or a transcript as SVG");
  render->add_option("--from", render_from, "report JSON or transcript JSONL")->required();
  render->add_option("--out", render_out, "SVG path (default stdout)");

  RunArgs sweep_args;
  std::string sweep_param, sweep_values;
  auto* sweep = app.add_subcommand("sweep", "run one experiment per parameter value, CSV out");
  add_run_options(sweep, sweep_args);
  sweep->add_option("--param", sweep_param, "r | U")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required();
  sweep->add_option("--out", sweep_args.out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const ExperimentResult r = run_experiment(to_config(run_args));
      write_text(run_args.out, dump(report_json(r)));
      if (!run_args.svg.empty()) write_text(run_args.svg, render_svg(r.first_snapshot));
      return r.exit_code();
    }
    if (*duel) {
      DuelConfig c;
      c.algorithm = duel_alg;
      c.adversary = duel_adv;
      c.upper = opt_rational(duel_U);
      c.bim_r = opt_rational(duel_r);
      c.k = duel_k;
      c.m = duel_m;
      c.n = duel_n;
      c.seed = duel_seed;
      const DuelOutcome d = run_duel(c);
      if (!duel_transcript.empty()) {
        std::ostringstream t;
        write_transcript_jsonl(t, d.result.transcript);
        write_text(duel_transcript, t.str());
      }
      write_text(duel_out, dump(report_json(d)));
      if (!duel_svg.empty()) write_text(duel_svg, render_svg(d.snapshot));
      if (d.result.aborted) std::cerr << "protocol aborted: " << *d.result.aborted << "\n";
      return d.exit_code();
    }
    if (*advice) {
      const PointFile f = read_points_file(adv_input);
      std::vector<Position> pos;
      for (const auto& p : f.points) pos.push_back(p.pos);
      if (!general_position_check(pos).ok()) throw Error("input not in general position");
      if (f.points.size() % 2 != 0) throw Error("advice needs an even number of points");
      const unsigned n = static_cast<unsigned>(f.points.size() / 2);
      Json j;
      j["schema"] = "nca/1";
      j["command"] = "advice";
      j["n"] = n;
      j["catalan_bits"] = catalan_bits(n);
      j["two_n"] = 2 * n;
      if (!adv_verify.empty()) {
        const BitString tape = read_tape_file(adv_verify);
        const BitString word = decode_advice_tape(tape, n);
        ExperimentConfig c;
        c.algorithm = "sam";
        c.input = adv_input;
        c.tape = adv_verify;
        const ExperimentResult r = run_experiment(c);
        j["tape"] = adv_verify;
        j["tape_bits"] = tape.size();
        j["dyck_word"] = word;
        j["perfect"] = r.trials.front().matched == r.trials.front().total;
        write_text(adv_out, dump(j));
        return r.exit_code();
      }
      const BitString word = sam_oracle(f.points);
      const BitString tape = advice_tape(f.points);
      const std::string tape_path = adv_tape.empty() ? fs::path(adv_input).replace_extension(".tape").string() : adv_tape;
      write_tape_file(tape_path, tape);
      j["tape"] = tape_path;
      j["tape_bits"] = tape.size();
      j["tape_bound"] = advice_length_bound(n);
      j["dyck_word"] = word;
      j["dyck_rank"] = to_string(dyck_rank(word));
      write_text(adv_out, dump(j));
      return kExitPass;
    }
    if (*render) {
      std::ifstream in(render_from);
      if (!in) throw Error("cannot open " + render_from);
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      Json snap;
      // A report is one JSON document with a "final" member; anything else is a transcript.
      Json doc = Json::parse(text, nullptr, false);
      if (!doc.is_discarded() && doc.is_object() && doc.contains("final")) {
        snap = doc.at("final");
      } else {
        std::istringstream lines(text);
        const MatchingState s = replay_transcript(read_transcript_jsonl(lines));
        snap = snapshot_to_json(s, nullptr);
      }
      write_text(render_out, render_svg(snap));
      return kExitPass;
    }
    if (*sweep) {
      write_text(sweep_args.out, run_sweep(to_config(sweep_args), sweep_param, parse_list(sweep_values)));
      return kExitPass;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}

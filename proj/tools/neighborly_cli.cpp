// Command-line front door: parses instances, dispatches the verifiers, and
// emits one JSON certificate per claim instance (stdout by default).
// Exit codes: 0 all claims verified, 1 some claim refuted, 2 usage errors,
// malformed inputs, or exhausted budgets (partial certificates).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "neighborly/certificate.hpp"
#include "neighborly/io.hpp"
#include "neighborly/replay.hpp"
#include "neighborly/verify.hpp"

namespace {

using neighborly::Certificate;
using neighborly::Json;

struct Output {
  std::string path;
  std::vector<Certificate> certs;

  void emit(Certificate c) { certs.push_back(std::move(c)); }

  int flush_and_status() {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
      }
      out = &file;
    }
    bool any_refuted = false, any_partial = false;
    for (const Certificate& c : certs) {
      (*out) << c.to_text() << "\n";
      any_partial |= c.partial();
      any_refuted |= !c.verified() && !c.partial();
    }
    if (any_partial) return 2;
    return any_refuted ? 1 : 0;
  }
};

std::vector<int> signs_from_json(const Json& j) {
  std::vector<int> signs;
  for (const Json& v : j) {
    int s = v.is_string() ? (v.get<std::string>() == "+" ? 1 : -1) : v.get<int>();
    signs.push_back(s);
  }
  return signs;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace neighborly;
  CLI::App app{"neighborly: certificate checker for sign-matrix travels, chessboard "
               "families, Gale transforms, and exact divisibility searches"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--out", output.path, "write certificates to this file instead of stdout");

  RunOptions opts;
  int rank = 0, cols = 0, k = 0, l = 0, s = 0;
  std::string claim, action, kind, points_path, signs_path, matrix_path, table_path, cert_path;
  bool invert = false;
  std::uint64_t cap = std::uint64_t{1} << 20;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opts.mode, "exhaustive or sampled")->default_str("exhaustive");
    cmd->add_option("--count", opts.sample_count, "sample count for sampled mode");
    cmd->add_option("--seed", opts.seed, "seed for sampled mode");
    cmd->add_option("--max-seconds", opts.max_seconds, "wall-clock budget; exceeding it yields a partial certificate");
    cmd->add_option("--max-cases", opts.max_cases, "case budget; exceeding it yields a partial certificate");
    cmd->add_option("--witness-cap", opts.witness_cap, "max per-case entries stored in a witness");
  };

  CLI::App* verify = app.add_subcommand("verify", "exhaustive/sampled proposition checks");
  verify->add_option("claim", claim, "prop-llom or prop-pt")->required();
  verify->add_option("--rank", rank, "matrix rank r")->required();
  verify->add_option("--cols", cols, "matrix columns n")->required();
  add_run_options(verify);

  CLI::App* family = app.add_subcommand("family", "diagonal chessboard families");
  family->add_option("action", action, "build or verify")->required();
  family->add_option("--rank", rank, "rank r")->required();
  family->add_option("--k", k, "neighbourliness parameter k >= 2")->required();
  family->add_option("--l", l, "phase l (k >= 3 families)");
  add_run_options(family);

  CLI::App* travel = app.add_subcommand("travel", "compute travels of a sign matrix");
  travel->add_option("--matrix", matrix_path, "matrix text file ({+,-} rows)")->required();
  travel->add_option("--kind", kind, "top, bottom, or plain")->required();

  CLI::App* gale = app.add_subcommand("gale", "Gale transform of a point file");
  gale->add_option("--points", points_path, "points JSON file")->required();
  gale->add_flag("--invert", invert, "treat the file as a diagram and invert");

  CLI::App* divide = app.add_subcommand("divide", "k-divisibility search");
  divide->add_option("--points", points_path, "points JSON file")->required();
  divide->add_option("--k", k, "number of removed points")->required();
  divide->add_option("--s", s, "blocks (omit for bipartitions)");
  divide->add_option("--cap", cap, "partition cap for the s-block search");

  CLI::App* neighbourly = app.add_subcommand("neighbourly", "circuit neighbourliness check");
  neighbourly->add_option("--points", points_path, "points JSON file")->required();
  neighbourly->add_option("--k", k, "k")->required();

  CLI::App* signflip = app.add_subcommand("signflip", "sign-flip search on the Gale diagram");
  signflip->add_option("--points", points_path, "points JSON file")->required();
  signflip->add_option("--k", k, "k")->required();

  CLI::App* projective = app.add_subcommand("projective", "realize a sign pattern as a permissible map");
  projective->add_option("--points", points_path, "points JSON file")->required();
  projective->add_option("--signs", signs_path, "JSON array of +-1")->required();

  CLI::App* bounds = app.add_subcommand("bounds", "index-relation propagation");
  bounds->add_option("--table", table_path, "bounds table JSON file")->required();

  CLI::App* replay_cmd = app.add_subcommand("replay", "re-verify stored certificates");
  replay_cmd->add_option("certificate", cert_path, "certificate file (object or array)")->required();

  for (CLI::App* sub : {verify, family, travel, gale, divide, neighbourly, signflip, projective,
                        bounds, replay_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (claim == "prop-llom") output.emit(run_prop_llom(rank, cols, opts));
      else if (claim == "prop-pt") output.emit(run_prop_pt(rank, cols, opts));
      else throw input_error("unknown claim '" + claim + "' (expected prop-llom or prop-pt)");
    } else if (family->parsed()) {
      FamilyParams params{rank, k, l};
      if (action == "build") output.emit(run_family_build(params));
      else if (action == "verify") output.emit(run_family_verify(params, opts));
      else throw input_error("unknown family action '" + action + "'");
    } else if (travel->parsed()) {
      output.emit(run_travel(parse_sign_matrix(read_text_file(matrix_path)), kind));
    } else if (gale->parsed()) {
      if (invert) output.emit(run_gale_inverse(diagram_from_json(read_json_file(points_path))));
      else output.emit(run_gale(config_from_json(read_json_file(points_path))));
    } else if (divide->parsed()) {
      PointConfig x = config_from_json(read_json_file(points_path));
      if (s > 0) output.emit(run_divide_s(x, s, k, cap));
      else output.emit(run_divide(x, k));
    } else if (neighbourly->parsed()) {
      output.emit(run_neighbourly(config_from_json(read_json_file(points_path)), k));
    } else if (signflip->parsed()) {
      output.emit(run_signflip(config_from_json(read_json_file(points_path)), k));
    } else if (projective->parsed()) {
      output.emit(run_projective(config_from_json(read_json_file(points_path)),
                                 signs_from_json(read_json_file(signs_path))));
    } else if (bounds->parsed()) {
      output.emit(run_bounds(read_json_file(table_path)));
    } else if (replay_cmd->parsed()) {
      Json j = read_json_file(cert_path);
      std::vector<Json> docs;
      if (j.is_array())
        for (Json& d : j) docs.push_back(std::move(d));
      else docs.push_back(std::move(j));
      bool all_ok = true;
      for (Json& d : docs) {
        Certificate cert = Certificate::from_json(std::move(d));
        bool ok = replay(cert);
        all_ok &= ok;
        std::cout << Json{{"claim", cert.claim()}, {"replay", ok}}.dump() << "\n";
      }
      return all_ok ? 0 : 1;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const contract_violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const not_realizable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return output.flush_and_status();
}

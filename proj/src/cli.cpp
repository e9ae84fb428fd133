#include "hamlim/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamlim/eigh.hpp"
#include "hamlim/experiments.hpp"
#include "hamlim/graph.hpp"
#include "hamlim/io.hpp"
#include "hamlim/norms.hpp"
#include "hamlim/rng.hpp"
#include "hamlim/stochastic.hpp"

namespace hamlim {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GlobalOptions {
  std::string out_path;
  std::string format = "json";
  bool no_timestamp = false;
  std::uint64_t seed = 12345;
};

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string stamp_json(const std::string& text, const GlobalOptions& global) {
  if (global.no_timestamp) return text;
  nlohmann::json obj = nlohmann::json::parse(text);
  obj["timestamp"] = iso_timestamp();
  return obj.dump();
}

void emit(const std::string& text, const GlobalOptions& global, std::ostream& out) {
  out << text << '\n';
  if (!global.out_path.empty()) save_text(global.out_path, text + "\n");
}

// Shared matrix input: either a densecomplex-v1 file or a named generator.
struct MatrixSource {
  std::string in_path;
  std::string make;
  std::size_t n = 0;
  std::string bits;
  std::string signs;
  std::size_t cap = 4096;
  double zero_tol = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in_path, "densecomplex-v1 matrix file");
    cmd->add_option("--make", make,
                    "generate instead of loading: line, parity, dense-parity, circulant, "
                    "hadamard, identity, all-ones");
    cmd->add_option("--n", n, "size parameter for --make (N, M, or tensor power)");
    cmd->add_option("--bits", bits, "explicit bit string for parity families");
    cmd->add_option("--signs", signs, "explicit sign string (+/-) for circulant");
    cmd->add_option("--cap", cap, "dimension cap for dense-parity")->capture_default_str();
    cmd->add_option("--zero-tol", zero_tol,
                    "treat loaded entries with magnitude <= tol as structural zeros");
  }

  HermitianMatrix resolve(std::uint64_t seed) const {
    if (!in_path.empty()) return load_matrix(in_path, zero_tol);
    if (make.empty()) {
      throw CLI::ValidationError("matrix input", "provide either --in or --make");
    }
    Rng rng(seed);
    if (make == "line") {
      if (n == 0) throw CLI::ValidationError("--n", "line needs --n >= 1");
      return line_hamiltonian(n);
    }
    if (make == "parity" || make == "dense-parity") {
      const BitString s = bits.empty() ? random_bit_string(n, rng) : parse_bit_string(bits);
      return make == "parity" ? parity_hamiltonian(s) : dense_parity_hamiltonian(s, cap);
    }
    if (make == "circulant") {
      const SignString s = signs.empty() ? random_sign_string(n, rng) : parse_sign_string(signs);
      return circulant_from_string(s);
    }
    if (make == "hadamard") return hadamard_tensor(static_cast<unsigned>(n));
    if (make == "identity") return saturating_witness(WitnessKind::identity, n);
    if (make == "all-ones") return saturating_witness(WitnessKind::all_ones, n);
    throw CLI::ValidationError("--make", "unknown family '" + make + "'");
  }
};

int finish_experiment(const ExperimentReport& report, const GlobalOptions& global,
                      std::ostream& out) {
  if (global.format == "csv") {
    emit(experiment_report_csv(report), global, out);
  } else {
    emit(stamp_json(experiment_report_json(report, !global.no_timestamp), global), global, out);
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hamlim: norm hierarchies, hard instances, and structured simulations for "
               "Hermitian Hamiltonians"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--out", global.out_path, "also write the report to this file");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-timestamp", global.no_timestamp,
               "omit volatile fields so identical runs are byte-identical");
  app.add_option("--seed", global.seed, "master seed for randomized subcommands")
      ->envname("HAMLIM_SEED")
      ->capture_default_str();

  // ---- make ----------------------------------------------------------
  CLI::App* make = app.add_subcommand("make", "generate an instance matrix as densecomplex-v1");
  make->require_subcommand(1);
  std::size_t make_n = 0, make_m = 0, make_size = 0, make_cap = 4096;
  unsigned make_pow = 0;
  std::string make_bits, make_signs, make_kind;
  bool make_promise = false;

  CLI::App* mk_line = make->add_subcommand(
      "line", "path Hamiltonian with <i|H|i+1> = sqrt((N-i)(i+1))/N; perfect |0> -> |N> transfer "
              "at t = pi*N/2");
  mk_line->add_option("--N", make_n, "number of steps (dimension N+1)")->required();

  CLI::App* mk_parity = make->add_subcommand(
      "parity", "two disjoint lines whose far endpoint encodes the parity of the bit string");
  mk_parity->add_option("--bits", make_bits, "explicit bit string");
  mk_parity->add_option("--N", make_n, "random bit string length");

  CLI::App* mk_dense = make->add_subcommand(
      "dense-parity", "dense blow-up of the parity instance with spectral norm 1 but "
                      "max ~ 1/N and mcn ~ 1/sqrt(N)");
  mk_dense->add_option("--bits", make_bits, "explicit bit string");
  mk_dense->add_option("--N", make_n, "random bit string length");
  mk_dense->add_option("--cap", make_cap, "dimension cap")->capture_default_str();

  CLI::App* mk_circ = make->add_subcommand(
      "circulant", "symmetric circulant with first row (0, s, reversed s); eigenvalues "
                   "2 sum_j s_j cos(2 pi j r / N)");
  mk_circ->add_option("--signs", make_signs, "explicit sign string, e.g. +-++-");
  mk_circ->add_option("--M", make_m, "random sign string length");
  mk_circ->add_flag("--promise", make_promise,
                    "sample from the promise set (sum = -B or +B) instead of uniformly");

  CLI::App* mk_had = make->add_subcommand(
      "hadamard", "Hadamard tensor power: spectral norm 1, abs spectral norm 2^{n/2}");
  mk_had->add_option("--n", make_pow, "tensor power")->required();

  CLI::App* mk_wit = make->add_subcommand(
      "witness", "matrices that make the norm chain links tight: identity (first four), "
                 "all-ones (last two), hadamard (abs vs spectral gap)");
  mk_wit->add_option("--kind", make_kind, "identity | all-ones | hadamard")->required();
  mk_wit->add_option("--size", make_size, "dimension (or tensor power for hadamard)")->required();

  // ---- analyses --------------------------------------------------------
  MatrixSource norms_src, chain_src, cost_src, evolve_src, decompose_src, trotter_src;

  CLI::App* norms_cmd = app.add_subcommand(
      "norms", "five-norm profile: max, mcn, spectral, abs spectral, induced 1-norm, sparsity k");
  norms_src.attach(norms_cmd);

  CLI::App* chain_cmd = app.add_subcommand(
      "chain", "verify max <= mcn <= ||H|| <= ||abs(H)|| <= ||H||_1 <= sqrt(N) mcn <= N max and "
               "the sqrt(k)/k sparse variant");
  chain_src.attach(chain_cmd);

  CLI::App* cost_cmd = app.add_subcommand(
      "cost", "discrete-walk step estimates ||abs(Ht)||/sqrt(delta) and ||Ht||_1/sqrt(delta)");
  cost_src.attach(cost_cmd);
  double cost_t = 1.0, cost_delta = 0.01;
  cost_cmd->add_option("--t", cost_t, "evolution time")->capture_default_str();
  cost_cmd->add_option("--delta", cost_delta, "target error in (0, 1]")->capture_default_str();

  CLI::App* evolve_cmd =
      app.add_subcommand("evolve", "exact exp(-iHt) psi via full eigendecomposition");
  evolve_src.attach(evolve_cmd);
  double evolve_t = 1.0;
  std::size_t evolve_basis = 0;
  std::string evolve_state;
  bool evolve_basis_set = false;
  evolve_cmd->add_option("--t", evolve_t, "evolution time")->required();
  evolve_cmd->add_option("--basis", evolve_basis, "start from basis state |j>")
      ->each([&evolve_basis_set](const std::string&) { evolve_basis_set = true; });
  evolve_cmd->add_option("--state", evolve_state, "start from a statevec-v1 file");

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "greedy forest partition + star-forest split; checks ||abs(H)|| <= 2k' mcn, "
                   "||abs(H)|| <= 2k' ||H||, ||H|| <= 2k' mcn");
  decompose_src.attach(decompose_cmd);

  CLI::App* trotter_cmd = app.add_subcommand(
      "trotter", "first-order product formula over the star decomposition, star factors in "
                 "closed form");
  trotter_src.attach(trotter_cmd);
  double trotter_t = 1.0;
  std::size_t trotter_steps = 64, trotter_basis = 0;
  std::string trotter_state;
  bool trotter_compare = false;
  trotter_cmd->add_option("--t", trotter_t, "evolution time")->required();
  trotter_cmd->add_option("--steps", trotter_steps, "product-formula steps")
      ->capture_default_str();
  trotter_cmd->add_option("--basis", trotter_basis, "start from basis state |j>")
      ->capture_default_str();
  trotter_cmd->add_option("--state", trotter_state, "start from a statevec-v1 file");
  trotter_cmd->add_flag("--compare-exact", trotter_compare,
                        "also evolve exactly and report the deviation");

  // ---- experiments ----------------------------------------------------
  CLI::App* parity_cmd = app.add_subcommand(
      "parity-demo", "read the parity of a bit string out of dense-Hamiltonian evolution at "
                     "t = pi*N/2");
  std::string parity_bits;
  std::size_t parity_n = 8, parity_cap = 4096;
  parity_cmd->add_option("--bits", parity_bits, "explicit bit string");
  parity_cmd->add_option("--N", parity_n, "random bit string length")->capture_default_str();
  parity_cmd->add_option("--cap", parity_cap, "dimension cap")->capture_default_str();

  CLI::App* sign_cmd = app.add_subcommand(
      "sign-demo", "detect the sign of lambda_0 = 2 sum s_j from one tau-evolution of the "
                   "circulant, eigenphase -+i");
  std::string sign_signs;
  std::size_t sign_m = 60;
  sign_cmd->add_option("--signs", sign_signs, "explicit promise string (+/-)");
  sign_cmd->add_option("--M", sign_m, "promise string length to sample")->capture_default_str();

  CLI::App* tail_cmd = app.add_subcommand(
      "tail", "Monte Carlo Pr(||H_s|| >= 4 d sqrt(M ln M)) against the 4/M^{2d^2-1} and "
              "2N/M^{2d^2} tails");
  std::size_t tail_m = 51, tail_trials = 2000;
  double tail_d = 1.0;
  tail_cmd->add_option("--M", tail_m, "sign string length")->capture_default_str();
  tail_cmd->add_option("--d", tail_d, "tail parameter d > 0")->capture_default_str();
  tail_cmd->add_option("--trials", tail_trials, "Monte Carlo trials")->capture_default_str();

  CLI::App* promise_cmd = app.add_subcommand(
      "promise", "exact promise-set probability 2 C(M,(M+B)/2)/2^M and its Theta(1/M) "
                 "Gaussian approximation");
  std::size_t promise_m = 100, promise_b = 0;
  promise_cmd->add_option("--M", promise_m, "string length")->required();
  promise_cmd->add_option("--B", promise_b, "promise bound (defaults to the derived value)");

  CLI::App* adversary_cmd = app.add_subcommand(
      "adversary", "adversary quantities m = C(M/2+B/2, B), l = C(M/2+B/2-1, B-1) with exact "
                   "ratio (M/B+1)/2, plus the 2M/B counting estimate");
  std::size_t adv_m = 0, adv_b = 0;
  adversary_cmd->add_option("--M", adv_m, "string length (even)")->required();
  adversary_cmd->add_option("--B", adv_b, "promise bound (even)")->required();

  CLI::App* avg_cmd = app.add_subcommand(
      "avg-bound", "average-case query count of a hypothetical (||Ht|| log M)^c simulation over "
                   "the promise set vs the sqrt(M/ln M) lower bound");
  std::size_t avg_m = 10000;
  double avg_c = 1.0, avg_d = 2.0;
  avg_cmd->add_option("--M", avg_m, "string length")->capture_default_str();
  avg_cmd->add_option("--c", avg_c, "polynomial exponent c > 0")->capture_default_str();
  avg_cmd->add_option("--d", avg_d, "tail parameter d > 0")->capture_default_str();

  CLI::App* ff_cmd = app.add_subcommand(
      "fastforward", "Hadamard tensor power returns to the identity at tau = 2 pi even though "
                     "||abs(H)|| = 2^{n/2}");
  unsigned ff_n = 4;
  double ff_tau = 2.0 * kPi;
  ff_cmd->add_option("--n", ff_n, "tensor power")->capture_default_str();
  ff_cmd->add_option("--tau", ff_tau, "evolution time")->capture_default_str();

  // Let global options (--out, --seed, ...) appear after the subcommand.
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (make->parsed()) {
      Rng rng(global.seed);
      HermitianMatrix h = [&]() -> HermitianMatrix {
        if (mk_line->parsed()) return line_hamiltonian(make_n);
        if (mk_parity->parsed() || mk_dense->parsed()) {
          const BitString s =
              make_bits.empty() ? random_bit_string(make_n, rng) : parse_bit_string(make_bits);
          return mk_parity->parsed() ? parity_hamiltonian(s)
                                     : dense_parity_hamiltonian(s, make_cap);
        }
        if (mk_circ->parsed()) {
          SignString s;
          if (!make_signs.empty()) {
            s = parse_sign_string(make_signs);
          } else if (make_promise) {
            s = sample_promise_string(derive_promise_bound(make_m), global.seed);
          } else {
            s = random_sign_string(make_m, rng);
          }
          return circulant_from_string(s);
        }
        if (mk_had->parsed()) return hadamard_tensor(make_pow);
        if (make_kind == "identity") return saturating_witness(WitnessKind::identity, make_size);
        if (make_kind == "all-ones") return saturating_witness(WitnessKind::all_ones, make_size);
        if (make_kind == "hadamard") return saturating_witness(WitnessKind::hadamard, make_size);
        throw CLI::ValidationError("--kind", "unknown witness kind '" + make_kind + "'");
      }();
      emit(matrix_to_json(h), global, out);
      return 0;
    }

    if (norms_cmd->parsed()) {
      const NormProfile p = norm_profile(norms_src.resolve(global.seed));
      emit(stamp_json(norm_profile_json(p), global), global, out);
      return 0;
    }

    if (chain_cmd->parsed()) {
      const ChainReport r = norm_chain_report(chain_src.resolve(global.seed));
      if (global.format == "csv") {
        emit(chain_report_csv(r), global, out);
      } else {
        emit(stamp_json(chain_report_json(r), global), global, out);
      }
      return r.all_ok ? 0 : 1;
    }

    if (cost_cmd->parsed()) {
      const WalkCostEstimate e =
          walk_cost_estimate(cost_src.resolve(global.seed), cost_t, cost_delta);
      emit(stamp_json(walk_cost_json(e), global), global, out);
      return 0;
    }

    if (evolve_cmd->parsed()) {
      const HermitianMatrix h = evolve_src.resolve(global.seed);
      StateVector psi;
      if (!evolve_state.empty()) {
        psi = load_statevec(evolve_state);
      } else if (evolve_basis_set) {
        psi = basis_state(h.dim(), evolve_basis);
      } else {
        psi = basis_state(h.dim(), 0);
      }
      emit(statevec_to_json(evolve(h, evolve_t, psi)), global, out);
      return 0;
    }

    if (decompose_cmd->parsed()) {
      const HermitianMatrix h = decompose_src.resolve(global.seed);
      const StarForestDecomposition d = star_decompose(h);
      const ArboricityReport r = arboricity_bound_report(h, d);
      nlohmann::json combined = {
          {"decomposition", nlohmann::json::parse(decomposition_json(d))},
          {"report", nlohmann::json::parse(arboricity_report_json(r))}};
      emit(stamp_json(combined.dump(), global), global, out);
      return r.all_ok ? 0 : 1;
    }

    if (trotter_cmd->parsed()) {
      const HermitianMatrix h = trotter_src.resolve(global.seed);
      StateVector psi = trotter_state.empty() ? basis_state(h.dim(), trotter_basis)
                                              : load_statevec(trotter_state);
      const StarForestDecomposition d = star_decompose(h);
      const StateVector approx = trotter_evolve(d, trotter_t, trotter_steps, psi);
      if (trotter_compare) {
        const StateVector exact = evolve(h, trotter_t, psi);
        double err2 = 0.0;
        for (std::size_t i = 0; i < exact.size(); ++i) err2 += std::norm(approx[i] - exact[i]);
        nlohmann::json report = {{"t", trotter_t},
                                 {"steps", trotter_steps},
                                 {"star_forests", d.forests.size()},
                                 {"error_vs_exact", std::sqrt(err2)}};
        emit(stamp_json(report.dump(), global), global, out);
      } else {
        emit(statevec_to_json(approx), global, out);
      }
      return 0;
    }

    if (parity_cmd->parsed()) {
      Rng rng(global.seed);
      const BitString s =
          parity_bits.empty() ? random_bit_string(parity_n, rng) : parse_bit_string(parity_bits);
      ParityResult r = parity_experiment(s, parity_cap);
      r.report.seed = global.seed;
      return finish_experiment(r.report, global, out);
    }

    if (sign_cmd->parsed()) {
      SignString s;
      PromiseConfig cfg;
      if (!sign_signs.empty()) {
        s = parse_sign_string(sign_signs);
        const int sum = sign_sum(s);
        if (sum == 0) throw CLI::ValidationError("--signs", "promise strings cannot sum to 0");
        cfg = promise_config(s.signs.size(), static_cast<std::size_t>(std::abs(sum)));
      } else {
        cfg = derive_promise_bound(sign_m);
        s = sample_promise_string(cfg, global.seed);
      }
      SignDetectionResult r = sign_detection_experiment(s, cfg);
      r.report.seed = global.seed;
      return finish_experiment(r.report, global, out);
    }

    if (tail_cmd->parsed()) {
      const TailReport r = tail_estimate(tail_m, tail_d, tail_trials, global.seed);
      if (global.format == "csv") {
        emit(tail_report_csv(r), global, out);
      } else {
        emit(stamp_json(tail_report_json(r), global), global, out);
      }
      // The analytic tail may exceed 1 (vacuous); only a real excess fails.
      return r.empirical_prob <= std::min(1.0, r.bound_lemma) + 3.0 * r.std_err ? 0 : 1;
    }

    if (promise_cmd->parsed()) {
      const std::size_t b = promise_b > 0 ? promise_b : derive_promise_bound(promise_m).b;
      emit(stamp_json(promise_probability_json(promise_probability(promise_m, b)), global),
           global, out);
      return 0;
    }

    if (adversary_cmd->parsed()) {
      emit(stamp_json(adversary_report_json(adversary_bound(adv_m, adv_b)), global), global, out);
      return 0;
    }

    if (avg_cmd->parsed()) {
      emit(stamp_json(average_case_report_json(average_case_bound(avg_m, avg_c, avg_d)), global),
           global, out);
      return 0;
    }

    if (ff_cmd->parsed()) {
      FastForwardResult r = fastforward_witness(ff_n, ff_tau);
      r.report.seed = global.seed;
      return finish_experiment(r.report, global, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  err << "no subcommand selected\n";
  return 2;
}

}  // namespace hamlim

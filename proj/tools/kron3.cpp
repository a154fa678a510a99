// kron3: exact computations with 2- and 3-Kronecker representations over
// small finite fields. Subcommands read/write the JSON wire format on
// stdin/stdout so they compose in shell pipelines.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kron/census.hpp"
#include "kron/config.hpp"
#include "kron/error.hpp"
#include "kron/json_io.hpp"
#include "kron/structure.hpp"
#include "kron/zoo.hpp"

namespace {

using kron::Json;

// Exit codes: 0 ok, 2 malformed input, 3 precondition violation, 4 refusal,
// 5 verification failure, 6 closure-gap findings only.
constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kDomain = 3;
constexpr int kRefused = 4;
constexpr int kFailed = 5;
constexpr int kClosureGap = 6;

int fail(const std::string& kind, const std::string& message, int code) {
  Json err;
  err["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

Json read_stdin_json() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw kron::ParseError(std::string("stdin is not valid JSON: ") + e.what());
  }
}

kron::KronRep read_rep_stdin() { return kron::rep_from_json(read_stdin_json()); }

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::vector<kron::Scalar> parse_scalar_list(const std::string& s, int q) {
  std::vector<kron::Scalar> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 0 || v >= q)
      throw kron::ParseError("arrow coefficient out of range 0..q-1");
    out.push_back(static_cast<kron::Scalar>(v));
  }
  return out;
}

Json chain_to_json(const kron::FiltrationChain& chain) {
  Json j;
  Json steps = Json::array();
  for (const auto& h : chain.steps) steps.push_back(kron::handle_to_json(h));
  Json factors = Json::array();
  for (const auto& f : chain.factors) factors.push_back(kron::rep_to_json(f));
  j["steps"] = std::move(steps);
  j["factors"] = std::move(factors);
  return j;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw kron::ParseError("cannot open output file " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact 2-/3-Kronecker representation toolkit over small finite fields"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "config file (overrides KRON3_CONFIG)");

  // ---- make ----------------------------------------------------------
  auto* make = app.add_subcommand(
      "make", "emit a named module from the construction catalog as JSON");
  std::string make_name;
  int make_q = 0, make_k = 1;
  bool make_list = false;
  make->add_option("name", make_name, "catalog name, e.g. X, B:0, I:3");
  make->add_option("--q", make_q, "field characteristic p (prime)");
  make->add_option("--k", make_k, "extension degree");
  make->add_flag("--list", make_list, "list catalog names");

  // ---- unary rep transforms -----------------------------------------
  auto* sigma = app.add_subcommand(
      "sigma", "shift functor (kernel construction); rep JSON in/out");
  bool sigma_inv = false;
  sigma->add_flag("--inv", sigma_inv, "apply the inverse shift (cokernel)");
  auto* tau = app.add_subcommand("tau", "squared shift; rep JSON in/out");
  bool tau_inv = false;
  tau->add_flag("--inv", tau_inv, "apply the inverse translate");
  auto* dualc = app.add_subcommand("dual", "transpose duality; rep JSON in/out");

  auto* hom = app.add_subcommand(
      "hom", "basis of the intertwiner space; reads a JSON array [M, N]");
  auto* decomp = app.add_subcommand(
      "decompose", "indecomposable summands; rep JSON in, JSON array out");

  auto* check_elem = app.add_subcommand(
      "check-elementary",
      "classify a module: zero / not regular / elementary or not");
  auto* filt = app.add_subcommand(
      "filtration", "chain with elementary factors; rep JSON in");
  std::string filt_strategy = "min";
  filt->add_option("--strategy", filt_strategy, "min or max submodule steps")
      ->check(CLI::IsMember({"min", "max"}));

  auto* findu = app.add_subcommand(
      "find-u12", "search for a (1,2) submodule via an annihilated generator");
  auto* nform = app.add_subcommand(
      "normal-form",
      "constructive (2,2) normal form: X form when elementary, tree form "
      "otherwise");

  auto* coeffq = app.add_subcommand(
      "coeffquiver", "coefficient quiver in the standard bases");
  bool coeffq_dot = false;
  coeffq->add_flag("--dot", coeffq_dot, "emit DOT digraph instead of JSON");

  auto* treesearch = app.add_subcommand(
      "tree-search", "exhaustive search for bases with a tree coefficient quiver");

  auto* restrict_cmd = app.add_subcommand(
      "restrict-k2", "restrict to the 2-Kronecker subalgebra of two arrow vectors");
  std::string rk2_b1 = "0,1,0", rk2_b2 = "0,0,1";
  restrict_cmd->add_option("--b1", rk2_b1, "first arrow vector, e.g. 0,1,0");
  restrict_cmd->add_option("--b2", rk2_b2, "second arrow vector");

  // ---- dimvec --------------------------------------------------------
  auto* dimvec = app.add_subcommand("dimvec", "integer dimension-vector tools");
  dimvec->require_subcommand(1);
  long long dv_x = 0, dv_y = 0;
  auto add_xy = [&](CLI::App* cmd) {
    cmd->add_option("x", dv_x)->required();
    cmd->add_option("y", dv_y)->required();
  };
  auto* dv_q = dimvec->add_subcommand("q", "Tits form x^2 + y^2 - 3xy");
  add_xy(dv_q);
  auto* dv_sigma = dimvec->add_subcommand("sigma", "shift (3x - y, x)");
  bool dv_sigma_inv = false;
  dv_sigma->add_flag("--inv", dv_sigma_inv, "inverse shift (y, 3y - x)");
  add_xy(dv_sigma);
  auto* dv_reduce =
      dimvec->add_subcommand("reduce", "reduce a regular vector into the fundamental domain");
  add_xy(dv_reduce);
  auto* dv_type = dimvec->add_subcommand("type", "orbit type of a regular vector");
  add_xy(dv_type);
  auto* dv_exists = dimvec->add_subcommand(
      "exists-elementary", "whether an elementary module exists at (x, y)");
  add_xy(dv_exists);

  // ---- verify-prop5 --------------------------------------------------
  auto* prop5 = app.add_subcommand(
      "verify-prop5",
      "check the inclusion of the (2,2) cycle module into its t-fold shift "
      "and the preinjective quotient decomposition");
  int p5_t = 1, p5_q = 2, p5_k = 1;
  prop5->add_option("--t", p5_t, "shift count (1..3)")->required();
  prop5->add_option("--q", p5_q, "field characteristic");
  prop5->add_option("--k", p5_k, "extension degree");

  // ---- census --------------------------------------------------------
  auto* census = app.add_subcommand(
      "census", "exhaustive or sampled classification at one dimension vector");
  std::string census_dim = "2,2", census_mode = "full", census_out, census_csv;
  int census_q = 2, census_k = 1, census_jobs = 0;
  std::uint64_t census_samples = 0, census_seed = 0;
  bool census_no_orbit = false;
  census->add_option("--dim", census_dim, "dimension vector, e.g. 2,2")->required();
  census->add_option("--q", census_q, "field characteristic");
  census->add_option("--k", census_k, "extension degree");
  auto* census_mode_opt =
      census->add_option("--mode", census_mode,
                         "full or sample (default: full, except 4,2 which "
                         "samples unless asked otherwise)")
          ->check(CLI::IsMember({"full", "sample"}));
  census->add_option("--samples", census_samples, "sample count (sample mode)");
  census->add_option("--seed", census_seed, "sample seed");
  census->add_option("--jobs", census_jobs, "worker count");
  census->add_option("--out", census_out, "write JSON report to file");
  census->add_option("--csv", census_csv, "write CSV report to file");
  census->add_flag("--no-normal-form-orbit", census_no_orbit,
                   "sample mode: do not force the normal-form orbit");

  // ---- verify-theorem -------------------------------------------------
  auto* vt = app.add_subcommand(
      "verify-theorem",
      "run the classification censuses and the Tits-form cross-check");
  int vt_q = 2, vt_k = 1, vt_jobs = 0;
  std::string vt_out;
  vt->add_option("--q", vt_q, "field characteristic");
  vt->add_option("--k", vt_k, "extension degree");
  vt->add_option("--jobs", vt_jobs, "worker count");
  vt->add_option("--out", vt_out, "write JSON report to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kBadInput;
  }

  try {
    kron::Config cfg = config_path.empty()
                           ? kron::Config::from_environment()
                           : kron::Config::load_file(config_path);

    if (*make) {
      if (make_list) {
        Json j = Json::array();
        for (const auto& [name, desc] : kron::zoo_catalog())
          j.push_back({{"name", name}, {"description", desc}});
        emit(j);
        return kOk;
      }
      if (make_name.empty())
        return fail("usage", "make requires a name or --list", kBadInput);
      int p = make_q == 0 ? cfg.default_p : make_q;
      kron::KronRep rep = kron::build_by_name(make_name, kron::Field::get(p, make_k));
      emit(kron::rep_to_json(rep));
      return kOk;
    }
    if (*sigma) {
      kron::KronRep rep = read_rep_stdin();
      emit(kron::rep_to_json(sigma_inv ? kron::sigma_inv_rep(rep)
                                       : kron::sigma_rep(rep)));
      return kOk;
    }
    if (*tau) {
      kron::KronRep rep = read_rep_stdin();
      emit(kron::rep_to_json(tau_inv ? kron::tau_inv_rep(rep)
                                     : kron::tau_rep(rep)));
      return kOk;
    }
    if (*dualc) {
      emit(kron::rep_to_json(kron::dual(read_rep_stdin())));
      return kOk;
    }
    if (*hom) {
      Json in = read_stdin_json();
      if (!in.is_array() || in.size() != 2)
        throw kron::ParseError("hom expects a JSON array [M, N]");
      kron::KronRep m = kron::rep_from_json(in[0]);
      kron::KronRep n = kron::rep_from_json(in[1]);
      auto basis = kron::hom_space(m, n);
      Json j;
      j["dim"] = basis.size();
      Json list = Json::array();
      for (const auto& h : basis)
        list.push_back({{"f1", kron::matrix_to_json(h.f1)},
                        {"f2", kron::matrix_to_json(h.f2)}});
      j["basis"] = std::move(list);
      emit(j);
      return kOk;
    }
    if (*decomp) {
      kron::KronRep rep = read_rep_stdin();
      Json j = Json::array();
      for (const auto& part : kron::decompose(rep, cfg.idempotent_bound))
        j.push_back(kron::rep_to_json(part));
      emit(j);
      return kOk;
    }
    if (*check_elem) {
      // Permissive wrapper: classifies anything instead of erroring.
      kron::KronRep rep = read_rep_stdin();
      Json j;
      if (rep.total_dim() == 0) {
        j["class"] = "zero";
        j["elementary"] = false;
      } else if (!kron::is_regular_rep(rep, cfg.idempotent_bound)) {
        j["class"] = "not-regular";
        j["elementary"] = false;
      } else {
        bool e = kron::elementary_criterion(rep, cfg.subspace_bound);
        j["class"] = "regular";
        j["elementary"] = e;
      }
      emit(j);
      return kOk;
    }
    if (*filt) {
      kron::KronRep rep = read_rep_stdin();
      auto strategy = filt_strategy == "min" ? kron::FiltrationStrategy::MinSub
                                             : kron::FiltrationStrategy::MaxSub;
      emit(chain_to_json(kron::elementary_filtration(
          rep, strategy, cfg.subspace_bound, cfg.idempotent_bound)));
      return kOk;
    }
    if (*findu) {
      kron::KronRep rep = read_rep_stdin();
      auto h = kron::find_u12(rep);
      emit(h ? kron::handle_to_json(*h) : Json(nullptr));
      return kOk;
    }
    if (*nform) {
      kron::KronRep rep = read_rep_stdin();
      if (rep.d1 != 2 || rep.d2 != 2 || rep.n_arrows != 3)
        throw kron::DomainError("normal-form expects a (2,2) 3-Kronecker module");
      if (!kron::is_indecomposable(rep, cfg.idempotent_bound))
        throw kron::DomainError("normal-form expects an indecomposable module");
      Json j;
      if (kron::is_elementary(rep, cfg.subspace_bound, cfg.idempotent_bound)) {
        auto w = kron::x_normal_form(rep);
        j["kind"] = "elementary";
        if (w) {
          j["found"] = true;
          j["kappa"] = w->kappa;
          j["nu"] = w->nu;
          j["arrow_change"] = kron::matrix_to_json(w->arrow_g);
          j["source_basis"] = kron::matrix_to_json(w->m1_basis);
          j["sink_basis"] = kron::matrix_to_json(w->m2_basis);
        } else {
          j["found"] = false;
        }
      } else {
        auto w = kron::nonelem_normal_form(rep);
        j["kind"] = "tree";
        if (w) {
          j["found"] = true;
          j["variant"] = w->variant == kron::TreeVariant::Left ? "left" : "right";
          j["arrow_change"] = kron::matrix_to_json(w->arrow_g);
          j["source_basis"] = kron::matrix_to_json(w->m1_basis);
          j["sink_basis"] = kron::matrix_to_json(w->m2_basis);
        } else {
          j["found"] = false;
        }
      }
      emit(j);
      return kOk;
    }
    if (*coeffq) {
      kron::KronRep rep = read_rep_stdin();
      kron::CoeffQuiver quiver = kron::coefficient_quiver(rep);
      if (coeffq_dot) {
        std::cout << kron::coeff_quiver_dot(quiver);
        return kOk;
      }
      Json j;
      j["top"] = quiver.top;
      j["bottom"] = quiver.bottom;
      Json edges = Json::array();
      for (const auto& e : quiver.edges)
        edges.push_back({e.top_v, e.bottom_v, e.arrow});
      j["edges"] = std::move(edges);
      j["tree"] = kron::is_tree(quiver);
      emit(j);
      return kOk;
    }
    if (*treesearch) {
      kron::KronRep rep = read_rep_stdin();
      auto w = kron::tree_module_search(rep, cfg.tree_search_bound);
      Json j;
      j["tree_module"] = w.has_value();
      if (w) {
        j["source_basis"] = kron::matrix_to_json(w->p1);
        j["sink_basis"] = kron::matrix_to_json(w->p2);
        j["arrow_change"] = kron::matrix_to_json(w->g);
      }
      emit(j);
      return kOk;
    }
    if (*restrict_cmd) {
      kron::KronRep rep = read_rep_stdin();
      auto b1 = parse_scalar_list(rk2_b1, rep.field->q());
      auto b2 = parse_scalar_list(rk2_b2, rep.field->q());
      emit(kron::rep_to_json(kron::restrict_k2(rep, b1, b2)));
      return kOk;
    }
    if (*dimvec) {
      if (*dv_q) {
        std::cout << kron::tits_q({dv_x, dv_y}) << "\n";
        return kOk;
      }
      if (*dv_sigma) {
        kron::K0Vec r = dv_sigma_inv ? kron::sigma_inv_dim({dv_x, dv_y})
                                     : kron::sigma_dim({dv_x, dv_y});
        std::cout << r.x << " " << r.y << "\n";
        return kOk;
      }
      if (*dv_reduce) {
        auto res = kron::reduce_to_F(kron::DimVec(dv_x, dv_y));
        Json j;
        j["representative"] = {res.representative.x, res.representative.y};
        Json word = Json::array();
        for (auto m : res.word) word.push_back(kron::move_name(m));
        j["word"] = std::move(word);
        emit(j);
        return kOk;
      }
      if (*dv_type) {
        std::cout << kron::sigma_type_name(
                         kron::sigma_type(kron::DimVec(dv_x, dv_y)))
                  << "\n";
        return kOk;
      }
      if (*dv_exists) {
        std::cout << (kron::exists_elementary_dim(kron::DimVec(dv_x, dv_y))
                          ? "true"
                          : "false")
                  << "\n";
        return kOk;
      }
    }
    if (*prop5) {
      auto rep = kron::verify_shift_tower(p5_t, kron::Field::get(p5_q, p5_k));
      Json j;
      j["t"] = rep.t;
      j["shifted_dim"] = {rep.shifted_dim.x, rep.shifted_dim.y};
      j["embedding_found"] = rep.embedding_found;
      j["quotient_matches"] = rep.quotient_matches;
      j["dims_match"] = rep.dims_match;
      Json sd = Json::array();
      for (auto d : rep.summand_dims) sd.push_back({d.x, d.y});
      j["quotient_summand_dims"] = std::move(sd);
      j["pass"] = rep.pass();
      emit(j);
      return rep.pass() ? kOk : kFailed;
    }
    if (*census) {
      kron::CensusOptions o;
      std::size_t comma = census_dim.find(',');
      if (comma == std::string::npos)
        throw kron::ParseError("--dim expects x,y");
      o.d = kron::DimVec(std::stoll(census_dim.substr(0, comma)),
                         std::stoll(census_dim.substr(comma + 1)));
      o.p = census_q;
      o.k = census_k;
      if (census_mode_opt->count() == 0 && o.d == kron::DimVec(4, 2))
        census_mode = "sample";
      o.mode = census_mode == "full" ? kron::CensusMode::Full
                                     : kron::CensusMode::Sample;
      o.limits = cfg;
      o.samples = census_samples == 0 ? cfg.sample_size : census_samples;
      o.seed = census_seed == 0 ? cfg.sample_seed : census_seed;
      o.jobs = census_jobs == 0 ? cfg.jobs : census_jobs;
      o.include_normal_form_orbit = !census_no_orbit;
      kron::CensusReport report = kron::run_census(o);
      write_out(census_out, report.to_json().dump(2) + "\n");
      if (!census_csv.empty()) write_out(census_csv, report.to_csv());
      if (!census_out.empty())
        std::cout << report.to_csv();
      if (report.verdict == "pass") return kOk;
      return report.verdict == "closure-gap" ? kClosureGap : kFailed;
    }
    if (*vt) {
      kron::TheoremReport report = kron::verify_theorem(
          vt_q, vt_k, cfg, vt_jobs == 0 ? cfg.jobs : vt_jobs);
      write_out(vt_out, report.to_json().dump(2) + "\n");
      if (!vt_out.empty()) {
        for (const auto& c : report.censuses) std::cout << c.to_csv();
      }
      if (report.pass) return kOk;
      return report.closure_gap ? kClosureGap : kFailed;
    }
    return fail("usage", "no subcommand executed", kBadInput);
  } catch (const kron::ParseError& e) {
    return fail("parse", e.what(), kBadInput);
  } catch (const kron::Refusal& e) {
    return fail("refusal", e.what(), kRefused);
  } catch (const kron::DomainError& e) {
    return fail("domain", e.what(), kDomain);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kFailed);
  }
}

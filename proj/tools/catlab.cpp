// catlab: command-line front end for the Catalanimal verification library.
//
//   catlab den validate|nests|rhs --file den.json
//   catlab verify <target> [options]
//   catlab lw --mu 4,3,3,3,2 --m 1 --n 1
//
// Exit status: 0 verified or computed, 1 mismatch, 2 invalid input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catlab/catlab.hpp"

using namespace catlab;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2 };

struct Options {
  std::string format = "json";
  bool timing = false;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::string status = "verified";
  Json payload = Json::object();
  std::string tsv;
  double elapsed = 0;
};

int emit(const Report& r, const Options& opt) {
  if (opt.format == "tsv") {
    std::cout << "# " << r.command << "\t" << r.status << "\n" << r.tsv;
  } else {
    Json j;
    j["schema"] = kSchema;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["inputs_digest"] = digest(r.inputs.dump());
    j["status"] = r.status;
    if (opt.timing) j["elapsed_seconds"] = r.elapsed;
    j["payload"] = r.payload;
    std::cout << j.dump(2) << "\n";
  }
  if (r.status == "verified" || r.status == "computed") return kOk;
  if (r.status == "mismatch") return kMismatch;
  return kInvalid;
}

Den read_den(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return den_from_json(parse_json_text(ss.str()));
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("malformed integer list: " + s);
    }
  }
  return out;
}

void suite_payload(Report& rep, const SuiteResult& res) {
  rep.payload["cases"] = res.cases;
  rep.payload["failures"] = res.failures;
  rep.status = res.ok() ? "verified" : "mismatch";
  rep.tsv += "cases\t" + std::to_string(res.cases) + "\nfailures\t" + std::to_string(res.failures.size()) + "\n";
  for (const auto& f : res.failures) rep.tsv += "failure\t" + f + "\n";
}

// ---------------------------------------------------------------------------

Report den_validate(const Den& D) {
  Report rep;
  rep.command = "den validate";
  rep.inputs["den"] = den_to_json(D);
  if (auto bad = validate(D)) {
    rep.status = "invalid-input";
    rep.payload["error"] = *bad;
    rep.tsv = "error\t" + *bad + "\n";
    return rep;
  }
  rep.status = "computed";
  auto g = g_vector(D);
  rep.payload["g"] = g;
  rep.tsv = "g\t" + weight_string(g) + "\n";
  return rep;
}

Report den_nests(const Den& D) {
  require_valid(D);
  Report rep;
  rep.command = "den nests";
  rep.inputs["den"] = den_to_json(D);
  rep.status = "computed";
  auto g = g_vector(D);
  int l = std::accumulate(g.begin(), g.end(), 0);
  Json rows = Json::array();
  rep.tsv = "a\tdinv\tlambdas\tllt\n";
  for (const auto& t : nest_terms(D, l)) {
    rows.push_back({{"a", t.a}, {"dinv", t.dinv}, {"nest", nest_to_json(t.nest)}, {"llt", to_json(t.llt)}});
    std::string lams;
    for (const auto& p : t.nest.lambdas) lams += (lams.empty() ? "" : "|") + partition_tsv(p);
    rep.tsv += std::to_string(t.a) + "\t" + std::to_string(t.dinv) + "\t" + lams + "\t" + t.llt.to_string() + "\n";
  }
  rep.payload["nests"] = rows;
  return rep;
}

Report den_rhs(const Den& D) {
  require_valid(D);
  Report rep;
  rep.command = "den rhs";
  rep.inputs["den"] = den_to_json(D);
  rep.status = "computed";
  auto f = rhs_nest_sum(D);
  rep.payload["rhs"] = to_json(f);
  rep.tsv = schur_tsv(f);
  return rep;
}

Report verify_nest_file(const Den& D) {
  require_valid(D);
  Report rep;
  rep.command = "verify nest-identity";
  rep.inputs["den"] = den_to_json(D);
  auto c = nest_identity_case(D);
  rep.status = c.ok() ? "verified" : "mismatch";
  rep.payload["polynomial_part"] = to_json(c.lhs);
  rep.payload["nest_sum"] = to_json(c.rhs);
  rep.tsv = schur_tsv(c.lhs);
  return rep;
}

Report verify_nest_random(std::uint64_t seed, int count, int hmax, int gmax) {
  if (count <= 0 || hmax <= 0 || gmax <= 0) throw InputError("count, hmax and gmax must be positive");
  Report rep;
  rep.command = "verify nest-identity --random";
  rep.inputs = {{"seed", seed}, {"count", count}, {"hmax", hmax}, {"gmax", gmax}};
  suite_payload(rep, nest_identity_random(seed, count, hmax, gmax));
  return rep;
}

Report verify_orthogonality(const std::vector<int>& r, int box, int cap) {
  if (r.empty() || comp_size(r) == 0 || comp_size(r) > 5) throw InputError("need 1 <= |r| <= 5");
  if (box < 0 || cap <= 0) throw InputError("box must be nonnegative and cap positive");
  Report rep;
  rep.command = "verify orthogonality";
  rep.inputs = {{"r", r}, {"box", box}, {"cap", cap}};
  suite_payload(rep, orthogonality_suite(r, box, static_cast<std::size_t>(cap)));
  return rep;
}

Report verify_cauchy(std::uint64_t seed, int count, int tmax, int kmax, int size_max) {
  if (count <= 0 || tmax < 0 || kmax <= 0 || size_max <= 0) throw InputError("bad Cauchy parameters");
  Report rep;
  rep.command = "verify cauchy";
  rep.inputs = {{"seed", seed}, {"count", count}, {"tmax", tmax}, {"kmax", kmax}, {"size_max", size_max}};
  auto inst = random_cauchy_instances(seed, count, kmax, size_max);
  Json list = Json::array();
  for (const auto& c : inst) list.push_back(cauchy_tag(c));
  rep.payload["instances"] = list;
  suite_payload(rep, cauchy_suite(inst, tmax));
  if (static_cast<int>(inst.size()) < count) {
    rep.status = "mismatch";
    rep.payload["failures"].push_back("only " + std::to_string(inst.size()) + " instances found");
  }
  return rep;
}

Report verify_llt(const std::vector<int>& r, int box, int max_size) {
  if (r.empty() || comp_size(r) == 0 || comp_size(r) > 4) throw InputError("need 1 <= |r| <= 4");
  if (box < 0 || max_size < 0) throw InputError("box and max-size must be nonnegative");
  Report rep;
  rep.command = "verify llt-series";
  rep.inputs = {{"r", r}, {"box", box}, {"max_size", max_size}};
  LLTSuiteStats st;
  suite_payload(rep, llt_series_suite(r, box, max_size, &st));
  rep.payload["pairs"] = st.pairs;
  rep.payload["vanishing_pairs"] = st.vanishing;
  rep.payload["coefficients"] = st.coefficients;
  return rep;
}

Report verify_winding(int kmax, std::uint64_t seed, int per_perm) {
  if (kmax < 2 || kmax > 5 || per_perm <= 0) throw InputError("need 2 <= k <= 5 and a positive count");
  Report rep;
  rep.command = "verify winding";
  rep.inputs = {{"k", kmax}, {"seed", seed}, {"per_perm", per_perm}};
  Json perms = Json::object();
  for (int n = 2; n <= kmax; ++n) perms[std::to_string(n)] = winding_permutations(n).size();
  rep.payload["winding_permutations"] = perms;
  suite_payload(rep, winding_suite(kmax, seed, per_perm));
  return rep;
}

Report verify_stable(bool example, const std::string& den_file, std::uint64_t seed, int samples, int tmax) {
  if (samples <= 0 || tmax < 0) throw InputError("samples must be positive and tmax nonnegative");
  StableInstance I;
  Report rep;
  rep.command = "verify stable";
  if (!den_file.empty()) {
    Den D = read_den(den_file);
    I = stable_instance_from_den(D);
    rep.inputs["den"] = den_to_json(D);
  } else if (example) {
    I = stable_example_instance();
    rep.inputs["instance"] = "example";
  } else {
    throw InputError("give --example or --file");
  }
  rep.inputs["seed"] = seed;
  rep.inputs["samples"] = samples;
  rep.inputs["tmax"] = tmax;
  rep.payload["instance"] = stable_tag(I);
  StableSuiteStats st;
  suite_payload(rep, stable_suite(I, seed, samples, tmax, &st));
  rep.payload["nonzero_weights"] = st.nonzero;
  return rep;
}

Report verify_lw_nabla(const Partition& mu, int m, int spec, std::uint64_t seed) {
  if (!is_partition(mu) || mu.empty()) throw InputError("--mu must be a nonempty partition");
  if (spec <= 0) throw InputError("--spec must be positive");
  Report rep;
  rep.command = "verify lw-nabla";
  rep.inputs = {{"mu", mu}, {"m", m}, {"spec", spec}, {"seed", seed}};
  auto r = verify_mn_lw(mu, m, spec, seed);
  rep.payload["nest_side"] = to_json(lw_nest_side(mu, m));
  Json pts = Json::array();
  for (const auto& x : r.results) {
    Json side = Json::array();
    for (const auto& [lam, c] : x.nabla_side.coeffs) side.push_back({{"lambda", lam}, {"value", rational_string(c)}});
    pts.push_back({{"q", rational_string(x.q0)}, {"t", rational_string(x.t0)}, {"ok", x.ok()}, {"nabla", side}});
    rep.tsv += rational_string(x.q0) + "\t" + rational_string(x.t0) + "\t" + (x.ok() ? "ok" : "mismatch") + "\n";
  }
  rep.payload["specializations"] = pts;
  rep.status = r.ok() ? "verified" : "mismatch";
  return rep;
}

Report lw_command(const Partition& mu, int m, int n) {
  Report rep;
  rep.command = "lw";
  rep.inputs = {{"mu", mu}, {"m", m}, {"n", n}};
  Den D = lw_den(mu, m, n);
  bool same = schur_catalanimal(mu, m, n, true) == den_catalanimal(D);
  rep.payload["den"] = den_to_json(D);
  rep.payload["catalanimals_equal"] = same;
  rep.status = same ? "verified" : "mismatch";
  rep.tsv = "h\t" + std::to_string(D.h) + "\np\t" + D.p.to_string() + "\nd\t" + weight_string(D.d) + "\ne\t" +
            weight_string(D.e) + "\ncatalanimals_equal\t" + (same ? "yes" : "no") + "\n";
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalanimal and nest verification tool"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--timing", opt.timing, "include elapsed time in JSON reports");

  std::string file;
  std::uint64_t seed = 1;
  int count = 50, hmax = 5, gmax = 7, box = 2, cap = 20, tmax = 3, kmax = 3, size_max = 4, max_size = 4, k = 4,
      per_perm = 3, samples = 10, m = 1, n = 1, spec = 3;
  std::string r_list = "2,1", mu_list = "1";
  bool random = false, example = false;

  auto* den = app.add_subcommand("den", "den utilities");
  den->require_subcommand(1);
  auto* den_validate_cmd = den->add_subcommand("validate", "check the den conditions");
  auto* den_nests_cmd = den->add_subcommand("nests", "list nests with statistics");
  auto* den_rhs_cmd = den->add_subcommand("rhs", "nest-side Schur expansion");
  for (auto* c : {den_validate_cmd, den_nests_cmd, den_rhs_cmd}) c->add_option("--file", file)->required();

  auto* verify = app.add_subcommand("verify", "identity checks");
  verify->require_subcommand(1);
  auto* v_nest = verify->add_subcommand("nest-identity");
  v_nest->add_option("--file", file);
  v_nest->add_flag("--random", random);
  v_nest->add_option("--count", count);
  v_nest->add_option("--seed", seed);
  v_nest->add_option("--hmax", hmax);
  v_nest->add_option("--gmax", gmax);
  auto* v_orth = verify->add_subcommand("orthogonality");
  v_orth->add_option("--r", r_list);
  v_orth->add_option("--box", box);
  v_orth->add_option("--cap", cap);
  auto* v_cauchy = verify->add_subcommand("cauchy");
  v_cauchy->add_option("--seed", seed);
  v_cauchy->add_option("--count", count)->default_val(10);
  v_cauchy->add_option("--tmax", tmax);
  v_cauchy->add_option("--kmax", kmax);
  v_cauchy->add_option("--size-max", size_max);
  auto* v_llt = verify->add_subcommand("llt-series");
  v_llt->add_option("--r", r_list);
  v_llt->add_option("--box", box);
  v_llt->add_option("--max-size", max_size);
  auto* v_wind = verify->add_subcommand("winding");
  v_wind->add_option("--k", k);
  v_wind->add_option("--seed", seed);
  v_wind->add_option("--per-perm", per_perm);
  auto* v_stable = verify->add_subcommand("stable");
  v_stable->add_flag("--example", example);
  v_stable->add_option("--file", file);
  v_stable->add_option("--seed", seed);
  v_stable->add_option("--samples", samples);
  v_stable->add_option("--tmax", tmax)->default_val(2);
  auto* v_lw = verify->add_subcommand("lw-nabla");
  v_lw->add_option("--mu", mu_list);
  v_lw->add_option("--m", m);
  v_lw->add_option("--spec", spec);
  v_lw->add_option("--seed", seed);

  auto* lw = app.add_subcommand("lw", "LW den and Catalanimal check");
  lw->add_option("--mu", mu_list)->required();
  lw->add_option("--m", m);
  lw->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (den->parsed()) {
      Den D = read_den(file);
      if (den_validate_cmd->parsed()) rep = den_validate(D);
      else if (den_nests_cmd->parsed()) rep = den_nests(D);
      else rep = den_rhs(D);
    } else if (v_nest->parsed()) {
      if (random) rep = verify_nest_random(seed, count, hmax, gmax);
      else if (!file.empty()) rep = verify_nest_file(read_den(file));
      else throw InputError("give --file or --random");
    } else if (v_orth->parsed()) {
      rep = verify_orthogonality(parse_list(r_list), box, cap);
    } else if (v_cauchy->parsed()) {
      rep = verify_cauchy(seed, count, tmax, kmax, size_max);
    } else if (v_llt->parsed()) {
      rep = verify_llt(parse_list(r_list), box, max_size);
    } else if (v_wind->parsed()) {
      rep = verify_winding(k, seed, per_perm);
    } else if (v_stable->parsed()) {
      rep = verify_stable(example, file, seed, samples, tmax);
    } else if (v_lw->parsed()) {
      rep = verify_lw_nabla(parse_list(mu_list), m, spec, seed);
    } else if (lw->parsed()) {
      rep = lw_command(parse_list(mu_list), m, n);
    }
  } catch (const InputError& e) {
    rep.command = rep.command.empty() ? "error" : rep.command;
    rep.status = "invalid-input";
    rep.payload = {{"error", e.what()}};
    rep.tsv = std::string("error\t") + e.what() + "\n";
  }
  rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit(rep, opt);
}

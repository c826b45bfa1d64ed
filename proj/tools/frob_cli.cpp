// Command-line front end: every verifier and calculator in the library,
// with JSON report arrays on stdout (or --out) and a text summary mode.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frob/claims.hpp"
#include "frob/family.hpp"

namespace {

using frob::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRefuted = 4;
constexpr int kExitInternal = 5;

struct Output {
  std::string format = "json";
  std::string out_path;

  void emit(const json& payload, const std::string& text) const {
    std::string body = format == "text" ? text : payload.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open output path " + out_path);
      f << body;
    }
  }
};

std::string report_line(const frob::VerificationReport& r) {
  std::ostringstream os;
  os << r.claim << "  " << frob::verdict_name(r.verdict) << "  instance="
     << r.instance.dump() << "\n";
  return os.str();
}

int exit_for(const std::vector<frob::VerificationReport>& reports) {
  bool invalid = false;
  for (const auto& r : reports) {
    if (r.verdict == frob::Verdict::Refuted) return kExitRefuted;
    if (r.verdict == frob::Verdict::InvalidInstance) invalid = true;
  }
  return invalid ? kExitUsage : kExitOk;
}

int emit_reports(const std::vector<frob::VerificationReport>& reports,
                 const Output& out) {
  json arr = json::array();
  std::string text;
  for (const auto& r : reports) {
    arr.push_back(r.to_json());
    text += report_line(r);
  }
  out.emit(arr, text);
  return exit_for(reports);
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

struct VerifyArgs {
  std::string claim;
  std::int64_t p = -1, m = -1, n = -1;
  std::int64_t k = -1;
  int e_max = 4;
  std::uint64_t q_window = 100;
  std::int64_t up_to = 20;
  std::string primes;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw CLI::ValidationError(msg);
}

std::vector<frob::VerificationReport> run_verify(const VerifyArgs& a,
                                                 const frob::GBOptions& opt) {
  using frob::PaperInstance;
  std::string id = a.claim == "thm-1.1" ? "thm-1.1-bundle" : a.claim;
  require(frob::claim_exists(id), "unknown claim id '" + a.claim +
                                      "'; run list-claims for the catalog");
  auto inst = [&](bool need_k) {
    require(a.m > 0 && a.n > 0, "claim needs --m and --n");
    PaperInstance i{a.p < 0 ? 0 : a.p, a.m, a.n, std::nullopt};
    if (need_k) {
      require(a.k > 0, "claim needs --k");
      i.k = a.k;
    }
    return i;
  };
  if (id == "lemma-4.2") {
    require(a.p >= 2, "claim needs --p");
    return {frob::verify_key_lemma(inst(true), opt)};
  }
  if (id == "lemma-4.2-replay") {
    require(a.m > 0 && a.n > 0 && a.k > 0, "claim needs --m --n --k");
    return {frob::replay_key_lemma_proof(a.m, a.n, a.k, opt)};
  }
  if (id == "prop-4.3-quotient-fregular") {
    require(a.p >= 2 && a.n > 0, "claim needs --p and --n");
    return {frob::verify_quotient_fregular(a.n, a.p, opt, a.e_max)};
  }
  if (id == "prop-4.4-not-fpure") {
    require(a.p >= 2, "claim needs --p");
    return {frob::verify_not_fpure(inst(false), opt)};
  }
  if (id == "prop-4.4-not-fregular") {
    require(a.p >= 2, "claim needs --p");
    return {frob::verify_not_fregular(inst(false), opt, a.q_window)};
  }
  if (id == "rem-4.1-hsop") return {frob::verify_hsop(inst(false), opt)};
  if (id == "rem-4.1-nzd") return {frob::verify_nzd(inst(false), opt)};
  if (id == "sec6-singular-locus") {
    require(a.p >= 2, "claim needs --p");
    return {frob::verify_singular_locus(inst(false), opt)};
  }
  if (id == "thm-1.1-bundle") {
    require(a.p >= 2, "claim needs --p");
    return {frob::verify_main_theorem(inst(false), opt)};
  }
  if (id == "sec5-sweep") {
    require(a.m > 0 && a.n > 0 && !a.primes.empty(),
            "claim needs --m --n --primes");
    return frob::prime_sweep(a.m, a.n, parse_int_list(a.primes), opt);
  }
  if (id == "prop-4.3-hilbert-crosscheck") {
    require(a.n > 0, "claim needs --n");
    return {frob::hilbert_crosscheck(a.n, a.up_to, opt)};
  }
  throw CLI::ValidationError("claim '" + id + "' has no runner");
}

struct GbArgs {
  std::int64_t p = 0;
  std::string vars;
  std::string weights;
  std::string gens;
  std::string poly;
  std::string order = "wgrevlex";
  std::int64_t up_to = 20;
};

template <class K>
frob::RingPtr<K> build_ring(const GbArgs& a, const K& field) {
  auto names = split_commas(a.vars);
  require(!names.empty(), "gb needs --vars");
  std::vector<std::int64_t> w;
  if (a.weights.empty())
    w.assign(names.size(), 1);
  else
    w = parse_int_list(a.weights);
  return frob::make_ring<K>(field, names, w);
}

template <class K>
int run_gb(const std::string& mode, const GbArgs& a, const K& field,
           const frob::GBOptions& opt, const Output& out) {
  auto R = build_ring(a, field);
  std::vector<frob::Poly<K>> gens;
  for (const auto& g : split_commas(a.gens))
    gens.push_back(frob::parse_polynomial(g, R));
  auto I = frob::Ideal<K>::make(R, gens);
  frob::MonomialOrder order = R->default_order();
  if (a.order == "lex")
    order = frob::MonomialOrder::lex(R->nvars());
  else if (a.order == "grevlex")
    order = frob::MonomialOrder::grevlex(R->nvars());
  else
    require(a.order == "wgrevlex", "--order must be wgrevlex, grevlex or lex");

  json payload;
  std::string text;
  if (mode == "basis") {
    auto G = frob::buchberger(I, order, opt);
    json basis = json::array();
    for (const auto& g : G.basis) {
      basis.push_back(frob::render(g));
      text += frob::render(g) + "\n";
    }
    payload = json{{"basis", basis},
                   {"stats",
                    json{{"reduction_steps", G.stats.reduction_steps},
                         {"spairs_considered", G.stats.spairs_considered}}}};
  } else if (mode == "member") {
    require(!a.poly.empty(), "gb member needs --poly");
    auto f = frob::parse_polynomial(a.poly, R);
    bool in = frob::ideal_member(f, I, opt);
    payload = json{{"poly", frob::render(f)}, {"member", in}};
    text = std::string(in ? "member" : "not-member") + "\n";
  } else if (mode == "dim") {
    int d = frob::krull_dimension(I, opt);
    payload = json{{"dimension", d}};
    text = std::to_string(d) + "\n";
  } else if (mode == "hilbert") {
    auto hf = frob::hilbert_function(I, a.up_to, opt);
    payload = json{{"hilbert", hf}};
    for (auto v : hf) text += std::to_string(v) + " ";
    text += "\n";
  }
  out.emit(payload, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for a weighted determinantal family "
               "and its Frobenius singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::uint64_t budget = frob::GBOptions{}.step_budget;
  app.add_option("--format", out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out.out_path, "write output to this path");
  app.add_option("--budget", budget, "reduction-step budget");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run one named claim");
  verify->add_option("claim", va.claim, "claim identifier")->required();
  verify->add_option("--p", va.p, "prime characteristic");
  verify->add_option("--m", va.m, "family parameter m");
  verify->add_option("--n", va.n, "family parameter n");
  verify->add_option("--k", va.k, "exponent parameter k");
  verify->add_option("--e-max", va.e_max, "largest Frobenius exponent tried");
  verify->add_option("--q-window", va.q_window,
                     "upper bound for the prime-power window");
  verify->add_option("--up-to", va.up_to, "top degree for tabulations");
  verify->add_option("--primes", va.primes, "comma-separated prime list");

  struct SweepArgs {
    std::int64_t m = -1, n = -1;
    std::string primes;
  } sa;
  auto* sweep = app.add_subcommand("sweep", "per-prime verification sweep");
  sweep->add_option("--m", sa.m)->required();
  sweep->add_option("--n", sa.n)->required();
  sweep->add_option("--primes", sa.primes)->required();

  struct DivArgs {
    std::string mode, e_text;
    std::int64_t up_to = 20;
    std::int64_t p = -1;
  } da;
  auto* divisor = app.add_subcommand("divisor", "Q-divisor calculators");
  divisor->add_option("mode", da.mode, "dims, floor, identity or heuristic")
      ->required()
      ->check(CLI::IsMember({"dims", "floor", "identity", "heuristic"}));
  divisor->add_option("--E", da.e_text, "divisor, e.g. 1/2@VX,1/2@VY,1/4@VXY")
      ->required();
  divisor->add_option("--up-to", da.up_to, "range bound");
  divisor->add_option("--p", da.p, "characteristic for the heuristic");

  GbArgs ga;
  std::string gb_mode;
  auto* gb = app.add_subcommand("gb", "Groebner calculators");
  gb->add_option("mode", gb_mode, "basis, member, dim or hilbert")
      ->required()
      ->check(CLI::IsMember({"basis", "member", "dim", "hilbert"}));
  gb->add_option("--p", ga.p, "characteristic (0 for the rationals)");
  gb->add_option("--vars", ga.vars, "comma-separated variable names");
  gb->add_option("--weights", ga.weights, "comma-separated positive weights");
  gb->add_option("--gens", ga.gens, "comma-separated generators");
  gb->add_option("--poly", ga.poly, "polynomial for membership");
  gb->add_option("--order", ga.order, "wgrevlex, grevlex or lex");
  gb->add_option("--up-to", ga.up_to, "top degree for hilbert");

  auto* list = app.add_subcommand("list-claims", "print the claim catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  frob::GBOptions opt;
  opt.step_budget = budget;

  try {
    if (*list) {
      json arr = json::array();
      std::string text;
      for (const auto& c : frob::claim_catalog()) {
        arr.push_back(json{{"id", c.id},
                           {"statement", c.statement},
                           {"parameters", c.parameters}});
        text += c.id + "\n    " + c.statement + "\n    parameters: " +
                c.parameters + "\n";
      }
      out.emit(arr, text);
      return kExitOk;
    }
    if (*verify) return emit_reports(run_verify(va, opt), out);
    if (*sweep)
      return emit_reports(
          frob::prime_sweep(sa.m, sa.n, parse_int_list(sa.primes), opt), out);
    if (*divisor) {
      auto E = frob::parse_divisor(da.e_text);
      json payload;
      std::string text;
      if (da.mode == "dims") {
        auto dims = frob::section_dims(E, da.up_to);
        payload = json{{"dims", dims}};
        for (auto v : dims) text += std::to_string(v) + " ";
        text += "\n";
      } else if (da.mode == "floor") {
        auto f = frob::render_divisor(frob::floor_divisor(E));
        payload = json{{"floor", f}};
        text = f + "\n";
      } else if (da.mode == "identity") {
        bool ok = frob::floor_identity_check(E, -da.up_to, da.up_to);
        payload = json{{"holds", ok},
                       {"fractional_part",
                        frob::render_divisor(frob::fractional_part_paper(E))}};
        text = std::string(ok ? "holds" : "fails") + "\n";
        if (!ok) {
          out.emit(payload, text);
          return kExitRefuted;
        }
      } else {
        require(da.p >= 2, "divisor heuristic needs --p");
        auto h = frob::fpurity_degree_heuristic(E, da.p);
        payload = json{{"degree", h.degree.get_str()}, {"h1", h.h1_value}};
        text = "deg = " + h.degree.get_str() +
               ", h1 = " + std::to_string(h.h1_value) + "\n";
      }
      out.emit(payload, text);
      return kExitOk;
    }
    if (*gb) {
      if (ga.p == 0) return run_gb(gb_mode, ga, frob::QQ{}, opt, out);
      return run_gb(gb_mode, ga, frob::GF(ga.p), opt, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const frob::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const frob::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ordforge/ackermann.hpp"
#include "ordforge/ahat.hpp"
#include "ordforge/binary.hpp"
#include "ordforge/checks.hpp"
#include "ordforge/embeddings.hpp"
#include "ordforge/errors.hpp"
#include "ordforge/goodstein.hpp"
#include "ordforge/veblen.hpp"

using namespace ordforge;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultBinaryDigits = 300'000;
constexpr std::size_t kDefaultAckermannDigits = 1'200;

std::size_t digits_to_bits(std::size_t digits) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(digits) * 3.3220)) + 8;
}

// --max-digits beats ORDFORGE_MAX_DIGITS beats the per-dilator default.
std::size_t resolve_digits(std::optional<std::size_t> flag, std::size_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORDFORGE_MAX_DIGITS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (...) {
      throw OutOfDomain("ORDFORGE_MAX_DIGITS is not a number");
    }
  }
  return fallback;
}

BaseSpec parse_base_literal(const std::string& text) {
  auto fail = [&]() -> BaseSpec {
    throw SyntaxError("base literal must be const:<v>, affine:<init>,<slope> or "
                      "table:<csv>:<tail>",
                      0);
  };
  auto num = [](const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); };
  if (text.rfind("const:", 0) == 0) return BaseSpec::constant(num(text.substr(6)));
  if (text.rfind("affine:", 0) == 0) {
    std::string rest = text.substr(7);
    auto comma = rest.find(',');
    if (comma == std::string::npos) return fail();
    return BaseSpec::affine(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
  }
  if (text.rfind("table:", 0) == 0) {
    std::string rest = text.substr(6);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) return fail();
    std::vector<std::size_t> prefix;
    std::stringstream ss(rest.substr(0, colon));
    std::string item;
    while (std::getline(ss, item, ',')) prefix.push_back(num(item));
    return BaseSpec::table(std::move(prefix), num(rest.substr(colon + 1)));
  }
  return fail();
}

GoodsteinSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OutOfDomain("cannot open system file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json(buf.str());
}

void print_trace(const RunTrace& trace, bool as_json) {
  if (as_json) {
    std::cout << trace_to_json(trace) << "\n";
    return;
  }
  for (const auto& st : trace.steps)
    std::cout << "i=" << st.i << " base=" << st.base << " value=" << st.value.str() << "\n";
  switch (trace.status) {
    case RunTrace::Status::Terminated: std::cout << "terminated at " << trace.at << "\n"; break;
    case RunTrace::Status::Budget: std::cout << "budget exhausted\n"; break;
    case RunTrace::Status::Overflow: std::cout << "overflow at " << trace.at << "\n"; break;
  }
}

json limit_point(const Elem& e) { return {{"stage", e.stage()}, {"index", e.index()}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordforge: Goodstein sequences, ordinal notations and the dilators between them"};
  app.require_subcommand(1);

  // classic
  auto* classic = app.add_subcommand("classic", "classical hereditary-base Goodstein run");
  std::string classic_start, classic_base = "affine:2,1";
  std::size_t classic_steps = 10;
  std::optional<std::size_t> classic_digits;
  bool classic_json = false;
  classic->add_option("--start", classic_start, "start value")->required();
  classic->add_option("--base", classic_base, "base literal (const:v, affine:i,s, table:csv:tail)");
  classic->add_option("--steps", classic_steps, "maximum number of steps");
  classic->add_option("--max-digits", classic_digits, "decimal-digit cap for values");
  classic->add_flag("--json", classic_json, "machine output");

  // run
  auto* runc = app.add_subcommand("run", "generalized Goodstein run for a dilator");
  std::string run_dilator = "binary", run_system, run_start;
  std::size_t run_steps = 32;
  std::optional<std::size_t> run_digits;
  bool run_json = false;
  runc->add_option("--dilator", run_dilator, "binary | ackermann")
      ->check(CLI::IsMember({"binary", "ackermann"}));
  runc->add_option("--system", run_system, "system JSON file")->required();
  runc->add_option("--start", run_start, "start value")->required();
  runc->add_option("--steps", run_steps, "maximum number of steps");
  runc->add_option("--max-digits", run_digits, "decimal-digit cap for values");
  runc->add_flag("--json", run_json, "machine output");

  // nf
  auto* nf = app.add_subcommand("nf", "Ackermann normal form of a number");
  std::string nf_value;
  nf->add_option("value", nf_value, "number to decompose")->required();

  // fgh
  auto* fgh = app.add_subcommand("fgh", "evaluate F_b(n) in the fast-growing hierarchy");
  std::size_t fgh_b = 0;
  std::string fgh_n;
  std::optional<std::size_t> fgh_digits;
  fgh->add_option("b", fgh_b, "hierarchy level")->required();
  fgh->add_option("n", fgh_n, "argument")->required();
  fgh->add_option("--max-digits", fgh_digits, "decimal-digit cap");

  // compare
  auto* cmp = app.add_subcommand("compare", "compare two terms");
  std::string cmp_system = "veblen", cmp_order = "nat", cmp_t1, cmp_t2;
  bool cmp_json = false;
  cmp->add_option("--system", cmp_system, "veblen | ahat")
      ->check(CLI::IsMember({"veblen", "ahat"}));
  cmp->add_option("--order", cmp_order, "order literal for X");
  cmp->add_option("t1", cmp_t1, "first term")->required();
  cmp->add_option("t2", cmp_t2, "second term")->required();
  cmp->add_flag("--json", cmp_json, "machine output");

  // embed
  auto* emb = app.add_subcommand("embed", "apply an order embedding to a term");
  std::string emb_dir = "up", emb_order = "nat", emb_term;
  bool emb_json = false;
  emb->add_option("--dir", emb_dir, "up: Ahat(X) -> phi_{1+X}0; down: the converse direction")
      ->check(CLI::IsMember({"up", "down"}));
  emb->add_option("--order", emb_order, "order literal for X");
  emb->add_option("term", emb_term, "term to embed")->required();
  emb->add_flag("--json", emb_json, "machine output");

  // limit
  auto* lim = app.add_subcommand("limit", "direct limit of a Goodstein system");
  std::string lim_system;
  std::size_t lim_depth = 8;
  std::optional<std::size_t> lim_chain;
  bool lim_json = false;
  lim->add_option("--system", lim_system, "system JSON file")->required();
  lim->add_option("--depth", lim_depth, "number of stages to materialize");
  lim->add_option("--chain", lim_chain, "search for a descending chain of this length");
  lim->add_flag("--json", lim_json, "machine output");

  // check
  auto* chk = app.add_subcommand("check", "property-check suites");
  std::string chk_suite;
  std::uint64_t chk_seed = 0;
  std::size_t chk_iters = 10'000;
  bool chk_json = false;
  chk->add_option("--suite", chk_suite, "suite name (or 'all')")->required();
  chk->add_option("--seed", chk_seed, "rng seed");
  chk->add_option("--iters", chk_iters, "iteration count for randomized parts");
  chk->add_flag("--json", chk_json, "machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classic) {
      BigNat m(classic_start);
      BaseSpec base = parse_base_literal(classic_base);
      std::size_t bits = digits_to_bits(resolve_digits(classic_digits, kDefaultBinaryDigits));
      print_trace(classic_run(base, m, classic_steps, bits), classic_json);
      return 0;
    }

    if (*runc) {
      GoodsteinSystem sys = load_system(run_system);
      auto v = validate_system(sys, run_steps);
      if (!v.ok) {
        std::cerr << "rejected: " << v.reason << "\n";
        return 1;
      }
      BigNat m(run_start);
      RunTrace trace;
      if (run_dilator == "binary") {
        BinaryDilator bin;
        EvalBudget budget{digits_to_bits(resolve_digits(run_digits, kDefaultBinaryDigits)),
                          1'000'000};
        trace = run(bin, sys, m, run_steps, budget);
      } else {
        AckermannDilator ack;
        EvalBudget budget{digits_to_bits(resolve_digits(run_digits, kDefaultAckermannDigits)),
                          1'000'000};
        trace = run(ack, sys, m, run_steps, budget);
      }
      print_trace(trace, run_json);
      return 0;
    }

    if (*nf) {
      BigNat m(nf_value);
      std::cout << format_ahat(ack_nf(m)) << "\n";
      return 0;
    }

    if (*fgh) {
      BigNat n(fgh_n);
      EvalBudget budget;
      if (fgh_digits || std::getenv("ORDFORGE_MAX_DIGITS"))
        budget.max_bits = digits_to_bits(resolve_digits(fgh_digits, kDefaultAckermannDigits));
      auto v = fgh_eval(fgh_b, n, budget);
      std::cout << (v ? v->str() : "overflow") << "\n";
      return 0;
    }

    if (*cmp) {
      OrderSpec X = parse_order(cmp_order);
      Ordering result;
      if (cmp_system == "veblen") {
        VebTerm a = parse_veblen(cmp_t1), b = parse_veblen(cmp_t2);
        if (!veb_valid(X, a)) throw InvalidTerm("first term is not valid over " + X.str());
        if (!veb_valid(X, b)) throw InvalidTerm("second term is not valid over " + X.str());
        result = veb_compare(X, a, b);
      } else {
        AhatTerm a = parse_ahat(cmp_t1), b = parse_ahat(cmp_t2);
        if (!ahat_valid(X, a)) throw InvalidTerm("first term is not valid over " + X.str());
        if (!ahat_valid(X, b)) throw InvalidTerm("second term is not valid over " + X.str());
        result = ahat_compare(X, a, b);
      }
      if (cmp_json)
        std::cout << json{{"result", to_string(result)}}.dump() << "\n";
      else
        std::cout << to_string(result) << "\n";
      return 0;
    }

    if (*emb) {
      OrderSpec X = parse_order(emb_order);
      std::string out;
      if (emb_dir == "up") {
        AhatTerm t = parse_ahat(emb_term);
        if (!ahat_valid(X, t)) throw InvalidTerm("term is not valid over " + X.str());
        out = format_veblen(o_up(X, t));
      } else {
        VebTerm t = parse_veblen(emb_term);
        if (!veb_valid(X, t)) throw InvalidTerm("term is not valid over " + X.str());
        out = format_ahat(o_down(X, t));
      }
      if (emb_json)
        std::cout << json{{"term", out}}.dump() << "\n";
      else
        std::cout << out << "\n";
      return 0;
    }

    if (*lim) {
      GoodsteinSystem sys = load_system(lim_system);
      auto limit = DirectLimitOrder::build(sys, lim_depth);
      auto pts = limit->carrier();
      std::optional<std::vector<Elem>> chain;
      if (lim_chain) chain = descend_search(sys, lim_depth, *lim_chain);
      if (lim_json) {
        json j{{"depth", lim_depth}, {"carrier_size", pts.size()}};
        json carrier = json::array();
        for (const auto& p : pts) carrier.push_back(limit_point(p));
        j["carrier"] = carrier;
        if (lim_chain) {
          if (chain) {
            json arr = json::array();
            for (const auto& p : *chain) arr.push_back(limit_point(p));
            j["chain"] = arr;
          } else {
            j["chain"] = nullptr;
          }
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "carrier: " << pts.size() << " points over " << lim_depth + 1 << " stages\n";
        if (lim_chain) {
          if (chain) {
            std::cout << "descending chain:";
            for (const auto& p : *chain) std::cout << " " << p.str();
            std::cout << "\n";
          } else {
            std::cout << "no descending chain of length " << *lim_chain << "\n";
          }
        }
      }
      return 0;
    }

    if (*chk) {
      std::vector<std::string> names =
          chk_suite == "all" ? check_suite_names() : std::vector<std::string>{chk_suite};
      bool all_pass = true;
      json out = json::array();
      for (const auto& name : names) {
        CheckReport rep = run_check_suite(name, chk_seed, chk_iters);
        all_pass = all_pass && rep.pass();
        if (chk_json) {
          out.push_back({{"suite", rep.suite},
                         {"cases", rep.cases},
                         {"failures", rep.failures},
                         {"messages", rep.messages}});
        } else {
          std::cout << (rep.pass() ? "PASS" : "FAIL") << " " << rep.suite << " (" << rep.cases
                    << " cases";
          if (rep.failures) std::cout << ", " << rep.failures << " failures";
          std::cout << ")\n";
          for (const auto& m : rep.messages) std::cout << "  - " << m << "\n";
        }
      }
      if (chk_json) std::cout << out.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidTerm& e) {
    std::cerr << "invalid term: " << e.what() << "\n";
    return 1;
  } catch (const InvalidElement& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

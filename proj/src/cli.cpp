#include "ringstd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ringstd/errors.hpp"
#include "ringstd/padic.hpp"
#include "ringstd/parse.hpp"
#include "ringstd/stdbasis.hpp"

#ifndef RINGSTD_VERSION
#define RINGSTD_VERSION "0.0.0"
#endif

namespace ringstd {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kLedgerRevision = 1;
constexpr std::size_t kDefaultBudget = 10000;

struct Options {
  std::string command;
  std::string file;
  std::string engine;
  std::optional<std::size_t> budget;
  bool with_syzygies = false;
  bool json = false;
  std::optional<std::string> prime;
  std::optional<std::string> weights;
  std::string tiebreak = "lex";
};

std::size_t resolve_budget(const Options& o) {
  if (o.budget) {
    if (*o.budget == 0) throw UsageError("--budget must be positive");
    return *o.budget;
  }
  if (const char* env = std::getenv("RINGSTD_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("RINGSTD_BUDGET is not a positive integer: ") + env);
    return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::string read_input(const std::string& file) {
  if (file == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + file + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string vars_line(const Problem& p) {
  std::string s;
  for (std::size_t i = 0; i < p.t_vars.size(); ++i) s += (i ? ", " : "") + p.t_vars[i];
  if (!p.t_vars.empty()) s += p.x_vars.empty() ? " |" : " | ";
  for (std::size_t i = 0; i < p.x_vars.size(); ++i) s += (i ? ", " : "") + p.x_vars[i];
  return s;
}

Json poly_list(std::span<const Poly> G) {
  Json a = Json::array();
  for (const auto& g : G) a.push_back(format_poly(g));
  return a;
}

Json scalar_list(std::span<const Poly> G) {
  Json a = Json::array();
  for (const auto& g : G) a.push_back(format_scalar(g));
  return a;
}

Json lead_list(std::span<const Poly> G) {
  Json a = Json::array();
  for (const auto& g : G) a.push_back(format_lead(g));
  return a;
}

Json basis_json(const BasisResult& b) {
  Json a = Json::array();
  for (std::size_t i = 0; i < b.basis.size(); ++i) {
    a.push_back(Json{{"poly", format_poly(b.basis[i])}, {"origin", b.trace[i].to_string()}});
  }
  return a;
}

Json criterion_json(std::span<const Poly> G, const DivisionBudget& budget) {
  const CriterionReport rep = is_standard_basis(G, budget);
  return rep.ok ? Json("ok") : Json("fails: " + rep.detail);
}

Json certificate_json(const Poly& f, std::span<const Poly> G, const DivisionResult& res,
                      std::optional<std::size_t> deg_begin) {
  const ConditionSet verified = check_conditions(f, G, res, deg_begin);
  if (!verified.contains(res.flags)) {
    throw CertificateError("certificate re-check failed: contracted {" + res.flags.to_string() + "}, verified {" +
                           verified.to_string() + "}");
  }
  return Json{{"u", format_scalar(res.u)},
              {"q", scalar_list(res.q)},
              {"r", format_poly(res.r)},
              {"contracted", res.flags.to_string()},
              {"verified", verified.to_string()}};
}

BasisResult run_std(const Problem& p, const std::string& engine, const StdOptions& so) {
  if (engine == "general") return std_general(p.gens, so);
  if (engine == "factorial") return std_factorial(p.gens, so);
  return standard_basis(p.gens, so);
}

std::string std_engine_name(const Problem& p, const std::string& engine) {
  if (engine == "general" || engine == "factorial") return engine;
  return p.ring.is_factorial() ? "factorial" : "general";
}

const Poly& require_query(const Problem& p, const std::string& cmd) {
  if (!p.query) throw UsageError(cmd + " needs a 'query:' statement");
  return *p.query;
}

OrderingPtr make_tiebreak(const std::string& name, std::size_t nvars) {
  if (name == "lex") return make_lex(nvars, 1);
  if (name == "deglex") return make_deglex(nvars, 1);
  if (name == "degrevlex") return make_degrevlex(nvars, 1);
  throw UsageError("unknown tiebreak '" + name + "' (lex, deglex, degrevlex)");
}

Json run_command(const Options& o, const Problem& p, const DivisionBudget& budget, Json& doc) {
  StdOptions so;
  so.budget = budget;
  so.with_syzygies = o.with_syzygies;
  Json res = Json::object();
  if (o.command == "std") {
    doc["engine"] = std_engine_name(p, o.engine);
    BasisResult b = run_std(p, o.engine, so);
    res["basis"] = basis_json(b);
    res["leading terms"] = lead_list(b.basis);
    res["criterion"] = criterion_json(b.basis, budget);
    if (b.syzygy_basis) {
      Json syz = Json::array();
      for (const auto& xi : *b.syzygy_basis) {
        if (!apply_syzygy(xi, b.basis).is_zero()) throw CertificateError("syzygy does not map to zero");
        syz.push_back(scalar_list(xi));
      }
      res["syzygies"] = syz;
    }
  } else if (o.command == "divide") {
    const Poly& f = require_query(p, "divide");
    const std::string engine = o.engine.empty() ? "dwr" : o.engine;
    doc["engine"] = engine;
    if (engine == "hddwr") {
      res["certificate"] = certificate_json(f, p.gens, hddwr(f, p.gens, budget), std::nullopt);
    } else if (engine == "dwr") {
      res["certificate"] = certificate_json(f, p.gens, dwr(f, p.gens, budget), 0);
    } else if (engine == "sid2") {
      res["certificate"] = certificate_json(f, p.gens, dwr_sid2(f, p.gens, budget), 0);
    } else {
      throw UsageError("unknown division engine '" + engine + "' (hddwr, dwr, sid2)");
    }
  } else if (o.command == "nf") {
    const Poly& f = require_query(p, "nf");
    doc["engine"] = "dwr";
    DivisionResult d = dwr(f, p.gens, budget);
    res["normal form"] = format_poly(d.r);
    res["certificate"] = certificate_json(f, p.gens, d, 0);
  } else if (o.command == "member") {
    const Poly& f = require_query(p, "member");
    doc["engine"] = std_engine_name(p, o.engine);
    BasisResult b = run_std(p, o.engine, so);
    DivisionResult d = dwr(f, b.basis, budget);
    res["basis"] = poly_list(b.basis);
    res["normal form"] = format_poly(d.r);
    res["member"] = d.r.is_zero() ? "yes" : "no";
    res["certificate"] = certificate_json(f, b.basis, d, 0);
  } else if (o.command == "reduce") {
    doc["engine"] = std_engine_name(p, o.engine);
    BasisResult b = run_std(p, o.engine, so);
    std::vector<Poly> red = reduce_basis(minimize_basis(b.basis), budget);
    res["reduced basis"] = poly_list(red);
    res["leading terms"] = lead_list(red);
    res["reduced"] = is_reduced(red) ? "yes" : "no";
    res["criterion"] = criterion_json(red, budget);
  } else if (o.command == "padic-std") {
    doc["engine"] = "padic";
    std::optional<mpz_class> prime = p.prime;
    if (o.prime) {
      try {
        prime = mpz_class(*o.prime);
      } catch (const std::invalid_argument&) {
        throw UsageError("--prime is not an integer: " + *o.prime);
      }
    }
    if (!prime) throw UsageError("padic-std needs --prime or a 'prime' statement");
    std::vector<Poly> G;
    std::optional<PadicContext> ctx;
    if (!p.t_vars.empty()) {
      ctx = PadicContext::make(*prime, p.space);
      const Poly pt = ctx->p_minus_t();
      G.push_back(pt);
      for (const auto& g : p.gens) {
        if (!(g == pt)) G.push_back(g);
      }
    } else {
      std::vector<Coeff> w;
      if (o.weights) {
        w = parse_rationals(*o.weights);
      } else if (p.weights) {
        w = *p.weights;
      } else {
        throw UsageError("padic-std needs --weights or a 'weights' statement");
      }
      if (w.size() != p.x_vars.size()) throw UsageError("weights need one entry per variable");
      Pullback pb = tropical_pullback(p.gens, *prime, w, make_tiebreak(o.tiebreak, p.x_vars.size() + 1));
      ctx = pb.ctx;
      G = std::move(pb.generators);
      doc["order"] = ctx->space->ordering().describe();
      doc["vars"] = ctx->space->names().front() + " | " + vars_line(p);
    }
    doc["prime"] = prime->get_str();
    BasisResult b = std_padic(G, *ctx, so);
    res["basis"] = basis_json(b);
    res["leading terms"] = lead_list(b.basis);
    res["criterion"] = criterion_json(b.basis, budget);
    res["monomial-free"] =
        has_x_monomial_lead(b.basis, *ctx) ? "no (heuristic: t-free leading term)" : "yes (heuristic)";
  } else {
    throw UsageError("unknown command '" + o.command + "'");
  }
  return res;
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render(v, out, indent + "  ");
    } else if (v.is_array()) {
      out << indent << it.key() << ":\n";
      std::size_t i = 0;
      for (const auto& e : v) {
        ++i;
        if (e.is_object()) {
          out << indent << "  [" << i << "]";
          std::string sep = " ";
          for (auto f = e.begin(); f != e.end(); ++f) {
            out << sep << (f.key() == "poly" ? "" : "(") << f.value().get<std::string>()
                << (f.key() == "poly" ? "" : ")");
            sep = "  ";
          }
          out << "\n";
        } else if (e.is_array()) {
          out << indent << "  [" << i << "] (";
          for (std::size_t k = 0; k < e.size(); ++k) out << (k ? ", " : "") << e[k].get<std::string>();
          out << ")\n";
        } else {
          out << indent << "  [" << i << "] " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard bases over ZZ, QQ and ZZ/m with t-local orderings", "ringstd"};
  app.set_version_flag("--version", RINGSTD_VERSION);
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool std_engine) {
    sub->add_option("file", o.file, "Problem file, - for stdin")->required();
    if (std_engine) {
      sub->add_option("--engine", o.engine, "general or factorial")->check(CLI::IsMember({"general", "factorial"}));
      sub->add_flag("--with-syzygies", o.with_syzygies, "Also emit a syzygy basis");
    }
    sub->add_option("--budget", o.budget, "Iteration cap per division");
    sub->add_flag("--json", o.json, "JSON output");
  };
  common(app.add_subcommand("std", "Standard basis"), true);
  common(app.add_subcommand("member", "Membership of the query"), true);
  common(app.add_subcommand("reduce", "Reduced standard basis"), true);
  auto* divide = app.add_subcommand("divide", "Division of the query with certificate");
  common(divide, false);
  divide->add_option("--engine", o.engine, "hddwr, dwr or sid2")->check(CLI::IsMember({"hddwr", "dwr", "sid2"}));
  common(app.add_subcommand("nf", "Normal form of the query"), false);
  auto* padic = app.add_subcommand("padic-std", "Standard basis of the p - t pullback");
  common(padic, false);
  padic->add_option("--prime", o.prime, "The prime p");
  padic->add_option("--weights", o.weights, "Weights on x, comma separated");
  padic->add_option("--tiebreak", o.tiebreak, "lex, deglex or degrevlex")
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(RINGSTD_VERSION) + "\n" : app.help());
      return kExitOk;
    }
    err << "ringstd: " << e.what() << "\n";
    return kExitUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    const std::size_t budget = resolve_budget(o);
    DivisionBudget db;
    db.max_iterations = budget;
    db.max_recursions = budget;
    const Problem p = parse_problem(read_input(o.file));
    Json doc;
    doc["ringstd"] = RINGSTD_VERSION;
    doc["ledger"] = kLedgerRevision;
    doc["budget"] = budget;
    doc["command"] = o.command;
    doc["ring"] = p.ring.name();
    doc["vars"] = vars_line(p);
    doc["order"] = p.space->ordering().describe();
    if (p.rank > 1) doc["rank"] = p.rank;
    Json res = run_command(o, p, db, doc);
    doc["result"] = std::move(res);
    if (o.json) {
      out << doc.dump(2) << "\n";
    } else {
      render(doc, out, "");
    }
    return kExitOk;
  } catch (const BudgetExhausted& e) {
    err << "ringstd: budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CertificateError& e) {
    err << "ringstd: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const ParseError& e) {
    err << "ringstd: " << o.file << ":" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ringstd: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ringstd

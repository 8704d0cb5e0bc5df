#include "frobalg/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "cli_internal.hpp"
#include "frobalg/assoc.hpp"
#include "frobalg/budget.hpp"
#include "frobalg/depth.hpp"
#include "frobalg/parser.hpp"
#include "frobalg/perfclosure.hpp"

namespace frobalg::cli {

Json to_json(const Ideal& i) {
  Json out = Json::array();
  for (const auto& g : i.generators()) out.push_back(g.str());
  return out;
}

Json to_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& g : polys) out.push_back(g.str());
  return out;
}

Json to_json(const PrimeIdealRecord& r) {
  return Json{{"ideal", to_json(r.ideal)},
              {"kind", to_string(r.kind)},
              {"side", to_string(r.side)},
              {"witness", r.witness ? Json(r.witness->str()) : Json(nullptr)},
              {"first_seen", r.first_seen}};
}

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

namespace {

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
}

bool identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Replaces the standalone identifier q by its value.
std::string substitute_q(const std::string& text, std::uint64_t q) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    bool standalone = text[k] == 'q' && (k == 0 || !identifier_char(text[k - 1])) &&
                      (k + 1 == text.size() || !identifier_char(text[k + 1]));
    out += standalone ? std::to_string(q) : std::string(1, text[k]);
  }
  return out;
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name.rfind("elim:", 0) == 0) return MonomialOrder::elimination(std::stoul(name.substr(5)));
  throw ParseError("unknown order '" + name + "'", 0);
}

std::vector<Coeff> parse_point(const std::string& text, const Ring& ring) {
  std::vector<Coeff> out;
  for (const auto& g : parse_generators(text, ring)) {
    if (!g.is_constant()) throw ParseError("point coordinates must be constants", 0);
    out.push_back(g.is_zero() ? 0 : g.lead_coeff());
  }
  return out;
}

struct Context {
  const CommandRequest& req;
  Ring ring;
  Json result = Json::object();
  std::vector<std::string> unresolved;

  std::uint64_t last() const { return req.last.value_or(req.e_max); }

  Ideal ideal(const std::string& text, const char* flag) const {
    require(text, flag);
    return Ideal(ring, parse_generators(text, ring));
  }

  ModulePresentation module() const {
    if (!req.matrix.empty())
      return ModulePresentation(ring, Matrix::from_rows(ring.free(), parse_matrix(req.matrix, ring)));
    return ModulePresentation::cyclic(ideal(req.ideal, "--ideal or --matrix"));
  }
};

}  // namespace

FSequence parse_fseq(const std::string& text, const Ring& ring, std::size_t last) {
  require(text, "--fseq");
  auto prefixed = [&](const char* tag) { return text.rfind(tag, 0) == 0; };
  if (prefixed("powers:")) return FSequence::frobenius_powers(Ideal(ring, parse_generators(text.substr(7), ring)), last);
  if (prefixed("constant:")) return FSequence::constant(Ideal(ring, parse_generators(text.substr(9), ring)), last);
  if (prefixed("list:")) {
    std::vector<Ideal> prefix;
    std::stringstream in(text.substr(5));
    for (std::string item; std::getline(in, item, ';');) prefix.emplace_back(ring, parse_generators(item, ring));
    return FSequence::custom(ring, std::move(prefix));
  }
  // Template in q = p^e.
  if (ring.free()->index_of("q") >= 0) throw ParseError("template variable q clashes with a ring variable", 0);
  std::vector<Ideal> prefix;
  for (std::size_t e = 0; e <= last; ++e)
    prefix.emplace_back(ring, parse_generators(substitute_q(text, frobenius_q(ring.characteristic(), e)), ring));
  return FSequence::custom(ring, std::move(prefix));
}

Json inputs_of(const CommandRequest& r) {
  Json in = Json::object();
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) in[key] = v;
  };
  put("suite", r.suite);
  put("ring", r.ring);
  put("ideal", r.ideal);
  put("ideal2", r.ideal2);
  put("matrix", r.matrix);
  put("poly", r.poly);
  put("fseq", r.fseq);
  put("root_ideal", r.root_ideal);
  put("sequence", r.sequence);
  put("point", r.point);
  in["order"] = r.order;
  in["e"] = r.e;
  in["e_max"] = r.e_max;
  in["window"] = r.window;
  in["lift_cap"] = r.lift_cap;
  in["budget"] = r.budget;
  in["seed"] = r.seed;
  in["last"] = r.last.value_or(r.e_max);
  in["trials"] = r.trials;
  in["e_lo"] = r.e_lo;
  in["e_hi"] = r.e_hi.value_or(r.e_max);
  in["levels"] = r.levels;
  if (r.command == "verify") {
    in["count"] = r.count;
    in["jobs"] = r.jobs;
  }
  return in;
}

namespace {

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"gb",
       [](Context& c) {
         Ideal i = c.ideal(c.req.ideal, "--ideal");
         c.result["order"] = c.req.order;
         c.result["basis"] = to_json(groebner_basis(i, parse_order(c.req.order)));
       }},
      {"colon",
       [](Context& c) {
         c.result["colon"] = to_json(colon_ideal(c.ideal(c.req.ideal, "--ideal"), c.ideal(c.req.ideal2, "--by")));
       }},
      {"frobpow",
       [](Context& c) { c.result["ideal"] = to_json(frobenius_power(c.ideal(c.req.ideal, "--ideal"), c.req.e)); }},
      {"frobpre",
       [](Context& c) { c.result["ideal"] = to_json(frobenius_preimage(c.ideal(c.req.ideal, "--ideal"), c.req.e)); }},
      {"closure",
       [](Context& c) {
         auto fc = frobenius_closure(c.ideal(c.req.ideal, "--ideal"), c.req.e_max);
         c.result["closure"] = to_json(fc.closure);
         c.result["stabilized_at"] = opt(fc.stabilized_at);
         Json chain = Json::array();
         for (const auto& level : fc.chain) chain.push_back(to_json(level));
         c.result["chain"] = chain;
         if (!fc.stabilized_at) c.unresolved.push_back("closure chain did not stabilize by e_max");
       }},
      {"closed",
       [](Context& c) {
         Verdict v = is_frobenius_closed(c.ideal(c.req.ideal, "--ideal"), c.req.e_max);
         c.result["verdict"] = to_string(v);
         if (v == Verdict::kUnresolved) c.unresolved.push_back("no Frobenius level was examined (e_max = 0)");
       }},
      {"fedder",
       [](Context& c) {
         auto rep = c.req.ideal.empty() ? fedder_f_pure(c.ring) : fedder_f_pure(c.ring, c.ideal(c.req.ideal, "--ideal"));
         c.result["verdict"] = rep.is_f_pure ? "F-pure" : "not F-pure";
         c.result["f_pure"] = rep.is_f_pure;
         c.result["witness"] = rep.witness ? Json(rep.witness->str()) : Json(nullptr);
         c.result["q"] = rep.q;
         c.result["colon"] = to_json(rep.colon);
       }},
      {"fseq-verify",
       [](Context& c) {
         auto seq = parse_fseq(c.req.fseq, c.ring, c.last());
         auto check = fseq_verify(seq);
         c.result["rule"] = seq.rule_name();
         Json prefix = Json::array();
         for (const auto& j : seq.prefix()) prefix.push_back(to_json(j));
         c.result["prefix"] = prefix;
         c.result["ok"] = check.ok;
         c.result["first_failure"] = opt(check.first_failure);
       }},
      {"fseq-radical",
       [](Context& c) {
         auto rs = fseq_radical_stabilize(parse_fseq(c.req.fseq, c.ring, c.last()), c.req.e_max);
         c.result["stable"] = rs.stable ? to_json(*rs.stable) : Json(nullptr);
         c.result["steps"] = rs.steps;
         c.result["radical_agrees"] = rs.radical_agrees;
         if (!rs.stable) c.unresolved.push_back("preimage chain did not stabilize by e_max");
       }},
      {"ass",
       [](Context& c) {
         Json primes = Json::array();
         for (const auto& r : ass_monomial(c.ideal(c.req.ideal, "--ideal"))) primes.push_back(to_json(r));
         c.result["primes"] = primes;
       }},
      {"ass-union",
       [](Context& c) {
         Json records = Json::array();
         for (const auto& r : union_ass_fseq(parse_fseq(c.req.fseq, c.ring, c.last()))) records.push_back(to_json(r));
         c.result["records"] = records;
       }},
      {"depth",
       [](Context& c) {
         auto rep = depth_at_origin(c.module());
         c.result["depth"] = opt(rep.depth);
         c.result["pd"] = opt(rep.pd);
         c.result["oracle"] = to_string(rep.oracle);
         if (rep.oracle == OracleStatus::kDisagrees) throw std::logic_error("depth oracles disagree");
       }},
      {"sdepth",
       [](Context& c) {
         auto rep = sdepth(c.module(), c.req.e_max, c.req.window);
         Json per_e = Json::array(), oracle = Json::array();
         for (const auto& d : rep.per_e_depth) per_e.push_back(opt(d));
         for (auto o : rep.oracle) oracle.push_back(to_string(o));
         c.result["per_e_depth"] = per_e;
         c.result["oracle"] = oracle;
         c.result["stabilized_value"] = opt(rep.stabilized_value);
         c.result["window"] = rep.window;
         c.result["ring_f_pure"] = rep.ring_f_pure;
         c.result["non_increasing"] = rep.non_increasing;
         c.result["truncated_at"] = opt(rep.truncated_at);
         if (rep.truncated_at) c.unresolved.push_back("budget ran out at level " + std::to_string(*rep.truncated_at));
         if (!rep.stabilized_value) c.unresolved.push_back("per-e depth not constant over the window");
         if (!rep.ring_f_pure) c.unresolved.push_back("ring not F-pure at the origin; sdepth is reported without that hypothesis");
       }},
      {"reg-check",
       [](Context& c) {
         auto seq = c.req.sequence.empty() ? std::vector<Polynomial>{} : parse_generators(c.req.sequence, c.ring);
         auto per_e = regular_sequence_check(seq, c.module(), c.req.e_lo, c.req.e_hi.value_or(c.req.e_max));
         c.result["sequence"] = to_json(seq);
         c.result["per_e"] = per_e;
       }},
      {"cdepth-lb",
       [](Context& c) {
         auto rs = cdepth_lower_bound(c.module(), c.req.e_max, c.req.trials, c.req.seed);
         c.result["length"] = rs.length;
         c.result["witness"] = to_json(rs.witness);
         c.result["annotation"] = rs.annotation;
         c.result["seed"] = rs.seed;
         if (rs.annotation == "budget") c.unresolved.push_back("candidate pools were sampled, the bound may be low");
       }},
      {"kdepth-profile",
       [](Context& c) {
         auto prof = kdepth_truncation_profile(c.module(), c.req.e_max, c.req.window);
         Json levels = Json::array();
         for (const auto& l : prof.levels)
           levels.push_back(Json{{"nonzero_homology", l.nonzero_homology}, {"kgrade", opt(l.kgrade)}});
         c.result["levels"] = levels;
         c.result["eventually_constant"] = prof.eventually_constant;
         c.result["stable_kgrade"] = opt(prof.stable_kgrade);
         if (!prof.eventually_constant) c.unresolved.push_back("homology pattern not constant over the window");
       }},
      {"gamma",
       [](Context& c) {
         require(c.req.root_ideal, "--root-ideal");
         auto j = parse_root_ideal(c.req.root_ideal, c.ring);
         auto g = gamma_fseq(j, c.last(), c.req.lift_cap);
         c.result["root_ideal"] = j.str();
         Json prefix = Json::array(), reached = Json::array();
         for (const auto& i : g.sequence.prefix()) prefix.push_back(to_json(i));
         for (const auto& l : g.level_reached) reached.push_back(opt(l));
         c.result["prefix"] = prefix;
         c.result["level_reached"] = reached;
         c.result["stabilized"] = g.stabilized;
         c.result["fseq_verify"] = g.verify.ok;
         if (!g.stabilized) c.unresolved.push_back("a contraction chain did not stabilize within lift_cap");
       }},
      {"member-inf",
       [](Context& c) {
         require(c.req.poly, "--poly");
         Verdict v;
         if (!c.req.root_ideal.empty()) {
           v = root_membership(parse_root(c.req.poly, c.ring), parse_root_ideal(c.req.root_ideal, c.ring), c.req.lift_cap);
         } else {
           v = extended_ideal_membership(parse_poly(c.req.poly, c.ring), c.ideal(c.req.ideal, "--ideal"), c.req.e_max);
         }
         c.result["verdict"] = to_string(v);
         if (v == Verdict::kUnresolved) c.unresolved.push_back("membership not decided within the examined levels");
       }},
      {"prime-check",
       [](Context& c) {
         auto rep = prime_extension_check(c.ideal(c.req.ideal, "--ideal"), c.req.levels);
         Json levels = Json::array();
         for (const auto& l : rep.levels)
           levels.push_back(Json{{"level", l.level},
                                 {"radical_ok", l.radical_ok},
                                 {"contraction_ok", l.contraction_ok},
                                 {"order_ok", l.order_ok},
                                 {"points_ok", l.points_ok},
                                 {"pass", l.pass()}});
         c.result["levels"] = levels;
         c.result["sampled_primes"] = rep.sampled_primes;
         c.result["sampled_points"] = rep.sampled_points;
         c.result["pass"] = rep.pass();
       }},
      {"max-ass",
       [](Context& c) {
         Ideal j = c.ideal(c.req.ideal, "--ideal");
         auto point = c.req.point.empty() ? std::vector<Coeff>(c.ring.nvars(), 0) : parse_point(c.req.point, c.ring);
         c.result["maximal_in_ass"] = maximal_in_ass(j, point);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    out.push_back("verify");
    return out;
  }();
  return names;
}

CommandResult run_command(const CommandRequest& request) {
  if (request.command == "verify") return verify_suite(request);
  CommandResult out;
  out.report = Json{{"command", request.command},
                    {"inputs", inputs_of(request)},
                    {"result", nullptr},
                    {"budget_used", 0},
                    {"unresolved_reasons", Json::array()}};
  auto fail = [&](int code, const std::string& message) {
    out.exit_code = code;
    out.report["result"] = Json{{"error", message}};
  };
  auto it = handlers().find(request.command);
  if (it == handlers().end()) {
    fail(kParseError, "unknown command '" + request.command + "'");
    return out;
  }
  BudgetScope scope(Budget{request.budget, Budget::unlimited().max_degree});
  try {
    require(request.ring, "--ring");
    Context ctx{request, parse_ring(request.ring), Json::object(), {}};
    try {
      it->second(ctx);
      out.report["result"] = ctx.result;
    } catch (const BudgetExceeded& e) {
      ctx.result["error"] = std::string("budget exceeded: ") + e.what();
      out.report["result"] = ctx.result;
      out.exit_code = kBudgetExceeded;
    }
    out.report["unresolved_reasons"] = ctx.unresolved;
  } catch (const ParseError& e) {
    fail(kParseError, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kParseError, e.what());
  } catch (const std::overflow_error& e) {
    fail(kBudgetExceeded, e.what());
  } catch (const std::exception& e) {
    fail(kInternalError, e.what());
  }
  out.report["budget_used"] = scope.used();
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream s;
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  s << "command: " << scalar(report["command"]) << "\n";
  const Json& result = report["result"];
  if (result.is_object()) {
    for (const auto& [key, value] : result.items()) {
      if (key == "checks") {
        for (const auto& check : value)
          s << "  [" << scalar(check["status"]) << "] " << scalar(check["id"]) << " (" << scalar(check["anchor"])
            << ")\n";
        continue;
      }
      s << key << ": " << scalar(value) << "\n";
    }
  }
  s << "budget_used: " << scalar(report["budget_used"]) << "\n";
  for (const auto& reason : report["unresolved_reasons"]) s << "unresolved: " << scalar(reason) << "\n";
  return s.str();
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandRequest req;
  CLI::App app{"Frobenius-theoretic computations over F_p"};
  std::string names;
  for (const auto& n : command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", req.command, "one of: " + names)->required();
  app.add_option("suite", req.suite, "verify suite: examples, invariants-random, oracles");
  app.add_option("--ring", req.ring, "F_p[v1,...,vn] optionally followed by /(g1,...,gk)");
  app.add_option("--ideal", req.ideal, "(g1, ..., gk)");
  app.add_option("--by", req.ideal2, "divisor ideal for colon");
  app.add_option("--matrix", req.matrix, "presentation matrix [[...], ...]");
  app.add_option("--poly", req.poly, "polynomial, or root(e, f) with --root-ideal");
  app.add_option("--fseq", req.fseq, "template in q, or powers:(...), constant:(...), list:(...); (...)");
  app.add_option("--root-ideal", req.root_ideal, "(root(e, f), g, ...)");
  app.add_option("--seq", req.sequence, "sequence of ring elements (x1, ..., xk)");
  app.add_option("--point", req.point, "(a1, ..., an)");
  app.add_option("--order", req.order, "grevlex, lex or elim:k")->capture_default_str();
  app.add_option("--e", req.e, "Frobenius level")->capture_default_str();
  app.add_option("--emax", req.e_max, "largest Frobenius level")->capture_default_str();
  app.add_option("--window", req.window, "stabilization window")->capture_default_str();
  app.add_option("--lift-cap", req.lift_cap, "truncation levels tried per contraction")->capture_default_str();
  app.add_option("--budget", req.budget, "reduction step budget")->capture_default_str();
  app.add_option("--seed", req.seed, "random seed")->capture_default_str();
  app.add_option("--last", req.last, "last f-sequence index (default: emax)");
  app.add_option("--trials", req.trials, "random candidates per sampled pool")->capture_default_str();
  app.add_option("--elo", req.e_lo, "first level for reg-check")->capture_default_str();
  app.add_option("--ehi", req.e_hi, "last level for reg-check (default: emax)");
  app.add_option("--levels", req.levels, "levels for prime-check")->capture_default_str();
  app.add_option("--count", req.count, "random instances per verify check")->capture_default_str();
  app.add_option("--jobs", req.jobs, "concurrent verify checks")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--timing", req.timing, "include timings in verify reports");
  app.add_option("--format", req.format, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", req.output, "also write the structured report to this path");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }
  CommandResult res = run_command(req);
  if (req.format == "json") {
    out << res.report.dump(2) << "\n";
  } else {
    out << render_text(res.report);
  }
  if (res.exit_code != kOk && res.report["result"].contains("error"))
    err << "error: " << res.report["result"]["error"].get<std::string>() << "\n";
  if (!req.output.empty()) {
    std::ofstream file(req.output);
    if (!file) {
      err << "error: cannot write " << req.output << "\n";
      return kInternalError;
    }
    file << res.report.dump(2) << "\n";
  }
  return res.exit_code;
}

}  // namespace frobalg::cli

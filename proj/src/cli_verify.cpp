#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "cli_internal.hpp"
#include "frobalg/budget.hpp"
#include "frobalg/depth.hpp"
#include "frobalg/parser.hpp"
#include "frobalg/perfclosure.hpp"

namespace frobalg::cli {

namespace {

enum class Status { kPass, kFail, kUnresolved };

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUnresolved:
      return "unresolved";
  }
  return "?";
}

struct Check {
  std::string id;
  std::string anchor;
  std::function<Status()> run;
};

Status verdict(bool ok) { return ok ? Status::kPass : Status::kFail; }

Ideal ideal(const Ring& r, std::string_view text) { return Ideal(r, parse_generators(text, r)); }
Polynomial poly(const Ring& r, std::string_view text) { return parse_poly(text, r); }

// ---- random inputs --------------------------------------------------------

std::mt19937_64 rng_for(std::uint64_t seed, std::size_t instance, std::uint64_t salt) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(instance), salt};
  return std::mt19937_64(seq);
}

Monomial random_monomial_of_degree(std::mt19937_64& rng, std::size_t n, int degree) {
  Monomial m(n);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (int k = 0; k < degree; ++k) {
    std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

Ideal random_monomial_ideal(std::mt19937_64& rng, const Ring& r, int max_degree, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens), degree(1, max_degree);
  std::vector<Polynomial> gens;
  for (int k = count(rng); k > 0; --k)
    gens.push_back(Polynomial::monomial(r.free(), random_monomial_of_degree(rng, r.nvars(), degree(rng))));
  return Ideal(r, std::move(gens));
}

// Homogeneous monomials and binomials m1 - c m2 of equal degree.
Ideal random_graded_ideal(std::mt19937_64& rng, const Ring& r, int max_degree, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens), degree(1, max_degree), kind(0, 1);
  std::uniform_int_distribution<Coeff> coeff(1, r.characteristic() - 1);
  std::vector<Polynomial> gens;
  for (int k = count(rng); k > 0; --k) {
    int d = degree(rng);
    Polynomial g = Polynomial::monomial(r.free(), random_monomial_of_degree(rng, r.nvars(), d));
    if (kind(rng) == 1) g = g - Polynomial::monomial(r.free(), random_monomial_of_degree(rng, r.nvars(), d), coeff(rng));
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(r.var(0));
  return Ideal(r, std::move(gens));
}

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms), degree(0, max_degree);
  std::uniform_int_distribution<Coeff> coeff(1, r.characteristic() - 1);
  Polynomial f(r.free());
  for (int k = terms(rng); k > 0; --k)
    f = f + Polynomial::monomial(r.free(), random_monomial_of_degree(rng, r.nvars(), degree(rng)), coeff(rng));
  return f;
}

bool same_primes(const std::vector<PrimeIdealRecord>& recs, const std::vector<std::string>& expected, const Ring& r) {
  std::size_t on_r = 0;
  for (const auto& rec : recs) {
    if (rec.side != Side::kR) continue;
    ++on_r;
    bool hit = std::any_of(expected.begin(), expected.end(),
                           [&](const std::string& e) { return ideal_equal(rec.ideal, ideal(r, e)); });
    if (!hit) return false;
  }
  return on_r == expected.size();
}

bool nested(const std::vector<PrimeIdealRecord>& a, const std::vector<PrimeIdealRecord>& b) {
  return std::all_of(a.begin(), a.end(), [&](const PrimeIdealRecord& p) {
    return std::any_of(b.begin(), b.end(), [&](const PrimeIdealRecord& q) { return ideal_equal(p.ideal, q.ideal); });
  });
}

FSequence x_and_y_powers(const Ring& r, std::size_t last) {
  std::vector<Ideal> prefix;
  for (std::size_t e = 0; e <= last; ++e) prefix.emplace_back(r, std::vector<Polynomial>{r.var(0), frobenius_map(r.var(1), e)});
  return FSequence::custom(r, std::move(prefix));
}

bool run_ok(const CommandRequest& req, const std::function<bool(const Json&)>& pred) {
  CommandResult res = run_command(req);
  return res.exit_code == kOk && pred(res.report["result"]);
}

CommandRequest request(const std::string& command, const std::string& ring) {
  CommandRequest r;
  r.command = command;
  r.ring = ring;
  return r;
}

// ---- suites ---------------------------------------------------------------

std::vector<Check> worked_examples() {
  std::vector<Check> out;
  for (int p : {2, 3, 5}) {
    std::string ring = "F_" + std::to_string(p) + "[x,y,z]/(x^" + std::to_string(p) + " - y*z^" + std::to_string(p) + ")";
    out.push_back({"fedder-hypersurface-p" + std::to_string(p), "hypersurface x^p - y z^p is not F-pure", [ring] {
                     return verdict(run_ok(request("fedder", ring), [](const Json& r) {
                       return r["verdict"] == "not F-pure" && r["witness"].is_null();
                     }));
                   }});
  }
  for (int p : {2, 3}) {
    std::string ring = "F_" + std::to_string(p) + "[x,y]/(x*y)";
    out.push_back({"fedder-xy-p" + std::to_string(p), "coordinate axes are F-pure", [ring] {
                     return verdict(run_ok(request("fedder", ring), [](const Json& r) {
                       return r["verdict"] == "F-pure" && r["witness"].is_string();
                     }));
                   }});
  }
  out.push_back({"fedder-polynomial-ring", "regular rings are F-pure", [] {
                   return verdict(fedder_f_pure(parse_ring("F_3[x,y]")).is_f_pure);
                 }});
  out.push_back({"closure-witness", "x lies in the Frobenius closure of (z)", [] {
                   Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
                   auto c = frobenius_closure(ideal(q, "(z)"), 3);
                   bool ok = c.closure.contains(poly(q, "x")) && c.stabilized_at && *c.stabilized_at <= 2;
                   return verdict(ok && is_frobenius_closed(ideal(q, "(z)"), 3) == Verdict::kFalse);
                 }});
  out.push_back({"closure-cli", "closure command lists x", [] {
                   auto req = request("closure", "F_3[x,y,z]/(x^3 - y*z^3)");
                   req.ideal = "(z)";
                   req.e_max = 3;
                   return verdict(run_ok(req, [](const Json& r) {
                     return std::find(r["closure"].begin(), r["closure"].end(), "x") != r["closure"].end();
                   }));
                 }});
  out.push_back({"closure-polynomial-ring", "ideals of polynomial rings are Frobenius closed", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   auto c = frobenius_closure(ideal(r, "(x^2, x*y)"), 2);
                   return verdict(ideal_equal(c.closure, ideal(r, "(x^2, x*y)")) && c.stabilized_at == 0u &&
                                  frobenius_closure(Ideal::zero(r), 2).closure.is_zero());
                 }});
  out.push_back({"frobenius-power-preimage", "bracket powers and their preimages", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   return verdict(ideal_equal(frobenius_power(ideal(r, "(x, y)"), 2), ideal(r, "(x^4, y^4)")) &&
                                  ideal_equal(frobenius_preimage(ideal(r, "(x, y^4)"), 1), ideal(r, "(x, y^2)")));
                 }});
  out.push_back({"fseq-examples", "bracket powers, (x, y^q) and a constant prime are f-sequences", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   std::vector<FSequence> seqs{FSequence::frobenius_powers(ideal(r, "(x, y)"), 5), x_and_y_powers(r, 5),
                                               FSequence::constant(ideal(r, "(x)"), 5)};
                   std::vector<std::string> radicals{"(x, y)", "(x, y)", "(x)"};
                   for (std::size_t k = 0; k < seqs.size(); ++k) {
                     if (!fseq_verify(seqs[k]).ok) return Status::kFail;
                     auto rs = fseq_radical_stabilize(seqs[k], 5);
                     if (!rs.stable) return Status::kUnresolved;
                     if (!ideal_equal(*rs.stable, ideal(r, radicals[k]))) return Status::kFail;
                   }
                   auto bad = fseq_verify(FSequence::custom(r, {ideal(r, "(x)"), ideal(r, "(x^3)")}));
                   return verdict(!bad.ok && bad.first_failure == 0u);
                 }});
  out.push_back({"fseq-template-cli", "fseq-verify on the template (x, y^q)", [] {
                   auto req = request("fseq-verify", "F_2[x,y]");
                   req.fseq = "(x, y^q)";
                   req.last = 5;
                   return verdict(run_ok(req, [](const Json& r) { return r["ok"] == true; }));
                 }});
  out.push_back({"ass-examples", "associated primes of monomial ideals", [] {
                   Ring r2 = parse_ring("F_2[x,y]");
                   Ring r3 = parse_ring("F_2[x,y,z]");
                   return verdict(same_primes(ass_monomial(ideal(r2, "(x, y^4)")), {"(x, y)"}, r2) &&
                                  same_primes(ass_monomial(ideal(r3, "(x*y, x*z)")), {"(x)", "(y, z)"}, r3) &&
                                  ass_monomial(Ideal::zero(r2)).size() == 1);
                 }});
  out.push_back({"maximal-in-ass", "the origin as an associated point", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   return verdict(maximal_in_ass(ideal(r, "(x^2, x*y)"), {0, 0}) &&
                                  !maximal_in_ass(ideal(r, "(x)"), {0, 0}) && maximal_in_ass(ideal(r, "(x, y)"), {0, 0}));
                 }});
  out.push_back({"ass-union", "union of Ass along f-sequences and its perfect-closure copy", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   for (const auto& seq : {FSequence::frobenius_powers(ideal(r, "(x, y)"), 4), x_and_y_powers(r, 4)}) {
                     auto recs = union_ass_fseq(seq);
                     if (!same_primes(recs, {"(x, y)"}, r) || recs.front().first_seen != 0) return Status::kFail;
                     std::size_t phi = 0;
                     for (const auto& rec : recs)
                       if (rec.side == Side::kRInfinityViaPhi) {
                         ++phi;
                         if (!ideal_equal(rec.ideal, recs.front().ideal)) return Status::kFail;
                       }
                     if (phi != 2) return Status::kFail;
                   }
                   Ring r3 = parse_ring("F_2[x,y,z]");
                   return verdict(same_primes(union_ass_fseq(FSequence::constant(ideal(r3, "(x*y, x*z)"), 2)),
                                              {"(x)", "(y, z)"}, r3));
                 }});
  out.push_back({"depth-examples", "depth of S/(xy, xz) and of the extreme modules", [] {
                   Ring r = parse_ring("F_2[x,y,z]");
                   auto m = ModulePresentation::cyclic(ideal(r, "(x*y, x*z)"));
                   auto d = depth_at_origin(m);
                   auto s = classical_depth_search(m, 64, 0);
                   return verdict(d.depth == 1u && d.oracle == OracleStatus::kAgrees && s.length == 1 &&
                                  depth_at_origin(ModulePresentation::free(r, 1)).depth == 3u &&
                                  depth_at_origin(ModulePresentation::cyclic(Ideal::variables(r))).depth == 0u);
                 }});
  out.push_back({"sdepth-cli", "sdepth of S/(xy, xz) is 1 at every level", [] {
                   auto req = request("sdepth", "F_2[x,y,z]");
                   req.ideal = "(x*y, x*z)";
                   req.e_max = 3;
                   return verdict(run_ok(req, [](const Json& r) {
                     return r["per_e_depth"] == Json::array({1, 1, 1, 1}) && r["stabilized_value"] == 1;
                   }));
                 }});
  out.push_back({"depth-chain", "kdepth, sdepth and cdepth on S/(xy, xz)", [] {
                   Ring r = parse_ring("F_2[x,y,z]");
                   auto m = ModulePresentation::cyclic(ideal(r, "(x*y, x*z)"));
                   auto prof = kdepth_truncation_profile(m, 3, 2);
                   auto lb = cdepth_lower_bound(m, 3, 64, 0);
                   auto reg = regular_sequence_check({poly(r, "x + y + z")}, m, 0, 3);
                   return verdict(prof.stable_kgrade == 1u && lb.length == 1 &&
                                  std::all_of(reg.begin(), reg.end(), [](bool b) { return b; }));
                 }});
  out.push_back({"root-equal", "roots compared after raising to a common level", [] {
                   Ring r1 = parse_ring("F_2[x]");
                   Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
                   return verdict(root_equal({1, poly(r1, "x^2")}, {0, poly(r1, "x")}, r1) &&
                                  !root_equal({1, poly(r1, "x")}, {0, poly(r1, "x")}, r1) &&
                                  root_equal({1, poly(q, "y*z^2")}, {0, poly(q, "x")}, q));
                 }});
  out.push_back({"member-inf", "membership in the extended ideal", [] {
                   Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
                   Ring r1 = parse_ring("F_2[x]");
                   return verdict(extended_ideal_membership(poly(q, "x"), ideal(q, "(z)"), 3) == Verdict::kTrue &&
                                  extended_ideal_membership(poly(r1, "x"), ideal(r1, "(x^2)"), 4) == Verdict::kFalse);
                 }});
  out.push_back({"gamma-examples", "contractions of root-generated ideals", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   auto a = gamma_fseq(parse_root_ideal("(x, y)", r), 3, 6);
                   auto b = gamma_fseq(PerfectClosureIdeal(r, {{6, poly(r, "x")}, {0, poly(r, "y")}}), 3, 6);
                   if (!a.stabilized || !b.stabilized) return Status::kUnresolved;
                   for (std::size_t e = 0; e <= 3; ++e)
                     if (!ideal_equal(a.sequence[e], frobenius_power(ideal(r, "(x, y)"), e)) ||
                         !ideal_equal(b.sequence[e], x_and_y_powers(r, 3)[e]))
                       return Status::kFail;
                   return verdict(a.verify.ok && b.verify.ok);
                 }});
  out.push_back({"prime-check", "primes extend and contract along every truncation", [] {
                   for (const char* ring : {"F_2[x,y]", "F_2[x,y,z]"}) {
                     Ring r = parse_ring(ring);
                     for (std::uint32_t mask = 0; mask < (1u << r.nvars()); ++mask) {
                       std::vector<Polynomial> gens;
                       for (std::size_t v = 0; v < r.nvars(); ++v)
                         if (mask & (1u << v)) gens.push_back(r.var(v));
                       if (!prime_extension_check(Ideal(r, gens), 3).pass()) return Status::kFail;
                     }
                   }
                   return Status::kPass;
                 }});
  out.push_back({"root-obstruction", "x^{1/pq} r stays outside (x) in the perfect closure of F_2[x]", [] {
                   auto levels = root_obstruction_check(2, 4);
                   return verdict(std::all_of(levels.begin(), levels.end(),
                                              [](const ObstructionLevel& l) { return l.violations == 0 && l.checked > 0; }));
                 }});
  out.push_back({"zero-closure", "zero closure of cyclic modules", [] {
                   Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
                   Ring s = parse_ring("F_2[x,y]");
                   auto z = zero_closure_cyclic(ideal(q, "(z)"), 1, 3);
                   return verdict(z.ideal.contains(poly(q, "x*z^2")) && !z.ideal.contains(poly(q, "x")) &&
                                  ideal_equal(zero_closure_cyclic(ideal(s, "(x*y)"), 1, 3).ideal, ideal(s, "(x^2*y^2)")));
                 }});
  out.push_back({"parser", "ring and polynomial grammar", [] {
                   Ring r = parse_ring("F_2[x,y]");
                   bool rejected = false;
                   try {
                     parse_ring("F_4[x]");
                   } catch (const ParseError&) {
                     rejected = true;
                   }
                   return verdict(rejected && poly(r, "(x+y)^2") == poly(r, "x^2 + y^2") &&
                                  poly(parse_ring("F_2[x]"), "2*x").is_zero());
                 }});
  return out;
}

std::vector<Check> invariants_random(std::uint64_t seed, std::size_t count) {
  std::vector<Check> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::string n = "/" + std::to_string(k);
    out.push_back({"gb-membership" + n, "constructed members reduce to zero; bases are reproducible", [=] {
                     auto rng = rng_for(seed, k, 1);
                     Ring r = parse_ring(k % 2 ? "F_3[x,y,z]" : "F_2[x,y,z]");
                     Ideal i(r, {random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)});
                     Polynomial member = random_poly(rng, r, 2, 2) * i.generators()[0] +
                                         random_poly(rng, r, 2, 2) * i.generators()[1];
                     Ideal again(r, i.generators());
                     return verdict(i.contains(member) && to_json(i.basis()) == to_json(again.basis()));
                   }});
    out.push_back({"closed-in-S" + n, "monomial ideals of F_p[x,y] are Frobenius closed", [=] {
                     auto rng = rng_for(seed, k, 2);
                     Ring r = parse_ring(k % 2 ? "F_3[x,y]" : "F_2[x,y]");
                     return verdict(is_frobenius_closed(random_monomial_ideal(rng, r, 4, 3), 2) == Verdict::kTrue);
                   }});
    out.push_back({"ass-nested" + n, "Ass grows along bracket-power chains", [=] {
                     auto rng = rng_for(seed, k, 3);
                     Ring r = parse_ring(k % 2 ? "F_3[x,y]" : "F_2[x,y,z]");
                     auto seq = FSequence::frobenius_powers(random_monomial_ideal(rng, r, 3, 3), 2);
                     for (std::size_t e = 0; e + 1 < seq.size(); ++e)
                       if (!nested(ass_monomial(seq[e]), ass_monomial(seq[e + 1]))) return Status::kFail;
                     return Status::kPass;
                   }});
    out.push_back({"depth-chain" + n, "depth non-increasing, kdepth = sdepth >= cdepth", [=] {
                     auto rng = rng_for(seed, k, 4);
                     Ring r = parse_ring(k % 2 ? "F_3[x,y]" : "F_2[x,y,z]");
                     auto m = ModulePresentation::cyclic(random_monomial_ideal(rng, r, 3, 3));
                     auto sd = sdepth(m, 3, 2);
                     if (!sd.non_increasing) return Status::kFail;
                     if (sd.truncated_at || !sd.stabilized_value) return Status::kUnresolved;
                     auto prof = kdepth_truncation_profile(m, 3, 2);
                     if (prof.stable_kgrade != sd.stabilized_value) return Status::kFail;
                     auto lb = cdepth_lower_bound(m, 3, 32, seed);
                     if (lb.length > *sd.stabilized_value) return Status::kFail;
                     if (lb.length < *sd.stabilized_value) return lb.annotation == "budget" ? Status::kUnresolved : Status::kFail;
                     return Status::kPass;
                   }});
    out.push_back({"gamma-round-trip" + n, "contraction of the extension returns the prefix", [=] {
                     auto rng = rng_for(seed, k, 5);
                     Ring r = parse_ring(k % 2 ? "F_3[x,y]" : "F_2[x,y]");
                     auto seq = FSequence::frobenius_powers(random_monomial_ideal(rng, r, 3, 2), 2);
                     auto g = gamma_fseq(PerfectClosureIdeal::extension(seq), 2, 6);
                     if (!g.stabilized) return Status::kUnresolved;
                     for (std::size_t e = 0; e < seq.size(); ++e)
                       if (!ideal_equal(g.sequence[e], seq[e])) return Status::kFail;
                     return verdict(g.verify.ok);
                   }});
    out.push_back({"closure-membership" + n, "extended membership agrees with the closure", [=] {
                     auto rng = rng_for(seed, k, 6);
                     Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
                     Ideal i = random_monomial_ideal(rng, q, 2, 2);
                     Polynomial f = random_poly(rng, q, 2, 2);
                     Verdict v = extended_ideal_membership(f, i, 2);
                     if (v == Verdict::kUnresolved) return Status::kUnresolved;
                     return verdict((v == Verdict::kTrue) == frobenius_closure(i, 2).closure.contains(f));
                   }});
    out.push_back({"root-equal" + n, "raising a root one level keeps it equal", [=] {
                     auto rng = rng_for(seed, k, 7);
                     Ring r = parse_ring("F_2[x,y]");
                     RootElement a{k % 3, random_poly(rng, r, 3, 3)};
                     RootElement up{a.level + 1, frobenius_map(a.body, 1)};
                     return verdict(root_equal(a, up, r) && root_equal(up, a, r) &&
                                    root_equal(canonical_root(up, r), a, r));
                   }});
  }
  return out;
}

std::vector<Check> oracles(std::uint64_t seed, std::size_t count) {
  std::vector<Check> out;
  static const char* rings[] = {"F_2[x,y,z]", "F_3[x,y]", "F_2[x,y,z,w]", "F_3[x,y,z]"};
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back({"depth-triangle/" + std::to_string(k), "Koszul depth = n - pd = greedy regular sequence", [=] {
                     auto rng = rng_for(seed, k, 8);
                     Ring r = parse_ring(rings[k % 4]);
                     Ideal i = k % 2 ? random_graded_ideal(rng, r, 4, 3) : random_monomial_ideal(rng, r, 4, 3);
                     auto m = ModulePresentation::cyclic(i);
                     auto koszul = depth_at_origin(m, false);
                     auto res = free_resolution(m, r.nvars() + 1);
                     auto greedy = classical_depth_search(m, 64, seed);
                     if (!koszul.depth || res.zero_module) return verdict(!koszul.depth && res.zero_module);
                     if (!res.pd) return Status::kUnresolved;
                     if (*koszul.depth + *res.pd != r.nvars()) return Status::kFail;
                     if (greedy.length == *koszul.depth) return Status::kPass;
                     return greedy.length < *koszul.depth && greedy.annotation == "budget" ? Status::kUnresolved
                                                                                            : Status::kFail;
                   }});
  }
  return out;
}

}  // namespace

CommandResult verify_suite(const CommandRequest& req) {
  CommandResult out;
  out.report = Json{{"command", "verify"},
                    {"inputs", inputs_of(req)},
                    {"result", nullptr},
                    {"budget_used", 0},
                    {"unresolved_reasons", Json::array()}};
  std::vector<Check> checks;
  if (req.suite == "examples" || req.suite == "paper-examples") {
    checks = worked_examples();
  } else if (req.suite == "invariants-random") {
    checks = invariants_random(req.seed, req.count);
  } else if (req.suite == "oracles") {
    checks = oracles(req.seed, req.count);
  } else {
    out.exit_code = kParseError;
    out.report["result"] = Json{{"error", "unknown suite '" + req.suite + "'"}};
    return out;
  }

  struct Outcome {
    Status status = Status::kFail;
    std::string note;
    std::uint64_t used = 0;
    double ms = 0;
  };
  std::vector<Outcome> outcomes(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < checks.size(); k = next++) {
      auto start = std::chrono::steady_clock::now();
      BudgetScope scope(Budget{req.budget, Budget::unlimited().max_degree});
      Outcome& o = outcomes[k];
      try {
        o.status = checks[k].run();
      } catch (const BudgetExceeded& e) {
        o.status = Status::kUnresolved;
        o.note = std::string("budget exceeded: ") + e.what();
      } catch (const std::exception& e) {
        o.status = Status::kFail;
        o.note = e.what();
      }
      o.used = scope.used();
      o.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(req.jobs, checks.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json records = Json::array();
  std::size_t pass = 0, fail = 0, unresolved = 0;
  std::uint64_t used = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const Outcome& o = outcomes[k];
    Json rec{{"id", checks[k].id}, {"anchor", checks[k].anchor}, {"status", status_name(o.status)}};
    if (!o.note.empty()) rec["note"] = o.note;
    if (req.timing) rec["ms"] = o.ms;
    records.push_back(rec);
    used += o.used;
    if (o.status == Status::kPass) ++pass;
    if (o.status == Status::kFail) ++fail;
    if (o.status == Status::kUnresolved) {
      ++unresolved;
      out.report["unresolved_reasons"].push_back(checks[k].id + (o.note.empty() ? "" : ": " + o.note));
    }
  }
  out.report["result"] = Json{{"suite", req.suite},
                              {"checks", records},
                              {"summary", {{"total", checks.size()}, {"pass", pass}, {"fail", fail}, {"unresolved", unresolved}}}};
  out.report["budget_used"] = used;
  out.exit_code = fail == 0 ? kOk : kInternalError;
  return out;
}

}  // namespace frobalg::cli

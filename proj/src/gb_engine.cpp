#include "gb_engine.hpp"

#include <algorithm>
#include <limits>

#include "frobalg/budget.hpp"

namespace frobalg::detail {

ModVec from_polynomial(const Polynomial& f, std::uint32_t pos) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.coeff, t.mono, pos});
  return v;
}

Polynomial to_polynomial(const ModVec& v, const PolyRingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.coeff, t.mono});
  return Polynomial(ring, std::move(terms));
}

std::int64_t max_degree(const ModVec& v) {
  std::int64_t d = -1;
  for (const auto& t : v) d = std::max(d, t.mono.degree());
  return d;
}

void GbEngine::normalize(ModVec& v) const {
  std::sort(v.begin(), v.end(),
            [&](const ModTerm& a, const ModTerm& b) { return order_.compare(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (const auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const ModTerm& t) { return t.coeff == 0; });
  v = std::move(out);
}

ModVec GbEngine::monic(ModVec v) const {
  if (v.empty() || v.front().coeff == 1) return v;
  Coeff inv = field_.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field_.mul(t.coeff, inv);
  return v;
}

ModVec GbEngine::add_multiple(const ModVec& f, Coeff c, const Monomial& m, const ModVec& g) const {
  ModVec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = order_.compare(f[i].mono, f[i].pos, gm, g[j].pos);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({field_.mul(c, g[j].coeff), gm, g[j].pos});
      ++j;
    } else {
      Coeff s = field_.add(f[i].coeff, field_.mul(c, g[j].coeff));
      if (s != 0) out.push_back({s, f[i].mono, f[i].pos});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({field_.mul(c, g[j].coeff), g[j].mono * m, g[j].pos});
  return out;
}

namespace {

const ModVec* find_reducer(const ModTerm& t, const std::vector<const ModVec*>& basis) {
  for (const ModVec* g : basis) {
    const ModTerm& lt = g->front();
    if (lt.pos == t.pos && lt.mono.divides(t.mono)) return g;
  }
  return nullptr;
}

ModVec reduce_with(const GbEngine& eng, ModVec f, const std::vector<const ModVec*>& basis) {
  ModVec result;
  const auto& F = eng.field();
  std::size_t head = 0;
  std::uint64_t steps = 0;
  while (head < f.size()) {
    const ModTerm& t = f[head];
    const ModVec* g = find_reducer(t, basis);
    if (g == nullptr) {
      result.push_back(t);
      ++head;
      continue;
    }
    ModVec rest(f.begin() + static_cast<std::ptrdiff_t>(head), f.end());
    Monomial m = t.mono / g->front().mono;
    Coeff c = F.neg(F.mul(t.coeff, F.inv(g->front().coeff)));
    f = eng.add_multiple(rest, c, m, *g);
    head = 0;
    if (++steps % 64 == 0) charge_steps(64);
  }
  charge_steps(steps % 64);
  return result;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t pos;
  std::int64_t sugar;
};

struct Element {
  ModVec f;
  std::int64_t sugar;
};

}  // namespace

ModVec GbEngine::reduce(ModVec f, const std::vector<ModVec>& basis) const {
  std::vector<const ModVec*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.empty()) ptrs.push_back(&g);
  return reduce_with(*this, std::move(f), ptrs);
}

std::vector<ModVec> GbEngine::basis(std::vector<ModVec> gens) const {
  for (auto& g : gens) normalize(g);
  std::erase_if(gens, [](const ModVec& g) { return g.empty(); });
  std::sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
    return order_.compare(a.front(), b.front()) < 0;
  });

  bool single_component = true;
  for (const auto& g : gens)
    for (const auto& t : g)
      if (t.pos != 0) single_component = false;
  // The product criterion is only valid for ideals.
  const bool use_product_criterion = single_component;

  std::vector<Element> elems;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto active_ptrs = [&]() {
    std::vector<const ModVec*> ptrs;
    ptrs.reserve(active.size());
    for (std::size_t k : active) ptrs.push_back(&elems[k].f);
    return ptrs;
  };

  auto update = [&](std::size_t h) {
    const ModTerm& lh = elems[h].f.front();
    std::vector<Pair> cand;
    for (std::size_t g : active) {
      const ModTerm& lg = elems[g].f.front();
      if (lg.pos != lh.pos) continue;
      Monomial l = lh.mono.lcm(lg.mono);
      std::int64_t s = std::max(elems[h].sugar + (l.degree() - lh.mono.degree()),
                                elems[g].sugar + (l.degree() - lg.mono.degree()));
      cand.push_back({g, h, l, lh.pos, s});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const Pair& c = cand[k];
      bool coprime = lh.mono.coprime(elems[c.i].f.front().mono);
      bool keep = use_product_criterion && coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < cand.size() && keep; ++l)
          if (cand[l].lcm.divides(c.lcm)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (kept[l].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }
    std::erase_if(kept, [&](const Pair& c) {
      return use_product_criterion && lh.mono.coprime(elems[c.i].f.front().mono);
    });
    std::erase_if(pairs, [&](const Pair& pr) {
      if (pr.pos != lh.pos || !lh.mono.divides(pr.lcm)) return false;
      Monomial li = elems[pr.i].f.front().mono.lcm(lh.mono);
      Monomial lj = elems[pr.j].f.front().mono.lcm(lh.mono);
      return !(li == pr.lcm) && !(lj == pr.lcm);
    });
    for (auto& c : kept) pairs.push_back(std::move(c));
    std::erase_if(active, [&](std::size_t g) {
      const ModTerm& lg = elems[g].f.front();
      return lg.pos == lh.pos && lh.mono.divides(lg.mono);
    });
    active.push_back(h);
  };

  auto add_element = [&](ModVec f, std::int64_t sugar) {
    f = monic(std::move(f));
    check_degree(max_degree(f));
    elems.push_back({std::move(f), sugar});
    update(elems.size() - 1);
  };

  for (auto& g : gens) {
    std::int64_t sugar = max_degree(g);
    ModVec r = reduce_with(*this, std::move(g), active_ptrs());
    if (r.empty()) continue;
    if (single_component && r.front().mono.is_one()) {
      ModVec one{{1, r.front().mono, 0}};
      return {one};
    }
    add_element(std::move(r), sugar);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order_.compare(a.lcm, a.pos, b.lcm, b.pos);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair pr = *best;
    pairs.erase(best);
    charge_steps(1);

    const ModVec& fi = elems[pr.i].f;
    const ModVec& fj = elems[pr.j].f;
    Monomial mi = pr.lcm / fi.front().mono;
    Monomial mj = pr.lcm / fj.front().mono;
    ModVec s = add_multiple(ModVec{}, 1, mi, fi);
    s = add_multiple(s, field_.neg(1), mj, fj);
    ModVec r = reduce_with(*this, std::move(s), active_ptrs());
    if (r.empty()) continue;
    if (single_component && r.front().mono.is_one()) {
      ModVec one{{1, r.front().mono, 0}};
      return {one};
    }
    add_element(std::move(r), pr.sugar);
  }

  // Minimal basis, then tail-reduce each element by the others.
  std::vector<ModVec> minimal;
  for (std::size_t k : active) minimal.push_back(elems[k].f);
  std::vector<ModVec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ModVec*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    ModVec tail(minimal[k].begin() + 1, minimal[k].end());
    ModVec rt = reduce_with(*this, std::move(tail), others);
    ModVec g{minimal[k].front()};
    g.insert(g.end(), rt.begin(), rt.end());
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
    return order_.compare(a.front(), b.front()) < 0;
  });
  return reduced;
}

}  // namespace frobalg::detail

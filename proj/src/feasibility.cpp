// Feasible-set sweep over the rooted dual tree and witness reconstruction.

#include "updag/feasibility.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>

#include "updag/errors.hpp"
#include "updag/partition.hpp"

namespace updag {

namespace {

// Sign conventions used throughout: sides map to +1 (inside) and -1
// (outside); a chain anchor is the side of its first component.
int side_sign(int side01) { return side01 == 1 ? 1 : -1; }

}  // namespace

// Section: feasible-set containers ----------------------------------------

const FeasiblePair* FeasibleSet::find(int mu, int nu) const {
  for (const FeasiblePair& p : pairs) {
    if (p.mu == mu && p.nu == nu) return &p;
  }
  return nullptr;
}

std::set<std::pair<int, int>> FeasibleSet::pair_set() const {
  std::set<std::pair<int, int>> s;
  for (const FeasiblePair& p : pairs) s.insert({p.mu, p.nu});
  return s;
}

long long IntegerGeneration::free_total() const {
  long long t = 0;
  for (const Item& it : free) t += it.value;
  return t;
}

NodeContext make_context(const Dag& d, const RootedDualTree& rt, int node,
                         const std::vector<FeasibleSet>& sets) {
  const RootedNode& n = rt.nodes[node];
  NodeContext ctx;
  ctx.cycle = n.cycle;
  ctx.swch = n.swch;
  const int k = n.k();
  assert(k >= 2);
  ctx.children.assign(k + 1, ChildSet{});
  for (int i = 1; i <= k; ++i) {
    const int c = n.child[i];
    if (c < 0) continue;
    ChildSet& cs = ctx.children[i];
    cs.defined = true;
    cs.node = c;
    const FeasibleSet& fs = sets[c];
    assert(std::min(n.cycle[i - 1], n.cycle[i]) == fs.end_low);
    assert(std::max(n.cycle[i - 1], n.cycle[i]) == fs.end_high);
    // The stored mu sits at the smaller endpoint; flip into cycle order.
    const bool fwd = n.cycle[i - 1] < n.cycle[i];
    for (const FeasiblePair& p : fs.pairs) {
      const int m = fwd ? p.mu : p.nu;
      const int v = fwd ? p.nu : p.mu;
      cs.has[m + 1][v + 1] = true;
    }
  }
  (void)d;
  return ctx;
}

// Section: condition audit ------------------------------------------------

PropertyCheck check_properties(const NodeContext& ctx, const NodeWitness& w,
                               int mu, int nu) {
  const int k = ctx.k();
  auto fail = [](int condition, std::string detail) {
    PropertyCheck pc;
    pc.ok = false;
    pc.condition = condition;
    pc.detail = std::move(detail);
    return pc;
  };
  const auto sz = static_cast<std::size_t>(k + 1);
  if (k < 2) return fail(0, "cycle shorter than three vertices");
  if (w.rho.size() != sz || w.mus.size() != sz || w.nus.size() != sz ||
      w.assignment.size() != sz) {
    return fail(0, "witness arrays do not match the cycle length");
  }
  if (w.mus[0] != -1 || w.nus[0] != -1 || w.assignment[0] != -1) {
    return fail(0, "position 0 carries component data");
  }
  for (int i = 1; i <= k; ++i) {
    if (ctx.children[i].defined) {
      if (w.assignment[i] != 0 && w.assignment[i] != 1) {
        return fail(0, "occupied position " + std::to_string(i) + " has no side");
      }
      if (w.mus[i] < -1 || w.mus[i] > 1 || w.nus[i] < -1 || w.nus[i] > 1) {
        return fail(0, "angles out of range at position " + std::to_string(i));
      }
    } else {
      if (w.assignment[i] != -1 || w.mus[i] != -1 || w.nus[i] != -1) {
        return fail(0, "empty position " + std::to_string(i) + " carries data");
      }
    }
  }
  for (int i = 0; i <= k; ++i) {
    const bool ok = ctx.swch[i] ? (w.rho[i] == -1 || w.rho[i] == 1) : w.rho[i] == 0;
    if (!ok) {
      return fail(1, "cycle angle " + std::to_string(int(w.rho[i])) +
                         " at position " + std::to_string(i));
    }
  }
  int sum = 0;
  for (int i = 0; i <= k; ++i) sum += w.rho[i];
  if (sum != -2) return fail(2, "cycle angles sum to " + std::to_string(sum));
  for (int i = 1; i <= k; ++i) {
    if (!ctx.children[i].defined) continue;
    if (!ctx.children[i].has[w.mus[i] + 1][w.nus[i] + 1]) {
      return fail(3, "pair not feasible for the component at position " +
                         std::to_string(i));
    }
  }
  for (int i = 1; i <= k; ++i) {
    if (!ctx.children[i].defined) continue;
    const int sgn = side_sign(w.assignment[i]);
    if (w.mus[i] > sgn * w.rho[i - 1] || w.nus[i] > sgn * w.rho[i]) {
      return fail(4, "component angles exceed the cycle angles at position " +
                         std::to_string(i));
    }
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (w.nus[i] + w.mus[i + 1] > 0) {
      return fail(5, "shared vertex " + std::to_string(i) + " oversubscribed");
    }
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (!ctx.children[i].defined || !ctx.children[i + 1].defined) continue;
    if (w.nus[i] != 0 || w.mus[i + 1] != 0) continue;
    if (w.assignment[i] == 1 && w.assignment[i + 1] == 1 && w.rho[i] != 1) {
      return fail(6, "flat pair inside needs a large angle at position " +
                         std::to_string(i));
    }
    if (w.assignment[i] == 0 && w.assignment[i + 1] == 0 && w.rho[i] != -1) {
      return fail(6, "flat pair outside needs a small angle at position " +
                         std::to_string(i));
    }
  }
  const int got_mu = (!ctx.children[1].defined || w.assignment[1] == 1)
                         ? w.rho[0]
                         : w.rho[0] + w.mus[1] + 1;
  const int got_nu = (!ctx.children[k].defined || w.assignment[k] == 1)
                         ? w.rho[k]
                         : w.rho[k] + w.nus[k] + 1;
  if (got_mu != mu || got_nu != nu) {
    return fail(7, "cycle realizes (" + std::to_string(got_mu) + ", " +
                       std::to_string(got_nu) + ") instead of the target");
  }
  return PropertyCheck{};
}

// Section: per-node decision steps -----------------------------------------

std::vector<CandidateTuple> enumerate_candidate_tuples(const NodeContext& ctx,
                                                       int mu, int nu) {
  const int k = ctx.k();
  const ChildSet& c1 = ctx.children[1];
  const ChildSet& ck = ctx.children[k];
  std::vector<CandidateTuple> out;
  const auto rho_values = [](bool sw) {
    return sw ? std::vector<int>{-1, 1} : std::vector<int>{0};
  };
  for (const int rho0 : rho_values(ctx.swch[0] != 0)) {
    for (const int rhok : rho_values(ctx.swch[k] != 0)) {
      // Choices for the first position: angle at v_0 and side.
      std::vector<std::array<int, 2>> firsts;
      if (!c1.defined) {
        firsts.push_back({-1, -1});
      } else {
        for (int m = -1; m <= 1; ++m) {
          if (!c1.has_mu(m)) continue;
          for (const int a : {1, 0}) {
            if (m > (a == 1 ? rho0 : -rho0)) continue;
            firsts.push_back({m, a});
          }
        }
      }
      // Choices for the last position: full pair and side. A pair whose
      // angle at v_{k-1} is large dies against a non-switch v_{k-1}: the
      // cycle angle there is flat on both sides.
      std::vector<std::array<int, 3>> lasts;
      if (!ck.defined) {
        lasts.push_back({-1, -1, -1});
      } else {
        for (int m = -1; m <= 1; ++m) {
          for (int v = -1; v <= 1; ++v) {
            if (!ck.has[m + 1][v + 1]) continue;
            if (m == 1 && !ctx.swch[k - 1]) continue;
            for (const int a : {1, 0}) {
              if (v > (a == 1 ? rhok : -rhok)) continue;
              lasts.push_back({m, v, a});
            }
          }
        }
      }
      for (const auto& f : firsts) {
        const int got_mu =
            (!c1.defined || f[1] == 1) ? rho0 : rho0 + f[0] + 1;
        if (got_mu != mu) continue;
        for (const auto& l : lasts) {
          const int got_nu =
              (!ck.defined || l[2] == 1) ? rhok : rhok + l[1] + 1;
          if (got_nu != nu) continue;
          CandidateTuple t;
          t.rho0 = rho0;
          t.rhok = rhok;
          t.mu1 = f[0];
          t.a1 = f[1];
          t.muk = l[0];
          t.nuk = l[1];
          t.ak = l[2];
          out.push_back(t);
        }
      }
    }
  }
  return out;
}

std::optional<int> decide_nu(const NodeContext& ctx, int i, int mu_i) {
  assert(i >= 1 && i <= ctx.k());
  const ChildSet& f = ctx.children[i];
  if (!f.defined) {
    assert(mu_i == -1);
    return -1;
  }
  assert(mu_i >= -1 && mu_i <= 1);
  for (int b = -1; b <= 1; ++b) {
    if (f.has[mu_i + 1][b + 1]) return b;
  }
  return std::nullopt;
}

std::optional<int> decide_mu(const NodeContext& ctx, int i, int nu_i) {
  assert(i >= 1 && i <= ctx.k() - 2);
  assert(nu_i >= -1 && nu_i <= 1);
  const ChildSet& f = ctx.children[i + 1];
  if (!f.defined) return -1;
  if (nu_i == 1) {
    // The shared vertex has no room left; only a small angle fits.
    if (f.has_mu(-1)) return -1;
    return std::nullopt;
  }
  if (nu_i == 0 || !ctx.swch[i]) {
    // A large angle cannot fit at v_i, and at most one of the two low
    // values opens a pair of the component.
    if (f.has_mu(-1)) return -1;
    if (f.has_mu(0)) return 0;
    return std::nullopt;
  }
  // nu_i = -1 at a switch vertex: every angle fits at v_i, so pick the one
  // that keeps the most freedom at v_{i+1} and for the placement sides.
  for (int a = -1; a <= 0; ++a) {
    for (int b = -1; b <= 0; ++b) {
      if (f.has[a + 1][b + 1]) return a;
    }
  }
  const bool high_low = f.has[2][0];   // (1, -1)
  const bool high_flat = f.has[2][1];  // (1, 0)
  const bool low_high = f.has[0][2];   // (-1, 1)
  const bool flat_high = f.has[1][2];  // (0, 1)
  if (high_low) return 1;
  if (high_flat && !low_high) return 1;
  if (!high_flat) {
    if (low_high) return -1;
    if (flat_high) return 0;
    // Only (1, 1) remains.
  } else {
    // Both (1, 0) and (-1, 1) are open. Taking 1 leaves a flat angle at
    // v_{i+1}, taking -1 a large one; whether a flat angle is usable there
    // depends on the next position.
    if (!ctx.swch[i + 1]) return 1;
    if (ctx.children[i + 2].defined && ctx.children[i + 2].has_mu(0)) return 1;
    return -1;
  }
  assert(f.has[2][2]);
  return 1;
}

std::vector<Chain> bind_chains(const NodeContext& ctx,
                               const std::vector<std::int8_t>& mus,
                               const std::vector<std::int8_t>& nus) {
  const int k = ctx.k();
  assert(mus.size() == static_cast<std::size_t>(k + 1));
  assert(nus.size() == static_cast<std::size_t>(k + 1));
  std::vector<Chain> chains;
  int i = 1;
  while (i <= k) {
    if (!ctx.children[i].defined) {
      ++i;
      continue;
    }
    Chain c;
    c.first = i;
    if (mus[i] >= 0 && ctx.swch[i - 1]) {
      c.marked.push_back(i - 1);
      c.mark_sign.push_back(1);
    }
    c.rel_side.push_back(1);
    std::int8_t rel = 1;
    int q = i;
    while (q + 1 <= k && ctx.children[q + 1].defined && nus[q] == 0 &&
           mus[q + 1] == 0) {
      // Shared vertex v_q glues the two components: same side and a forced
      // cycle angle at a switch, opposite sides at a non-switch.
      if (ctx.swch[q]) {
        c.marked.push_back(q);
        c.mark_sign.push_back(rel);
      } else {
        rel = -rel;
      }
      c.rel_side.push_back(rel);
      ++q;
    }
    c.last = q;
    if (nus[q] >= 0 && ctx.swch[q]) {
      c.marked.push_back(q);
      c.mark_sign.push_back(rel);
    }
    for (const std::int8_t s : c.mark_sign) c.value += s;
    chains.push_back(std::move(c));
    i = q + 1;
  }
  return chains;
}

std::optional<IntegerGeneration> generate_integers(
    const NodeContext& ctx, const std::vector<Chain>& chains,
    const CandidateTuple& t, const std::vector<std::int8_t>& mus,
    const std::vector<std::int8_t>& nus) {
  (void)mus;
  (void)nus;
  const int k = ctx.k();
  IntegerGeneration g;
  g.anchor.assign(chains.size(), 0);
  g.marked_at.assign(k + 1, 0);
  bool consistent = true;
  const auto force = [&](std::size_t ci, int a) {
    if (g.anchor[ci] == 0) {
      g.anchor[ci] = static_cast<std::int8_t>(a);
    } else if (g.anchor[ci] != a) {
      consistent = false;
    }
  };
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const Chain& c = chains[ci];
    for (const int pos : c.marked) {
      assert(pos >= 0 && pos <= k);
      assert(!g.marked_at[pos]);
      g.marked_at[pos] = 1;
    }
    // A chain touching a tuple end inherits the side fixed there; a mark on
    // a tuple end must reproduce the angle fixed there.
    if (c.first == 1 && t.a1 >= 0) force(ci, side_sign(t.a1));
    if (c.last == k && t.ak >= 0) {
      force(ci, side_sign(t.ak) * c.rel_side.back());
    }
    for (std::size_t m = 0; m < c.marked.size(); ++m) {
      if (c.marked[m] == 0) force(ci, t.rho0 * c.mark_sign[m]);
      if (c.marked[m] == k) force(ci, t.rhok * c.mark_sign[m]);
    }
  }
  if (!consistent) return std::nullopt;
  if (!g.marked_at[0]) g.fixed += t.rho0;
  if (!g.marked_at[k]) g.fixed += t.rhok;
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const Chain& c = chains[ci];
    if (g.anchor[ci] != 0) {
      g.fixed += static_cast<long long>(g.anchor[ci]) * c.value;
    } else if (c.value != 0) {
      IntegerGeneration::Item it;
      it.value = std::llabs(c.value);
      it.chain = static_cast<int>(ci);
      g.free.push_back(it);
    }
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (!ctx.swch[i] || g.marked_at[i]) continue;
    IntegerGeneration::Item it;
    it.value = 1;
    it.vertex = i;
    g.free.push_back(it);
  }
  return g;
}

std::optional<NodeWitness> extend_candidate(const NodeContext& ctx,
                                            const CandidateTuple& t, int mu,
                                            int nu) {
  const int k = ctx.k();
  assert(k >= 2);
  NodeWitness w;
  w.rho.assign(k + 1, 0);
  w.mus.assign(k + 1, -1);
  w.nus.assign(k + 1, -1);
  w.assignment.assign(k + 1, -1);
  w.mus[1] = static_cast<std::int8_t>(t.mu1);
  w.mus[k] = static_cast<std::int8_t>(t.muk);
  w.nus[k] = static_cast<std::int8_t>(t.nuk);
  // Left-to-right ladder: the smallest workable angle at the right end of
  // every component, then the angle of the next one.
  for (int i = 1; i <= k - 1; ++i) {
    const std::optional<int> nv = decide_nu(ctx, i, w.mus[i]);
    if (!nv) return std::nullopt;
    w.nus[i] = static_cast<std::int8_t>(*nv);
    // A large angle at a non-switch vertex fits on neither side: the cycle
    // angle there is flat.
    if (ctx.children[i].defined && w.nus[i] == 1 && !ctx.swch[i]) {
      return std::nullopt;
    }
    if (i <= k - 2) {
      const std::optional<int> mv = decide_mu(ctx, i, w.nus[i]);
      if (!mv) return std::nullopt;
      w.mus[i + 1] = static_cast<std::int8_t>(*mv);
    }
  }
  if (w.nus[k - 1] + w.mus[k] > 0) return std::nullopt;
  const std::vector<Chain> chains = bind_chains(ctx, w.mus, w.nus);
  const std::optional<IntegerGeneration> gen =
      generate_integers(ctx, chains, t, w.mus, w.nus);
  if (!gen) return std::nullopt;
  // The forced angles plus a sign choice for every free item must close the
  // angle balance of the cycle.
  const long long total = gen->free_total();
  const long long rest = -2 - gen->fixed;
  if (rest > total || rest < -total) return std::nullopt;
  if ((total + rest) % 2 != 0) return std::nullopt;
  const long long inside_sum = (total + rest) / 2;
  std::vector<long long> magnitudes;
  magnitudes.reserve(gen->free.size());
  for (const IntegerGeneration::Item& it : gen->free) {
    magnitudes.push_back(it.value);
  }
  const AugmentResult split =
      augment_and_partition(magnitudes, inside_sum, total - inside_sum);
  if (!split.feasible) return std::nullopt;
  // Write the solution back: tuple ends first, then free signs, then the
  // chain placements and every angle they force.
  w.rho[0] = static_cast<std::int8_t>(t.rho0);
  w.rho[k] = static_cast<std::int8_t>(t.rhok);
  std::vector<std::int8_t> anchor = gen->anchor;
  std::vector<std::int8_t> eps(gen->free.size(), 0);
  for (const int idx : split.in_indices) eps[idx] = 1;
  for (const int idx : split.out_indices) eps[idx] = -1;
  for (std::size_t j = 0; j < gen->free.size(); ++j) {
    const IntegerGeneration::Item& it = gen->free[j];
    assert(eps[j] != 0);
    if (it.chain >= 0) {
      const Chain& c = chains[it.chain];
      anchor[it.chain] = static_cast<std::int8_t>(c.value > 0 ? eps[j] : -eps[j]);
    } else {
      w.rho[it.vertex] = eps[j];
    }
  }
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const Chain& c = chains[ci];
    if (anchor[ci] == 0) anchor[ci] = 1;
    for (int pos = c.first; pos <= c.last; ++pos) {
      const std::int8_t rel = c.rel_side[pos - c.first];
      w.assignment[pos] = anchor[ci] * rel > 0 ? 1 : 0;
    }
    for (std::size_t m = 0; m < c.marked.size(); ++m) {
      w.rho[c.marked[m]] = static_cast<std::int8_t>(anchor[ci] * c.mark_sign[m]);
    }
  }
  assert(!ctx.children[1].defined || w.assignment[1] == t.a1);
  assert(!ctx.children[k].defined || w.assignment[k] == t.ak);
  const PropertyCheck audit = check_properties(ctx, w, mu, nu);
  if (!audit.ok) {
    throw InternalError("extended witness fails condition " +
                        std::to_string(audit.condition) + ": " + audit.detail);
  }
  return w;
}

FeasibleSet feasible_set(const NodeContext& ctx, int end_low, int end_high) {
  FeasibleSet fs;
  fs.end_low = end_low;
  fs.end_high = end_high;
  for (int mu = -1; mu <= 1; ++mu) {
    for (int nu = -1; nu <= 1; ++nu) {
      for (const CandidateTuple& t : enumerate_candidate_tuples(ctx, mu, nu)) {
        std::optional<NodeWitness> w = extend_candidate(ctx, t, mu, nu);
        if (!w) continue;
        FeasiblePair p;
        p.mu = mu;
        p.nu = nu;
        p.witness = std::move(*w);
        fs.pairs.push_back(std::move(p));
        break;
      }
    }
  }
  return fs;
}

// Section: whole-tree drivers ----------------------------------------------

SweepResult sweep_feasible_sets(const Dag& d, const RootedDualTree& rt) {
  SweepResult r;
  r.sets.resize(rt.nodes.size());
  for (std::size_t id = 0; id < rt.nodes.size(); ++id) {
    const NodeContext ctx = make_context(d, rt, static_cast<int>(id), r.sets);
    const Edge& pe = d.edge(rt.nodes[id].parent_edge);
    FeasibleSet fs = feasible_set(ctx, std::min(pe.tail, pe.head),
                                  std::max(pe.tail, pe.head));
    const bool empty = fs.pairs.empty();
    r.sets[id] = std::move(fs);
    if (empty) {
      r.stopped_at = static_cast<int>(id);
      return r;
    }
  }
  r.feasible = true;
  return r;
}

namespace {

// Section: witness reconstruction -------------------------------------------

// Rebuilds the embedding and corner labeling recorded by a feasible sweep.
// Sides and witnesses propagate top down; the labels of node s land in its
// own face (the one its cycle bounds once the children are placed) and in
// the surrounding face behind its parent edge.
void reconstruct(const Dag& d, const RootedDualTree& rt, const SweepResult& sw,
                 std::vector<Side>& sides, std::pair<int, int>& root_pair,
                 std::optional<UpwardEmbedding>& out) {
  const int count = static_cast<int>(rt.nodes.size());
  const FeasibleSet& root_set = sw.sets[rt.root_child];
  if (root_set.pairs.empty()) {
    throw InternalError("reconstruction requires a feasible root set");
  }
  const FeasiblePair& chosen_root = root_set.pairs.front();
  root_pair = {chosen_root.mu, chosen_root.nu};
  std::vector<const NodeWitness*> chosen(count, nullptr);
  chosen[rt.root_child] = &chosen_root.witness;
  sides.assign(count, Side::in);
  // Parents precede children when the post order is walked backward.
  for (int id = count - 1; id >= 0; --id) {
    const RootedNode& s = rt.nodes[id];
    const NodeWitness* w = chosen[id];
    if (w == nullptr) throw InternalError("dual node skipped by the rebuild");
    for (int i = 1; i <= s.k(); ++i) {
      const int c = s.child[i];
      if (c < 0) continue;
      const bool fwd = s.cycle[i - 1] < s.cycle[i];
      const int cmu = fwd ? w->mus[i] : w->nus[i];
      const int cnu = fwd ? w->nus[i] : w->mus[i];
      const FeasiblePair* fp = sw.sets[c].find(cmu, cnu);
      if (fp == nullptr) {
        throw InternalError("witness pair missing from the child set");
      }
      chosen[c] = &fp->witness;
      sides[c] = w->assignment[i] == 1 ? Side::in : Side::out;
    }
  }
  PlaneEmbedding emb = assemble_embedding(d, rt, sides);
  // Face of every node in the assembled embedding, and the face that
  // surrounds its cycle from behind the parent edge.
  std::vector<int> gface(count, -1);
  std::vector<int> sface(count, -1);
  {
    const std::array<int, 2>& ef = emb.edge_faces[rt.root_edge];
    assert(ef[0] == emb.outer_face || ef[1] == emb.outer_face);
    gface[rt.root_child] = ef[0] == emb.outer_face ? ef[1] : ef[0];
    sface[rt.root_child] = emb.outer_face;
  }
  for (int id = count - 1; id >= 0; --id) {
    const RootedNode& s = rt.nodes[id];
    for (int i = 1; i <= s.k(); ++i) {
      const int c = s.child[i];
      if (c < 0) continue;
      const std::array<int, 2>& ef = emb.edge_faces[s.cycle_edges[i]];
      const bool known0 = ef[0] == gface[id] || ef[0] == sface[id];
      const bool known1 = ef[1] == gface[id] || ef[1] == sface[id];
      if (known0 == known1) {
        throw InternalError("child face not adjacent to its parent edge");
      }
      gface[c] = known0 ? ef[1] : ef[0];
      sface[c] = sides[c] == Side::in ? gface[id] : sface[id];
    }
  }
  AngleLabeling lab = AngleLabeling::make_unset(emb);
  const auto set_corner = [&](int v, int f, int value) {
    const int tcorner = emb.corner_on_face(v, f);
    if (tcorner < 0) throw InternalError("labeled corner does not exist");
    if (lab.by_corner[v][tcorner] != AngleLabeling::unset) {
      throw InternalError("corner labeled twice");
    }
    if (value < -1 || value > 1) {
      throw InternalError("corner label out of range");
    }
    lab.by_corner[v][tcorner] = static_cast<std::int8_t>(value);
  };
  for (int id = 0; id < count; ++id) {
    const RootedNode& s = rt.nodes[id];
    const NodeWitness& w = *chosen[id];
    const int k = s.k();
    // Inside face: the cycle angle minus the angles consumed by inside
    // components at the two flanking positions.
    for (int i = 0; i <= k; ++i) {
      int x = w.rho[i];
      if (i >= 1 && s.child[i] >= 0 && w.assignment[i] == 1) {
        x -= w.nus[i] + 1;
      }
      if (i + 1 <= k && s.child[i + 1] >= 0 && w.assignment[i + 1] == 1) {
        x -= w.mus[i + 1] + 1;
      }
      set_corner(s.cycle[i], gface[id], x);
    }
    // Surrounding face: the negated cycle angle minus the outside components.
    for (int i = 1; i <= k - 1; ++i) {
      int y = -w.rho[i];
      if (s.child[i] >= 0 && w.assignment[i] == 0) y -= w.nus[i] + 1;
      if (s.child[i + 1] >= 0 && w.assignment[i + 1] == 0) y -= w.mus[i + 1] + 1;
      set_corner(s.cycle[i], sface[id], y);
    }
    // The corners of v_0 and v_k inside the surrounding face belong to the
    // parent's bookkeeping, except at the root where no parent exists.
    if (id == rt.root_child) {
      int y0 = -w.rho[0];
      if (s.child[1] >= 0 && w.assignment[1] == 0) y0 -= w.mus[1] + 1;
      set_corner(s.cycle[0], emb.outer_face, y0);
      int yk = -w.rho[k];
      if (s.child[k] >= 0 && w.assignment[k] == 0) yk -= w.nus[k] + 1;
      set_corner(s.cycle[k], emb.outer_face, yk);
    }
  }
  for (const std::vector<std::int8_t>& row : lab.by_corner) {
    for (const std::int8_t v : row) {
      if (v == AngleLabeling::unset) {
        throw InternalError("rebuilt labeling left a corner unset");
      }
    }
  }
  const CheckReport report = check_upward(d, emb, lab);
  if (!report.ok()) {
    const std::string first = !report.up0   ? report.viol0
                              : !report.up1 ? report.viol1
                              : !report.up2 ? report.viol2
                                            : report.viol3;
    throw InternalError("rebuilt labeling fails the upward check: " + first);
  }
  const Edge& re = d.edge(rt.root_edge);
  const int lo = std::min(re.tail, re.head);
  const int hi = std::max(re.tail, re.head);
  if (inside_angle(d, emb, lab, lo) != root_pair.first ||
      inside_angle(d, emb, lab, hi) != root_pair.second) {
    throw InternalError("rebuilt labeling misses the chosen root pair");
  }
  out.emplace();
  out->emb = std::move(emb);
  out->labels = std::move(lab);
}

}  // namespace

TestOutcome test_upward_report(const Dag& d, int e) {
  if (e < 0 || e >= d.edge_count()) {
    throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  }
  if (!is_acyclic(d)) {
    throw InvalidInput("the graph has a directed cycle");
  }
  const OuterplaneEmbedding o = outerplane_embedding(d);
  const ExtendedDualTree t = extended_dual_tree(d, o);
  TestOutcome out;
  out.edge = e;
  out.tree = root_at_edge(d, o, t, e);
  out.sweep = sweep_feasible_sets(d, out.tree);
  if (!out.sweep.feasible) return out;
  out.upward = true;
  reconstruct(d, out.tree, out.sweep, out.sides, out.root_pair, out.embedding);
  return out;
}

std::optional<UpwardEmbedding> test_upward_with_edge(const Dag& d, int e) {
  TestOutcome r = test_upward_report(d, e);
  return std::move(r.embedding);
}

AnyEdgeOutcome test_upward_any(const Dag& d) {
  if (!is_acyclic(d)) {
    throw InvalidInput("the graph has a directed cycle");
  }
  const OuterplaneEmbedding o = outerplane_embedding(d);
  const ExtendedDualTree t = extended_dual_tree(d, o);
  AnyEdgeOutcome out;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!o.edge_on_outer_face(d, e)) continue;
    const RootedDualTree rt = root_at_edge(d, o, t, e);
    const SweepResult sw = sweep_feasible_sets(d, rt);
    if (!sw.feasible) continue;
    std::vector<Side> sides;
    std::pair<int, int> root_pair{0, 0};
    std::optional<UpwardEmbedding> emb;
    reconstruct(d, rt, sw, sides, root_pair, emb);
    out.edge = e;
    out.embedding = std::move(emb);
    return out;
  }
  return out;
}

}  // namespace updag

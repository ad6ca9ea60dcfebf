// Brute-force upward-planarity oracle and random instance generation.

#include "updag/oracle.hpp"

#include <algorithm>
#include <utility>
#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "updag/errors.hpp"
#include "updag/rng.hpp"

namespace updag {

namespace {

struct Budget {
  long long left;
  void charge() {
    if (--left < 0) throw InstanceTooLarge("oracle budget exhausted");
  }
};

// Backtracking search over all upward labelings of one embedding. Corners of
// non-switch vertices are forced by UP0 and UP2; every switch vertex only
// chooses which of its corners is large. Each face f tracks the balance
// req[f] its undecided corners must still contribute, so branches die as
// soon as |req| exceeds the undecided count or their parities split.
class LabelSearch {
 public:
  LabelSearch(const Dag& d, const PlaneEmbedding& emb, Budget& budget,
              std::function<bool(const AngleLabeling&)> emit)
      : d_(d), emb_(emb), budget_(budget), emit_(std::move(emit)) {
    lab_ = AngleLabeling::make_unset(emb);
    req_.assign(emb.face_count(), 2);
    req_[static_cast<std::size_t>(emb.outer_face)] = -2;
    und_.assign(emb.face_count(), 0);
    for (int f = 0; f < emb.face_count(); ++f) {
      und_[static_cast<std::size_t>(f)] = static_cast<int>(emb.faces[f].size());
    }

    for (int v = 0; v < d.vertex_count(); ++v) {
      if (d.is_switch(v)) {
        choice_.push_back(v);
        continue;
      }
      const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
      const int deg = static_cast<int>(rot.size());
      int alternations = 0;
      for (int t = 0; t < deg; ++t) {
        const bool a = d.out_of(rot[static_cast<std::size_t>(t)], v);
        const bool b = d.out_of(rot[static_cast<std::size_t>((t + 1) % deg)], v);
        const int f = emb.corner_face[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        if (a != b) {
          ++alternations;
          set(v, t, f, 0);
        } else {
          set(v, t, f, -1);
        }
      }
      // UP2 demands exactly two flat corners at a non-switch vertex
      if (alternations != 2) dead_ = true;
    }
    if (!dead_) {
      for (int f = 0; f < emb.face_count(); ++f) {
        if (!open(f)) dead_ = true;
      }
    }
  }

  // Returns false when emit asked to stop the whole enumeration.
  bool run() { return dead_ ? true : descend(0); }

 private:
  void set(int v, int t, int f, int value) {
    lab_.by_corner[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] =
        static_cast<std::int8_t>(value);
    und_[static_cast<std::size_t>(f)] -= 1;
    req_[static_cast<std::size_t>(f)] -= value == -1 ? 1 : 0;
    req_[static_cast<std::size_t>(f)] += value == 1 ? 1 : 0;
  }
  void unset(int v, int t, int f, int value) {
    lab_.by_corner[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] =
        AngleLabeling::unset;
    und_[static_cast<std::size_t>(f)] += 1;
    req_[static_cast<std::size_t>(f)] += value == -1 ? 1 : 0;
    req_[static_cast<std::size_t>(f)] -= value == 1 ? 1 : 0;
  }
  // A face stays satisfiable while |req| <= und and both share a parity.
  bool open(int f) const {
    const int r = req_[static_cast<std::size_t>(f)];
    const int u = und_[static_cast<std::size_t>(f)];
    return r <= u && -r <= u && ((r ^ u) & 1) == 0;
  }

  bool descend(std::size_t idx) {
    if (idx == choice_.size()) {
      budget_.charge();
      CheckReport rep = check_upward(d_, emb_, lab_);
      if (!rep.ok()) throw InternalError("oracle labeling fails the upward check");
      return emit_(lab_);
    }
    const int v = choice_[idx];
    const auto& rot = emb_.rotation[static_cast<std::size_t>(v)];
    const int deg = static_cast<int>(rot.size());
    const auto& cf = emb_.corner_face[static_cast<std::size_t>(v)];
    for (int large = 0; large < deg; ++large) {
      budget_.charge();
      bool ok = true;
      for (int t = 0; t < deg; ++t) {
        set(v, t, cf[static_cast<std::size_t>(t)], t == large ? 1 : -1);
      }
      for (int t = 0; t < deg && ok; ++t) {
        ok = open(cf[static_cast<std::size_t>(t)]);
      }
      if (ok && !descend(idx + 1)) return false;
      for (int t = 0; t < deg; ++t) {
        unset(v, t, cf[static_cast<std::size_t>(t)], t == large ? 1 : -1);
      }
    }
    return true;
  }

  const Dag& d_;
  const PlaneEmbedding& emb_;
  Budget& budget_;
  std::function<bool(const AngleLabeling&)> emit_;
  AngleLabeling lab_;
  std::vector<int> req_, und_;
  std::vector<int> choice_;  // switch vertices ascending
  bool dead_ = false;
};

// Returns false when fn stopped the enumeration early.
bool enumerate_impl(
    const Dag& d, const RootedDualTree& rt, Budget& budget,
    const std::function<bool(const PlaneEmbedding&, const std::vector<Side>&)>& fn) {
  const int free = static_cast<int>(rt.nodes.size()) - 1;
  if (free >= 40) {
    throw InstanceTooLarge("embedding enumeration over " + std::to_string(free) +
                           " dual nodes");
  }
  std::vector<Side> sides(rt.nodes.size(), Side::in);
  for (long long mask = 0; mask < (1ll << free); ++mask) {
    budget.charge();
    for (int b = 0; b < free; ++b) {
      sides[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? Side::out : Side::in;
    }
    PlaneEmbedding emb = assemble_embedding(d, rt, sides);
    if (!fn(emb, sides)) return false;
  }
  return true;
}

}  // namespace

void enumerate_plane_embeddings(
    const Dag& d, int e,
    const std::function<void(const PlaneEmbedding&, const std::vector<Side>&)>& fn,
    long long budget) {
  OuterplaneEmbedding o = outerplane_embedding(d);
  ExtendedDualTree t = extended_dual_tree(d, o);
  RootedDualTree rt = root_at_edge(d, o, t, e);
  Budget b{budget};
  enumerate_impl(d, rt, b, [&](const PlaneEmbedding& emb, const std::vector<Side>& s) {
    fn(emb, s);
    return true;
  });
}

PairSet brute_feasible_set(const Dag& d, int e, long long budget) {
  OuterplaneEmbedding o = outerplane_embedding(d);
  ExtendedDualTree t = extended_dual_tree(d, o);
  RootedDualTree rt = root_at_edge(d, o, t, e);
  const int lo = std::min(d.edge(e).tail, d.edge(e).head);
  const int hi = std::max(d.edge(e).tail, d.edge(e).head);
  PairSet out;
  Budget b{budget};
  enumerate_impl(d, rt, b, [&](const PlaneEmbedding& emb, const std::vector<Side>&) {
    LabelSearch search(d, emb, b, [&](const AngleLabeling& lab) {
      out.insert({inside_angle(d, emb, lab, lo), inside_angle(d, emb, lab, hi)});
      return out.size() < 9;  // every pair seen, nothing left to learn
    });
    return search.run();
  });
  return out;
}

std::optional<UpwardEmbedding> brute_find_labeling(const Dag& d, int e,
                                                   long long budget) {
  OuterplaneEmbedding o = outerplane_embedding(d);
  ExtendedDualTree t = extended_dual_tree(d, o);
  RootedDualTree rt = root_at_edge(d, o, t, e);
  std::optional<UpwardEmbedding> found;
  Budget b{budget};
  enumerate_impl(d, rt, b, [&](const PlaneEmbedding& emb, const std::vector<Side>&) {
    LabelSearch search(d, emb, b, [&](const AngleLabeling& lab) {
      found = UpwardEmbedding{emb, lab};
      return false;
    });
    return search.run();
  });
  return found;
}

bool brute_test_upward(const Dag& d, long long budget) {
  OuterplaneEmbedding o = outerplane_embedding(d);
  ExtendedDualTree t = extended_dual_tree(d, o);
  Budget b{budget};
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!o.edge_on_outer_face(d, e)) continue;
    RootedDualTree rt = root_at_edge(d, o, t, e);
    bool found = false;
    enumerate_impl(d, rt, b, [&](const PlaneEmbedding& emb, const std::vector<Side>&) {
      LabelSearch search(d, emb, b, [&](const AngleLabeling&) {
        found = true;
        return false;
      });
      return search.run();
    });
    if (found) return true;
  }
  return false;
}

Dag random_outerplanar_dag(std::uint64_t seed, int max_faces, int max_face_len) {
  if (max_faces < 1) throw InvalidInput("max_faces must be at least 1");
  if (max_face_len < 3) throw InvalidInput("max_face_len must be at least 3");
  SplitMix64 rng(seed);
  const int faces = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_faces)));
  const int first = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_face_len - 2)));

  std::vector<std::array<int, 2>> und;
  int nv = first;
  for (int i = 0; i < first; ++i) und.push_back({i, (i + 1) % first});
  // edges still eligible to carry an ear, by index into und
  std::vector<int> boundary(und.size());
  for (std::size_t i = 0; i < und.size(); ++i) boundary[i] = static_cast<int>(i);

  for (int f = 1; f < faces; ++f) {
    const std::size_t pick = static_cast<std::size_t>(rng.below(boundary.size()));
    const int eb = boundary[pick];
    boundary[pick] = boundary.back();
    boundary.pop_back();
    // an ear of p >= 2 edges bounds a new face of length p + 1 with und[eb]
    const int p = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_face_len - 2)));
    int prev = und[static_cast<std::size_t>(eb)][0];
    for (int s = 1; s < p; ++s) {
      const int nxt = nv++;
      boundary.push_back(static_cast<int>(und.size()));
      und.push_back({prev, nxt});
      prev = nxt;
    }
    boundary.push_back(static_cast<int>(und.size()));
    und.push_back({prev, und[static_cast<std::size_t>(eb)][1]});
  }

  // orient every edge along a uniform random vertex order
  std::vector<int> rank(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) rank[static_cast<std::size_t>(i)] = i;
  for (int i = nv - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(rank[static_cast<std::size_t>(i)], rank[static_cast<std::size_t>(j)]);
  }
  std::vector<Edge> edges;
  edges.reserve(und.size());
  for (const auto& uv : und) {
    if (rank[static_cast<std::size_t>(uv[0])] < rank[static_cast<std::size_t>(uv[1])]) {
      edges.push_back({uv[0], uv[1]});
    } else {
      edges.push_back({uv[1], uv[0]});
    }
  }
  Dag d(nv, std::move(edges));
  if (!validate(d).all()) throw InternalError("generated graph fails validation");
  return d;
}

}  // namespace updag

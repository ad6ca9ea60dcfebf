#include "updag/upward.hpp"

namespace updag {

int AngleLabeling::at_face(const PlaneEmbedding& emb, int v, int f) const {
  const int t = emb.corner_on_face(v, f);
  if (t < 0) {
    throw DomainMismatch("vertex " + std::to_string(v) + " has no corner on face " +
                         std::to_string(f));
  }
  return by_corner[v][t];
}

namespace {

std::string corner_name(int v, int f) {
  return "vertex " + std::to_string(v) + ", face " + std::to_string(f);
}

}  // namespace

CheckReport check_upward(const Dag& d, const PlaneEmbedding& emb,
                         const AngleLabeling& lab) {
  const int n = d.vertex_count();
  if (static_cast<int>(lab.by_corner.size()) != n) {
    throw DomainMismatch("labeling covers " + std::to_string(lab.by_corner.size()) +
                         " vertices, embedding has " + std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    if (lab.by_corner[v].size() != emb.rotation[v].size()) {
      throw DomainMismatch("labeling of vertex " + std::to_string(v) +
                           " covers " + std::to_string(lab.by_corner[v].size()) +
                           " corners, embedding has " +
                           std::to_string(emb.rotation[v].size()));
    }
    for (std::int8_t a : lab.by_corner[v]) {
      if (a != -1 && a != 0 && a != 1) {
        throw DomainMismatch("vertex " + std::to_string(v) +
                             " carries a label outside {-1,0,1}");
      }
    }
  }

  CheckReport rep;
  // Face tallies for UP3 are accumulated during the vertex sweep.
  std::vector<int> small_count(emb.face_count(), 0);
  std::vector<int> large_count(emb.face_count(), 0);

  for (int v = 0; v < n; ++v) {
    const std::vector<int>& rot = emb.rotation[v];
    const int deg = static_cast<int>(rot.size());
    int smalls = 0, flats = 0, larges = 0;
    for (int t = 0; t < deg; ++t) {
      const int ea = rot[t];
      const int eb = rot[(t + 1) % deg];
      const int a = lab.by_corner[v][t];
      const bool switch_corner = d.out_of(ea, v) == d.out_of(eb, v);
      if (rep.up0) {
        if (switch_corner && a == 0) {
          rep.up0 = false;
          rep.viol0 = "flat label on a switch corner at " +
                      corner_name(v, emb.corner_face[v][t]);
        } else if (!switch_corner && a != 0) {
          rep.up0 = false;
          rep.viol0 = "nonzero label on a non-switch corner at " +
                      corner_name(v, emb.corner_face[v][t]);
        }
      }
      if (a == -1) {
        ++smalls;
        ++small_count[emb.corner_face[v][t]];
      } else if (a == 1) {
        ++larges;
        ++large_count[emb.corner_face[v][t]];
      } else {
        ++flats;
      }
    }
    if (d.is_switch(v)) {
      if (rep.up1 && !(smalls == deg - 1 && flats == 0 && larges == 1)) {
        rep.up1 = false;
        rep.viol1 = "switch vertex " + std::to_string(v) + " of degree " +
                    std::to_string(deg) + " has " + std::to_string(smalls) +
                    " small / " + std::to_string(flats) + " flat / " +
                    std::to_string(larges) + " large corners";
      }
    } else {
      if (rep.up2 && !(smalls == deg - 2 && flats == 2 && larges == 0)) {
        rep.up2 = false;
        rep.viol2 = "non-switch vertex " + std::to_string(v) + " of degree " +
                    std::to_string(deg) + " has " + std::to_string(smalls) +
                    " small / " + std::to_string(flats) + " flat / " +
                    std::to_string(larges) + " large corners";
      }
    }
  }

  for (int f = 0; f < emb.face_count(); ++f) {
    const int want = f == emb.outer_face ? large_count[f] - 2 : large_count[f] + 2;
    if (small_count[f] != want) {
      rep.up3 = false;
      rep.viol3 = std::string(f == emb.outer_face ? "outer" : "internal") +
                  " face " + std::to_string(f) + " has " +
                  std::to_string(small_count[f]) + " small vs " +
                  std::to_string(large_count[f]) + " large corners";
      break;
    }
  }
  return rep;
}

int inside_angle(const Dag& d, const PlaneEmbedding& emb,
                 const AngleLabeling& lab, int v) {
  (void)d;
  const int t = emb.corner_on_face(v, emb.outer_face);
  if (t < 0) {
    throw NotOnOuterFace("vertex " + std::to_string(v) +
                         " has no corner on the outer face");
  }
  return -static_cast<int>(lab.by_corner[v][t]);
}

}  // namespace updag

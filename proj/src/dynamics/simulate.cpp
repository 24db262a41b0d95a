#include <algorithm>
#include <queue>

#include "tessellate/dynamics/tessellation.hpp"
#include "tessellate/errors.hpp"
#include "tessellate/geom/constants.hpp"
#include "tessellate/rng.hpp"

namespace tessellate::dynamics {

std::vector<std::uint32_t> NestedTessellation::leaf_ids() const {
  std::vector<std::uint32_t> out;
  for (const auto& n : nodes) {
    if (n.is_leaf()) out.push_back(n.id);
  }
  return out;
}

namespace {

using kernels::SplitKernelSpec;
using measure::DrivingMeasure;

struct Event {
  double time;
  std::uint32_t id;
  bool operator>(const Event& o) const {
    if (time != o.time) return time > o.time;
    return id > o.id;
  }
};

using EventQueue =
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>>;

// A cell an erosion kernel can never split is frozen at creation.
bool splittable(const SplitKernelSpec& K, const ConvexPolytope& c) {
  if (K.variant != SplitKernelSpec::Variant::Erosion) return true;
  const double r = K.mode == SplitKernelSpec::ErosionMode::Hard
                       ? K.r_hc
                       : K.r_hc - K.ramp_eps;
  return !geom::erosion(c, r).is_empty();
}

}  // namespace

NestedTessellation simulate_window(const ConvexPolytope& W,
                                   const kernels::SplitKernelSpec& K,
                                   const measure::DrivingMeasure& L, double t,
                                   std::uint64_t seed) {
  NestedTessellation Y;
  Y.window = W;
  Y.horizon = t;
  Y.seed = seed;

  Rng rng(seed);
  EventQueue queue;
  const double eps_vol = geom::kEpsVolRel * W.measure();

  auto add_cell = [&](const ConvexPolytope& poly, double birth,
                      std::uint32_t parent) -> std::uint32_t {
    CellNode node;
    node.id = static_cast<std::uint32_t>(Y.nodes.size());
    node.parent = parent;
    node.birth = birth;
    node.poly = poly;
    const double rate = splittable(K, poly) ? kernel_rate(K, L, poly) : 0.0;
    if (rate > 0.0) {
      node.death = birth + rng.exponential(rate);
      queue.push({node.death, node.id});
    } else {
      node.death = kInfTime;
      node.frozen = true;
      ++Y.frozen_cells;
    }
    Y.nodes.push_back(std::move(node));
    return Y.nodes.back().id;
  };

  add_cell(W, 0.0, kNoCell);

  while (!queue.empty()) {
    const Event ev = queue.top();
    if (ev.time > t) break;  // every remaining event is later
    queue.pop();

    bool split_done = false;
    geom::SplitResult sr;
    Hyperplane plane;
    for (int attempt = 0; attempt < 100 && !split_done; ++attempt) {
      try {
        plane = kernel_sample(K, L, Y.nodes[ev.id].poly, rng);
        sr = geom::split_polytope(Y.nodes[ev.id].poly, plane, eps_vol);
        split_done = true;
      } catch (const UnsplittableCell&) {
        break;
      } catch (const NotSeparating&) {
      } catch (const DegenerateCut&) {
      } catch (const BisectionFailure&) {
      }
    }
    if (!split_done) {
      CellNode& node = Y.nodes[ev.id];
      node.frozen = true;
      node.death = kInfTime;
      ++Y.degenerate_freezes;
      continue;
    }

    const std::uint32_t plus_id = add_cell(sr.plus, ev.time, ev.id);
    const std::uint32_t minus_id = add_cell(sr.minus, ev.time, ev.id);
    CellNode& node = Y.nodes[ev.id];
    node.children = {plus_id, minus_id};
    node.split_plane = plane;
    Y.maximal_polytopes.push_back({sr.facet, ev.time, ev.id});
  }

  return Y;
}

NestedTessellation time_restrict(const NestedTessellation& Y, double s) {
  NestedTessellation out;
  out.window = Y.window;
  out.horizon = s;
  out.seed = Y.seed;
  out.frozen_cells = 0;
  out.degenerate_freezes = Y.degenerate_freezes;

  for (const auto& n : Y.nodes) {
    if (n.birth > s) continue;
    CellNode m = n;
    if (m.death > s) {
      // Alive at s: becomes a leaf, pending death kept.
      m.children = {kNoCell, kNoCell};
      m.split_plane.reset();
    }
    if (m.frozen) ++out.frozen_cells;
    out.nodes.push_back(std::move(m));
  }
  for (const auto& mp : Y.maximal_polytopes) {
    if (mp.birth <= s) out.maximal_polytopes.push_back(mp);
  }
  return out;
}

namespace {

// Attaches the copy subtree rooted at copy_id onto host node host_id whose
// polytope is `region`, shifting times by t1. Splits that do not separate
// the region are skipped by descending into the side containing it.
void graft(NestedTessellation& out, std::uint32_t host_id,
           const NestedTessellation& copy, std::uint32_t copy_id, double t1,
           double eps_vol) {
  const CellNode* cnode = &copy.nodes[copy_id];
  const ConvexPolytope& region = out.nodes[host_id].poly;

  while (true) {
    if (cnode->is_leaf()) {
      CellNode& host = out.nodes[host_id];
      host.death =
          cnode->death == kInfTime ? kInfTime : t1 + cnode->death;
      host.frozen = cnode->frozen;
      return;
    }
    geom::SplitResult sr;
    try {
      sr = geom::split_polytope(region, *cnode->split_plane, eps_vol);
    } catch (const NotSeparating&) {
      // Region lies on one side; descend.
      const double sd = cnode->split_plane->signed_distance(
          region.barycenter());
      cnode = &copy.nodes[cnode->children[sd > 0.0 ? 0 : 1]];
      continue;
    }

    const double when = t1 + cnode->death;
    std::uint32_t plus_id, minus_id;
    {
      CellNode plus_node;
      plus_node.id = static_cast<std::uint32_t>(out.nodes.size());
      plus_node.parent = host_id;
      plus_node.birth = when;
      plus_node.poly = sr.plus;
      plus_id = plus_node.id;
      out.nodes.push_back(std::move(plus_node));
      CellNode minus_node;
      minus_node.id = static_cast<std::uint32_t>(out.nodes.size());
      minus_node.parent = host_id;
      minus_node.birth = when;
      minus_node.poly = sr.minus;
      minus_id = minus_node.id;
      out.nodes.push_back(std::move(minus_node));
    }
    CellNode& host = out.nodes[host_id];
    host.children = {plus_id, minus_id};
    host.split_plane = *cnode->split_plane;
    host.death = when;
    out.maximal_polytopes.push_back({sr.facet, when, host_id});

    graft(out, plus_id, copy, cnode->children[0], t1, eps_vol);
    graft(out, minus_id, copy, cnode->children[1], t1, eps_vol);
    return;
  }
}

}  // namespace

NestedTessellation iterate(const NestedTessellation& host,
                           const CopyFactory& factory) {
  NestedTessellation out = host;
  const double t1 = host.horizon;
  const double eps_vol = geom::kEpsVolRel * host.window.measure();

  const std::vector<std::uint32_t> leaves = host.leaf_ids();
  double t2 = 0.0;
  for (std::size_t li = 0; li < leaves.size(); ++li) {
    const NestedTessellation copy = factory(host.nodes[leaves[li]].poly, li);
    t2 = std::max(t2, copy.horizon);
    graft(out, leaves[li], copy, 0, t1, eps_vol);
  }
  out.horizon = t1 + t2;
  return out;
}

const CellNode& leaf_containing(const NestedTessellation& Y,
                                const Vec& probe) {
  const double tol = 1e-12 * (1.0 + Y.window.diameter());
  if (!Y.window.contains(probe, -tol)) {
    throw OriginOutsideWindow("probe point is not interior to the window");
  }
  const CellNode* node = &Y.nodes[0];
  while (!node->is_leaf()) {
    const double sd = node->split_plane->signed_distance(probe);
    node = &Y.nodes[node->children[sd > 0.0 ? 0 : 1]];
  }
  return *node;
}

const CellNode& zero_cell(const NestedTessellation& Y) {
  return leaf_containing(Y, Vec{0.0, 0.0, 0.0});
}

std::vector<const CellNode*> leaf_cells(const NestedTessellation& Y) {
  std::vector<const CellNode*> out;
  for (const auto& n : Y.nodes) {
    if (n.is_leaf()) out.push_back(&n);
  }
  return out;
}

}  // namespace tessellate::dynamics

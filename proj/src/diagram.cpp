#include "linkpos/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace linkpos {

namespace {

// Union-find over arbitrary arc identifiers.
class Dsu {
 public:
  explicit Dsu(const std::vector<int>& items) {
    for (int x : items) parent_.emplace(x, x);
  }

  int find(int x) {
    int r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      int nxt = parent_[x];
      parent_[x] = r;
      x = nxt;
    }
    return r;
  }

  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

  int class_count() {
    int n = 0;
    for (const auto& [x, _] : parent_)
      if (find(x) == x) ++n;
    return n;
  }

 private:
  std::unordered_map<int, int> parent_;
};

std::vector<int> all_arcs(const LinkDiagram& d) {
  std::vector<int> out;
  for (const auto& cyc : d.components) out.insert(out.end(), cyc.begin(), cyc.end());
  return out;
}

// successor arc along the orientation; throws on duplicate arcs.
std::unordered_map<int, int> successor_map(const LinkDiagram& d) {
  std::unordered_map<int, int> succ;
  for (const auto& cyc : d.components) {
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
      if (succ.count(cyc[i]))
        throw Error(ErrorKind::MalformedPD,
                    "arc " + std::to_string(cyc[i]) +
                        " appears twice in components");
      succ[cyc[i]] = cyc[(i + 1) % n];
    }
  }
  return succ;
}

std::vector<int> derive_signs(const LinkDiagram& d) {
  auto succ = successor_map(d);
  std::vector<int> out;
  out.reserve(d.crossings.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    for (int arc : {a, b, c, dd})
      if (!succ.count(arc))
        throw Error(ErrorKind::MalformedPD,
                    "crossing " + std::to_string(ci) + " uses unknown arc " +
                        std::to_string(arc));
    bool over_db = succ[dd] == b;
    bool over_bd = succ[b] == dd;
    if (over_db && over_bd)
      throw Error(ErrorKind::OrientationInconsistent,
                  "crossing " + std::to_string(ci) +
                      ": sign ambiguous from cycles, supply signs");
    if (over_db)
      out.push_back(1);
    else if (over_bd)
      out.push_back(-1);
    else
      throw Error(ErrorKind::OrientationInconsistent,
                  "crossing " + std::to_string(ci) +
                      ": over-strand not oriented by the cycles");
  }
  return out;
}

void validate(const LinkDiagram& d) {
  auto succ = successor_map(d);
  std::unordered_map<int, int> use;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    for (int arc : d.crossings[ci]) {
      if (!succ.count(arc))
        throw Error(ErrorKind::MalformedPD,
                    "crossing " + std::to_string(ci) + " uses unknown arc " +
                        std::to_string(arc));
      use[arc] += 1;
    }
  }
  for (const auto& [arc, k] : use)
    if (k != 2)
      throw Error(ErrorKind::ArcDegreeError,
                  "arc " + std::to_string(arc) + " has degree " +
                      std::to_string(k) + " (want 2)");
  for (const auto& cyc : d.components) {
    bool unused = false;
    for (int a : cyc)
      if (!use.count(a)) unused = true;
    if (unused && cyc.size() != 1)
      throw Error(ErrorKind::MalformedPD,
                  "crossingless arc inside a multi-arc cycle");
  }
  if (d.signs.size() != d.crossings.size())
    throw Error(ErrorKind::MalformedPD, "sign count mismatch");
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    if (succ[a] != c)
      throw Error(ErrorKind::OrientationInconsistent,
                  "crossing " + std::to_string(ci) +
                      ": under-arc successor of " + std::to_string(a) +
                      " is not " + std::to_string(c));
    int s = d.signs[ci];
    if (s != 1 && s != -1)
      throw Error(ErrorKind::MalformedPD,
                  "crossing " + std::to_string(ci) + ": sign must be +1 or -1");
    if (s > 0 && succ[dd] != b)
      throw Error(ErrorKind::OrientationInconsistent,
                  "crossing " + std::to_string(ci) +
                      ": sign + inconsistent with cycles");
    if (s < 0 && succ[b] != dd)
      throw Error(ErrorKind::OrientationInconsistent,
                  "crossing " + std::to_string(ci) +
                      ": sign - inconsistent with cycles");
  }
}

std::unordered_map<int, int> arc_component(const LinkDiagram& d) {
  std::unordered_map<int, int> m;
  for (size_t i = 0; i < d.components.size(); ++i)
    for (int a : d.components[i]) m[a] = static_cast<int>(i);
  return m;
}

// Resolve every crossing: oriented smoothing where smooth(sign) holds,
// 4-valent flattening otherwise; returns the circle count.
template <typename Pred>
int circle_count(const LinkDiagram& d, Pred smooth) {
  Dsu dsu(all_arcs(d));
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    int s = d.signs[ci];
    if (smooth(s)) {
      if (s > 0) {
        dsu.unite(a, b);
        dsu.unite(c, dd);
      } else {
        dsu.unite(a, dd);
        dsu.unite(b, c);
      }
    } else {
      dsu.unite(a, b);
      dsu.unite(b, c);
      dsu.unite(c, dd);
    }
  }
  return dsu.class_count();
}

// Seifert graph: one vertex per circle of the oriented resolution (only
// circles that meet a crossing), one signed edge per crossing.
struct SeifertGraphData {
  int vertices = 0;
  std::vector<std::array<int, 3>> edges;  // u, v, sign
};

SeifertGraphData seifert_graph(const LinkDiagram& d) {
  Dsu dsu(all_arcs(d));
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    if (d.signs[ci] > 0) {
      dsu.unite(a, b);
      dsu.unite(c, dd);
    } else {
      dsu.unite(a, dd);
      dsu.unite(b, c);
    }
  }
  std::vector<int> arcs = all_arcs(d);
  std::sort(arcs.begin(), arcs.end());
  std::unordered_map<int, int> circ;
  for (int a : arcs) {
    int r = dsu.find(a);
    if (!circ.count(r)) circ.emplace(r, static_cast<int>(circ.size()));
  }
  SeifertGraphData g;
  g.vertices = static_cast<int>(circ.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    int s = d.signs[ci];
    int u = circ[dsu.find(a)];
    int v = circ[dsu.find(s > 0 ? c : b)];
    if (u == v)
      throw Error(ErrorKind::MalformedPD,
                  "Seifert graph loop edge: reduce the curl at crossing " +
                      std::to_string(ci));
    g.edges.push_back({u, v, s});
  }
  return g;
}

// 2-connected blocks (edge sets) of an undirected multigraph, iterative DFS.
std::vector<std::vector<int>> biconnected_blocks(
    int nv, const std::vector<std::array<int, 3>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (size_t ei = 0; ei < edges.size(); ++ei) {
    adj[edges[ei][0]].push_back({edges[ei][1], static_cast<int>(ei)});
    adj[edges[ei][1]].push_back({edges[ei][0], static_cast<int>(ei)});
  }
  std::vector<bool> visited(nv, false);
  std::vector<int> depth(nv, 0), low(nv, 0);
  std::vector<std::vector<int>> blocks;
  struct Frame {
    int v;
    int parent_edge;
    size_t next;
  };
  for (int root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::vector<Frame> stack{{root, -1, 0}};
    std::vector<int> estack;
    while (!stack.empty()) {
      Frame& f = stack.back();
      bool advanced = false;
      while (f.next < adj[f.v].size()) {
        auto [w, ei] = adj[f.v][f.next];
        ++f.next;
        if (ei == f.parent_edge) continue;
        if (!visited[w]) {
          estack.push_back(ei);
          visited[w] = true;
          depth[w] = depth[f.v] + 1;
          low[w] = depth[w];
          stack.push_back({w, ei, 0});
          advanced = true;
          break;
        }
        if (depth[w] < depth[f.v]) {
          estack.push_back(ei);
          low[f.v] = std::min(low[f.v], depth[w]);
        }
      }
      if (advanced) continue;
      Frame done = stack.back();
      stack.pop_back();
      if (!stack.empty()) {
        int u = stack.back().v;
        low[u] = std::min(low[u], low[done.v]);
        if (low[done.v] >= depth[u]) {
          std::vector<int> blk;
          while (true) {
            int ei = estack.back();
            estack.pop_back();
            blk.push_back(ei);
            if (ei == done.parent_edge) break;
          }
          blocks.push_back(std::move(blk));
        }
      }
    }
  }
  return blocks;
}

}  // namespace

LinkDiagram make_diagram(std::vector<std::array<int, 4>> crossings,
                         std::vector<std::vector<int>> components,
                         std::vector<int> signs) {
  LinkDiagram d{std::move(crossings), std::move(components), std::move(signs)};
  if (d.signs.empty() && !d.crossings.empty()) d.signs = derive_signs(d);
  validate(d);
  return d;
}

DiagramProfile diagram_profile(const LinkDiagram& d) {
  validate(d);
  auto comp = arc_component(d);
  DiagramProfile p;
  p.components_count = static_cast<int>(d.components.size());
  p.crossings_count = static_cast<int>(d.crossings.size());
  p.writhe = std::accumulate(d.signs.begin(), d.signs.end(), 0);
  p.seifert_circles = circle_count(d, [](int) { return true; });
  p.s_plus = circle_count(d, [](int s) { return s < 0; });
  p.s_minus = circle_count(d, [](int s) { return s > 0; });
  p.flatten_circles = circle_count(d, [](int) { return false; });

  int l = p.components_count;
  std::vector<std::vector<int>> lk(l, std::vector<int>(l, 0));
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    int cu = comp[d.crossings[ci][0]];
    int co = comp[d.crossings[ci][1]];
    if (cu == co) continue;
    int i = std::min(cu, co), j = std::max(cu, co);
    int s = d.signs[ci];
    lk[i][j] += s;
    lk[j][i] += s;
    auto& pc = p.mixed[{i, j}];
    (s > 0 ? pc.positive : pc.negative) += 1;
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (lk[i][j] % 2 != 0)
        throw Error(ErrorKind::OddMixedCount,
                    "odd mixed crossing count between components " +
                        std::to_string(i) + "," + std::to_string(j));
      lk[i][j] /= 2;
    }
  p.linking = LinkingMatrix{std::move(lk)};
  p.lk_total = p.linking.total();

  // Alternation: each arc ends at exactly one crossing; record whether that
  // passage goes over or under and scan every cycle for repeats.
  std::unordered_map<int, char> passages;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    passages[a] = 'U';
    passages[d.signs[ci] > 0 ? dd : b] = 'O';
  }
  p.is_alternating = true;
  for (const auto& cyc : d.components) {
    std::vector<char> seq;
    for (int a : cyc)
      if (passages.count(a)) seq.push_back(passages[a]);
    for (size_t i = 0; i < seq.size(); ++i)
      if (seq[i] == seq[(i + 1) % seq.size()]) p.is_alternating = false;
  }

  p.is_positive =
      std::all_of(d.signs.begin(), d.signs.end(), [](int s) { return s > 0; });
  p.is_simply_linked = true;
  for (const auto& [pair, pc] : p.mixed)
    if (pc.positive != 0 && pc.negative != 0) p.is_simply_linked = false;

  Dsu dsu(all_arcs(d));
  for (const auto& [a, b, c, dd] : d.crossings) {
    dsu.unite(a, b);
    dsu.unite(b, c);
    dsu.unite(c, dd);
  }
  std::vector<int> reps;
  for (const auto& cyc : d.components) reps.push_back(dsu.find(cyc[0]));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  p.is_connected = reps.size() == 1;
  return p;
}

LinkDiagram delete_components(const LinkDiagram& d,
                              const std::vector<int>& keep) {
  std::vector<int> keep_idxs(keep);
  std::sort(keep_idxs.begin(), keep_idxs.end());
  keep_idxs.erase(std::unique(keep_idxs.begin(), keep_idxs.end()),
                  keep_idxs.end());
  if (keep_idxs.empty())
    throw Error(ErrorKind::EmptySelection, "empty keep selection");
  for (int i : keep_idxs)
    if (i < 0 || i >= static_cast<int>(d.components.size()))
      throw Error(ErrorKind::UnknownComponent,
                  "component " + std::to_string(i) + " does not exist");
  auto comp = arc_component(d);
  std::vector<bool> kept(d.components.size(), false);
  for (int i : keep_idxs) kept[i] = true;
  std::vector<int> kept_arcs;
  for (int i : keep_idxs)
    kept_arcs.insert(kept_arcs.end(), d.components[i].begin(),
                     d.components[i].end());
  Dsu dsu(kept_arcs);
  std::vector<std::array<int, 4>> new_cross;
  std::vector<int> new_signs;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    bool ku = kept[comp[a]], ko = kept[comp[b]];
    if (ku && ko) {
      new_cross.push_back(d.crossings[ci]);
      new_signs.push_back(d.signs[ci]);
    } else if (ku) {
      dsu.unite(a, c);  // splice the under strand through
    } else if (ko) {
      dsu.unite(b, dd);  // splice the over strand through
    }
  }
  for (auto& cr : new_cross)
    for (int& x : cr) x = dsu.find(x);
  std::unordered_map<int, bool> used;
  for (const auto& cr : new_cross)
    for (int x : cr) used[x] = true;
  std::vector<std::vector<int>> comps;
  for (int i : keep_idxs) {
    // splices glue consecutive arcs, so each class is one cyclic run
    std::vector<int> dedup;
    for (int a : d.components[i]) {
      int r = dsu.find(a);
      if (!used.count(r)) continue;
      if (dedup.empty() || dedup.back() != r) dedup.push_back(r);
    }
    if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.empty()) dedup.push_back(dsu.find(d.components[i][0]));
    comps.push_back(std::move(dedup));
  }
  return make_diagram(std::move(new_cross), std::move(comps),
                      std::move(new_signs));
}

LinkDiagram mirror_diagram(const LinkDiagram& d) {
  // Over and under swap everywhere: rotation order is kept, signs negate.
  std::vector<std::array<int, 4>> cross;
  std::vector<int> signs;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& [a, b, c, dd] = d.crossings[ci];
    if (d.signs[ci] > 0)
      cross.push_back({dd, a, b, c});
    else
      cross.push_back({b, c, dd, a});
    signs.push_back(-d.signs[ci]);
  }
  return make_diagram(std::move(cross), d.components, std::move(signs));
}

LinkDiagram reverse_components(const LinkDiagram& d,
                               const std::vector<int>& comps_in) {
  std::vector<bool> rev(d.components.size(), false);
  for (int i : comps_in) {
    if (i < 0 || i >= static_cast<int>(d.components.size()))
      throw Error(ErrorKind::UnknownComponent,
                  "component " + std::to_string(i) + " does not exist");
    rev[i] = true;
  }
  auto comp = arc_component(d);
  std::vector<std::array<int, 4>> cross;
  std::vector<int> signs;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    auto [a, b, c, dd] = d.crossings[ci];
    bool ru = rev[comp[a]], ro = rev[comp[b]];
    if (ru) std::tie(a, b, c, dd) = std::tuple(c, dd, a, b);
    cross.push_back({a, b, c, dd});
    signs.push_back(ru != ro ? -d.signs[ci] : d.signs[ci]);
  }
  std::vector<std::vector<int>> comps;
  for (size_t i = 0; i < d.components.size(); ++i) {
    std::vector<int> cyc = d.components[i];
    if (rev[i]) std::reverse(cyc.begin(), cyc.end());
    comps.push_back(std::move(cyc));
  }
  return make_diagram(std::move(cross), std::move(comps), std::move(signs));
}

LinkDiagram transform_diagram(const LinkDiagram& d, bool mirror,
                              const std::vector<int>& reverse_set) {
  LinkDiagram out = reverse_set.empty() ? d : reverse_components(d, reverse_set);
  if (mirror) out = mirror_diagram(out);
  return out;
}

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
  int off = 0;
  for (int a : all_arcs(d1)) off = std::max(off, a);
  off += 1;
  std::vector<std::array<int, 4>> cross = d1.crossings;
  for (const auto& cr : d2.crossings)
    cross.push_back({cr[0] + off, cr[1] + off, cr[2] + off, cr[3] + off});
  std::vector<std::vector<int>> comps = d1.components;
  for (const auto& cyc : d2.components) {
    std::vector<int> shifted;
    for (int a : cyc) shifted.push_back(a + off);
    comps.push_back(std::move(shifted));
  }
  std::vector<int> signs = d1.signs;
  signs.insert(signs.end(), d2.signs.begin(), d2.signs.end());
  return make_diagram(std::move(cross), std::move(comps), std::move(signs));
}

const char* fibred_verdict_name(FibredVerdict v) {
  switch (v) {
    case FibredVerdict::FIBRED: return "FIBRED";
    case FibredVerdict::NOT_FIBRED: return "NOT_FIBRED";
    case FibredVerdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

SeifertReport seifert_analysis(const LinkDiagram& d) {
  DiagramProfile p = diagram_profile(d);
  SeifertGraphData g = seifert_graph(d);
  auto blocks = biconnected_blocks(g.vertices, g.edges);
  SeifertReport r;
  r.block_count = static_cast<int>(blocks.size());
  r.is_homogeneous = true;
  for (const auto& blk : blocks) {
    int first = g.edges[blk[0]][2];
    for (int ei : blk)
      if (g.edges[ei][2] != first) r.is_homogeneous = false;
  }
  std::vector<std::pair<int, int>> reduced;
  for (const auto& e : g.edges)
    reduced.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  // crossingless circles count as isolated vertices of the reduced graph
  r.vertices = p.seifert_circles;
  r.reduced_edges = static_cast<int>(reduced.size());
  r.reduced_is_tree = p.is_connected && r.reduced_edges == r.vertices - 1;
  if (p.is_positive)
    r.fibred_positive_verdict =
        r.reduced_is_tree ? FibredVerdict::FIBRED : FibredVerdict::NOT_FIBRED;
  else
    r.fibred_positive_verdict = FibredVerdict::NOT_APPLICABLE;
  return r;
}

// ---------------------------------------------------------------------------
// Braid closure

namespace {

struct ClosureArcs {
  // touches[p] = letter indices crossing strand position p, top to bottom.
  std::vector<std::vector<int>> touches;
  // arc_id[(p, g)] = arc on position p after its g-th touch (cyclically).
  std::unordered_map<long long, int> arc_id;

  static long long key(int p, int g) { return 1000000LL * p + g; }
  int id(int p, int g) const { return arc_id.at(key(p, g)); }
};

ClosureArcs closure_arcs(const BraidWord& b) {
  ClosureArcs ca;
  ca.touches.assign(b.strands + 1, {});
  for (size_t t = 0; t < b.letters.size(); ++t) {
    int i = std::abs(b.letters[t]);
    ca.touches[i].push_back(static_cast<int>(t));
    ca.touches[i + 1].push_back(static_cast<int>(t));
  }
  int nid = 1;
  for (int p = 1; p <= b.strands; ++p) {
    int slots = std::max<int>(static_cast<int>(ca.touches[p].size()), 1);
    for (int g = 0; g < slots; ++g) ca.arc_id[ClosureArcs::key(p, g)] = nid++;
  }
  return ca;
}

}  // namespace

LinkDiagram braid_closure(const BraidWord& b) {
  validate_braid(b);
  ClosureArcs ca = closure_arcs(b);
  std::vector<int> counter(b.strands + 2, 0);
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;
  for (int j : b.letters) {
    int i = std::abs(j);
    int gi = counter[i]++;
    int gj = counter[i + 1]++;
    int ti = static_cast<int>(ca.touches[i].size());
    int tj = static_cast<int>(ca.touches[i + 1].size());
    int in_i = ca.id(i, gi);
    int out_i = ca.id(i, (gi + 1) % ti);
    int in_j = ca.id(i + 1, gj);
    int out_j = ca.id(i + 1, (gj + 1) % tj);
    if (j > 0) {
      crossings.push_back({in_i, out_i, out_j, in_j});
      signs.push_back(1);
    } else {
      crossings.push_back({in_j, in_i, out_i, out_j});
      signs.push_back(-1);
    }
  }
  std::vector<std::vector<int>> comps;
  for (const auto& cyc : braid_profile(b).component_cycles) {
    int start = cyc[0];
    std::vector<int> arcs{ca.id(start, 0)};
    if (!ca.touches[start].empty()) {
      int cur_p = start, cur_g = 0;
      while (true) {
        int t = ca.touches[cur_p][cur_g];
        int i = std::abs(b.letters[t]);
        int other = (cur_p == i) ? i + 1 : i;
        int g_other = -1;
        for (size_t q = 0; q < ca.touches[other].size(); ++q)
          if (ca.touches[other][q] == t) {
            g_other = static_cast<int>(q);
            break;
          }
        int to = static_cast<int>(ca.touches[other].size());
        cur_p = other;
        cur_g = (g_other + 1) % to;
        if (cur_p == start && cur_g == 0) break;
        arcs.push_back(ca.id(cur_p, cur_g));
      }
    }
    comps.push_back(std::move(arcs));
  }
  return make_diagram(std::move(crossings), std::move(comps),
                      std::move(signs));
}

// ---------------------------------------------------------------------------
// Unoriented twist-box builder (rational chains)
//
// Ports per crossing in clockwise order: (NW, NE, SE, SW). The two strands
// run NW<->SE and NE<->SW; over_diag 0 means the NW-SE strand is on top.
// Signs are derived geometrically after the component walk fixes directions.

namespace {

// travel direction (dx, dy) when entering at port s: in at NW heads SE.
constexpr int kDirVec[4][2] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};

class UnorientedBuilder {
 public:
  int new_arc() { return next_arc_++; }

  void add_crossing(int nw, int ne, int se, int sw, int over_diag) {
    crossings_.push_back({nw, ne, se, sw});
    over_.push_back(over_diag);
  }

  LinkDiagram finalize(const std::vector<std::pair<int, int>>& merges) {
    std::vector<int> arcs;
    for (int a = 1; a < next_arc_; ++a) arcs.push_back(a);
    Dsu dsu(arcs);
    for (const auto& [a, b] : merges) dsu.unite(a, b);
    std::vector<std::array<int, 4>> cross;
    for (const auto& cr : crossings_) {
      std::array<int, 4> m{};
      for (int s = 0; s < 4; ++s) m[s] = dsu.find(cr[s]);
      cross.push_back(m);
    }
    std::map<int, std::vector<std::pair<int, int>>> end_at;  // arc -> (ci, slot)
    for (size_t ci = 0; ci < cross.size(); ++ci)
      for (int s = 0; s < 4; ++s)
        end_at[cross[ci][s]].push_back({static_cast<int>(ci), s});
    for (const auto& [arc, es] : end_at)
      if (es.size() != 2)
        throw Error(ErrorKind::ArcDegreeError,
                    "builder arc " + std::to_string(arc) + " has degree " +
                        std::to_string(es.size()));
    // Walk the components, recording the travel direction of every end.
    std::map<std::pair<int, int>, bool> entering;
    std::vector<std::vector<int>> comps;
    std::map<int, bool> seen;
    for (const auto& [arc0, ends0] : end_at) {
      if (seen.count(arc0)) continue;
      std::vector<int> cyc;
      int arc = arc0;
      auto [ci, s] = ends0[0];
      while (!seen.count(arc)) {
        cyc.push_back(arc);
        seen[arc] = true;
        entering[{ci, s}] = true;
        int s2 = (s + 2) % 4;
        entering[{ci, s2}] = false;
        int nxt = cross[ci][s2];
        const auto& es = end_at.at(nxt);
        std::pair<int, int> from{ci, s2};
        std::pair<int, int> to = (es[0] == from) ? es[1] : es[0];
        ci = to.first;
        s = to.second;
        arc = nxt;
      }
      comps.push_back(std::move(cyc));
    }
    // Orient and sign each crossing from the walk directions.
    std::vector<std::array<int, 4>> pd;
    std::vector<int> signs;
    for (size_t ci = 0; ci < cross.size(); ++ci) {
      int under0 = over_[ci] == 0 ? 1 : 0;  // under strand slots
      int under1 = under0 + 2;
      int over0 = over_[ci] == 0 ? 0 : 1;
      int over1 = over0 + 2;
      int u_in = entering[{static_cast<int>(ci), under0}] ? under0 : under1;
      int o_in = entering[{static_cast<int>(ci), over0}] ? over0 : over1;
      const int* du = kDirVec[u_in];
      const int* dofs = kDirVec[o_in];
      int s = (du[0] * dofs[1] - du[1] * dofs[0]) > 0 ? 1 : -1;
      std::array<int, 4> rot{};
      for (int k = 0; k < 4; ++k) rot[k] = cross[ci][(u_in + k) % 4];
      pd.push_back(rot);
      signs.push_back(s);
    }
    return make_diagram(std::move(pd), std::move(comps), std::move(signs));
  }

 private:
  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> over_;
  int next_arc_ = 1;
};

}  // namespace

LinkDiagram make_rational(const std::vector<int>& boxes) {
  // Twist boxes alternate right/bottom attachment; the numerator closure
  // demands the final box on the right, so the start is chosen by parity.
  std::string mode = (boxes.size() % 2 == 1) ? "right" : "bottom";
  UnorientedBuilder b;
  int s1 = b.new_arc();
  int s2 = b.new_arc();
  int nw, ne, se, sw;
  if (mode == "right") {
    nw = s1; ne = s1;  // two horizontal strands
    sw = s2; se = s2;
  } else {
    nw = s1; sw = s1;  // two vertical strands
    ne = s2; se = s2;
  }
  for (int count : boxes) {
    int hand = count >= 0 ? 0 : 1;
    for (int q = 0; q < std::abs(count); ++q) {
      if (mode == "right") {
        int ne2 = b.new_arc(), se2 = b.new_arc();
        b.add_crossing(ne, ne2, se2, se, hand);
        ne = ne2;
        se = se2;
      } else {
        int sw2 = b.new_arc(), se2 = b.new_arc();
        b.add_crossing(sw, se, se2, sw2, hand);
        sw = sw2;
        se = se2;
      }
    }
    mode = (mode == "right") ? "bottom" : "right";
  }
  return b.finalize({{nw, ne}, {sw, se}});
}

// ---------------------------------------------------------------------------
// PD text round trip

std::string serialize_pd(const LinkDiagram& d) {
  std::unordered_map<int, int> order;
  for (const auto& cyc : d.components)
    for (int a : cyc)
      if (!order.count(a)) order.emplace(a, static_cast<int>(order.size()) + 1);
  std::vector<std::pair<std::array<int, 4>, int>> cross;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    std::array<int, 4> m{};
    for (int k = 0; k < 4; ++k) m[k] = order[d.crossings[ci][k]];
    cross.push_back({m, d.signs[ci]});
  }
  std::sort(cross.begin(), cross.end());
  std::string out;
  for (size_t i = 0; i < cross.size(); ++i) {
    if (i) out += " ";
    const auto& m = cross[i].first;
    out += "X[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]";
  }
  out += " components: ";
  for (const auto& cyc : d.components) {
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(order[cyc[i]]);
    }
    out += ")";
  }
  if (!cross.empty()) {
    out += " signs:";
    for (const auto& [m, s] : cross) out += (s > 0) ? " +" : " -";
  }
  return out;
}

LinkDiagram parse_pd(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&](const char* what) {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw Error(ErrorKind::MalformedPD,
                  std::string("expected ") + what + " at offset " +
                      std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw Error(ErrorKind::MalformedPD,
                  std::string("expected '") + c + "' at offset " +
                      std::to_string(pos));
    ++pos;
  };

  std::vector<std::array<int, 4>> crossings;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'X') break;
    ++pos;
    expect('[');
    std::array<int, 4> cr{};
    for (int k = 0; k < 4; ++k) {
      cr[k] = parse_int("arc number");
      if (k < 3) expect(',');
    }
    expect(']');
    crossings.push_back(cr);
  }

  skip_ws();
  const std::string kComponents = "components:";
  if (text.compare(pos, kComponents.size(), kComponents) != 0)
    throw Error(ErrorKind::MalformedPD, "missing components clause");
  pos += kComponents.size();

  std::vector<std::vector<int>> comps;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') break;
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      cyc.push_back(parse_int("arc number"));
    }
    if (cyc.empty())
      throw Error(ErrorKind::MalformedPD, "empty component cycle");
    comps.push_back(std::move(cyc));
  }
  if (comps.empty())
    throw Error(ErrorKind::MalformedPD, "missing component cycles");

  std::vector<int> signs;
  skip_ws();
  const std::string kSigns = "signs:";
  if (text.compare(pos, kSigns.size(), kSigns) == 0) {
    pos += kSigns.size();
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] == '+')
        signs.push_back(1);
      else if (text[pos] == '-')
        signs.push_back(-1);
      else
        throw Error(ErrorKind::MalformedPD,
                    "bad sign token at offset " + std::to_string(pos));
      ++pos;
    }
  }
  skip_ws();
  if (pos < text.size())
    throw Error(ErrorKind::MalformedPD,
                "trailing text at offset " + std::to_string(pos));
  return make_diagram(std::move(crossings), std::move(comps),
                      std::move(signs));
}

}  // namespace linkpos

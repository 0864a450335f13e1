#include <algorithm>
#include <functional>

#include "pdpc_internal.hpp"

namespace weldpath::detail {

bool all_pairs(std::size_t) { return true; }

std::vector<Vertex> sources_in(const Frame& f, const LayerEntry& e) {
  std::vector<Vertex> out;
  for (std::size_t p : e.S) out.push_back(f.sl[p].s);
  return out;
}

std::vector<Vertex> targets_in(const Frame& f, const LayerEntry& e) {
  std::vector<Vertex> out;
  for (std::size_t p : e.T) out.push_back(f.sl[p].t);
  return out;
}

void connect_split(Frame& f, const LayerStats& st, std::size_t bound,
                   const std::function<bool(std::size_t)>& want) {
  for (std::size_t p = 0; p < f.n(); ++p) {
    if (!want(p)) continue;
    const std::size_t js = f.layer(f.sl[p].s);
    const std::size_t jt = f.layer(f.sl[p].t);
    if (js == jt) continue;
    std::vector<Vertex> forbidden = targets_in(f, st.layers[js]);
    for (const Slot& q : f.sl) {
      if (q.v != kNoVertex && f.layer(q.v) == js) forbidden.push_back(q.v);
      if (q.u != kNoVertex && f.layer(q.u) == jt) forbidden.push_back(f.partner(q.u, js));
    }
    for (Vertex x : sources_in(f, st.layers[jt])) forbidden.push_back(f.partner(x, js));
    const Vertex v = f.pick(js, f.dst(), std::move(forbidden), bound);
    f.sl[p].v = v;
    f.sl[p].u = f.partner(v, jt);
    f.record_connector(v, f.sl[p].u);
  }
}

void cover_layers(Frame& f, std::initializer_list<std::size_t> skip,
                  const std::function<bool(std::size_t)>& want, Pieces& pc) {
  for (std::size_t j = 0; j < f.num_layers(); ++j) {
    if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
    PairSpec ps;
    std::vector<std::pair<std::size_t, int>> who;
    for (std::size_t p = 0; p < f.n(); ++p) {
      if (!want(p)) continue;
      const Slot& q = f.sl[p];
      const std::size_t ls = f.layer(q.s);
      const std::size_t lt = f.layer(q.t);
      if (ls == j && lt == j) {
        ps.push_back({q.s, q.t});
        who.emplace_back(p, 0);
      } else if (ls == j) {
        require(q.v != kNoVertex, "split pair without a connector");
        ps.push_back({q.s, q.v});
        who.emplace_back(p, 0);
      } else if (lt == j) {
        require(q.u != kNoVertex, "split pair without a connector");
        ps.push_back({q.u, q.t});
        who.emplace_back(p, 1);
      }
    }
    if (ps.empty()) continue;
    PathCover c = f.cover(j, ps);
    for (std::size_t k = 0; k < who.size(); ++k) {
      (who[k].second == 0 ? pc.s : pc.t)[who[k].first] = std::move(c[k]);
    }
  }
}

std::size_t full_layer(const LayerStats& st, std::size_t n, std::size_t which) {
  for (std::size_t j = 0; j < st.layers.size(); ++j) {
    if (st.layers[j].w == n && which-- == 0) return j;
  }
  fail("expected layer touching every pair is missing");
}

PathCover prop_case1(Frame& f) {
  f.set_case("1");
  const std::size_t n = f.n();
  const LayerStats st = f.stats();
  connect_split(f, st, n >= 2 ? 2 * n - 4 : 0, all_pairs);
  Pieces pc(n);
  cover_layers(f, {}, all_pairs, pc);
  PathCover paths;
  for (std::size_t p = 0; p < n; ++p) paths.push_back(f.chain({pc.s[p], pc.t[p]}));
  return f.finish(std::move(paths));
}

PathCover prop_case2(Frame& f) {
  f.set_case("2");
  const std::size_t n = f.n();
  const std::size_t g1 = full_layer(f.stats(), n, 0);
  f.name_layer("G1", g1);
  const Vertex sn = f.sl[n - 1].s;
  const Vertex tn = f.sl[n - 1].t;
  PairSpec ps;
  for (std::size_t p = 0; p + 1 < n; ++p) ps.push_back({f.sl[p].s, f.sl[p].t});
  PathCover pb = f.cover(g1, ps);
  const std::size_t g2 = f.free_layer({g1});
  f.name_layer("G2", g2);

  const std::size_t is = path_containing(pb, sn);
  if (is == path_containing(pb, tn)) {
    f.set_branch("A");
    f.swap_slots(0, is);
    std::swap(pb[0], pb[is]);
    const Path P = pb[0];
    Path p1;
    if (index_of(P, sn) < index_of(P, tn)) {
      const Vertex v1 = pred(P, sn);
      const Vertex u1 = succ(P, tn);
      p1 = f.chain({seg(P, P.front(), v1), f.ham(g2, f.partner(v1, g2), f.partner(u1, g2)),
                    seg(P, u1, P.back())});
    } else {
      const Vertex u1 = pred(P, tn);
      const Vertex v1 = succ(P, sn);
      p1 = f.chain({seg(P, P.front(), u1), f.ham(g2, f.partner(u1, g2), f.partner(v1, g2)),
                    seg(P, v1, P.back())});
    }
    PathCover paths{p1};
    for (std::size_t p = 1; p + 1 < n; ++p) paths.push_back(pb[p]);
    paths.push_back(seg(P, sn, tn));
    return f.finish(std::move(paths));
  }

  f.set_branch("B");
  f.swap_slots(0, is);
  std::swap(pb[0], pb[is]);
  const std::size_t it = path_containing(pb, tn);
  f.swap_slots(1, it);
  std::swap(pb[1], pb[it]);
  const Path P1 = pb[0];
  const Path P2 = pb[1];
  const Vertex vn = pred(P1, sn);
  const Vertex u1 = pred(P1, vn);
  const Vertex v1 = succ(P1, sn);
  const Vertex u2 = pred(P2, tn);
  const Vertex un = succ(P2, tn);
  const Vertex v2 = succ(P2, un);
  const std::size_t g3 = f.free_layer({g1, g2});
  f.name_layer("G3", g3);
  PathCover c = f.cover(g2, {{f.partner(v1, g2), f.partner(u1, g2)},
                             {f.partner(v2, g2), f.partner(u2, g2)}});
  Path h = f.ham(g3, f.partner(vn, g3), f.partner(un, g3));
  PathCover paths;
  paths.push_back(f.chain({seg(P1, P1.front(), u1), reversed(c[0]), seg(P1, v1, P1.back())}));
  paths.push_back(f.chain({seg(P2, P2.front(), u2), reversed(c[1]), seg(P2, v2, P2.back())}));
  for (std::size_t p = 2; p + 1 < n; ++p) paths.push_back(pb[p]);
  paths.push_back(f.chain({{sn, vn}, h, {un, tn}}));
  return f.finish(std::move(paths));
}

PathCover prop_case3(Frame& f) {
  f.set_case("3");
  const std::size_t n = f.n();
  const LayerStats st = f.stats();
  std::size_t g1 = full_layer(st, n, 0);
  std::size_t g2 = full_layer(st, n, 1);
  if (st.layers[g1].S.size() != n) std::swap(g1, g2);
  f.name_layer("G1", g1);
  f.name_layer("G2", g2);

  std::vector<Vertex> picked;
  PairSpec ps;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Vertex v = f.pick(g1, f.dst(), picked, n - 2);
    picked.push_back(v);
    f.sl[p].v = v;
    ps.push_back({f.sl[p].s, v});
  }
  PathCover pb = f.cover(g1, ps);
  const Vertex sn = f.sl[n - 1].s;
  const Vertex tn = f.sl[n - 1].t;
  const std::size_t i0 = path_containing(pb, sn);
  f.swap_slots(0, i0);
  std::swap(pb[0], pb[i0]);
  const Path P = pb[0];
  f.sl[0].v = pred(P, sn);
  const Vertex vn = P.back();
  f.sl[n - 1].v = vn;

  PairSpec qs;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    f.sl[p].u = f.partner(f.sl[p].v, g2);
    f.record_connector(f.sl[p].v, f.sl[p].u);
    qs.push_back({f.sl[p].u, f.sl[p].t});
  }
  PathCover ph = f.cover(g2, qs);
  const std::size_t k = path_containing(ph, tn);
  f.set_branch("k=" + std::string(k == 0 ? "0" : "other"));
  const Path& H = ph[k];
  const Vertex u0 = pred(H, tn);
  const Vertex un = succ(H, tn);
  const Vertex v0 = succ(H, un);
  const std::size_t g3 = f.free_layer({g1, g2});
  const std::size_t g4 = f.free_layer({g1, g2, g3});
  f.name_layer("G3", g3);
  f.name_layer("G4", g4);
  Path h3 = f.ham(g3, f.partner(v0, g3), f.partner(u0, g3));
  Path h4 = f.ham(g4, f.partner(vn, g4), f.partner(un, g4));

  PathCover paths;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    Path first = p == 0 ? seg(P, P.front(), f.sl[0].v) : pb[p];
    if (p == k) {
      paths.push_back(f.chain({first, seg(H, H.front(), u0), reversed(h3), seg(H, v0, H.back())}));
    } else {
      paths.push_back(f.chain({first, ph[p]}));
    }
  }
  paths.push_back(f.chain({seg(P, sn, vn), h4, {un, tn}}));
  return f.finish(std::move(paths));
}

PathCover prop_case4(Frame& f) {
  f.set_case("4");
  const std::size_t n = f.n();
  std::size_t g1 = full_layer(f.stats(), n, 0);
  if (f.stats().layers[g1].S.size() != n) f.role_swap();
  f.name_layer("G1", g1);
  for (std::size_t p = 0; p < n; ++p) {
    if (f.layer(f.sl[p].t) != g1) {
      f.move_slot(p, n - 1);
      break;
    }
  }
  const LayerStats st = f.stats();
  const std::vector<Vertex> t1 = targets_in(f, st.layers[g1]);
  std::vector<Vertex> picked;
  PairSpec ps;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (f.layer(f.sl[p].t) == g1) {
      ps.push_back({f.sl[p].s, f.sl[p].t});
      continue;
    }
    std::vector<Vertex> forbidden = t1;
    forbidden.insert(forbidden.end(), picked.begin(), picked.end());
    const Vertex v = f.pick(g1, f.dst(), std::move(forbidden), n - 2);
    picked.push_back(v);
    f.sl[p].v = v;
    ps.push_back({f.sl[p].s, v});
  }
  PathCover pb = f.cover(g1, ps);
  const Vertex sn = f.sl[n - 1].s;
  const std::size_t i0 = path_containing(pb, sn);
  f.swap_slots(0, i0);
  std::swap(pb[0], pb[i0]);
  const Path P = pb[0];

  PathCover paths(n);
  if (f.layer(f.sl[0].t) != g1) {
    f.set_branch("A");
    f.sl[0].v = pred(P, sn);
    f.sl[n - 1].v = P.back();
    pb[0] = seg(P, P.front(), f.sl[0].v);
    pb.push_back(seg(P, sn, P.back()));
  } else {
    f.set_branch("B");
    const Vertex vn = pred(P, sn);
    const Vertex u0 = pred(P, vn);
    const Vertex v0 = succ(P, sn);
    std::size_t L = f.num_layers();
    for (std::size_t j = 0; j < f.num_layers() && L == f.num_layers(); ++j) {
      if (j != g1 && st.layers[j].T.empty()) L = j;
    }
    require(L < f.num_layers(), "no layer free of targets");
    f.name_layer("L", L);
    Path h = f.ham(L, f.partner(u0, L), f.partner(v0, L));
    pb[0] = f.chain({seg(P, P.front(), u0), h, seg(P, v0, P.back())});
    f.sl[n - 1].v = vn;
    pb.push_back({sn, vn});
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (f.layer(f.sl[p].t) != g1) {
      f.sl[p].u = f.partner(f.sl[p].v, f.layer(f.sl[p].t));
      f.record_connector(f.sl[p].v, f.sl[p].u);
    }
  }
  Pieces pc(n);
  cover_layers(f, {g1}, all_pairs, pc);
  for (std::size_t p = 0; p < n; ++p) paths[p] = f.chain({pb[p], pc.t[p]});
  return f.finish(std::move(paths));
}

namespace {

PathCover prop_case5(Frame& f) {
  f.set_case("5");
  const std::size_t n = f.n();
  std::size_t g1 = full_layer(f.stats(), n, 0);
  if (f.stats().layers[g1].T.size() < 2) f.role_swap();
  f.name_layer("G1", g1);
  for (std::size_t p = 0; p < n; ++p) {
    if (f.layer(f.sl[p].s) == g1 && f.layer(f.sl[p].t) != g1) {
      f.move_slot(p, n - 1);
      break;
    }
  }
  const LayerStats st = f.stats();
  connect_split(f, st, 2 * n - 3, [&](std::size_t p) { return p + 1 < n; });

  PairSpec ps;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Slot& q = f.sl[p];
    const bool s_in = f.layer(q.s) == g1;
    const bool t_in = f.layer(q.t) == g1;
    ps.push_back(s_in && t_in ? Pair{q.s, q.t} : s_in ? Pair{q.s, q.v} : Pair{q.u, q.t});
  }
  PathCover pb = f.cover(g1, ps);
  const Vertex sn = f.sl[n - 1].s;
  const Vertex tn = f.sl[n - 1].t;
  const std::size_t i0 = path_containing(pb, sn);
  f.swap_slots(0, i0);
  std::swap(pb[0], pb[i0]);
  const Path P = pb[0];
  const Vertex vn = pred(P, sn);
  const Vertex u0 = pred(P, vn);
  const Vertex v0 = succ(P, sn);
  const std::size_t jt = f.layer(tn);
  f.name_layer("tau(t_n)", jt);

  std::size_t L = f.num_layers();
  for (std::size_t j = 0; j < f.num_layers() && L == f.num_layers(); ++j) {
    if (st.layers[j].w == 0) L = j;
  }
  Pieces pc(n);
  Path core;
  Path pn;
  if (L < f.num_layers()) {
    f.set_branch("i");
    f.name_layer("L", L);
    std::vector<Vertex> forbidden = sources_in(f, f.stats().layers[jt]);
    for (const Slot& q : f.sl) {
      if (q.u != kNoVertex && f.layer(q.u) == jt) forbidden.push_back(q.u);
    }
    forbidden.push_back(f.partner(f.partner(u0, L), jt));
    const Vertex un = f.pick(jt, f.src, std::move(forbidden), st.layers[jt].w);
    f.sl[n - 1].u = un;
    f.sl[n - 1].v = vn;
    PathCover gl = f.cover(L, {{f.partner(v0, L), f.partner(u0, L)},
                               {f.partner(vn, L), f.partner(un, L)}});
    cover_layers(f, {g1, L}, all_pairs, pc);
    core = f.chain({seg(P, P.front(), u0), reversed(gl[0]), seg(P, v0, P.back())});
    pn = f.chain({{sn, vn}, gl[1], pc.t[n - 1]});
  } else {
    f.set_branch("ii");
    const LayerStats now = f.stats();
    std::size_t g2 = f.num_layers();
    std::size_t p2 = 0;
    for (std::size_t j = 0; j < f.num_layers() && g2 == f.num_layers(); ++j) {
      const auto& e = now.layers[j];
      if (j == g1 || !e.T.empty() || e.S.size() != 1 || e.S[0] == 0) continue;
      g2 = j;
      p2 = e.S[0];
    }
    require(g2 < f.num_layers(), "no source-only layer for the detour");
    f.name_layer("G2", g2);
    f.swap_slots(1, p2);
    std::swap(pb[1], pb[p2]);
    const Vertex s2 = f.sl[1].s;
    const Vertex x0 = f.pick(g2, f.src, {s2, f.partner(tn, g2)}, 2);
    const Vertex y0 = f.partner(x0, jt);
    f.record_connector(x0, y0);
    PathCover c2 = f.cover(g2, {{s2, f.sl[1].v}, {x0, f.partner(u0, g2)}});
    PathCover ct = f.cover(jt, {{f.partner(v0, jt), y0}, {f.partner(vn, jt), tn}});
    pc.s[1] = c2[0];
    cover_layers(f, {g1, g2, jt}, [&](std::size_t p) { return p + 1 < n; }, pc);
    core = f.chain({seg(P, P.front(), u0), reversed(c2[1]), reversed(ct[0]), seg(P, v0, P.back())});
    pn = f.chain({{sn, vn}, ct[1]});
  }

  PathCover paths(n);
  paths[0] = f.chain({pc.s[0], core, pc.t[0]});
  for (std::size_t p = 1; p + 1 < n; ++p) paths[p] = f.chain({pc.s[p], pb[p], pc.t[p]});
  paths[n - 1] = std::move(pn);
  return f.finish(std::move(paths));
}

PathCover prop_case6(Frame& f) {
  f.set_case("6");
  const std::size_t n = f.n();
  const LayerStats st0 = f.stats();
  const std::size_t g1 = full_layer(st0, n, 0);
  const std::size_t g2 = full_layer(st0, n, 1);
  f.name_layer("G1", g1);
  f.name_layer("G2", g2);
  for (std::size_t p = 0; p < n; ++p) {
    if (f.layer(f.sl[p].s) == g1) {
      f.move_slot(p, n - 1);
      break;
    }
  }
  const LayerStats st = f.stats();
  connect_split(f, st, 2 * n - 2, [&](std::size_t p) { return p + 1 < n; });
  auto g1_pair = [&](const Slot& q) {
    return f.layer(q.s) == g1 ? Pair{q.s, q.v} : Pair{q.u, q.t};
  };
  auto g2_pair = [&](const Slot& q) {
    return f.layer(q.s) == g2 ? Pair{q.s, q.v} : Pair{q.u, q.t};
  };
  PairSpec ps;
  for (std::size_t p = 0; p + 1 < n; ++p) ps.push_back(g1_pair(f.sl[p]));
  PathCover pb = f.cover(g1, ps);
  const Vertex sn = f.sl[n - 1].s;
  const Vertex tn = f.sl[n - 1].t;
  const std::size_t i0 = path_containing(pb, sn);
  f.swap_slots(0, i0);
  std::swap(pb[0], pb[i0]);
  const Path P = pb[0];
  const std::size_t g3 = f.free_layer({g1, g2});
  const std::size_t g4 = f.free_layer({g1, g2, g3});
  f.name_layer("G3", g3);
  f.name_layer("G4", g4);

  std::vector<Path> part1(n), part2(n);
  for (std::size_t p = 1; p + 1 < n; ++p) part1[p] = pb[p];

  // Pairs covered in G2, their paths, and the path that takes the G4 detour.
  std::vector<std::size_t> in2;
  PathCover ph;
  auto cover_g2 = [&](const std::function<bool(std::size_t)>& want) {
    PairSpec qs;
    for (std::size_t p = 0; p < n; ++p) {
      if (!want(p)) continue;
      in2.push_back(p);
      qs.push_back(g2_pair(f.sl[p]));
    }
    ph = f.cover(g2, qs);
    for (std::size_t k = 0; k < in2.size(); ++k) part2[in2[k]] = ph[k];
  };
  auto detour = [&](Vertex mid, Vertex& x, Vertex& after, Vertex& y) -> std::size_t {
    const std::size_t k = path_containing(ph, mid);
    const Path& H = ph[k];
    x = pred(H, mid);
    after = succ(H, mid);
    y = succ(H, after);
    return in2[k];
  };

  if (f.layer(f.sl[0].s) == g1) {
    f.set_branch("A");
    const Vertex old_v = P.back();
    const Vertex old_u = f.sl[0].u;
    const Vertex v1 = pred(P, sn);
    f.sl[0].v = v1;
    f.sl[0].u = kNoVertex;
    f.sl[n - 1].v = old_v;
    f.sl[n - 1].u = old_u;
    part1[0] = seg(P, P.front(), v1);
    part1[n - 1] = seg(P, sn, old_v);
    cover_g2([](std::size_t p) { return p != 0; });
    const Vertex t1 = f.sl[0].t;
    Vertex x, u1, y;
    const std::size_t iota = detour(t1, x, u1, y);
    const Path H = part2[iota];
    Path h3 = f.ham(g3, f.partner(v1, g3), f.partner(u1, g3));
    Path h4 = f.ham(g4, f.partner(x, g4), f.partner(y, g4));
    part2[iota] = f.chain({seg(H, H.front(), x), h4, seg(H, y, H.back())});
    part2[0] = f.chain({h3, {u1, t1}});
  } else {
    f.set_branch("B");
    const Vertex vn = pred(P, sn);
    const Vertex x0 = pred(P, vn);
    const Vertex y0 = succ(P, sn);
    cover_g2([&](std::size_t p) { return p + 1 < n; });
    Vertex xi, un, yi;
    const std::size_t iota = detour(tn, xi, un, yi);
    const Path H = part2[iota];
    const Vertex yn =
        f.pick(g3, f.dst(), {f.partner(x0, g3), f.partner(f.partner(yi, g4), g3)}, 2);
    const Vertex xn = f.partner(yn, g4);
    f.record_connector(yn, xn);
    PathCover c3 = f.cover(g3, {{f.partner(vn, g3), yn}, {f.partner(y0, g3), f.partner(x0, g3)}});
    PathCover c4 = f.cover(g4, {{xn, f.partner(un, g4)}, {f.partner(yi, g4), f.partner(xi, g4)}});
    part2[iota] = f.chain({seg(H, H.front(), xi), reversed(c4[1]), seg(H, yi, H.back())});
    part1[0] = f.chain({seg(P, P.front(), x0), reversed(c3[1]), seg(P, y0, P.back())});
    part1[n - 1] = f.chain({{sn, vn}, c3[0], c4[0], {un, tn}});
  }

  PathCover paths(n);
  for (std::size_t p = 0; p < n; ++p) {
    paths[p] = f.layer(f.sl[p].s) == g1 ? f.chain({part1[p], part2[p]})
                                        : f.chain({part2[p], part1[p]});
  }
  return f.finish(std::move(paths));
}

}  // namespace

PathCover induction_step(Frame& f) {
  f.trace.routine = "induction";
  const std::size_t n = f.n();
  require(n >= 3, "induction needs at least three pairs");
  require(f.num_layers() >= n + 1, "induction needs at least rank layers");
  require(f.node.layer_size >= 4 * n - 2,
          "layer size " + std::to_string(f.node.layer_size) + " below " +
              std::to_string(4 * n - 2) + " required for the counting bounds");
  switch (classify_case(f.stats(), n)) {
    case 1: return prop_case1(f);
    case 2: return prop_case2(f);
    case 3: return prop_case3(f);
    case 4: return prop_case4(f);
    case 5: return prop_case5(f);
    default: return prop_case6(f);
  }
}

}  // namespace weldpath::detail

#include <algorithm>

#include "pdpc_internal.hpp"

namespace weldpath::detail {
namespace {

// ---------------------------------------------------------------------------
// Rank 3: two pairs, layers are Hamiltonian laceable rank-2 graphs.

PathCover r3_case3(Frame& f) {
  f.set_case("3");
  const LayerStats st = f.stats();
  std::size_t g1 = full_layer(st, 2, 0);
  std::size_t g2 = full_layer(st, 2, 1);
  if (st.layers[g1].S.size() != 2) std::swap(g1, g2);
  f.name_layer("G1", g1);
  f.name_layer("G2", g2);
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  const Vertex v = f.pick(g1, f.dst(), {}, 0);
  const Path P = f.ham(g1, s1, v);
  const Vertex v1 = pred(P, s2);
  const Vertex v2 = P.back();
  f.record_connector(v1, f.partner(v1, g2));
  f.record_connector(v2, f.partner(v2, g2));
  const Path H = f.ham(g2, f.partner(v1, g2), t1);
  const std::size_t g3 = f.free_layer({g1, g2});
  f.name_layer("G3", g3);
  const Vertex v2s = f.partner(v2, g2);
  Path p1;
  if (index_of(H, v2s) < index_of(H, t2)) {
    f.set_branch("A");
    const Vertex v0 = pred(H, v2s);
    const Vertex u0 = succ(H, t2);
    p1 = f.chain({seg(P, s1, v1), seg(H, H.front(), v0),
                  f.ham(g3, f.partner(v0, g3), f.partner(u0, g3)), seg(H, u0, H.back())});
  } else {
    f.set_branch("B");
    const Vertex u0 = pred(H, t2);
    const Vertex v0 = succ(H, v2s);
    p1 = f.chain({seg(P, s1, v1), seg(H, H.front(), u0),
                  f.ham(g3, f.partner(u0, g3), f.partner(v0, g3)), seg(H, v0, H.back())});
  }
  Path p2 = f.chain({seg(P, s2, v2), seg(H, v2s, t2)});
  return f.finish({p1, p2});
}

PathCover r3_case4(Frame& f) {
  f.set_case("4");
  const std::size_t g1 = full_layer(f.stats(), 2, 0);
  if (f.stats().layers[g1].S.size() != 2) f.role_swap();
  f.name_layer("G1", g1);
  if (f.layer(f.sl[0].t) != g1 && f.layer(f.sl[1].t) == g1) f.swap_slots(0, 1);
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  if (f.layer(t1) != g1) {
    f.set_branch("a");
    const Vertex v = f.pick(g1, f.dst(), {}, 0);
    const Path P = f.ham(g1, s1, v);
    const Vertex v1 = pred(P, s2);
    const Vertex v2 = P.back();
    const std::size_t j1 = f.layer(t1), j2 = f.layer(t2);
    const Vertex u1 = f.partner(v1, j1), u2 = f.partner(v2, j2);
    f.record_connector(v1, u1);
    f.record_connector(v2, u2);
    Path p1 = f.chain({seg(P, s1, v1), f.ham(j1, u1, t1)});
    Path p2 = f.chain({seg(P, s2, v2), f.ham(j2, u2, t2)});
    return f.finish({p1, p2});
  }
  f.set_branch("b");
  const std::size_t g2 = f.layer(t2);
  f.name_layer("G2", g2);
  const Path P = f.ham(g1, s1, t1);
  const Vertex v2 = pred(P, s2);
  const Vertex u1 = pred(P, v2);
  const Vertex v1 = succ(P, s2);
  const std::size_t g3 = f.free_layer({g1, g2});
  f.name_layer("G3", g3);
  Path p1 = f.chain({seg(P, s1, u1), f.ham(g3, f.partner(u1, g3), f.partner(v1, g3)),
                     seg(P, v1, t1)});
  Path p2 = f.chain({{s2, v2}, f.ham(g2, f.partner(v2, g2), t2)});
  return f.finish({p1, p2});
}

PathCover r3_case5(Frame& f) {
  f.set_case("5");
  const std::size_t g1 = full_layer(f.stats(), 2, 0);
  f.name_layer("G1", g1);
  if (f.layer(f.sl[0].s) != g1) f.swap_slots(0, 1);
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  const std::size_t g2 = f.layer(t1), g3 = f.layer(s2);
  f.name_layer("G2", g2);
  f.name_layer("G3", g3);
  if (f.node.layer_size == 2) {
    f.set_branch("tiny");
    const VertexRange r2 = f.node.layer(g2), r3 = f.node.layer(g3);
    const Vertex u = r2.first == t1 ? r2.first + 1 : r2.first;
    const Vertex v = r3.first == s2 ? r3.first + 1 : r3.first;
    f.mark(g1);
    f.mark(g2);
    f.mark(g3);
    return f.finish({f.chain({{s1}, {v}, {u}, {t1}}), f.chain({{s2}, {t2}})});
  }
  const Path P = f.ham(g1, s1, t2);
  const Vertex v = P[1], u = P[2];
  f.record_connector(v, f.partner(v, g2));
  Path p1 = f.chain({{s1, v}, f.ham(g2, f.partner(v, g2), t1)});
  Path p2 = f.chain({f.ham(g3, s2, f.partner(u, g3)), seg(P, u, t2)});
  return f.finish({p1, p2});
}

PathCover r3_case6(Frame& f) {
  f.set_case("6");
  const LayerStats st = f.stats();
  const std::size_t g1 = full_layer(st, 2, 0);
  const std::size_t g2 = full_layer(st, 2, 1);
  f.name_layer("G1", g1);
  f.name_layer("G2", g2);
  if (f.layer(f.sl[0].s) != g1) f.swap_slots(0, 1);
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  const Vertex u1 = f.partner(t1, g1);
  const Path P = f.ham(g1, s1, t2);
  const Vertex v2 = succ(P, u1);
  const Path Q = f.ham(g2, s2, t1);
  const Vertex u2 = pred(Q, t1);
  const std::size_t g3 = f.free_layer({g1, g2});
  f.name_layer("G3", g3);
  Path p1 = f.chain({seg(P, s1, u1), {t1}});
  Path p2 = f.chain({seg(Q, s2, u2), f.ham(g3, f.partner(u2, g3), f.partner(v2, g3)),
                     seg(P, v2, t2)});
  return f.finish({p1, p2});
}

// ---------------------------------------------------------------------------
// Rank 4 with layers of at most 8 vertices: three pairs.

PathCover r4_case5(Frame& f) {
  f.set_case("5");
  const std::size_t g1 = full_layer(f.stats(), 3, 0);
  f.name_layer("G1", g1);
  auto pattern = [&](std::size_t& s_only, std::size_t& t_only, std::size_t& both) {
    s_only = t_only = both = 0;
    for (const Slot& q : f.sl) {
      const bool si = f.layer(q.s) == g1, ti = f.layer(q.t) == g1;
      (si && ti ? both : si ? s_only : t_only) += 1;
    }
  };
  std::size_t so, to, bo;
  pattern(so, to, bo);
  if (so == 1 && to == 2 && bo == 0) {
    f.role_swap();
    pattern(so, to, bo);
  }
  auto kind = [&](std::size_t p) {
    const bool si = f.layer(f.sl[p].s) == g1, ti = f.layer(f.sl[p].t) == g1;
    return si && ti ? 0 : si ? 1 : 2;
  };
  auto order_by = [&](const std::vector<int>& want) {
    std::vector<Slot> out;
    for (int k : want) {
      for (std::size_t p = 0; p < 3; ++p) {
        if (kind(p) == k && std::find_if(out.begin(), out.end(), [&](const Slot& x) {
                              return x.caller == f.sl[p].caller;
                            }) == out.end()) {
          out.push_back(f.sl[p]);
          break;
        }
      }
    }
    f.sl = out;
  };

  if (bo == 1) {
    f.set_case("5.1");
    order_by({0, 1, 2});
    const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
    const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
    const Vertex s3 = f.sl[2].s, t3 = f.sl[2].t;
    const std::size_t g2 = f.layer(t2);
    f.name_layer("G2", g2);
    const PathCover pb = f.cover(g1, {{s1, t1}, {s2, t3}});
    const Vertex v3 = succ(pb[1], s2);
    const Vertex v3s = f.partner(v3, g2);
    if (f.layer(s3) == g2) {
      f.set_branch("a");
      const Path H = f.ham(g2, s3, t2);
      const Vertex v2 = succ(H, v3s);
      const std::size_t g3 = f.free_layer({g1, g2});
      f.name_layer("G3", g3);
      Path p2 = f.chain({{s2}, f.ham(g3, f.partner(s2, g3), f.partner(v2, g3)), seg(H, v2, t2)});
      Path p3 = f.chain({seg(H, s3, v3s), seg(pb[1], v3, t3)});
      return f.finish({pb[0], p2, p3});
    }
    f.set_branch("b");
    const std::size_t g3 = f.layer(s3);
    f.name_layer("G3", g3);
    const Vertex v2 = f.partner(s2, g2);
    const Path H = f.ham(g2, v3s, t2);
    const Vertex u3 = pred(H, v2);
    Path p2 = f.chain({{s2}, seg(H, v2, t2)});
    Path p3 = f.chain({f.ham(g3, s3, f.partner(u3, g3)), seg(H, u3, v3s), seg(pb[1], v3, t3)});
    return f.finish({pb[0], p2, p3});
  }

  f.set_case("5.2");
  order_by({1, 1, 2});
  const std::size_t g2 = f.layer(f.sl[2].s);
  f.name_layer("G2", g2);
  if (f.layer(f.sl[1].t) == g2) f.swap_slots(0, 1);
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  const Vertex s3 = f.sl[2].s, t3 = f.sl[2].t;

  if (f.layer(t1) == g2) {
    f.set_branch("a");
    const std::size_t g3 = f.layer(t2);
    f.name_layer("G3", g3);
    const Vertex v1 = f.pick(g1, f.dst(), {t3, f.partner(s3, g1)}, 2);
    const Vertex u1 = f.partner(v1, g2);
    f.record_connector(v1, u1);
    const PathCover pb = f.cover(g1, {{s1, v1}, {s2, t3}});
    const Vertex v3 = succ(pb[1], s2);
    const Vertex v3s = f.partner(v3, g3);
    const Vertex u3 = f.pick(g3, f.src, {v3s, f.partner(t1, g3)}, 2);
    const Vertex u3s = f.partner(u3, g2);
    f.record_connector(u3, u3s);
    const PathCover c2 = f.cover(g2, {{u1, t1}, {s3, u3s}});
    const Path H = f.ham(g3, v3s, t2);
    const Vertex v2 = succ(H, u3);
    const std::size_t g4 = f.free_layer({g1, g2, g3});
    f.name_layer("G4", g4);
    Path p1 = f.chain({pb[0], c2[0]});
    Path p2 = f.chain({{s2}, f.ham(g4, f.partner(s2, g4), f.partner(v2, g4)), seg(H, v2, t2)});
    Path p3 = f.chain({c2[1], seg(H, u3, v3s), seg(pb[1], v3, t3)});
    return f.finish({p1, p2, p3});
  }

  if (f.layer(t1) == f.layer(t2)) {
    f.set_branch("b");
    const std::size_t g3 = f.layer(t1);
    f.name_layer("G3", g3);
    const Vertex v1 = f.pick(g1, f.dst(), {t3}, 1);
    const Vertex u1 = f.partner(v1, g3);
    f.record_connector(v1, u1);
    const PathCover pb = f.cover(g1, {{s1, v1}, {s2, t3}});
    const Vertex v3 = succ(pb[1], s2);
    const Vertex v3s = f.partner(v3, g3);
    const PathCover c3 = f.cover(g3, {{u1, t1}, {v3s, t2}});
    const Vertex u3 = pred(c3[1], t2);
    const std::size_t g4 = f.free_layer({g1, g2, g3});
    f.name_layer("G4", g4);
    Path p1 = f.chain({pb[0], c3[0]});
    Path p2 = f.chain({{s2}, f.ham(g4, f.partner(s2, g4), f.partner(t2, g4)), {t2}});
    Path p3 = f.chain({f.ham(g2, s3, f.partner(u3, g2)), seg(c3[1], u3, v3s), seg(pb[1], v3, t3)});
    return f.finish({p1, p2, p3});
  }

  f.set_branch("c");
  const std::size_t g3 = f.layer(t1), g4 = f.layer(t2);
  f.name_layer("G3", g3);
  f.name_layer("G4", g4);
  const Vertex v1 = f.pick(g1, f.dst(), {t3}, 1);
  const Vertex u1 = f.partner(v1, g3);
  f.record_connector(v1, u1);
  const PathCover pb = f.cover(g1, {{s1, v1}, {s2, t3}});
  const Vertex v3 = succ(pb[1], s2);
  const Vertex v2 = f.partner(s2, g4);
  const Vertex v3s = f.partner(v3, g4);
  const Path H = f.ham(g4, v3s, t2);
  const Vertex u3 = pred(H, v2);
  Path p1 = f.chain({pb[0], f.ham(g3, u1, t1)});
  Path p2 = f.chain({{s2}, seg(H, v2, t2)});
  Path p3 = f.chain({f.ham(g2, s3, f.partner(u3, g2)), seg(H, u3, v3s), seg(pb[1], v3, t3)});
  return f.finish({p1, p2, p3});
}

PathCover r4_case6(Frame& f) {
  f.set_case("6");
  const LayerStats st = f.stats();
  std::size_t g1 = full_layer(st, 3, 0);
  std::size_t g2 = full_layer(st, 3, 1);
  if (st.layers[g1].S.size() != 2) std::swap(g1, g2);
  f.name_layer("G1", g1);
  f.name_layer("G2", g2);
  for (std::size_t p = 0; p < 3; ++p) {
    if (f.layer(f.sl[p].t) == g1) {
      f.move_slot(p, 2);
      break;
    }
  }
  const Vertex s1 = f.sl[0].s, t1 = f.sl[0].t;
  const Vertex s2 = f.sl[1].s, t2 = f.sl[1].t;
  const Vertex s3 = f.sl[2].s, t3 = f.sl[2].t;
  const Vertex v1 = f.pick(g1, f.dst(), {t3, f.partner(s3, g1)}, 2);
  const Vertex u1 = f.partner(v1, g2);
  f.record_connector(v1, u1);
  const PathCover pb = f.cover(g1, {{s1, v1}, {s2, t3}});
  const PathCover ph = f.cover(g2, {{u1, t1}, {s3, t2}});
  const Vertex v3 = succ(pb[1], s2);
  const Vertex u3 = pred(ph[1], t2);
  const std::size_t g3 = f.free_layer({g1, g2});
  const std::size_t g4 = f.free_layer({g1, g2, g3});
  f.name_layer("G3", g3);
  f.name_layer("G4", g4);
  Path p1 = f.chain({pb[0], ph[0]});
  Path p2 = f.chain({{s2}, f.ham(g3, f.partner(s2, g3), f.partner(t2, g3)), {t2}});
  Path p3 = f.chain({seg(ph[1], s3, u3), f.ham(g4, f.partner(u3, g4), f.partner(v3, g4)),
                     seg(pb[1], v3, t3)});
  return f.finish({p1, p2, p3});
}

}  // namespace

PathCover base_rank3(Frame& f) {
  f.trace.routine = "rank3";
  require(f.n() == 2, "rank 3 takes two pairs");
  switch (classify_case(f.stats(), 2)) {
    case 1: return prop_case1(f);
    case 2: return prop_case2(f);
    case 3: return r3_case3(f);
    case 4: return r3_case4(f);
    case 5: return r3_case5(f);
    default: return r3_case6(f);
  }
}

PathCover base_rank4_small(Frame& f) {
  f.trace.routine = "rank4-small";
  require(f.n() == 3, "rank 4 takes three pairs");
  switch (classify_case(f.stats(), 3)) {
    case 1: return prop_case1(f);
    case 2: return prop_case2(f);
    case 3: return prop_case3(f);
    case 4: return prop_case4(f);
    case 5: return r4_case5(f);
    default: return r4_case6(f);
  }
}

}  // namespace weldpath::detail

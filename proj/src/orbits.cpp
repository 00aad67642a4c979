#include "sylow/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace sylow {

Conditions conditions_of(const GroupCtx& G, const LinChar& a) {
  Conditions c;
  const int N = G.N(), nt = G.type().ntilde;
  const bool typeC = G.type().family == Family::C;

  for (int i = 1; i <= N; ++i) {
    int best = -1;
    for (int j = 1; j <= N; ++j)
      if (char_entry(G, a, i, j) != 0) best = j;
    if (best < 0) continue;
    c.mc.push_back({i, best});
    if (best <= nt)
      c.lmc.push_back({i, best});
    else
      c.rmc.push_back({i, best});
  }

  std::set<int> mc_cols;
  c.staircase = true;
  for (const Pos& m : c.mc)
    if (!mc_cols.insert(m.j).second) c.staircase = false;

  for (const Pos& m : c.rmc) {
    Pos minor{m.i, N + 1 - m.j};
    if (minor.i == minor.j) continue;  // type C, antidiagonal main condition
    c.minc.push_back(minor);
  }
  std::sort(c.minc.begin(), c.minc.end());

  // supplementary: (i,j) in tril, left of a minor or left main condition in
  // row i, in the column of some minor condition, and not minor or main itself
  std::set<Pos> minor_set(c.minc.begin(), c.minc.end());
  std::set<Pos> mc_set(c.mc.begin(), c.mc.end());
  std::set<int> minor_cols;
  for (const Pos& m : c.minc) minor_cols.insert(m.j);
  std::map<int, int> row_limit;  // row -> column of its minor or left main condition
  for (const Pos& m : c.lmc) row_limit[m.i] = m.j;
  for (const Pos& m : c.minc) row_limit[m.i] = m.j;
  for (const Pos& p : region_members(G.type(), Region::Tril)) {
    auto it = row_limit.find(p.i);
    if (it == row_limit.end() || p.j >= it->second) continue;
    if (!minor_cols.contains(p.j)) continue;
    if (minor_set.contains(p) || mc_set.contains(p)) continue;
    c.suppl.push_back(p);
  }

  c.core = c.mc;
  if (!typeC) c.core.insert(c.core.end(), c.minc.begin(), c.minc.end());
  c.core.insert(c.core.end(), c.suppl.begin(), c.suppl.end());
  std::sort(c.core.begin(), c.core.end());

  c.verge = zero_char(G);
  for (const Pos& m : c.mc) c.verge.v[std::size_t(G.pup_index(m.i, m.j))] = char_entry(G, a, m.i, m.j);
  return c;
}

bool is_staircase(const GroupCtx& G, const LinChar& a) { return conditions_of(G, a).staircase; }

LimbData limbs_and_places(const GroupCtx& G, const Conditions& c) {
  if (!c.staircase) throw std::invalid_argument("limbs_and_places: character is not staircase");
  const int N = G.N();
  const bool typeC = G.type().family == Family::C;
  LimbData L;

  // legs: below each main condition in its column
  std::set<Pos> leg_set;
  for (const Pos& m : c.mc)
    for (int b = m.i + 1; b <= N; ++b)
      if (G.in_pup(b, m.j)) leg_set.insert({b, m.j});

  // arms: the pUP part of row lbar for each right main condition (k,l); for a
  // type C antidiagonal main condition the arm is the UP part of its own row
  std::set<Pos> arm_set;
  for (const Pos& m : c.rmc) {
    if (typeC && m.j == N + 1 - m.i) {
      for (int x = m.i + 1; x < m.j; ++x)
        if (in_region(G.type(), Region::UP, m.i, x)) arm_set.insert({m.i, x});
    } else {
      int row = N + 1 - m.j;
      for (int x = row + 1; x <= N; ++x)
        if (G.in_pup(row, x)) arm_set.insert({row, x});
    }
  }

  L.legs.assign(leg_set.begin(), leg_set.end());
  L.arms.assign(arm_set.begin(), arm_set.end());
  for (const Pos& p : leg_set)
    if (!arm_set.contains(p)) L.reduced_legs.push_back(p);
  std::set<Pos> limb_set = arm_set;
  limb_set.insert(L.reduced_legs.begin(), L.reduced_legs.end());
  L.limb.assign(limb_set.begin(), limb_set.end());

  // places
  std::set<Pos> suppl_set(c.suppl.begin(), c.suppl.end());
  std::set<Pos> pp, pm;
  for (const Pos& m : c.mc) {
    int limit = m.j <= G.type().ntilde ? m.j : N + 1 - m.j;
    for (int b = m.i + 1; b < limit; ++b)
      if (G.in_pup(m.i, b) && !suppl_set.contains({m.i, b})) pp.insert({m.i, b});
  }
  for (const Pos& m : c.rmc) {
    int lb = N + 1 - m.j;
    int from = typeC ? (m.i == lb ? m.i + 1 : lb) : lb + 1;
    for (int b = from; b < m.j; ++b) pm.insert({m.i, b});
  }
  L.places_p.assign(pp.begin(), pp.end());
  L.places_m.assign(pm.begin(), pm.end());
  std::set<Pos> all = pp;
  all.insert(pm.begin(), pm.end());
  if (all.size() != pp.size() + pm.size())
    throw std::logic_error("limbs_and_places: P and M parts overlap");
  L.places.assign(all.begin(), all.end());

  // phi in processing order: reduced legs by main-condition column then top
  // down, then arms by right main condition column, positions left to right
  std::vector<Pos> mc_by_col = c.mc;
  std::sort(mc_by_col.begin(), mc_by_col.end(), [](Pos a, Pos b) { return a.j < b.j; });
  for (const Pos& m : mc_by_col)
    for (int b = m.i + 1; b <= N; ++b) {
      Pos leg{b, m.j};
      if (!G.in_pup(b, m.j) || arm_set.contains(leg)) continue;
      Pos place{m.i, b};
      if (!pp.contains(place)) throw std::logic_error("limbs_and_places: leg image is not a P place");
      L.order.emplace_back(leg, place);
    }
  std::vector<Pos> rmc_by_col = c.rmc;
  std::sort(rmc_by_col.begin(), rmc_by_col.end(), [](Pos a, Pos b) { return a.j < b.j; });
  for (const Pos& m : rmc_by_col) {
    int row = typeC && m.j == N + 1 - m.i ? m.i : N + 1 - m.j;
    for (int x = row + 1; x <= N; ++x) {
      Pos armp{row, x};
      if (!arm_set.contains(armp)) continue;
      Pos place{m.i, N + 1 - x};
      if (!pm.contains(place)) throw std::logic_error("limbs_and_places: arm image is not an M place");
      L.order.emplace_back(armp, place);
    }
  }

  // phi is a bijection Limb -> Pl
  if (L.order.size() != L.limb.size() || L.limb.size() != L.places.size())
    throw std::logic_error("limbs_and_places: |Limb| != |Pl|");
  std::set<Pos> targets;
  for (const auto& [src, dst] : L.order) targets.insert(dst);
  if (targets.size() != L.places.size())
    throw std::logic_error("limbs_and_places: phi is not onto the places");
  return L;
}

LinChar fill_places(const GroupCtx& G, const LinChar& a, const std::map<Pos, gf::Elem>& lambda) {
  Conditions c = conditions_of(G, a);
  LimbData L = limbs_and_places(G, c);
  const auto& F = G.field();
  for (const Pos& p : L.places)
    if (!lambda.contains(p)) throw std::invalid_argument("fill_places: map not total on places");

  LinChar cur = a;
  std::vector<Pos> done;
  for (const auto& [limbp, place] : L.order) {
    gf::Elem target = lambda.at(place);
    // the entry at the place is affine in beta with unit slope times the
    // main-condition value; solve from two evaluations
    gf::Elem v0 = char_entry(G, cur, place.i, place.j);
    LinChar at1 = dot_right_root(G, cur, limbp, 1);
    gf::Elem slope = F.sub(char_entry(G, at1, place.i, place.j), v0);
    if (slope == 0) throw std::logic_error("fill_places: place does not respond to its limb");
    gf::Elem beta = F.div(F.sub(target, v0), slope);
    cur = dot_right_root(G, cur, limbp, beta);
    if (char_entry(G, cur, place.i, place.j) != target)
      throw std::logic_error("fill_places: step missed its target value");
    for (const Pos& q : done)
      if (char_entry(G, cur, q.i, q.j) != lambda.at(q))
        throw std::logic_error("fill_places: an earlier place was disturbed");
    done.push_back(place);
  }
  return cur;
}

LinChar to_core(const GroupCtx& G, const LinChar& a) {
  Conditions c = conditions_of(G, a);
  LimbData L = limbs_and_places(G, c);
  std::map<Pos, gf::Elem> zero;
  for (const Pos& p : L.places) zero[p] = 0;
  LinChar core = fill_places(G, a, zero);
  // when the input is already zero on the M places, the core is the plain
  // truncation of a to its core positions
  bool m_zero = true;
  for (const Pos& p : L.places_m)
    if (char_entry(G, a, p.i, p.j) != 0) m_zero = false;
  if (m_zero) {
    LinChar trunc = zero_char(G);
    for (const Pos& p : c.core) {
      int k = G.pup_index(p.i, p.j);
      trunc.v[std::size_t(k)] = char_entry(G, a, p.i, p.j);
    }
    if (core != trunc) throw std::logic_error("to_core: truncation form violated");
  }
  return core;
}

Orbit enumerate_orbit(const GroupCtx& G, const LinChar& a, std::uint64_t max_size) {
  std::unordered_set<LinChar, LinCharHash> seen{a};
  std::deque<LinChar> queue{a};
  while (!queue.empty()) {
    LinChar cur = queue.front();
    queue.pop_front();
    for (const Pos& p : G.pup())
      for (int al = 1; al < G.q(); ++al) {
        LinChar nxt = dot_right_root(G, cur, p, gf::Elem(al));
        if (seen.insert(nxt).second) {
          if (seen.size() > max_size) throw BudgetError("enumerate_orbit: size cap exceeded");
          queue.push_back(nxt);
        }
      }
  }
  Orbit o;
  o.members.assign(seen.begin(), seen.end());
  std::sort(o.members.begin(), o.members.end());
  o.rep = o.members.front();
  o.cond = conditions_of(G, a);
  if (o.cond.staircase) {
    std::set<Pos> core_set(o.cond.core.begin(), o.cond.core.end());
    for (const LinChar& m : o.members) {
      bool is_core = true;
      for (std::size_t k = 0; k < m.v.size(); ++k)
        if (m.v[k] != 0 && !core_set.contains(G.pup()[k])) is_core = false;
      if (is_core) {
        if (o.core) throw std::logic_error("enumerate_orbit: two core characters in one orbit");
        o.core = m;
      }
    }
  }
  return o;
}

std::pair<LinChar, Mat> staircase_transform(const GroupCtx& G, const LinChar& a) {
  const auto& F = G.field();
  LinChar cur = a;
  Mat witness = Mat::identity(G.N());
  for (int col = G.N(); col >= 1; --col) {
    for (;;) {
      Conditions c = conditions_of(G, cur);
      std::vector<Pos> here;
      for (const Pos& m : c.mc)
        if (m.j == col) here.push_back(m);
      if (here.size() < 2) break;
      Pos top = here[0], low = here[1];  // rows ascending (mc is row-major)
      gf::Elem beta = F.div(char_entry(G, cur, low.i, col), char_entry(G, cur, top.i, col));
      cur = dot_left_tilde(G, top.i, low.i, beta, cur);
      witness = multiply(G, tilde_root(G, top.i, low.i, beta), witness);
    }
  }
  if (!is_staircase(G, cur)) throw std::logic_error("staircase_transform: did not terminate staircase");
  if (dot_left(G, witness, a) != cur) throw std::logic_error("staircase_transform: witness mismatch");
  for (int i = 1; i <= G.N(); ++i)
    for (int j = i + 1; j <= G.N(); ++j)
      if (witness.at(i, j) != 0 && !G.in_pup(i, j))
        throw std::logic_error("staircase_transform: witness leaves Utilde_pUP");
  return {cur, witness};
}

std::vector<Pos> J_of(const GroupCtx& G, const Conditions& c) {
  LimbData L = limbs_and_places(G, c);
  std::set<Pos> limb(L.limb.begin(), L.limb.end());
  std::vector<Pos> J;
  for (const Pos& p : G.pup())
    if (!limb.contains(p)) J.push_back(p);
  if (!is_closed(G.type(), J)) throw std::logic_error("J_of: J(A) is not closed");
  return J;
}

std::vector<Mat> stabilizer_brute(const GroupCtx& G, const LinChar& a, std::uint64_t max_size) {
  std::uint64_t order = G.u_order();
  if (order > max_size) throw BudgetError("stabilizer_brute: group larger than the size cap");
  std::vector<Mat> stab;
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    Mat u = u_element(G, idx);
    if (dot_right(G, a, u) == a) stab.push_back(u);
  }
  return stab;
}

std::vector<Orbit> orbit_decomposition(const GroupCtx& G, std::uint64_t max_orbit,
                                       std::uint64_t max_total) {
  std::uint64_t total = G.u_order();  // |Vhat| = q^|pUP|
  if (total > max_total) throw BudgetError("orbit_decomposition: character space exceeds the cap");
  std::vector<Orbit> orbits;
  std::unordered_set<LinChar, LinCharHash> visited;
  LinChar seed = zero_char(G);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t k = seed.v.size(); k-- > 0;) {
      seed.v[k] = gf::Elem(v % std::uint64_t(G.q()));
      v /= std::uint64_t(G.q());
    }
    if (visited.contains(seed)) continue;
    Orbit o = enumerate_orbit(G, seed, max_orbit);
    visited.insert(o.members.begin(), o.members.end());
    orbits.push_back(std::move(o));
  }
  std::uint64_t covered = 0;
  for (const Orbit& o : orbits) covered += o.members.size();
  if (covered != total) throw std::logic_error("orbit_decomposition: orbits do not partition Vhat");
  return orbits;
}

}  // namespace sylow

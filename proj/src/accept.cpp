#include "sylow/accept.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sylow/superchars.hpp"

namespace sylow::accept {

namespace {

GroupCtx make_ctx(Family f, int n, long q) {
  return GroupCtx(lie_type(f, n), gf::FieldCtx::from_q(q));
}

std::string cfg_name(Family f, int n, long q) {
  std::ostringstream os;
  os << char(f) << n << " q=" << q;
  return os.str();
}

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      detail = msg;
    }
  }
};

std::string mat_key(const Mat& m) {
  std::string s;
  s.reserve(m.a.size());
  for (gf::Elem e : m.a) s += char('0' + e % 64);
  return s;
}

// ---- criterion 1: group construction ----------------------------------------

void check_group_construction(Check& c, Family f, int n, long q, std::uint64_t expect,
                              const Options& opt) {
  GroupCtx G = make_ctx(f, n, q);
  std::vector<Mat> U = enumerate_u(G, opt.max_group);
  std::string cfg = cfg_name(f, n, q);
  if (U.size() != expect)
    return c.fail("unique: |U| != q^|pUP| at " + cfg);
  std::unordered_set<std::string> keys;
  for (const Mat& u : U) keys.insert(mat_key(u));
  if (keys.size() != U.size()) return c.fail("unique: repeated elements at " + cfg);
  for (const Mat& u : U)
    if (!is_member(G, u)) return c.fail("lemmaurs: enumerated element fails membership at " + cfg);
  if (U.size() <= 81) {
    for (const Mat& u : U)
      for (const Mat& v : U)
        if (!is_member(G, multiply(G, u, v)))
          return c.fail("lemmaurs: closure fails at " + cfg);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, U.size() - 1);
    for (int k = 0; k < opt.sample_pairs; ++k)
      if (!is_member(G, multiply(G, U[pick(rng)], U[pick(rng)])))
        return c.fail("lemmaurs: closure fails at " + cfg);
  }
}

Check criterion1(const Options& opt) {
  Check c;
  check_group_construction(c, Family::B, 1, 3, 3, opt);
  check_group_construction(c, Family::B, 2, 3, 81, opt);
  check_group_construction(c, Family::C, 2, 3, 81, opt);
  check_group_construction(c, Family::D, 3, 3, 729, opt);
  check_group_construction(c, Family::B, 2, 5, 625, opt);
  check_group_construction(c, Family::C, 3, 3, 19683, opt);
  return c;
}

// ---- criterion 2: cocycle and bijectivity ------------------------------------

Check criterion2(const Options& opt) {
  Check c;
  {
    GroupCtx G = make_ctx(Family::B, 1, 3);
    const auto& F = G.field();
    std::vector<Mat> U = enumerate_u(G, opt.max_group);
    for (const Mat& u : U)
      for (const Mat& v : U) {
        LinChar lhs = cocycle_f(G, multiply(G, u, v));
        LinChar rhs = v_dot(G, cocycle_f(G, u), v);
        for (std::size_t k = 0; k < rhs.v.size(); ++k)
          rhs.v[k] = F.add(rhs.v[k], cocycle_f(G, v).v[k]);
        if (lhs != rhs) {
          c.fail("fonecocycle: f(uv) != f(u).v + f(v) at B1 q=3");
          return c;
        }
      }
  }
  for (Family f : {Family::B, Family::C}) {
    GroupCtx G = make_ctx(f, 2, 3);
    std::set<LinChar> image;
    for (const Mat& u : enumerate_u(G, opt.max_group)) image.insert(cocycle_f(G, u));
    if (image.size() != G.u_order()) {
      c.fail("fonecocycle: f restricted to U is not bijective at " + cfg_name(f, 2, 3));
      return c;
    }
  }
  return c;
}

// ---- criterion 3: regular representation identity ----------------------------

Check criterion3(const Options& opt) {
  Check c;
  for (Family f : {Family::B, Family::C}) {
    GroupCtx G = make_ctx(f, 2, 3);
    std::string cfg = cfg_name(f, 2, 3);
    std::vector<Orbit> orbits = orbit_decomposition(G, opt.max_orbit, opt.max_group);
    std::uint64_t covered = 0;
    std::set<LinChar> all;
    for (const Orbit& o : orbits) {
      covered += o.members.size();
      all.insert(o.members.begin(), o.members.end());
    }
    if (covered != 81 || all.size() != 81) {
      c.fail("monomial: orbits do not partition the 81 characters at " + cfg);
      return c;
    }
    ClassFunction sum{std::vector<cyclo::CycInt>(G.u_order(), cyclo::CycInt(G.field().p()))};
    for (const Orbit& o : orbits) sum = cf_add(sum, orbit_character(G, o));
    if (!cf_equal(sum, regular_character(G))) {
      c.fail("monomial: orbit characters do not sum to the regular character at " + cfg);
      return c;
    }
  }
  return c;
}

// ---- criterion 4: classification by cores ------------------------------------

Check criterion4(const Options& opt) {
  Check c;
  struct Case {
    Family f;
    int n;
    long q;
    bool stabilizers;
  };
  for (const Case& cs : {Case{Family::B, 2, 3, true}, Case{Family::C, 2, 3, true},
                         Case{Family::D, 3, 3, false}}) {
    GroupCtx G = make_ctx(cs.f, cs.n, cs.q);
    std::string cfg = cfg_name(cs.f, cs.n, cs.q);
    std::uint64_t group = G.u_order();
    for (const Orbit& o : orbit_decomposition(G, opt.max_orbit, opt.max_group)) {
      if (!o.cond.staircase) continue;
      if (!o.core) return c.fail("classifybycore: staircase orbit without a core at " + cfg);
      std::uint64_t count = 0;
      std::set<Pos> core_set(o.cond.core.begin(), o.cond.core.end());
      for (const LinChar& m : o.members) {
        bool is_core = true;
        for (std::size_t k = 0; k < m.v.size(); ++k)
          if (m.v[k] != 0 && !core_set.contains(G.pup()[k])) is_core = false;
        if (is_core) ++count;
      }
      if (count != 1) return c.fail("classifybycore: core count != 1 at " + cfg);
      LimbData L = limbs_and_places(G, o.cond);
      std::uint64_t expect = 1;
      for (std::size_t k = 0; k < L.places.size(); ++k) expect *= std::uint64_t(G.q());
      if (o.members.size() != expect)
        return c.fail("classifybycore: |O| != q^|Pl| at " + cfg);
      std::vector<Pos> J = J_of(G, o.cond);
      std::vector<Mat> UJ = pattern_subgroup(G, J, opt.max_group);
      if (o.members.size() * UJ.size() != group)
        return c.fail("classifybycore: |O| != [U : U_{J(A)}] at " + cfg);
      if (cs.stabilizers) {
        std::set<std::string> stab_keys, uj_keys;
        for (const Mat& u : stabilizer_brute(G, o.cond.verge, opt.max_group))
          stab_keys.insert(mat_key(u));
        for (const Mat& u : UJ) uj_keys.insert(mat_key(u));
        if (stab_keys != uj_keys)
          return c.fail("J in stab: verge stabilizer differs from U_{J(A)} at " + cfg);
        if (stabilizer_brute(G, *o.core, opt.max_group).size() != UJ.size())
          return c.fail("auxorderlemma: |Stab(core)| != |U_{J(A)}| at " + cfg);
      }
    }
  }
  return c;
}

// ---- criterion 5: staircase reduction ----------------------------------------

Check criterion5(const Options& opt) {
  Check c;
  GroupCtx G = make_ctx(Family::B, 2, 3);
  std::uint64_t total = G.u_order();
  LinChar a = zero_char(G);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t k = a.v.size(); k-- > 0;) {
      a.v[k] = gf::Elem(v % std::uint64_t(G.q()));
      v /= std::uint64_t(G.q());
    }
    if (is_staircase(G, a)) continue;
    auto [b, witness] = staircase_transform(G, a);
    if (!is_staircase(G, b)) return c.fail("isotostair: transform output is not staircase");
    ClassFunction ca = orbit_character(G, enumerate_orbit(G, a, opt.max_orbit));
    ClassFunction cb = orbit_character(G, enumerate_orbit(G, b, opt.max_orbit));
    if (!cf_equal(ca, cb))
      return c.fail("isotostair: orbit-module characters differ after the transform");
  }
  return c;
}

// ---- criterion 6: elementary characters --------------------------------------

Check criterion6(const Options&) {
  Check c;
  // degree exponents across all small types and both field sizes
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 1; n <= 3; ++n)
      for (long q : {3L, 5L}) {
        GroupCtx G = make_ctx(f, n, q);
        for (const Pos& p : G.pup()) {
          int expect = in_region(G.type(), Region::CC, p.i, p.j) ? (n - p.i) : (p.j - p.i - 1);
          if (elementary_degree_exponent(G, p) != expect)
            return c.fail("eldegree: |rho_{i,j}| mismatch at " + cfg_name(f, n, q));
        }
      }
  // full identification at B2 and C2
  for (Family f : {Family::B, Family::C}) {
    GroupCtx G = make_ctx(f, 2, 3);
    std::string cfg = cfg_name(f, 2, 3);
    for (const Pos& p : G.pup()) {
      ElementaryCaseReport r = identify_elementary(G, elementary_datum(G, p, 1));
      if (!r.ok) return c.fail(r.detail + " at " + cfg);
      if (f == Family::B && p == Pos{1, 4}) {
        if (r.case_id != 2) return c.fail("identificationANorbits: B2 (1,4) is a case-2 position");
        Orbit o = enumerate_orbit(G, unit_char(G, p, 1));
        if (o.members.size() != 3)
          return c.fail("elOrbSize: |O| != q^{j-i-2} at B2 (1,4)");
      }
      if (f == Family::C && p == Pos{1, 4} && r.case_id != 3)
        return c.fail("identificationANorbits: C2 (1,4) is a case-3 position");
    }
  }
  return c;
}

// ---- criterion 7: decomposition of Andre-Neto modules -------------------------

void all_basic_sets(const GroupCtx& G,
                    std::vector<BasicSet>& out) {
  const auto& pup = G.pup();
  std::uint64_t subsets = 1ull << pup.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<Pos> sel;
    for (std::size_t k = 0; k < pup.size(); ++k)
      if (mask & (1ull << k)) sel.push_back(pup[k]);
    // enumerate Phi over nonzero values
    std::vector<int> val(sel.size(), 1);
    for (;;) {
      std::vector<std::pair<Pos, gf::Elem>> s;
      for (std::size_t k = 0; k < sel.size(); ++k) s.emplace_back(sel[k], gf::Elem(val[k]));
      try {
        out.push_back(make_basic_set(G, s));
      } catch (const std::invalid_argument&) {
        break;  // invalid independently of Phi
      }
      std::size_t k = 0;
      while (k < val.size() && ++val[k] == G.q()) val[k++] = 1;
      if (k == val.size()) break;
    }
  }
}

Check criterion7(const Options& opt) {
  Check c;
  for (Family f : {Family::B, Family::C}) {
    GroupCtx G = make_ctx(f, 2, 3);
    std::string cfg = cfg_name(f, 2, 3);
    std::vector<BasicSet> sets;
    all_basic_sets(G, sets);
    if (sets.empty()) return c.fail("basicset: no valid basic sets found at " + cfg);
    for (const BasicSet& bs : sets) {
      ANDecomposition d = decompose_AN(G, bs, opt.max_orbit);
      if (!d.ok) return c.fail(d.detail + " at " + cfg);
    }
  }
  return c;
}

// ---- criterion 8: oracle agreements -------------------------------------------

Check criterion8(const Options& opt) {
  Check c;
  struct Case {
    Family f;
    int n;
  };
  for (const Case& cs : {Case{Family::B, 1}, Case{Family::B, 2}, Case{Family::B, 3},
                         Case{Family::C, 1}, Case{Family::C, 2}, Case{Family::C, 3},
                         Case{Family::D, 2}, Case{Family::D, 3}}) {
    GroupCtx G = make_ctx(cs.f, cs.n, 3);
    std::string cfg = cfg_name(cs.f, cs.n, 3);
    const int N = G.N();
    struct RootGen {
      Pos p;
      gf::Elem al;
      Mat invt;  // transposed inverse, the dense route applies A * invt
    };
    struct TildeGen {
      int i, j;
      gf::Elem al;
      Mat invt;
    };
    std::vector<RootGen> root_gens;
    std::vector<TildeGen> tilde_gens;
    for (const Pos& p : G.pup())
      for (int al = 1; al < G.q(); ++al) {
        Mat x = root_element(G, p, gf::Elem(al));
        root_gens.push_back({p, gf::Elem(al), transpose(inverse_unitriangular(G, x))});
      }
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        for (int al = 1; al < G.q(); ++al) {
          Mat x = tilde_root(G, i, j, gf::Elem(al));
          tilde_gens.push_back({i, j, gf::Elem(al), transpose(inverse_unitriangular(G, x))});
        }

    std::uint64_t total = G.u_order();
    LinChar a = zero_char(G);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t k = a.v.size(); k-- > 0;) {
        a.v[k] = gf::Elem(v % std::uint64_t(G.q()));
        v /= std::uint64_t(G.q());
      }
      Mat am = char_to_matrix(G, a);
      for (const RootGen& g : root_gens)
        if (dot_right_root(G, a, g.p, g.al) != project_pup(G, multiply(G, am, g.invt)))
          return c.fail("TruncatedColumnOperationG: fast root action differs from pi(A u^{-t}) at " + cfg);
      for (const TildeGen& g : tilde_gens) {
        if (dot_right_tilde(G, a, g.i, g.j, g.al) != project_pup(G, multiply(G, am, g.invt)))
          return c.fail("TruncatedColumnOperationG: fast column operation differs at " + cfg);
        if (dot_left_tilde(G, g.i, g.j, g.al, a) != project_pup(G, multiply(G, g.invt, am)))
          return c.fail("RestrRowTildeU: fast row operation differs at " + cfg);
      }
    }
  }
  {
    GroupCtx G = make_ctx(Family::B, 1, 3);
    const int p = G.field().p();
    for (const Mat& x : enumerate_u(G, opt.max_group)) {
      std::uint64_t total = G.u_order();
      LinChar a = zero_char(G);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t k = a.v.size(); k-- > 0;) {
          a.v[k] = gf::Elem(v % std::uint64_t(G.q()));
          v /= std::uint64_t(G.q());
        }
        bool applies = true;
        MonomialTerm fast;
        try {
          fast = lambda_left_fast(G, x, a);
        } catch (const std::domain_error&) {
          applies = false;
        }
        if (!applies) continue;
        CharCombination gen = lambda_left_general(G, x, a);
        if (gen.terms.size() != 1)
          return c.fail("leftactionSupp: general left action is not a single term at B1 q=3");
        const auto& [chr, coeff] = *gen.terms.begin();
        if (chr != fast.chr || !(coeff == cyclo::CycRat(cyclo::CycInt::zeta_pow(p, fast.exponent))))
          return c.fail("leftactionSupp: fast and general left actions disagree at B1 q=3");
      }
    }
    // orbit character vs explicit monomial matrix trace
    for (const Orbit& o : orbit_decomposition(G, opt.max_orbit, opt.max_group)) {
      ClassFunction chi = orbit_character(G, o);
      std::map<LinChar, std::size_t> index;
      for (std::size_t k = 0; k < o.members.size(); ++k) index[o.members[k]] = k;
      std::vector<Mat> U = enumerate_u(G, opt.max_group);
      for (std::uint64_t ui = 0; ui < U.size(); ++ui) {
        cyclo::CycInt trace(p);
        std::set<std::size_t> rows;
        for (std::size_t col = 0; col < o.members.size(); ++col) {
          MonomialTerm t = monomial_right(G, o.members[col], U[ui]);
          std::size_t row = index.at(t.chr);
          if (!rows.insert(row).second)
            return c.fail("monomial: action matrix is not monomial at B1 q=3");
          if (row == col) trace += cyclo::CycInt::zeta_pow(p, t.exponent);
        }
        if (!(trace == chi.vals[ui]))
          return c.fail("monomial: orbit character differs from the monomial matrix trace");
      }
    }
  }
  return c;
}

Check run_check(int id, const Options& opt) {
  switch (id) {
    case 1: return criterion1(opt);
    case 2: return criterion2(opt);
    case 3: return criterion3(opt);
    case 4: return criterion4(opt);
    case 5: return criterion5(opt);
    case 6: return criterion6(opt);
    case 7: return criterion7(opt);
    case 8: return criterion8(opt);
  }
  throw std::invalid_argument("criterion id must be in 1..8");
}

const char* kNames[8] = {
    "group construction",
    "cocycle and bijectivity",
    "regular-representation identity",
    "classification by cores",
    "staircase reduction",
    "elementary characters",
    "decomposition theorem",
    "oracle agreements",
};

const double kLimits[8] = {30, 10, 60, 120, 120, 120, 180, 60};

}  // namespace

Result run_criterion(int id, const Options& opt) {
  Result r;
  r.id = id;
  r.name = kNames[id - 1];
  r.limit_seconds = kLimits[id - 1];
  auto t0 = std::chrono::steady_clock::now();
  try {
    Check c = run_check(id, opt);
    r.pass = c.ok;
    r.detail = c.detail;
  } catch (const BudgetError&) {
    throw;  // budget problems are not verification verdicts
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail = "runtime limit exceeded";
  }
  return r;
}

std::vector<Result> run_all(const Options& opt) {
  std::vector<Result> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

std::vector<Result> run_config_suite(Family fam, int n, long q, const Options& opt) {
  std::vector<Result> out;
  auto push = [&](const std::string& name, auto&& fn) {
    Result r;
    r.id = int(out.size()) + 1;
    r.name = name;
    r.limit_seconds = 600;
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      fn(c);
      r.pass = c.ok;
      r.detail = c.detail;
    } catch (const BudgetError&) {
      throw;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };

  push("group construction", [&](Check& c) {
    GroupCtx G = make_ctx(fam, n, q);
    check_group_construction(c, fam, n, q, G.u_order(), opt);
  });
  push("cocycle", [&](Check& c) {
    GroupCtx G = make_ctx(fam, n, q);
    const auto& F = G.field();
    std::vector<Mat> U = enumerate_u(G, opt.max_group);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, U.size() - 1);
    int pairs = U.size() <= 81 ? -1 : opt.sample_pairs;
    auto test = [&](const Mat& u, const Mat& v) {
      LinChar lhs = cocycle_f(G, multiply(G, u, v));
      LinChar rhs = v_dot(G, cocycle_f(G, u), v);
      for (std::size_t k = 0; k < rhs.v.size(); ++k)
        rhs.v[k] = F.add(rhs.v[k], cocycle_f(G, v).v[k]);
      return lhs == rhs;
    };
    if (pairs < 0) {
      for (const Mat& u : U)
        for (const Mat& v : U)
          if (!test(u, v)) return c.fail("fonecocycle: f(uv) != f(u).v + f(v)");
    } else {
      for (int k = 0; k < pairs; ++k)
        if (!test(U[pick(rng)], U[pick(rng)])) return c.fail("fonecocycle: f(uv) != f(u).v + f(v)");
    }
  });
  push("fast actions against dense forms", [&](Check& c) {
    GroupCtx G = make_ctx(fam, n, q);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, G.u_order() - 1);
    std::uniform_int_distribution<int> pickal(1, G.q() - 1);
    for (int k = 0; k < 200; ++k) {
      LinChar a = project_pup(G, u_element(G, pick(rng)));
      for (const Pos& p : G.pup()) {
        gf::Elem al = gf::Elem(pickal(rng));
        if (dot_right_root(G, a, p, al) != dot_right(G, a, root_element(G, p, al)))
          return c.fail("TruncatedColumnOperationG: fast root action differs from pi(A u^{-t})");
      }
    }
  });
  push("regular-representation identity", [&](Check& c) {
    GroupCtx G = make_ctx(fam, n, q);
    if (G.u_order() > 2048) return;  // character-space work is desk scale only
    std::vector<Orbit> orbits = orbit_decomposition(G, opt.max_orbit, opt.max_group);
    ClassFunction sum{std::vector<cyclo::CycInt>(G.u_order(), cyclo::CycInt(G.field().p()))};
    for (const Orbit& o : orbits) sum = cf_add(sum, orbit_character(G, o));
    if (!cf_equal(sum, regular_character(G)))
      c.fail("monomial: orbit characters do not sum to the regular character");
  });
  push("staircase classification", [&](Check& c) {
    GroupCtx G = make_ctx(fam, n, q);
    if (G.u_order() > 2048) return;
    for (const Orbit& o : orbit_decomposition(G, opt.max_orbit, opt.max_group)) {
      if (!o.cond.staircase) continue;
      if (!o.core) return c.fail("classifybycore: staircase orbit without a core");
      LimbData L = limbs_and_places(G, o.cond);
      std::uint64_t expect = 1;
      for (std::size_t k = 0; k < L.places.size(); ++k) expect *= std::uint64_t(G.q());
      if (o.members.size() != expect) return c.fail("classifybycore: |O| != q^|Pl|");
    }
  });
  return out;
}

}  // namespace sylow::accept

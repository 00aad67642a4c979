#include "sylow/superchars.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace sylow {

ElementaryDatum elementary_datum(const GroupCtx& G, Pos p, gf::Elem alpha) {
  if (!G.in_pup(p.i, p.j)) throw std::invalid_argument("elementary_datum: position not in pUP");
  if (alpha == 0) throw std::invalid_argument("elementary_datum: alpha must be nonzero");
  ElementaryDatum d;
  d.pos = p;
  d.alpha = alpha;
  const int nt = G.type().ntilde;
  std::set<Pos> rho;
  if (p.j <= nt) {
    for (int k = p.i + 1; k < p.j; ++k)
      if (G.in_pup(p.i, k)) rho.insert({p.i, k});
  } else {
    // right-triangle case: the initial pieces of rows i and jbar, both up to
    // column ntilde
    for (int k = p.i + 1; k <= nt; ++k)
      if (G.in_pup(p.i, k)) rho.insert({p.i, k});
    int jb = G.mir(p.j);
    for (int l = jb + 1; l <= nt; ++l)
      if (G.in_pup(jb, l)) rho.insert({jb, l});
  }
  d.rho.assign(rho.begin(), rho.end());
  for (const Pos& q : G.pup())
    if (!rho.contains(q)) d.J.push_back(q);
  for (const Pos& q : d.J)
    if (!(q == p)) d.Jcirc.push_back(q);
  if (!is_closed(G.type(), d.J)) throw std::logic_error("elementary_datum: J_{i,j} is not closed");
  if (!is_closed(G.type(), d.Jcirc)) throw std::logic_error("elementary_datum: J_{i,j}ar is not closed");
  return d;
}

int elementary_degree_exponent(const GroupCtx& G, Pos p) {
  return int(elementary_datum(G, p, 1).rho.size());
}

std::vector<Mat> elementary_subgroup(const GroupCtx& G, const ElementaryDatum& d) {
  return pattern_subgroup(G, d.J);
}

cyclo::CycInt elementary_linear_value(const GroupCtx& G, const ElementaryDatum& d, const Mat& u) {
  const auto& F = G.field();
  return cyclo::CycInt::zeta_pow(F.p(), F.trace(F.mul(d.alpha, u.at(d.pos.i, d.pos.j))));
}

ClassFunction elementary_character(const GroupCtx& G, const ElementaryDatum& d) {
  std::vector<Mat> H = elementary_subgroup(G, d);
  return induce(G, H, [&](const Mat& u) { return elementary_linear_value(G, d, u); });
}

std::vector<LinChar> ij_suborbit(const GroupCtx& G, const LinChar& a, const ElementaryDatum& d) {
  Conditions c = conditions_of(G, a);
  if (c.mc != std::vector<Pos>{d.pos})
    throw std::invalid_argument("ij_suborbit: character's main condition does not match the datum");
  if (char_entry(G, a, d.pos.i, d.pos.j) != d.alpha)
    throw std::invalid_argument("ij_suborbit: verge value does not match alpha");

  const auto& F = G.field();
  std::set<LinChar> out;
  for (const Mat& u : elementary_subgroup(G, d)) {
    LinChar moved = dot_right(G, a, u);
    out.insert(moved);
  }
  // the monomial identity [B]u = chi^{i,j}_alpha(u) [B].u on the suborbit
  for (const LinChar& b : out)
    for (const Mat& u : elementary_subgroup(G, d)) {
      MonomialTerm t = monomial_right(G, b, u);
      cyclo::CycInt coeff = cyclo::CycInt::zeta_pow(F.p(), t.exponent);
      if (!(coeff == elementary_linear_value(G, d, u)))
        throw std::logic_error("ij_suborbit: monomial coefficient differs from chi^{i,j}_alpha");
      if (!out.contains(t.chr)) throw std::logic_error("ij_suborbit: set is not closed under U_{i,j}");
    }
  return {out.begin(), out.end()};
}

ElementaryCaseReport identify_elementary(const GroupCtx& G, const ElementaryDatum& d) {
  const auto& F = G.field();
  const bool typeC = G.type().family == Family::C;
  const int i = d.pos.i, j = d.pos.j;
  ElementaryCaseReport r;
  if (in_region(G.type(), Region::Tril, i, j) || (typeC && in_region(G.type(), Region::UP, i, j)))
    r.case_id = 1;
  else if (!typeC)
    r.case_id = 2;
  else
    r.case_id = 3;

  ClassFunction xi = elementary_character(G, d);
  r.degree = xi.vals[u_index(G, Mat::identity(G.N()))].rational_part();
  r.xi_norm = inner_product(G, xi, xi);
  cyclo::BigInt expected_deg = 1;
  for (int k = 0; k < elementary_degree_exponent(G, d.pos); ++k) expected_deg *= G.q();
  if (r.degree != expected_deg) {
    r.detail = "eldegree: induced degree differs from q^|rho|";
    return r;
  }

  LinChar A = unit_char(G, d.pos, d.alpha);
  switch (r.case_id) {
    case 1: {
      Orbit o = enumerate_orbit(G, A);
      ClassFunction chi = orbit_character(G, o);
      if (!cf_equal(chi, xi)) {
        r.detail = "identificationANorbits case 1: xi differs from chi_{O_A}";
        return r;
      }
      if (r.xi_norm != 1) {
        r.detail = "identificationANorbits case 1: xi is not irreducible";
        return r;
      }
      break;
    }
    case 2: {
      ClassFunction sum{std::vector<cyclo::CycInt>(xi.vals.size(), cyclo::CycInt(F.p()))};
      for (int beta = 0; beta < G.q(); ++beta) {
        LinChar Ab = A;
        int k = G.pup_index(i, G.mir(j));
        Ab.v[std::size_t(k)] = gf::Elem(beta);
        Orbit ob = enumerate_orbit(G, Ab);
        ClassFunction chib = orbit_character(G, ob);
        if (inner_product(G, chib, chib) != 1) {
          r.detail = "identificationANorbits case 2: a summand is not irreducible";
          return r;
        }
        for (int gamma = 0; gamma < beta; ++gamma) {
          LinChar Ag = A;
          Ag.v[std::size_t(k)] = gf::Elem(gamma);
          ClassFunction chig = orbit_character(G, enumerate_orbit(G, Ag));
          if (inner_product(G, chib, chig) != 0) {
            r.detail = "mincond: orbit characters for distinct minor values are not orthogonal";
            return r;
          }
        }
        r.multiplicities.push_back(inner_product(G, chib, xi));
        sum = cf_add(sum, chib);
      }
      if (!cf_equal(sum, xi)) {
        r.detail = "identificationANorbits case 2: xi differs from the sum over beta";
        return r;
      }
      break;
    }
    case 3: {
      Orbit o = enumerate_orbit(G, A);
      ClassFunction chi = orbit_character(G, o);
      cyclo::BigInt mult = inner_product(G, chi, xi);
      r.multiplicities.push_back(mult);
      if (mult != 1) {
        r.detail = "identificationANorbits case 3: xi does not occur with multiplicity 1";
        return r;
      }
      if (r.xi_norm != 1) {
        r.detail = "identificationANorbits case 3: xi is not irreducible";
        return r;
      }
      break;
    }
  }
  r.ok = true;
  return r;
}

std::vector<LinChar> tilde_orbit(const GroupCtx& G, const LinChar& a, std::uint64_t max_size) {
  Conditions c = conditions_of(G, a);
  if (!c.staircase) throw std::invalid_argument("tilde_orbit: character is not staircase");
  std::unordered_set<LinChar, LinCharHash> seen{a};
  std::deque<LinChar> queue{a};
  while (!queue.empty()) {
    LinChar cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= G.N(); ++i)
      for (int j = i + 1; j <= G.N(); ++j)
        for (int al = 1; al < G.q(); ++al) {
          LinChar nxt = dot_right_tilde(G, cur, i, j, gf::Elem(al));
          if (seen.insert(nxt).second) {
            if (seen.size() > max_size) throw BudgetError("tilde_orbit: size cap exceeded");
            queue.push_back(nxt);
          }
        }
  }
  // the Utilde-orbit of a staircase character is the full verge fibre
  std::vector<LinChar> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  for (const LinChar& b : out) {
    Conditions cb = conditions_of(G, b);
    if (cb.verge != c.verge) throw std::logic_error("tilde_orbit: member with a different verge");
  }
  std::uint64_t fibre = 0;
  {
    LinChar probe = zero_char(G);
    std::uint64_t total = G.u_order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t k = probe.v.size(); k-- > 0;) {
        probe.v[k] = gf::Elem(v % std::uint64_t(G.q()));
        v /= std::uint64_t(G.q());
      }
      if (conditions_of(G, probe).verge == c.verge) ++fibre;
    }
  }
  if (fibre != out.size())
    throw std::logic_error("tilde_orbit: orbit does not exhaust the verge fibre");
  return out;
}

BasicSet make_basic_set(const GroupCtx& G, const std::vector<std::pair<Pos, gf::Elem>>& s) {
  BasicSet bs;
  std::set<Pos> D;
  for (const auto& [p, val] : s) {
    if (!G.in_pup(p.i, p.j))
      throw std::invalid_argument("basic set: position not in pUP");
    if (val == 0) throw std::invalid_argument("basic set: Phi must take nonzero values");
    if (!D.insert(p).second) throw std::invalid_argument("basic set: repeated position");
    bs.phi[p] = val;
  }
  // condition (i): close under the antidiagonal mirror
  for (const auto& [p, val] : s) D.insert({G.mir(p.j), G.mir(p.i)});
  // condition (ii): at most one entry per row and per column of UR
  std::set<int> rows, cols;
  for (const Pos& p : D) {
    if (!rows.insert(p.i).second)
      throw std::invalid_argument("basic set condition (ii): row " + std::to_string(p.i) +
                                  " of UR meets D twice");
    if (!cols.insert(p.j).second)
      throw std::invalid_argument("basic set condition (ii): column " + std::to_string(p.j) +
                                  " of UR meets D twice");
  }
  bs.D.assign(D.begin(), D.end());
  return bs;
}

bool is_main_separated(const GroupCtx& G, const LinChar& a) {
  Conditions c = conditions_of(G, a);
  if (!c.staircase) return false;
  LimbData L = limbs_and_places(G, c);
  std::set<Pos> limb(L.limb.begin(), L.limb.end());
  for (const Pos& m : c.mc)
    if (limb.contains(m)) return false;
  return true;
}

LinChar basic_verge(const GroupCtx& G, const BasicSet& bs) {
  LinChar a = zero_char(G);
  for (const auto& [p, val] : bs.phi) a.v[std::size_t(G.pup_index(p.i, p.j))] = val;
  return a;
}

ClassFunction supercharacter(const GroupCtx& G, const BasicSet& bs) {
  ClassFunction out = trivial_character(G);
  for (const auto& [p, val] : bs.phi)
    out = cf_mul(out, elementary_character(G, elementary_datum(G, p, val)));
  return out;
}

ANDecomposition decompose_AN(const GroupCtx& G, const BasicSet& bs, std::uint64_t max_size) {
  ANDecomposition r;
  r.xi_multiplicity = 0;
  LinChar A = basic_verge(G, bs);
  r.verge = A;
  Conditions c = conditions_of(G, A);
  if (!c.staircase) {
    r.detail = "DecANorbits: A(D,Phi) is not staircase";
    return r;
  }
  if (c.verge != A) {
    r.detail = "DecANorbits: A(D,Phi) is not a verge character";
    return r;
  }
  if (!is_main_separated(G, A)) {
    r.detail = "mainsep: A(D,Phi) is not main separated";
    return r;
  }
  for (const Pos& p : bs.D)
    if (p.j == G.mir(p.i)) r.has_antidiagonal = true;

  // partition the Utilde-orbit into U-orbits
  std::vector<LinChar> fibre = tilde_orbit(G, A, max_size);
  std::set<LinChar> remaining(fibre.begin(), fibre.end());
  while (!remaining.empty()) {
    Orbit o = enumerate_orbit(G, *remaining.begin(), max_size);
    for (const LinChar& m : o.members) {
      if (!remaining.erase(m)) {
        r.detail = "DecANorbits: U-orbits do not partition the Utilde-orbit";
        return r;
      }
    }
    if (!o.core) {
      r.detail = "classifybycore: a U-orbit without a core character";
      return r;
    }
    if (!is_main_separated(G, *o.core)) {
      r.detail = "DecANorbits: a core in the decomposition is not main separated";
      return r;
    }
    if (conditions_of(G, *o.core).verge != A) {
      r.detail = "DecANorbits: a core in the decomposition has a different verge";
      return r;
    }
    r.cores.push_back(*o.core);
    r.orbits.push_back(std::move(o));
  }

  // character bookkeeping: the restricted module character equals the sum of
  // the orbit characters, and matches xi_{D,Phi} when D avoids the antidiagonal
  ClassFunction sum = member_set_character(G, fibre);
  ClassFunction check{std::vector<cyclo::CycInt>(sum.vals.size(), cyclo::CycInt(G.field().p()))};
  for (const Orbit& o : r.orbits) check = cf_add(check, orbit_character(G, o));
  if (!cf_equal(sum, check)) {
    r.detail = "DecANorbits: orbit characters do not sum to the restricted module character";
    return r;
  }
  ClassFunction xi = supercharacter(G, bs);
  r.xi_multiplicity = inner_product(G, sum, xi);
  if (!r.has_antidiagonal) {
    r.character_identity = cf_equal(sum, xi);
    if (!r.character_identity) {
      r.detail = "DecANorbits: restriction differs from xi_{D,Phi}";
      return r;
    }
  } else if (r.xi_multiplicity < 1) {
    r.detail = "DecANorbits: xi_{D,Phi} does not occur in the restriction";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace sylow

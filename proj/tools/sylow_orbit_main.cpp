// sylow-orbit: exact computations with the monomial basis of CU for U a
// p-Sylow subgroup of a finite classical group of type B, C or D (p odd).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "sylow/accept.hpp"
#include "sylow/superchars.hpp"

using nlohmann::json;
using namespace sylow;

namespace {

struct CommonArgs {
  std::string type = "B";
  int n = 1;
  long q = 3;
  bool as_json = false;
  bool as_csv = false;
  std::uint64_t seed = 1;
  std::uint64_t max_group = kGroupSizeGuard;
  std::uint64_t max_orbit = kOrbitSizeGuard;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_field = true) {
  cmd->add_option("--type", a.type, "Lie type family: B, C or D")->required();
  cmd->add_option("--n", a.n, "rank")->required();
  if (with_field) cmd->add_option("--q", a.q, "field size, an odd prime power");
  cmd->add_flag("--json", a.as_json, "emit JSON");
  cmd->add_flag("--csv", a.as_csv, "emit CSV");
  cmd->add_option("--seed", a.seed, "seed for sampled checks");
  cmd->add_option("--max-group-size", a.max_group, "group enumeration cap");
  cmd->add_option("--max-orbit-size", a.max_orbit, "orbit enumeration cap");
}

GroupCtx make_ctx(const CommonArgs& a) {
  if (a.type.size() != 1) throw std::invalid_argument("unknown type (expected B, C or D)");
  return GroupCtx(lie_type(family_from_char(a.type[0]), a.n), gf::FieldCtx::from_q(a.q));
}

json meta(const CommonArgs& a) {
  return json{{"type", a.type}, {"n", a.n}, {"q", a.q}, {"seed", a.seed}};
}

json pos_list(const std::vector<Pos>& ps) {
  json out = json::array();
  for (const Pos& p : ps) out.push_back({p.i, p.j});
  return out;
}

json char_json(const GroupCtx& G, const LinChar& a) {
  json entries = json::array();
  for (std::size_t k = 0; k < a.v.size(); ++k)
    if (a.v[k] != 0)
      entries.push_back({G.pup()[k].i, G.pup()[k].j, G.field().to_string(a.v[k])});
  return json{{"entries", entries}};
}

int cmd_gen(const CommonArgs& a, bool table) {
  GroupCtx G = make_ctx(a);
  std::uint64_t order = G.u_order();
  if (a.as_json) {
    json out = meta(a);
    out["pup_size"] = G.pup().size();
    out["group_order"] = order;
    if (table) {
      if (order > a.max_group) throw BudgetError("gen: table larger than --max-group-size");
      json rows = json::array();
      for (std::uint64_t idx = 0; idx < order; ++idx) {
        Coords c = extract_coords(G, u_element(G, idx));
        json row = json::array();
        for (gf::Elem e : c) row.push_back(G.field().to_string(e));
        rows.push_back(row);
      }
      out["coordinates"] = rows;
    }
    std::cout << out.dump(2) << "\n";
  } else if (a.as_csv) {
    std::cout << "index";
    for (const Pos& p : G.pup()) std::cout << ",u_" << p.i << "_" << p.j;
    std::cout << "\n";
    if (table) {
      if (order > a.max_group) throw BudgetError("gen: table larger than --max-group-size");
      for (std::uint64_t idx = 0; idx < order; ++idx) {
        Coords c = extract_coords(G, u_element(G, idx));
        std::cout << idx;
        for (gf::Elem e : c) std::cout << "," << G.field().to_string(e);
        std::cout << "\n";
      }
    }
  } else {
    std::cout << "type " << a.type << a.n << " over F_" << a.q << ": |pUP| = " << G.pup().size()
              << ", |U| = " << order << " (seed " << a.seed << ")\n";
  }
  return 0;
}

int cmd_regions(const CommonArgs& a) {
  LieType t = lie_type(family_from_char(a.type[0]), a.n);
  const Region named[] = {Region::UP, Region::CC, Region::RP,  Region::UPC, Region::RPC,
                          Region::PUP, Region::Tril, Region::Trir, Region::KL,  Region::PKL};
  if (a.as_json) {
    json out = meta(a);
    for (Region r : named) out[region_name(r)] = pos_list(region_members(t, r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (Region r : named) {
      std::cout << region_name(r) << ":";
      for (const Pos& p : region_members(t, r)) std::cout << " (" << p.i << "," << p.j << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

json orbit_json(const GroupCtx& G, const Orbit& o) {
  json jo;
  jo["verge"] = char_json(G, o.cond.verge);
  jo["core"] = o.core ? char_json(G, *o.core) : json(nullptr);
  jo["size"] = o.members.size();
  if (o.cond.staircase) {
    LimbData L = limbs_and_places(G, o.cond);
    jo["places"] = pos_list(L.places);
  } else {
    jo["places"] = json(nullptr);
  }
  jo["mc"] = pos_list(o.cond.mc);
  return jo;
}

int cmd_orbits(const CommonArgs& a) {
  GroupCtx G = make_ctx(a);
  std::vector<Orbit> orbits = orbit_decomposition(G, a.max_orbit, a.max_group);
  if (a.as_json) {
    json out = meta(a);
    json arr = json::array();
    for (const Orbit& o : orbits) arr.push_back(orbit_json(G, o));
    out["orbits"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (a.as_csv) {
    // orbit character table: rows = orbits, columns = class representatives
    std::vector<std::uint64_t> reps = class_representatives(G, a.max_group);
    std::cout << "orbit";
    for (std::uint64_t r : reps) std::cout << ",class_" << r;
    std::cout << "\n";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      ClassFunction chi = orbit_character(G, orbits[k]);
      std::cout << k;
      for (std::uint64_t r : reps) std::cout << ",\"" << chi.vals[r].to_string() << "\"";
      std::cout << "\n";
    }
  } else {
    std::cout << orbits.size() << " orbits on " << G.u_order() << " characters (seed " << a.seed
              << ")\n";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      const Orbit& o = orbits[k];
      std::cout << "  orbit " << k << ": size " << o.members.size()
                << (o.cond.staircase ? " staircase" : "") << " mc =";
      for (const Pos& m : o.cond.mc) std::cout << " (" << m.i << "," << m.j << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const CommonArgs& a) {
  GroupCtx G = make_ctx(a);
  std::vector<Orbit> orbits = orbit_decomposition(G, a.max_orbit, a.max_group);
  json arr = json::array();
  bool all_ok = true;
  for (const Orbit& o : orbits) {
    json jo = orbit_json(G, o);
    if (o.cond.staircase) {
      LimbData L = limbs_and_places(G, o.cond);
      std::uint64_t expect = 1;
      for (std::size_t k = 0; k < L.places.size(); ++k) expect *= std::uint64_t(G.q());
      bool ok = o.core.has_value() && o.members.size() == expect;
      jo["classified"] = ok;
      all_ok = all_ok && ok;
    } else {
      auto [b, w] = staircase_transform(G, o.rep);
      jo["staircase_model"] = char_json(G, b);
      (void)w;
    }
    arr.push_back(jo);
  }
  json out = meta(a);
  out["orbits"] = arr;
  out["ok"] = all_ok;
  if (a.as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (all_ok ? "classification checks passed" : "classification checks FAILED")
              << " over " << orbits.size() << " orbits\n";
  return all_ok ? 0 : 1;
}

int cmd_superchar(const CommonArgs& a, const std::vector<std::string>& basic,
                  const std::vector<long>& alphas) {
  GroupCtx G = make_ctx(a);
  if (basic.size() != alphas.size())
    throw std::invalid_argument("superchar: need one --alpha per --basic position");
  std::vector<std::pair<Pos, gf::Elem>> s;
  for (std::size_t k = 0; k < basic.size(); ++k) {
    int i = 0, j = 0;
    if (std::sscanf(basic[k].c_str(), "%d,%d", &i, &j) != 2)
      throw std::invalid_argument("superchar: --basic expects \"i,j\"");
    if (alphas[k] % a.q == 0) throw std::invalid_argument("superchar: alpha must be nonzero");
    s.emplace_back(Pos{i, j}, G.field().from_int(alphas[k]));
  }
  BasicSet bs = make_basic_set(G, s);
  ANDecomposition dec = decompose_AN(G, bs, a.max_orbit);

  json out = meta(a);
  out["basic_set"] = pos_list(bs.D);
  json degrees = json::array();
  for (const auto& [p, val] : bs.phi) {
    ElementaryDatum d = elementary_datum(G, p, val);
    cyclo::BigInt deg = 1;
    for (int k = 0; k < int(d.rho.size()); ++k) deg *= G.q();
    degrees.push_back({{"position", {p.i, p.j}},
                       {"alpha", G.field().to_string(val)},
                       {"degree", deg.str()}});
  }
  out["elementary_degrees"] = degrees;
  out["verge"] = char_json(G, dec.verge);
  json parts = json::array();
  for (std::size_t k = 0; k < dec.orbits.size(); ++k)
    parts.push_back({{"size", dec.orbits[k].members.size()},
                     {"core", char_json(G, dec.cores[k])}});
  out["orbit_partition"] = parts;
  out["antidiagonal_case"] = dec.has_antidiagonal;
  out["character_identity"] = dec.character_identity;
  out["xi_multiplicity"] = dec.xi_multiplicity.str() + "/1";
  out["ok"] = dec.ok;
  if (!dec.ok) out["violation"] = dec.detail;

  if (a.as_json) {
    std::cout << out.dump(2) << "\n";
  } else if (a.as_csv) {
    // character table: supercharacter and the orbit characters on class reps
    std::vector<std::uint64_t> reps = class_representatives(G, a.max_group);
    ClassFunction xi = supercharacter(G, bs);
    std::cout << "character";
    for (std::uint64_t r : reps) std::cout << ",class_" << r;
    std::cout << "\n";
    std::cout << "xi";
    for (std::uint64_t r : reps) std::cout << ",\"" << xi.vals[r].to_string() << "\"";
    std::cout << "\n";
    for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
      ClassFunction chi = orbit_character(G, dec.orbits[k]);
      std::cout << "orbit_" << k;
      for (std::uint64_t r : reps) std::cout << ",\"" << chi.vals[r].to_string() << "\"";
      std::cout << "\n";
    }
  } else {
    std::cout << "decomposition " << (dec.ok ? "verified" : ("FAILED: " + dec.detail)) << "; "
              << dec.orbits.size() << " orbit modules, xi multiplicity " << dec.xi_multiplicity
              << "\n";
  }
  return dec.ok ? 0 : 1;
}

int cmd_verify(const CommonArgs& a, bool have_cfg, int criterion) {
  accept::Options opt;
  opt.seed = a.seed;
  opt.max_group = a.max_group;
  opt.max_orbit = a.max_orbit;
  std::vector<accept::Result> results;
  if (have_cfg) {
    results = accept::run_config_suite(family_from_char(a.type[0]), a.n, a.q, opt);
  } else if (criterion > 0) {
    results.push_back(accept::run_criterion(criterion, opt));
  } else {
    results = accept::run_all(opt);
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  %d. %s (%.1fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
  }
  std::printf("%s (seed %llu)\n", all ? "all checks passed" : "verification FAILED",
              static_cast<unsigned long long>(a.seed));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomial-basis computations for p-Sylow subgroups of classical groups"};
  app.require_subcommand(1);

  CommonArgs a;
  bool gen_table = false;
  std::vector<std::string> basic;
  std::vector<long> alphas;
  int criterion = 0;

  CLI::App* gen = app.add_subcommand("gen", "group order and coordinate table");
  add_common(gen, a);
  gen->add_flag("--table", gen_table, "include the full coordinate table");

  CLI::App* regions = app.add_subcommand("regions", "named position regions");
  add_common(regions, a, false);

  CLI::App* orbits = app.add_subcommand("orbits", "orbit decomposition of the character space");
  add_common(orbits, a);

  CLI::App* classify = app.add_subcommand("classify", "staircase classification report");
  add_common(classify, a);

  CLI::App* superchar = app.add_subcommand("superchar", "Andre-Neto supercharacter decomposition");
  add_common(superchar, a);
  superchar->add_option("--basic", basic, "basic-set position \"i,j\" (repeatable)");
  superchar->add_option("--alpha", alphas, "value for the matching --basic entry (repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--type", a.type, "restrict to one configuration: type");
  verify->add_option("--n", a.n, "restrict to one configuration: rank");
  verify->add_option("--q", a.q, "restrict to one configuration: field size");
  verify->add_option("--criterion", criterion, "run a single fixed criterion (1..8)");
  verify->add_option("--seed", a.seed, "seed for sampled checks");
  verify->add_option("--max-group-size", a.max_group, "group enumeration cap");
  verify->add_option("--max-orbit-size", a.max_orbit, "orbit enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(a, gen_table);
    if (regions->parsed()) return cmd_regions(a);
    if (orbits->parsed()) return cmd_orbits(a);
    if (classify->parsed()) return cmd_classify(a);
    if (superchar->parsed()) return cmd_superchar(a, basic, alphas);
    if (verify->parsed()) return cmd_verify(a, verify->count("--type") > 0, criterion);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

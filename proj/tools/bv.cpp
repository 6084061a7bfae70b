// Command-line front end: structure checks, gallery access, searches and the acceptance suite.

#include "bv/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace bv;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUndecided = 2;
constexpr int kUsage = 64;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    default: return kUndecided;
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- structure input

struct StructureInput {
  std::string group;
  bool from_stdin = false;
  std::string file;
  std::string a1, c1, a2, c2;
  std::string a, c, g;
  std::vector<std::string> g0;
  bool zero_based = false;
};

void add_structure_options(CLI::App* cmd, StructureInput& in, bool mixed) {
  cmd->add_option("--group", in.group, "group descriptor, e.g. sym:8, sl2:13, h4:sl2:11");
  cmd->add_flag("--stdin", in.from_stdin, "read a structure JSON document from standard input");
  cmd->add_option("--file", in.file, "read a structure JSON document from a file");
  cmd->add_flag("--zero-based", in.zero_based, "cycle literals use points 0..n-1");
  if (mixed) {
    cmd->add_option("--a", in.a, "element a of G0");
    cmd->add_option("--c", in.c, "element c of G0");
    cmd->add_option("--g", in.g, "element g outside G0");
    cmd->add_option("--g0", in.g0, "generators of G0 (groups other than h4)");
  } else {
    cmd->add_option("--a1", in.a1, "first pair, a");
    cmd->add_option("--c1", in.c1, "first pair, c");
    cmd->add_option("--a2", in.a2, "second pair, a");
    cmd->add_option("--c2", in.c2, "second pair, c");
  }
}

json read_json_stream(std::istream& is, const std::string& where) {
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw UsageError("cannot parse JSON from " + where + ": " + e.what());
  }
}

json load_structure(const StructureInput& in, const std::string& default_kind) {
  json j;
  if (in.from_stdin) {
    j = read_json_stream(std::cin, "standard input");
  } else if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot open " + in.file);
    j = read_json_stream(f, in.file);
  } else {
    if (in.group.empty()) throw UsageError("give --group with element literals, --stdin or --file");
    j["group"] = in.group;
    j["kind"] = default_kind;
    if (default_kind == "unmixed") {
      for (auto [k, v] : {std::pair{"a1", &in.a1}, {"c1", &in.c1}, {"a2", &in.a2}, {"c2", &in.c2}})
        if (!v->empty()) j[k] = *v;
    } else {
      for (auto [k, v] : {std::pair{"a", &in.a}, {"c", &in.c}, {"g", &in.g}})
        if (!v->empty()) j[k] = *v;
      if (!in.g0.empty()) j["g0"] = in.g0;
    }
    if (in.zero_based) j["zero_based"] = true;
  }
  if (!j.is_object() || !j.contains("group")) throw UsageError("structure document needs a 'group' field");
  if (!j.contains("kind")) j["kind"] = default_kind;
  return j;
}

std::optional<SigmaStrategy> parse_strategy(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "exact") return SigmaStrategy::exact;
  if (s == "cycle-type") return SigmaStrategy::cycle_type;
  if (s == "order-divisor") return SigmaStrategy::order_divisor;
  throw UsageError("unknown strategy '" + s + "'");
}

TypeTriple parse_type(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::vector<std::uint64_t> v;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(static_cast<std::uint64_t>(bv::detail::parse_int(item, "type")));
  if (v.size() != 3) throw UsageError("type must be r,s,t");
  return {v[0], v[1], v[2]};
}

void print_report_text(const std::string& title, const CheckReport& rep) {
  std::cout << title << ": " << to_string(rep.verdict) << "\n";
  for (const auto& c : rep.conditions) {
    std::cout << "  " << c.id << ": " << (c.ok ? (*c.ok ? "ok" : "FAILED") : "undecided");
    if (!c.strategy.empty()) std::cout << " [" << c.strategy << "]";
    if (!c.detail.empty()) std::cout << " " << c.detail;
    std::cout << "\n";
  }
  if (rep.witness) std::cout << "  witness: " << *rep.witness << "\n";
  for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
}

// ---------------------------------------------------------------- check-unmixed / check-mixed

int cmd_check_unmixed(const StructureInput& in, const std::string& strategy, bool as_json) {
  json sj = load_structure(in, "unmixed");
  if (sj["kind"] != "unmixed") throw UsageError("expected an unmixed structure, got kind " + sj["kind"].dump());
  auto desc = descriptor_from_json(sj["group"]);
  CheckOptions opts;
  opts.force = parse_strategy(strategy);
  return with_group(desc, [&](const auto& grp) -> int {
    auto v = unmixed_from_json(grp, sj);
    auto rep = check_unmixed(grp, v, opts);
    if (as_json) {
      json out = unmixed_to_json(desc, grp, v);
      out["report"] = report_to_json(rep);
      emit(out);
    } else {
      print_report_text("unmixed structure on " + grp.name(), rep);
    }
    return exit_for(rep.verdict);
  });
}

template <FiniteGroup G>
std::vector<typename G::element_type> parse_g0_generators(const G& grp, const json& sj) {
  if (!sj.contains("g0") || !sj["g0"].is_array() || sj["g0"].empty())
    throw UsageError("for groups other than h4, give the generators of G0 (--g0 or a 'g0' array)");
  std::vector<typename G::element_type> gens;
  bool zb = sj.value("zero_based", false);
  for (const auto& x : sj["g0"]) gens.push_back(parse_element(grp, x, zb));
  return gens;
}

int cmd_check_mixed(const StructureInput& in, bool no_criterion, bool as_json) {
  json sj = load_structure(in, "mixed");
  if (sj["kind"] != "mixed") throw UsageError("expected a mixed structure, got kind " + sj["kind"].dump());
  auto desc = descriptor_from_json(sj["group"]);
  MixedOptions mo;
  mo.allow_vz3 = !no_criterion;
  return with_group(desc, [&](const auto& grp) -> int {
    using G = std::decay_t<decltype(grp)>;
    auto m = mixed_from_json(grp, sj);
    CheckReport rep;
    if constexpr (is_h4<G>::value) {
      rep = check_mixed(grp, m, mo);
    } else {
      auto sub = generated_subgroup(grp, parse_g0_generators(grp, sj), mo.caps.closure);
      rep = check_mixed(grp, [&](const auto& x) { return sub.count(x) > 0; }, m, mo);
    }
    if (as_json) {
      json out = mixed_to_json(desc, grp, m);
      if (sj.contains("g0")) out["g0"] = sj["g0"];
      out["report"] = report_to_json(rep);
      emit(out);
    } else {
      print_report_text("mixed quadruple on " + grp.name(), rep);
    }
    return exit_for(rep.verdict);
  });
}

// ---------------------------------------------------------------- reality

void print_reality_text(const RealityVerdict& v) {
  auto show = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "undecided"; };
  std::cout << "biholo_conjugate: " << show(v.biholo_conjugate) << "\n";
  std::cout << "real: " << show(v.real) << "\n";
  std::cout << "strongly_real: " << show(v.strongly_real) << "\n";
  std::cout << "path: " << v.path << "\n";
  for (const auto& w : v.witnesses) std::cout << "  witness: " << w << "\n";
  for (const auto& n : v.notes) std::cout << "  note: " << n << "\n";
}

int cmd_reality(const StructureInput& in, const std::string& default_kind, bool as_json) {
  json sj = load_structure(in, default_kind);
  auto desc = descriptor_from_json(sj["group"]);
  bool mixed = sj["kind"] == "mixed";
  return with_group(desc, [&](const auto& grp) -> int {
    using G = std::decay_t<decltype(grp)>;
    RealityVerdict v;
    if (mixed) {
      if constexpr (is_h4<G>::value) {
        using H = typename G::inner_type;
        if constexpr (has_aut_backend<H>) {
          auto m = mixed_from_json(grp, sj);
          v = with_aut(grp.inner(), [&](const auto& aut) { return reality_mixed(grp, m, aut); });
        } else {
          throw UsageError("no automorphism backend for " + grp.inner().name());
        }
      } else {
        throw UsageError("mixed reality is supported for h4 groups");
      }
    } else {
      if constexpr (has_aut_backend<G>) {
        auto u = unmixed_from_json(grp, sj);
        v = with_aut(grp, [&](const auto& aut) { return reality_unmixed(grp, u, aut); });
      } else {
        throw UsageError("no automorphism backend for " + grp.name());
      }
    }
    if (as_json) {
      json out;
      out["group"] = descriptor_to_json(desc);
      out["kind"] = mixed ? "mixed" : "unmixed";
      out["reality"] = reality_to_json(v, !mixed);
      emit(out);
    } else {
      print_reality_text(v);
    }
    return v.biholo_conjugate.has_value() && v.real.has_value() ? kPass : kUndecided;
  });
}

// ---------------------------------------------------------------- gallery

struct GalleryParams {
  std::string name;
  std::int64_t n = 0, p = 0, q = 0, k = 0, q1 = 0, q2 = 0;
  std::string torus = "split";
  std::string want = "SL";
};

json perm_pair_json(const std::string& group, const SymGroup& S, const GeneratingPair<Perm>& pr,
                    const std::optional<Perm>& gamma) {
  json j;
  j["group"] = descriptor_to_json(parse_descriptor(group));
  j["kind"] = "pair";
  j["a"] = S.format(pr.a, false);
  j["c"] = S.format(pr.c, false);
  j["type"] = bv::detail::perm_type(pr.a, pr.c).to_string();
  if (gamma) {
    j["gamma"] = S.format(*gamma, false);
    j["gamma_parity"] = parity(*gamma) == Parity::odd ? "odd" : "even";
  }
  return j;
}

json mat_pair_json(std::int64_t p, const GeneratingPair<Mat2>& pr) {
  SL2Group G(p);
  json j;
  j["group"] = descriptor_to_json(parse_descriptor("sl2:" + std::to_string(p)));
  j["kind"] = "pair";
  j["a"] = G.format(pr.a);
  j["c"] = G.format(pr.c);
  j["type"] = type_of(G, pr.a, pr.c).to_string();
  return j;
}

const char* kGalleryNames =
    "sym-thm (--n), alt-alp1 (--n --p --q), alt-alp2-1 (--n), alt-alp2-2 (--p), alt-alp3 (--k), "
    "alt-intro3 (--p), sl2-46p (--p), sl2-qqq-split (--p --q), sl2-qqq-nonsplit (--p --q), "
    "sl2-555 (--p --want SL|SLW), sl2-q1q2 (--p --q1 --q2 --case split|nonsplit), sl2-intro1 (--p), "
    "psl2-intro1 (--p), mixed-intro2 (--p)";

json gallery_json(const GalleryParams& gp) {
  auto need = [](std::int64_t v, const char* flag) {
    if (v == 0) throw UsageError(std::string("missing ") + flag);
    return v;
  };
  const auto& nm = gp.name;
  if (nm == "sym-thm") {
    int n = static_cast<int>(need(gp.n, "--n"));
    auto v = sn_thm_sym(n);
    auto d = parse_descriptor("sym:" + std::to_string(n));
    return unmixed_to_json(d, SymGroup(n), v);
  }
  if (nm == "alt-alp1") {
    auto pr = an_alp1(static_cast<int>(need(gp.n, "--n")), static_cast<int>(need(gp.p, "--p")),
                      static_cast<int>(need(gp.q, "--q")));
    return perm_pair_json("alt:" + std::to_string(gp.n), SymGroup(static_cast<int>(gp.n)), pr, std::nullopt);
  }
  if (nm == "alt-alp2-1" || nm == "alt-alp2-2" || nm == "alt-alp3") {
    PermPairWitness w = nm == "alt-alp2-1"   ? an_alp2_1(static_cast<int>(need(gp.n, "--n")))
                        : nm == "alt-alp2-2" ? an_alp2_2(static_cast<int>(need(gp.p, "--p")))
                                             : an_alp3(static_cast<int>(need(gp.k, "--k")));
    int deg = static_cast<int>(w.pair.a.degree());
    return perm_pair_json("alt:" + std::to_string(deg), SymGroup(deg), w.pair, w.gamma);
  }
  if (nm == "alt-intro3") {
    auto p = need(gp.p, "--p");
    auto v = an_intro3(static_cast<int>(p));
    int deg = static_cast<int>(v.p1.a.degree());
    return unmixed_to_json(parse_descriptor("alt:" + std::to_string(deg)), AltGroup(deg), v);
  }
  if (nm == "sl2-46p") return mat_pair_json(gp.p, sl2_type46p(need(gp.p, "--p")));
  if (nm == "sl2-qqq-split") return mat_pair_json(gp.p, sl2_qqq_split(need(gp.p, "--p"), need(gp.q, "--q")));
  if (nm == "sl2-qqq-nonsplit") return mat_pair_json(gp.p, sl2_qqq_nonsplit(need(gp.p, "--p"), need(gp.q, "--q")));
  if (nm == "sl2-555") {
    Sl2Coset want;
    if (gp.want == "SL") want = Sl2Coset::SL;
    else if (gp.want == "SLW") want = Sl2Coset::SLW;
    else throw UsageError("--want must be SL or SLW");
    auto j = mat_pair_json(gp.p, sl2_555_coset(need(gp.p, "--p"), want));
    j["coset"] = gp.want;
    return j;
  }
  if (nm == "sl2-q1q2") {
    TorusCase tc;
    if (gp.torus == "split") tc = TorusCase::split;
    else if (gp.torus == "nonsplit") tc = TorusCase::nonsplit;
    else throw UsageError("--case must be split or nonsplit");
    return mat_pair_json(gp.p, sl2_q1q2(need(gp.p, "--p"), need(gp.q1, "--q1"), need(gp.q2, "--q2"), tc));
  }
  if (nm == "sl2-intro1") {
    auto p = need(gp.p, "--p");
    return unmixed_to_json(parse_descriptor("sl2:" + std::to_string(p)), SL2Group(p), sl2_intro1(p));
  }
  if (nm == "psl2-intro1") {
    auto p = need(gp.p, "--p");
    return unmixed_to_json(parse_descriptor("psl2:" + std::to_string(p)), PSL2Group(p), psl2_intro1(p));
  }
  if (nm == "mixed-intro2") {
    auto p = need(gp.p, "--p");
    auto m = mixed_intro2(p);
    H4Group<SL2Group> G{SL2Group(p)};
    return mixed_to_json(parse_descriptor("h4:sl2:" + std::to_string(p)), G, m);
  }
  throw UsageError("unknown gallery entry '" + nm + "'; available: " + kGalleryNames);
}

// ---------------------------------------------------------------- search

struct SearchParams {
  std::string group;
  std::size_t limit = 10;
  bool up_to_orbit = false;
  std::string type1, type2;
  bool no_mu_prune = false;
  unsigned threads = 1;
  bool random = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000;
  std::string hunt;
  std::size_t catalogue_max = 0;
  std::string mode = "unmixed";
};

json mixed_findings_json(const GroupDescriptor& desc, const TableGroup& T, const MixedTableResult& r,
                         const std::function<std::string(Tid)>& fmt) {
  auto subs = index_two_subgroups(T);
  json arr = json::array();
  for (const auto& f : r.found) {
    std::vector<Tid> gens;
    Bits span(T.words(), 0);
    bits_set(span, 0);
    for (auto x : bits_list(subs[f.subgroup_index])) {
      if (bits_test(span, x)) continue;
      gens.push_back(T.id(x));
      span = T.closure_bits(gens);
    }
    json j;
    j["group"] = descriptor_to_json(desc);
    j["kind"] = "mixed";
    json g0 = json::array();
    for (auto g : gens) g0.push_back(fmt(g));
    j["g0"] = g0;
    j["a"] = fmt(f.pair.a);
    j["c"] = fmt(f.pair.c);
    j["g"] = fmt(f.g);
    arr.push_back(j);
  }
  return arr;
}

int cmd_search(const SearchParams& sp, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); };
  if (sp.mode != "unmixed" && sp.mode != "mixed") throw UsageError("--mode must be unmixed or mixed");
  if (sp.catalogue_max) {
    auto rep = scan_catalogue(sp.catalogue_max, sp.mode == "mixed" ? ScanMode::mixed : ScanMode::unmixed);
    if (as_json) {
      emit(scan_to_json(rep));
    } else {
      std::cout << "catalogue scan (" << sp.mode << ", order <= " << sp.catalogue_max << "): " << rep.entries.size()
                << " groups, " << rep.total_found << " found\n";
      for (const auto& e : rep.entries)
        if (e.found) std::cout << "  " << e.id << ": " << e.found << "\n";
      std::cout << "note: " << rep.disclaimer << "\n";
    }
    return kPass;
  }
  if (sp.group.empty()) throw UsageError("search needs --group or --catalogue");
  auto desc = parse_descriptor(sp.group);
  SearchOptions opt;
  opt.limit = sp.limit;
  opt.up_to_orbit = sp.up_to_orbit;
  opt.mu_prune = !sp.no_mu_prune;
  opt.threads = sp.threads;
  if (!sp.type1.empty()) opt.type1 = parse_type(sp.type1);
  if (!sp.type2.empty()) opt.type2 = parse_type(sp.type2);
  return with_group(desc, [&](const auto& grp) -> int {
    using G = std::decay_t<decltype(grp)>;
    json report;
    report["group"] = descriptor_to_json(desc);
    json found = json::array();
    if (sp.mode == "mixed") {
      auto tab = tabulate(grp);
      auto r = search_mixed_table(tab.table, sp.limit);
      found = mixed_findings_json(desc, tab.table, r, [&](Tid x) { return grp.format(tab.at(x), false); });
      report["mode"] = "mixed";
      report["index_two_subgroups"] = r.index_two_subgroups;
      report["complete"] = sp.limit == 0 || r.found.size() < sp.limit;
      report["seed"] = nullptr;
    } else if (sp.random) {
      auto tab = tabulate(grp);
      auto r = random_unmixed_table(tab.table, sp.seed, sp.budget);
      if (r.found) found.push_back(unmixed_to_json(desc, grp, tab.lift(*r.found)));
      report["mode"] = "random";
      report["samples"] = r.samples;
      report["complete"] = false;
      report["seed"] = sp.seed;
    } else if (!sp.hunt.empty()) {
      RealityWant want;
      if (sp.hunt == "biholo-not-real") want = RealityWant::biholo_not_real;
      else if (sp.hunt == "not-biholo") want = RealityWant::not_biholo;
      else if (sp.hunt == "real") want = RealityWant::real;
      else throw UsageError("--hunt must be biholo-not-real, not-biholo or real");
      if constexpr (has_aut_backend<G>) {
        auto r = with_aut(grp, [&](const auto& aut) { return hunt_reality(grp, aut, want, opt, sp.budget); });
        for (const auto& v : r.found) found.push_back(unmixed_to_json(desc, grp, v));
        report["mode"] = "hunt:" + sp.hunt;
        report["examined"] = r.examined;
        report["complete"] = r.exhausted;
      } else {
        throw UsageError("no automorphism backend for " + grp.name());
      }
      report["seed"] = nullptr;
    } else {
      auto r = enumerate_unmixed(grp, opt);
      for (const auto& v : r.found) found.push_back(unmixed_to_json(desc, grp, v));
      report["mode"] = "unmixed";
      report["total"] = r.total;
      report["generating_pairs"] = r.generating_pairs;
      report["distinct_sigma"] = r.distinct_sigma;
      if (r.orbits) {
        report["orbits"] = r.orbits->au_orbits;
        report["orbits_without_exchange"] = r.orbits->bu_orbits;
      }
      report["complete"] = r.complete;
      report["seed"] = nullptr;
    }
    report["found"] = found;
    report["disclaimer"] = nullptr;
    report["elapsed_ms"] = elapsed();
    if (as_json) {
      emit(report);
    } else {
      std::cout << report["mode"].get<std::string>() << " search on " << grp.name() << ": " << found.size()
                << " reported";
      if (report.contains("total")) std::cout << " of " << report["total"] << " ordered structures";
      if (report.contains("orbits")) std::cout << ", " << report["orbits"] << " orbits";
      std::cout << "\n";
      for (const auto& f : found) {
        if (f["kind"] == "mixed")
          std::cout << "  a=" << f["a"].get<std::string>() << " c=" << f["c"].get<std::string>()
                    << " g=" << f["g"].get<std::string>() << "\n";
        else
          std::cout << "  (" << f["a1"].get<std::string>() << ", " << f["c1"].get<std::string>() << " ; "
                    << f["a2"].get<std::string>() << ", " << f["c2"].get<std::string>() << ")\n";
      }
    }
    return kPass;
  });
}

// ---------------------------------------------------------------- count-abelian / wallpaper-scan / verify-paper

int cmd_count_abelian(std::int64_t n, bool as_json) {
  auto c = count_abelian(n);
  if (as_json) {
    emit(abelian_to_json(n, c));
  } else {
    std::cout << "n = " << n << ": " << c.solutions << " normalized solutions, " << c.au_orbits << " orbits ("
              << c.bu_orbits << " without exchanging the pairs)\n";
    if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
  }
  return kPass;
}

int cmd_wallpaper(int d, std::int64_t m, bool printed, bool as_json) {
  WallpaperGroup W(d, m, printed);
  auto tab = tabulate(W, 100'000);
  auto r = wallpaper_scan_table(tab.table);
  auto desc = parse_descriptor("wallpaper:" + std::to_string(d) + ":" + std::to_string(m) + (printed ? ":printed" : ""));
  auto witness = tab.lift(r.witness);
  if (as_json) {
    json j;
    j["group"] = descriptor_to_json(desc);
    j["minimum"] = r.minimum;
    j["witness"] = unmixed_to_json(desc, W, witness);
    j["generating_pairs"] = r.generating_pairs;
    j["distinct_sigma"] = r.distinct_sigma;
    emit(j);
  } else {
    std::cout << W.name() << ": minimum |Sigma n Sigma'| = " << r.minimum << " over " << r.distinct_sigma
              << " Sigma sets\n  witness: (" << W.format(witness.p1.a) << ", " << W.format(witness.p1.c) << " ; "
              << W.format(witness.p2.a) << ", " << W.format(witness.p2.c) << ")\n";
  }
  return kPass;
}

int cmd_verify(const std::vector<int>& only, bool as_json) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= 12; ++i) ids.push_back(i);
  bool all = true;
  json arr = json::array();
  for (int id : ids) {
    auto r = verify::run_criterion(id);
    all = all && r.passed();
    if (as_json) arr.push_back(verify::result_to_json(r));
    else std::cout << verify::result_line(r) << std::endl;
  }
  if (as_json) emit(arr);
  return all ? kPass : kFail;
}

int run(int argc, char** argv) {
  CLI::App app{"Beauville structure toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

  StructureInput cu, cm, re;
  std::string strategy = "auto";
  auto* c_unmixed = app.add_subcommand("check-unmixed", "check an unmixed structure");
  add_structure_options(c_unmixed, cu, false);
  c_unmixed->add_option("--strategy", strategy, "auto | exact | cycle-type | order-divisor");
  c_unmixed->add_flag("--json", as_json, "machine-readable output");

  bool no_criterion = false;
  auto* c_mixed = app.add_subcommand("check-mixed", "check a mixed quadruple");
  add_structure_options(c_mixed, cm, true);
  c_mixed->add_flag("--no-criterion", no_criterion, "skip the H_[4] criterion and brute-force the conditions");
  c_mixed->add_flag("--json", as_json, "machine-readable output");

  GalleryParams gp;
  auto* c_gallery = app.add_subcommand("gallery", std::string("explicit generator systems: ") + kGalleryNames);
  c_gallery->add_option("name", gp.name, "gallery entry")->required();
  c_gallery->add_option("--n", gp.n);
  c_gallery->add_option("--p", gp.p);
  c_gallery->add_option("--q", gp.q);
  c_gallery->add_option("--k", gp.k);
  c_gallery->add_option("--q1", gp.q1);
  c_gallery->add_option("--q2", gp.q2);
  c_gallery->add_option("--case", gp.torus, "split | nonsplit");
  c_gallery->add_option("--want", gp.want, "SL | SLW");
  c_gallery->add_flag("--json", as_json, "accepted for symmetry; output is always JSON");

  SearchParams sp;
  auto* c_search = app.add_subcommand("search", "enumerate, sample or hunt structures");
  c_search->add_option("--group", sp.group, "group descriptor");
  c_search->add_option("--limit", sp.limit, "maximum structures reported (0: all)");
  c_search->add_flag("--up-to-orbit", sp.up_to_orbit, "reduce modulo the action on structures");
  c_search->add_option("--type1", sp.type1, "exact type of the first pair, r,s,t");
  c_search->add_option("--type2", sp.type2, "exact type of the second pair, r,s,t");
  c_search->add_flag("--no-mu-prune", sp.no_mu_prune, "keep pairs with mu >= 1");
  c_search->add_option("--threads", sp.threads, "pair-scan workers");
  c_search->add_flag("--random", sp.random, "seeded random search");
  c_search->add_option("--seed", sp.seed, "random seed");
  c_search->add_option("--budget", sp.budget, "samples (random) or structures examined (hunt)");
  c_search->add_option("--hunt", sp.hunt, "biholo-not-real | not-biholo | real");
  c_search->add_option("--catalogue", sp.catalogue_max, "scan the catalogue up to this order");
  c_search->add_option("--mode", sp.mode, "unmixed | mixed");
  c_search->add_flag("--json", as_json, "machine-readable output");

  std::int64_t abelian_n = 0;
  auto* c_abelian = app.add_subcommand("count-abelian", "count structures on (Z/n)^2");
  c_abelian->add_option("--n", abelian_n)->required();
  c_abelian->add_flag("--json", as_json, "machine-readable output");

  auto* c_reality = app.add_subcommand("reality", "decide biholomorphism to the conjugate and realness");
  add_structure_options(c_reality, re, false);
  c_reality->add_option("--a", re.a, "mixed: element a");
  c_reality->add_option("--c", re.c, "mixed: element c");
  c_reality->add_option("--g", re.g, "mixed: element g");
  c_reality->add_flag("--json", as_json, "machine-readable output");

  int wd = 0;
  std::int64_t wm = 0;
  bool printed = false;
  auto* c_wall = app.add_subcommand("wallpaper-scan", "minimum Sigma intersection on a wallpaper quotient");
  c_wall->add_option("--d", wd)->required();
  c_wall->add_option("--m", wm)->required();
  c_wall->add_flag("--printed-relation", printed, "use the printed d = 4 relation");
  c_wall->add_flag("--json", as_json, "machine-readable output");

  std::vector<int> criteria;
  auto* c_verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  c_verify->add_option("--criterion", criteria, "run only these criteria (1..12)");
  c_verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  if (*c_unmixed) return cmd_check_unmixed(cu, strategy, as_json);
  if (*c_mixed) return cmd_check_mixed(cm, no_criterion, as_json);
  if (*c_gallery) {
    emit(gallery_json(gp));
    return kPass;
  }
  if (*c_search) return cmd_search(sp, as_json);
  if (*c_abelian) return cmd_count_abelian(abelian_n, as_json);
  if (*c_reality) {
    bool mixed_literals = !re.a.empty() || !re.c.empty() || !re.g.empty();
    return cmd_reality(re, mixed_literals ? "mixed" : "unmixed", as_json);
  }
  if (*c_wall) return cmd_wallpaper(wd, wm, printed, as_json);
  if (*c_verify) return cmd_verify(criteria, as_json);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bv::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bv::MalformedElement& e) {
    std::cerr << "malformed element: " << e.what() << "\n";
    return kUsage;
  } catch (const bv::CapacityExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const bv::Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const bv::NotFound& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}

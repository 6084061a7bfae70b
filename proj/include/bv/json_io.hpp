#pragma once

#include "bv/gallery.hpp"
#include "bv/search.hpp"

#include <json.hpp>

namespace bv {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- group descriptors

struct GroupDescriptor {
  std::string kind;  // sym, alt, sl2, psl2, ab2, wallpaper, h4, catalogue
  std::int64_t n = 0;
  std::int64_t p = 0;
  int d = 0;
  std::int64_t m = 0;
  bool printed_relation = false;
  std::shared_ptr<GroupDescriptor> inner;
  std::string id;  // catalogue id

  bool operator==(const GroupDescriptor& o) const {
    return kind == o.kind && n == o.n && p == o.p && d == o.d && m == o.m && printed_relation == o.printed_relation &&
           id == o.id && (!inner) == (!o.inner) && (!inner || *inner == *o.inner);
  }
};

namespace detail {

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

inline void validate(const GroupDescriptor& d) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
  };
  if (d.kind == "sym" || d.kind == "alt") need(d.n >= 1, d.kind + ": n must be >= 1");
  else if (d.kind == "sl2" || d.kind == "psl2") need(d.p > 2 && is_prime(d.p), d.kind + ": p must be an odd prime");
  else if (d.kind == "ab2") need(d.n >= 1, "ab2: n must be >= 1");
  else if (d.kind == "wallpaper") {
    need(d.d == 3 || d.d == 4 || d.d == 6, "wallpaper: d must be 3, 4 or 6");
    need(d.m >= 1, "wallpaper: m must be >= 1");
  } else if (d.kind == "h4") {
    need(d.inner != nullptr, "h4: missing inner group");
    validate(*d.inner);
  } else if (d.kind == "catalogue") {
    need(!d.id.empty(), "catalogue: empty id");
  } else {
    throw UsageError("unknown group kind '" + d.kind + "'");
  }
}

}  // namespace detail

// sym:8, alt:16, sl2:7, psl2:7, ab2:5, wallpaper:3:4[:printed], h4:<descriptor>, or a catalogue id.
inline GroupDescriptor parse_descriptor(const std::string& text) {
  GroupDescriptor d;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "sym" || head == "alt" || head == "ab2") {
    d.kind = head;
    d.n = detail::parse_int(rest, head);
  } else if (head == "sl2" || head == "psl2") {
    d.kind = head;
    d.p = detail::parse_int(rest, head);
  } else if (head == "wallpaper") {
    d.kind = head;
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw UsageError("wallpaper: expected wallpaper:d:m");
    d.d = static_cast<int>(detail::parse_int(rest.substr(0, c2), "wallpaper d"));
    std::string tail = rest.substr(c2 + 1);
    auto c3 = tail.find(':');
    d.m = detail::parse_int(tail.substr(0, c3), "wallpaper m");
    if (c3 != std::string::npos) {
      if (tail.substr(c3 + 1) != "printed") throw UsageError("wallpaper: unknown flag '" + tail.substr(c3 + 1) + "'");
      d.printed_relation = true;
    }
  } else if (head == "h4") {
    d.kind = "h4";
    d.inner = std::make_shared<GroupDescriptor>(parse_descriptor(rest));
  } else {
    d.kind = "catalogue";
    d.id = text.rfind("catalogue:", 0) == 0 ? text.substr(10) : text;
  }
  detail::validate(d);
  return d;
}

inline std::string to_string(const GroupDescriptor& d) {
  if (d.kind == "sym" || d.kind == "alt" || d.kind == "ab2") return d.kind + ":" + std::to_string(d.n);
  if (d.kind == "sl2" || d.kind == "psl2") return d.kind + ":" + std::to_string(d.p);
  if (d.kind == "wallpaper")
    return "wallpaper:" + std::to_string(d.d) + ":" + std::to_string(d.m) + (d.printed_relation ? ":printed" : "");
  if (d.kind == "h4") return "h4:" + to_string(*d.inner);
  return d.id;
}

inline json descriptor_to_json(const GroupDescriptor& d) {
  json j;
  j["kind"] = d.kind;
  if (d.kind == "sym" || d.kind == "alt" || d.kind == "ab2") j["n"] = d.n;
  else if (d.kind == "sl2" || d.kind == "psl2") j["p"] = d.p;
  else if (d.kind == "wallpaper") {
    j["d"] = d.d;
    j["m"] = d.m;
    if (d.printed_relation) j["printed_relation"] = true;
  } else if (d.kind == "h4") j["inner"] = descriptor_to_json(*d.inner);
  else j["id"] = d.id;
  return j;
}

inline GroupDescriptor descriptor_from_json(const json& j) {
  if (j.is_string()) return parse_descriptor(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw UsageError("group descriptor must be a string or an object with 'kind'");
  GroupDescriptor d;
  try {
    d.kind = j.at("kind").get<std::string>();
    if (d.kind == "sym" || d.kind == "alt" || d.kind == "ab2") d.n = j.at("n").get<std::int64_t>();
    else if (d.kind == "sl2" || d.kind == "psl2") d.p = j.at("p").get<std::int64_t>();
    else if (d.kind == "wallpaper") {
      d.d = j.at("d").get<int>();
      d.m = j.at("m").get<std::int64_t>();
      d.printed_relation = j.value("printed_relation", false);
    } else if (d.kind == "h4") d.inner = std::make_shared<GroupDescriptor>(descriptor_from_json(j.at("inner")));
    else if (d.kind == "catalogue") d.id = j.at("id").get<std::string>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("group descriptor: ") + e.what());
  }
  detail::validate(d);
  return d;
}

// Calls f with the concrete group object; every branch must return the same type.
template <class F>
decltype(auto) with_group(const GroupDescriptor& d, F&& f, std::size_t table_cap = 20'000) {
  if (d.kind == "sym") return f(SymGroup(static_cast<int>(d.n)));
  if (d.kind == "alt") return f(AltGroup(static_cast<int>(d.n)));
  if (d.kind == "sl2") return f(SL2Group(d.p));
  if (d.kind == "psl2") return f(PSL2Group(d.p));
  if (d.kind == "ab2") return f(Ab2Group(d.n));
  if (d.kind == "wallpaper") return f(WallpaperGroup(d.d, d.m, d.printed_relation));
  if (d.kind == "h4") {
    const auto& in = *d.inner;
    if (in.kind == "sl2") return f(H4Group<SL2Group>{SL2Group(in.p)});
    if (in.kind == "psl2") return f(H4Group<PSL2Group>{PSL2Group(in.p)});
    if (in.kind == "sym") return f(H4Group<SymGroup>{SymGroup(static_cast<int>(in.n))});
    if (in.kind == "alt") return f(H4Group<AltGroup>{AltGroup(static_cast<int>(in.n))});
    if (in.kind == "catalogue") return f(H4Group<TableGroup>{build_catalogue_group(in.id, table_cap)});
    throw UsageError("h4: unsupported inner kind '" + in.kind + "'");
  }
  return f(build_catalogue_group(d.id, table_cap));
}

template <class G>
constexpr bool has_aut_backend = std::is_same_v<G, SymGroup> || std::is_same_v<G, AltGroup> ||
                                 std::is_same_v<G, SL2Group> || std::is_same_v<G, PSL2Group> ||
                                 std::is_same_v<G, Ab2Group> || std::is_same_v<G, TableGroup>;

// Calls f with the automorphism backend for grp.
template <class G, class F>
decltype(auto) with_aut(const G& grp, F&& f) {
  if constexpr (std::is_same_v<G, SymGroup>) return f(SymAut(grp));
  else if constexpr (std::is_same_v<G, AltGroup>) return f(AltAut(grp));
  else if constexpr (std::is_same_v<G, SL2Group>) return f(SL2Aut(grp));
  else if constexpr (std::is_same_v<G, PSL2Group>) return f(PSL2Aut(grp));
  else if constexpr (std::is_same_v<G, Ab2Group>) return f(Ab2Aut(grp));
  else if constexpr (std::is_same_v<G, TableGroup>) return f(TableAut(grp));
  else throw UsageError("no automorphism backend for " + grp.name());
}

// ---------------------------------------------------------------- elements and structures

template <FiniteGroup G>
typename G::element_type parse_element(const G& grp, const json& j, bool zero_based = false) {
  if (!j.is_string()) throw MalformedElement("element literal must be a string");
  auto x = grp.parse(j.get<std::string>(), zero_based);
  require_element(grp, x);
  return x;
}

inline std::string json_field_name(const char* f) { return std::string("'") + f + "'"; }

template <FiniteGroup G>
json unmixed_to_json(const GroupDescriptor& d, const G& grp, const UnmixedOf<G>& v) {
  json j;
  j["group"] = descriptor_to_json(d);
  j["kind"] = "unmixed";
  j["a1"] = grp.format(v.p1.a, false);
  j["c1"] = grp.format(v.p1.c, false);
  j["a2"] = grp.format(v.p2.a, false);
  j["c2"] = grp.format(v.p2.c, false);
  return j;
}

template <FiniteGroup G>
UnmixedOf<G> unmixed_from_json(const G& grp, const json& j) {
  for (const char* f : {"a1", "c1", "a2", "c2"})
    if (!j.contains(f)) throw UsageError("unmixed structure: missing " + json_field_name(f));
  bool zb = j.value("zero_based", false);
  return {{parse_element(grp, j["a1"], zb), parse_element(grp, j["c1"], zb)},
          {parse_element(grp, j["a2"], zb), parse_element(grp, j["c2"], zb)}};
}

template <FiniteGroup G>
json mixed_to_json(const GroupDescriptor& d, const G& grp, const MixedQuadruple<typename G::element_type>& m) {
  json j;
  j["group"] = descriptor_to_json(d);
  j["kind"] = "mixed";
  j["g0"] = "H2";
  j["a"] = grp.format(m.a, false);
  j["c"] = grp.format(m.c, false);
  j["g"] = grp.format(m.g, false);
  return j;
}

template <FiniteGroup G>
MixedQuadruple<typename G::element_type> mixed_from_json(const G& grp, const json& j) {
  for (const char* f : {"a", "c", "g"})
    if (!j.contains(f)) throw UsageError("mixed quadruple: missing " + json_field_name(f));
  bool zb = j.value("zero_based", false);
  return {parse_element(grp, j["a"], zb), parse_element(grp, j["c"], zb), parse_element(grp, j["g"], zb)};
}

template <FiniteGroup G>
json pair_to_json(const G& grp, const GeneratingPair<typename G::element_type>& p) {
  json j;
  j["a"] = grp.format(p.a, false);
  j["c"] = grp.format(p.c, false);
  j["type"] = type_of(grp, p.a, p.c).to_string();
  return j;
}

// ---------------------------------------------------------------- reports

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

inline json report_to_json(const CheckReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  json conds = json::array();
  for (const auto& c : r.conditions) {
    json cj;
    cj["id"] = c.id;
    cj["ok"] = optional_bool(c.ok);
    cj["strategy"] = c.strategy;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    conds.push_back(cj);
  }
  j["conditions"] = conds;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["notes"] = r.notes;
  return j;
}

inline json reality_to_json(const RealityVerdict& v, bool with_cases = true) {
  json j;
  j["biholo_conjugate"] = optional_bool(v.biholo_conjugate);
  j["real"] = optional_bool(v.real);
  j["strongly_real"] = optional_bool(v.strongly_real);
  j["path"] = v.path;
  if (with_cases) {
    for (auto [key, cases] : {std::pair{"cases1", &v.cases1}, std::pair{"cases2", &v.cases2}}) {
      json arr = json::array();
      for (const auto& c : *cases) {
        json cj;
        cj["case"] = c.i;
        cj["solvable"] = c.solvable;
        cj["labels"] = c.labels;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        arr.push_back(cj);
      }
      j[key] = arr;
    }
  }
  j["witnesses"] = v.witnesses;
  j["notes"] = v.notes;
  return j;
}

inline json abelian_to_json(std::int64_t n, const AbelianCount& c) {
  json j;
  j["n"] = n;
  j["solutions"] = c.solutions;
  j["structures"] = c.structures;
  j["orbits"] = c.au_orbits;
  j["orbits_without_exchange"] = c.bu_orbits;
  if (is_prime(n) && n >= 5) {
    j["lower_bound"] = lower_bound_abelian(n);
    j["corrected_lower_bound"] = corrected_lower_bound_abelian(n);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json scan_to_json(const ScanReport& r) {
  json j;
  j["group"] = "catalogue";
  j["mode"] = r.mode == ScanMode::unmixed ? "unmixed" : "mixed";
  j["max_order"] = r.max_order;
  j["found"] = r.total_found;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json ej;
    ej["id"] = e.id;
    ej["order"] = e.order;
    ej["found"] = e.found;
    ej["note"] = e.note;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  j["complete"] = r.complete;
  j["disclaimer"] = r.disclaimer;
  j["seed"] = nullptr;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace bv

#include "nakaoka/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "nakaoka/errors.hpp"

namespace nakaoka::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error("InvalidInput", where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

template <class T>
T as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(where, e.what());
  }
}

std::vector<std::vector<Elem>> table(const Json& j, const std::string& where) {
  return as<std::vector<std::vector<Elem>>>(j, where);
}

std::string pad(std::string s, std::size_t w) {
  // widths count code points so that labels with non-ASCII characters line up
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  if (n < w) s.append(w - n, ' ');
  return s;
}

std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::size_t n = 0;
      for (unsigned char ch : r[c]) n += (ch & 0xC0) != 0x80;
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], n);
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) line += c + 1 == r.size() ? r[c] : pad(r[c], width[c]) + "  ";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string members_text(const SubgroupLattice& lat, std::size_t h) {
  std::string s = "{";
  bool first = true;
  for (auto x : mask_elements(lat[h].members)) {
    s += (first ? "" : ",") + lat.group().label(x);
    first = false;
  }
  return s + "}";
}

std::size_t subgroup_index(const SubgroupLattice& lat, const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto i = j.get<std::size_t>();
    if (i >= lat.size()) bad(where, "subgroup index " + std::to_string(i) + " out of range");
    return i;
  }
  GroupMask gens = 0;
  for (auto x : as<std::vector<Elem>>(j, where)) {
    if (x >= lat.group().order()) bad(where, "element " + std::to_string(x) + " out of range");
    gens |= singleton(x);
  }
  const auto s = generate(lat.group(), gens);
  if (s.members != gens) bad(where, "element list is not a subgroup");
  return lat.index_of(s.members);
}

FunctorPtr parse_functor_impl(const Json& j, Strictness strictness, const FiniteGroup* forced, const std::string& where);

FiniteGroup functor_group(const Json& j, const FiniteGroup* forced, const std::string& where) {
  if (forced) {
    if (j.contains("group") && parse_group(j["group"]).cayley() != forced->cayley())
      bad(where, "group does not match the enclosing subgroup");
    return *forced;
  }
  return parse_group(need(j, "group", where));
}

FunctorPtr parse_generator(const Json& j, Strictness strictness, const FiniteGroup* forced, const std::string& where) {
  const auto kind = as<std::string>(j["generator"], where + "/generator");
  if (kind == "fp") {
    auto lat = make_lattice(functor_group(j, forced, where));
    return fixed_point_functor(parse_gring(j, lat)).functor;
  }
  if (kind == "coind") {
    auto lat = make_lattice(functor_group(j, forced, where));
    const auto h = subgroup_index(*lat, need(j, "subgroup", where), where + "/subgroup");
    const auto sub = subgroup_as_group(*lat, h);
    auto base = parse_functor_impl(need(j, "base", where), strictness, &sub.group, where + "/base");
    return coinduce(base, lat, h).functor;
  }
  if (kind == "ghost") return ghost(parse_functor_impl(need(j, "base", where), strictness, forced, where + "/base")).functor;
  if (kind == "product") {
    std::vector<FunctorPtr> factors;
    const auto& fs = need(j, "factors", where);
    for (std::size_t i = 0; i < fs.size(); ++i)
      factors.push_back(parse_functor_impl(fs[i], strictness, forced, where + "/factors/" + std::to_string(i)));
    return product(factors).functor;
  }
  bad(where, "unknown generator \"" + kind + "\" (fp, coind, ghost, product)");
}

FunctorPtr parse_functor_impl(const Json& j, Strictness strictness, const FiniteGroup* forced, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (j.contains("generator")) return parse_generator(j, strictness, forced, where);
  TambaraFunctor f;
  f.lattice = make_lattice(functor_group(j, forced, where));
  const auto& lat = *f.lattice;
  f.name = j.value("name", std::string("R"));
  const auto& levels = need(j, "levels", where);
  if (!levels.is_array() || levels.size() != lat.size())
    bad(where + "/levels", "expected " + std::to_string(lat.size()) + " rings, one per subgroup");
  for (std::size_t h = 0; h < lat.size(); ++h) f.levels.push_back(parse_ring(levels[h]));
  for (const char* key : {"res", "tr", "nm"}) {
    auto& maps = std::string(key) == "res" ? f.res : std::string(key) == "tr" ? f.tr : f.nm;
    if (!j.contains(key)) continue;
    const auto& list = j[key];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto w = where + "/" + key + "/" + std::to_string(i);
      const auto k = subgroup_index(lat, need(list[i], "sub", w), w + "/sub");
      const auto h = subgroup_index(lat, need(list[i], "sup", w), w + "/sup");
      if (!lat.included(k, h)) bad(w, "sub is not contained in sup");
      maps[{k, h}] = as<ElemMap>(need(list[i], "map", w), w + "/map");
    }
  }
  add_identity_maps(f);
  const auto& conj = need(j, "conj", where);
  if (!conj.is_array() || conj.size() != lat.group().order())
    bad(where + "/conj", "expected one list of level maps per group element");
  for (std::size_t g = 0; g < conj.size(); ++g) {
    auto maps = as<std::vector<ElemMap>>(conj[g], where + "/conj/" + std::to_string(g));
    if (maps.size() != lat.size()) bad(where + "/conj/" + std::to_string(g), "expected one map per subgroup");
    f.conj.push_back(std::move(maps));
  }
  return make_functor(std::move(f), strictness);
}

Json lattice_json(const IdealLattice& l) {
  return Json{{"ambient", l.ambient}, {"rank", l.rank}, {"basis", l.basis}};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- groups ------------------------------------------------------------------

FiniteGroup group_from_name(const std::string& name) {
  std::smatch m;
  if (name == "e" || name == "C1") return FiniteGroup::cyclic(1);
  if (std::regex_match(name, m, std::regex("C(\\d+)"))) return FiniteGroup::cyclic(std::stoul(m[1]));
  if (std::regex_match(name, std::regex("C\\d+(xC\\d+)+"))) {
    std::vector<std::size_t> orders;
    const std::regex part("\\d+");
    for (auto it = std::sregex_iterator(name.begin(), name.end(), part); it != std::sregex_iterator(); ++it)
      orders.push_back(std::stoul(it->str()));
    return FiniteGroup::product_of_cyclic(orders);
  }
  if (std::regex_match(name, m, std::regex("D(\\d+)"))) {
    const auto order = std::stoul(m[1]);
    if (order < 2 || order % 2) throw Error("InvalidParameter", "dihedral names give the order, e.g. D8");
    return FiniteGroup::dihedral(order / 2);
  }
  if (name == "Q8") return FiniteGroup::quaternion();
  if (std::regex_match(name, m, std::regex("S(\\d+)"))) return FiniteGroup::symmetric(std::stoul(m[1]));
  throw Error("InvalidParameter", "unknown group name \"" + name + "\" (C<n>, C2xC2, D<2n>, Q8, S<n>)");
}

FiniteGroup parse_group(const Json& j) {
  if (j.is_string()) return group_from_name(j.get<std::string>());
  if (!j.is_object()) bad("group", "expected an object or a name");
  if (j.contains("construct")) {
    const auto kind = as<std::string>(j["construct"], "group/construct");
    const auto params = j.contains("params") ? as<std::vector<std::size_t>>(j["params"], "group/params")
                                             : std::vector<std::size_t>{};
    auto one = [&]() {
      if (params.size() != 1) bad("group/params", "expected one parameter");
      return params[0];
    };
    if (kind == "cyclic") return FiniteGroup::cyclic(one());
    if (kind == "product") return FiniteGroup::product_of_cyclic(params);
    if (kind == "dihedral") return FiniteGroup::dihedral(one());
    if (kind == "quaternion") return FiniteGroup::quaternion();
    if (kind == "symmetric") return FiniteGroup::symmetric(one());
    bad("group/construct", "unknown constructor \"" + kind + "\"");
  }
  auto cayley = table(need(j, "cayley", "group"), "group/cayley");
  if (j.contains("order") && as<std::size_t>(j["order"], "group/order") != cayley.size())
    bad("group/order", "does not match the table");
  const auto labels = j.contains("labels") ? as<std::vector<std::string>>(j["labels"], "group/labels")
                                           : std::vector<std::string>{};
  return FiniteGroup::from_cayley(std::move(cayley), j.value("name", std::string()), labels);
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()}, {"order", g.order()}, {"labels", g.labels()}, {"cayley", g.cayley()}};
}

FiniteGroup load_group(const std::string& name_or_path) {
  if (name_or_path.size() > 5 && name_or_path.ends_with(".json")) return parse_group(read_json_file(name_or_path));
  return group_from_name(name_or_path);
}

// ---- rings ------------------------------------------------------------------

FiniteRing parse_ring(const Json& j) {
  if (!j.is_object()) bad("ring", "expected an object");
  if (j.contains("construct")) {
    const auto kind = as<std::string>(j["construct"], "ring/construct");
    if (kind == "product") {
      std::vector<FiniteRing> parts;
      for (const auto& f : need(j, "factors", "ring")) parts.push_back(parse_ring(f));
      std::vector<const FiniteRing*> ptrs;
      for (const auto& p : parts) ptrs.push_back(&p);
      return FiniteRing::product(ptrs);
    }
    const auto params = as<std::vector<std::size_t>>(need(j, "params", "ring"), "ring/params");
    if (params.size() != 1) bad("ring/params", "expected one parameter");
    if (kind == "Zn") return FiniteRing::zmod(params[0]);
    if (kind == "Fq") return FiniteRing::galois_field(params[0]);
    bad("ring/construct", "unknown constructor \"" + kind + "\" (Zn, Fq, product)");
  }
  auto add = table(need(j, "add", "ring"), "ring/add");
  auto mul = table(need(j, "mul", "ring"), "ring/mul");
  if (j.contains("order") && as<std::size_t>(j["order"], "ring/order") != add.size())
    bad("ring/order", "does not match the tables");
  const auto labels = j.contains("labels") ? as<std::vector<std::string>>(j["labels"], "ring/labels")
                                           : std::vector<std::string>{};
  return FiniteRing::from_tables(std::move(add), std::move(mul), j.value("name", std::string()), labels);
}

Json ring_to_json(const FiniteRing& r) {
  return Json{{"name", r.name()},
              {"order", r.order()},
              {"labels", r.labels()},
              {"add", r.add_table()},
              {"mul", r.mul_table()}};
}

GRing parse_gring(const Json& j, LatticePtr lattice) {
  auto ring = parse_ring(need(j, "ring", "gring"));
  if (!j.contains("action")) return trivial_gring(std::move(lattice), std::move(ring));
  auto action = table(j["action"], "gring/action");
  return validate_gring(std::move(lattice), std::move(ring), std::move(action));
}

Json gring_to_json(const GRing& s) {
  return Json{{"group", group_to_json(s.group())}, {"ring", ring_to_json(s.ring)}, {"action", s.action}};
}

// ---- functors ---------------------------------------------------------------

FunctorPtr parse_functor(const Json& j, Strictness strictness) {
  return parse_functor_impl(j, strictness, nullptr, "functor");
}

FunctorPtr load_functor(const std::string& path, Strictness strictness) {
  return parse_functor(read_json_file(path), strictness);
}

Json functor_to_json(const TambaraFunctor& f) {
  const auto& lat = *f.lattice;
  Json subgroups = Json::array(), levels = Json::array();
  for (std::size_t h = 0; h < lat.size(); ++h) {
    subgroups.push_back(mask_elements(lat[h].members));
    levels.push_back(ring_to_json(f.levels[h]));
  }
  auto maps = [&](const std::map<LevelPair, ElemMap>& m) {
    Json out = Json::array();
    for (const auto& [kh, map] : m)
      if (kh.first != kh.second) out.push_back(Json{{"sub", kh.first}, {"sup", kh.second}, {"map", map}});
    return out;
  };
  return Json{{"name", f.name},
              {"group", group_to_json(f.group())},
              {"subgroups", subgroups},
              {"levels", levels},
              {"res", maps(f.res)},
              {"tr", maps(f.tr)},
              {"nm", maps(f.nm)},
              {"conj", f.conj}};
}

Json ideal_to_json(const TambaraIdeal& i) {
  Json levels = Json::array();
  for (const auto& l : i.levels) levels.push_back(l.elements());
  return Json{{"levels", levels}};
}

TambaraIdeal parse_ideal(const Json& j, FunctorPtr f) {
  const auto lists = as<std::vector<std::vector<Elem>>>(need(j, "levels", "ideal"), "ideal/levels");
  if (lists.size() != f->levels.size()) bad("ideal/levels", "expected one list per subgroup");
  std::vector<ElementSet> levels;
  for (std::size_t h = 0; h < lists.size(); ++h) {
    ElementSet s(f->levels[h].order());
    for (auto x : lists[h]) {
      if (x >= s.universe()) bad("ideal/levels", "element " + std::to_string(x) + " out of range");
      s.insert(x);
    }
    levels.push_back(std::move(s));
  }
  return make_ideal(std::move(f), std::move(levels));
}

// ---- spectra -----------------------------------------------------------------

Json spectrum_to_json(const Spectrum& s) {
  Json points = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json p{{"label", s.labels[i]}};
    if (i < s.ideals.size()) p["ideal"] = ideal_to_json(s.ideals[i])["levels"];
    if (i < s.symbols.size()) {
      Json syms = Json::array(), levels = Json::array();
      for (const auto& t : s.symbols[i])
        syms.push_back(Json{{"subgroup", t.subgroup}, {"characteristic", t.characteristic}});
      for (const auto& l : s.burnside_levels[i]) levels.push_back(lattice_json(l));
      p["symbols"] = syms;
      p["levels"] = levels;
    }
    points.push_back(p);
  }
  Json leq = Json::array();
  for (const auto& row : s.leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(r);
  }
  Json out{{"provenance", to_string(s.provenance)}, {"group", s.lattice->group().name()}, {"points", points}, {"leq", leq}};
  if (!s.prime_set.empty()) out["prime_set"] = s.prime_set;
  return out;
}

Spectrum parse_spectrum(const Json& j, LatticePtr lattice, FunctorPtr functor) {
  Spectrum s;
  const auto prov = as<std::string>(need(j, "provenance", "spectrum"), "spectrum/provenance");
  bool known = false;
  for (auto p : {Provenance::enumerated, Provenance::classified_burnside, Provenance::classified_ghost,
                 Provenance::classified_fp})
    if (to_string(p) == prov) {
      s.provenance = p;
      known = true;
    }
  if (!known) bad("spectrum/provenance", "unknown provenance \"" + prov + "\"");
  s.lattice = std::move(lattice);
  s.functor = functor;
  for (const auto& p : need(j, "points", "spectrum")) {
    s.labels.push_back(as<std::string>(need(p, "label", "spectrum/points"), "spectrum/points/label"));
    if (p.contains("ideal")) {
      if (!functor) bad("spectrum/points", "ideal points need a functor");
      s.ideals.push_back(parse_ideal(Json{{"levels", p["ideal"]}}, functor));
    }
    if (p.contains("symbols")) {
      std::vector<BurnsidePrimeSymbol> syms;
      for (const auto& t : p["symbols"])
        syms.push_back({as<std::size_t>(need(t, "subgroup", "symbol"), "symbol/subgroup"),
                        as<Integer>(need(t, "characteristic", "symbol"), "symbol/characteristic")});
      std::vector<IdealLattice> levels;
      for (const auto& l : need(p, "levels", "spectrum/points"))
        levels.push_back({as<std::size_t>(need(l, "ambient", "level"), "level/ambient"),
                          as<std::size_t>(need(l, "rank", "level"), "level/rank"),
                          as<IntMatrix>(need(l, "basis", "level"), "level/basis")});
      s.symbols.push_back(std::move(syms));
      s.burnside_levels.push_back(std::move(levels));
    }
  }
  for (const auto& row : need(j, "leq", "spectrum")) {
    std::vector<bool> r;
    for (const auto& b : row) r.push_back(as<int>(b, "spectrum/leq") != 0);
    if (r.size() != s.labels.size()) bad("spectrum/leq", "row length does not match the point count");
    s.leq.push_back(std::move(r));
  }
  if (s.leq.size() != s.labels.size()) bad("spectrum/leq", "row count does not match the point count");
  if (j.contains("prime_set")) s.prime_set = as<std::vector<Integer>>(j["prime_set"], "spectrum/prime_set");
  return s;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.provenance != b.provenance || a.labels != b.labels || a.leq != b.leq || a.prime_set != b.prime_set ||
      a.symbols != b.symbols || a.burnside_levels != b.burnside_levels || a.ideals.size() != b.ideals.size())
    return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i)
    if (!(a.ideals[i] == b.ideals[i])) return false;
  return true;
}

Json verdict_to_json(const Spectrum& s, const TopologyVerdict& v) {
  Json out{{"points", Json::array()}, {"closed", to_string(v.closed)}, {"open", to_string(v.open)}};
  for (auto p : v.subset) out["points"].push_back(s.labels[p]);
  if (v.not_closed_witness)
    out["not_closed_witness"] = {s.labels[v.not_closed_witness->first], s.labels[v.not_closed_witness->second]};
  if (v.not_open_witness)
    out["not_open_witness"] = {s.labels[v.not_open_witness->first], s.labels[v.not_open_witness->second]};
  if (v.closed_ideal) out["closed_by_ideal"] = ideal_to_json(*v.closed_ideal)["levels"];
  if (v.closed_point) out["closed_by_point"] = s.labels[*v.closed_point];
  return out;
}

Json stratification_to_json(const Stratification& st) {
  const auto& lat = *st.spectrum.lattice;
  Json strata = Json::array();
  for (const auto& s : st.strata) {
    Json j{{"subgroup", lat.name(s.subgroup)}, {"verdict", verdict_to_json(st.spectrum, s.verdict)}};
    if (s.matches_classification) j["matches_classification"] = *s.matches_classification;
    if (s.matches_v_of) j["matches_v_of"] = *s.matches_v_of;
    strata.push_back(j);
  }
  return Json{{"spectrum", spectrum_to_json(st.spectrum)}, {"dedekind", st.dedekind}, {"strata", strata},
              {"notes", st.notes}};
}

// ---- rendering -----------------------------------------------------------------

std::string render_group(const SubgroupLattice& lat) {
  const auto& g = lat.group();
  std::string out = "group " + (g.name().empty() ? std::string("G") : g.name()) + ", order " +
                    std::to_string(g.order()) + "\n";
  std::vector<std::vector<std::string>> rows{{"index", "name", "order", "members", "class rep", "normal"}};
  for (std::size_t h = 0; h < lat.size(); ++h)
    rows.push_back({std::to_string(h), lat.name(h), std::to_string(lat[h].order), members_text(lat, h),
                    lat.name(lat.class_rep_of(h)), lat.normal(h) ? "yes" : "no"});
  out += align(rows);
  out += "conjugacy classes: " + std::to_string(lat.class_reps().size()) + "\n";
  out += std::string("Dedekind: ") + (is_dedekind(lat) ? "yes" : "no") + "\n";
  return out;
}

std::string render_table_of_marks(const BurnsideFunctor& a, std::size_t h) {
  const auto& lat = a.lattice();
  const auto& t = a.marks(h);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"marks of " + lat.name(h)};
  for (auto k : t.classes) head.push_back(lat.name(h) + "/" + lat.name(k));
  rows.push_back(head);
  for (std::size_t r = 0; r < t.classes.size(); ++r) {
    std::vector<std::string> row{lat.name(t.classes[r])};
    for (auto v : t.marks[r]) row.push_back(std::to_string(v));
    rows.push_back(row);
  }
  return align(rows);
}

std::string render_burnside_levels(const BurnsideFunctor& a, const Spectrum& s) {
  const auto& lat = a.lattice();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"point"};
  for (auto h : lat.class_reps()) head.push_back("at " + lat.name(h));
  rows.push_back(head);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::string> row{s.labels[i]};
    for (auto h : lat.class_reps()) {
      std::string cell;
      for (const auto& v : s.burnside_levels[i][h].basis) {
        cell += cell.empty() ? "(" : " (";
        for (std::size_t c = 0; c < v.size(); ++c) cell += (c ? "," : "") + std::to_string(v[c]);
        cell += ")";
      }
      row.push_back(cell.empty() ? "0" : cell);
    }
    rows.push_back(row);
  }
  return "ideal levels (HNF bases in the transitive-set basis)\n" + align(rows);
}

std::string render_functor(const TambaraFunctor& f) {
  const auto& lat = *f.lattice;
  std::string out = "functor " + f.name + " over a group of order " + std::to_string(f.group().order()) + "\n";
  std::vector<std::vector<std::string>> rows{{"level", "ring", "order"}};
  for (std::size_t h = 0; h < lat.size(); ++h)
    rows.push_back({lat.name(h), f.levels[h].name().empty() ? "-" : f.levels[h].name(),
                    std::to_string(f.levels[h].order())});
  out += align(rows);
  out += std::string("idle: ") + (is_idle(f) ? "yes" : "no") + "\n";
  out += std::string("restrictions injective: ") + (restrictions_injective(f) ? "yes" : "no") + "\n";
  return out;
}

std::string render_verdict(const Spectrum& s, const TopologyVerdict& v) {
  std::string out = "closed: " + to_string(v.closed);
  if (v.closed_ideal) {
    const auto at = find_point(s, *v.closed_ideal);
    out += " (= V(" + (at ? s.labels[*at] : render_ideal(*v.closed_ideal)) + "))";
  }
  if (v.closed_point) out += " (= V(" + s.labels[*v.closed_point] + "))";
  if (v.not_closed_witness)
    out += " (" + s.labels[v.not_closed_witness->first] + " inside, specializes to " +
           s.labels[v.not_closed_witness->second] + " outside)";
  out += "; open: " + to_string(v.open);
  if (v.not_open_witness)
    out += " (" + s.labels[v.not_open_witness->first] + " outside, specializes to " +
           s.labels[v.not_open_witness->second] + " inside)";
  return out;
}

std::string render_spectrum_text(const Spectrum& s, const Stratification* st) {
  const auto& lat = *s.lattice;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"point", "provenance"};
  if (st)
    for (const auto& x : st->strata) head.push_back("S(" + lat.name(x.subgroup) + ")");
  if (!s.ideals.empty()) head.push_back("ideal");
  rows.push_back(head);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::string> row{s.labels[i], to_string(s.provenance)};
    if (st)
      for (const auto& x : st->strata)
        row.push_back(std::binary_search(x.points.begin(), x.points.end(), i) ? "*" : ".");
    if (!s.ideals.empty()) row.push_back(render_ideal(s.ideals[i]));
    rows.push_back(row);
  }
  std::string out = std::to_string(s.size()) + " point" + (s.size() == 1 ? "" : "s") + "\n" + align(rows);
  if (!st) return out;
  for (const auto& x : st->strata) {
    out += "stratum " + lat.name(x.subgroup) + ": " + render_verdict(s, x.verdict) + "\n";
    if (x.matches_classification)
      out += "  contraction = classification: " + std::string(*x.matches_classification ? "yes" : "NO") + "\n";
    if (x.matches_v_of) out += "  contraction = V(p{" + lat.name(x.subgroup) + ",0}): " + (*x.matches_v_of ? "yes" : "NO") + "\n";
  }
  for (const auto& n : st->notes) out += "note: " + n + "\n";
  return out;
}

std::string render_spectrum_dot(const Spectrum& s, const Stratification* st) {
  static const char* colors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  auto quote = [](const std::string& x) {
    std::string q = "\"";
    for (char c : x) q += c == '"' ? std::string("\\\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph spectrum {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<bool> placed(s.size(), false);
  if (st) {
    const auto& lat = *s.lattice;
    for (std::size_t c = 0; c < st->strata.size(); ++c) {
      std::vector<std::size_t> fresh;
      for (auto p : st->strata[c].points)
        if (!placed[p]) {
          placed[p] = true;
          fresh.push_back(p);
        }
      if (fresh.empty()) continue;
      const char* color = colors[c % 8];
      out << "  subgraph cluster_" << c << " {\n    label=" << quote("stratum " + lat.name(st->strata[c].subgroup))
          << ";\n    color=" << quote(color) << ";\n";
      for (auto p : fresh) out << "    p" << p << " [label=" << quote(s.labels[p]) << ", color=" << quote(color) << "];\n";
      out << "  }\n";
    }
  }
  for (std::size_t p = 0; p < s.size(); ++p)
    if (!placed[p]) out << "  p" << p << " [label=" << quote(s.labels[p]) << "];\n";
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b || !s.leq[a][b]) continue;
      bool covers = true;
      for (std::size_t c = 0; c < s.size() && covers; ++c)
        covers = c == a || c == b || !(s.leq[a][c] && s.leq[c][b]);
      if (covers) out << "  p" << a << " -> p" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace nakaoka::io

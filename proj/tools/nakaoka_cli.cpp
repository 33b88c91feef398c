// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage or input error.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nakaoka/errors.hpp"
#include "nakaoka/io.hpp"
#include "suite.hpp"

namespace {

using namespace nakaoka;
using io::Json;

struct Options {
  std::string group = "C2";
  std::string primes;
  std::string functor;
  std::string format = "text";
  std::size_t bound = kDefaultSearchBound;
  bool burnside = false;
  bool stratify = false;
  bool strict = false;
  bool green = false;
  std::vector<std::string> generators;
  std::string ideal;
  std::string suite = "paper";
  std::string data;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Integer> parse_primes(const std::string& text, std::size_t order) {
  if (text.empty()) return default_prime_set(order);
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("--primes: \"" + tok + "\" is not an integer");
    }
  }
  if (out.empty()) throw UsageError("--primes: empty list");
  return out;
}

Elem parse_element(const FiniteRing& r, const std::string& tok, const std::string& where) {
  for (Elem x = 0; x < r.order(); ++x)
    if (r.label(x) == tok) return x;
  try {
    std::size_t used = 0;
    const auto v = std::stoul(tok, &used);
    if (used == tok.size() && v < r.order()) return static_cast<Elem>(v);
  } catch (const std::logic_error&) {
  }
  throw UsageError(where + ": \"" + tok + "\" is not an element of " + (r.name().empty() ? "the level" : r.name()));
}

std::size_t parse_level(const SubgroupLattice& lat, const std::string& tok) {
  for (std::size_t h = 0; h < lat.size(); ++h)
    if (lat.name(h) == tok || std::to_string(h) == tok) return h;
  throw UsageError("\"" + tok + "\" names no subgroup (use a lattice index or a name such as e, G)");
}

// "0,2/0,2": element lists per level in lattice order.
TambaraIdeal parse_ideal_text(const FunctorPtr& f, const std::string& text) {
  std::vector<ElementSet> levels;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '/')) {
    const auto h = levels.size();
    if (h >= f->levels.size()) throw UsageError("--ideal: more levels than subgroups");
    ElementSet s(f->levels[h].order());
    std::stringstream elems(part);
    std::string tok;
    while (std::getline(elems, tok, ','))
      if (!tok.empty()) s.insert(parse_element(f->levels[h], tok, "--ideal"));
    levels.push_back(std::move(s));
  }
  if (levels.size() != f->levels.size())
    throw UsageError("--ideal: expected " + std::to_string(f->levels.size()) + " '/'-separated levels");
  return make_ideal(f, std::move(levels));
}

FunctorPtr need_functor(const Options& o) {
  if (o.functor.empty()) throw UsageError("--functor is required");
  return io::load_functor(o.functor, o.strict ? Strictness::full : Strictness::standard);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const auto* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const auto* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw UsageError("--format must be " + list);
}

// ---- commands ----

int cmd_group(const Options& o) {
  check_format(o, {"text", "json"});
  const auto lat = make_lattice(io::load_group(o.group));
  if (o.format == "json") {
    Json subgroups = Json::array();
    for (std::size_t h = 0; h < lat->size(); ++h)
      subgroups.push_back(Json{{"name", lat->name(h)},
                               {"members", mask_elements((*lat)[h].members)},
                               {"class_rep", lat->class_rep_of(h)},
                               {"normal", lat->normal(h)}});
    print_json(Json{{"group", io::group_to_json(lat->group())}, {"subgroups", subgroups}, {"dedekind", is_dedekind(*lat)}});
  } else {
    std::cout << io::render_group(*lat);
  }
  return 0;
}

int cmd_burnside(const Options& o) {
  check_format(o, {"text", "json"});
  const auto lat = make_lattice(io::load_group(o.group));
  const BurnsideFunctor a(lat);
  const auto s = spec_burnside(a, parse_primes(o.primes, lat->group().order()));
  if (o.format == "json") {
    const auto& t = a.marks(lat->whole());
    Json classes = Json::array();
    for (auto k : t.classes) classes.push_back(lat->name(k));
    print_json(Json{{"group", lat->group().name()},
                    {"table_of_marks", {{"classes", classes}, {"marks", t.marks}}},
                    {"spectrum", io::spectrum_to_json(s)}});
  } else {
    std::cout << io::render_table_of_marks(a, lat->whole()) << "\n"
              << io::render_burnside_levels(a, s) << s.size() << " points\n";
  }
  return 0;
}

int cmd_functor(const Options& o) {
  check_format(o, {"text", "json"});
  const auto f = need_functor(o);
  if (o.format == "json") print_json(io::functor_to_json(*f));
  else std::cout << io::render_functor(*f) << "valid (" << (o.strict ? "full" : "standard") << " axioms)\n";
  return 0;
}

int print_ideals(const Options& o, const std::vector<TambaraIdeal>& ideals, bool with_primality) {
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& i : ideals) {
      Json j = io::ideal_to_json(i);
      if (with_primality) j["prime"] = !i.is_unit() && is_prime(i);
      out.push_back(j);
    }
    print_json(out);
    return 0;
  }
  std::cout << ideals.size() << " ideal" << (ideals.size() == 1 ? "" : "s") << "\n";
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    std::cout << "I" << k + 1;
    if (with_primality) std::cout << (ideals[k].is_unit() ? "  unit " : is_prime(ideals[k]) ? "  prime" : "       ");
    std::cout << "  " << render_ideal(ideals[k]) << "\n";
  }
  return 0;
}

int cmd_ideals(const std::string& action, const Options& o) {
  check_format(o, {"text", "json"});
  const auto f = need_functor(o);
  const auto kind = o.green ? IdealKind::green : IdealKind::tambara;
  if (action == "enumerate") return print_ideals(o, enumerate_ideals(f, o.bound, kind), !o.green);
  if (action == "close") {
    if (o.generators.empty()) throw UsageError("close needs at least one --gen LEVEL:ELEMENT");
    LevelElements gens(f->levels.size());
    for (const auto& g : o.generators) {
      const auto colon = g.find(':');
      if (colon == std::string::npos) throw UsageError("--gen expects LEVEL:ELEMENT, got \"" + g + "\"");
      const auto h = parse_level(*f->lattice, g.substr(0, colon));
      gens[h].push_back(parse_element(f->levels[h], g.substr(colon + 1), "--gen"));
    }
    return print_ideals(o, {close_ideal(f, gens, kind)}, false);
  }
  // prime
  if (o.ideal.empty()) {
    std::vector<TambaraIdeal> primes;
    for (auto& i : enumerate_tambara_ideals(f, o.bound))
      if (!i.is_unit() && is_prime(i)) primes.push_back(std::move(i));
    return print_ideals(o, primes, false);
  }
  const auto p = parse_ideal_text(f, o.ideal);
  const auto w = prime_violation(p);
  if (o.format == "json") {
    Json j{{"ideal", io::ideal_to_json(p)}, {"prime", !w}};
    if (w) j["witness"] = {io::ideal_to_json(w->first), io::ideal_to_json(w->second)};
    print_json(j);
  } else {
    std::cout << render_ideal(p) << "\n" << (w ? "not prime" : "prime") << "\n";
    if (w) std::cout << "  I = " << render_ideal(w->first) << "\n  J = " << render_ideal(w->second) << "\n  IJ lies inside\n";
  }
  return 0;
}

int cmd_spectrum(const Options& o, bool strata) {
  check_format(o, {"text", "json", "dot"});
  Spectrum s;
  std::optional<Stratification> st;
  std::string extra;
  if (o.burnside) {
    if (!o.functor.empty()) throw UsageError("--burnside and --functor are exclusive");
    const auto lat = make_lattice(io::load_group(o.group));
    const BurnsideFunctor a(lat);
    const auto primes = parse_primes(o.primes, lat->group().order());
    if (strata) st = stratify_burnside(a, primes);
    else s = spec_burnside(a, primes);
  } else {
    const auto f = need_functor(o);
    if (strata) st = stratify(f, o.bound);
    else s = spec_bruteforce(f, o.bound);
  }
  const Spectrum& spec = st ? st->spectrum : s;
  const Stratification* sp = st ? &*st : nullptr;
  if (o.format == "json") print_json(st ? io::stratification_to_json(*st) : io::spectrum_to_json(spec));
  else if (o.format == "dot") std::cout << io::render_spectrum_dot(spec, sp);
  else std::cout << io::render_spectrum_text(spec, sp);
  return 0;
}

int cmd_ghost(const Options& o) {
  check_format(o, {"text", "json", "dot"});
  const auto f = need_functor(o);
  if (!o.stratify) {
    const auto g = ghost(f);
    if (o.format == "json") print_json(io::functor_to_json(*g.functor));
    else if (o.format == "dot") throw UsageError("--format dot needs --stratify");
    else
      std::cout << io::render_functor(*g.functor)
                << "transfer ideal: " << render_set(f->levels[f->lattice->whole()], g.transfer_ideal) << "\n";
    return 0;
  }
  const auto g = stratum_ghost(f, o.bound);
  const auto& s = g.spectrum;
  Stratification st;
  st.spectrum = s;
  Stratum e;
  e.subgroup = 0;
  e.points = g.e_stratum;
  e.verdict = g.verdict;
  st.strata.push_back(e);
  if (o.format == "dot") {
    std::cout << io::render_spectrum_dot(s, &st);
    return 0;
  }
  auto labels = [&](const PointSet& ps) {
    Json out = Json::array();
    for (auto p : ps) out.push_back(s.labels[p]);
    return out;
  };
  if (o.format == "json") {
    print_json(Json{{"spectrum", io::spectrum_to_json(s)},
                    {"restricted_family", labels(g.classified_restricted)},
                    {"norm_family", labels(g.classified_norm)},
                    {"classification_matches", g.classification_matches},
                    {"transfer_surjective", g.transfer_surjective},
                    {"e_stratum", io::verdict_to_json(s, g.verdict)},
                    {"e_stratum_matches", g.e_stratum_matches}});
    return 0;
  }
  std::cout << io::render_spectrum_text(s, &st);
  auto names = [&](const PointSet& ps) {
    std::string out;
    for (auto p : ps) out += (out.empty() ? "" : ", ") + s.labels[p];
    return out.empty() ? std::string("none") : out;
  };
  std::cout << "(p; R/Tr) family: " << names(g.classified_restricted) << "\n"
            << "(Nm^-1 q; q) family: " << names(g.classified_norm) << "\n"
            << "classification matches enumeration: " << (g.classification_matches ? "yes" : "NO") << "\n"
            << "e-stratum equals the (p; R/Tr) family: " << (g.e_stratum_matches ? "yes" : "NO") << "\n"
            << "transfer surjective: " << (g.transfer_surjective ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.suite != "paper") throw UsageError("unknown suite \"" + o.suite + "\" (paper)");
  bool ok = true;
  for (const auto& r : acceptance::run_paper_suite(o.data.empty() ? acceptance::default_data_dir() : o.data)) {
    std::cout << acceptance::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nakaoka spectra of finite Tambara functors and subgroup stratifications"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group name (C<n>, C2xC2, D<2n>, Q8, S<n>) or JSON file")->capture_default_str();
  };
  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "text, json or dot")->capture_default_str(); };
  auto add_functor = [&](CLI::App* c) {
    c->add_option("--functor", o.functor, "functor JSON file");
    c->add_flag("--strict", o.strict, "also check the norm-of-sum formula (C_p, small levels)");
  };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", o.bound, "ideal search bound")->capture_default_str(); };

  auto* group = app.add_subcommand("group", "subgroup lattice");
  add_group(group);
  add_format(group);
  auto* burnside = app.add_subcommand("burnside", "table of marks and prime ideals of the Burnside functor");
  add_group(burnside);
  add_format(burnside);
  burnside->add_option("--primes", o.primes, "comma-separated primes and 0 (default: divisors of |G|, 0, one more)");
  auto* functor = app.add_subcommand("functor", "validate and describe a functor");
  add_functor(functor);
  add_format(functor);

  auto* ideals = app.add_subcommand("ideals", "Tambara ideals");
  ideals->require_subcommand(1);
  std::string ideal_action;
  for (const auto* name : {"enumerate", "close", "prime"}) {
    auto* sub = ideals->add_subcommand(name, std::string(name) + " ideals");
    add_functor(sub);
    add_format(sub);
    add_bound(sub);
    sub->callback([&ideal_action, name] { ideal_action = name; });
    if (std::string(name) != "prime") sub->add_flag("--green", o.green, "Green ideals (no norm condition)");
    if (std::string(name) == "close") sub->add_option("--gen", o.generators, "generator LEVEL:ELEMENT (repeatable)");
    if (std::string(name) == "prime") sub->add_option("--ideal", o.ideal, "ideal as '/'-separated element lists per level, e.g. 0,2/0");
  }

  std::vector<CLI::App*> spectral;
  for (const auto* name : {"spec", "stratify"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "spec" ? "prime spectrum" : "subgroup strata of the spectrum");
    add_group(sub);
    add_functor(sub);
    add_format(sub);
    add_bound(sub);
    sub->add_flag("--burnside", o.burnside, "use the Burnside functor of --group");
    sub->add_option("--primes", o.primes, "primes for the Burnside spectrum");
    spectral.push_back(sub);
  }
  auto* gh = app.add_subcommand("ghost", "ghost of a C_p functor");
  add_functor(gh);
  add_format(gh);
  add_bound(gh);
  gh->add_flag("--stratify", o.stratify, "classify the ghost spectrum and its e-stratum");
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", o.suite, "suite name")->capture_default_str();
  verify->add_option("--data", o.data, "data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*group) return cmd_group(o);
    if (*burnside) return cmd_burnside(o);
    if (*functor) return cmd_functor(o);
    if (*ideals) return cmd_ideals(ideal_action, o);
    if (*spectral[0]) return cmd_spectrum(o, false);
    if (*spectral[1]) return cmd_spectrum(o, true);
    if (*gh) return cmd_ghost(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}

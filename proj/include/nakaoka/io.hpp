#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "nakaoka/burnside.hpp"
#include "nakaoka/spectra.hpp"

namespace nakaoka::io {

using Json = nlohmann::ordered_json;

/// Unreadable files and malformed JSON (not a domain error: the CLI exits 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

// Groups: {"name", "order", "cayley"} or {"construct": cyclic|product|dihedral|
// quaternion|symmetric, "params": [...]}. Short names: C<n>, C2xC4, D<2n>, Q8, S<n>.
FiniteGroup group_from_name(const std::string& name);
FiniteGroup parse_group(const Json& j);
Json group_to_json(const FiniteGroup& g);
/// A short name or a path to a JSON file.
FiniteGroup load_group(const std::string& name_or_path);

// Rings: {"order", "add", "mul"[, "labels", "name"]} or {"construct": Zn|Fq, "params": [n]}
// or {"construct": "product", "factors": [...]}.
FiniteRing parse_ring(const Json& j);
Json ring_to_json(const FiniteRing& r);

// G-rings: {"ring": ..., "action": [[perm of ring elements] per group element]}; no action = trivial.
GRing parse_gring(const Json& j, LatticePtr lattice);
Json gring_to_json(const GRing& s);

// Functors. Explicit: {"group", "levels": [ring per subgroup in lattice order],
// "res"/"tr"/"nm": [{"sub": k, "sup": h, "map": [...]}], "conj": [[map per level] per element]}.
// Generators: {"generator": "fp", "group", "ring", "action"}, {"generator": "coind",
// "group", "subgroup": [elements], "base": functor over that subgroup},
// {"generator": "ghost", "base"}, {"generator": "product", "factors": [...]}.
// A nested base takes its group from the enclosing subgroup.
FunctorPtr parse_functor(const Json& j, Strictness strictness = Strictness::standard);
Json functor_to_json(const TambaraFunctor& f);
FunctorPtr load_functor(const std::string& path, Strictness strictness = Strictness::standard);

Json ideal_to_json(const TambaraIdeal& i);
TambaraIdeal parse_ideal(const Json& j, FunctorPtr f);

Json spectrum_to_json(const Spectrum& s);
/// `functor` for enumerated spectra, `lattice` always.
Spectrum parse_spectrum(const Json& j, LatticePtr lattice, FunctorPtr functor = nullptr);
bool same_spectrum(const Spectrum& a, const Spectrum& b);

Json verdict_to_json(const Spectrum& s, const TopologyVerdict& v);
Json stratification_to_json(const Stratification& st);

// ---- rendering ----

std::string render_group(const SubgroupLattice& lat);
std::string render_table_of_marks(const BurnsideFunctor& a, std::size_t h);
std::string render_burnside_levels(const BurnsideFunctor& a, const Spectrum& s);
std::string render_functor(const TambaraFunctor& f);
std::string render_verdict(const Spectrum& s, const TopologyVerdict& v);
/// Aligned table: point, provenance, one column per stratum, then verdicts.
std::string render_spectrum_text(const Spectrum& s, const Stratification* st = nullptr);
/// Covering relations of the specialization order, smaller to larger;
/// each point sits in the cluster of the first stratum containing it.
std::string render_spectrum_dot(const Spectrum& s, const Stratification* st = nullptr);

}  // namespace nakaoka::io

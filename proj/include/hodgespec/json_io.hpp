#pragma once

#include <string>

#include <json.hpp>

#include "hodgespec/isospec.hpp"
#include "hodgespec/lattice.hpp"
#include "hodgespec/multiset.hpp"

namespace hodgespec {

using Json = nlohmann::json;

/// {"unit": ..., "cutoff": "num/den", "entries": [["num/den", mult], ...]},
/// entries ascending.
Json spectrum_to_json(const WeightedSpectrum& w);
/// Raises ParseError on malformed documents.
WeightedSpectrum spectrum_from_json(const Json& j);

/// One row per eigenvalue: eigenvalue_num,eigenvalue_den,unit,multiplicity.
std::string spectrum_to_csv(const WeightedSpectrum& w);

/// {"n": int, "basis": [[...], ...], "layout": "row-major" | "column-major"}.
/// Row-major (the default) lists basis vectors as rows. Entries are rational
/// strings or JSON integers.
Lattice lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& lattice);

Json norm_table_to_json(const NormTable& table);
Json recovery_to_json(const RecoveryResult& result);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
/// Canonical serialization: compact, sorted keys, trailing newline.
std::string dump_json(const Json& j);

}  // namespace hodgespec

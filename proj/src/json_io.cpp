#include "hodgespec/json_io.hpp"

#include <sstream>

#include "hodgespec/error.hpp"

namespace hodgespec {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  fail(ErrorKind::ParseError, "expected a rational string or integer, got " + j.dump());
}

SpectrumUnit unit_from_string(const std::string& s) {
  if (s == to_string(SpectrumUnit::FourPiSquared)) return SpectrumUnit::FourPiSquared;
  if (s == to_string(SpectrumUnit::Plain)) return SpectrumUnit::Plain;
  fail(ErrorKind::ParseError, "unknown unit \"" + s + "\"");
}

}  // namespace

Json spectrum_to_json(const WeightedSpectrum& w) {
  Json entries = Json::array();
  for (const auto& [key, mult] : w.entries()) entries.push_back(Json::array({format_rational(key), mult}));
  return Json{{"unit", std::string(to_string(w.unit()))},
              {"cutoff", format_rational(w.cutoff())},
              {"entries", std::move(entries)}};
}

WeightedSpectrum spectrum_from_json(const Json& j) {
  const Json& unit = member(j, "unit");
  if (!unit.is_string()) fail(ErrorKind::ParseError, "\"unit\" must be a string");
  const Json& entries = member(j, "entries");
  if (!entries.is_array()) fail(ErrorKind::ParseError, "\"entries\" must be an array");
  WeightedSpectrum::Entries out;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_unsigned()) {
      fail(ErrorKind::ParseError, "entry must be [\"num/den\", multiplicity], got " + e.dump());
    }
    const Rational key = rational_from_json(e[0]);
    if (out.count(key)) fail(ErrorKind::ParseError, "duplicate eigenvalue " + format_rational(key));
    out[key] = e[1].get<Multiplicity>();
  }
  return WeightedSpectrum(unit_from_string(unit.get<std::string>()), rational_from_json(member(j, "cutoff")),
                          std::move(out));
}

std::string spectrum_to_csv(const WeightedSpectrum& w) {
  std::ostringstream os;
  os << "eigenvalue_num,eigenvalue_den,unit,multiplicity\n";
  for (const auto& [key, mult] : w.entries()) {
    os << key.get_num().get_str() << ',' << key.get_den().get_str() << ',' << to_string(w.unit()) << ',' << mult
       << '\n';
  }
  return os.str();
}

Lattice lattice_from_json(const Json& j) {
  const Json& n_field = member(j, "n");
  if (!n_field.is_number_unsigned() || n_field.get<std::uint64_t>() == 0) {
    fail(ErrorKind::ParseError, "\"n\" must be a positive integer");
  }
  const auto n = n_field.get<std::size_t>();
  std::string layout = "row-major";
  if (j.contains("layout")) {
    if (!j.at("layout").is_string()) fail(ErrorKind::ParseError, "\"layout\" must be a string");
    layout = j.at("layout").get<std::string>();
    if (layout != "row-major" && layout != "column-major") {
      fail(ErrorKind::ParseError, "unknown layout \"" + layout + "\"");
    }
  }
  const Json& basis = member(j, "basis");
  if (!basis.is_array() || basis.size() != n) fail(ErrorKind::ParseError, "\"basis\" must have n rows");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!basis[r].is_array() || basis[r].size() != n) {
      fail(ErrorKind::ParseError, "basis row " + std::to_string(r) + " must have n entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      // Lattice stores basis vectors as columns.
      if (layout == "row-major") {
        m(c, r) = rational_from_json(basis[r][c]);
      } else {
        m(r, c) = rational_from_json(basis[r][c]);
      }
    }
  }
  return Lattice(std::move(m));
}

Json lattice_to_json(const Lattice& lattice) {
  const std::size_t n = lattice.dimension();
  Json rows = Json::array();
  for (std::size_t c = 0; c < n; ++c) {
    Json row = Json::array();
    for (std::size_t r = 0; r < n; ++r) row.push_back(format_rational(lattice.basis()(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", n}, {"layout", "row-major"}, {"basis", std::move(rows)}};
}

Json norm_table_to_json(const NormTable& table) {
  Json counts = Json::array();
  for (const auto& [q, count] : table.counts) counts.push_back(Json::array({format_rational(q), count}));
  return Json{{"bound", format_rational(table.bound)}, {"counts", std::move(counts)}};
}

Json recovery_to_json(const RecoveryResult& result) {
  Json out = Json::object();
  if (const auto* o = std::get_if<OrderedParams>(&result.kind)) {
    out["ordered"] = Json::array({format_rational(o->alpha), format_rational(o->beta)});
  } else {
    const auto& u = std::get<UnorderedParams>(result.kind);
    out["unordered"] = Json::array({format_rational(u.low), format_rational(u.high)});
  }
  Json trace = Json::array();
  for (auto b : result.branch_trace) trace.push_back(std::string(to_string(b)));
  out["branch_trace"] = std::move(trace);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

}  // namespace hodgespec

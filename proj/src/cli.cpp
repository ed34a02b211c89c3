#include "hodgespec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgespec/error.hpp"
#include "hodgespec/isospec.hpp"
#include "hodgespec/json_io.hpp"
#include "hodgespec/sphere.hpp"
#include "hodgespec/torus.hpp"

namespace hodgespec {

namespace {

std::size_t parse_count(const std::string& text, const std::string& flag) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(ErrorKind::ParseError, flag + " expects a non-negative integer, got \"" + text + "\"");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, flag + " is out of range");
  }
}

Rational parse_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, flag + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedSpectrum load_spectrum(const std::string& path) { return spectrum_from_json(parse_json(read_file(path))); }

EnumerationOptions enumeration_options() {
  EnumerationOptions opts;
  if (const char* budget = std::getenv("HODGESPEC_BUDGET")) {
    opts.node_budget = parse_count(budget, "HODGESPEC_BUDGET");
  }
  return opts;
}

// Flags describing one operator. Empty strings mean "not given".
struct OperatorFlags {
  std::string lattice;
  std::string zn;
  std::string n;
  std::string p;
  std::string alpha;
  std::string beta;
  std::string r2;

  // Missing fields are taken from `base`.
  OperatorFlags with_defaults(const OperatorFlags& base) const {
    OperatorFlags f = *this;
    if (f.lattice.empty() && f.zn.empty()) {
      f.lattice = base.lattice;
      f.zn = base.zn;
    }
    for (auto [mine, theirs] : {std::pair{&f.n, &base.n}, {&f.p, &base.p}, {&f.alpha, &base.alpha},
                                {&f.beta, &base.beta}, {&f.r2, &base.r2}}) {
      if (mine->empty()) *mine = *theirs;
    }
    return f;
  }
};

std::string require(const std::string& value, const std::string& flag) {
  if (value.empty()) fail(ErrorKind::ParseError, "missing " + flag);
  return value;
}

Lattice lattice_of(const OperatorFlags& f, const std::string& suffix = "") {
  if (f.lattice.empty() == f.zn.empty()) {
    fail(ErrorKind::ParseError, "give exactly one of --lattice" + suffix + " and --zn" + suffix);
  }
  Lattice lattice = f.zn.empty() ? lattice_from_json(parse_json(read_file(f.lattice)))
                                 : Lattice::integer(parse_count(f.zn, "--zn" + suffix));
  if (!f.n.empty() && parse_count(f.n, "--n" + suffix) != lattice.dimension()) {
    fail(ErrorKind::DimensionMismatch, "--n" + suffix + " differs from the lattice dimension");
  }
  return lattice;
}

TorusOperator torus_of(const OperatorFlags& f, const std::string& suffix = "") {
  return TorusOperator{lattice_of(f, suffix), parse_count(require(f.p, "--p" + suffix), "--p" + suffix),
                       parse_flag(require(f.alpha, "--alpha" + suffix), "--alpha" + suffix),
                       parse_flag(require(f.beta, "--beta" + suffix), "--beta" + suffix)};
}

SphereOperator sphere_of(const OperatorFlags& f, const std::string& suffix = "", const std::string& r2_flag = "--r2") {
  return SphereOperator{parse_count(require(f.n, "--n" + suffix), "--n" + suffix),
                        parse_count(require(f.p, "--p" + suffix), "--p" + suffix),
                        parse_flag(require(f.alpha, "--alpha" + suffix), "--alpha" + suffix),
                        parse_flag(require(f.beta, "--beta" + suffix), "--beta" + suffix),
                        f.r2.empty() ? Rational(1) : parse_flag(f.r2, r2_flag)};
}

void add_operator_flags(CLI::App* app, OperatorFlags& f, bool torus, bool sphere, const std::string& suffix = "",
                        const std::string& r2_name = "--r2") {
  if (torus) {
    app->add_option("--lattice" + suffix, f.lattice, "lattice JSON file");
    app->add_option("--zn" + suffix, f.zn, "use the integer lattice Z^n");
  }
  app->add_option("--n" + suffix, f.n, "dimension");
  app->add_option("--p" + suffix, f.p, "form degree");
  app->add_option("--alpha" + suffix, f.alpha, "coefficient of d delta");
  app->add_option("--beta" + suffix, f.beta, "coefficient of delta d");
  if (sphere) app->add_option(r2_name, f.r2, "squared sphere radius (default 1)");
}

std::string csv_with_series(const std::vector<std::pair<std::string, WeightedSpectrum>>& parts) {
  std::ostringstream os;
  os << "eigenvalue_num,eigenvalue_den,unit,multiplicity,series\n";
  for (const auto& [name, w] : parts) {
    for (const auto& [key, mult] : w.entries()) {
      os << key.get_num().get_str() << ',' << key.get_den().get_str() << ',' << to_string(w.unit()) << ','
         << mult << ',' << name << '\n';
    }
  }
  return os.str();
}

// `extension` marks sphere degrees 0 and n, which lie outside the range the
// eigenvalue formulas were derived for; JSON output carries it as a flag.
std::string render(const std::vector<std::pair<std::string, WeightedSpectrum>>& parts, const std::string& format,
                   bool extension = false) {
  if (format == "csv") return csv_with_series(parts);
  Json j = Json::object();
  for (const auto& [name, w] : parts) j[name] = spectrum_to_json(w);
  j["mode"] = "generic";
  if (extension) j["extension"] = true;
  return dump_json(j);
}

std::string render(const WeightedSpectrum& w, const std::string& format, bool extension = false) {
  if (format == "csv") return spectrum_to_csv(w);
  Json j = spectrum_to_json(w);
  if (extension) j["extension"] = true;
  return dump_json(j);
}

bool is_recovery_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInImage:
    case ErrorKind::BranchAmbiguous:
    case ErrorKind::CutoffTooSmall:
    case ErrorKind::ParameterUnidentifiable:
    case ErrorKind::NonpositiveMin:
    case ErrorKind::EmptyInput:
      return true;
    default:
      return false;
  }
}

void report(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of alpha d delta + beta delta d on flat tori and round spheres"};
  app.require_subcommand(1);

  std::string output, format = "json", mode = "merged", cutoff;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "write the result to this file instead of standard output");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "compute a truncated spectrum");
  spectrum_cmd->require_subcommand(1);
  OperatorFlags torus_flags, sphere_flags;
  auto* spec_torus = spectrum_cmd->add_subcommand("torus", "flat torus R^n / lattice");
  auto* spec_sphere = spectrum_cmd->add_subcommand("sphere", "round sphere S^n");
  add_operator_flags(spec_torus, torus_flags, true, false);
  add_operator_flags(spec_sphere, sphere_flags, false, true);
  for (auto* cmd : {spec_torus, spec_sphere}) {
    cmd->add_option("--cutoff", cutoff, "largest eigenvalue key reported")->required();
    cmd->add_option("--mode", mode, "merged or generic")->check(CLI::IsMember({"merged", "generic"}));
    cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_output(cmd);
  }

  auto* iso_cmd = app.add_subcommand("isospec", "compare two spectra up to a cutoff");
  std::string first_kind, second_kind;
  OperatorFlags first, second;
  iso_cmd->add_option("--first", first_kind, "torus or sphere")->required()->check(CLI::IsMember({"torus", "sphere"}));
  iso_cmd->add_option("--second", second_kind, "torus or sphere (default: same as --first)")
      ->check(CLI::IsMember({"torus", "sphere"}));
  add_operator_flags(iso_cmd, first, true, true);
  add_operator_flags(iso_cmd, second, true, true, "2", "--r2-2");
  iso_cmd->add_option("--cutoff", cutoff, "comparison bound")->required();
  add_output(iso_cmd);

  auto* recover_cmd = app.add_subcommand("recover", "invert a spectrum");
  recover_cmd->require_subcommand(1);
  std::string spectrum_path, laplace_path, min_value, l_text, m_text;
  OperatorFlags rec;
  auto* rec_torus = recover_cmd->add_subcommand("torus-params", "alpha, beta of a torus operator");
  rec_torus->add_option("--spectrum", spectrum_path, "torus spectrum JSON")->required();
  rec_torus->add_option("--lattice", rec.lattice, "lattice JSON file");
  rec_torus->add_option("--zn", rec.zn, "use Z^n");
  rec_torus->add_option("--laplace", laplace_path, "function Laplacian spectrum JSON (needs --n)");
  rec_torus->add_option("--n", rec.n, "dimension");
  rec_torus->add_option("--p", rec.p, "form degree")->required();
  auto* rec_sphere = recover_cmd->add_subcommand("sphere-params", "alpha, beta of a sphere operator");
  rec_sphere->add_option("--spectrum", spectrum_path, "sphere spectrum JSON")->required();
  rec_sphere->add_option("--n", rec.n, "dimension")->required();
  rec_sphere->add_option("--p", rec.p, "form degree")->required();
  rec_sphere->add_option("--r2", rec.r2, "squared radius (default 1)");
  auto* rec_radius = recover_cmd->add_subcommand("radius", "squared radius from the smallest eigenvalue");
  add_operator_flags(rec_radius, rec, false, false);
  rec_radius->add_option("--spectrum", spectrum_path, "sphere spectrum JSON");
  rec_radius->add_option("--min", min_value, "smallest eigenvalue");
  auto* rec_base = recover_cmd->add_subcommand("base-set", "C from alpha C ^l U^m beta C");
  rec_base->add_option("--spectrum", spectrum_path, "composed spectrum JSON")->required();
  rec_base->add_option("--alpha", rec.alpha, "first scale")->required();
  rec_base->add_option("--beta", rec.beta, "second scale")->required();
  rec_base->add_option("--l", l_text, "copies of alpha C")->required();
  rec_base->add_option("--m", m_text, "copies of beta C")->required();
  for (auto* cmd : {rec_torus, rec_sphere, rec_radius, rec_base}) add_output(cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "dual lattice norm counts up to a bound");
  OperatorFlags enum_flags;
  std::string bound;
  enum_cmd->add_option("--lattice", enum_flags.lattice, "lattice JSON file");
  enum_cmd->add_option("--zn", enum_flags.zn, "use Z^n");
  enum_cmd->add_option("--bound", bound, "largest squared norm")->required();
  add_output(enum_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, std::string(to_string(ErrorKind::ParseError)), e.what());
    return kExitParseError;
  }

  const bool recovering = recover_cmd->parsed();
  try {
    std::string result;
    int code = kExitOk;
    const EnumerationOptions opts = enumeration_options();

    if (spec_torus->parsed()) {
      const TorusOperator op = torus_of(torus_flags);
      const Rational e = parse_flag(cutoff, "--cutoff");
      if (mode == "generic") {
        SplitSpectrum s = f_spectrum_generic(op, e, opts);
        result = render({{"alpha_series", s.alpha_part}, {"beta_series", s.beta_part}}, format);
      } else {
        result = render(f_spectrum(op, e, opts), format);
      }
    } else if (spec_sphere->parsed()) {
      const SphereOperator op = sphere_of(sphere_flags);
      const Rational e = parse_flag(cutoff, "--cutoff");
      if (mode == "generic") {
        auto [a, b] = spectrum_generic(op, e);
        if (is_extension_degree(op)) {
          result = render({{"function_series", a}}, format, true);
        } else {
          result = render({{"lambda_series", a}, {"mu_series", b}}, format);
        }
      } else {
        result = render(spectrum(op, e), format, is_extension_degree(op));
      }
    } else if (iso_cmd->parsed()) {
      const Rational e = parse_flag(cutoff, "--cutoff");
      if (second_kind.empty()) second_kind = first_kind;
      const OperatorFlags other = second.with_defaults(first);
      auto build = [&](const std::string& kind, const OperatorFlags& f, const std::string& suffix,
                       const std::string& r2_flag) {
        return kind == "torus" ? f_spectrum(torus_of(f, suffix), e, opts) : spectrum(sphere_of(f, suffix, r2_flag), e);
      };
      const WeightedSpectrum a = build(first_kind, first, "", "--r2");
      const WeightedSpectrum b = build(second_kind, other, "2", "--r2-2");
      const auto diverges = first_divergent_eigenvalue(a, b, e);
      Json j{{"cutoff", format_rational(e)}, {"isospectral", !diverges.has_value()}};
      if (diverges) {
        j["first_divergence"] = format_rational(*diverges);
        j["multiplicities"] = Json::array({a.multiplicity(*diverges), b.multiplicity(*diverges)});
        code = kExitNotIsospectral;
      } else {
        j["first_divergence"] = nullptr;
      }
      result = dump_json(j);
    } else if (rec_torus->parsed()) {
      const WeightedSpectrum m = load_spectrum(spectrum_path);
      const std::size_t p = parse_count(rec.p, "--p");
      RecoveryResult r = [&] {
        if (!laplace_path.empty()) {
          if (!rec.lattice.empty() || !rec.zn.empty()) {
            fail(ErrorKind::ParseError, "--laplace excludes --lattice and --zn");
          }
          return recover_torus_params(m, load_spectrum(laplace_path), parse_count(require(rec.n, "--n"), "--n"), p);
        }
        return recover_torus_params_for_lattice(m, lattice_of(rec), p, opts);
      }();
      result = dump_json(recovery_to_json(r));
    } else if (rec_sphere->parsed()) {
      const Rational r_sq = rec.r2.empty() ? Rational(1) : parse_flag(rec.r2, "--r2");
      result = dump_json(recovery_to_json(recover_sphere_params(load_spectrum(spectrum_path), parse_count(rec.n, "--n"),
                                                                parse_count(rec.p, "--p"), r_sq)));
    } else if (rec_radius->parsed()) {
      if (spectrum_path.empty() == min_value.empty()) fail(ErrorKind::ParseError, "give exactly one of --spectrum and --min");
      Rational min = spectrum_path.empty() ? parse_flag(min_value, "--min") : [&] {
        const WeightedSpectrum w = load_spectrum(spectrum_path);
        if (w.unit() != SpectrumUnit::Plain) fail(ErrorKind::UnitMismatch, "sphere spectra use the plain unit");
        return min_entry(w).first;
      }();
      const RadiusRecovery r = recover_radius_traced(parse_flag(require(rec.alpha, "--alpha"), "--alpha"),
                                                     parse_flag(require(rec.beta, "--beta"), "--beta"),
                                                     parse_count(require(rec.n, "--n"), "--n"),
                                                     parse_count(require(rec.p, "--p"), "--p"), min);
      result = dump_json(Json{{"r2", format_rational(r.r_sq)},
                              {"branch_trace", Json::array({std::string(to_string(r.branch))})}});
    } else if (rec_base->parsed()) {
      result = dump_json(spectrum_to_json(reconstruct_base(load_spectrum(spectrum_path), parse_flag(rec.alpha, "--alpha"),
                                                           parse_flag(rec.beta, "--beta"), parse_count(l_text, "--l"),
                                                           parse_count(m_text, "--m"))));
    } else if (enum_cmd->parsed()) {
      const Lattice lattice = lattice_of(enum_flags);
      result = dump_json(norm_table_to_json(enumerate_norms(dual(lattice), parse_flag(bound, "--bound"), opts)));
    }

    if (output.empty()) {
      out << result;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << result)) fail(ErrorKind::ParseError, "cannot write \"" + output + "\"");
    }
    return code;
  } catch (const Error& e) {
    report(err, std::string(to_string(e.kind())), e.what());
    if (e.kind() == ErrorKind::ParseError) return kExitParseError;
    if (recovering && is_recovery_error(e.kind())) return kExitRecoveryError;
    return kExitComputationError;
  } catch (const std::exception& e) {
    report(err, "internal_error", e.what());
    return kExitComputationError;
  }
}

}  // namespace hodgespec

#include "altexp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"
#include "altexp/field_io.hpp"
#include "altexp/finite_transform.hpp"
#include "altexp/verify.hpp"

namespace altexp {

namespace {

using nlohmann::json;

struct Options {
  std::optional<int> n;
  std::optional<int> N;
  std::string input;
  std::string output;
  std::string format;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::optional<int> resolution;
  std::string lambda;
  std::optional<double> box_size;
  std::optional<int> quad_points;
};

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw FormatError(flag + ": cannot parse '" + item + "' as a number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw FormatError(flag + " needs at least one value");
  return values;
}

/// Format from --format, else the output extension, else (when the output
/// has the input's schema family) the input extension, else `fallback`.
FileFormat choose_format(const Options& o, FileFormat fallback, bool follow_input) {
  if (!o.format.empty()) return parse_format(o.format);
  if (!o.output.empty())
    if (auto f = format_from_path(o.output)) return *f;
  if (follow_input && !o.input.empty())
    if (auto f = format_from_path(o.input)) return *f;
  return fallback;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open input file '" + path + "'");
  return in;
}

/// Writes through `emit` to --output when given, else to `out`.
void with_output(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (o.output.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw FormatError("cannot open output file '" + o.output + "'");
  emit(file);
  if (!file) throw FormatError("failed writing '" + o.output + "'");
}

/// Point file: CSV with header x_1,...,x_n or JSON {"points": [[...], ...]}.
std::vector<Point> read_points(const std::string& path, int n) {
  auto in = open_input(path);
  std::vector<Point> points;
  const auto format = format_from_path(path).value_or(FileFormat::csv);
  if (format == FileFormat::json) {
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
      throw FormatError("JSON point file needs a \"points\" array");
    for (std::size_t i = 0; i < doc["points"].size(); ++i) {
      const auto& entry = doc["points"][i];
      const std::string where = "points[" + std::to_string(i) + "]: ";
      if (!entry.is_array() || static_cast<int>(entry.size()) != n)
        throw DimensionError(where + "expected " + std::to_string(n) + " coordinates");
      std::vector<double> x;
      for (const auto& c : entry) {
        if (!c.is_number()) throw FormatError(where + "coordinates must be numbers");
        x.push_back(c.get<double>());
      }
      points.emplace_back(std::move(x));
    }
    return points;
  }

  std::string line;
  std::size_t line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (!have_header) {
      have_header = true;
      if (static_cast<int>(fields.size()) != n)
        throw DimensionError(where + "header has " + std::to_string(fields.size()) +
                             " columns but lambda has " + std::to_string(n) + " entries");
      continue;
    }
    if (static_cast<int>(fields.size()) != n)
      throw DimensionError(where + "expected " + std::to_string(n) + " values, found " +
                           std::to_string(fields.size()));
    std::vector<double> x;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      char* end = nullptr;
      const double v = std::strtod(fields[c].c_str(), &end);
      if (fields[c].empty() || end == fields[c].c_str() || *end != '\0' || !std::isfinite(v))
        throw FormatError(where + "column x_" + std::to_string(c + 1) + ": cannot parse '" +
                          fields[c] + "'");
      x.push_back(v);
    }
    points.emplace_back(std::move(x));
  }
  return points;
}

/// Points k/R, k = 0..R, in every coordinate.
std::vector<Point> lattice(int n, int R) {
  if (R < 1) throw DomainError("--resolution must be at least 1");
  std::vector<Point> points;
  std::vector<int> k(n, 0);
  while (true) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<double>(k[i]) / R;
    points.emplace_back(std::move(x));
    int i = n - 1;
    while (i >= 0 && k[i] == R) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return points;
}

void check_dimension(const Options& o, int n, const std::string& what) {
  if (o.n && *o.n != n)
    throw DimensionError("--n " + std::to_string(*o.n) + " does not match " + what + " n=" +
                         std::to_string(n));
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.lambda.empty()) throw FormatError("eval needs --lambda (or --m)");
  const Weight lambda(parse_list(o.lambda, "--lambda"));
  const int n = static_cast<int>(lambda.size());
  check_dimension(o, n, "lambda with");
  const auto points = o.input.empty() ? lattice(n, o.resolution.value_or(8)) : read_points(o.input, n);
  const auto format = choose_format(o, FileFormat::csv, false);

  with_output(o, out, [&](std::ostream& stream) {
    if (format == FileFormat::csv) {
      for (int i = 1; i <= n; ++i) stream << "x_" << i << ',';
      stream << "re_E,im_E,re_Eplus,im_Eplus,re_Eminus,im_Eminus\n";
      for (const auto& x : points) {
        for (double c : x) stream << format_double(c) << ',';
        const Complex values[] = {eval_E(lambda, x), eval_E_plus(lambda, x), eval_E_minus(lambda, x)};
        for (int v = 0; v < 3; ++v)
          stream << format_double(values[v].real()) << ',' << format_double(values[v].imag())
                 << (v == 2 ? '\n' : ',');
      }
      return;
    }
    json doc{{"n", n}, {"lambda", lambda.vector()}, {"rows", json::array()}};
    for (const auto& x : points) {
      const Complex e = eval_E(lambda, x);
      const Complex plus = eval_E_plus(lambda, x);
      const Complex minus = eval_E_minus(lambda, x);
      doc["rows"].push_back({{"x", x.vector()},
                             {"E", {e.real(), e.imag()}},
                             {"E_plus", {plus.real(), plus.imag()}},
                             {"E_minus", {minus.real(), minus.imag()}}});
    }
    stream << doc.dump(1) << '\n';
  });
  return kExitSuccess;
}

template <class Tag>
KeyedValues<Tag> load_keyed(const Options& o) {
  if (o.input.empty()) throw FormatError("--input is required");
  auto in = open_input(o.input);
  const auto records = read_records(in, format_from_path(o.input).value_or(FileFormat::json));
  check_dimension(o, records.n, "input file with");
  return from_records<Tag>(records, o.N);
}

int cmd_forward(const Options& o, std::ostream& out) {
  const auto samples = load_keyed<SampleTag>(o);
  const GridSpec grid(samples.dimension(), samples.density());
  check_keys(samples, grid);
  const auto coefficients = forward(samples, grid);
  const auto format = choose_format(o, FileFormat::json, true);
  with_output(o, out, [&](std::ostream& s) { write_records(s, to_records(coefficients), format); });
  return kExitSuccess;
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const auto coefficients = load_keyed<CoefficientTag>(o);
  const GridSpec grid(coefficients.dimension(), coefficients.density());
  check_keys(coefficients, grid);
  const auto samples = inverse(coefficients, grid);
  const auto format = choose_format(o, FileFormat::json, true);
  with_output(o, out, [&](std::ostream& s) { write_records(s, to_records(samples), format); });
  return kExitSuccess;
}

int cmd_interpolate(const Options& o, std::ostream& out) {
  const auto coefficients = load_keyed<CoefficientTag>(o);
  const int n = coefficients.dimension();
  const GridSpec grid(n, coefficients.density());
  check_keys(coefficients, grid);
  std::vector<Point> probes;
  for (auto& x : lattice(n, o.resolution.value_or(16)))
    if (in_closed_affine_domain(x)) probes.push_back(std::move(x));
  const auto format = choose_format(o, FileFormat::csv, false);

  with_output(o, out, [&](std::ostream& stream) {
    if (format == FileFormat::csv) {
      for (int i = 1; i <= n; ++i) stream << "x_" << i << ',';
      stream << "re,im\n";
      for (const auto& x : probes) {
        const Complex v = interpolate(coefficients, x);
        for (double c : x) stream << format_double(c) << ',';
        stream << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
      }
      return;
    }
    json doc{{"n", n}, {"N", coefficients.density()}, {"points", json::array()}};
    for (const auto& x : probes) {
      const Complex v = interpolate(coefficients, x);
      doc["points"].push_back({{"x", x.vector()}, {"re", v.real()}, {"im", v.imag()}});
    }
    stream << doc.dump(1) << '\n';
  });
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig config;
  if (o.n) {
    if (*o.n < 1) throw DomainError("--n must be positive");
    config.dimensions = {*o.n};
  }
  if (o.N) {
    if (*o.N < 1) throw DomainError("--N must be positive");
    config.max_density = *o.N;
  }
  if (o.resolution) config.resolution = *o.resolution;
  if (o.box_size) config.box_half_width = *o.box_size;
  if (o.quad_points) config.box_points = *o.quad_points;
  config.seed = o.seed;
  config.tolerance = o.tolerance;

  const auto report = run_verification(config);
  write_report_text(out, report);
  if (!o.output.empty()) {
    with_output(o, out, [&](std::ostream& s) { write_report_json(s, report); });
  } else if (!o.format.empty() && parse_format(o.format) == FileFormat::json) {
    write_report_json(out, report);
  }
  return report.all_passed() ? kExitSuccess : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating multivariate exponential functions and their transforms", "altexp"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension");
    sub->add_option("--N", o.N, "grid density");
    sub->add_option("--input", o.input, "input file (.json or .csv)");
    sub->add_option("--output", o.output, "output file (default: standard output)");
    sub->add_option("--format", o.format, "json or csv");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--tolerance", o.tolerance, "override every verification tolerance");
    sub->add_option("--resolution", o.resolution, "lattice or quadrature points per axis");
  };

  auto* eval = app.add_subcommand("eval", "evaluate E, E+ and E- at points");
  common(eval);
  eval->add_option("--lambda,--m", o.lambda, "comma-separated weight");
  auto* fwd = app.add_subcommand("forward", "finite transform: samples to coefficients");
  common(fwd);
  auto* inv = app.add_subcommand("inverse", "finite transform: coefficients to samples");
  common(inv);
  auto* interp = app.add_subcommand("interpolate", "evaluate an expansion on a probe lattice");
  common(interp);
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  common(verify);
  verify->add_option("--box-size", o.box_size, "half width of the transform box");
  verify->add_option("--quad-points", o.quad_points, "Gauss-Legendre points per axis on the box");

  std::vector<std::string> storage = {"altexp"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown subcommand '" << args[0] << "'\n\n" << app.help();
    return kExitUsage;
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (fwd->parsed()) return cmd_forward(o, out);
    if (inv->parsed()) return cmd_inverse(o, out);
    if (interp->parsed()) return cmd_interpolate(o, out);
    return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace altexp

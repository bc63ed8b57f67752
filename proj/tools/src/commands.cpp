#include "nlft_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nlft/distributions.hpp"
#include "nlft/extraction.hpp"
#include "nlft/partitions.hpp"
#include "nlft/transforms.hpp"

namespace nlft::cli {
namespace {

constexpr double kMultinomialTolerance = 1e-9;
constexpr double kSu2Tolerance = 1e-10;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::istringstream parser(item);
    parser.imbue(std::locale::classic());
    T value{};
    if (!(parser >> value) || !parser.eof()) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " '" + item + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
  return values;
}

void add_matrix_cells(std::vector<Cell>& row, const Matrix2c& m) {
  for (const auto& z : m.entries()) {
    row.emplace_back(z.real());
    row.emplace_back(z.imag());
  }
}

}  // namespace

Signal parse_signal(std::istream& in) {
  std::vector<Complex> samples;
  bool real_valued = true;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string field; tokens >> field;) fields.push_back(field);
    if (fields.empty()) continue;
    if (fields.size() > 2) {
      throw std::invalid_argument("signal line " + std::to_string(line_number) +
                                  ": expected 'real' or 'real imag'");
    }
    double parts[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto& f = fields[i];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), parts[i]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw std::invalid_argument("signal line " + std::to_string(line_number) +
                                    ": cannot parse '" + f + "'");
      }
    }
    if (parts[1] != 0.0) real_valued = false;
    samples.emplace_back(parts[0], parts[1]);
  }
  if (samples.empty()) throw std::invalid_argument("signal file has no samples");
  if (real_valued) {
    std::vector<double> re;
    for (const auto& z : samples) re.push_back(z.real());
    return Signal::real(std::move(re));
  }
  return Signal::complex(std::move(samples));
}

Signal read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open signal file " + path);
  return parse_signal(in);
}

std::vector<int> parse_int_list(const std::string& text) { return parse_list<int>(text, "integer"); }

std::vector<double> parse_double_list(const std::string& text) {
  return parse_list<double>(text, "number");
}

namespace {

// Enumeration visits every tuple; the transform routes lose integer resolution
// in double precision or exhaust the monomial budget beyond these sizes.
const BigInt kEnumerationLimit = 100'000'000;
const BigInt kAqTransformLimit = 100'000'000;
constexpr std::size_t kApTransformTerms = 20'000;

std::string location(int grid_size, int shift, int parts) {
  return "(N, l, d) = (" + std::to_string(grid_size) + ", " + std::to_string(shift) + ", " +
         std::to_string(parts) + ")";
}

Cell optional_count(const std::optional<BigInt>& value) {
  if (value) return *value;
  return std::string("n/a");
}

std::string status(bool computed) { return computed ? "computed" : "skipped"; }

}  // namespace

Table cmd_aq_table(int grid_size, int parts) {
  Table table{"aq-table", {"l", "aq_closed", "aq_brute", "extract_aq", "agree"}, {}, {}};
  const BigInt expected = binomial(grid_size, parts);
  const bool enumerate = expected <= kEnumerationLimit;
  const bool transform = expected <= kAqTransformLimit;
  std::vector<ExtractedCount> extracted;
  if (transform) extracted = extract_aq_all(grid_size, parts);

  std::vector<std::string> failures;
  BigInt sum = 0;
  for (int l = 0; l < grid_size; ++l) {
    const BigInt closed = aq_closed(grid_size, l, parts);
    std::optional<BigInt> brute;
    std::optional<BigInt> via_transform;
    bool agree = true;
    if (enumerate) {
      brute = aq_brute(grid_size, l, parts);
      agree = agree && *brute == closed;
    }
    if (transform) {
      const auto& e = extracted[static_cast<std::size_t>(l)];
      via_transform = e.value;
      agree = agree && e.value == closed && e.residue < 1e-6;
    }
    if (!agree) failures.push_back(location(grid_size, l, parts));
    sum += closed;
    table.add_row({static_cast<long long>(l), closed, optional_count(brute), optional_count(via_transform), agree});
  }
  table.footer = {{"sum_aq_closed", sum},
                  {"binomial_N_d", expected},
                  {"checksum_ok", sum == expected},
                  {"enumeration", status(enumerate)},
                  {"transform", status(transform)}};
  if (sum != expected) failures.push_back("checksum");
  if (!failures.empty()) throw ConsistencyFailure("aq-table disagreement at " + failures.front(), table);
  return table;
}

Table cmd_ap_table(int grid_size, int parts) {
  const BigInt expected = binomial(grid_size + parts - 1, parts);
  if (expected > kEnumerationLimit) {
    throw std::invalid_argument("ap-table: C(N + d - 1, d) exceeds the enumeration limit 10^8");
  }
  Table table{"ap-table", {"l", "ap_brute", "ap_via_alt", "extract_ap", "agree"}, {}, {}};
  const bool transform = monomial_budget(static_cast<std::size_t>(grid_size), parts) <= kApTransformTerms;
  const std::vector<BigInt> via_alt = ap_via_alt_all(grid_size, parts);
  std::vector<ExtractedCount> extracted;
  if (transform) extracted = extract_ap_all(grid_size, parts);

  std::vector<std::string> failures;
  BigInt sum = 0;
  for (int l = 0; l < grid_size; ++l) {
    const BigInt brute = ap_brute(grid_size, l, parts);
    const BigInt& alt_count = via_alt[static_cast<std::size_t>(l)];
    std::optional<BigInt> via_transform;
    bool agree = brute == alt_count;
    if (transform) {
      const auto& e = extracted[static_cast<std::size_t>(l)];
      via_transform = e.value;
      agree = agree && e.value == brute && e.residue < 1e-6;
    }
    if (!agree) failures.push_back(location(grid_size, l, parts));
    sum += brute;
    table.add_row({static_cast<long long>(l), brute, alt_count, optional_count(via_transform), agree});
  }
  table.footer = {{"sum_ap_brute", sum},
                  {"multiset_count", expected},
                  {"checksum_ok", sum == expected},
                  {"transform", status(transform)}};
  if (sum != expected) failures.push_back("checksum");
  if (!failures.empty()) throw ConsistencyFailure("ap-table disagreement at " + failures.front(), table);
  return table;
}

NlftKind parse_nlft_kind(const std::string& name) {
  if (name == "closed-form") return NlftKind::closed_form;
  if (name == "step") return NlftKind::step;
  if (name == "dyson") return NlftKind::dyson;
  if (name == "volume") return NlftKind::volume;
  if (name == "fn") return NlftKind::euler;
  if (name == "gn") return NlftKind::splitting;
  throw std::invalid_argument("unknown transform kind '" + name +
                              "' (closed-form, step, dyson, volume, fn, gn)");
}

Table cmd_nlft(const NlftRequest& request) {
  if (request.amplitude && request.signal) {
    throw std::invalid_argument("nlft: give either --amplitude or --signal, not both");
  }
  if (!request.amplitude && !request.signal) {
    throw std::invalid_argument("nlft: --amplitude or --signal is required");
  }
  const bool needs_constant =
      request.kind == NlftKind::closed_form || request.kind == NlftKind::volume;
  if (needs_constant && !request.amplitude) {
    throw std::invalid_argument("nlft: this kind needs a constant --amplitude");
  }
  if (request.amplitude && request.grid_size < 1 && !needs_constant) {
    throw std::invalid_argument("nlft: --size must be >= 1 for a constant signal");
  }
  const int grid = request.signal ? static_cast<int>(request.signal->size())
                                  : std::max(request.grid_size, 1);
  const Signal signal =
      request.signal ? *request.signal : Signal::constant(static_cast<std::size_t>(grid), *request.amplitude);

  const long long n_min = request.n_min.value_or(0);
  const long long n_max = request.n_max.value_or(grid - 1);
  if (n_min > n_max) throw std::invalid_argument("nlft: empty spectral range");
  const bool discrete = request.kind == NlftKind::euler || request.kind == NlftKind::splitting;
  if (discrete && (n_min < 0 || n_max >= grid)) {
    throw std::out_of_range("nlft: discrete transforms need 0 <= n < N");
  }

  Table table{"nlft",
              {"n", "re11", "im11", "re12", "im12", "re21", "im21", "re22", "im22", "det_re",
               "det_im", "unitarity_err", "su2", "diff_closed_form"},
              {},
              {}};
  double max_diff_seen = 0.0;
  for (long long n = n_min; n <= n_max; ++n) {
    Matrix2c value;
    switch (request.kind) {
      case NlftKind::closed_form: value = nlft_constant(*request.amplitude, n); break;
      case NlftKind::step: value = nlft_step(signal, n); break;
      case NlftKind::dyson:
        value = nlft_dyson(signal, n, request.max_order < 0 ? 12 : request.max_order,
                           request.quad_points < 0 ? 2048 : request.quad_points);
        break;
      case NlftKind::volume:
        value = nlft_volume_expansion(*request.amplitude, n,
                                      request.max_order < 0 ? 14 : request.max_order,
                                      request.quad_points < 0 ? 2000 : request.quad_points);
        break;
      case NlftKind::euler: value = f_n(signal, n); break;
      case NlftKind::splitting: value = g_n(signal, n); break;
    }
    std::vector<Cell> row{n};
    add_matrix_cells(row, value);
    const Complex det = value.det();
    row.emplace_back(det.real());
    row.emplace_back(det.imag());
    row.emplace_back(max_diff(value.adjoint() * value, Matrix2c::identity()));
    row.emplace_back(is_su2(value, kSu2Tolerance));
    if (request.amplitude) {
      const double diff = max_diff(value, nlft_constant(*request.amplitude, n));
      max_diff_seen = std::max(max_diff_seen, diff);
      row.emplace_back(diff);
    } else {
      row.emplace_back(std::numeric_limits<double>::quiet_NaN());
    }
    table.add_row(std::move(row));
  }
  table.footer = {{"grid_size", static_cast<long long>(grid)}};
  if (request.amplitude) table.footer.emplace_back("max_diff_closed_form", max_diff_seen);
  return table;
}

Table cmd_beta(int a, int b, double lambda, const std::vector<int>& grid_sizes) {
  Table table{"beta",
              {"N", "l", "lambda_N", "P_N", "point_mass", "p_beta", "abs_err", "p_beta_lambda",
               "abs_err_lambda", "c_N"},
              {},
              {}};
  const auto rows = convergence_table(a, b, lambda, grid_sizes);
  for (const auto& r : rows) {
    table.add_row({static_cast<long long>(r.grid_size), static_cast<long long>(r.shift),
                   static_cast<double>(r.shift) / r.grid_size, r.discrete, r.discrete / r.grid_size,
                   r.continuous, r.abs_err, r.continuous_at_lambda, r.abs_err_lambda,
                   r.normalizer});
  }
  table.footer.emplace_back("shape_alpha", static_cast<double>(a + 1));
  table.footer.emplace_back("shape_beta", static_cast<double>(b + 1));
  table.footer.emplace_back("p_beta_lambda", beta_pdf(lambda, BetaShape::from_exponents(a, b)));
  if (rows.size() >= 2 && rows[rows.size() - 2].abs_err > 0.0) {
    table.footer.emplace_back("last_error_ratio",
                              rows.back().abs_err / rows[rows.size() - 2].abs_err);
  }
  return table;
}

Table cmd_volume_grid(int parts, int points) {
  if (points < 2) throw std::invalid_argument("volume: --grid needs at least 2 points");
  Table table{"volume", {"l", "vol_formula", "density"}, {}, {}};
  double factorial = 1.0;
  for (int i = 2; i <= parts; ++i) factorial *= i;
  for (int j = 0; j < points; ++j) {
    const double l = static_cast<double>(j) / (points - 1);
    const double vol = vol_formula(parts, l);
    table.add_row({l, vol, factorial * vol});
  }
  const auto shape = fiber_shape(parts);
  table.footer = {{"degree", static_cast<long long>(parts)},
                  {"shape_alpha", shape.alpha()},
                  {"shape_beta", shape.beta()}};
  return table;
}

Table cmd_volume_mc(int parts, const std::vector<double>& centers, double bin_width,
                    unsigned long long samples, unsigned long long seed) {
  Table table{"volume-mc",
              {"l", "vol_formula", "vol_mc", "stderr", "z_score", "within_3_sigma", "hits",
               "samples", "seed"},
              {},
              {}};
  bool all_within = true;
  for (double center : centers) {
    const double exact = vol_formula(parts, center);
    const VolumeEstimate mc = vol_mc(parts, center, bin_width, samples, seed);
    const double z = (mc.estimate - exact) / mc.standard_error;
    const bool within = std::abs(z) <= 3.0;
    all_within = all_within && within;
    table.add_row({center, exact, mc.estimate, mc.standard_error, z, within,
                   static_cast<long long>(mc.hits), static_cast<long long>(mc.samples),
                   std::to_string(seed)});
  }
  table.footer = {{"degree", static_cast<long long>(parts)},
                  {"bin_width", bin_width},
                  {"all_within_3_sigma", all_within}};
  return table;
}

Table cmd_volume_aq_limit(int parts, double lambda, const std::vector<int>& grid_sizes) {
  Table table{"volume-aq-limit",
              {"N", "l", "scaled_aq", "p_beta_target", "abs_err", "aq_over_N_pow", "vol_formula",
               "vol_err"},
              {},
              {}};
  for (const auto& r : aq_beta_limit_check(parts, lambda, grid_sizes)) {
    table.add_row({static_cast<long long>(r.grid_size), static_cast<long long>(r.shift),
                   r.scaled_aq, r.density_target, r.abs_err, r.volume_estimate, r.volume_target,
                   r.volume_err});
  }
  table.footer = {{"degree", static_cast<long long>(parts)}, {"lambda", lambda}};
  return table;
}

Table cmd_multinomial(const std::vector<double>& u, int degree, std::optional<int> shift) {
  Table table{"multinomial", {"l", "p_alt", "p_alt_direct", "abs_diff"}, {}, {}};
  const int grid = static_cast<int>(u.size());
  int first = 0;
  int last = grid - 1;
  if (shift) {
    if (*shift < 0 || *shift >= grid) throw std::out_of_range("multinomial: --shift outside 0..N-1");
    first = last = *shift;
  }
  double sum = 0.0;
  double worst = 0.0;
  for (int l = first; l <= last; ++l) {
    const double transform = p_alt(u, degree, l);
    const double direct = p_alt_direct(u, degree, l);
    const double diff = std::abs(transform - direct);
    worst = std::max(worst, diff);
    sum += transform;
    table.add_row({static_cast<long long>(l), transform, direct, diff});
  }
  table.footer.emplace_back("max_abs_diff", worst);
  if (!shift) table.footer.emplace_back("sum_p_alt", sum);
  if (worst > kMultinomialTolerance) {
    throw ConsistencyFailure("multinomial: transform and enumeration routes differ by " +
                                 format_double(worst),
                             table);
  }
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlinear Fourier transform, alternating partitions and discrete beta tables"};
  app.name("nlft");
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write to PATH instead of stdout");
  };

  int size = 0;
  int degree = 0;
  auto* aq = app.add_subcommand("aq-table", "AQ_N(l, d): closed form, brute force, transform");
  aq->add_option("--size", size, "grid size N")->required()->check(CLI::PositiveNumber);
  aq->add_option("--degree", degree, "number of parts d")->required()->check(CLI::PositiveNumber);
  add_output(aq);

  auto* ap = app.add_subcommand("ap-table", "AP_N(l, d): brute force, alt enumeration, transform");
  ap->add_option("--size", size, "grid size N")->required()->check(CLI::PositiveNumber);
  ap->add_option("--degree", degree, "number of parts d")->required()->check(CLI::PositiveNumber);
  add_output(ap);

  std::string kind = "fn";
  double amplitude = 0.0;
  std::string signal_path;
  long long n_min = 0;
  long long n_max = 0;
  int dmax = -1;
  int quad = -1;
  auto* nl = app.add_subcommand("nlft", "matrix table of a transform over spectral indices");
  nl->add_option("--kind", kind, "closed-form, step, dyson, volume, fn, gn");
  auto* amplitude_opt = nl->add_option("--amplitude", amplitude, "constant signal value u");
  auto* signal_opt = nl->add_option("--signal", signal_path, "signal file");
  nl->add_option("--size", size, "grid size N for a constant signal");
  auto* nmin_opt = nl->add_option("--nmin", n_min, "first spectral index");
  auto* nmax_opt = nl->add_option("--nmax", n_max, "last spectral index");
  nl->add_option("--dmax", dmax, "series order (dyson, volume)");
  nl->add_option("--quad", quad, "quadrature nodes/panels (dyson, volume)");
  add_output(nl);

  std::string shape_text;
  double lambda = 0.5;
  std::string sizes_text;
  auto* beta = app.add_subcommand("beta", "discrete beta against the continuous density");
  beta->add_option("--shape", shape_text, "integer exponents a,b")->required();
  beta->add_option("--lambda", lambda, "point in [0, 1]")->required();
  beta->add_option("--sizes", sizes_text, "grid sizes, e.g. 50,100,200")->required();
  add_output(beta);

  int grid_points = 11;
  unsigned long long samples = 0;
  unsigned long long seed = 0;
  double bin_width = 0.02;
  std::string centers_text = "0.25,0.5,0.75";
  auto* vol = app.add_subcommand("volume", "fiber volumes: formula grid, Monte Carlo or AQ limit");
  vol->add_option("--degree", degree, "number of parts d")->required()->check(CLI::PositiveNumber);
  vol->add_option("--grid", grid_points, "number of grid points in [0, 1]");
  auto* samples_opt = vol->add_option("--samples", samples, "Monte Carlo sample count");
  auto* seed_opt = vol->add_option("--seed", seed, "Monte Carlo seed");
  vol->add_option("--bin-width", bin_width, "Monte Carlo bin width");
  vol->add_option("--centers", centers_text, "Monte Carlo bin centers");
  auto* vol_lambda = vol->add_option("--lambda", lambda, "point for the AQ limit table");
  auto* vol_sizes = vol->add_option("--sizes", sizes_text, "grid sizes for the AQ limit table");
  add_output(vol);

  int shift = 0;
  auto* mn = app.add_subcommand("multinomial", "P_alt(l) by transform and by enumeration");
  mn->add_option("--degree", degree, "number of draws d")->required()->check(CLI::PositiveNumber);
  auto* mn_signal = mn->add_option("--signal", signal_path, "probabilities, one per line");
  auto* mn_size = mn->add_option("--size", size, "uniform probabilities 1/N");
  auto* shift_opt = mn->add_option("--shift", shift, "single l (default: all)");
  add_output(mn);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  auto emit = [&](const Table& table) {
    const auto fmt = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (out_path.empty()) {
      write_table(out, table, fmt);
      return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file " + out_path);
    write_table(file, table, fmt);
  };

  try {
    if (aq->parsed()) {
      emit(cmd_aq_table(size, degree));
    } else if (ap->parsed()) {
      emit(cmd_ap_table(size, degree));
    } else if (nl->parsed()) {
      NlftRequest request;
      request.kind = parse_nlft_kind(kind);
      if (*amplitude_opt) request.amplitude = amplitude;
      if (*signal_opt) request.signal = read_signal_file(signal_path);
      request.grid_size = size;
      if (*nmin_opt) request.n_min = n_min;
      if (*nmax_opt) request.n_max = n_max;
      request.max_order = dmax;
      request.quad_points = quad;
      emit(cmd_nlft(request));
    } else if (beta->parsed()) {
      const auto shape = parse_int_list(shape_text);
      if (shape.size() != 2) throw std::invalid_argument("beta: --shape expects a,b");
      emit(cmd_beta(shape[0], shape[1], lambda, parse_int_list(sizes_text)));
    } else if (vol->parsed()) {
      if (*samples_opt) {
        if (!*seed_opt) throw std::invalid_argument("volume: --seed is required with --samples");
        emit(cmd_volume_mc(degree, parse_double_list(centers_text), bin_width, samples, seed));
      } else if (*vol_sizes || *vol_lambda) {
        if (!*vol_sizes || !*vol_lambda) {
          throw std::invalid_argument("volume: --lambda and --sizes go together");
        }
        emit(cmd_volume_aq_limit(degree, lambda, parse_int_list(sizes_text)));
      } else {
        emit(cmd_volume_grid(degree, grid_points));
      }
    } else if (mn->parsed()) {
      std::vector<double> u;
      if (*mn_signal && *mn_size) throw std::invalid_argument("multinomial: --signal or --size, not both");
      if (*mn_signal) {
        u = read_signal_file(signal_path).real_samples();
      } else if (*mn_size) {
        if (size < 1) throw std::invalid_argument("multinomial: --size must be >= 1");
        u.assign(static_cast<std::size_t>(size), 1.0 / size);
      } else {
        throw std::invalid_argument("multinomial: --signal or --size is required");
      }
      emit(cmd_multinomial(u, degree, *shift_opt ? std::optional<int>(shift) : std::nullopt));
    }
  } catch (const ConsistencyFailure& e) {
    emit(e.table());
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace nlft::cli

#ifndef NLFT_CLI_COMMANDS_HPP
#define NLFT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlft/signal.hpp"
#include "nlft_cli/table.hpp"

namespace nlft::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kConsistencyFailure = 2 };

/// Raised when an oracle and the route it checks disagree. The table built so
/// far is still written before the process exits with code 2.
class ConsistencyFailure : public std::runtime_error {
 public:
  ConsistencyFailure(const std::string& what, Table partial)
      : std::runtime_error(what), table_(std::move(partial)) {}
  const Table& table() const { return table_; }

 private:
  Table table_;
};

/// Signal file: one sample per line, "real" or "real imag"; blank lines skipped.
Signal parse_signal(std::istream& in);
Signal read_signal_file(const std::string& path);

/// Comma-separated integer list such as "50,100,200".
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

Table cmd_aq_table(int grid_size, int parts);
Table cmd_ap_table(int grid_size, int parts);

enum class NlftKind { closed_form, step, dyson, volume, euler, splitting };
NlftKind parse_nlft_kind(const std::string& name);

struct NlftRequest {
  NlftKind kind = NlftKind::euler;
  std::optional<double> amplitude;  ///< constant signal value
  std::optional<Signal> signal;     ///< explicit samples
  int grid_size = 0;                ///< length of the constant signal
  std::optional<long long> n_min;
  std::optional<long long> n_max;
  int max_order = -1;               ///< -1: per-kind default
  int quad_points = -1;
};
Table cmd_nlft(const NlftRequest& request);

Table cmd_beta(int a, int b, double lambda, const std::vector<int>& grid_sizes);

Table cmd_volume_grid(int parts, int points);
Table cmd_volume_mc(int parts, const std::vector<double>& centers, double bin_width,
                    unsigned long long samples, unsigned long long seed);
Table cmd_volume_aq_limit(int parts, double lambda, const std::vector<int>& grid_sizes);

/// All l when shift is empty.
Table cmd_multinomial(const std::vector<double>& u, int degree, std::optional<int> shift);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlft::cli

#endif  // NLFT_CLI_COMMANDS_HPP

// horadam: compute Horadam octonions and verify their closed-form identities.
//
//   horadam term --preset fibonacci -n 0
//   horadam term -a 2 -b 2 -p 2 -q 1 -n 0
//   horadam verify [--preset NAME | -a A -b B -p P -q Q] [--n-max N] [--identities LIST]
//   horadam emit-table [--out PATH]
//
// Exit codes: 0 success, 1 mismatch found, 2 usage error, 3 I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "horadam/horadam_octonions.hpp"
#include "horadam/octonion.hpp"
#include "horadam/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct ParamOptions {
  std::string preset;
  std::optional<std::int64_t> a, b, p, q;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--preset", preset, "Named parameter set")
        ->check(CLI::IsMember(horadam::preset_names()));
    cmd.add_option("-a", a, "w_0");
    cmd.add_option("-b", b, "w_1");
    cmd.add_option("-p", p, "recurrence coefficient of w_{n-1}");
    cmd.add_option("-q", q, "recurrence coefficient of w_{n-2}");
  }

  bool any_explicit() const { return a || b || p || q; }
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw std::ios_base::failure("write to '" + path + "' failed");
  }

 private:
  std::ofstream file_;
};

int cmd_term(const ParamOptions& opts, horadam::Index n, const std::string& out_path) {
  horadam::HoradamParams params;
  if (!opts.preset.empty()) {
    params = horadam::preset(opts.preset);
  } else if (opts.a && opts.b && opts.p && opts.q) {
    params = {*opts.a, *opts.b, *opts.p, *opts.q};
  } else {
    throw horadam::UsageError("term needs --preset or all of -a -b -p -q");
  }
  OutputFile out(out_path);
  out.stream() << horadam::og_term(params, n).value << '\n';
  out.finish(out_path);
  return 0;
}

int cmd_verify(const ParamOptions& opts, horadam::GridSpec grid, const std::string& identities,
               unsigned jobs, const std::string& out_path) {
  if (!opts.preset.empty()) {
    const horadam::HoradamParams pr = horadam::preset(opts.preset);
    grid.a = {pr.a, pr.a};
    grid.b = {pr.b, pr.b};
    grid.p = {pr.p, pr.p};
    grid.q = {pr.q, pr.q};
  }
  if (opts.a) grid.a = {*opts.a, *opts.a};
  if (opts.b) grid.b = {*opts.b, *opts.b};
  if (opts.p) grid.p = {*opts.p, *opts.p};
  if (opts.q) grid.q = {*opts.q, *opts.q};
  grid.identities = horadam::parse_identity_list(identities);
  grid.validate();

  OutputFile out(out_path);
  const horadam::VerifySummary summary = horadam::run_verify(grid, out.stream(), jobs);
  out.finish(out_path);
  return summary.mismatch == 0 ? 0 : kExitMismatch;
}

int cmd_emit_table(const std::string& out_path) {
  OutputFile out(out_path);
  out.stream() << horadam::build_table().to_fixture();
  out.finish(out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horadam octonions: terms, identity verification, multiplication table"};
  app.require_subcommand(1);

  ParamOptions term_opts;
  horadam::Index term_n = 0;
  std::string term_out;
  CLI::App* term = app.add_subcommand("term", "Print the 8 coefficients of OG_n");
  term_opts.add_to(*term);
  term->add_option("-n", term_n, "Index n >= 0")->required();
  term->add_option("--out", term_out, "Output file (default stdout)");

  ParamOptions verify_opts;
  horadam::GridSpec grid;
  std::string a_range = "-2:2", b_range = "-2:2", p_range = "-2:2", q_range = "-2:2";
  std::string identities = "all";
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Check identities over a parameter grid");
  verify_opts.add_to(*verify);
  verify->add_option("--a-range", a_range, "LO:HI for a")->capture_default_str();
  verify->add_option("--b-range", b_range, "LO:HI for b")->capture_default_str();
  verify->add_option("--p-range", p_range, "LO:HI for p")->capture_default_str();
  verify->add_option("--q-range", q_range, "LO:HI for q")->capture_default_str();
  verify->add_option("--n-max,-n", grid.n_max, "Largest index checked")->capture_default_str();
  verify->add_option("--identities", identities, "Comma-separated identity names or 'all'")
      ->capture_default_str();
  verify->add_option("--jobs,-j", jobs, "Worker threads");
  verify->add_option("--out", verify_out, "Report file (default stdout)");

  std::string table_out;
  CLI::App* emit = app.add_subcommand("emit-table", "Write the octonion multiplication table");
  emit->add_option("--out", table_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*term) return cmd_term(term_opts, term_n, term_out);
    if (*verify) {
      grid.a = horadam::IntRange::parse(a_range);
      grid.b = horadam::IntRange::parse(b_range);
      grid.p = horadam::IntRange::parse(p_range);
      grid.q = horadam::IntRange::parse(q_range);
      return cmd_verify(verify_opts, grid, identities, jobs, verify_out);
    }
    if (*emit) return cmd_emit_table(table_out);
  } catch (const horadam::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

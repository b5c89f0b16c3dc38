#include "casimir/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "casimir/casimir_poly.hpp"
#include "casimir/errors.hpp"
#include "casimir/gram.hpp"
#include "casimir/report.hpp"
#include "casimir/sweep.hpp"
#include "casimir/tensor.hpp"
#include "casimir/universal.hpp"

namespace casimir::cli {

namespace {

struct GlobalOptions {
  Format format = Format::text;
  bool decimal = false;
  std::uint64_t cap = kDefaultCap;
};

struct EigArgs {
  int n = 0;
  std::vector<Label> labels;
};

struct StableEigArgs {
  int k = 0;
  std::vector<Label> head;
  std::vector<Label> tail;
};

struct DecomposeArgs {
  int n = 0;
  int k = 0;
};

struct VerifyArgs {
  int k_max = 0;
  std::vector<int> n_values;
  Label bound = 0;
};

struct BatchArgs {
  std::string path;
  int n = 0;
};

std::string join(std::span<const Label> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string decimal_text(const Rational& value) {
  std::ostringstream out;
  out << std::setprecision(15) << value.to_double();
  return out.str();
}

int cmd_eig(const GlobalOptions& opts, const EigArgs& args, std::ostream& out) {
  const Rational value = casimir_direct(DynkinLabels(args.n, args.labels));
  switch (opts.format) {
    case Format::json: {
      Json json;
      json["n"] = args.n;
      json["labels"] = args.labels;
      json["casimir"] = value.to_string();
      if (opts.decimal) json["decimal_approx"] = decimal_text(value);
      out << json.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,labels,casimir" << (opts.decimal ? ",decimal_approx" : "") << '\n';
      out << args.n << ',' << join(args.labels) << ',' << value;
      if (opts.decimal) out << ',' << decimal_text(value);
      out << '\n';
      break;
    case Format::text:
      out << value << '\n';
      if (opts.decimal) out << "~" << decimal_text(value) << " (decimal approximation, not exact)\n";
      break;
  }
  return kSuccess;
}

int cmd_stable_eig(const GlobalOptions& opts, const StableEigArgs& args, std::ostream& out,
                   std::ostream& err) {
  if (args.head.size() != static_cast<std::size_t>(args.k) ||
      args.tail.size() != static_cast<std::size_t>(args.k)) {
    err << "error: --head and --tail need exactly k=" << args.k << " labels each\n";
    return kUsage;
  }
  const ReportRecord record = make_record(StableRep(args.head, args.tail), 1, std::nullopt);
  switch (opts.format) {
    case Format::json: {
      Json json = to_json(record);
      json.erase("mult");
      json.erase("dim");
      out << json.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << csv_header() << '\n' << to_csv(record) << '\n';
      break;
    case Format::text:
      out << to_string(record.poly) << '\n';
      out << "balanced=" << (record.balanced ? "true" : "false") << '\n';
      out << "areas=" << record.area_head << '/' << record.area_tail << '\n';
      if (record.universal) {
        out << "universal=(x=" << record.universal->x << ", y=" << record.universal->y
            << ", z=" << record.universal->z << ")\n";
      }
      break;
  }
  return kSuccess;
}

int cmd_decompose(const GlobalOptions& opts, const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err) {
  const Decomposition decomposition = ad_power_decompose(args.n, args.k, opts.cap);
  if (args.n < 2 * args.k + 1) {
    err << "error: " << StableRangeError(args.n, args.k).what() << '\n';
    return kUsage;
  }
  const VerificationReport report = verify_decomposition(decomposition, args.k);

  std::vector<ReportRecord> records;
  for (const auto& finding : report.constituents) {
    if (!finding.stable) {
      err << finding.problem << '\n';
      continue;
    }
    records.push_back(make_record(*finding.stable, finding.multiplicity, finding.dimension));
  }
  for (const auto& finding : report.constituents) {
    if (finding.stable && !finding.ok()) err << finding.problem << '\n';
  }

  const std::string checksum = to_string(report.checksum);
  const std::string expected = to_string(report.expected_checksum);
  const bool pass = report.passed();
  switch (opts.format) {
    case Format::json: {
      Json json;
      json["n"] = args.n;
      json["k"] = args.k;
      json["records"] = Json::array();
      for (const auto& r : records) json["records"].push_back(to_json(r));
      json["checksum"] = checksum;
      json["expected_checksum"] = expected;
      json["pass"] = pass;
      out << json.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << csv_header() << '\n';
      for (const auto& r : records) out << to_csv(r) << '\n';
      out << "# checksum=" << checksum << " expected=" << expected
          << " pass=" << (pass ? "true" : "false") << '\n';
      break;
    case Format::text:
      out << "su(" << args.n << ") ad^" << args.k << ": " << records.size() << " irreps\n";
      for (const auto& r : records) out << to_text(r) << '\n';
      out << "checksum=" << checksum << " expected=" << expected << ' '
          << (pass ? "PASS" : "FAIL") << '\n';
      break;
  }
  return pass ? kSuccess : kViolation;
}

int cmd_verify(const GlobalOptions& opts, const VerifyArgs& args, std::ostream& out,
               std::ostream& err) {
  if (args.k_max < 1 || args.bound < 0 || args.n_values.empty()) {
    err << "error: need --k-max >= 1, --bound >= 0 and at least one --n\n";
    return kUsage;
  }
  for (int n : args.n_values) {
    if (n < 2 * args.k_max + 1) {
      err << "error: " << StableRangeError(n, args.k_max).what() << '\n';
      return kUsage;
    }
  }

  const auto reps = enumerate_stable_reps(args.k_max, args.bound);
  const SweepSummary sweep = stable_sweep(reps, args.n_values);
  for (const auto& message : sweep.messages) err << message << '\n';

  struct PowerResult {
    int k;
    std::vector<std::pair<int, VerificationReport>> per_n;
    bool stable_across_n;
  };
  std::vector<PowerResult> powers;
  bool powers_ok = true;
  for (int k = 1; k <= args.k_max; ++k) {
    PowerResult result{k, {}, true};
    for (int n : args.n_values) {
      auto report = verify_ad_power(n, k, opts.cap);
      if (!result.per_n.empty() &&
          report.stable_content() != result.per_n.front().second.stable_content()) {
        result.stable_across_n = false;
      }
      for (const auto& c : report.constituents) {
        if (!c.ok()) err << c.problem << '\n';
      }
      powers_ok = powers_ok && report.passed();
      result.per_n.emplace_back(n, std::move(report));
    }
    powers_ok = powers_ok && result.stable_across_n;
    powers.push_back(std::move(result));
  }

  const bool pass = sweep.passed() && powers_ok;
  switch (opts.format) {
    case Format::json: {
      Json json;
      json["reps"] = sweep.reps;
      json["evaluations"] = sweep.evaluations;
      json["balanced"] = sweep.balanced;
      json["linear"] = sweep.linear;
      json["oracle_mismatches"] = sweep.oracle_mismatches;
      json["theorem_violations"] = sweep.theorem_violations;
      json["square_violations"] = sweep.square_violations;
      json["ad_powers"] = Json::array();
      for (const auto& p : powers) {
        for (const auto& [n, report] : p.per_n) {
          json["ad_powers"].push_back({{"n", n},
                                       {"k", p.k},
                                       {"irreps", report.constituents.size()},
                                       {"checksum", to_string(report.checksum)},
                                       {"pass", report.passed()},
                                       {"stable_across_n", p.stable_across_n}});
        }
      }
      json["pass"] = pass;
      out << json.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "reps,evaluations,balanced,linear,oracle_mismatches,theorem_violations,"
             "square_violations,pass\n";
      out << sweep.reps << ',' << sweep.evaluations << ',' << sweep.balanced << ','
          << sweep.linear << ',' << sweep.oracle_mismatches << ',' << sweep.theorem_violations
          << ',' << sweep.square_violations << ',' << (pass ? "true" : "false") << '\n';
      break;
    case Format::text:
      out << "stable reps: " << sweep.reps << " (k <= " << args.k_max
          << ", labels <= " << args.bound << ")\n";
      out << "closed form vs direct: " << sweep.evaluations << " evaluations, "
          << sweep.oracle_mismatches << " mismatches\n";
      out << "balanced: " << sweep.balanced << ", linear: " << sweep.linear
          << ", iff violations: " << sweep.theorem_violations << '\n';
      out << "perfect-square violations: " << sweep.square_violations << '\n';
      for (const auto& p : powers) {
        out << "ad^" << p.k << ':';
        for (const auto& [n, report] : p.per_n) {
          out << " n=" << n << ' ' << (report.passed() ? "PASS" : "FAIL") << " ("
              << report.constituents.size() << " irreps)";
        }
        out << (p.stable_across_n ? ", stable across n" : ", NOT stable across n") << '\n';
      }
      out << (pass ? "PASS" : "FAIL") << " (" << sweep.reps << " reps checked)\n";
      break;
  }
  return pass ? kSuccess : kViolation;
}

int cmd_batch(const GlobalOptions& opts, const BatchArgs& args, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(args.path);
  if (!in) {
    err << "error: cannot read '" << args.path << "'\n";
    return kUsage;
  }
  if (opts.format == Format::csv) out << csv_header() << '\n';
  bool failed = false;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    try {
      const auto rep = parse_batch_line(line);
      if (!rep) continue;
      const StableRep canonical = rep->canonical();
      std::optional<BigInt> dim;
      if (args.n != 0) dim = dimension(realize(canonical, args.n));
      const ReportRecord record = make_record(canonical, 1, std::move(dim));
      switch (opts.format) {
        case Format::json: out << to_json(record).dump() << '\n'; break;
        case Format::csv: out << to_csv(record) << '\n'; break;
        case Format::text: out << to_text(record) << '\n'; break;
      }
    } catch (const Error& e) {
      err << args.path << ":" << line_no << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? kUsage : kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Casimir eigenvalues of su(N) irreps and stable sequences", "casimir"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--decimal", opts.decimal, "Also print a decimal approximation (eig)");
  app.add_option("--cap", opts.cap, "Maximum constituents (with multiplicity) per decomposition")
      ->check(CLI::PositiveNumber);

  EigArgs eig;
  auto* eig_cmd = app.add_subcommand("eig", "Casimir eigenvalue of concrete Dynkin labels");
  eig_cmd->add_option("--n", eig.n, "N of su(N)")->required()->check(CLI::Range(2, 1 << 20));
  eig_cmd->add_option("labels", eig.labels, "Dynkin labels lambda_1 .. lambda_{N-1}")->required();

  StableEigArgs stable;
  auto* stable_cmd =
      app.add_subcommand("stable-eig", "Closed-form Casimir polynomial of a stable rep");
  stable_cmd->add_option("--k", stable.k, "Block width")->required()->check(CLI::PositiveNumber);
  stable_cmd->add_option("--head", stable.head, "lambda_1 .. lambda_k")->required();
  stable_cmd->add_option("--tail", stable.tail, "lambda_{N-1} .. lambda_{N-k}")->required();

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose ad^k of su(N)");
  decompose_cmd->add_option("--n", decompose.n, "N of su(N)")->required()->check(CLI::Range(2, 1 << 20));
  decompose_cmd->add_option("--k", decompose.k, "Tensor power")->required()->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive theorem and decomposition checks");
  verify_cmd->add_option("--k-max", verify.k_max, "Largest block width")->required();
  verify_cmd->add_option("--n", verify.n_values, "N values to test")->required();
  verify_cmd->add_option("--bound", verify.bound, "Largest label value")->required();

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Evaluate stable reps listed in a file");
  batch_cmd->add_option("input", batch.path, "Lines of the form 'k | head / tail'")->required();
  batch_cmd->add_option("--n", batch.n, "Also report the dimension at su(N)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eig_cmd) return cmd_eig(opts, eig, out);
    if (*stable_cmd) return cmd_stable_eig(opts, stable, out, err);
    if (*decompose_cmd) return cmd_decompose(opts, decompose, out, err);
    if (*verify_cmd) return cmd_verify(opts, verify, out, err);
    if (*batch_cmd) return cmd_batch(opts, batch, out, err);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace casimir::cli

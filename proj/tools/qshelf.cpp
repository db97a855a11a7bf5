#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qshelf/errors.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/suite.hpp"

namespace {

constexpr int kUsageExit = 2;

int run_verify(const qshelf::SuiteConfig& config) {
  const auto report = qshelf::run_suite(config);
  std::cout << (config.format == qshelf::ReportFormat::json ? qshelf::render_json(report)
                                                            : qshelf::render_text(report));
  return report.exit_code();
}

void print_partitions(const qshelf::PartitionConstraint& c, int n) {
  qshelf::for_each_partition(c, n, [](const qshelf::Partition& p) {
    for (std::size_t t = 0; t < p.size(); ++t) std::cout << (t ? "," : "") << p[t];
    std::cout << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of shelf q-series identities"};
  app.require_subcommand(1);

  qshelf::SuiteConfig config;
  try {
    config = qshelf::default_config();
  } catch (const qshelf::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  }
  std::string suite = "all";
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a report");
  verify->add_option("--suite", suite, "gga | gordon | xq | matrices | partitions | all")
      ->capture_default_str();
  verify->add_option("--k-min", config.k_min)->capture_default_str();
  verify->add_option("--k-max", config.k_max)->capture_default_str();
  verify->add_option("--order", config.order, "Truncation order N")->capture_default_str();
  verify->add_option("--j-max", config.j_max)->capture_default_str();
  verify->add_option("--big-j", config.J_values, "Comma-separated J values")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--format", format, "text | json")->capture_default_str();
  verify->add_option("--parallelism", config.parallelism)->capture_default_str();
  verify->add_flag("--inject-fault", config.inject_fault)->group("");
  verify->add_flag("--inject-error", config.inject_error)->group("");

  qshelf::SeriesRequest request;
  request.order = config.order;
  std::string family = "gga";
  auto* series = app.add_subcommand("series", "Print the text dump of one series");
  series
      ->add_option("--what", request.what,
                   "product | altsum | closed-form | h1-infinity | genfun | h-poly")
      ->required();
  series->add_option("--family", family, "gga | gordon")->capture_default_str();
  series->add_option("--k", request.k)->capture_default_str();
  series->add_option("--i", request.i)->capture_default_str();
  series->add_option("--j", request.j)->capture_default_str();
  series->add_option("--big-j", request.J)->capture_default_str();
  series->add_option("--l", request.l)->capture_default_str();
  series->add_option("--order", request.order)->capture_default_str();

  qshelf::PartitionConstraint constraint;
  std::string part_family = "gga";
  int n = 0;
  int max_part = -1;
  std::vector<int> multiplicity;
  auto* partitions = app.add_subcommand("partitions", "List constrained partitions of n");
  partitions->add_option("--family", part_family, "gga | gordon")->capture_default_str();
  partitions->add_option("--k", constraint.k)->capture_default_str();
  partitions->add_option("--i", constraint.i)->capture_default_str();
  partitions->add_option("--big-j", constraint.J)->capture_default_str();
  partitions->add_option("--n", n)->required();
  partitions->add_option("--max-part", max_part);
  partitions->add_option("--multiplicity", multiplicity, "PART,COUNT")
      ->delimiter(',')
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (*verify) {
      config.suite = qshelf::parse_suite(suite);
      config.format = qshelf::parse_format(format);
      return run_verify(config);
    }
    if (*series) {
      request.family = qshelf::parse_family(family);
      std::cout << qshelf::emit_series(request);
      return 0;
    }
    constraint.family = qshelf::parse_family(part_family);
    if (max_part >= 0) constraint.max_part = max_part;
    if (!multiplicity.empty()) constraint.exact_multiplicity = {multiplicity[0], multiplicity[1]};
    if (n < 0) throw qshelf::UsageError("n must be nonnegative");
    try {
      constraint.validate();
    } catch (const std::invalid_argument& e) {
      throw qshelf::UsageError(e.what());
    }
    print_partitions(constraint, n);
    return 0;
  } catch (const qshelf::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

#include "qshelf/suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qshelf/errors.hpp"
#include "qshelf/gordon.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/transfer.hpp"
#include "qshelf/xq.hpp"

namespace qshelf {

std::string_view to_string(SuiteName s) {
  switch (s) {
    case SuiteName::gga: return "gga";
    case SuiteName::gordon: return "gordon";
    case SuiteName::xq: return "xq";
    case SuiteName::matrices: return "matrices";
    case SuiteName::partitions: return "partitions";
    case SuiteName::all: return "all";
  }
  return "?";
}

std::string_view to_string(ReportFormat f) { return f == ReportFormat::json ? "json" : "text"; }

SuiteName parse_suite(std::string_view name) {
  for (auto s : {SuiteName::gga, SuiteName::gordon, SuiteName::xq, SuiteName::matrices,
                 SuiteName::partitions, SuiteName::all}) {
    if (to_string(s) == name) return s;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

ReportFormat parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

void SuiteConfig::validate() const {
  if (k_min < 2 || k_min > k_max) throw UsageError("need 2 <= k-min <= k-max");
  if (order < 1) throw UsageError("order must be at least 1");
  if (j_max < 0) throw UsageError("j-max must be nonnegative");
  if (parallelism < 1) throw UsageError("parallelism must be at least 1");
  for (int J : J_values) {
    if (J < 0) throw UsageError("J values must be nonnegative");
  }
}

SuiteConfig default_config() {
  SuiteConfig config;
  if (const char* env = std::getenv("QSHELF_ORDER"); env && *env) {
    const std::string_view text(env);
    Exponent value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw UsageError("QSHELF_ORDER is not an integer: '" + std::string(text) + "'");
    }
    config.order = value;
  }
  return config;
}

namespace {

struct Task {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::function<CheckResult()> run;
};

class Grid {
 public:
  Task& add(std::string id, std::function<CheckResult()> run) {
    tasks_.push_back({std::move(id), {}, std::move(run)});
    return tasks_.back();
  }
  std::vector<Task>& tasks() { return tasks_; }

 private:
  std::vector<Task> tasks_;
};

Task& with(Task& t, std::string key, long long value) {
  t.params.emplace_back(std::move(key), std::to_string(value));
  return t;
}

Task& with(Task& t, std::string key, Family family) {
  t.params.emplace_back(std::move(key), std::string(to_string(family)));
  return t;
}

constexpr Family kFamilies[] = {Family::gga, Family::gordon};

CheckResult shelves_vs_closed_form(int k, int j_max, Exponent N, bool inject_fault) {
  auto shelves = gga_shelves(k, j_max, N);
  if (inject_fault && shelves.size() > 1) {
    Series& victim = shelves[1].at(1);
    victim = victim + Series::monomial(1, N).truncated(victim.precision());
  }
  for (const auto& shelf : shelves) {
    for (int i = 1; i <= k; ++i) {
      CheckResult r = prefix_eq(shelf.at(i), gga_closed_form({k, shelf.j, i}, N), N + 1);
      if (!r.passed()) {
        r.message = "G_" + std::to_string(ShelfIndex{k, shelf.j, i}.linear()) +
                    ": recursion vs closed form, " + r.message;
        return r;
      }
    }
  }
  return pass_result();
}

void add_gga(Grid& g, const SuiteConfig& c) {
  const Exponent N = c.order;
  for (int k = c.k_min; k <= c.k_max; ++k) {
    for (int i = 1; i <= k; ++i) {
      with(with(g.add("gga.jtp", [=] { return jtp_check(k, i, N); }), "k", k), "i", i);
      with(with(g.add("gga.shelf0_altsum",
                      [=] {
                        return prefix_eq(gga_shelf0_altsum(k, i, N),
                                         congruence_product(gga_product_spec(k, i), N), N + 1);
                      }),
                "k", k),
           "i", i);
    }
    with(with(g.add("gga.closed_form_vs_recursion",
                    [=, fault = c.inject_fault] {
                      return shelves_vs_closed_form(k, c.j_max, N, fault);
                    }),
              "k", k),
         "j_max", c.j_max);
    for (int j = 0; j <= c.j_max; ++j) {
      with(with(g.add("gga.edge_match", [=] { return edge_match_check(k, j, N); }), "k", k), "j",
           j);
    }
    // The residual exponent 2j+3 has to fit in the window.
    const Exponent eh_order = std::max<Exponent>(N, 2 * c.j_max + 3);
    with(with(g.add("gga.strong_eh",
                    [=] {
                      return strong_eh_check(Family::gga, gga_shelves(k, c.j_max, eh_order));
                    }),
              "k", k),
         "j_max", c.j_max);
    with(with(g.add("gga.weak_eh",
                    [=] { return weak_eh_check(gga_shelves(k, c.j_max, eh_order)); }),
              "k", k),
         "j_max", c.j_max);
  }
  if (c.inject_error) {
    g.add("gga.error_probe", []() -> CheckResult { throw QSeriesError("injected error"); });
  }
}

void add_matrices(Grid& g, const SuiteConfig& c) {
  const Exponent N = c.order;
  for (Family f : kFamilies) {
    for (int k = c.k_min; k <= c.k_max; ++k) {
      for (int j = 1; j <= c.j_max; ++j) {
        with(with(with(g.add("matrices.inverse", [=] { return inverse_check(f, j, k); }),
                       "family", f),
                  "k", k),
             "j", j);
        with(with(with(g.add("matrices.recursion",
                             [=] { return matrix_recursion_check(f, k, j, N); }),
                       "family", f),
                  "k", k),
             "j", j);
      }
      for (int J : c.J_values) {
        if (J < c.j_max) {
          with(with(with(g.add("matrices.h_routes",
                               [=] { return h_routes_check(f, J, c.j_max, k); }),
                         "family", f),
                    "k", k),
               "J", J);
        }
        for (int i = 1; i <= k; ++i) {
          if (J <= c.j_max) {
            with(with(with(with(g.add("matrices.decomposition",
                                      [=] {
                                        return decomposition_check(f, J, i, c.j_max, k, N);
                                      }),
                                "family", f),
                           "k", k),
                      "J", J),
                 "i", i);
          }
          with(with(with(with(g.add("matrices.g_equals_hinf",
                                    [=] { return g_equals_hinf_check(J, i, k, f, N); }),
                              "family", f),
                         "k", k),
                    "J", J),
               "i", i);
        }
      }
    }
  }
  for (int k = c.k_min; k <= c.k_max; ++k) {
    with(g.add("matrices.unique_denominator", [=] { return unique_denominator_check(k, N); }),
         "k", k);
  }
}

// Exponent window for brute-force checks whose cost grows with the number of
// partitions of n.
Exponent oracle_order(Exponent N) { return std::min<Exponent>(N, 40); }

void add_h_oracle(Grid& g, const SuiteConfig& c, Family f, const std::string& id) {
  const Exponent N = oracle_order(c.order);
  for (int k = c.k_min; k <= c.k_max; ++k) {
    for (int J : c.J_values) {
      for (int j = J + 1; j <= J + 4; ++j) {
        for (int i = 1; i <= k; ++i) {
          for (int l = 1; l <= k; ++l) {
            Task& t = g.add(id, [=] { return h_oracle_check(J, i, j, l, k, f, N); });
            with(with(with(with(with(t, "k", k), "J", J), "j", j), "i", i), "l", l);
          }
        }
      }
    }
  }
}

void add_partitions(Grid& g, const SuiteConfig& c) {
  const Exponent N = c.order;
  for (int k = c.k_min; k <= c.k_max; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int J : c.J_values) {
        with(with(with(g.add("partitions.gga_identity",
                             [=] { return partition_identity_check(Family::gga, k, i, J, N); }),
                       "k", k),
                  "i", i),
             "J", J);
        for (Family f : kFamilies) {
          PartitionConstraint pc;
          pc.family = f;
          pc.k = k;
          pc.i = i;
          pc.J = J;
          const int n_max = static_cast<int>(std::min<Exponent>(N, 24));
          with(with(with(with(g.add("partitions.soundness",
                                    [=] { return enumeration_soundness_check(pc, n_max); }),
                              "family", f),
                         "k", k),
                    "i", i),
               "J", J);
        }
      }
    }
  }
  add_h_oracle(g, c, Family::gga, "partitions.gga_h_oracle");
}

void add_gordon(Grid& g, const SuiteConfig& c) {
  const Exponent N = c.order;
  for (int k = c.k_min; k <= c.k_max; ++k) {
    for (int i = 1; i <= k; ++i) {
      with(with(g.add("gordon.shelf0", [=] { return gordon_shelf0_check(k, i, N); }), "k", k),
           "i", i);
      for (int J : c.J_values) {
        with(with(with(g.add("gordon.identity",
                             [=] {
                               return partition_identity_check(Family::gordon, k, i, J, N);
                             }),
                       "k", k),
                  "i", i),
             "J", J);
      }
    }
    with(with(g.add("gordon.closed_form_vs_recursion",
                    [=] { return gordon_recursion_vs_closed_form_check(k, c.j_max, N); }),
              "k", k),
         "j_max", c.j_max);
    for (int j = 0; j <= c.j_max; ++j) {
      for (int i = 1; i <= k; ++i) {
        with(with(with(g.add("gordon.eh", [=] { return gordon_eh_check({k, j, i}, N); }), "k",
                       k),
                  "j", j),
             "i", i);
      }
    }
    with(with(g.add("gordon.ehrenpreis", [=] { return ehrenpreis_check(k, N, c.j_max); }), "k",
              k),
         "j_max", c.j_max);
    const Exponent M = oracle_order(N);
    for (int J : c.J_values) {
      for (int j = J + 1; j <= J + 2; ++j) {
        for (int i = 1; i <= k; ++i) {
          for (int l = 1; l <= k; ++l) {
            Task& t = g.add("gordon.multiplicity",
                            [=] { return multiplicity_decomposition_check(J, i, j, l, k, M); });
            with(with(with(with(with(t, "k", k), "J", J), "j", j), "i", i), "l", l);
          }
        }
      }
    }
  }
  add_h_oracle(g, c, Family::gordon, "gordon.h_oracle");
}

void add_xq(Grid& g, const SuiteConfig& c) {
  const Exponent N = c.order;
  for (Family f : kFamilies) {
    for (int k = c.k_min; k <= c.k_max; ++k) {
      for (int j = 0; j <= c.j_max; ++j) {
        for (int i = 1; i <= k; ++i) {
          with(with(with(with(g.add("xq.dictionary",
                                    [=] { return dictionary_check(f, k, j, i, N); }),
                              "family", f),
                         "k", k),
                    "j", j),
               "i", i);
          if (f == Family::gordon || i >= 2) {
            with(with(with(with(g.add("xq.lemma72",
                                      [=] { return lemma72_specialized_check(f, k, j, i, N); }),
                                "family", f),
                           "k", k),
                      "j", j),
                 "i", i);
          }
        }
        with(with(with(g.add("xq.edge", [=] { return xq_edge_check(f, k, j, N); }), "family", f),
                  "k", k),
             "j", j);
        if (f == Family::gordon) {
          with(with(g.add("xq.jk0", [=] { return gordon_jk0_check(k, j, N); }), "k", k), "j", j);
        }
      }
    }
  }
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

bool value_less(const std::string& a, const std::string& b) {
  if (is_number(a) && is_number(b) && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool result_less(const CheckResult& a, const CheckResult& b) {
  if (a.id != b.id) return a.id < b.id;
  return std::lexicographical_compare(
      a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return value_less(x.second, y.second);
      });
}

CheckResult execute(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = task.run();
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.status = Status::error;
    r.message = e.what();
  }
  r.id = task.id;
  r.params = task.params;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
  config.validate();
  Grid grid;
  const auto wants = [&](SuiteName s) { return config.suite == SuiteName::all || config.suite == s; };
  if (wants(SuiteName::gga)) add_gga(grid, config);
  if (wants(SuiteName::matrices)) add_matrices(grid, config);
  if (wants(SuiteName::partitions)) add_partitions(grid, config);
  if (wants(SuiteName::gordon)) add_gordon(grid, config);
  if (wants(SuiteName::xq)) add_xq(grid, config);

  const auto& tasks = grid.tasks();
  Report report;
  report.config = config;
  report.results.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) report.results[t] = execute(tasks[t]);
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(config.parallelism),
                                             std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::stable_sort(report.results.begin(), report.results.end(), result_less);
  for (const auto& r : report.results) ++report.summary[static_cast<std::size_t>(r.status)];
  return report;
}

std::string render_json(const Report& report) {
  using nlohmann::ordered_json;
  const auto& c = report.config;
  ordered_json config = {{"suite", to_string(c.suite)},
                         {"k_min", c.k_min},
                         {"k_max", c.k_max},
                         {"order", c.order},
                         {"j_max", c.j_max},
                         {"J_values", c.J_values},
                         {"format", to_string(c.format)},
                         {"parallelism", c.parallelism}};
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    ordered_json entry = {{"id", r.id}, {"params", params}, {"status", to_string(r.status)}};
    if (r.first_discrepancy) {
      entry["first_discrepancy"] = {{"exponent", r.first_discrepancy->exponent},
                                    {"lhs", r.first_discrepancy->lhs.get_str()},
                                    {"rhs", r.first_discrepancy->rhs.get_str()}};
    } else {
      entry["first_discrepancy"] = nullptr;
    }
    results.push_back(std::move(entry));
  }
  ordered_json out = {{"config", config},
                      {"results", results},
                      {"summary",
                       {{"pass", report.summary[0]},
                        {"fail", report.summary[1]},
                        {"error", report.summary[2]}}}};
  return out.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR ")
        << r.id;
    for (const auto& [key, value] : r.params) out << ' ' << key << '=' << value;
    if (r.first_discrepancy) {
      out << "  [q^" << r.first_discrepancy->exponent << ": " << r.first_discrepancy->lhs
          << " vs " << r.first_discrepancy->rhs << ']';
    }
    if (!r.passed() && !r.message.empty()) out << "  " << r.message;
    out << '\n';
  }
  out << "pass=" << report.summary[0] << " fail=" << report.summary[1]
      << " error=" << report.summary[2] << '\n';
  return out.str();
}

std::string emit_series(const SeriesRequest& q) {
  const Exponent N = q.order;
  if (N < 0) throw UsageError("order must be nonnegative");
  const bool gga = q.family == Family::gga;
  if (q.what == "product") {
    return dump(congruence_product(gga ? gga_product_spec(q.k, q.i) : gordon_product_spec(q.k, q.i), N));
  }
  if (q.what == "altsum") {
    return dump(gga ? gga_shelf0_altsum(q.k, q.i, N) : gordon_shelf0_first_form(q.k, q.i, N));
  }
  if (q.what == "closed-form") return dump(family_closed_form(q.family, {q.k, q.j, q.i}, N));
  if (q.what == "h1-infinity") return dump(h_infinity(q.J, q.i, q.k, q.family, N));
  if (q.what == "genfun") {
    PartitionConstraint c;
    c.family = q.family;
    c.k = q.k;
    c.i = q.i;
    c.J = q.J;
    return dump(genfun(c, N));
  }
  if (q.what == "h-poly") {
    if (q.j < q.J) throw UsageError("h-poly needs j >= J");
    HState state = h_initial(q.J, q.k);
    while (state.j < q.j) state = h_step(state, q.family);
    std::string out;
    for (int r = 1; r <= q.k; ++r) {
      for (int l = 1; l <= q.k; ++l) {
        out += "# entry i=" + std::to_string(r) + " l=" + std::to_string(l) + "\n";
        out += dump(state.matrix.at(r, l));
      }
    }
    return out;
  }
  throw UsageError("unknown object '" + q.what + "'");
}

}  // namespace qshelf

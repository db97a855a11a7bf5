// Acceptance run: one PASS/FAIL line per criterion, exact integer equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qshelf/gordon.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/transfer.hpp"
#include "qshelf/xq.hpp"

using namespace qshelf;

namespace {

constexpr Family kBoth[] = {Family::gga, Family::gordon};

class Criterion {
 public:
  explicit Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  /// Runs one check; the first failure (or exception) is kept for the report.
  void check(const std::string& what, const std::function<CheckResult()>& run) {
    ++count_;
    if (!failure_.empty()) return;
    try {
      const CheckResult r = run();
      if (!r.passed()) {
        failure_ = what + ": " + r.message;
        if (r.first_discrepancy) {
          failure_ += " (q^" + std::to_string(r.first_discrepancy->exponent) + ": " +
                      r.first_discrepancy->lhs.get_str() + " vs " +
                      r.first_discrepancy->rhs.get_str() + ")";
        }
      }
    } catch (const std::exception& e) {
      failure_ = what + ": " + e.what();
    }
  }

  bool report(std::chrono::steady_clock::duration elapsed) const {
    const double seconds = std::chrono::duration<double>(elapsed).count();
    std::printf("%s  AC%-2d %s  [%d checks, %.1fs]\n", failure_.empty() ? "PASS" : "FAIL", number_,
                title_.c_str(), count_, seconds);
    if (!failure_.empty()) std::printf("      first failure: %s\n", failure_.c_str());
    std::fflush(stdout);
    return failure_.empty();
  }

 private:
  int number_;
  std::string title_;
  int count_ = 0;
  std::string failure_;
};

std::string tag(std::initializer_list<std::pair<const char*, long long>> params) {
  std::string out;
  for (const auto& [key, value] : params) {
    out += (out.empty() ? "" : " ") + std::string(key) + "=" + std::to_string(value);
  }
  return out;
}

void ac1(Criterion& c) {
  constexpr int N = 60;
  // d_{k,i}(n) straight from the definition, over every partition of n.
  std::vector<oracle::Coeffs> counts(6 * 6, oracle::Coeffs(N + 1, 0));
  for (int n = 0; n <= N; ++n) {
    for (const auto& b : oracle::partitions_of(n)) {
      for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k; ++i) {
          if (oracle::gga_admissible(b, k, i, 0)) ++counts[6 * k + i][n];
        }
      }
    }
  }
  for (int k = 2; k <= 5; ++k) {
    for (int i = 1; i <= k; ++i) {
      c.check(tag({{"k", k}, {"i", i}}),
              [=] { return partition_identity_check(Family::gga, k, i, 0, N); });
      c.check("definitional count " + tag({{"k", k}, {"i", i}}), [&, k, i] {
        std::vector<mpz_class> d;
        for (auto x : counts[6 * k + i]) d.emplace_back(static_cast<long>(x));
        return prefix_eq(congruence_product(gga_product_spec(k, i), N),
                         Series::from_coeffs(0, std::move(d), N + 1), N + 1);
      });
    }
  }
}

void ac2(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    c.check(tag({{"k", k}}), [=] {
      // gga_shelves runs assert_ordinary on every divided entry.
      const auto shelves = gga_shelves(k, 6, 60);
      return shelves.size() == 7 ? pass_result() : fail_result(0, 0, 0, "missing shelves");
    });
    c.check(tag({{"k", k}}), [=] { return recursion_vs_closed_form_check(k, 6, 60); });
  }
}

void ac3(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    for (int j = 0; j <= 6; ++j) {
      c.check(tag({{"k", k}, {"j", j}}), [=] { return edge_match_check(k, j, 60); });
    }
  }
}

void ac4(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    c.check(tag({{"k", k}}), [=] { return strong_eh_check(Family::gga, gga_shelves(k, 6, 60)); });
  }
}

void ac5(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    for (int j = 1; j <= 6; ++j) {
      c.check("inverse " + tag({{"k", k}, {"j", j}}), [=] { return inverse_check(Family::gga, j, k); });
      c.check("recursion " + tag({{"k", k}, {"j", j}}),
              [=] { return matrix_recursion_check(Family::gga, k, j, 60); });
    }
    for (int J = 0; J <= 3; ++J) {
      c.check("h routes " + tag({{"k", k}, {"J", J}}),
              [=] { return h_routes_check(Family::gga, J, 6, k); });
      for (int i = 1; i <= k; ++i) {
        c.check("decomposition " + tag({{"k", k}, {"J", J}, {"i", i}}),
                [=] { return decomposition_check(Family::gga, J, i, 6, k, 60); });
      }
    }
  }
}

void ac6(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    for (int J = 0; J <= 3; ++J) {
      for (int i = 1; i <= k; ++i) {
        c.check(tag({{"k", k}, {"J", J}, {"i", i}}),
                [=] { return g_equals_hinf_check(J, i, k, Family::gga, 60); });
      }
    }
  }
}

void ac7(Criterion& c) {
  for (int k = 2; k <= 3; ++k) {
    for (int J = 0; J <= 2; ++J) {
      for (int j = J + 1; j <= J + 4; ++j) {
        for (int i = 1; i <= k; ++i) {
          for (int l = 1; l <= k; ++l) {
            c.check(tag({{"k", k}, {"J", J}, {"j", j}, {"i", i}, {"l", l}}),
                    [=] { return h_oracle_check(J, i, j, l, k, Family::gga, 40); });
          }
        }
      }
    }
  }
}

void ac8(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i) {
      c.check("shelf 0 " + tag({{"k", k}, {"i", i}}), [=] { return gordon_shelf0_check(k, i, 100); });
    }
    c.check("closed form " + tag({{"k", k}}),
            [=] { return gordon_recursion_vs_closed_form_check(k, 6, 100); });
    for (int j = 0; j <= 6; ++j) {
      for (int i = 1; i <= k; ++i) {
        c.check("EH " + tag({{"k", k}, {"j", j}, {"i", i}}),
                [=] { return gordon_eh_check({k, j, i}, 100); });
      }
    }
    c.check("Ehrenpreis " + tag({{"k", k}}), [=] { return ehrenpreis_check(k, 100, 6); });
    for (int J = 0; J <= 3; ++J) {
      for (int i = 1; i <= k; ++i) {
        c.check("identity " + tag({{"k", k}, {"J", J}, {"i", i}}),
                [=] { return partition_identity_check(Family::gordon, k, i, J, 60); });
        c.check("G = h inf " + tag({{"k", k}, {"J", J}, {"i", i}}),
                [=] { return g_equals_hinf_check(J, i, k, Family::gordon, 60); });
      }
      for (int j = J + 1; j <= 6; ++j) {
        for (int i = 1; i <= k; ++i) {
          for (int l = 1; l <= k; ++l) {
            const auto where = tag({{"k", k}, {"J", J}, {"j", j}, {"i", i}, {"l", l}});
            c.check("h oracle " + where,
                    [=] { return h_oracle_check(J, i, j, l, k, Family::gordon, 60); });
            c.check("multiplicity " + where,
                    [=] { return multiplicity_decomposition_check(J, i, j, l, k, 60); });
          }
        }
      }
    }
  }
}

void ac9(Criterion& c) {
  for (Family f : kBoth) {
    const std::string name(to_string(f));
    for (int k = 2; k <= 4; ++k) {
      for (int j = 0; j <= 4; ++j) {
        const auto where = name + " " + tag({{"k", k}, {"j", j}});
        for (int i = 1; i <= k; ++i) {
          c.check("dictionary " + where + tag({{" i", i}}),
                  [=] { return dictionary_check(f, k, j, i, 60); });
          if (f == Family::gordon || i >= 2) {
            c.check("shelf recursion " + where + tag({{" i", i}}),
                    [=] { return lemma72_specialized_check(f, k, j, i, 60); });
          }
        }
        c.check("edge " + where, [=] { return xq_edge_check(f, k, j, 60); });
        if (f == Family::gordon) c.check("J_k0 " + where, [=] { return gordon_jk0_check(k, j, 60); });
      }
    }
  }
}

void ac10(Criterion& c) {
  for (int k : {2, 4}) c.check(tag({{"k", k}}), [=] { return unique_denominator_check(k, 30); });
}

Series random_series(std::mt19937_64& rng, bool unit) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Exponent v = pick(-4, 8);
  const int len = pick(1, 12);
  std::vector<mpz_class> cs;
  for (int t = 0; t < len; ++t) cs.emplace_back(pick(-30, 30));
  if (unit) cs[0] = pick(0, 1) ? 1 : -1;
  const Exponent p = std::max<Exponent>(v + len, pick(static_cast<int>(v) + 1, 40));
  return Series::from_coeffs(v, std::move(cs), p);
}

CheckResult same_window(const Series& a, const Series& b) {
  return prefix_eq(a, b, std::min(a.precision(), b.precision()));
}

void ac11(Criterion& c) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const Series a = random_series(rng, false);
    const Series b = random_series(rng, false);
    const Series d = random_series(rng, false);
    const Series u = random_series(rng, true);
    const auto where = tag({{"case", n}});
    c.check("commutativity " + where, [&] {
      CheckResult r = same_window(a + b, b + a);
      merge(r, same_window(a * b, b * a));
      return r;
    });
    c.check("associativity " + where, [&] {
      CheckResult r = same_window((a + b) + d, a + (b + d));
      merge(r, same_window((a * b) * d, a * (b * d)));
      return r;
    });
    c.check("distributivity " + where, [&] { return same_window(a * (b + d), a * b + a * d); });
    c.check("inversion " + where, [&] {
      const Series product = u * invert_unit(u, 41);
      CheckResult r = prefix_eq(product, Series::one(), product.precision());
      merge(r, same_window(invert_unit(invert_unit(u, 41), 41), u));
      return r;
    });
  }
  for (Family f : kBoth) {
    for (int k = 2; k <= 4; ++k) {
      for (int i = 1; i <= k; ++i) {
        for (int J = 0; J <= 2; ++J) {
          PartitionConstraint pc;
          pc.family = f;
          pc.k = k;
          pc.i = i;
          pc.J = J;
          c.check("soundness " + tag({{"k", k}, {"i", i}, {"J", J}}),
                  [=] { return enumeration_soundness_check(pc, 22); });
        }
      }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    void (*run)(Criterion&);
  };
  const Entry criteria[] = {
      {1, "G-G-A identities: congruence products = brute-force d_{k,i}(n), k 2..5, n <= 60", ac1},
      {2, "closed form = recursion shelves, k 2..4, j <= 6, order 60, exact divisions", ac2},
      {3, "edge matching, k 2..4, j <= 6, order 60", ac3},
      {4, "strong Empirical Hypothesis, k 2..4, j <= 6, order 60", ac4},
      {5, "matrix layer: AB = I, CG = BG, h routes, h >= 0, decomposition, j <= 6, order 60", ac5},
      {6, "G = h^(inf), J 0..3, k 2..4, order 60", ac6},
      {7, "h-oracle, J <= 2, j <= J+4, k 2..3, order 40", ac7},
      {8, "Gordon suite, k 2..4, j <= 6, J <= 3, order 60, Ehrenpreis order 100", ac8},
      {9, "xq dictionaries, shelf recursions, J_k0 = 0, edges, k 2..4, j <= 4, order 60", ac9},
      {10, "unique denominator F(q), k in {2,4}, order 30", ac10},
      {11, "properties: 500 random ring/inversion cases, enumerator soundness", ac11},
  };
  bool all = true;
  for (const auto& entry : criteria) {
    Criterion c(entry.number, entry.title);
    const auto start = std::chrono::steady_clock::now();
    entry.run(c);
    all = c.report(std::chrono::steady_clock::now() - start) && all;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}

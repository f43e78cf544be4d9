#include "polyscheme/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "polyscheme/errors.hpp"

namespace polyscheme {

namespace {

constexpr double kPi = 3.14159265358979323846;

AngleList rationals(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<Angle> a;
  a.reserve(fractions.size());
  for (const auto& [p, q] : fractions) a.push_back(Angle::rational(p, q));
  return validate(a);
}

std::vector<TableRow> build_table() {
  std::vector<TableRow> t;
  auto row = [&](int id, Verdict s, std::initializer_list<std::pair<int, int>> fr) {
    AngleList a = rationals(fr);
    const int n = a.dimension();
    t.push_back(TableRow{id, std::move(a), s, n});
  };
  const Verdict M = Verdict::Manifold, O = Verdict::Orbifold, C = Verdict::ConeManifold;
  // Dimension 5
  row(3, C, {{1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  // Dimension 4
  row(4, C, {{1, 2}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  // Dimension 3
  row(1, M, {{1, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}});
  row(5, C, {{3, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  row(6, C, {{1, 2}, {1, 2}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  row(39, C, {{1, 2}, {1, 6}, {1, 3}, {1, 3}, {1, 3}, {1, 3}});
  row(44, C, {{1, 8}, {3, 8}, {3, 8}, {3, 8}, {3, 8}, {3, 8}});
  row(66, C, {{7, 12}, {5, 12}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  row(67, C, {{5, 12}, {5, 12}, {5, 12}, {1, 4}, {1, 4}, {1, 4}});
  // Dimension 2
  row(2, M, {{2, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}});
  row(7, C, {{1, 2}, {3, 4}, {1, 4}, {1, 4}, {1, 4}});
  row(8, M, {{1, 2}, {1, 2}, {1, 2}, {1, 4}, {1, 4}});
  row(9, M, {{2, 5}, {2, 5}, {2, 5}, {2, 5}, {2, 5}});
  row(40, C, {{5, 6}, {1, 6}, {1, 3}, {1, 3}, {1, 3}});
  row(41, C, {{2, 3}, {1, 3}, {1, 3}, {1, 2}, {1, 6}});
  row(42, M, {{1, 2}, {1, 2}, {1, 2}, {1, 3}, {1, 6}});
  row(43, M, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 3}});
  row(45, C, {{3, 4}, {1, 8}, {3, 8}, {3, 8}, {3, 8}});
  row(46, C, {{5, 8}, {5, 8}, {1, 4}, {1, 4}, {1, 4}});
  row(47, M, {{1, 2}, {3, 8}, {3, 8}, {3, 8}, {3, 8}});
  row(48, M, {{2, 9}, {4, 9}, {4, 9}, {4, 9}, {4, 9}});
  row(49, C, {{1, 10}, {7, 10}, {2, 5}, {2, 5}, {2, 5}});
  row(57, C, {{2, 3}, {1, 12}, {5, 12}, {5, 12}, {5, 12}});
  row(65, C, {{7, 12}, {7, 12}, {1, 6}, {1, 3}, {1, 3}});
  row(68, C, {{5, 6}, {5, 12}, {1, 4}, {1, 4}, {1, 4}});
  row(69, C, {{2, 3}, {7, 12}, {1, 4}, {1, 4}, {1, 4}});
  row(70, O, {{2, 3}, {5, 12}, {5, 12}, {1, 4}, {1, 4}});
  row(71, O, {{7, 12}, {5, 12}, {1, 2}, {1, 4}, {1, 4}});
  row(72, M, {{1, 2}, {1, 4}, {5, 12}, {5, 12}, {5, 12}});
  row(73, M, {{7, 12}, {5, 12}, {1, 3}, {1, 3}, {1, 3}});
  row(74, M, {{1, 2}, {1, 3}, {1, 3}, {5, 12}, {5, 12}});
  row(75, M, {{1, 3}, {5, 12}, {5, 12}, {5, 12}, {5, 12}});
  row(78, M, {{4, 15}, {8, 15}, {2, 5}, {2, 5}, {2, 5}});
  row(79, C, {{1, 18}, {11, 18}, {4, 9}, {4, 9}, {4, 9}});
  row(85, C, {{7, 10}, {11, 20}, {1, 4}, {1, 4}, {1, 4}});
  row(89, M, {{7, 12}, {7, 24}, {3, 8}, {3, 8}, {3, 8}});
  return t;
}

}  // namespace

const std::vector<TableRow>& dm_table() {
  static const std::vector<TableRow> table = build_table();
  return table;
}

TableReport reproduce_table(double theta_tol) {
  TableReport report;
  report.all_match = true;
  for (const TableRow& row : dm_table()) {
    const Classification c = classify(row.angles, theta_tol);
    RowResult r{row.thurston_id, c.verdict, row.expected, c.verdict == row.expected};
    if (!r.match) report.all_match = false;
    report.rows.push_back(r);
  }
  return report;
}

namespace {

// cos(theta/2) for a rational triple, same closed form as the cone-manifold
// module but staying in exact fractions until the final sine evaluations.
double cos_half_theta(const Rational& a, const Rational& b, const Rational& c) {
  const double sa = sin_pi(a), sb = sin_pi(b), sc = sin_pi(c);
  const double s_abc = sin_pi(a + b + c);
  const double num = sa * sb * sc - s_abc * (sa * sb + sb * sc + sc * sa);
  const double den = sin_pi(a + b) * sin_pi(b + c) * sin_pi(c + a);
  return num / den;
}

std::optional<int> match_cos_pi_over_k(double value, int kmax, double tolerance) {
  if (std::abs(value) <= 1e-12) return 2;
  if (value < -tolerance || value >= 1.0) return std::nullopt;
  // cos(pi/k) is increasing in k; invert and test the neighbors.
  const double guess = kPi / std::acos(std::clamp(value, -1.0, 1.0));
  for (long long k = std::llround(guess) - 1; k <= std::llround(guess) + 1; ++k) {
    if (k < 2 || k > kmax) continue;
    if (std::abs(value - std::cos(kPi / static_cast<double>(k))) <= tolerance)
      return static_cast<int>(k);
  }
  return std::nullopt;
}

}  // namespace

std::vector<SearchHit> rational_search(int max_den, int kmax, double tolerance) {
  if (max_den < 2) throw WrongDimension("search needs max_den >= 2");
  std::vector<Rational> values;
  for (int q = 2; q <= max_den; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) values.emplace_back(p, q);
  std::sort(values.begin(), values.end());
  const int count = static_cast<int>(values.size());
  const Rational one(1, 1);

  const unsigned worker_count = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<SearchHit>> found(worker_count);
  auto scan = [&](unsigned worker) {
    for (int i = static_cast<int>(worker); i < count; i += static_cast<int>(worker_count)) {
      const Rational& a = values[i];
      for (int j = i; j < count; ++j) {
        const Rational& b = values[j];
        const Rational ab = a + b;
        if (ab + b >= one) break;  // c >= b, so a+b+c only grows
        for (int k = j; k < count; ++k) {
          const Rational& c = values[k];
          if (ab + c >= one) break;
          const double cht = cos_half_theta(a, b, c);
          if (const auto match = match_cos_pi_over_k(cht, kmax, tolerance))
            found[worker].push_back(SearchHit{{a, b, c}, *match, cht});
        }
      }
    }
  };
  if (worker_count == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::vector<SearchHit> hits;
  for (auto& part : found) hits.insert(hits.end(), part.begin(), part.end());
  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    for (int i = 0; i < 3; ++i) {
      const int c = compare(x.triple[i], y.triple[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return hits;
}

}  // namespace polyscheme

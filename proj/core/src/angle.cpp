#include "polyscheme/angle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "polyscheme/errors.hpp"

namespace polyscheme {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double sin_pi(const Rational& r) {
  // Reduce r mod 2 exactly, then fold into [0, 1/2] so the float evaluation
  // never sees a reduced argument near a zero of sine.
  long long two_den = 2 * r.den;
  long long n = ((r.num % two_den) + two_den) % two_den;  // r' = n/den in [0, 2)
  double sign = 1.0;
  if (n >= r.den) {  // [1, 2): sin(pi x) = -sin(pi (x - 1))
    n -= r.den;
    sign = -1.0;
  }
  if (2 * n > r.den) n = r.den - n;  // (1/2, 1): reflect
  if (n == 0) return sign * 0.0;
  if (2 * n == r.den) return sign * 1.0;
  return sign * std::sin(kPi * (static_cast<double>(n) / static_cast<double>(r.den)));
}

double cos_pi(const Rational& r) { return sin_pi(r + Rational(1, 2)); }

Angle Angle::rational(long long p, long long q) {
  Angle a;
  a.rational_ = true;
  a.frac_ = Rational(p, q);
  if (a.frac_.num <= 0 || a.frac_ >= Rational(1, 1))
    throw AngleOutOfRange(-1);
  a.rad_ = kPi * a.frac_.value();
  return a;
}

Angle Angle::radians(double r) {
  Angle a;
  a.rational_ = false;
  a.rad_ = r;
  if (!(r > 1e-12 && r < kPi - 1e-12)) throw AngleOutOfRange(-1);
  return a;
}

double Angle::sin() const { return rational_ ? sin_pi(frac_) : std::sin(rad_); }
double Angle::cos() const { return rational_ ? cos_pi(frac_) : std::cos(rad_); }

int compare(const Angle& a, const Angle& b) {
  if (a.rational_ && b.rational_) return compare(a.frac_, b.frac_);
  if (a.rad_ < b.rad_) return -1;
  if (a.rad_ > b.rad_) return 1;
  if (a.rational_ != b.rational_) return a.rational_ ? -1 : 1;
  return 0;
}

std::string Angle::str() const {
  if (rational_) return frac_.str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", rad_);
  return buf;
}

void AngleSum::add(const Angle& a) {
  rad_ += a.value();
  if (exact_ && a.is_rational()) {
    frac_ = frac_ + a.fraction();
  } else {
    exact_ = false;
  }
}

int AngleSum::compare_pi_multiple(const Rational& t, double tol) const {
  if (exact_) return compare(frac_, t);
  const double target = kPi * t.value();
  if (rad_ < target - tol) return -1;
  if (rad_ > target + tol) return 1;
  return 0;
}

bool AngleList::all_rational() const {
  return std::all_of(angles_.begin(), angles_.end(),
                     [](const Angle& a) { return a.is_rational(); });
}

std::string AngleList::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += angles_[i].str();
  }
  return out;
}

AngleList validate(const std::vector<Angle>& raw) {
  if (raw.size() < 3) throw TooFewAngles(static_cast<int>(raw.size()));
  // Angle construction already enforces (0, pi); re-check to keep the reported
  // index meaningful if an Angle was built some other way.
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i].value() > 0.0 && raw[i].value() < kPi)) throw AngleOutOfRange(static_cast<int>(i));
  }
  AngleSum total;
  for (const Angle& a : raw) total.add(a);
  if (total.compare_pi_multiple(Rational(2, 1), tol::kSumTwoPi) != 0)
    throw SumNotTwoPi(total.radians());
  AngleList out;
  out.angles_ = raw;
  return out;
}

namespace {

// Three-way comparison of two cyclic readings of the same list.
int compare_reading(const AngleList& a, int start, int step, int start2, int step2) {
  const int m = a.size();
  for (int i = 0; i < m; ++i) {
    const int c = compare(a.cyclic(start + step * i), a.cyclic(start2 + step2 * i));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

AngleList canonicalize(const AngleList& a) {
  const int m = a.size();
  int best_start = 0, best_step = 1;
  for (int step : {1, -1}) {
    for (int start = 0; start < m; ++start) {
      if (start == best_start && step == best_step) continue;
      if (compare_reading(a, start, step, best_start, best_step) < 0) {
        best_start = start;
        best_step = step;
      }
    }
  }
  std::vector<Angle> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(a.cyclic(best_start + best_step * i));
  return validate(out);
}

double Slope::line_angle() const {
  if (at_infinity) return kPi / 2.0;
  double t = std::atan(value);
  if (t < 0) t += kPi;
  return t;  // in [0, pi)
}

AngleList angles_from_slopes(const SlopeList& slopes) {
  const int m = static_cast<int>(slopes.size());
  if (m < 3) throw TooFewAngles(m);
  // Unwrap: each consecutive gap is the representative of the direction
  // difference mod pi lying in (0, pi); a zero gap means two normals on the
  // same line, which no convex polygon allows.
  std::vector<double> gap(m);  // gap[i] = angle between normals i-1 and i
  const double degenerate_margin = 1e-12;
  for (int i = 1; i <= m; ++i) {
    const int cur = i % m;
    const double d = slopes[cur].line_angle() - slopes[i - 1].line_angle();
    double g = std::fmod(d, kPi);
    if (g < 0) g += kPi;
    if (g < degenerate_margin || g > kPi - degenerate_margin)
      throw DegenerateConsecutive(i - 1);
    gap[cur] = g;
  }
  double total = 0.0;
  for (double g : gap) total += g;
  if (std::abs(total - kTwoPi) > tol::kUnwrap) throw UnwrapNotTwoPi(total);
  std::vector<Angle> out;
  out.reserve(m);
  for (double g : gap) out.push_back(Angle::radians(g));
  return validate(out);
}

std::optional<std::vector<int>> subset_sum_pi(const AngleList& a) {
  const int m = a.size();
  const int max_size = m - 2;  // n + 1
  std::vector<int> pick;
  // Sizes ascending, subsets in lexicographic order; first witness wins.
  for (int size = 2; size <= max_size; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      AngleSum s;
      for (int idx : pick) s.add(a[idx]);
      if (s.compare_pi_multiple(Rational(1, 1), tol::kSubsetPi) == 0) return pick;
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace polyscheme

#include "hweavoa/benchmarks.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace hweavoa::benchmarks {

namespace tables {

// clang-format off
const double kFoxholes[2][25] = {
    {-32, -16, 0, 16, 32, -32, -16, 0, 16, 32, -32, -16, 0, 16, 32,
     -32, -16, 0, 16, 32, -32, -16, 0, 16, 32},
    {-32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0, 0, 0, 0, 0,
     16, 16, 16, 16, 16, 32, 32, 32, 32, 32}};

const double kKowalikA[11] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
const double kKowalikB[11] = {4.0, 2.0, 1.0, 0.5, 0.25, 1.0 / 6, 1.0 / 8,
                              1.0 / 10, 1.0 / 12, 1.0 / 14, 1.0 / 16};

const double kHartmann3A[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
const double kHartmann3P[4][3] = {{0.3689, 0.1170, 0.2673},
                                  {0.4699, 0.4387, 0.7470},
                                  {0.1091, 0.8732, 0.5547},
                                  {0.03815, 0.5743, 0.8828}};

const double kHartmann6A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                  {0.05, 10, 17, 0.1, 8, 14},
                                  {3, 3.5, 1.7, 10, 17, 8},
                                  {17, 8, 0.05, 10, 0.1, 14}};
const double kHartmann6P[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                  {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                  {0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650},
                                  {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
const double kHartmannC[4] = {1.0, 1.2, 3.0, 3.2};

const double kShekelA[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6},
                                {3, 7, 3, 7}, {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1},
                                {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
const double kShekelC[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
// clang-format on

}  // namespace tables

namespace {

using std::numbers::pi;
using Span = std::span<const double>;

double sphere(Span x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(Span x) {
  double sum = 0.0;
  double prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_1_2(Span x) {
  double total = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    total += prefix * prefix;
  }
  return total;
}

double schwefel_2_21(Span x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(Span x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double step(Span x) {
  double s = 0.0;
  for (double v : x) {
    const double f = std::floor(v + 0.5);
    s += f * f;
  }
  return s;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// The noise term of the quartic function is a hash of the point, so the
// evaluator is a pure function while still looking uniform on [0, 1).
double quartic_noise(Span x) {
  std::uint64_t h = 0x51ed270b27b1f3a5ULL;
  for (double v : x) h = splitmix64(h ^ std::bit_cast<std::uint64_t>(v + 0.0));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double quartic(Span x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    s += static_cast<double>(i + 1) * sq * sq;
  }
  return s + quartic_noise(x);
}

double schwefel_2_26(Span x) {
  double s = 0.0;
  for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(Span x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return s;
}

double ackley(Span x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(Span x) {
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double sin_sq(double v) {
  const double s = std::sin(v);
  return s * s;
}

double penalized_1(Span x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double s = 10.0 * sin_sq(pi * y(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = y(i) - 1.0;
    s += d * d * (1.0 + 10.0 * sin_sq(pi * y(i + 1)));
  }
  const double last = y(n - 1) - 1.0;
  s += last * last;
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return pi / static_cast<double>(n) * s + pen;
}

double penalized_2(Span x) {
  const std::size_t n = x.size();
  double s = sin_sq(3.0 * pi * x[0]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i] - 1.0;
    s += d * d * (1.0 + sin_sq(3.0 * pi * x[i + 1]));
  }
  const double last = x[n - 1] - 1.0;
  s += last * last * (1.0 + sin_sq(2.0 * pi * x[n - 1]));
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 5.0, 100.0, 4.0);
  return 0.1 * s + pen;
}

double foxholes(Span x) {
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    double inner = static_cast<double>(j + 1);
    for (int i = 0; i < 2; ++i) inner += std::pow(x[i] - tables::kFoxholes[i][j], 6);
    s += 1.0 / inner;
  }
  return 1.0 / s;
}

double kowalik(Span x) {
  double s = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double b = tables::kKowalikB[i];
    const double r = tables::kKowalikA[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

double six_hump_camel(Span x) {
  const double a = x[0];
  const double b = x[1];
  return 4.0 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3.0 + a * b - 4.0 * b * b +
         4.0 * std::pow(b, 4);
}

double branin(Span x) {
  const double t = x[1] - 5.1 / (4.0 * pi * pi) * x[0] * x[0] + 5.0 / pi * x[0] - 6.0;
  return t * t + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x[0]) + 10.0;
}

double goldstein_price(Span x) {
  const double a = x[0];
  const double b = x[1];
  const double p = a + b + 1.0;
  const double q = 2.0 * a - 3.0 * b;
  return (1.0 + p * p * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b)) *
         (30.0 + q * q * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b));
}

template <std::size_t D>
double hartmann(Span x, const double (&a)[4][D], const double (&p)[4][D]) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      const double d = x[j] - p[i][j];
      inner += a[i][j] * d * d;
    }
    s -= tables::kHartmannC[i] * std::exp(-inner);
  }
  return s;
}

double shekel(Span x, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    double d2 = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double d = x[j] - tables::kShekelA[i][j];
      d2 += d * d;
    }
    s -= 1.0 / (d2 + tables::kShekelC[i]);
  }
  return s;
}

std::vector<BenchmarkSpec> build_registry() {
  auto filled = [](std::size_t dim, double v) { return std::optional<Vector>(Vector(dim, v)); };
  std::vector<BenchmarkSpec> r;
  r.reserve(23);
  r.push_back({1, "Sphere", 30, false, -100, 100, 0.0, filled(30, 0.0)});
  r.push_back({2, "Schwefel 2.22", 30, false, -10, 10, 0.0, filled(30, 0.0)});
  r.push_back({3, "Schwefel 1.2", 30, false, -100, 100, 0.0, filled(30, 0.0)});
  r.push_back({4, "Schwefel 2.21", 30, false, -100, 100, 0.0, filled(30, 0.0)});
  r.push_back({5, "Rosenbrock", 30, false, -30, 30, 0.0, filled(30, 1.0)});
  r.push_back({6, "Step", 30, false, -100, 100, 0.0, filled(30, 0.0)});
  r.push_back({7, "Quartic with noise", 30, false, -1.28, 1.28, 0.0, filled(30, 0.0)});
  r.push_back({8, "Schwefel 2.26", 30, false, -500, 500, -418.9829 * 30, filled(30, 420.9687)});
  r.push_back({9, "Rastrigin", 30, false, -5.12, 5.12, 0.0, filled(30, 0.0)});
  r.push_back({10, "Ackley", 30, false, -32, 32, 0.0, filled(30, 0.0)});
  r.push_back({11, "Griewank", 30, false, -600, 600, 0.0, filled(30, 0.0)});
  r.push_back({12, "Penalized 1", 30, false, -50, 50, 0.0, filled(30, -1.0)});
  r.push_back({13, "Penalized 2", 30, false, -50, 50, 0.0, filled(30, 1.0)});
  r.push_back({14, "Shekel foxholes", 2, true, -65, 65, 1.0, Vector{-31.97833, -31.97833}});
  r.push_back({15, "Kowalik", 4, true, -5, 5, 0.00030, Vector{0.1928, 0.1908, 0.1231, 0.1358}});
  r.push_back({16, "Six-hump camel", 2, true, -5, 5, -1.0316, Vector{0.08984201, -0.71265640}});
  r.push_back({17, "Branin", 2, true, -5, 5, 0.398, Vector{pi, 2.275}});
  r.push_back({18, "Goldstein-Price", 2, true, -2, 2, 3.0, Vector{0.0, -1.0}});
  r.push_back({19, "Hartmann 3", 3, true, 0, 1, -3.86, Vector{0.114614, 0.555649, 0.852547}});
  r.push_back({20, "Hartmann 6", 6, true, 0, 1, -3.32,
               Vector{0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}});
  r.push_back({21, "Shekel 5", 4, true, 0, 10, -10.1532, Vector{4.00004, 4.00013, 4.00004, 4.00013}});
  r.push_back({22, "Shekel 7", 4, true, 0, 10, -10.4028, Vector{4.00057, 4.00069, 3.99949, 3.99961}});
  r.push_back(
      {23, "Shekel 10", 4, true, 0, 10, -10.5363, Vector{4.00075, 4.00059, 3.99966, 3.99951}});
  return r;
}

double dispatch(int id, Span x) {
  switch (id) {
    case 1: return sphere(x);
    case 2: return schwefel_2_22(x);
    case 3: return schwefel_1_2(x);
    case 4: return schwefel_2_21(x);
    case 5: return rosenbrock(x);
    case 6: return step(x);
    case 7: return quartic(x);
    case 8: return schwefel_2_26(x);
    case 9: return rastrigin(x);
    case 10: return ackley(x);
    case 11: return griewank(x);
    case 12: return penalized_1(x);
    case 13: return penalized_2(x);
    case 14: return foxholes(x);
    case 15: return kowalik(x);
    case 16: return six_hump_camel(x);
    case 17: return branin(x);
    case 18: return goldstein_price(x);
    case 19: return hartmann(x, tables::kHartmann3A, tables::kHartmann3P);
    case 20: return hartmann(x, tables::kHartmann6A, tables::kHartmann6P);
    case 21: return shekel(x, 5);
    case 22: return shekel(x, 7);
    case 23: return shekel(x, 10);
    default: break;
  }
  throw std::out_of_range("benchmark id " + std::to_string(id) + " outside F1..F23");
}

void check_dim(const BenchmarkSpec& s, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument(s.label() + ": dimension must be >= 1");
  if (s.fixed_dim && dim != s.default_dim)
    throw std::invalid_argument(s.label() + " is defined only for dimension " +
                                std::to_string(s.default_dim) + ", got " + std::to_string(dim));
  if (s.id == 5 && dim < 2) throw std::invalid_argument("F5 needs dimension >= 2");
}

}  // namespace

double BenchmarkSpec::optimum(std::size_t dim) const {
  return id == 8 ? -418.9829 * static_cast<double>(dim) : known_optimum;
}

const std::vector<BenchmarkSpec>& registry() {
  static const std::vector<BenchmarkSpec> r = build_registry();
  return r;
}

const BenchmarkSpec& spec(int id) {
  if (id < 1 || id > 23)
    throw std::out_of_range("benchmark id " + std::to_string(id) + " outside F1..F23");
  return registry()[static_cast<std::size_t>(id - 1)];
}

int parse_id(std::string_view label) {
  std::string_view digits = label;
  if (!digits.empty() && (digits.front() == 'F' || digits.front() == 'f')) digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("not a benchmark id: '" + std::string(label) + "'");
  const int id = std::stoi(std::string(digits));
  if (id < 1 || id > 23)
    throw std::invalid_argument("benchmark id outside F1..F23: '" + std::string(label) + "'");
  return id;
}

double evaluate(int id, std::span<const double> x) {
  check_dim(spec(id), x.size());
  return dispatch(id, x);
}

Problem make_problem(int id, std::size_t dim) {
  const BenchmarkSpec& s = spec(id);
  const std::size_t d = dim == 0 ? s.default_dim : dim;
  check_dim(s, d);
  return Problem(s.label(), SearchSpace::uniform(d, s.lower, s.upper),
                 [id](std::span<const double> x) { return dispatch(id, x); });
}

Problem external_problem(std::string name, SearchSpace space, ObjectiveFn evaluator) {
  return Problem(std::move(name), std::move(space), std::move(evaluator));
}

}  // namespace hweavoa::benchmarks

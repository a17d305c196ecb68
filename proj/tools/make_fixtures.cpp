// Generates the platform fixture files. Unit generators are curated
// candidates verified two ways: field norms exactly (must be +-1), and
// multiplicative independence numerically through logarithmic embeddings
// (dependent candidates are dropped, so the reported Hirsch length never
// overstates the group the fixture actually generates).

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "aag/platform.hpp"

namespace {

using aag::FieldElement;
using aag::FieldHandle;
using aag::Index;
using aag::Integer;
using aag::MonicIntPolynomial;
using aag::NumberField;
using aag::PlatformSpec;
using Complex = std::complex<double>;

std::vector<Complex> poly_roots(const MonicIntPolynomial& f) {
  const int n = static_cast<int>(f.degree());
  std::vector<double> coeff(static_cast<std::size_t>(n));
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    coeff[static_cast<std::size_t>(i)] =
        f.coefficients[static_cast<std::size_t>(i)].convert_to<double>();
    bound = std::max(bound, std::abs(coeff[static_cast<std::size_t>(i)]));
  }
  const double radius = 1.0 + bound;

  const auto eval = [&](Complex z) {
    Complex acc(1.0, 0.0);
    for (int i = n - 1; i >= 0; --i) acc = acc * z + coeff[static_cast<std::size_t>(i)];
    return acc;
  };

  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    roots[static_cast<std::size_t>(i)] =
        std::polar(radius * 0.8, 6.283185307179586 * i / n + 0.7);

  for (int pass = 0; pass < 2000; ++pass) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex den(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i)
          den *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      const Complex delta = eval(roots[static_cast<std::size_t>(i)]) / den;
      roots[static_cast<std::size_t>(i)] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    if (max_step < 1e-14) break;
  }

  for (const Complex& r : roots) {
    if (std::abs(eval(r)) > 1e-8)
      throw std::runtime_error("root finding did not converge");
  }
  return roots;
}

std::pair<int, int> numeric_signature(const std::vector<Complex>& roots) {
  int real_count = 0;
  for (const Complex& r : roots)
    if (std::abs(r.imag()) < 1e-8) ++real_count;
  return {real_count, (static_cast<int>(roots.size()) - real_count) / 2};
}

std::vector<double> log_row(const FieldElement& u, const std::vector<Complex>& roots) {
  std::vector<double> row;
  row.reserve(roots.size());
  for (const Complex& z : roots) {
    Complex val(0.0, 0.0);
    Complex power(1.0, 0.0);
    for (Index i = 0; i < u.coeffs().size(); ++i) {
      val += u.coeffs()[i].convert_to<double>() * power;
      power *= z;
    }
    row.push_back(std::log(std::abs(val)));
  }
  return row;
}

int numeric_rank(std::vector<std::vector<double>> m, double tol) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r) {
      const double a = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      if (a > best) {
        best = a;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      const double factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      for (int k = c; k < cols; ++k)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -=
            factor * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

/// Greedy maximal multiplicatively independent sublist, in candidate order.
std::vector<FieldElement> pick_independent(const std::vector<FieldElement>& candidates,
                                           const std::vector<Complex>& roots, int cap,
                                           std::vector<std::string>* dropped) {
  std::vector<FieldElement> kept;
  std::vector<std::vector<double>> rows;
  for (const FieldElement& u : candidates) {
    if (static_cast<int>(kept.size()) == cap) break;
    rows.push_back(log_row(u, roots));
    if (numeric_rank(rows, 1e-6) == static_cast<int>(rows.size())) {
      kept.push_back(u);
    } else {
      rows.pop_back();
      if (dropped != nullptr) dropped->push_back(u.str());
    }
  }
  return kept;
}

FieldElement from_ints(const FieldHandle& field, std::vector<long long> coeffs) {
  aag::VecQ v = aag::VecQ::Zero(field->degree());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v[static_cast<Index>(i)] = aag::Rational(coeffs[i]);
  return field->element(v);
}

std::vector<FieldElement> power_basis(const FieldHandle& field) {
  std::vector<FieldElement> basis;
  const FieldElement theta = field->generator();
  FieldElement acc = field->one();
  for (Index i = 0; i < field->degree(); ++i) {
    basis.push_back(acc);
    acc = acc * theta;
  }
  return basis;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error("fixture invariant failed: " + what);
}

struct Plan {
  std::string name;
  std::vector<long long> poly;
  std::vector<std::vector<long long>> candidates;  // free-unit candidates, priority order
  std::pair<int, int> signature;
  int expected_hirsch;
  std::string notes;
  int search_window = 0;  // leading power-basis coordinates swept for extra units
  int search_bound = 0;
};

std::vector<FieldElement> sorted_by_height(std::vector<FieldElement> elems) {
  std::sort(elems.begin(), elems.end(), [](const FieldElement& a, const FieldElement& b) {
    auto height = [](const FieldElement& e) {
      aag::Rational h(0);
      for (Index i = 0; i < e.coeffs().size(); ++i) {
        const aag::Rational c = e.coeffs()[i] < 0 ? -e.coeffs()[i] : e.coeffs()[i];
        if (c > h) h = c;
      }
      return h;
    };
    const aag::Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    for (Index i = 0; i < a.coeffs().size(); ++i)
      if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
  });
  return elems;
}

/// Units of the cubic t^3 - 7t - 1 lifted through eta = theta^3 into the
/// degree-9 field, ordered by coefficient height.
std::vector<FieldElement> lifted_cubic_units(const FieldHandle& degree9) {
  const FieldHandle cubic =
      NumberField::create(MonicIntPolynomial{{Integer(-1), Integer(-7), Integer(0)}});
  const std::vector<FieldElement> found =
      sorted_by_height(search_units(cubic, power_basis(cubic), 8));

  std::vector<FieldElement> lifted;
  for (const FieldElement& u : found) {
    aag::VecQ v = aag::VecQ::Zero(9);
    for (Index i = 0; i < 3; ++i) v[3 * i] = u.coeffs()[i];
    lifted.push_back(degree9->element(v));
  }
  return lifted;
}

void emit(const Plan& plan, const std::string& out_dir) {
  MonicIntPolynomial f;
  for (long long c : plan.poly) f.coefficients.emplace_back(c);
  const FieldHandle field = NumberField::create(std::move(f));
  const std::vector<Complex> roots = poly_roots(field->poly());

  require(numeric_signature(roots) == plan.signature, plan.name + ": signature");

  std::vector<FieldElement> candidates;
  for (const auto& coeffs : plan.candidates) candidates.push_back(from_ints(field, coeffs));
  if (plan.name == "x^9-7x^3-1")
    for (const FieldElement& u : lifted_cubic_units(field)) candidates.push_back(u);

  for (const FieldElement& u : candidates) {
    const aag::Rational norm = fe_norm(u);
    require(norm == 1 || norm == -1, plan.name + ": candidate " + u.str() + " not a unit");
  }

  if (plan.search_window > 0) {
    const std::vector<FieldElement> full = power_basis(field);
    const std::vector<FieldElement> window(full.begin(), full.begin() + plan.search_window);
    for (const FieldElement& u : sorted_by_height(search_units(field, window, plan.search_bound)))
      candidates.push_back(u);
  }

  const int cap = plan.expected_hirsch - static_cast<int>(field->degree());
  std::vector<std::string> dropped;
  std::vector<FieldElement> kept = pick_independent(candidates, roots, cap, &dropped);

  PlatformSpec spec;
  spec.name = plan.name;
  spec.field = field;
  spec.basis = power_basis(field);
  spec.units.push_back(from_ints(field, {-1}));
  for (const FieldElement& u : kept) spec.units.push_back(u);
  spec.torsion_order = 2;
  spec.signature = plan.signature;
  spec.expected_hirsch_length = plan.expected_hirsch;
  spec.notes = plan.notes;

  const std::string path = out_dir + "/" + plan.name + ".json";
  std::ofstream out(path);
  out << aag::platform_to_json(spec) << "\n";
  out.close();

  const PlatformSpec reloaded = aag::load_platform_file(path);
  require(reloaded.hirsch_length() == spec.hirsch_length(), plan.name + ": reload");

  std::cout << plan.name << ": degree " << field->degree() << ", units";
  for (const FieldElement& u : spec.units) std::cout << " [" << u.str() << "]";
  std::cout << ", h(G) " << spec.hirsch_length() << " (expected " << plan.expected_hirsch
            << (spec.hirsch_length() < plan.expected_hirsch ? ", short" : "") << ")";
  if (!dropped.empty()) {
    std::cout << ", dropped " << dropped.size() << " dependent candidate"
              << (dropped.size() == 1 ? "" : "s") << ", first:";
    for (std::size_t i = 0; i < dropped.size() && i < 3; ++i) std::cout << " [" << dropped[i] << "]";
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(out_dir);

  const std::vector<long long> theta = {0, 1};
  const std::vector<long long> theta_minus_1 = {-1, 1};
  const std::vector<long long> theta_plus_1 = {1, 1};
  const std::vector<long long> theta_sq_plus_1 = {1, 0, 1};
  const std::vector<long long> theta_sq_minus_theta_plus_1 = {1, -1, 1};

  const std::vector<Plan> plans = {
      {"x^2-x-1",
       {-1, -1},
       {theta},
       {2, 0},
       3,
       "power basis; free unit t of norm -1; torsion -1"},
      {"x^5-x^3-1",
       {-1, 0, 0, -1, 0},
       {theta, theta_minus_1, theta_plus_1},
       {1, 2},
       7,
       "power basis; t and t-1 have norm 1; t+1 = t^-3 (t-1)^-1 is dependent and excluded"},
      {"x^7-x^3-1",
       {-1, 0, 0, -1, 0, 0, 0},
       {theta, theta_minus_1, theta_plus_1, theta_sq_plus_1},
       {1, 3},
       10,
       "power basis; unit candidates t, t-1, t+1, t^2+1 of norm 1, independent subset kept"},
      {"x^9-7x^3-1",
       {-1, 0, 0, -7, 0, 0, 0, 0, 0},
       {theta},
       {3, 3},
       14,
       "power basis; t plus units of the cubic subfield generated by t^3; the relation "
       "t^3 = (cubic generator) ties those directions together, and a bounded-height "
       "search supplies any further independent units it can reach",
       9,
       1},
      {"x^11-x^3-1",
       {-1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
       {theta, theta_minus_1, theta_plus_1, theta_sq_plus_1},
       {1, 5},
       16,
       "power basis; curated norm-1 candidates t, t-1, t+1, t^2+1 plus a bounded-height "
       "search; t^2-t+1 = t^11 (t+1)^-1 is dependent and excluded",
       7,
       1},
      {"x^15-x-2",
       {-2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {},
       {1, 7},
       22,
       "power basis; t has norm 2 and is not a unit; the units shipped come from a "
       "bounded-height search and cover only part of the rank-7 unit lattice",
       6,
       1},
      {"x^20-x-1",
       {-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {theta, theta_minus_1, theta_sq_plus_1},
       {2, 9},
       30,
       "power basis; t+1 = t^20 is dependent and excluded; curated candidates plus a "
       "bounded-height search cover only part of the rank-10 unit lattice",
       5,
       1},
  };

  try {
    // The norm-2 rejection that motivates the x^15-x-2 candidate list being empty.
    {
      MonicIntPolynomial f;
      for (long long c : plans[5].poly) f.coefficients.emplace_back(c);
      const FieldHandle f15 = NumberField::create(std::move(f));
      require(fe_norm(f15->generator()) == 2, "x^15-x-2: norm of t");
    }
    for (const Plan& plan : plans) emit(plan, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "fixture generation failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

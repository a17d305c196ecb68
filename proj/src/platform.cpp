#include "aag/platform.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "aag/serial.hpp"

namespace aag {

GroupElement PlatformSpec::identity() const {
  return GroupElement{field->one(), field->zero(), false};
}

std::vector<GroupElement> PlatformSpec::generators() const {
  std::vector<GroupElement> gens;
  gens.reserve(units.size() + basis.size());
  for (const FieldElement& u : units) gens.push_back(GroupElement{u, field->zero(), false});
  for (const FieldElement& o : basis) gens.push_back(GroupElement{field->one(), o, false});
  return gens;
}

GroupElement g_mul(const GroupElement& x, const GroupElement& y) {
  // (C,S)(D,T) = (CD, SD + T)
  return GroupElement{x.unit * y.unit, x.translation * y.unit + y.translation,
                      x.lifted || y.lifted};
}

GroupElement g_inv(const GroupElement& x) {
  // (C,S)^-1 = (C^-1, -S C^-1)
  const FieldElement inv = fe_inv(x.unit);
  return GroupElement{inv, -(x.translation * inv), x.lifted};
}

GroupElement g_conj(const GroupElement& g, const GroupElement& x) {
  // (D,T)^(C,S) = (D, S(E-D) + TC)
  const FieldElement one = g.unit.field()->one();
  return GroupElement{g.unit, x.translation * (one - g.unit) + g.translation * x.unit,
                      g.lifted || x.lifted};
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return g_mul(g_mul(g_inv(a), g_inv(b)), g_mul(a, b));
}

GroupWord random_word(Rng& rng, std::size_t gen_count, std::size_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  if (gen_count < 1) throw std::invalid_argument("need at least one generator");
  GroupWord word;
  word.letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    word.letters.push_back(
        {static_cast<int>(rng.below(gen_count)), rng.sign()});
  }
  return word;
}

GroupElement eval_word(const GroupWord& word, const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("eval_word: empty generator tuple");
  GroupElement acc{gens.front().unit.field()->one(), gens.front().unit.field()->zero(), false};
  for (const auto& letter : word.letters) {
    if (letter.index < 0 || letter.index >= static_cast<int>(gens.size()))
      throw std::out_of_range("eval_word: generator index out of range");
    const GroupElement& g = gens[static_cast<std::size_t>(letter.index)];
    acc = g_mul(acc, letter.exponent >= 0 ? g : g_inv(g));
  }
  return acc;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

VecQ coords_in_basis(const FieldElement& e, const std::vector<FieldElement>& basis) {
  if (basis.empty()) throw std::invalid_argument("coords_in_basis: empty basis");
  const Index n = e.field()->degree();
  MatQ mat(n, static_cast<Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) mat.col(static_cast<Index>(j)) = basis[j].coeffs();
  const SolveResult res = solve(mat, e.coeffs());
  if (res.inconsistent())
    throw std::domain_error("coords_in_basis: element outside the span of the basis");
  return res.particular;
}

bool has_integral_translation(const GroupElement& g, const PlatformSpec& spec) {
  return is_integral(coords_in_basis(g.translation, spec.basis));
}

namespace {

using nlohmann::json;

void validate(const PlatformSpec& spec) {
  const Index n = spec.degree();
  if (spec.torsion_order < 1) throw FixtureError("torsion_order must be >= 1");
  if (spec.units.empty()) throw FixtureError("fixture must list at least one unit generator");
  if (static_cast<Index>(spec.basis.size()) != n)
    throw FixtureError("basis must have exactly " + std::to_string(n) + " elements");

  MatQ basis_mat(n, n);
  for (Index j = 0; j < n; ++j) basis_mat.col(j) = spec.basis[static_cast<std::size_t>(j)].coeffs();
  if (rank(basis_mat) != n) throw FixtureError("dependent basis: rank below field degree");

  for (std::size_t i = 0; i < spec.units.size(); ++i) {
    const FieldElement& u = spec.units[i];
    const Rational norm = fe_norm(u);
    if (norm != 1 && norm != -1)
      throw FixtureError("non-unit generator U_" + std::to_string(i + 1) +
                         ": norm " + norm.str());
    const FieldElement u_inv = fe_inv(u);
    if (!is_integral(coords_in_basis(u, spec.basis)) ||
        !is_integral(coords_in_basis(u_inv, spec.basis)))
      throw FixtureError("non-integral unit U_" + std::to_string(i + 1) +
                         ": generator or inverse outside the integral basis");
    // Closure of the basis lattice under the unit action, both directions.
    for (Index j = 0; j < n; ++j) {
      const FieldElement& o = spec.basis[static_cast<std::size_t>(j)];
      if (!is_integral(coords_in_basis(o * u, spec.basis)) ||
          !is_integral(coords_in_basis(o * u_inv, spec.basis)))
        throw FixtureError("non-integral action of U_" + std::to_string(i + 1) +
                           " on O_" + std::to_string(j + 1));
    }
  }

  // U_1^k = 1 and no smaller positive power is trivial.
  const FieldElement one = spec.field->one();
  FieldElement power = one;
  for (int j = 1; j <= spec.torsion_order; ++j) {
    power = power * spec.units.front();
    if (j < spec.torsion_order && power == one)
      throw FixtureError("torsion mismatch: U_1^" + std::to_string(j) + " = 1 before order " +
                         std::to_string(spec.torsion_order));
  }
  if (!(power == one))
    throw FixtureError("torsion mismatch: U_1^" + std::to_string(spec.torsion_order) + " != 1");
}

}  // namespace

PlatformSpec load_platform(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FixtureError(std::string("parse error: ") + e.what());
  }

  try {
    PlatformSpec spec;
    spec.name = doc.at("name").get<std::string>();

    const json& poly = doc.at("polynomial");
    if (!poly.is_array() || poly.size() < 2)
      throw FixtureError("parse error: polynomial needs at least two coefficients");
    MonicIntPolynomial f;
    for (const json& c : poly) {
      if (c.is_number_integer())
        f.coefficients.emplace_back(c.get<long long>());
      else if (c.is_string())
        f.coefficients.emplace_back(Integer(c.get<std::string>()));
      else
        throw FixtureError("parse error: polynomial coefficients must be integers");
    }
    spec.field = NumberField::create(std::move(f));
    const Index n = spec.degree();

    for (const json& row : doc.at("basis"))
      spec.basis.push_back(spec.field->element(vector_from_json(row, n, "basis element")));
    for (const json& row : doc.at("units"))
      spec.units.push_back(spec.field->element(vector_from_json(row, n, "unit generator")));
    spec.torsion_order = doc.at("torsion_order").get<int>();

    if (doc.contains("signature")) {
      const json& sig = doc["signature"];
      if (!sig.is_array() || sig.size() != 2)
        throw FixtureError("parse error: signature must be [s, t]");
      spec.signature = {sig[0].get<int>(), sig[1].get<int>()};
    }
    if (doc.contains("expected_hirsch_length"))
      spec.expected_hirsch_length = doc["expected_hirsch_length"].get<int>();
    if (doc.contains("notes")) spec.notes = doc["notes"].get<std::string>();

    validate(spec);
    return spec;
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(std::string("invalid fixture: ") + e.what());
  }
}

PlatformSpec load_platform_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_platform(buffer.str());
}

std::string platform_to_json(const PlatformSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  json poly = json::array();
  for (const Integer& c : spec.field->poly().coefficients) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      poly.push_back(static_cast<long long>(c));
    else
      poly.push_back(c.str());
  }
  doc["polynomial"] = poly;
  json basis = json::array();
  for (const FieldElement& o : spec.basis) basis.push_back(vector_to_json(o.coeffs()));
  doc["basis"] = basis;
  json units = json::array();
  for (const FieldElement& u : spec.units) units.push_back(vector_to_json(u.coeffs()));
  doc["units"] = units;
  doc["torsion_order"] = spec.torsion_order;
  if (spec.signature) doc["signature"] = {spec.signature->first, spec.signature->second};
  if (spec.expected_hirsch_length) doc["expected_hirsch_length"] = *spec.expected_hirsch_length;
  if (!spec.notes.empty()) doc["notes"] = spec.notes;
  return doc.dump(2);
}

std::vector<FieldElement> search_units(const FieldHandle& field,
                                       const std::vector<FieldElement>& basis,
                                       int height_bound) {
  if (height_bound < 0) throw std::invalid_argument("height bound must be >= 0");
  std::vector<FieldElement> found;

  auto canonical = [](const FieldElement& e) {
    for (Index i = 0; i < e.coeffs().size(); ++i) {
      if (e.coeffs()[i] > 0) return e;
      if (e.coeffs()[i] < 0) return -e;
    }
    return e;
  };
  auto add_if_unit = [&](const FieldElement& e) {
    if (e.is_zero()) return;
    const Rational norm = fe_norm(e);
    if (norm != 1 && norm != -1) return;
    const FieldElement c = canonical(e);
    for (const FieldElement& seen : found)
      if (seen == c) return;
    found.push_back(c);
  };

  add_if_unit(field->one());

  const std::size_t n = basis.size();
  std::vector<int> a(n, -height_bound);
  while (true) {
    FieldElement e = field->zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != 0) e = e + basis[i] * field->constant(a[i]);
    }
    add_if_unit(e);

    std::size_t pos = 0;
    while (pos < n && a[pos] == height_bound) {
      a[pos] = -height_bound;
      ++pos;
    }
    if (pos == n) break;
    ++a[pos];
  }
  return found;
}

}  // namespace aag

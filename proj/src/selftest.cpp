#include "satake/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "satake/epsilon.hpp"

namespace satake {

CheckResult& SelfTestReport::check(const std::string& name) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  checks_.push_back({name, 0, {}});
  return checks_.back();
}

bool SelfTestReport::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.ok(); });
}

std::size_t SelfTestReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.failures.size();
  return n;
}

namespace {

struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool zero() const { return num == 0; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
};

// Coefficients x with sum_k x_k basis[k] = target, or nullopt if target is
// outside the span. The basis is assumed linearly independent.
std::optional<std::vector<Fraction>> solve_in_basis(const std::vector<RootVector>& basis, const RootVector& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Fraction>> m(rows, std::vector<Fraction>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Fraction(basis[c][r]);
    m[r][cols] = Fraction(target[r]);
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].zero()) ++p;
    if (p == rows) return std::nullopt;  // dependent basis
    std::swap(m[p], m[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c].zero()) continue;
      const Fraction f = m[r][c] / m[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] = m[r][k] - f * m[pivot_row][k];
    }
    pivot_col_of_row.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (!m[r][cols].zero()) return std::nullopt;
  std::vector<Fraction> x(cols);
  for (std::size_t r = 0; r < pivot_row; ++r) {
    const std::size_t c = pivot_col_of_row[r];
    x[c] = m[r][cols] / m[r][c];
  }
  return x;
}

}  // namespace

void check_diagram_invariants(const SatakeDiagram& d, const std::string& label, SelfTestReport& report) {
  auto fail = [&](const std::string& check, const std::string& detail) {
    report.check(check).failures.push_back(label + ": " + detail);
  };
  auto count = [&](const std::string& check) { ++report.check(check).checked; };

  count("validate");
  const ValidationReport vr = validate(d);
  if (!vr.ok()) {
    fail("validate", vr.summary());
    return;
  }

  const RootSystem& rs = *d.rs;
  const int n = d.rank();
  const NodePermutation eps = epsilon_sigma(d);
  const IntMatrix theta = theta_transpose(d).matrix;
  const IntMatrix w = word_matrix(rs, longest_element(rs, d.black));
  const IntMatrix id = IntMatrix::identity(n);

  count("epsilon-automorphism");
  if (!is_diagram_automorphism(rs, eps) || !eps.is_involution())
    fail("epsilon-automorphism", "eps = " + describe_permutation(eps));

  count("epsilon-matrix-identity");
  const IntMatrix p = eps.matrix();
  if (!(p == -(w * theta)) || !(p == -(theta * w)))
    fail("epsilon-matrix-identity", "eps != -w theta^T or eps != -theta^T w");

  count("theta-involution");
  if (!(theta * theta == id)) fail("theta-involution", "theta^T squared is not the identity");

  count("theta-fixes-black");
  for (int i : d.black)
    if (!(theta.column(i) == rs.simple_root(i))) fail("theta-fixes-black", "theta^T moves black node " + std::to_string(i + 1));

  count("theta-swaps-noncompact");
  std::size_t noncompact = 0;
  for (const RootVector& g : rs.positive_roots()) {
    if (supported_on(g, d.black)) {
      if (!(theta.apply(g) == g)) fail("theta-swaps-noncompact", "compact root " + to_string(g) + " moved");
      continue;
    }
    ++noncompact;
    const RootVector t = theta.apply(g);
    if (!rs.is_positive_root(-t) || supported_on(-t, d.black))
      fail("theta-swaps-noncompact", "theta^T" + to_string(g) + " = " + to_string(t));
  }

  count("c-nonnegative");
  for (const auto& [a, row] : c_coefficients(d))
    for (const auto& [g, c] : row)
      if (c < 0)
        fail("c-nonnegative", "c(" + std::to_string(a + 1) + "," + std::to_string(g + 1) + ") = " + std::to_string(c));

  count("restricted-roots");
  const RestrictedRootData rr = restricted_roots(d);
  std::set<RootVector> images;
  for (const RootVector& g : rs.positive_roots()) {
    const RootVector v = g - theta.apply(g);
    if (supported_on(g, d.black) != v.is_zero()) fail("restricted-roots", "root " + to_string(g) + " restricts wrongly");
    if (!v.is_zero()) images.insert(v);
  }
  if (images != std::set<RootVector>(rr.sigma_plus.begin(), rr.sigma_plus.end()))
    fail("restricted-roots", "rho(Delta_o^+) differs from Sigma^+");
  std::size_t total = 0;
  for (const auto& [v, m] : rr.multiplicities) total += static_cast<std::size_t>(m);
  if (total != noncompact) fail("restricted-roots", "multiplicities do not add up to |Delta_o^+|");
  for (const RootVector& l : rr.sigma_plus) {
    const auto x = solve_in_basis(rr.base, l);
    bool good = x.has_value();
    if (good)
      for (const Fraction& f : *x) good = good && f.den == 1 && f.num >= 0;
    if (!good) fail("restricted-roots", to_string(l) + "/2 is not a nonnegative integral combination of the base");
  }

  count("weight-action");
  for (int i = 0; i < n; ++i) {
    Weight fw(static_cast<std::size_t>(n));
    fw[static_cast<std::size_t>(i)] = 1;
    const Weight once = act_on_weight(d, fw);
    if (once[static_cast<std::size_t>(eps(i))] != 1 || !(act_on_weight(d, once) == fw))
      fail("weight-action", "fundamental weight " + std::to_string(i + 1));
  }
}

SelfTestReport run_invariant_suite(std::span<const RealFormRecord> records) {
  SelfTestReport report;
  std::set<std::string> seen;
  auto& names = report.check("unique-names");
  auto& round_trip = report.check("text-round-trip");
  for (const auto& rec : records) {
    ++names.checked;
    for (const auto& n : rec.names)
      if (!seen.insert(normalize_name(n)).second) names.failures.push_back("duplicate name " + n);
    ++round_trip.checked;
    const std::string text = format_diagram(rec.diagram);
    if (!(parse_diagram(text) == rec.diagram)) round_trip.failures.push_back(rec.name() + ": " + text);
  }
  for (const auto& rec : records) check_diagram_invariants(rec.diagram, rec.name(), report);
  return report;
}

}  // namespace satake

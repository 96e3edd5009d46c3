#include "satake/epsilon.hpp"

#include <algorithm>
#include <sstream>

namespace satake {

namespace detail {

NodePermutation epsilon_unchecked(const SatakeDiagram& d) {
  const std::map<int, int> on_black = induced_node_permutation(*d.rs, d.black);
  NodePermutation eps = NodePermutation::identity(d.rank());
  for (int i = 0; i < d.rank(); ++i)
    eps.image[static_cast<std::size_t>(i)] = d.is_black(i) ? on_black.at(i) : d.omega[static_cast<std::size_t>(i)];
  return eps;
}

IntMatrix theta_unchecked(const SatakeDiagram& d) {
  const IntMatrix w = word_matrix(*d.rs, longest_element(*d.rs, d.black));
  return -(w * epsilon_unchecked(d).matrix());
}

}  // namespace detail

NodePermutation epsilon_sigma(const SatakeDiagram& d) {
  require_valid(d);
  return detail::epsilon_unchecked(d);
}

ThetaTranspose theta_transpose(const SatakeDiagram& d) {
  require_valid(d);
  return {detail::theta_unchecked(d)};
}

CCoefficients c_coefficients(const SatakeDiagram& d) {
  const IntMatrix theta = theta_transpose(d).matrix;
  CCoefficients out;
  for (int a : d.white()) {
    const RootVector rest = -(theta.column(a) + d.rs->simple_root(d.omega[static_cast<std::size_t>(a)]));
    auto& row = out[a];
    for (int g : d.black) row[g] = rest[static_cast<std::size_t>(g)];
  }
  return out;
}

namespace {

bool restricted_order(const RootVector& a, const RootVector& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a > b;
}

bool is_even(const RootVector& v) {
  return std::all_of(v.coords.begin(), v.coords.end(), [](int c) { return c % 2 == 0; });
}

RootVector halve(RootVector v) {
  for (int& c : v.coords) c /= 2;
  return v;
}

std::string name_component(int r, int indivisible, int long_count, bool single_length, bool nonreduced) {
  const std::string rank = std::to_string(r);
  if (nonreduced) return "BC" + rank;
  if (single_length) {
    if (indivisible == r * (r + 1) / 2) return "A" + rank;
    if (r >= 4 && indivisible == r * (r - 1)) return "D" + rank;
    if (r >= 6 && r <= 8 && indivisible == (r == 6 ? 36 : r == 7 ? 63 : 120)) return "E" + rank;
  } else {
    if (r == 2 && indivisible == 6) return "G2";
    if (r == 4 && indivisible == 24) return "F4";
    if (indivisible == r * r) {
      if (r == 2 || long_count == r * (r - 1)) return "B" + rank;
      if (long_count == r) return "C" + rank;
    }
  }
  return "?" + rank;
}

}  // namespace

std::string restricted_type_label(const RootSystem& rs, const std::vector<RootVector>& base,
                                  const std::vector<RootVector>& sigma_plus) {
  const std::size_t k = base.size();
  if (k == 0) return "";

  // Connected components of the base under the invariant form.
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < k; ++v)
        if (comp[v] < 0 && rs.inner(base[u], base[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  const std::set<RootVector> all(sigma_plus.begin(), sigma_plus.end());
  std::string label;
  for (int c = 0; c < ncomp; ++c) {
    int r = 0;
    for (std::size_t s = 0; s < k; ++s) r += comp[s] == c;
    std::vector<RootVector> indivisible;
    bool nonreduced = false;
    for (const RootVector& l : sigma_plus) {
      bool mine = false;
      for (std::size_t s = 0; s < k; ++s)
        if (comp[s] == c && rs.inner(l, base[s]) != 0) mine = true;
      if (!mine) continue;
      if (all.count(2 * l)) nonreduced = true;
      if (!(is_even(l) && all.count(halve(l)))) indivisible.push_back(l);
    }
    long long longest = 0, shortest = -1;
    for (const RootVector& l : indivisible) {
      const long long n = rs.inner(l, l);
      longest = std::max(longest, n);
      shortest = shortest < 0 ? n : std::min(shortest, n);
    }
    int long_count = 0;
    for (const RootVector& l : indivisible) long_count += rs.inner(l, l) == longest;
    label += (c ? "x" : "") + name_component(r, static_cast<int>(indivisible.size()), long_count,
                                             longest == shortest, nonreduced);
  }
  return label;
}

RestrictedRootData restricted_roots(const SatakeDiagram& d) {
  const IntMatrix theta = theta_transpose(d).matrix;
  const RootSystem& rs = *d.rs;

  RestrictedRootData out;
  for (const RootVector& g : rs.positive_roots()) {
    const RootVector v = g - theta.apply(g);
    if (!v.is_zero()) ++out.multiplicities[v];
  }
  for (const auto& [v, m] : out.multiplicities) {
    if (out.multiplicities.count(-v))
      throw DiagramError("positive roots restrict to both " + to_string(v) + " and its negative");
    out.sigma_plus.push_back(v);
  }
  std::sort(out.sigma_plus.begin(), out.sigma_plus.end(), restricted_order);

  for (int a : d.white()) {
    const RootVector v = rs.simple_root(a) - theta.column(a);
    if (std::find(out.base.begin(), out.base.end(), v) == out.base.end()) out.base.push_back(v);
  }
  out.type_label = restricted_type_label(rs, out.base, out.sigma_plus);
  return out;
}

Weight act_on_weight(const SatakeDiagram& d, const Weight& w) {
  if (static_cast<int>(w.size()) != d.rank())
    throw std::invalid_argument("weight has " + std::to_string(w.size()) + " coordinates, diagram has " +
                                std::to_string(d.rank()) + " nodes");
  const NodePermutation eps = epsilon_sigma(d);
  Weight out(w.size());
  for (int i = 0; i < d.rank(); ++i) out[static_cast<std::size_t>(eps(i))] = w[static_cast<std::size_t>(i)];
  return out;
}

ClassificationTable classify(std::span<const RealFormRecord> records) {
  ClassificationTable table;
  table.rows.reserve(records.size());
  for (const RealFormRecord& rec : records) {
    ClassificationRow row;
    row.name = rec.name();
    row.type = rec.diagram.rs->label();
    row.epsilon = epsilon_sigma(rec.diagram);
    row.is_identity = row.epsilon.is_identity();
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string describe_permutation(const NodePermutation& p) {
  if (p.is_identity()) return "identity";
  std::ostringstream os;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  bool first = true;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
    std::vector<int> cycle;
    for (int j = i; j >= 0 && j < p.size() && !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
    }
    os << (first ? "" : ", ");
    first = false;
    if (cycle.size() == 2) {
      os << cycle[0] + 1 << "<->" << cycle[1] + 1;
    } else {
      os << '(';
      for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k] + 1;
      os << ')';
    }
  }
  return os.str();
}

}  // namespace satake

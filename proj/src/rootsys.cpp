#include "satake/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace satake {

std::string SimpleType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void check_simple_type(const SimpleType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid simple type " + t.label());
}

std::string to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RootVector IntMatrix::column(int j) const {
  RootVector v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(int j, const RootVector& v) {
  for (int i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

RootVector IntMatrix::apply(const RootVector& v) const {
  RootVector out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.size();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator-(IntMatrix a) {
  for (int& x : a.data_) x = -x;
  return a;
}

// ---------------------------------------------------------- NodePermutation

NodePermutation NodePermutation::identity(int n) {
  NodePermutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool NodePermutation::is_bijective() const {
  std::vector<bool> hit(image.size(), false);
  for (int j : image) {
    if (j < 0 || j >= size() || hit[static_cast<std::size_t>(j)]) return false;
    hit[static_cast<std::size_t>(j)] = true;
  }
  return true;
}

bool NodePermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool NodePermutation::is_involution() const {
  if (!is_bijective()) return false;
  for (int i = 0; i < size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

IntMatrix NodePermutation::matrix() const {
  IntMatrix m(size());
  for (int i = 0; i < size(); ++i) m((*this)(i), i) = 1;
  return m;
}

// --------------------------------------------------------------- RootSystem

namespace {

// Bourbaki Cartan matrix of one simple component, a_ij = <alpha_j, alpha_i^vee>.
IntMatrix simple_cartan(const SimpleType& t) {
  const int n = t.rank;
  IntMatrix a(n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) {  // simply laced edge between 1-based i, j
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      bond(1, 2);
      bond(3, 4);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case Family::G:  // alpha_1 short
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

std::vector<int> simple_symmetrizer(const SimpleType& t) {
  std::vector<int> d(static_cast<std::size_t>(t.rank), 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < t.rank; ++i) d[static_cast<std::size_t>(i)] = 2;
      break;
    case Family::C:
      d.back() = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

RootSystem::RootSystem(std::vector<SimpleType> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("root system needs at least one component");
  if (components_.size() > 2)
    throw std::invalid_argument("root system supports one simple component or two equal ones");
  for (const auto& t : components_) check_simple_type(t);
  if (components_.size() == 2 && !(components_[0] == components_[1]))
    throw std::invalid_argument("doubled root system needs equal components, got " + label());

  for (std::size_t c = 0; c < components_.size(); ++c) {
    offsets_.push_back(n_);
    for (int k = 0; k < components_[c].rank; ++k) component_of_.push_back(static_cast<int>(c));
    n_ += components_[c].rank;
  }
  build_cartan();
  generate_positive_roots();
}

std::string RootSystem::label() const {
  std::string s;
  for (std::size_t c = 0; c < components_.size(); ++c) s += (c ? "x" : "") + components_[c].label();
  return s;
}

void RootSystem::build_cartan() {
  cartan_ = IntMatrix(n_);
  symmetrizer_.assign(static_cast<std::size_t>(n_), 1);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const IntMatrix a = simple_cartan(components_[c]);
    const std::vector<int> d = simple_symmetrizer(components_[c]);
    const int off = offsets_[c];
    for (int i = 0; i < a.size(); ++i) {
      symmetrizer_[static_cast<std::size_t>(off + i)] = d[static_cast<std::size_t>(i)];
      for (int j = 0; j < a.size(); ++j) cartan_(off + i, off + j) = a(i, j);
    }
  }
}

// Root-string closure: for a positive root b != alpha_i, b + alpha_i is a root
// iff q = p - <b, alpha_i^vee> > 0, where p is the largest k with b - k alpha_i
// a root. All roots of smaller height are known when a layer is processed.
void RootSystem::generate_positive_roots() {
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < n_; ++i) layer.push_back(simple_root(i));
  known.insert(layer.begin(), layer.end());

  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const RootVector& b : layer) {
      for (int i = 0; i < n_; ++i) {
        if (b == simple_root(i)) continue;
        int p = 0;
        RootVector down = b;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing(b, i) > 0) {
          RootVector up = b;
          up[static_cast<std::size_t>(i)] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    known.insert(next.begin(), next.end());
    layer.assign(next.begin(), next.end());
  }

  positive_.assign(known.begin(), known.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) positive_index_[positive_[k]] = k;
}

RootVector RootSystem::simple_root(int i) const {
  check_node(i);
  RootVector v(static_cast<std::size_t>(n_));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool RootSystem::is_root(const RootVector& v) const {
  return is_positive_root(v) || is_positive_root(-v);
}

int RootSystem::pairing(const RootVector& v, int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += cartan_(i, j) * v[static_cast<std::size_t>(j)];
  return s;
}

long long RootSystem::inner(const RootVector& u, const RootVector& v) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i) {
    if (u[static_cast<std::size_t>(i)] == 0) continue;
    long long row = 0;
    for (int j = 0; j < n_; ++j) row += static_cast<long long>(cartan_(i, j)) * v[static_cast<std::size_t>(j)];
    s += static_cast<long long>(u[static_cast<std::size_t>(i)]) * symmetrizer_[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

void RootSystem::check_node(int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("node index " + std::to_string(i + 1) + " out of range for " + label());
}

RootSystem build_root_system(const std::vector<SimpleType>& types) { return RootSystem(types); }

// ------------------------------------------------------------- Weyl group

RootVector reflect_simple(const RootSystem& rs, int i, const RootVector& v) {
  rs.check_node(i);
  if (static_cast<int>(v.size()) != rs.rank()) throw std::invalid_argument("vector length mismatch");
  RootVector out = v;
  out[static_cast<std::size_t>(i)] -= rs.pairing(v, i);
  return out;
}

RootVector apply_word(const RootSystem& rs, const WeylWord& w, const RootVector& v) {
  for (int letter : w.letters) rs.check_node(letter);
  RootVector out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect_simple(rs, *it, out);
  return out;
}

IntMatrix word_matrix(const RootSystem& rs, const WeylWord& w) {
  IntMatrix m(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) m.set_column(j, apply_word(rs, w, rs.simple_root(j)));
  return m;
}

bool supported_on(const RootVector& v, const NodeSet& subset) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && !subset.count(static_cast<int>(i))) return false;
  return true;
}

// Walk 2 rho_S down to its negative: each step applies the smallest s_i,
// i in S, with positive pairing. Every step lengthens the word by one, and the
// walk stops after |Delta_S^+| steps at -2 rho_S.
WeylWord longest_element(const RootSystem& rs, const NodeSet& subset) {
  for (int i : subset) rs.check_node(i);
  RootVector v(static_cast<std::size_t>(rs.rank()));
  for (const RootVector& r : rs.positive_roots())
    if (supported_on(r, subset)) v += r;

  WeylWord w;
  for (;;) {
    int pick = -1;
    for (int i : subset)
      if (rs.pairing(v, i) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    v = reflect_simple(rs, pick, v);
    w.letters.push_back(pick);
  }
  return w;
}

std::map<int, int> induced_node_permutation(const RootSystem& rs, const NodeSet& subset) {
  const WeylWord w = longest_element(rs, subset);
  std::map<int, int> perm;
  for (int i : subset) {
    const RootVector image = -apply_word(rs, w, rs.simple_root(i));
    int target = -1;
    for (int j : subset)
      if (image == rs.simple_root(j)) target = j;
    if (target < 0)
      throw std::logic_error("-w(alpha_" + std::to_string(i + 1) + ") = " + to_string(image) +
                             " is not a simple root of the subset");
    perm[i] = target;
  }
  return perm;
}

bool is_diagram_automorphism(const RootSystem& rs, const NodePermutation& p) {
  if (p.size() != rs.rank() || !p.is_bijective()) return false;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.cartan(p(i), p(j)) != rs.cartan(i, j)) return false;
  return true;
}

}  // namespace satake

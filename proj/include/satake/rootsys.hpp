#pragma once

// Exact combinatorics of simple root systems and their Weyl groups.
//
// Conventions used throughout the library:
//   * nodes are 0-based internally, numbered per component in Bourbaki order;
//     a doubled system numbers its second component after the first;
//   * a_ij = <alpha_j, alpha_i^vee>, so that s_i(alpha_j) = alpha_j - a_ij alpha_i;
//   * roots live in the simple-root basis, weights in the fundamental-weight
//     basis, both as plain integer vectors.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Throws std::invalid_argument naming the type if the rank is out of range
/// for the family (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2).
void check_simple_type(const SimpleType& t);

/// Integer vector with a tag so that roots and weights do not mix.
template <class Tag>
struct IntVector {
  std::vector<int> coords;

  IntVector() = default;
  explicit IntVector(std::size_t n) : coords(n, 0) {}
  explicit IntVector(std::vector<int> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }
  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }

  IntVector& operator+=(const IntVector& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator-(IntVector a) {
    for (int& c : a.coords) c = -c;
    return a;
  }
  friend IntVector operator*(int k, IntVector a) {
    for (int& c : a.coords) c *= k;
    return a;
  }
  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;
};

struct RootTag {};
struct WeightTag {};
using RootVector = IntVector<RootTag>;
using Weight = IntVector<WeightTag>;

std::string to_string(const std::vector<int>& v);
template <class Tag>
std::string to_string(const IntVector<Tag>& v) {
  return to_string(v.coords);
}

/// Square integer matrix. When it represents a linear map of the root
/// lattice, column j holds the image of alpha_j.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  RootVector column(int j) const;
  void set_column(int j, const RootVector& v);
  RootVector apply(const RootVector& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(IntMatrix a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

/// Sequence of simple-reflection indices. The word (i1, ..., ik) denotes
/// s_i1 ... s_ik, so the rightmost letter acts first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

struct NodePermutation {
  std::vector<int> image;

  static NodePermutation identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  bool is_bijective() const;
  bool is_identity() const;
  bool is_involution() const;
  /// Matrix of the induced linear map on coordinates: e_i -> e_{p(i)}.
  IntMatrix matrix() const;
  friend bool operator==(const NodePermutation&, const NodePermutation&) = default;
};

using NodeSet = std::set<int>;

class RootSystem {
 public:
  explicit RootSystem(std::vector<SimpleType> components);

  const std::vector<SimpleType>& components() const { return components_; }
  int rank() const { return n_; }
  /// "A3", or "A1xA1" for a doubled system.
  std::string label() const;

  int cartan(int i, int j) const { return cartan_(i, j); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }

  int component_of(int node) const { return component_of_[static_cast<std::size_t>(node)]; }
  int component_offset(int c) const { return offsets_[static_cast<std::size_t>(c)]; }

  RootVector simple_root(int i) const;
  bool is_positive_root(const RootVector& v) const { return positive_index_.count(v) != 0; }
  bool is_root(const RootVector& v) const;

  /// <v, alpha_i^vee>.
  int pairing(const RootVector& v, int i) const;
  /// W-invariant symmetric form (alpha_i, alpha_j) = d_i a_ij.
  long long inner(const RootVector& u, const RootVector& v) const;

  void check_node(int i) const;

 private:
  void build_cartan();
  void generate_positive_roots();

  std::vector<SimpleType> components_;
  int n_ = 0;
  std::vector<int> offsets_;
  std::vector<int> component_of_;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<RootVector> positive_;
  std::map<RootVector, std::size_t> positive_index_;
};

/// Builds the root system of a simple type, or of two copies of the same
/// simple type. Throws std::invalid_argument on a bad rank or component list.
RootSystem build_root_system(const std::vector<SimpleType>& types);

RootVector reflect_simple(const RootSystem& rs, int i, const RootVector& v);
RootVector apply_word(const RootSystem& rs, const WeylWord& w, const RootVector& v);
IntMatrix word_matrix(const RootSystem& rs, const WeylWord& w);

/// Reduced word of the longest element of the parabolic subgroup W_S.
WeylWord longest_element(const RootSystem& rs, const NodeSet& subset);

/// alpha -> -w_S(alpha) on S, where w_S is the longest element of W_S.
/// Throws std::logic_error if some image fails to be a simple root of S.
std::map<int, int> induced_node_permutation(const RootSystem& rs, const NodeSet& subset);

bool is_diagram_automorphism(const RootSystem& rs, const NodePermutation& p);

/// True iff every coordinate of v outside `subset` is zero.
bool supported_on(const RootVector& v, const NodeSet& subset);

}  // namespace satake

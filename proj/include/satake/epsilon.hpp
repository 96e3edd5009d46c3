#pragma once

// The diagram automorphism eps attached to a Satake diagram and the data
// derived from it: the dual Cartan involution theta^T, the coefficients
// c_{alpha gamma}, restricted roots and the induced action on weights.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "satake/rootsys.hpp"
#include "satake/satake.hpp"

namespace satake {

/// eps = -w_black on black nodes and omega on white nodes.
NodePermutation epsilon_sigma(const SatakeDiagram& d);

struct ThetaTranspose {
  /// Column i holds theta^T(alpha_i) in the simple-root basis.
  IntMatrix matrix;
};

/// theta^T = -w_black * eps. Throws DiagramError if the result is not an
/// involution of the root system.
ThetaTranspose theta_transpose(const SatakeDiagram& d);

/// white alpha -> (black gamma -> c), with theta^T(alpha) = -omega(alpha) - sum c gamma.
using CCoefficients = std::map<int, std::map<int, int>>;
CCoefficients c_coefficients(const SatakeDiagram& d);

/// Restricted roots rho(gamma) = (gamma - theta^T gamma) / 2. Vectors are stored
/// doubled, i.e. as gamma - theta^T gamma, to stay integral.
struct RestrictedRootData {
  std::vector<RootVector> sigma_plus;
  std::map<RootVector, int> multiplicities;
  std::vector<RootVector> base;
  /// "A2", "BC1", "C2xC2", ... or "" when Sigma is empty.
  std::string type_label;

  static constexpr int kScale = 2;
};

RestrictedRootData restricted_roots(const SatakeDiagram& d);

/// Names the root system spanned by doubled restricted vectors with simple
/// system `base` and positive part `sigma_plus`.
std::string restricted_type_label(const RootSystem& rs, const std::vector<RootVector>& base,
                                  const std::vector<RootVector>& sigma_plus);

/// Permutes fundamental-weight coordinates by eps.
Weight act_on_weight(const SatakeDiagram& d, const Weight& w);

struct ClassificationRow {
  std::string name;
  std::string type;
  NodePermutation epsilon;
  bool is_identity = false;
};

struct ClassificationTable {
  std::vector<ClassificationRow> rows;
};

ClassificationTable classify(std::span<const RealFormRecord> records);

/// "identity", or the nontrivial orbits as "1<->6, 3<->5" (1-based).
std::string describe_permutation(const NodePermutation& p);

namespace detail {
// Unchecked variants used by validate(); they only need the black/white
// partition and a total omega on white nodes.
NodePermutation epsilon_unchecked(const SatakeDiagram& d);
IntMatrix theta_unchecked(const SatakeDiagram& d);
}  // namespace detail

}  // namespace satake

#pragma once

// Existence and uniqueness of sigma-equivariant real structures on a
// spherical homogeneous space G/H and on its wonderful completion, decided
// symbolically from the Satake diagram of sigma and two flags on H.
//
// The engine only reports implications that are proved; eps != id never
// yields a negative answer, only "unknown".

#include <string>
#include <string_view>
#include <vector>

#include "satake/satake.hpp"

namespace satake {

struct SubgroupHypotheses {
  bool spherical = false;
  bool self_normalizing = false;
};

// Enumerators are declared weakest first; comparisons follow that order.
enum class Conjugacy { Unknown, HypothesisRequired, Guaranteed };
enum class HomogeneousStructure { Unknown, NotGuaranteed, ExistsUnique };
enum class CompletionStructure { Unknown, NotApplicable, ExistsUniqueStructure };

std::string_view to_string(Conjugacy c);
std::string_view to_string(HomogeneousStructure s);
std::string_view to_string(CompletionStructure s);

struct StructureVerdict {
  Conjugacy conjugacy_of_sigma_H = Conjugacy::Unknown;
  bool mu0_exists = false;
  HomogeneousStructure real_structure_on_GH = HomogeneousStructure::Unknown;
  CompletionStructure wonderful_completion = CompletionStructure::Unknown;
  std::vector<std::string> citations;
  std::vector<std::string> caveats;
};

/// Throws DiagramError for an invalid diagram.
StructureVerdict real_structure_verdict(const SatakeDiagram& d, const SubgroupHypotheses& h);

/// True iff every field of `strong` is at least as strong as in `weak`.
bool at_least_as_strong(const StructureVerdict& strong, const StructureVerdict& weak);

}  // namespace satake

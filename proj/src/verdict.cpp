#include "satake/verdict.hpp"

#include "satake/epsilon.hpp"

namespace satake {

std::string_view to_string(Conjugacy c) {
  switch (c) {
    case Conjugacy::Guaranteed: return "guaranteed";
    case Conjugacy::HypothesisRequired: return "hypothesis-required";
    case Conjugacy::Unknown: break;
  }
  return "unknown";
}

std::string_view to_string(HomogeneousStructure s) {
  switch (s) {
    case HomogeneousStructure::ExistsUnique: return "exists-unique";
    case HomogeneousStructure::NotGuaranteed: return "not-guaranteed";
    case HomogeneousStructure::Unknown: break;
  }
  return "unknown";
}

std::string_view to_string(CompletionStructure s) {
  switch (s) {
    case CompletionStructure::ExistsUniqueStructure: return "exists-unique-structure";
    case CompletionStructure::NotApplicable: return "not-applicable";
    case CompletionStructure::Unknown: break;
  }
  return "unknown";
}

namespace {

constexpr const char* kSemisimpleScope =
    "conclusions cover connected complex semisimple G only";

}  // namespace

StructureVerdict real_structure_verdict(const SatakeDiagram& d, const SubgroupHypotheses& h) {
  const bool eps_trivial = epsilon_sigma(d).is_identity();
  StructureVerdict v;

  if (!eps_trivial) {
    v.citations = {"Sec6-example"};
    v.caveats = {
        "eps_sigma != id: the sufficient condition fails and nothing is concluded either way",
        "the condition eps_sigma = id is essential: for SL(2,C) x SL(2,C) acting on CP^2 x CP^2 the "
        "G-stable divisors are interchanged by mu and are not mu-stable",
    };
    return v;
  }

  if (!h.spherical) {
    v.conjugacy_of_sigma_H = Conjugacy::HypothesisRequired;
    v.citations = {"Thm2.1"};
    v.caveats = {
        "H not known to be spherical: conjugacy of sigma(H) and H must be established separately",
        "if sigma(H) = aHa^-1 for some a in G and H is self-normalizing, a sigma-equivariant real "
        "structure on G/H exists and is unique",
        kSemisimpleScope,
    };
    return v;
  }

  v.conjugacy_of_sigma_H = Conjugacy::Guaranteed;
  v.mu0_exists = true;
  if (h.self_normalizing) {
    v.real_structure_on_GH = HomogeneousStructure::ExistsUnique;
    v.wonderful_completion = CompletionStructure::ExistsUniqueStructure;
    v.citations = {"Thm1.1", "Thm1.2"};
    v.caveats = {kSemisimpleScope};
  } else {
    v.real_structure_on_GH = HomogeneousStructure::NotGuaranteed;
    v.wonderful_completion = CompletionStructure::NotApplicable;
    v.citations = {"Thm1.1"};
    v.caveats = {
        "mu0 may fail to be involutive when H is not self-normalizing; it is well defined, "
        "antiholomorphic and sigma-equivariant",
        "the wonderful completion is only guaranteed for self-normalizing H",
        kSemisimpleScope,
    };
  }
  return v;
}

bool at_least_as_strong(const StructureVerdict& strong, const StructureVerdict& weak) {
  return strong.conjugacy_of_sigma_H >= weak.conjugacy_of_sigma_H && strong.mu0_exists >= weak.mu0_exists &&
         strong.real_structure_on_GH >= weak.real_structure_on_GH &&
         strong.wonderful_completion >= weak.wonderful_completion;
}

}  // namespace satake

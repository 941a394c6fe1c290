#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "lpgn/cyclic.hpp"
#include "lpgn/exponent.hpp"
#include "lpgn/pnorm.hpp"

namespace lpgn {

struct GroupDescriptor {
  enum class Kind { trivial, cyclic_finite, integers };

  Kind kind = Kind::trivial;
  std::size_t n = 1;  ///< order for cyclic_finite, unused otherwise
  bool abelian = true;

  static GroupDescriptor trivial();
  /// Z_n with n >= 2.
  static GroupDescriptor cyclic(std::size_t n);
  static GroupDescriptor integers();

  /// "trivial", "Z", "Z<n>"; Z1 maps to the trivial group.
  static GroupDescriptor parse(std::string_view text);
  std::string name() const;
};

/// Whether F^p(G) is isometrically representable on an L^q-space. q must
/// exceed 1 (OutOfScopeError otherwise); p and q must be finite.
bool representable(const GroupDescriptor& g, const Exponent& p, const Exponent& q);

/// Whether F^p(G) and F^q(G) are isometrically isomorphic.
bool isomorphic_group_algebras(const GroupDescriptor& g, const Exponent& p, const Exponent& q);

struct WitnessOptions {
  int trials = 64;  ///< random candidates on top of the two fixed ones
  std::uint64_t seed = 0;
  NormBudget budget;
  bool unimodular_only = true;
};

struct Witness {
  GroupDescriptor group;
  CyclicElement element;
  Exponent p;
  Exponent q;
  NormEstimate at_p;
  NormEstimate at_q;
  /// Certified separation of the two intervals, 0 if they overlap.
  double gap_lower = 0.0;
};

/// Searches Gelfand vectors on Z_n for one whose F^p and F^q norms provably
/// differ. Candidates: (1, i, 1, i, …), (i^j)_j, then seeded random ones.
/// Throws ValidationError when the exponents satisfy the isomorphism condition.
Witness witness_search(const GroupDescriptor& g, const Exponent& p, const Exponent& q,
                       const WitnessOptions& opts = {});

}  // namespace lpgn

#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sigtree/errors.hpp"
#include "sigtree/sequence.hpp"

namespace sigtree {

struct ValidityReport {
  /// sum_{i<=j} s_i > j+1 for every j < horizon.
  bool valid_on_prefix = false;
  /// The condition holds for every j, by an exact argument on the
  /// descriptor.
  bool proven_forever = false;
  /// Smallest j < horizon where the condition fails.
  std::optional<std::size_t> first_violation;
};

/// Smallest j with sum_{i<=j} s_i <= j+1, if any.
std::optional<std::size_t> first_violation(std::span<const std::uint64_t> s);

/// Checks the partial-sum condition on the first `horizon` terms and tries
/// to prove it for the whole sequence. Periodic u.v^omega is proven when the
/// condition holds through |u|+|v| terms and sum(v) >= |v|. A substitutive
/// descriptor is proven when its morphism is prolongable and the coding
/// dominates the image lengths letterwise.
ValidityReport check_valid(const IntSeq& s, std::size_t horizon);

/// Exact mean of v. Throws ArgumentError on an empty v.
Rational growth_ratio(std::span<const std::uint64_t> v);

}  // namespace sigtree

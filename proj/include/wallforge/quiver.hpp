#pragma once

#include <string>
#include <vector>

#include "wallforge/stability.hpp"

namespace wallforge {

/// Multiplicities (n0, n1, n2) of the generators O(k-2)[2], O(k-1)[1], O(k)
/// and the region index k.  Genuine complexes have nonnegative entries;
/// raw conversion can produce negatives and reports them (nonnegative()).
struct DimensionVector {
  Int n0;
  Int n1;
  Int n2;
  Int k;

  bool nonnegative() const { return n0 >= 0 && n1 >= 0 && n2 >= 0; }

  /// Validating constructor for genuine dimension vectors.
  static DimensionVector checked(Int n0, Int n1, Int n2, Int k);

  bool operator==(const DimensionVector&) const = default;
};

/// Chern classes to dimension vector via the matrix
///   [ k(k-1)/2   -(2k-1)/2   1 ]
///   [ k(k-2)     -(2k-2)     2 ]
///   [ (k-1)(k-2)/2  -(2k-3)/2  1 ]
/// Throws non_integral when any entry is fractional (v is not the class of a
/// complex in the category at k).
DimensionVector to_dimension_vector(const ChernChar& v, const Int& k);

/// Exact inverse: n2 ch O(k) - n1 ch O(k-1) + n0 ch O(k-2).
ChernChar from_dimension_vector(const DimensionVector& n);

/// All k with (s - (k-1))^2 + t^2 < 1, decided exactly; 0, 1 or 2 values,
/// ascending.
std::vector<Int> quiver_regions_containing(const StabPoint& p);

std::string to_string(const DimensionVector& n);

}  // namespace wallforge

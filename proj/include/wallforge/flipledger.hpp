#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallforge/walls.hpp"

namespace wallforge {

/// ch of the generic rank-1 destabilizer I_W((d-3)/2 + i) with
/// |W| = ell + i(d+i)/2:  (1, (d-3)/2 + i, ((d-3)/2 + i)^2/2 - |W|).
/// Throws negative_length when |W| < 0.
ChernChar candidate_class(const Int& d, const Int& ell, const Int& i);

/// ch of the complementary quotient in a generic destabilizing sequence:
/// the dual of the length-|Y| member at twist offset -i, |Y| = ell - i(d-i)/2.
/// candidate_class(d, ell, i) + partner_class(d, ell, i) = (0, d, -3d/2).
ChernChar partner_class(const Int& d, const Int& ell, const Int& i);

enum class VanishingReason { BEL, StabilitySchur };

/// Named vanishing hypotheses under which an Ext^1 dimension follows from
/// the Euler pairing alone.
struct VanishingAssumptions {
  bool hom_vanishes = false;
  bool ext2_vanishes = false;
  std::optional<VanishingReason> reason;

  static VanishingAssumptions full(VanishingReason why) { return {true, true, why}; }

  bool operator==(const VanishingAssumptions&) const = default;
};

struct ExtDim {
  std::optional<Int> dim;                   // empty = unknown
  std::vector<std::string> assumption_tags; // echoed provenance

  bool operator==(const ExtDim&) const = default;
};

/// dim Ext^1(B, A) = -chi(b, a) when Hom and Ext^2 are assumed to vanish;
/// unknown otherwise.  The assumption names are echoed into the result so
/// that no dimension is ever reported without its provenance.
ExtDim ext1_dim_via_euler(const ChernChar& b, const ChernChar& a,
                          const VanishingAssumptions& assumptions);

enum class RecordRole { Flip, Divisorial, Collapsing, Candidate };

/// One exceptional-locus component at a wall: a sub/quotient splitting of
/// the total class with, when computable, the dimensions of the two
/// extension spaces and of the projectivized fibers above and below the
/// wall, plus the symbolic base of the family.
struct LocusComponent {
  ChernChar sub;
  ChernChar quot;
  std::optional<Int> ext1_above;      // dim Ext^1(quot, sub)
  std::optional<Int> ext1_below;      // dim Ext^1(sub, quot)
  std::optional<Int> fiber_dim_above; // dim P(Ext^1(quot, sub)) = ext1_above - 1
  std::optional<Int> fiber_dim_below;
  std::string base_label;
  std::optional<Int> base_dim;
  std::vector<std::string> assumptions;

  bool operator==(const LocusComponent&) const = default;
};

struct LocusRecord {
  RecordRole role = RecordRole::Flip;
  Wall wall;
  std::vector<DestabilizerCandidate> candidates;
  std::vector<LocusComponent> components;
  std::vector<std::string> notes;
  std::optional<std::string> model_annotation;

  bool operator==(const LocusRecord&) const = default;
};

/// The full wall sequence for v = (0, d, -3d/2), outermost first: one record
/// per rank-1 flip wall with its components and duality pairing, then the
/// divisorial theta record, then the collapsing record, with higher-rank
/// numerical candidate walls (up to max_rank; pass 0 for the default bound)
/// interleaved by radius.  Candidates sharing a circle with a rank-1 wall
/// merge into that wall's record.
std::vector<LocusRecord> build_ledger(const Int& d, const Int& max_rank = 0);

}  // namespace wallforge

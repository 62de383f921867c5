#pragma once

#include <utility>
#include <vector>

#include "wallforge/stability.hpp"

namespace wallforge {

enum class WallKind { Semicircle, VerticalLine, Empty, DegenerateAll };

enum class WallTag {
  Divisorial,         // crossing contracts a divisor (the theta wall)
  Collapsing,         // innermost wall; moduli empty below
  Rank0Pseudostable,  // total class has rank 0: wall statements are in the
                      // pseudo-stable sense
};

/// Potential wall: the locus where a subclass and a total class have equal
/// slope.  Radii are carried only as radius^2; square roots never
/// materialize.  Geometric identity is (kind, center, radius_sq) /
/// (kind, line_s); the producing pair is an annotation.
struct Wall {
  WallKind kind = WallKind::Empty;
  Rational center = 0;     // Semicircle (and the Empty circle it normalized from)
  Rational radius_sq = 0;  // > 0 for Semicircle; <= 0 diagnostic value for Empty
  Rational line_s = 0;     // VerticalLine only
  std::pair<ChernChar, ChernChar> pair;  // (sub, total)
  std::vector<WallTag> tags;

  bool operator==(const Wall&) const = default;
};

/// Wall of the pair A -> E from the 2x2 minors of their invariant rows.
/// With D_rc = a0 e1 - e0 a1, D_rd = a0 e2 - e0 a2, D_cd = a1 e2 - e1 a2:
/// D_rc != 0 gives the semicircle of center D_rd/D_rc and radius_sq
/// center^2 - 2 D_cd/D_rc (normalized to Empty when radius_sq <= 0);
/// D_rc = 0, D_rd != 0 gives the vertical line s = D_cd/D_rd; all three
/// vanishing means the classes are proportional (DegenerateAll).  The locus
/// is exactly where compare_slopes(a, e, .) is equal.
Wall wall_from_pair(const ChernChar& a, const ChernChar& e);

enum class WallSide { ABelow, OnWall, AAbove };

/// Sign of mu(a) - mu(e) at p.  OnWall exactly on the wall locus.  Throws
/// degenerate_wall for proportional pairs; slope errors propagate.
WallSide side_of_wall(const ChernChar& a, const ChernChar& e, const StabPoint& p);

/// radius^2 = 1/4 + 2 chi / r for a rank-r, Euler-characteristic-chi
/// destabilizer of (0, d, -3d/2); agrees with wall_from_pair for every such
/// pair (the d in the total class cancels).
Rational radius_sq_from_rank_chi(const Int& r, const Int& chi);

/// Closed integer interval; empty when lo > hi.
struct IntInterval {
  Int lo;
  Int hi;

  bool empty() const { return lo > hi; }
  bool operator==(const IntInterval&) const = default;
};

/// Euler characteristics of rank-r destabilizers of (0, d, -3d/2) producing
/// a flip wall: the integer solutions of 3/2 < sqrt(1/4 + 2 chi/r) <= d/(2r),
/// i.e. { chi : r < chi <= (d^2 - r^2)/(8r) }.
IntInterval flip_chi_range(const Int& d, const Int& r);

/// First Chern classes of rank-1 destabilizers with chi = (d^2-1)/8 - ell:
/// integers c with sqrt(d^2/4 - 2 ell) - 3/2 <= c <= -3/2 + d - sqrt(...),
/// decided by sign-aware squared comparisons (endpoints included).  Throws
/// negative_radicand when d^2 - 8 ell < 0.
std::vector<Int> rank1_c1_solutions(const Int& d, const Int& ell);

enum class Actuality { CertifiedRank1, NumericalCandidate };

/// Numerical destabilizer record.  The (ell, i, len_w, len_y) block is
/// meaningful only for the rank-1 twisted-ideal-sheaf family
/// I_W((d-3)/2 + i), |W| = ell + i(d+i)/2; it is zero on higher-rank
/// candidates.
struct DestabilizerCandidate {
  ChernChar cls;
  Int rank = 1;
  Int chi = 0;
  Int ell = 0;
  Int i = 0;
  Int len_w = 0;
  Int len_y = 0;
  Rational radius_sq = 0;
  Actuality actuality = Actuality::NumericalCandidate;

  bool operator==(const DestabilizerCandidate&) const = default;
};

struct WallWithCandidates {
  Wall wall;
  std::vector<DestabilizerCandidate> candidates;

  bool operator==(const WallWithCandidates&) const = default;
};

/// All rank-1 flip walls for v = (0, d, -3d/2), d odd >= 5: one wall per
/// ell = 0, 1, ... with center -3/2 and radius_sq = d^2/4 - 2 ell, ordered
/// by strictly decreasing radius_sq.  Exactly (d^2 - 9)/8 walls; each
/// carries its admissible twisted-ideal-sheaf candidates, all certified.
std::vector<WallWithCandidates> enumerate_rank1_walls(const Int& d);

/// Exhaustive flip-destabilizer search for v = (0, d, -3d/2) over ranks
/// 1..max_rank.  For each admissible (r, chi) the first Chern class c' runs
/// over the integers with -3/2 + R <= c'/r <= -3/2 + d/r - R (squared
/// comparisons, non-strict endpoints) and ch2 is forced by chi; candidates
/// violating 2 r ch2 <= c'^2 (Bogomolov with equality, so that line bundles
/// survive) are dropped.  Rank 1 entries are certified, higher ranks are
/// reported as numerical candidates only.  Ordered by radius_sq descending,
/// then rank, then c'.
std::vector<DestabilizerCandidate> enumerate_flip_candidates(const Int& d, const Int& max_rank);

/// Largest rank a flip destabilizer can have: combining R > 3/2 with
/// R <= d/(2r) forces r < d/3.
Int default_max_rank(const Int& d);

/// (W_Theta, W_C) for v = (0, d, -3d/2): the divisorial wall produced by O
/// (radius_sq 9/4) and the collapsing wall produced by O(-1) (radius_sq
/// 1/4), both centered at -3/2 independently of d.
std::pair<Wall, Wall> special_walls(const Int& d);

/// Image of a wall under the duality action s |-> -s - 3: centers and
/// vertical lines reflect about -3/2, radius_sq is preserved, and the stored
/// pair becomes (dualize(total - sub), dualize(total)) -- the dual of the
/// quotient includes into the dual of the total class.  Involution.  Throws
/// degenerate_wall on DegenerateAll.
Wall reflect_wall(const Wall& w);

}  // namespace wallforge

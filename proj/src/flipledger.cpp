#include "wallforge/flipledger.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "wallforge/quiver.hpp"

namespace wallforge {

namespace {

void require_odd_d(const Int& d) {
  if (d < 5 || d % 2 == 0)
    fail(Errc::invalid_argument, "d must be odd and >= 5, got " + d.str());
}

std::string hilb_factor(const Int& n) {
  if (n == 1) return "P^2";
  return "Hilb^" + n.str();
}

std::string hilb_base_label(const Int& len_w, const Int& len_y) {
  if (len_w == 0 && len_y == 0) return "point";
  if (len_w == 0) return hilb_factor(len_y);
  if (len_y == 0) return hilb_factor(len_w);
  return hilb_factor(len_w) + " x " + hilb_factor(len_y);
}

LocusComponent make_component(const ChernChar& sub, const ChernChar& quot,
                              const VanishingAssumptions& assumptions) {
  LocusComponent comp;
  comp.sub = sub;
  comp.quot = quot;
  const ExtDim above = ext1_dim_via_euler(quot, sub, assumptions);
  const ExtDim below = ext1_dim_via_euler(sub, quot, assumptions);
  comp.ext1_above = above.dim;
  comp.ext1_below = below.dim;
  if (above.dim) comp.fiber_dim_above = *above.dim - 1;
  if (below.dim) comp.fiber_dim_below = *below.dim - 1;
  comp.assumptions = above.assumption_tags;
  return comp;
}

}  // namespace

ChernChar candidate_class(const Int& d, const Int& ell, const Int& i) {
  require_odd_d(d);
  if (ell < 0) fail(Errc::invalid_argument, "ell must be >= 0");
  const Int len_w = ell + i * (d + i) / 2;
  if (len_w < 0)
    fail(Errc::negative_length, "length(W) = ell + i(d+i)/2 = " + len_w.str() + " is negative");
  const Int c = (d - 3) / 2 + i;
  return twist(ChernChar::ideal_sheaf(len_w), c);
}

ChernChar partner_class(const Int& d, const Int& ell, const Int& i) {
  return dualize(candidate_class(d, ell, -i));
}

ExtDim ext1_dim_via_euler(const ChernChar& b, const ChernChar& a,
                          const VanishingAssumptions& assumptions) {
  ExtDim out;
  if (assumptions.hom_vanishes) out.assumption_tags.emplace_back("HOM_VANISHES");
  if (assumptions.ext2_vanishes) out.assumption_tags.emplace_back("EXT2_VANISHES");
  if (assumptions.reason)
    out.assumption_tags.emplace_back(*assumptions.reason == VanishingReason::BEL
                                         ? "BEL"
                                         : "STABILITY_SCHUR");
  if (!assumptions.hom_vanishes || !assumptions.ext2_vanishes) return out;
  out.dim = to_int_exact(-euler_pairing(b, a));
  return out;
}

std::vector<LocusRecord> build_ledger(const Int& d, const Int& max_rank) {
  require_odd_d(d);
  const Int rank_bound = max_rank >= 1 ? max_rank : default_max_rank(d);
  const ChernChar v = ChernChar::one_dimensional(d, 0);
  const Int half = (d - 3) / 2;
  const VanishingAssumptions bel = VanishingAssumptions::full(VanishingReason::BEL);

  std::vector<LocusRecord> records;

  // Rank-1 flip walls, outermost first.
  for (auto& [wall, cands] : enumerate_rank1_walls(d)) {
    LocusRecord rec;
    rec.role = RecordRole::Flip;
    rec.wall = wall;
    rec.candidates = cands;
    const Int ell = cands.front().ell;
    for (const DestabilizerCandidate& cand : cands) {
      LocusComponent comp = make_component(cand.cls, v - cand.cls, bel);
      comp.base_label = hilb_base_label(cand.len_w, cand.len_y);
      comp.base_dim = 2 * (cand.len_w + cand.len_y);
      rec.components.push_back(std::move(comp));
    }
    if (ell >= 1) {
      const std::string sec = "Sec^" + Int(ell - 1).str();
      if (2 * ell < d - 1) {
        rec.notes.push_back("induced transformation of the fixed linear series: exceptional locus"
                            " is the strict transform of " +
                            sec + " of the Veronese surface (no dimension asserted)");
      } else {
        rec.notes.push_back("exceptional locus is reducible; the middle component meets the fixed"
                            " linear series along the strict transform of " +
                            sec + " of the Veronese surface (no dimension asserted)");
        rec.notes.push_back("triple intersections are configurations of (ell-1)-planes through ell"
                            " points, i(d-i)/2 of them on a degree-i curve; recorded as text only");
      }
    }
    records.push_back(std::move(rec));
  }

  // Higher-rank numerical candidates, merged by circle into existing records
  // or interleaved as their own.
  std::map<Rational, std::vector<DestabilizerCandidate>, std::greater<Rational>> extra;
  for (DestabilizerCandidate& cand : enumerate_flip_candidates(d, rank_bound)) {
    if (cand.rank == 1) continue;  // already covered above
    extra[cand.radius_sq].push_back(std::move(cand));
  }
  for (auto& [rsq, cands] : extra) {
    auto hit = std::find_if(records.begin(), records.end(), [&](const LocusRecord& r) {
      return r.wall.kind == WallKind::Semicircle && r.wall.radius_sq == rsq;
    });
    if (hit != records.end()) {
      hit->candidates.insert(hit->candidates.end(), cands.begin(), cands.end());
      hit->notes.push_back("higher-rank numerical candidates share this circle; not certified");
      continue;
    }
    LocusRecord rec;
    rec.role = RecordRole::Candidate;
    rec.wall.kind = WallKind::Semicircle;
    rec.wall.center = Rational(-3, 2);
    rec.wall.radius_sq = rsq;
    rec.wall.pair = {cands.front().cls, v};
    rec.wall.tags.push_back(WallTag::Rank0Pseudostable);
    rec.candidates = std::move(cands);
    rec.notes.push_back("numerical candidate wall (rank >= 2): admissible invariants exist but no"
                        " destabilizing object is certified");
    records.push_back(std::move(rec));
  }

  const auto [theta, collapsing] = special_walls(d);

  // Theta wall: divisorial contraction of the locus of sheaves with a
  // section.  Recorded with the section component and its dual partner.
  {
    LocusRecord rec;
    rec.role = RecordRole::Divisorial;
    rec.wall = theta;
    const Int n = d * (d - 3) / 2;
    const ChernChar sub(1, d - 3, Rational(9 - 3 * d, 2));  // = ch I_Z(d-3), |Z| = n
    const ChernChar quot = v - sub;                         // = ch O(-3)[1]
    LocusComponent main;
    main.sub = sub;
    main.quot = quot;
    main.base_label = "model of Hilb^" + n.str() + " twisted by O(" + Int(d - 3).str() + ")";
    main.base_dim = 2 * n;
    rec.components.push_back(std::move(main));
    LocusComponent section;  // dual partner: O includes into the theta sheaves
    section.sub = dualize(quot);
    section.quot = dualize(sub);
    section.base_label = "theta divisor (sheaves with a nonzero section)";
    rec.components.push_back(std::move(section));
    rec.notes.push_back("chi of the length-" + n.str() + " ideal component is 1; n = d(d-3)/2");
    rec.notes.push_back("the recorded intersection is not exactly the contracted locus: earlier"
                        " flips may have replaced some of these objects");
    const ChernChar below(0, half, Rational(-(d - 3) * (d + 9), 8));
    rec.notes.push_back("below the wall the new objects are strictly semistable extensions of a"
                        " class pair A, A-dual with ch(A) = " +
                        to_string(below));
    records.push_back(std::move(rec));
  }

  // Collapsing wall: the moduli space contracts to a point and is empty
  // below.  The component is the self-dual splitting d O(-1), d O(-2)[1].
  {
    LocusRecord rec;
    rec.role = RecordRole::Collapsing;
    rec.wall = collapsing;
    LocusComponent comp;
    comp.sub = d * ChernChar::line_bundle(-1);
    comp.quot = v - comp.sub;
    comp.base_label = "point";
    comp.base_dim = 0;
    rec.components.push_back(std::move(comp));
    const DimensionVector dims = to_dimension_vector(v, -1);
    rec.model_annotation = "N(3," + d.str() + "," + d.str() + ")";
    rec.notes.push_back("dimension vector at k = -1 is (" + to_string(dims) +
                        "): semistable maps between d copies of O(-2) and of O(-1)");
    rec.notes.push_back("quiver polarization sign pattern (-theta, theta): theta > 0 above this"
                        " wall, 0 on it, < 0 below; the polarization vector itself is not modeled");
    rec.notes.push_back("moduli space on the wall is a single point; empty below");
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(), [](const LocusRecord& a, const LocusRecord& b) {
    return a.wall.radius_sq > b.wall.radius_sq;
  });
  return records;
}

}  // namespace wallforge

#include "wallforge/walls.hpp"

#include <algorithm>
#include <tuple>

namespace wallforge {

namespace {

struct Minors {
  Rational rc;
  Rational rd;
  Rational cd;
};

Minors minors(const ChernChar& a, const ChernChar& e) {
  return {Rational(a.ch0 * e.ch1 - e.ch0 * a.ch1), a.ch0 * e.ch2 - e.ch0 * a.ch2,
          a.ch1 * e.ch2 - e.ch1 * a.ch2};
}

void require_odd_d(const Int& d, const Int& min) {
  if (d < min || d % 2 == 0)
    fail(Errc::invalid_argument, "d must be odd and >= " + min.str() + ", got " + d.str());
}

void push_unique(std::vector<WallTag>& tags, WallTag t) {
  if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
}

std::tuple<Int, Int, Rational> candidate_sort_key(const DestabilizerCandidate& c) {
  return {c.rank, c.cls.ch1, c.cls.ch2};
}

}  // namespace

Wall wall_from_pair(const ChernChar& a, const ChernChar& e) {
  const Minors m = minors(a, e);
  Wall w;
  w.pair = {a, e};
  if (e.ch0 == 0) w.tags.push_back(WallTag::Rank0Pseudostable);
  if (m.rc != 0) {
    w.center = m.rd / m.rc;
    w.radius_sq = w.center * w.center - 2 * m.cd / m.rc;
    w.kind = w.radius_sq > 0 ? WallKind::Semicircle : WallKind::Empty;
  } else if (m.rd != 0) {
    w.kind = WallKind::VerticalLine;
    w.line_s = m.cd / m.rd;
  } else if (m.cd != 0) {
    w.kind = WallKind::Empty;  // equation reduces to a nonzero constant
  } else {
    w.kind = WallKind::DegenerateAll;  // proportional classes
  }
  return w;
}

WallSide side_of_wall(const ChernChar& a, const ChernChar& e, const StabPoint& p) {
  const Minors m = minors(a, e);
  if (m.rc == 0 && m.rd == 0 && m.cd == 0)
    fail(Errc::degenerate_wall, "proportional pair: slopes agree on the whole half-plane");
  const auto order = compare_slopes(a, e, p);
  if (order == std::strong_ordering::less) return WallSide::ABelow;
  if (order == std::strong_ordering::greater) return WallSide::AAbove;
  return WallSide::OnWall;
}

Rational radius_sq_from_rank_chi(const Int& r, const Int& chi) {
  return Rational(1, 4) + Rational(2 * chi, r);
}

IntInterval flip_chi_range(const Int& d, const Int& r) {
  return {r + 1, floor_div(d * d - r * r, 8 * r)};
}

std::vector<Int> rank1_c1_solutions(const Int& d, const Int& ell) {
  require_odd_d(d, 5);
  if (ell < 0) fail(Errc::invalid_argument, "ell must be >= 0");
  const Int radicand = d * d - 8 * ell;  // (2R)^2 where R is the wall radius
  if (radicand < 0)
    fail(Errc::negative_radicand, "no wall: d^2/4 - 2*ell < 0 for ell = " + ell.str());
  std::vector<Int> out;
  // c + 3/2 >= sqrt(d^2/4 - 2 ell)  <=>  2c+3 > 0 and (2c+3)^2 >= d^2 - 8 ell,
  // and symmetrically for the upper endpoint.
  for (Int c = floor_div(-3, 2); c <= d; ++c) {
    const Int lo = 2 * c + 3;
    const Int hi = 2 * (d - c) - 3;
    if (lo > 0 && lo * lo >= radicand && hi > 0 && hi * hi >= radicand) out.push_back(c);
  }
  return out;
}

std::vector<WallWithCandidates> enumerate_rank1_walls(const Int& d) {
  require_odd_d(d, 5);
  const ChernChar total = ChernChar::one_dimensional(d, 0);
  const Int chi_top = (d * d - 1) / 8;
  const Int half = (d - 3) / 2;
  std::vector<WallWithCandidates> out;
  for (Int ell = 0; ell <= (d * d - 17) / 8; ++ell) {
    const Rational rsq = Rational(d * d, 4) - 2 * ell;
    std::vector<DestabilizerCandidate> cands;
    for (const Int& c : rank1_c1_solutions(d, ell)) {
      const Int i = c - half;
      const Int len_w = ell + i * (d + i) / 2;
      const Int len_y = ell - i * (d - i) / 2;
      if (len_w < 0 || len_y < 0) continue;  // cannot occur inside the solution interval
      DestabilizerCandidate cand;
      cand.cls = twist(ChernChar::ideal_sheaf(len_w), c);
      cand.rank = 1;
      cand.chi = chi_top - ell;
      cand.ell = ell;
      cand.i = i;
      cand.len_w = len_w;
      cand.len_y = len_y;
      cand.radius_sq = rsq;
      cand.actuality = Actuality::CertifiedRank1;
      cands.push_back(std::move(cand));
    }
    Wall w = wall_from_pair(cands.front().cls, total);
    out.push_back({std::move(w), std::move(cands)});
  }
  return out;
}

std::vector<DestabilizerCandidate> enumerate_flip_candidates(const Int& d, const Int& max_rank) {
  require_odd_d(d, 5);
  if (max_rank < 1) fail(Errc::invalid_argument, "max_rank must be >= 1");
  const Int chi_top = (d * d - 1) / 8;
  const Int half = (d - 3) / 2;
  std::vector<DestabilizerCandidate> out;
  for (Int r = 1; r <= max_rank; ++r) {
    const IntInterval chis = flip_chi_range(d, r);
    for (Int chi = chis.lo; chi <= chis.hi; ++chi) {
      const Rational rsq = radius_sq_from_rank_chi(r, chi);
      const Int four_r2_rsq = r * r + 8 * r * chi;  // 4 r^2 radius_sq, an integer
      for (Int c = 1; c <= d; ++c) {
        // -3/2 + R <= c/r <= -3/2 + d/r - R via (2c + 3r)^2 and (2d - 3r - 2c)^2.
        const Int lo = 2 * c + 3 * r;
        const Int hi = 2 * d - 3 * r - 2 * c;
        if (!(lo > 0 && lo * lo >= four_r2_rsq && hi > 0 && hi * hi >= four_r2_rsq)) continue;
        const Rational ch2 = Rational(chi - r) - Rational(3 * c, 2);
        if (2 * r * ch2 > Rational(c * c)) continue;  // Bogomolov with equality
        DestabilizerCandidate cand;
        cand.cls = ChernChar(r, c, ch2);
        cand.rank = r;
        cand.chi = chi;
        cand.radius_sq = rsq;
        if (r == 1) {
          cand.ell = chi_top - chi;
          cand.i = c - half;
          cand.len_w = cand.ell + cand.i * (d + cand.i) / 2;
          cand.len_y = cand.ell - cand.i * (d - cand.i) / 2;
          cand.actuality = Actuality::CertifiedRank1;
        } else {
          cand.actuality = Actuality::NumericalCandidate;
        }
        out.push_back(std::move(cand));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DestabilizerCandidate& a, const DestabilizerCandidate& b) {
    if (a.radius_sq != b.radius_sq) return a.radius_sq > b.radius_sq;
    return candidate_sort_key(a) < candidate_sort_key(b);
  });
  return out;
}

Int default_max_rank(const Int& d) { return (d - 1) / 3; }

std::pair<Wall, Wall> special_walls(const Int& d) {
  require_odd_d(d, 5);
  const ChernChar total = ChernChar::one_dimensional(d, 0);
  Wall theta = wall_from_pair(ChernChar::line_bundle(0), total);
  push_unique(theta.tags, WallTag::Divisorial);
  Wall collapsing = wall_from_pair(ChernChar::line_bundle(-1), total);
  push_unique(collapsing.tags, WallTag::Collapsing);
  return {std::move(theta), std::move(collapsing)};
}

Wall reflect_wall(const Wall& w) {
  if (w.kind == WallKind::DegenerateAll)
    fail(Errc::degenerate_wall, "cannot reflect a degenerate wall");
  const ChernChar& a = w.pair.first;
  const ChernChar& e = w.pair.second;
  Wall out = wall_from_pair(dualize(e - a), dualize(e));
  for (WallTag t : w.tags) push_unique(out.tags, t);
  return out;
}

}  // namespace wallforge

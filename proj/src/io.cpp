#include "wallforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wallforge {

namespace {

Json opt_int_to_json(const std::optional<Int>& v) {
  if (!v) return nullptr;
  return to_int64(*v);
}

std::optional<Int> opt_int_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Int(j.at(key).get<long long>());
}

Int int_from_json(const Json& j) { return Int(j.get<long long>()); }

[[noreturn]] void unknown_name(const char* what, std::string_view name) {
  fail(Errc::parse_error, std::string("unknown ") + what + ": '" + std::string(name) + "'");
}

}  // namespace

std::string_view wall_kind_name(WallKind k) {
  switch (k) {
    case WallKind::Semicircle: return "SEMICIRCLE";
    case WallKind::VerticalLine: return "VERTICAL_LINE";
    case WallKind::Empty: return "EMPTY";
    case WallKind::DegenerateAll: return "DEGENERATE_ALL";
  }
  unknown_name("wall kind", "");
}

WallKind wall_kind_from_name(std::string_view name) {
  if (name == "SEMICIRCLE") return WallKind::Semicircle;
  if (name == "VERTICAL_LINE") return WallKind::VerticalLine;
  if (name == "EMPTY") return WallKind::Empty;
  if (name == "DEGENERATE_ALL") return WallKind::DegenerateAll;
  unknown_name("wall kind", name);
}

std::string_view wall_tag_name(WallTag t) {
  switch (t) {
    case WallTag::Divisorial: return "DIVISORIAL";
    case WallTag::Collapsing: return "COLLAPSING";
    case WallTag::Rank0Pseudostable: return "RANK0_PSEUDOSTABLE";
  }
  unknown_name("wall tag", "");
}

WallTag wall_tag_from_name(std::string_view name) {
  if (name == "DIVISORIAL") return WallTag::Divisorial;
  if (name == "COLLAPSING") return WallTag::Collapsing;
  if (name == "RANK0_PSEUDOSTABLE") return WallTag::Rank0Pseudostable;
  unknown_name("wall tag", name);
}

std::string_view actuality_name(Actuality a) {
  switch (a) {
    case Actuality::CertifiedRank1: return "CERTIFIED_RANK1";
    case Actuality::NumericalCandidate: return "NUMERICAL_CANDIDATE";
  }
  unknown_name("actuality", "");
}

Actuality actuality_from_name(std::string_view name) {
  if (name == "CERTIFIED_RANK1") return Actuality::CertifiedRank1;
  if (name == "NUMERICAL_CANDIDATE") return Actuality::NumericalCandidate;
  unknown_name("actuality", name);
}

std::string_view record_role_name(RecordRole r) {
  switch (r) {
    case RecordRole::Flip: return "FLIP";
    case RecordRole::Divisorial: return "DIVISORIAL";
    case RecordRole::Collapsing: return "COLLAPSING";
    case RecordRole::Candidate: return "CANDIDATE";
  }
  unknown_name("record role", "");
}

RecordRole record_role_from_name(std::string_view name) {
  if (name == "FLIP") return RecordRole::Flip;
  if (name == "DIVISORIAL") return RecordRole::Divisorial;
  if (name == "COLLAPSING") return RecordRole::Collapsing;
  if (name == "CANDIDATE") return RecordRole::Candidate;
  unknown_name("record role", name);
}

Json wall_to_json(const Wall& w, const std::vector<DestabilizerCandidate>* candidates) {
  Json j;
  j["kind"] = wall_kind_name(w.kind);
  if (w.kind == WallKind::Semicircle || w.kind == WallKind::Empty) {
    j["center"] = to_string(w.center);
    j["radius_sq"] = to_string(w.radius_sq);
  }
  if (w.kind == WallKind::VerticalLine) j["line_s"] = to_string(w.line_s);
  j["pair"] = Json::array({to_string(w.pair.first), to_string(w.pair.second)});
  Json tags = Json::array();
  for (WallTag t : w.tags) tags.push_back(wall_tag_name(t));
  j["tags"] = std::move(tags);
  Json cands = Json::array();
  if (candidates)
    for (const auto& c : *candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = std::move(cands);
  return j;
}

std::vector<DestabilizerCandidate> candidates_from_wall_json(const Json& j) {
  std::vector<DestabilizerCandidate> out;
  if (!j.contains("candidates")) return out;
  for (const Json& c : j.at("candidates")) out.push_back(candidate_from_json(c));
  return out;
}

Wall wall_from_json(const Json& j) {
  Wall w;
  w.kind = wall_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("center")) w.center = parse_rational(j.at("center").get<std::string>());
  if (j.contains("radius_sq")) w.radius_sq = parse_rational(j.at("radius_sq").get<std::string>());
  if (j.contains("line_s")) w.line_s = parse_rational(j.at("line_s").get<std::string>());
  w.pair = {parse_chern(j.at("pair").at(0).get<std::string>()),
            parse_chern(j.at("pair").at(1).get<std::string>())};
  for (const Json& t : j.at("tags")) w.tags.push_back(wall_tag_from_name(t.get<std::string>()));
  return w;
}

Json candidate_to_json(const DestabilizerCandidate& c) {
  Json j;
  j["cls"] = to_string(c.cls);
  j["rank"] = to_int64(c.rank);
  j["chi"] = to_int64(c.chi);
  j["radius_sq"] = to_string(c.radius_sq);
  j["actuality"] = actuality_name(c.actuality);
  if (c.rank == 1) {
    j["ell"] = to_int64(c.ell);
    j["i"] = to_int64(c.i);
    j["len_w"] = to_int64(c.len_w);
    j["len_y"] = to_int64(c.len_y);
  }
  return j;
}

DestabilizerCandidate candidate_from_json(const Json& j) {
  DestabilizerCandidate c;
  c.cls = parse_chern(j.at("cls").get<std::string>());
  c.rank = int_from_json(j.at("rank"));
  c.chi = int_from_json(j.at("chi"));
  c.radius_sq = parse_rational(j.at("radius_sq").get<std::string>());
  c.actuality = actuality_from_name(j.at("actuality").get<std::string>());
  if (j.contains("ell")) c.ell = int_from_json(j.at("ell"));
  if (j.contains("i")) c.i = int_from_json(j.at("i"));
  if (j.contains("len_w")) c.len_w = int_from_json(j.at("len_w"));
  if (j.contains("len_y")) c.len_y = int_from_json(j.at("len_y"));
  return c;
}

Json component_to_json(const LocusComponent& c) {
  Json j;
  j["sub"] = to_string(c.sub);
  j["quot"] = to_string(c.quot);
  j["ext1_above"] = opt_int_to_json(c.ext1_above);
  j["ext1_below"] = opt_int_to_json(c.ext1_below);
  j["fiber_dim_above"] = opt_int_to_json(c.fiber_dim_above);
  j["fiber_dim_below"] = opt_int_to_json(c.fiber_dim_below);
  Json base;
  base["label"] = c.base_label;
  if (c.base_dim) base["dim"] = to_int64(*c.base_dim);
  j["base"] = std::move(base);
  j["assumptions"] = c.assumptions;
  return j;
}

LocusComponent component_from_json(const Json& j) {
  LocusComponent c;
  c.sub = parse_chern(j.at("sub").get<std::string>());
  c.quot = parse_chern(j.at("quot").get<std::string>());
  c.ext1_above = opt_int_from_json(j, "ext1_above");
  c.ext1_below = opt_int_from_json(j, "ext1_below");
  c.fiber_dim_above = opt_int_from_json(j, "fiber_dim_above");
  c.fiber_dim_below = opt_int_from_json(j, "fiber_dim_below");
  c.base_label = j.at("base").at("label").get<std::string>();
  c.base_dim = opt_int_from_json(j.at("base"), "dim");
  c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return c;
}

Json record_to_json(const LocusRecord& r) {
  Json j;
  j["role"] = record_role_name(r.role);
  j["wall"] = wall_to_json(r.wall, &r.candidates);
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(component_to_json(c));
  j["components"] = std::move(comps);
  j["notes"] = r.notes;
  if (r.model_annotation) j["model"] = *r.model_annotation;
  return j;
}

LocusRecord record_from_json(const Json& j) {
  LocusRecord r;
  r.role = record_role_from_name(j.at("role").get<std::string>());
  r.wall = wall_from_json(j.at("wall"));
  r.candidates = candidates_from_wall_json(j.at("wall"));
  for (const Json& c : j.at("components")) r.components.push_back(component_from_json(c));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("model")) r.model_annotation = j.at("model").get<std::string>();
  return r;
}

Json ledger_to_json(const Int& d, const Int& max_rank, const std::vector<LocusRecord>& records) {
  Json j;
  j["schema"] = kSchemaId;
  j["d"] = to_int64(d);
  j["v"] = to_string(ChernChar::one_dimensional(d, 0));
  j["max_rank"] = to_int64(max_rank);
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(record_to_json(r));
  j["records"] = std::move(recs);
  return j;
}

std::vector<LocusRecord> ledger_from_json(const Json& j) {
  if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchemaId)
    fail(Errc::parse_error, "missing or unsupported schema id");
  std::vector<LocusRecord> out;
  for (const Json& r : j.at("records")) out.push_back(record_from_json(r));
  return out;
}

Json scan_to_json(const Int& d, const Int& max_rank,
                  const std::vector<DestabilizerCandidate>& candidates) {
  Json j;
  j["schema"] = kSchemaId;
  j["d"] = to_int64(d);
  j["v"] = to_string(ChernChar::one_dimensional(d, 0));
  j["max_rank"] = to_int64(max_rank);
  Json cands = Json::array();
  for (const auto& c : candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = std::move(cands);
  return j;
}

std::vector<DestabilizerCandidate> scan_from_json(const Json& j) {
  if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchemaId)
    fail(Errc::parse_error, "missing or unsupported schema id");
  std::vector<DestabilizerCandidate> out;
  for (const Json& c : j.at("candidates")) out.push_back(candidate_from_json(c));
  return out;
}

namespace {

std::string join_tags(const std::vector<WallTag>& tags) {
  std::string out;
  for (std::size_t k = 0; k < tags.size(); ++k) {
    if (k) out += '|';
    out += wall_tag_name(tags[k]);
  }
  return out;
}

}  // namespace

std::string ledger_to_csv(const std::vector<LocusRecord>& records) {
  std::ostringstream out;
  out << "index,role,kind,center,radius_sq,line_s,tags,n_components,n_candidates,model\n";
  for (std::size_t k = 0; k < records.size(); ++k) {
    const LocusRecord& r = records[k];
    const bool circle = r.wall.kind == WallKind::Semicircle || r.wall.kind == WallKind::Empty;
    out << k << ',' << record_role_name(r.role) << ',' << wall_kind_name(r.wall.kind) << ','
        << (circle ? to_string(r.wall.center) : "") << ','
        << (circle ? to_string(r.wall.radius_sq) : "") << ','
        << (r.wall.kind == WallKind::VerticalLine ? to_string(r.wall.line_s) : "") << ','
        << join_tags(r.wall.tags) << ',' << r.components.size() << ',' << r.candidates.size()
        << ',' << (r.model_annotation ? *r.model_annotation : "") << '\n';
  }
  return out.str();
}

std::string candidates_to_csv(const std::vector<DestabilizerCandidate>& candidates) {
  std::ostringstream out;
  out << "rank,c1,ch2,chi,radius_sq,actuality,ell,i,len_w,len_y\n";
  for (const DestabilizerCandidate& c : candidates) {
    out << to_string(c.rank) << ',' << to_string(c.cls.ch1) << ',' << to_string(c.cls.ch2) << ','
        << to_string(c.chi) << ',' << to_string(c.radius_sq) << ',' << actuality_name(c.actuality);
    if (c.rank == 1)
      out << ',' << to_string(c.ell) << ',' << to_string(c.i) << ',' << to_string(c.len_w) << ','
          << to_string(c.len_y);
    else
      out << ",,,,";
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// SVG

namespace {

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

struct Drawable {
  WallKind kind;
  double a = 0;  // center (semicircle) or s (line)
  double radius = 0;
  std::string label;
  std::string color;
  bool dashed = false;
};

std::string render(const std::vector<Drawable>& items, const SvgOptions& options) {
  const double scale = std::max(1.0, to_double(options.scale));
  double smin = -2.0, smax = 0.0, tmax = 1.0;
  for (const Drawable& d : items) {
    if (d.kind == WallKind::Semicircle) {
      smin = std::min(smin, d.a - d.radius);
      smax = std::max(smax, d.a + d.radius);
      tmax = std::max(tmax, d.radius);
    } else if (d.kind == WallKind::VerticalLine) {
      smin = std::min(smin, d.a);
      smax = std::max(smax, d.a);
    }
  }
  smin -= 0.5;
  smax += 0.5;
  tmax += 0.4;
  const double width = (smax - smin) * scale;
  const double height = tmax * scale + 28.0;
  const double y0 = height - 10.0;
  const auto X = [&](double s) { return (s - smin) * scale; };
  const auto Y = [&](double t) { return y0 - t * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt6(width) << "\" height=\""
      << fmt6(height) << "\" viewBox=\"0 0 " << fmt6(width) << " " << fmt6(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"0\" y1=\"" << fmt6(y0) << "\" x2=\"" << fmt6(width) << "\" y2=\"" << fmt6(y0)
      << "\" stroke=\"#aaaaaa\" stroke-width=\"1\"/>\n";
  for (const Drawable& d : items) {
    const char* dash = d.dashed ? " stroke-dasharray=\"6 4\"" : "";
    if (d.kind == WallKind::Semicircle) {
      const double r = d.radius * scale;
      svg << "<path d=\"M " << fmt6(X(d.a - d.radius)) << " " << fmt6(y0) << " A " << fmt6(r)
          << " " << fmt6(r) << " 0 0 1 " << fmt6(X(d.a + d.radius)) << " " << fmt6(y0)
          << "\" fill=\"none\" stroke=\"" << d.color << "\" stroke-width=\"1.5\"" << dash
          << "/>\n";
      svg << "<text x=\"" << fmt6(X(d.a)) << "\" y=\"" << fmt6(Y(d.radius) - 4.0)
          << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\" fill=\""
          << d.color << "\">" << d.label << "</text>\n";
    } else if (d.kind == WallKind::VerticalLine) {
      svg << "<line x1=\"" << fmt6(X(d.a)) << "\" y1=\"" << fmt6(y0) << "\" x2=\"" << fmt6(X(d.a))
          << "\" y2=\"" << fmt6(Y(tmax - 0.2)) << "\" stroke=\"" << d.color
          << "\" stroke-width=\"1.5\"" << dash << "/>\n";
      svg << "<text x=\"" << fmt6(X(d.a) + 3.0) << "\" y=\"" << fmt6(Y(tmax - 0.3))
          << "\" font-family=\"monospace\" font-size=\"11\" fill=\"" << d.color << "\">" << d.label
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

Drawable drawable_for(const Wall& w, RecordRole role) {
  Drawable d;
  d.kind = w.kind;
  switch (role) {
    case RecordRole::Divisorial: d.color = "#1f6fb4"; break;
    case RecordRole::Collapsing: d.color = "#c43131"; break;
    case RecordRole::Candidate:
      d.color = "#888888";
      d.dashed = true;
      break;
    default: d.color = "#333333"; break;
  }
  if (w.kind == WallKind::Semicircle) {
    d.a = to_double(w.center);
    d.radius = std::sqrt(to_double(w.radius_sq));
    d.label = to_string(w.radius_sq);
  } else if (w.kind == WallKind::VerticalLine) {
    d.a = to_double(w.line_s);
    d.label = "s=" + to_string(w.line_s);
  }
  return d;
}

}  // namespace

std::string walls_to_svg(const std::vector<LocusRecord>& records, const SvgOptions& options) {
  std::vector<Drawable> items;
  for (const LocusRecord& r : records) {
    if (r.wall.kind == WallKind::Empty || r.wall.kind == WallKind::DegenerateAll) continue;
    items.push_back(drawable_for(r.wall, r.role));
  }
  return render(items, options);
}

std::string wall_to_svg(const Wall& w, const SvgOptions& options) {
  std::vector<Drawable> items;
  if (w.kind == WallKind::Semicircle || w.kind == WallKind::VerticalLine) {
    RecordRole role = RecordRole::Flip;
    if (std::find(w.tags.begin(), w.tags.end(), WallTag::Divisorial) != w.tags.end())
      role = RecordRole::Divisorial;
    if (std::find(w.tags.begin(), w.tags.end(), WallTag::Collapsing) != w.tags.end())
      role = RecordRole::Collapsing;
    items.push_back(drawable_for(w, role));
  }
  return render(items, options);
}

}  // namespace wallforge

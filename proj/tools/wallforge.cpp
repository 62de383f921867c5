// Command-line surface for the wall-and-chamber engine.  All values cross
// this boundary as exact integers and rationals; see the README for formats
// and exit codes (0 success, 1 usage/parse error, 2 mathematically
// degenerate input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "wallforge/io.hpp"
#include "wallforge/quiver.hpp"

namespace {

using namespace wallforge;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::invalid_argument, "cannot open output file: " + path);
  out << content;
}

Int parse_max_rank(const std::string& text, const Int& d) {
  if (text == "auto" || text == "AUTO") return default_max_rank(d);
  const Int r = parse_int(text);
  if (r < 1) fail(Errc::parse_error, "max rank must be >= 1 or 'auto'");
  return r;
}

SvgOptions parse_svg_options(const std::string& scale_text) {
  SvgOptions options;
  options.scale = parse_rational(scale_text);
  if (options.scale <= 0) fail(Errc::parse_error, "svg scale must be positive");
  return options;
}

std::string wall_text(const Wall& w) {
  std::string out = "kind = " + std::string(wall_kind_name(w.kind)) + "\n";
  if (w.kind == WallKind::Semicircle || w.kind == WallKind::Empty) {
    out += "center = " + to_string(w.center) + "\n";
    out += "radius_sq = " + to_string(w.radius_sq) + "\n";
  }
  if (w.kind == WallKind::VerticalLine) out += "line_s = " + to_string(w.line_s) + "\n";
  out += "pair = " + to_string(w.pair.first) + " ; " + to_string(w.pair.second) + "\n";
  std::string tags;
  for (WallTag t : w.tags) {
    if (!tags.empty()) tags += '|';
    tags += wall_tag_name(t);
  }
  out += "tags = " + tags + "\n";
  return out;
}

int run_charge(const std::string& v_text, const std::string& p_text) {
  const ChernChar v = parse_chern(v_text);
  const StabPoint p = parse_stab_point(p_text);
  const ChargeValue z = central_charge(v, p);
  std::cout << "re = " << to_string(z.re) << "\n";
  std::cout << "im = " << to_string(z.im) << "\n";
  try {
    const Slope mu = slope(v, p);
    std::cout << "slope = " << (mu.infinite ? std::string("inf") : to_string(mu.value)) << "\n";
  } catch (const Error& e) {
    if (e.code() != Errc::not_in_cone) throw;
    std::cout << "slope = ERROR(not-in-cone)\n";
  }
  return 0;
}

int run_wall(const std::string& a_text, const std::string& e_text, const std::string& format,
             const std::string& out_path, const std::string& scale_text) {
  const Wall w = wall_from_pair(parse_chern(a_text), parse_chern(e_text));
  if (format == "json")
    write_output(out_path, wall_to_json(w).dump(2) + "\n");
  else if (format == "svg")
    write_output(out_path, wall_to_svg(w, parse_svg_options(scale_text)));
  else
    write_output(out_path, wall_text(w));
  return w.kind == WallKind::DegenerateAll ? 2 : 0;
}

int run_dualize(const std::string& v_text) {
  std::cout << to_string(dualize(parse_chern(v_text))) << "\n";
  return 0;
}

int run_quiver(const std::string& v_text, const std::string& k_text, const std::string& p_text) {
  if (k_text.empty() && p_text.empty()) {
    std::cerr << "quiver: need --k or --p\n";
    return 1;
  }
  if (!k_text.empty()) {
    const DimensionVector n = to_dimension_vector(parse_chern(v_text), parse_int(k_text));
    std::cout << to_string(n) << "\n";
    if (!n.nonnegative()) std::cout << "warning: negative entries; not a complex at this k\n";
    return 0;
  }
  const auto regions = quiver_regions_containing(parse_stab_point(p_text));
  if (regions.empty()) {
    std::cout << "regions = none\n";
    return 0;
  }
  for (const Int& k : regions) {
    if (v_text.empty()) {
      std::cout << "k = " << k.str() << "\n";
      continue;
    }
    try {
      const DimensionVector n = to_dimension_vector(parse_chern(v_text), k);
      std::cout << "k = " << k.str() << ": " << to_string(n) << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::non_integral) throw;
      std::cout << "k = " << k.str() << ": not integral\n";
    }
  }
  return 0;
}

int run_scan(const Int& d, const std::string& max_rank_text, const std::string& format,
             const std::string& out_path) {
  const Int max_rank = parse_max_rank(max_rank_text, d);
  const auto candidates = enumerate_flip_candidates(d, max_rank);
  if (format == "csv")
    write_output(out_path, candidates_to_csv(candidates));
  else
    write_output(out_path, scan_to_json(d, max_rank, candidates).dump(2) + "\n");
  return 0;
}

int run_ledger(const Int& d, const std::string& max_rank_text, const std::string& format,
               const std::string& out_path, const std::string& scale_text) {
  const Int max_rank = parse_max_rank(max_rank_text, d);
  const auto records = build_ledger(d, max_rank);
  if (format == "csv")
    write_output(out_path, ledger_to_csv(records));
  else if (format == "svg")
    write_output(out_path, walls_to_svg(records, parse_svg_options(scale_text)));
  else
    write_output(out_path, ledger_to_json(d, max_rank, records).dump(2) + "\n");
  return 0;
}

const CLI::Validator OddDValidator(
    [](std::string& input) -> std::string {
      try {
        const Int d = parse_int(input);
        if (d < 5 || d % 2 == 0) return "d must be odd and >= 5";
      } catch (const Error&) {
        return "d must be an odd integer >= 5";
      }
      return {};
    },
    "ODD_D", "odd integer >= 5");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bridgeland wall-and-chamber engine for one-dimensional classes on P^2"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string v_text, p_text, a_text, e_text, k_text;
  std::string wall_format = "text";
  std::string scan_format = "json";
  std::string ledger_format = "json";
  std::string out_path;
  std::string max_rank_text = "auto";
  std::string scale_text = "60";
  std::string d_text;
  int rc = 0;

  auto* charge = app.add_subcommand("charge", "Central charge and slope of a class at a point");
  charge->add_option("--v", v_text, "Chern character r,c1,ch2")->required();
  charge->add_option("--p", p_text, "stability point s,t")->required();
  charge->callback([&] { rc = run_charge(v_text, p_text); });

  auto* wall = app.add_subcommand("wall", "Potential wall of a (sub, total) class pair");
  wall->add_option("--a", a_text, "subobject Chern character")->required();
  wall->add_option("--e", e_text, "total Chern character")->required();
  wall->add_option("--format", wall_format, "text|json|svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  wall->add_option("--out", out_path, "output path (default stdout)");
  wall->add_option("--svg-scale", scale_text, "pixels per s-axis unit (rational)");
  wall->callback([&] { rc = run_wall(a_text, e_text, wall_format, out_path, scale_text); });

  auto* dual = app.add_subcommand("dualize", "Derived-duality action on a Chern character");
  dual->add_option("--v", v_text, "Chern character r,c1,ch2")->required();
  dual->callback([&] { rc = run_dualize(v_text); });

  auto* quiver = app.add_subcommand("quiver", "Dimension vectors and quiver regions");
  quiver->add_option("--v", v_text, "Chern character r,c1,ch2");
  quiver->add_option("--k", k_text, "region index");
  quiver->add_option("--p", p_text, "stability point s,t");
  quiver->callback([&] { rc = run_quiver(v_text, k_text, p_text); });

  auto* scan = app.add_subcommand("scan", "Enumerate flip destabilizer candidates for (0,d,-3d/2)");
  scan->add_option("--d", d_text, "support degree, odd >= 5")->required()->check(OddDValidator);
  scan->add_option("--max-rank", max_rank_text, "max destabilizer rank or 'auto'")
      ->envname("WALLFORGE_MAX_RANK");
  scan->add_option("--format", scan_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--out", out_path, "output path (default stdout)");
  scan->callback([&] { rc = run_scan(parse_int(d_text), max_rank_text, scan_format, out_path); });

  auto* ledger = app.add_subcommand("ledger", "Full wall sequence for (0,d,-3d/2)");
  ledger->add_option("--d", d_text, "support degree, odd >= 5")->required()->check(OddDValidator);
  ledger->add_option("--max-rank", max_rank_text, "max destabilizer rank or 'auto'")
      ->envname("WALLFORGE_MAX_RANK");
  ledger->add_option("--format", ledger_format, "json|csv|svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  ledger->add_option("--out", out_path, "output path (default stdout)");
  ledger->add_option("--svg-scale", scale_text, "pixels per s-axis unit (rational)");
  ledger->callback(
      [&] { rc = run_ledger(parse_int(d_text), max_rank_text, ledger_format, out_path, scale_text); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 1 : 2;
  }
  return rc;
}

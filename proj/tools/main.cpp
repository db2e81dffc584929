#include "k3walls/serialize.hpp"
#include <functional>
#include "k3walls/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace k3walls;

// exit codes: 0 ok, 1 usage, 2 domain error, 3 inconclusive bounds
constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitInconclusive = 3;

struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
      write_file(path, payload);
    }
  }
};

SliceSpec scan_slice(std::int64_t n) {
  if (n == 2) return SliceSpec::perturbed(2, Rational(1, 8), ChargeFrame::chern_character);
  return SliceSpec::normalized_slice(Rational(n), ChargeFrame::chern_character);
}

std::string tower_text(const std::vector<TowerLevel>& levels, const TowerSpec& spec) {
  std::ostringstream out;
  out << "r | v_r | s_r | (v_r, s_{r-1}) | wall | nested in next\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lvl = levels[i];
    out << lvl.r << " | " << lvl.v_r.to_string() << " | " << lvl.s_r.to_string() << " | "
        << lvl.pairing_check << " | " << lvl.wall.geometry.to_string() << " | ";
    if (i + 1 < levels.size()) {
      const auto& next = levels[i + 1].wall.geometry;
      const bool both = lvl.wall.geometry.kind == WallGeometry::Kind::semicircle &&
                        next.kind == WallGeometry::Kind::semicircle;
      out << (both && is_nested(lvl.wall.geometry, next) ? "yes" : "no");
    } else {
      out << "-";
    }
    out << '\n';
  }
  return out.str();
}

Rational tower_figure_ray(const std::vector<TowerLevel>& levels) {
  // a vertical ray crossing every wall of the tower, found among small rationals
  for (std::int64_t den : {8, 16, 32, 64}) {
    for (std::int64_t num = -1; num >= -den * 4; --num) {
      const Rational u(num, den);
      bool all = !levels.empty();
      for (const auto& lvl : levels) {
        if (lvl.wall.geometry.kind != WallGeometry::Kind::semicircle ||
            !t_sq_at_u(lvl.wall.geometry, QuadExt(u))) {
          all = false;
          break;
        }
      }
      if (all) return u;
    }
  }
  return Rational(-1, 8);
}

std::string scan_text(const ScanReport& report) {
  std::ostringstream out;
  out << "target " << report.target.to_string() << " on P_m, m = "
      << to_fraction_string(report.slice_m) << ", ray u = " << to_fraction_string(report.u_ray)
      << "\n";
  out << "bounds: rank <= " << report.rank_bound << ", coefficients <= " << report.coeff_bound
      << "\n";
  for (const auto& [reason, count] : report.exclusion_counts) {
    out << "  excluded (" << to_string(reason) << "): " << count << "\n";
  }
  out << "surviving walls: " << report.survivors.size() << "\n";
  if (report.selected) {
    out << "selected wall: " << report.selected->geometry.to_string() << "\n";
    out << "  t^2 at ray: " << report.selected->t_sq_at_ray.to_string() << "\n";
    for (const auto& wcls : report.selected->witnesses)
      out << "  destabilizer: " << wcls.to_string() << "\n";
    out << "matches O(-C) wall: " << (report.selected_is_expected ? "yes" : "no") << "\n";
    out << "status: certified up to bounds\n";
  } else {
    out << "status: inconclusive (no candidate wall crosses the ray within bounds)\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wall-and-chamber computations on an elliptic K3 surface"};
  app.require_subcommand(1);

  Output output;
  std::int64_t global_bound = 30;
  app.add_option("--format", output.format, "output format: text|json|svg|csv")
      ->check(CLI::IsMember({"text", "json", "svg", "csv"}));
  app.add_option("--out", output.path, "write output to this file instead of stdout");
  app.add_option("--bounds", global_bound, "coefficient bound for enumerations")->check(CLI::PositiveNumber);

  std::string payload;
  int exit_code = kExitOk;

  // ---- pair ----
  std::string pair_v, pair_w;
  auto* cmd_pair = app.add_subcommand("pair", "Mukai pairing of two vectors r,alpha,beta,s");
  cmd_pair->add_option("--v", pair_v)->required();
  cmd_pair->add_option("--w", pair_w)->required();
  cmd_pair->callback([&] {
    const auto v = parse_mukai_vector(pair_v);
    const auto w = parse_mukai_vector(pair_w);
    const auto value = pairing(v, w);
    payload = output.format == "json" ? Json{{"pairing", value}}.dump(2) : std::to_string(value);
  });

  // ---- twist ----
  std::string twist_v, twist_d;
  auto* cmd_twist = app.add_subcommand("twist", "line-bundle twist of a Mukai vector");
  cmd_twist->add_option("--v", twist_v)->required();
  cmd_twist->add_option("--d", twist_d, "divisor alpha,beta")->required();
  cmd_twist->callback([&] {
    const auto v = twist(parse_mukai_vector(twist_v), parse_divisor(twist_d));
    payload = output.format == "json" ? to_json(v).dump(2) : v.to_string();
  });

  // ---- reflect ----
  std::string refl_v, refl_s;
  auto* cmd_reflect = app.add_subcommand("reflect", "spherical reflection v + (v,s)s");
  cmd_reflect->add_option("--v", refl_v)->required();
  cmd_reflect->add_option("--s", refl_s, "spherical class")->required();
  cmd_reflect->callback([&] {
    const auto v = reflect(parse_mukai_vector(refl_v), parse_mukai_vector(refl_s));
    payload = output.format == "json" ? to_json(v).dump(2) : v.to_string();
  });

  // ---- wall ----
  std::string wall_v, wall_w, wall_m = "10", wall_frame = "mukai";
  bool wall_unnormalized = false;
  auto* cmd_wall = app.add_subcommand("wall", "wall locus of two classes on the slice P_m");
  cmd_wall->add_option("--v", wall_v)->required();
  cmd_wall->add_option("--w", wall_w)->required();
  cmd_wall->add_option("--m", wall_m, "slice parameter (rational)");
  cmd_wall->add_option("--frame", wall_frame)->check(CLI::IsMember({"mukai", "chern"}));
  cmd_wall->add_flag("--unnormalized", wall_unnormalized, "use H = c+mf without rescaling");
  cmd_wall->callback([&] {
    const auto frame =
        wall_frame == "chern" ? ChargeFrame::chern_character : ChargeFrame::mukai_vector;
    const SliceSpec slice(rational_from_string(wall_m), !wall_unnormalized, frame);
    const WallLocus locus = wall_locus(parse_mukai_vector(wall_v), parse_mukai_vector(wall_w), slice);
    if (output.format == "json") {
      payload = Json{{"quadratic", to_json(locus.quadratic)}, {"geometry", to_json(locus.geometry)}}
                    .dump(2);
    } else if (output.format == "svg") {
      payload = render_walls_svg({locus.geometry}, {});
    } else {
      payload = locus.geometry.to_string() + "\n" + locus.quadratic.to_string();
    }
  });

  // ---- classify ----
  std::string cls_v, cls_w, cls_m = "10", cls_frame = "mukai";
  auto* cmd_classify = app.add_subcommand("classify", "totally-semistable test on the wall of (v, w)");
  cmd_classify->add_option("--v", cls_v)->required();
  cmd_classify->add_option("--w", cls_w)->required();
  cmd_classify->add_option("--m", cls_m, "slice parameter (rational)");
  cmd_classify->add_option("--frame", cls_frame)->check(CLI::IsMember({"mukai", "chern"}));
  cmd_classify->callback([&] {
    const auto frame =
        cls_frame == "chern" ? ChargeFrame::chern_character : ChargeFrame::mukai_vector;
    const SliceSpec slice(rational_from_string(cls_m), true, frame);
    const auto v = parse_mukai_vector(cls_v);
    const auto w = parse_mukai_vector(cls_w);
    const HyperbolicLattice h = hyperbolic_lattice(v, w);
    const WallLocus locus = wall_locus(v, w, slice);
    EffectivenessContext ctx{QuadExt(0), QuadExt(1), v};
    if (locus.geometry.kind == WallGeometry::Kind::semicircle) {
      ctx = EffectivenessContext::at_wall_apex(locus.geometry, v);
    } else if (locus.geometry.kind == WallGeometry::Kind::vertical) {
      ctx = EffectivenessContext{locus.geometry.u0, QuadExt(1), v};
    } else {
      throw std::domain_error("classes define no wall on this slice");
    }
    const WallClassification cls = classify_wall(v, h, ctx, slice, global_bound);
    payload = output.format == "json"
                  ? to_json(cls).dump(2)
                  : std::string(cls.totally_semistable ? "totally semistable" : "not totally semistable (within bound)") +
                        ", kind: " +
                        (cls.kind == WallClassification::Kind::spherical      ? "spherical"
                         : cls.kind == WallClassification::Kind::hilbert_chow ? "hilbert-chow"
                                                                              : "none") +
                        (cls.isotropic_wall ? ", isotropic wall" : "");
  });

  // ---- tower ----
  std::int64_t tw_n = 2, tw_m = 10, tw_R = 3;
  auto* cmd_tower = app.add_subcommand("tower", "O'Grady tower of Mukai vectors with walls W_r");
  cmd_tower->add_option("--n", tw_n)->required();
  cmd_tower->add_option("--m", tw_m)->required();
  cmd_tower->add_option("--R", tw_R)->required();
  cmd_tower->callback([&] {
    const TowerSpec spec(tw_n, tw_m, tw_R);
    const auto levels = build_tower(spec);
    if (output.format == "json") {
      payload = tower_to_json(levels, spec).dump(2);
    } else if (output.format == "svg") {
      std::vector<WallGeometry> walls;
      for (const auto& lvl : levels) walls.push_back(lvl.wall.geometry);
      payload = render_walls_svg(walls, {tower_figure_ray(levels)});
    } else {
      payload = tower_text(levels, spec);
    }
  });

  // ---- firstwall ----
  std::int64_t fw_n = 3, fw_rank = 5;
  std::string fw_u;
  auto* cmd_firstwall =
      app.add_subcommand("firstwall", "first totally semistable wall scan for ideal sheaves");
  cmd_firstwall->add_option("--n", fw_n)->required()->check(CLI::Range(std::int64_t(2), std::int64_t(64)));
  cmd_firstwall->add_option("--rank-bound", fw_rank)->check(CLI::PositiveNumber);
  cmd_firstwall->add_option("--u", fw_u, "ray parameter (rational); default chosen admissibly");
  cmd_firstwall->callback([&] {
    const SliceSpec slice = scan_slice(fw_n);
    const Rational u = fw_u.empty() ? admissible_u(fw_n, slice) : rational_from_string(fw_u);
    const ScanReport report = first_wall_scan(fw_n, slice, u, fw_rank, global_bound);
    payload = output.format == "json" ? to_json(report).dump(2) : scan_text(report);
    if (!report.conclusive) throw Inconclusive("scan inconclusive within the given bounds");
  });

  // ---- eq9 ----
  Eq9Range eq9r;
  auto* cmd_eq9 = app.add_subcommand("eq9", "integral solutions of the persistence obstruction");
  cmd_eq9->add_option("--n-max", eq9r.n_hi);
  cmd_eq9->add_option("--m-max", eq9r.m_hi);
  cmd_eq9->add_option("--r-max", eq9r.r_hi);
  cmd_eq9->add_option("--k-max", eq9r.k_hi);
  cmd_eq9->callback([&] {
    eq9r.k_lo = -eq9r.k_hi;
    const auto sols = eq9_solutions(eq9r);
    if (output.format == "json") {
      Json arr = Json::array();
      for (const auto& s : sols) arr.push_back(to_json(s));
      payload = arr.dump(2);
    } else {
      std::ostringstream out;
      out << "m,n,r,k\n";
      for (const auto& s : sols) out << s.m << ',' << s.n << ',' << s.r << ',' << s.k << '\n';
      payload = out.str();
    }
  });

  // ---- sd ----
  std::int64_t sd_r = 0, sd_s = 0, sd_p = 0, sd_q = 0, sd_a = 0, sd_b = 0;
  auto* cmd_sd = app.add_subcommand("sd", "strange-duality pair conditions");
  auto* opt_r = cmd_sd->add_option("--r", sd_r);
  cmd_sd->add_option("--s", sd_s);
  cmd_sd->add_option("--p", sd_p);
  cmd_sd->add_option("--q", sd_q);
  cmd_sd->add_option("--a", sd_a);
  cmd_sd->add_option("--b", sd_b);
  std::int64_t sw_rs = 5, sw_pq_min = -8, sw_pq_max = 8;
  auto* cmd_sweep = cmd_sd->add_subcommand("sweep", "verdict table over a parameter grid");
  cmd_sweep->add_option("--rs-max", sw_rs);
  cmd_sweep->add_option("--pq-min", sw_pq_min);
  cmd_sweep->add_option("--pq-max", sw_pq_max);
  cmd_sd->callback([&] {
    if (cmd_sweep->parsed()) {
      const auto rows = sd_sweep(sw_rs, sw_pq_min, sw_pq_max);
      if (output.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
          Json j{{"r", row.r}, {"s", row.s}, {"p", row.p}, {"q", row.q},
                 {"a", row.a}, {"b", row.b}, {"status", to_json(row.status)}};
          arr.push_back(std::move(j));
        }
        payload = arr.dump(2);
      } else {
        payload = sd_sweep_csv(rows);
      }
      return;
    }
    if (!*opt_r) throw CLI::ValidationError("sd", "--r/--s/--p/--q/--a/--b required unless 'sweep'");
    const SDPair pair = make_sd_pair(sd_r, sd_s, sd_p, sd_q, sd_a, sd_b);
    const SDStatus status = check_conditions(pair);
    if (output.format == "json") {
      payload = Json{{"pair", to_json(pair)}, {"status", to_json(status)}}.dump(2);
    } else {
      std::ostringstream out;
      out << "v = " << pair.v.to_string() << ", w = " << pair.w.to_string() << "\n"
          << "mo_theorem: " << (status.mo_theorem ? "true" : "false")
          << ", ex1: " << (status.ex1 ? "true" : "false")
          << ", ex3: " << (status.ex3 ? "true" : "false") << "\n"
          << "verdict: " << to_string(status.verdict) << " (" << status.provenance << ")";
      payload = out.str();
    }
  });

  // ---- render ----
  auto* cmd_render = app.add_subcommand("render", "SVG diagrams");
  std::int64_t rt_n = 2, rt_m = 10, rt_R = 3;
  auto* render_tower = cmd_render->add_subcommand("tower", "nested first walls with a scan ray");
  render_tower->add_option("--n", rt_n)->required();
  render_tower->add_option("--m", rt_m)->required();
  render_tower->add_option("--R", rt_R)->required();
  render_tower->callback([&] {
    const TowerSpec spec(rt_n, rt_m, rt_R);
    const auto levels = build_tower(spec);
    std::vector<WallGeometry> walls;
    for (const auto& lvl : levels) walls.push_back(lvl.wall.geometry);
    payload = render_walls_svg(walls, {tower_figure_ray(levels)});
  });
  std::int64_t rh_n = 6;
  auto* render_hyp = cmd_render->add_subcommand("hyperbola", "spherical classes, line and half-plane");
  render_hyp->add_option("--n", rh_n)->required();
  render_hyp->callback([&] { payload = render_hyperbola_svg(rh_n, global_bound); });
  cmd_render->require_subcommand(1);

  // global flags (--format/--out/--bounds) remain usable after subcommand names
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    enable_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 for --help, 1 for any usage error
  } catch (const Inconclusive& e) {
    output.emit(payload);
    std::cerr << "inconclusive: " << e.what() << std::endl;
    return kExitInconclusive;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kExitDomain;
  }

  output.emit(payload);
  return exit_code;
}

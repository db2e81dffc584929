#include "k3walls/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace k3walls {

Json to_json(const MukaiVector& v) {
  return Json{{"r", v.r}, {"c", v.c1.alpha}, {"f", v.c1.beta}, {"s", v.s}};
}

MukaiVector mukai_vector_from_json(const Json& j) {
  return {j.at("r").get<std::int64_t>(),
          {j.at("c").get<std::int64_t>(), j.at("f").get<std::int64_t>()},
          j.at("s").get<std::int64_t>()};
}

Json to_json(const QuadExt& x) {
  return Json{{"a", to_fraction_string(x.rational_part())},
              {"b", to_fraction_string(x.radical_part())},
              {"d", x.radicand()}};
}

QuadExt quadext_from_json(const Json& j) {
  return QuadExt(rational_from_string(j.at("a").get<std::string>()),
                 rational_from_string(j.at("b").get<std::string>()),
                 j.at("d").get<std::int64_t>());
}

Json to_json(const WallGeometry& g) {
  switch (g.kind) {
    case WallGeometry::Kind::vertical:
      return Json{{"type", "vertical"}, {"u0", to_json(g.u0)}};
    case WallGeometry::Kind::semicircle:
      return Json{{"type", "semicircle"},
                  {"center", to_json(g.center_u)},
                  {"radius_sq", to_json(g.radius_sq)}};
    case WallGeometry::Kind::empty: return Json{{"type", "empty"}};
    case WallGeometry::Kind::everywhere: return Json{{"type", "everywhere"}};
  }
  throw std::logic_error("unreachable wall kind");
}

WallGeometry wall_geometry_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "vertical") return WallGeometry::vertical(quadext_from_json(j.at("u0")));
  if (type == "semicircle")
    return WallGeometry::semicircle(quadext_from_json(j.at("center")),
                                    quadext_from_json(j.at("radius_sq")));
  if (type == "empty") return WallGeometry::empty();
  if (type == "everywhere") return WallGeometry::everywhere();
  throw std::invalid_argument("unknown wall type '" + type + "'");
}

Json to_json(const WallQuadratic& q) {
  return Json{{"A", to_json(q.a)}, {"B", to_json(q.b)}, {"C", to_json(q.c)}};
}

WallQuadratic wall_quadratic_from_json(const Json& j) {
  return {quadext_from_json(j.at("A")), quadext_from_json(j.at("B")),
          quadext_from_json(j.at("C"))};
}

Json to_json(const WallClassification& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
  Json out{{"totally_semistable", c.totally_semistable},
           {"kind", c.kind == WallClassification::Kind::spherical      ? "spherical"
                    : c.kind == WallClassification::Kind::hilbert_chow ? "hilbert-chow"
                                                                       : "none"},
           {"isotropic_wall", c.isotropic_wall},
           {"witnesses", witnesses},
           {"search_bound", c.search_bound},
           {"spherical_search_exhaustive", c.spherical_search_exhaustive}};
  if (c.decomposition) {
    out["decomposition"] = Json{{"spherical", to_json(c.decomposition->spherical_part)},
                                {"multiplicity", c.decomposition->multiplicity},
                                {"isotropic", to_json(c.decomposition->isotropic_part)}};
  }
  return out;
}

Json to_json(const TowerLevel& level, const TowerSpec& spec) {
  Json out{{"r", level.r},
           {"v_r", to_json(level.v_r)},
           {"s_r", to_json(level.s_r)},
           {"pairing_check", level.pairing_check},
           {"wall", to_json(level.wall.geometry)},
           {"wall_quadratic", to_json(level.wall.quadratic)}};
  const auto t2 = wall_Wr_t_intercept_sq(spec, level.r);
  if (t2) out["t_intercept_sq"] = to_fraction_string(*t2);
  return out;
}

Json tower_to_json(const std::vector<TowerLevel>& levels, const TowerSpec& spec) {
  Json arr = Json::array();
  for (const auto& lvl : levels) arr.push_back(to_json(lvl, spec));
  Json nested = Json::array();
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto& gi = levels[i - 1].wall.geometry;
    const auto& go = levels[i].wall.geometry;
    const bool both = gi.kind == WallGeometry::Kind::semicircle &&
                      go.kind == WallGeometry::Kind::semicircle;
    nested.push_back(both && is_nested(gi, go));
  }
  return Json{{"n", spec.n}, {"m", spec.m}, {"R", spec.R}, {"levels", arr},
              {"nested_consecutive", nested}};
}

Json to_json(const ScanReport& report) {
  Json survivors = Json::array();
  for (const auto& s : report.survivors) {
    Json witnesses = Json::array();
    for (const auto& w : s.witnesses) witnesses.push_back(to_json(w));
    survivors.push_back(Json{{"wall", to_json(s.wall)},
                             {"geometry", to_json(s.geometry)},
                             {"t_sq_at_ray", to_json(s.t_sq_at_ray)},
                             {"witnesses", witnesses}});
  }
  Json exclusions = Json::array();
  for (const auto& e : report.exclusions) {
    exclusions.push_back(Json{{"class", to_json(e.cls)}, {"reason", to_string(e.reason)}});
  }
  Json counts = Json::object();
  for (const auto& [reason, count] : report.exclusion_counts) counts[to_string(reason)] = count;
  Json out{{"target", to_json(report.target)},
           {"slice_m", to_fraction_string(report.slice_m)},
           {"u_ray", to_fraction_string(report.u_ray)},
           {"rank_bound", report.rank_bound},
           {"coeff_bound", report.coeff_bound},
           {"status", report.conclusive ? "certified-up-to-bounds" : "inconclusive"},
           {"selected_is_expected", report.selected_is_expected},
           {"expected_wall", to_json(report.expected_wall)},
           {"survivors", survivors},
           {"exclusion_counts", counts},
           {"exclusions", exclusions}};
  if (report.selected) {
    Json witnesses = Json::array();
    for (const auto& w : report.selected->witnesses) witnesses.push_back(to_json(w));
    out["selected"] = Json{{"wall", to_json(report.selected->wall)},
                           {"geometry", to_json(report.selected->geometry)},
                           {"t_sq_at_ray", to_json(report.selected->t_sq_at_ray)},
                           {"witnesses", witnesses}};
  }
  return out;
}

Json to_json(const HilbertChowScanReport& report) {
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    cands.push_back(Json{{"w_prime", to_json(c.w_prime)},
                         {"spherical_part", to_json(c.spherical_part)},
                         {"delta", to_fraction_string(c.delta)},
                         {"c1_proportional_h", c.c1_proportional_h},
                         {"geometry", to_json(c.geometry)}});
  }
  return Json{{"n", report.n},
              {"only_vertical_at_zero", report.only_vertical_at_zero},
              {"delta_at_most_one", report.delta_at_most_one},
              {"equality_iff_proportional", report.equality_iff_proportional},
              {"candidates", cands}};
}

Json to_json(const PersistenceReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"m", e.m},
                           {"first_wall_is_w1", e.first_wall_is_w1},
                           {"eq8_matches_coincidence", e.eq8_matches_coincidence},
                           {"coinciding_forces_trivial", e.coinciding_forces_trivial}});
  }
  return Json{{"n", report.n}, {"all_ok", report.all_ok}, {"entries", entries}};
}

Json to_json(const SDPair& pair) {
  return Json{{"r", pair.r}, {"s", pair.s}, {"p", pair.p}, {"q", pair.q},
              {"a", pair.a}, {"b", pair.b}, {"v", to_json(pair.v)}, {"w", to_json(pair.w)}};
}

Json to_json(const SDStatus& status) {
  return Json{{"mo_theorem", status.mo_theorem},
              {"ex1", status.ex1},
              {"ex3", status.ex3},
              {"verdict", to_string(status.verdict)},
              {"provenance", status.provenance}};
}

Json to_json(const Eq9Solution& s) {
  return Json{{"m", s.m}, {"n", s.n}, {"r", s.r}, {"k", s.k}};
}

std::string sd_sweep_csv(const std::vector<SDSweepRow>& rows) {
  std::ostringstream out;
  out << "r,s,p,q,a,b,mo_theorem,ex1,ex3,verdict\n";
  for (const auto& row : rows) {
    out << row.r << ',' << row.s << ',' << row.p << ',' << row.q << ',' << row.a << ',' << row.b
        << ',' << (row.status.mo_theorem ? 1 : 0) << ',' << (row.status.ex1 ? 1 : 0) << ','
        << (row.status.ex3 ? 1 : 0) << ',' << to_string(row.status.verdict) << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expect) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "' at position " +
                                  std::to_string(out.size()) + " of '" + text + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("trailing characters in '" + item + "' of '" + text + "'");
    out.push_back(value);
  }
  if (out.size() != expect) {
    throw std::invalid_argument("expected " + std::to_string(expect) + " comma-separated values, got " +
                                std::to_string(out.size()) + " in '" + text + "'");
  }
  return out;
}

}  // namespace

MukaiVector parse_mukai_vector(const std::string& text) {
  const auto v = parse_int_list(text, 4);
  return {v[0], {v[1], v[2]}, v[3]};
}

DivisorClass parse_divisor(const std::string& text) {
  const auto v = parse_int_list(text, 2);
  return {v[0], v[1]};
}

}  // namespace k3walls

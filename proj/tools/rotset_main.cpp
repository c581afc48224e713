// SPDX-License-Identifier: MIT
// rotset: exact rotation-set computations for the parametric torus family.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotset/denjoy.hpp"
#include "rotset/diagonal.hpp"
#include "rotset/geometry.hpp"
#include "rotset/index_sets.hpp"
#include "rotset/rho.hpp"
#include "rotset/roundness.hpp"

namespace {

using nlohmann::json;
using namespace rotset;

constexpr double kPi = 3.14159265358979323846;

using ConfigLines = std::vector<std::pair<std::string, std::string>>;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json rat_json(const Rat& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string regime_str(Regime r) { return r == Regime::High ? "high" : "low"; }

void append_rho_config(ConfigLines& cfg, const std::string& expr,
                       const RhoParam& rho, int precision) {
  cfg.emplace_back("rho_expr", expr);
  cfg.emplace_back("precision", std::to_string(precision));
  cfg.emplace_back("rho_num", rho.num().get_str());
  cfg.emplace_back("rho_den", rho.den().get_str());
  cfg.emplace_back("uncertainty_num", rho.uncertainty().get_num().get_str());
  cfg.emplace_back("uncertainty_den", rho.uncertainty().get_den().get_str());
  cfg.emplace_back("window", std::to_string(rho.max_safe_index()));
}

std::string csv_config(const ConfigLines& cfg) {
  std::string out;
  for (const auto& [k, v] : cfg) out += "# " + k + "=" + v + "\n";
  return out;
}

json json_config(const ConfigLines& cfg) {
  json obj = json::object();
  for (const auto& [k, v] : cfg) obj[k] = v;
  return obj;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + path);
  f << content;
}

std::string json_doc(json j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- alpha ----

std::string run_alpha(const std::string& expr, int precision,
                      std::int64_t window, std::int64_t max,
                      const std::string& format) {
  RhoParam rho = parse_rho(expr, precision, window);
  if (max < 0) throw DomainError("--max must be >= 0");
  if (max > rho.max_safe_index())
    throw DomainError("--max exceeds the certified window (" +
                      std::to_string(rho.max_safe_index()) + ")");
  ConfigLines cfg{{"command", "alpha"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("max", std::to_string(max));

  if (format == "json") {
    json rows = json::array();
    for (std::int64_t m = 0; m <= max; ++m) {
      rows.push_back(json{{"m", m},
                          {"ceil", ceil_mul(rho, m).get_str()},
                          {"alpha", rat_json(alpha(rho, m))},
                          {"member", member_index_set(rho, m)}});
    }
    return json_doc(json{{"config", json_config(cfg)}, {"rows", rows}});
  }
  std::string out = csv_config(cfg);
  out += "m,ceil,alpha_num,alpha_den,member\n";
  for (std::int64_t m = 0; m <= max; ++m) {
    Rat a = alpha(rho, m);
    out += std::to_string(m) + "," + ceil_mul(rho, m).get_str() + "," +
           a.get_num().get_str() + "," + a.get_den().get_str() + "," +
           (member_index_set(rho, m) ? "1" : "0") + "\n";
  }
  return out;
}

// -------------------------------------------------------------- certify ----

std::string run_certify(const std::string& expr, int precision,
                        std::int64_t window, std::int64_t max,
                        const std::string& unc_text, const std::string& format,
                        int* rc) {
  // Certification reports where stability breaks, so the parameter is
  // evaluated without demanding any window up front.
  auto [value, parsed_unc] = parse_rho_value(expr, precision);
  Rat unc = unc_text.empty() ? parsed_unc : decimal_to_rat(unc_text);
  if (max <= 0) max = window > 0 ? window : kDefaultWindow;
  CertificationReport rep = certify_stability(value, unc, max);
  if (!rep.passed) *rc = 2;

  ConfigLines cfg{{"command", "certify"}};
  cfg.emplace_back("rho_expr", expr);
  cfg.emplace_back("precision", std::to_string(precision));
  cfg.emplace_back("rho_num", value.get_num().get_str());
  cfg.emplace_back("rho_den", value.get_den().get_str());
  cfg.emplace_back("uncertainty_num", unc.get_num().get_str());
  cfg.emplace_back("uncertainty_den", unc.get_den().get_str());
  cfg.emplace_back("max", std::to_string(max));

  if (format == "json") {
    json j{{"config", json_config(cfg)},
           {"passed", rep.passed},
           {"window", rep.window},
           {"detail", rep.detail}};
    j["first_failure"] = rep.passed ? json(nullptr) : json(rep.first_failure);
    return json_doc(j);
  }
  std::string out = csv_config(cfg);
  out += "passed,window,first_failure,detail\n";
  out += std::string(rep.passed ? "1" : "0") + "," +
         std::to_string(rep.window) + "," +
         (rep.passed ? "" : std::to_string(rep.first_failure)) + "," +
         csv_field(rep.detail) + "\n";
  return out;
}

// ------------------------------------------------------------- classify ----

json endpoint_json(const LatticePoint& pt) {
  return json{{"m", pt.m}, {"n", pt.n}, {"x", rat_json(pt.x)},
              {"y", rat_json(pt.y)}};
}

std::string run_classify(const std::string& expr, int precision,
                         std::int64_t window, std::int64_t dom_bound,
                         bool skip_domination, const std::string& format) {
  RhoParam rho = parse_rho(expr, precision, window);
  DiagonalReport rep = extremality(rho);

  ConfigLines cfg{{"command", "classify"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("domination_bound",
                   skip_domination ? "skipped" : std::to_string(dom_bound));

  std::optional<DominationReport> dom;
  if (!skip_domination) dom = verify_strict_domination(rho, dom_bound);

  const std::string cls =
      rep.classification == Classification::Extreme ? "extreme" : "not-extreme";
  const std::string tag = rep.interval_tag ? rep.interval_tag->str() : "";

  if (format == "json") {
    json j{{"config", json_config(cfg)},
           {"regime", regime_str(rep.regime)},
           {"d", rat_json(rep.d)},
           {"realizing_index", rep.realizing_index},
           {"classification", cls},
           {"interval", tag}};
    j["threshold"] = rep.threshold ? json(*rep.threshold) : json(nullptr);
    if (rep.edge_endpoints) {
      j["edge_endpoints"] = json::array({endpoint_json(rep.edge_endpoints->first),
                                         endpoint_json(rep.edge_endpoints->second)});
    } else {
      j["edge_endpoints"] = nullptr;
    }
    if (dom) {
      json eq = json::array();
      std::size_t cap = std::min<std::size_t>(dom->equality_pairs.size(), 64);
      for (std::size_t i = 0; i < cap; ++i)
        eq.push_back(json::array(
            {dom->equality_pairs[i].first, dom->equality_pairs[i].second}));
      json dj{{"ok", dom->ok},
              {"bound", dom->bound},
              {"equality_count", dom->equality_pairs.size()},
              {"equality_pairs", eq}};
      dj["violation"] = dom->violation
                            ? json::array({dom->violation->first,
                                           dom->violation->second})
                            : json(nullptr);
      j["domination"] = dj;
    } else {
      j["domination"] = nullptr;
    }
    return json_doc(j);
  }

  std::string out = csv_config(cfg);
  out += "key,value\n";
  auto kv = [&](const std::string& k, const std::string& v) {
    out += k + "," + csv_field(v) + "\n";
  };
  kv("regime", regime_str(rep.regime));
  kv("d", rat_str(rep.d));
  kv("realizing_index", std::to_string(rep.realizing_index));
  kv("classification", cls);
  kv("interval", tag);
  if (rep.threshold) kv("threshold", std::to_string(*rep.threshold));
  if (rep.edge_endpoints) {
    const auto& [e1, e2] = *rep.edge_endpoints;
    kv("edge_endpoint_1",
       "(" + rat_str(e1.x) + ", " + rat_str(e1.y) + ") indices (" +
           std::to_string(e1.m) + "," + std::to_string(e1.n) + ")");
    kv("edge_endpoint_2",
       "(" + rat_str(e2.x) + ", " + rat_str(e2.y) + ") indices (" +
           std::to_string(e2.m) + "," + std::to_string(e2.n) + ")");
  }
  if (dom) {
    kv("domination_ok", dom->ok ? "1" : "0");
    kv("domination_bound", std::to_string(dom->bound));
    kv("equality_count", std::to_string(dom->equality_pairs.size()));
    if (dom->violation)
      kv("violation", "(" + std::to_string(dom->violation->first) + "," +
                          std::to_string(dom->violation->second) + ")");
  }
  return out;
}

// ----------------------------------------------------------------- hull ----

std::string render_hull_svg(const RhoParam& rho, const HullPolygon& hull,
                            int quadrants, std::int64_t bound,
                            const ConfigLines& cfg) {
  const double rho_d = rat_to_double(rho.value());
  DiagonalReport diag = best_diagonal(rho);
  const double d = rat_to_double(diag.d);

  const double lim = quadrants == 4 ? 1.12 * rho_d : 1.06 * rho_d;
  const double xmin = quadrants == 4 ? -lim : -0.06 * rho_d;
  const double xmax = lim;
  const double W = 1000, margin = 40;
  const double S = (W - 2 * margin) / (xmax - xmin);
  auto px = [&](double x) { return margin + (x - xmin) * S; };
  auto py = [&](double y) { return W - margin - (y - xmin) * S; };
  char buf[256];
  std::string svg;
  auto add = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    svg += buf;
  };

  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  svg += "<title>rotation set hull</title>\n<desc>\n";
  for (const auto& [k, v] : cfg) svg += k + "=" + v + "\n";
  svg += "</desc>\n";
  svg += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  // axes
  add("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
      "stroke=\"#d1d5db\" stroke-width=\"1\"/>\n",
      px(xmin), py(0.0), px(xmax), py(0.0));
  add("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
      "stroke=\"#d1d5db\" stroke-width=\"1\"/>\n",
      px(0.0), py(xmin), px(0.0), py(xmax));
  // diagonal y = x
  add("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
      "stroke=\"#e5e7eb\" stroke-width=\"1\" stroke-dasharray=\"3 3\"/>\n",
      px(xmin), py(xmin), px(xmax), py(xmax));

  // hull polygon
  svg += "<polygon points=\"";
  for (const auto& v : hull.vertices) {
    add("%.3f,%.3f ", px(rat_to_double(v.x)), py(rat_to_double(v.y)));
  }
  svg += "\" fill=\"#dbeafe\" fill-opacity=\"0.55\" stroke=\"#1d4ed8\" "
         "stroke-width=\"2\"/>\n";

  // reference circles: anchor radius rho, diagonal radius d*sqrt(2)
  add("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" "
      "stroke=\"#9ca3af\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n",
      px(0.0), py(0.0), rho_d * S);
  add("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" "
      "stroke=\"#059669\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n",
      px(0.0), py(0.0), d * std::sqrt(2.0) * S);

  // bounding pentagon (one-quadrant picture only)
  if (quadrants == 1) {
    svg += "<polygon points=\"";
    for (const auto& v : pentagon_vertices(rho)) {
      add("%.3f,%.3f ", px(rat_to_double(v.x)), py(rat_to_double(v.y)));
    }
    svg += "\" fill=\"none\" stroke=\"#dc2626\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"8 4\"/>\n";
  }

  // family scatter, thinned to small indices
  const std::int64_t scatter_bound = std::min<std::int64_t>(bound, 60);
  for_each_family_point(rho, scatter_bound, quadrants,
                        [&](const LatticePoint& pt) {
                          add("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2.5\" "
                              "fill=\"#1f2937\"/>\n",
                              px(rat_to_double(pt.x)), py(rat_to_double(pt.y)));
                        });

  // anchors
  for (const auto& a :
       quadrants == 4
           ? std::vector<RatPoint>{{Rat(0), Rat(0)},
                                   {rho.value(), Rat(0)},
                                   {Rat(0), rho.value()},
                                   {-rho.value(), Rat(0)},
                                   {Rat(0), -rho.value()}}
           : std::vector<RatPoint>{{Rat(0), Rat(0)},
                                   {rho.value(), Rat(0)},
                                   {Rat(0), rho.value()}}) {
    add("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"#7c3aed\"/>\n",
        px(rat_to_double(a.x)), py(rat_to_double(a.y)));
  }
  // best diagonal point
  add("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"#059669\"/>\n", px(d),
      py(d));
  svg += "</svg>\n";
  return svg;
}

std::string run_hull(const std::string& expr, int precision,
                     std::int64_t window, std::int64_t bound, int quadrants,
                     const std::string& format) {
  RhoParam rho = parse_rho(expr, precision, window);
  if (quadrants != 1 && quadrants != 4)
    throw DomainError("--quadrants must be 1 or 4");
  HullPolygon hull = family_hull(rho, bound, quadrants);

  ConfigLines cfg{{"command", "hull"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("bound", std::to_string(bound));
  cfg.emplace_back("quadrants", std::to_string(quadrants));
  cfg.emplace_back("vertex_count", std::to_string(hull.vertices.size()));
  cfg.emplace_back("area", rat_str(hull.area));

  if (format == "svg") return render_hull_svg(rho, hull, quadrants, bound, cfg);
  if (format == "json") {
    json verts = json::array();
    for (const auto& v : hull.vertices)
      verts.push_back(json{{"x", rat_json(v.x)}, {"y", rat_json(v.y)}});
    return json_doc(json{{"config", json_config(cfg)},
                         {"area", rat_json(hull.area)},
                         {"vertices", verts}});
  }
  std::string out = csv_config(cfg);
  out += "vertex,x_num,x_den,y_num,y_den\n";
  for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
    const auto& v = hull.vertices[i];
    out += std::to_string(i) + "," + v.x.get_num().get_str() + "," +
           v.x.get_den().get_str() + "," + v.y.get_num().get_str() + "," +
           v.y.get_den().get_str() + "\n";
  }
  return out;
}

// ------------------------------------------------------------ roundness ----

std::string run_roundness(const std::string& expr, int precision,
                          std::int64_t window, std::int64_t bound,
                          int iso_precision, const std::string& format) {
  RhoParam rho = parse_rho(expr, precision, window);
  std::optional<std::int64_t> b;
  if (bound > 0) b = bound;
  RoundnessReport rep = roundness(rho, b, iso_precision);

  ConfigLines cfg{{"command", "roundness"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("bound", std::to_string(bound));
  cfg.emplace_back("iso_precision", std::to_string(iso_precision));

  const std::string lower_approx =
      fmt_double(rat_to_double(rep.lower_factor) / kPi);
  const std::string upper_approx =
      fmt_double(rat_to_double(rep.upper_factor) / kPi);

  if (format == "json") {
    json j{{"config", json_config(cfg)},
           {"d", rat_json(rep.d)},
           {"gamma", rat_json(rep.gamma)},
           {"lower_factor", rat_json(rep.lower_factor)},
           {"upper_factor", rat_json(rep.upper_factor)},
           {"lower_value_approx", lower_approx},
           {"upper_value_approx", upper_approx},
           {"iso_coeff", rat_json(rep.iso_coeff)},
           {"iso_decimal", rep.iso_decimal},
           {"iso_precision", rep.iso_precision},
           {"index_bound", rep.index_bound},
           {"regime", regime_str(rep.regime)},
           {"tag", rep.tag.str()}};
    j["estimate_factor"] =
        rep.estimate_factor ? rat_json(*rep.estimate_factor) : json(nullptr);
    j["estimate_value_approx"] =
        rep.estimate_factor
            ? json(fmt_double(rat_to_double(*rep.estimate_factor) / kPi))
            : json(nullptr);
    return json_doc(j);
  }
  std::string out = csv_config(cfg);
  out += "key,value\n";
  auto kv = [&](const std::string& k, const std::string& v) {
    out += k + "," + csv_field(v) + "\n";
  };
  kv("d", rat_str(rep.d));
  kv("gamma", rat_str(rep.gamma));
  kv("lower_factor", rat_str(rep.lower_factor));
  kv("upper_factor", rat_str(rep.upper_factor));
  kv("lower_value_approx", lower_approx);
  kv("upper_value_approx", upper_approx);
  if (rep.estimate_factor) {
    kv("estimate_factor", rat_str(*rep.estimate_factor));
    kv("estimate_value_approx",
       fmt_double(rat_to_double(*rep.estimate_factor) / kPi));
  }
  kv("iso_coeff", rat_str(rep.iso_coeff));
  kv("iso_decimal", rep.iso_decimal);
  kv("index_bound", std::to_string(rep.index_bound));
  kv("regime", regime_str(rep.regime));
  kv("tag", rep.tag.str());
  return out;
}

// ----------------------------------------------------------------- scan ----

std::string run_scan(const std::string& from, const std::string& to,
                     const std::string& step, std::int64_t bound,
                     std::int64_t jump_multiplier, int iso_precision,
                     const std::string& format) {
  Rat f = decimal_to_rat(from), t = decimal_to_rat(to), s = decimal_to_rat(step);
  ScanResult res = scan_roundness(f, t, s, bound, jump_multiplier, iso_precision);

  ConfigLines cfg{{"command", "scan"},
                  {"from", from},
                  {"to", to},
                  {"step", step},
                  {"bound", std::to_string(bound)},
                  {"jump_multiplier", std::to_string(jump_multiplier)},
                  {"iso_precision", std::to_string(iso_precision)},
                  {"rows", std::to_string(res.rows.size())},
                  {"skipped", std::to_string(res.skipped.size())}};

  if (format == "json") {
    json rows = json::array();
    for (const auto& r : res.rows) {
      rows.push_back(json{{"rho", r.rho_expr},
                          {"lower_factor", rat_json(r.lower_factor)},
                          {"upper_factor", rat_json(r.upper_factor)},
                          {"estimate_factor", rat_json(r.estimate_factor)},
                          {"iso_decimal", r.iso_decimal},
                          {"d", rat_json(r.d)},
                          {"tag", r.tag},
                          {"effective_bound", r.effective_bound},
                          {"clamped", r.clamped}});
    }
    json jumps = json::array();
    for (std::size_t i : res.jump_flags) jumps.push_back(i);
    json skipped = json::array();
    for (const auto& [v, why] : res.skipped)
      skipped.push_back(json{{"value", v}, {"reason", why}});
    return json_doc(json{{"config", json_config(cfg)},
                         {"rows", rows},
                         {"jumps", jumps},
                         {"skipped", skipped}});
  }
  std::string out = csv_config(cfg);
  out += "rho,lower_num,lower_den,upper_num,upper_den,estimate_num,"
         "estimate_den,iso_decimal,d_num,d_den,tag,effective_bound,clamped\n";
  for (const auto& r : res.rows) {
    out += r.rho_expr + "," + r.lower_factor.get_num().get_str() + "," +
           r.lower_factor.get_den().get_str() + "," +
           r.upper_factor.get_num().get_str() + "," +
           r.upper_factor.get_den().get_str() + "," +
           r.estimate_factor.get_num().get_str() + "," +
           r.estimate_factor.get_den().get_str() + "," + r.iso_decimal + "," +
           r.d.get_num().get_str() + "," + r.d.get_den().get_str() + "," +
           csv_field(r.tag) + "," + std::to_string(r.effective_bound) + "," +
           (r.clamped ? "1" : "0") + "\n";
  }
  for (std::size_t i : res.jump_flags) {
    out += "# jump between " + res.rows[i].rho_expr + " and " +
           res.rows[i + 1].rho_expr + "\n";
  }
  for (const auto& [v, why] : res.skipped)
    out += "# skipped " + v + ": " + why + "\n";
  return out;
}

// ------------------------------------------------------------- simulate ----

std::string run_simulate(const std::string& expr, int precision,
                         std::int64_t window, int orbits, std::int64_t steps,
                         std::int64_t wander, double epsilon,
                         std::uint64_t seed, std::int64_t hull_bound,
                         const std::string& format) {
  RhoParam rho = parse_rho(expr, precision, window);
  DenjoyMap map = build_denjoy(rho, wander);
  HullPolygon hull = family_hull(rho, hull_bound, 4);
  EnsembleReport rep =
      ensemble_containment(map, hull, orbits, steps, epsilon, seed);

  ConfigLines cfg{{"command", "simulate"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("orbits", std::to_string(orbits));
  cfg.emplace_back("steps", std::to_string(steps));
  cfg.emplace_back("wander", std::to_string(wander));
  cfg.emplace_back("epsilon", fmt_double(epsilon));
  cfg.emplace_back("seed", std::to_string(seed));
  cfg.emplace_back("hull_bound", std::to_string(hull_bound));
  cfg.emplace_back("fraction_inside", fmt_double(rep.fraction_inside));

  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
      const auto& o = rep.orbits[i];
      rows.push_back(json{{"orbit_id", i},
                          {"start_circle", circle_name(o.start.circle)},
                          {"start_angle", fmt_double(o.start.angle)},
                          {"est_x", fmt_double(o.est_x)},
                          {"est_y", fmt_double(o.est_y)},
                          {"inside_hull", o.inside}});
    }
    return json_doc(json{{"config", json_config(cfg)},
                         {"fraction_inside", fmt_double(rep.fraction_inside)},
                         {"orbits", rows}});
  }
  std::string out = csv_config(cfg);
  out += "orbit_id,start_circle,start_angle,est_x,est_y,inside_hull\n";
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    const auto& o = rep.orbits[i];
    out += std::to_string(i) + "," + circle_name(o.start.circle) + "," +
           fmt_double(o.start.angle) + "," + fmt_double(o.est_x) + "," +
           fmt_double(o.est_y) + "," + (o.inside ? "1" : "0") + "\n";
  }
  return out;
}

// ----------------------------------------------------------- claim-check ----

std::string run_claim_check(const std::string& expr, int precision,
                            std::int64_t window, std::int64_t m_diff,
                            std::int64_t m_quad, const std::string& format,
                            int* rc) {
  RhoParam rho = parse_rho(expr, precision, window);
  if (m_quad <= 0) m_quad = 4 * m_diff + 1;
  ClaimReport rep = claim_equivalence_check(rho, m_quad, m_diff);
  if (!rep.ok) *rc = 2;

  ConfigLines cfg{{"command", "claim-check"}};
  append_rho_config(cfg, expr, rho, precision);
  cfg.emplace_back("m_diff", std::to_string(m_diff));
  cfg.emplace_back("m_quad", std::to_string(m_quad));

  if (format == "json") {
    json viol = json::array();
    for (const auto& v : rep.violations)
      viol.push_back(json{{"m", v.m}, {"mp", v.mp}, {"n", v.n}, {"np", v.np}});
    return json_doc(json{{"config", json_config(cfg)},
                         {"ok", rep.ok},
                         {"checked", rep.checked},
                         {"violations", viol}});
  }
  std::string out = csv_config(cfg);
  out += "ok,checked\n";
  out += std::string(rep.ok ? "1" : "0") + "," + std::to_string(rep.checked) +
         "\n";
  for (const auto& v : rep.violations) {
    out += "# violation m=" + std::to_string(v.m) + " mp=" +
           std::to_string(v.mp) + " n=" + std::to_string(v.n) + " np=" +
           std::to_string(v.np) + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotset: exact rotation sets of a parametric family of torus "
      "homeomorphisms"};
  app.require_subcommand(1);

  // shared option storage
  std::string expr, output, format;
  int precision = kDefaultPrecision;
  std::int64_t window = 0;

  auto add_common = [&](CLI::App* sub, const char* default_format,
                        bool needs_rho = true) {
    if (needs_rho)
      sub->add_option("--rho", expr,
                      "parameter expression, e.g. '0.93 + pi*1e-5' or '7/10'")
          ->required();
    sub->add_option("--precision", precision,
                    "decimal places kept when truncating the expression")
        ->envname("ROTSET_PRECISION")
        ->check(CLI::Range(12, 40));
    sub->add_option("--window", window,
                    "certified index window (0 = automatic)");
    sub->add_option("--format", format, "output format")->default_str(default_format);
    sub->add_option("--output,-o", output, "output path (default stdout)");
  };

  // alpha
  auto* alpha_cmd = app.add_subcommand(
      "alpha", "table of ceil(m*rho), alpha_m and index-set membership");
  std::int64_t alpha_max = 20;
  add_common(alpha_cmd, "csv");
  alpha_cmd->add_option("--max", alpha_max, "largest index in the table");

  // certify
  auto* certify_cmd = app.add_subcommand(
      "certify", "check the stability predicates over an index window");
  std::int64_t certify_max = 0;
  std::string certify_unc;
  add_common(certify_cmd, "csv");
  certify_cmd->add_option("--max", certify_max,
                          "indices to check (0 = default window)");
  certify_cmd->add_option("--uncertainty", certify_unc,
                          "override the uncertainty radius (decimal)");

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "best diagonal point, parameter interval and extremality");
  std::int64_t dom_bound = 0;
  bool skip_dom = false;
  add_common(classify_cmd, "json");
  classify_cmd->add_option("--domination-bound", dom_bound,
                           "index bound for the domination sweep (0 = auto)");
  classify_cmd->add_flag("--skip-domination", skip_dom,
                         "skip the exhaustive domination sweep");

  // hull
  auto* hull_cmd =
      app.add_subcommand("hull", "convex hull of the truncated point family");
  std::int64_t hull_bound = 1000;
  int quadrants = 1;
  add_common(hull_cmd, "svg");
  hull_cmd->add_option("--bound", hull_bound, "index bound of the truncation");
  hull_cmd->add_option("--quadrants", quadrants, "1 or 4");

  // roundness
  auto* round_cmd = app.add_subcommand(
      "roundness", "closed-form roundness sandwich and isoperimetric ratio");
  std::int64_t round_bound = 10000;
  int iso_precision = 15;
  add_common(round_cmd, "json");
  round_cmd->add_option("--bound", round_bound,
                        "hull bound for the numeric estimate (0 = skip)");
  round_cmd->add_option("--iso-precision", iso_precision,
                        "digits of the isoperimetric decimal");

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "roundness sandwich over a decimal grid of parameters");
  std::string from, to, step = "0.01";
  std::int64_t scan_bound = 10000, jump_multiplier = 10;
  int scan_iso_precision = 15;
  scan_cmd->add_option("--from", from, "grid start (decimal)")->required();
  scan_cmd->add_option("--to", to, "grid end, inclusive (decimal)")->required();
  scan_cmd->add_option("--step", step, "grid step (decimal)");
  scan_cmd->add_option("--bound", scan_bound, "hull bound for the estimates");
  scan_cmd->add_option("--jump-multiplier", jump_multiplier,
                       "sensitivity of the jump detector");
  scan_cmd->add_option("--iso-precision", scan_iso_precision,
                       "digits of the isoperimetric decimals");
  scan_cmd->add_option("--format", format, "output format")->default_str("csv");
  scan_cmd->add_option("--output,-o", output, "output path (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand(
      "simulate", "ensemble rotation estimates of the bouquet model");
  int orbits = 100;
  std::int64_t steps = 10000, wander = 1000, sim_hull_bound = 1000;
  double epsilon = 0.05;
  std::uint64_t seed = 7;
  add_common(sim_cmd, "csv");
  sim_cmd->add_option("--orbits", orbits, "number of orbits");
  sim_cmd->add_option("--steps", steps, "composed steps per orbit");
  sim_cmd->add_option("--wander", wander, "wandering intervals per side");
  sim_cmd->add_option("--epsilon", epsilon, "hull dilation for containment");
  sim_cmd->add_option("--seed", seed, "start-sequence seed");
  sim_cmd->add_option("--hull-bound", sim_hull_bound,
                      "index bound of the four-quadrant hull");

  // claim-check
  auto* claim_cmd = app.add_subcommand(
      "claim-check", "difference-set equivalence of the two rotation sets");
  std::int64_t m_diff = 20, m_quad = 0;
  add_common(claim_cmd, "csv");
  claim_cmd->add_option("--m-diff", m_diff, "index bound on the difference side");
  claim_cmd->add_option("--m-quad", m_quad,
                        "index bound on the quadrant side (0 = 4*m_diff+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // app.exit prints the message (or help text) and yields CLI11's own
    // code; the documented contract is 0 for --help and 1 for usage errors.
    return app.exit(e) == 0 ? 0 : 1;
  }

  int rc = 0;
  try {
    std::string doc;
    if (*alpha_cmd) {
      doc = run_alpha(expr, precision, window, alpha_max,
                      format.empty() ? "csv" : format);
    } else if (*certify_cmd) {
      doc = run_certify(expr, precision, window, certify_max, certify_unc,
                        format.empty() ? "csv" : format, &rc);
    } else if (*classify_cmd) {
      doc = run_classify(expr, precision, window, dom_bound, skip_dom,
                         format.empty() ? "json" : format);
    } else if (*hull_cmd) {
      doc = run_hull(expr, precision, window, hull_bound, quadrants,
                     format.empty() ? "svg" : format);
    } else if (*round_cmd) {
      doc = run_roundness(expr, precision, window, round_bound, iso_precision,
                          format.empty() ? "json" : format);
    } else if (*scan_cmd) {
      doc = run_scan(from, to, step, scan_bound, jump_multiplier,
                     scan_iso_precision, format.empty() ? "csv" : format);
    } else if (*sim_cmd) {
      doc = run_simulate(expr, precision, window, orbits, steps, wander,
                         epsilon, seed, sim_hull_bound,
                         format.empty() ? "csv" : format);
    } else if (*claim_cmd) {
      doc = run_claim_check(expr, precision, window, m_diff, m_quad,
                            format.empty() ? "csv" : format, &rc);
    }
    write_output(output, doc);
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

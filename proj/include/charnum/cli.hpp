/*
   Copyright 2026 The charnum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <charnum/charnum.hpp>
#include <charnum/io/json.hpp>
#include <charnum/io/svg.hpp>
#include <charnum/random.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace charnum::cli {

/// Process exit codes.
enum Exit : int { kTrue = 0, kFalse = 1, kInputError = 2 };

namespace detail {

using io::json;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 1;
  std::string emit_config;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses `path` and applies `reader` to its root, turning schema errors
/// into positioned diagnostics.
template <class F>
auto load(const std::string& path, F&& reader) {
  const io::Document doc(read_file(path), path);
  try {
    return reader(doc.root());
  } catch (const io::InputError& e) {
    throw std::runtime_error(doc.diagnose(e));
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << text;
}

inline void emit(const Options& opt, const json& config) {
  if (!opt.emit_config.empty()) write_file(opt.emit_config, config.dump(2) + "\n");
}

/// (x/z, y/z, 1) when z != 0, else the canonical triple.
inline std::string affine(const ProjPoint& p) {
  if (!p.is_finite()) return p.canonical().str();
  return ProjPoint(p[0] / p[2], p[1] / p[2], 1).str();
}

inline json affine_json(const ProjPoint& p) {
  return io::to_json(p.is_finite() ? ProjPoint(p[0] / p[2], p[1] / p[2], 1) : p.canonical());
}

inline Rational sign_power(int n) { return n % 2 == 0 ? 1 : -1; }

inline std::string yes(bool b) { return b ? "true" : "false"; }

// ---- char-number -----------------------------------------------------------

struct CharNumberArgs {
  std::string curve, lines, config;
  int degree = 0;
};

inline int char_number_cmd(const Options& opt, const CharNumberArgs& a, std::ostream& out) {
  const bool from_file = !a.config.empty() || !a.curve.empty() || !a.lines.empty();
  if (from_file) {
    std::optional<HomCurve> curve;
    std::optional<TriFrame> frame;
    if (!a.config.empty()) {
      load(a.config, [&](const json& j) {
        curve = io::curve_from_json(io::detail::member(j, "", "curve"), "/curve");
        frame = io::frame_from_json(j);
        return 0;
      });
    }
    if (!a.curve.empty()) curve = load(a.curve, [](const json& j) { return io::curve_from_json(j); });
    if (!a.lines.empty()) frame = load(a.lines, [](const json& j) { return io::frame_from_json(j); });
    if (!curve || !frame) throw std::invalid_argument("char-number needs both a curve and a set of lines");
    json cfg = io::frame_to_json(*frame);
    cfg["curve"] = io::to_json(*curve);
    emit(opt, cfg);
    const Rational k = char_number(*curve, *frame);
    const Rational expected = sign_power(curve->degree());
    if (opt.format == "json") {
      out << json{{"command", "char-number"},
                  {"degree", curve->degree()},
                  {"value", k.str()},
                  {"expected", expected.str()},
                  {"verified", k == expected}}
                 .dump(2)
          << "\n";
    } else {
      out << k << "\n";
    }
    return k == expected ? kTrue : kFalse;
  }

  if (a.degree < 1) throw std::invalid_argument("give --curve/--lines, --config, or --degree for random trials");
  gen::Engine rng(opt.seed);
  int verified = 0;
  json values = json::array();
  for (int t = 0; t < opt.trials; ++t) {
    const TriFrame f = gen::frame(rng);
    const HomCurve c = gen::frame_curve(rng, a.degree, f);
    if (t == 0) {
      json cfg = io::frame_to_json(f);
      cfg["curve"] = io::to_json(c);
      emit(opt, cfg);
    }
    const Rational k = char_number(c, f);
    verified += k == sign_power(a.degree) ? 1 : 0;
    values.push_back(k.str());
  }
  const bool ok = verified == opt.trials;
  if (opt.format == "json") {
    out << json{{"command", "char-number"}, {"degree", a.degree}, {"trials", opt.trials}, {"verified", verified},
                {"values", values}}
               .dump(2)
        << "\n";
  } else {
    out << "degree=" << a.degree << " trials=" << opt.trials << " verified=" << verified << "\n";
  }
  return ok ? kTrue : kFalse;
}

// ---- pascal-check / pascal-map ---------------------------------------------

inline HexConfig hexagon_input(const std::string& config, gen::Engine& rng) {
  if (config.empty()) return HexConfig(gen::conic_hexagon(rng));
  return load(config, [](const json& j) { return io::hexagon_from_json(j); });
}

inline int pascal_check_cmd(const Options& opt, const std::string& config, std::ostream& out) {
  gen::Engine rng(opt.seed);
  const int trials = config.empty() ? opt.trials : 1;
  int collinear_count = 0;
  json runs = json::array();
  std::ostringstream text;
  for (int t = 0; t < trials; ++t) {
    const HexConfig h = hexagon_input(config, rng);
    if (t == 0) emit(opt, io::to_json(h));
    const auto chi = pascal_mapping(h);
    const bool ok = verify_pascal(h);
    collinear_count += ok ? 1 : 0;
    if (trials == 1) {
      for (int i = 0; i < 3; ++i) text << "chi" << i + 1 << " " << affine(chi[i]) << "\n";
      text << "collinear=" << yes(ok) << "\n";
      runs.push_back(json{{"chi", json::array({affine_json(chi[0]), affine_json(chi[1]), affine_json(chi[2])})},
                          {"collinear", ok}});
    }
  }
  if (trials > 1) text << "trials=" << trials << " collinear=" << collinear_count << "\n";
  if (opt.format == "json") {
    out << json{{"command", "pascal-check"}, {"trials", trials}, {"collinear", collinear_count}, {"runs", runs}}.dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return collinear_count == trials ? kTrue : kFalse;
}

inline int pascal_map_cmd(const Options& opt, const std::string& config, std::ostream& out) {
  gen::Engine rng(opt.seed);
  const HexConfig h = hexagon_input(config, rng);
  emit(opt, io::to_json(h));
  const auto q = phi_hexagon(h);
  const auto chi = pascal_mapping(h);
  if (opt.format == "json") {
    auto arr = [](const std::array<ProjPoint, 3>& p) {
      return json::array({affine_json(p[0]), affine_json(p[1]), affine_json(p[2])});
    };
    out << json{{"command", "pascal-map"},
                {"u", io::to_json(h.u())},
                {"v", io::to_json(h.v())},
                {"w", io::to_json(h.w())},
                {"q", arr(q)},
                {"chi", arr(chi)}}
               .dump(2)
        << "\n";
  } else {
    out << "u " << h.u() << "\nv " << h.v() << "\nw " << h.w() << "\n";
    for (int i = 0; i < 3; ++i) out << "q" << i + 1 << " " << affine(q[i]) << "\n";
    for (int i = 0; i < 3; ++i) out << "chi" << i + 1 << " " << affine(chi[i]) << "\n";
  }
  return kTrue;
}

// ---- pascal-cubic ----------------------------------------------------------

struct FramedInput {
  std::optional<TriFrame> frame;
  std::vector<ProjPoint> on_a, on_b, on_c;
};

inline int pascal_cubic_cmd(const Options& opt, const std::string& config, int degree, std::ostream& out) {
  gen::Engine rng(opt.seed);
  const int trials = config.empty() ? opt.trials : 1;
  int verified = 0;
  json runs = json::array();
  std::ostringstream text;
  for (int t = 0; t < trials; ++t) {
    FramedInput in;
    if (!config.empty()) {
      const auto fp = load(config, [](const json& j) { return io::framed_points_from_json(j); });
      in = {fp.frame, fp.on_a, fp.on_b, fp.on_c};
    } else {
      if (degree < 2) throw std::invalid_argument("give --config, or --degree (>= 2) for random trials");
      const Rational target = sign_power(degree);
      for (;;) {
        TriFrame f = gen::frame(rng);
        auto fp = gen::frame_points(rng, f, degree, &target);
        try {
          (void)pascal_type_general(f, fp.on_a, fp.on_b, fp.on_c, degree);
          in = {f, fp.on_a, fp.on_b, fp.on_c};
          break;
        } catch (const GeometryError&) {
        }
      }
    }
    if (t == 0) emit(opt, io::framed_points_to_json(*in.frame, in.on_a, in.on_b, in.on_c));
    const int n = static_cast<int>(in.on_a.size());
    const PascalGeneralResult r = pascal_type_general(*in.frame, in.on_a, in.on_b, in.on_c, n);
    const bool ok = r.input_criterion && r.curve.has_value();
    verified += ok ? 1 : 0;
    if (trials == 1) {
      text << "degree=" << n << " criterion=" << yes(r.input_criterion) << "\n";
      for (const auto& p : r.points) text << "point " << affine(p) << "\n";
      json pts = json::array();
      for (const auto& p : r.points) pts.push_back(affine_json(p));
      json run{{"degree", n}, {"criterion", r.input_criterion}, {"points", pts}};
      if (r.curve) {
        text << "curve " << r.curve->canonical().str() << "\n";
        run["curve"] = io::to_json(r.curve->canonical());
      } else {
        text << "curve none\n";
      }
      runs.push_back(run);
    }
  }
  if (trials > 1) text << "trials=" << trials << " verified=" << verified << "\n";
  if (opt.format == "json") {
    out << json{{"command", "pascal-cubic"}, {"trials", trials}, {"verified", verified}, {"runs", runs}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return verified == trials ? kTrue : kFalse;
}

// ---- fit-curve / conic-through ---------------------------------------------

inline int fit_curve_cmd(const Options& opt, const std::string& config, int degree_flag, std::ostream& out) {
  if (config.empty()) throw std::invalid_argument("fit-curve needs --config");
  int degree = degree_flag;
  const auto pts = load(config, [&](const json& j) {
    if (degree == 0) {
      const json& d = io::detail::member(j, "", "degree");
      if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
        throw io::InputError("degree must be an integer in 1..64", "/degree");
      }
      degree = d.get<int>();
    }
    return io::points_from_json(io::detail::member(j, "", "points"), "/points");
  });
  emit(opt, json{{"degree", degree}, {"points", io::to_json(std::span<const ProjPoint>(pts))}});
  const auto basis = fit_curves(pts, degree);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& c : basis) arr.push_back(io::to_json(c));
    out << json{{"command", "fit-curve"}, {"degree", degree}, {"dimension", basis.size()}, {"basis", arr}}.dump(2)
        << "\n";
  } else {
    out << "dimension=" << basis.size() << "\n";
    for (const auto& c : basis) out << c.str() << "\n";
  }
  return basis.empty() ? kFalse : kTrue;
}

inline int conic_through_cmd(const Options& opt, const std::string& config, std::ostream& out) {
  if (config.empty()) throw std::invalid_argument("conic-through needs --config");
  const auto pts = load(config, [](const json& j) {
    return io::points_from_json(io::detail::member(j, "", "points"), "/points", 6);
  });
  emit(opt, json{{"points", io::to_json(std::span<const ProjPoint>(pts))}});
  const bool on = conic_through_six(pts);
  std::optional<HomCurve> conic;
  if (on) conic = fit_curves(pts, 2).front().canonical();
  if (opt.format == "json") {
    json j{{"command", "conic-through"}, {"on_conic", on}};
    if (conic) j["conic"] = io::to_json(*conic);
    out << j.dump(2) << "\n";
  } else {
    out << "on-conic=" << yes(on) << "\n";
    if (conic) out << "conic " << conic->str() << "\n";
  }
  return on ? kTrue : kFalse;
}

// ---- spline-dim ------------------------------------------------------------

inline int spline_dim_cmd(const Options& opt, const std::string& config, int mu, std::ostream& out) {
  if (!config.empty()) {
    const MSConfig cfg = load(config, [](const json& j) { return io::ms_config_from_json(j); });
    if (mu != 0 && mu != cfg.mu()) {
      throw std::invalid_argument("--mu " + std::to_string(mu) + " does not match the configuration (mu=" +
                                  std::to_string(cfg.mu()) + ")");
    }
    emit(opt, io::to_json(cfg));
    const SplineDimReport r = spline_dim(cfg);
    const bool product = product_criterion(cfg);
    if (opt.format == "json") {
      out << json{{"command", "spline-dim"}, {"mu", cfg.mu()},          {"generic_dim", r.generic_dim},
                  {"tau", r.tau},             {"dim", r.total_dim},      {"singular", r.singular},
                  {"product_criterion", product}}
                 .dump(2)
          << "\n";
    } else {
      out << "dim=" << r.total_dim << " singular=" << yes(r.singular) << "\n";
      out << "generic=" << r.generic_dim << " tau=" << r.tau << " product-criterion=" << yes(product) << "\n";
    }
    return r.singular ? kTrue : kFalse;
  }

  if (mu < 1) throw std::invalid_argument("give --config, or --mu for random trials");
  gen::Engine rng(opt.seed);
  int agree = 0, singular = 0;
  for (int t = 0; t < opt.trials; ++t) {
    const MSConfig cfg = gen::ms_config(rng, mu, t % 2 == 0);
    if (t == 0) emit(opt, io::to_json(cfg));
    const SplineDimReport r = spline_dim(cfg);
    agree += r.singular == product_criterion(cfg) ? 1 : 0;
    singular += r.singular ? 1 : 0;
  }
  if (opt.format == "json") {
    out << json{{"command", "spline-dim"}, {"mu", mu}, {"trials", opt.trials}, {"singular", singular}, {"agree", agree}}
               .dump(2)
        << "\n";
  } else {
    out << "mu=" << mu << " trials=" << opt.trials << " singular=" << singular << " agree=" << agree << "\n";
  }
  return agree == opt.trials ? kTrue : kFalse;
}

// ---- verify-example --------------------------------------------------------

inline int verify_example_cmd(const Options& opt, std::ostream& out) {
  const NinePointConfig cfg = reference::config();
  const HomCurve cubic = reference::cubic();
  const TriFrame& f = cfg.frame();
  emit(opt, [&] {
    json j = io::to_json(cfg);
    j["curve"] = io::to_json(cubic);
    return j;
  }());

  bool all = true;
  std::ostringstream text;
  json checks = json::array();
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    text << (ok ? "ok   " : "FAIL ") << name << " " << detail << "\n";
    checks.push_back(json{{"name", name}, {"ok", ok}, {"detail", detail}});
  };

  check("frame", true, "a " + f.a().str() + " b " + f.b().str() + " c " + f.c().str());
  check("vertices", f.u() == ProjPoint(0, -1, 0) && f.v() == ProjPoint(-1, 1, 1) && f.w() == ProjPoint(1, 1, 1),
        "u " + f.u().str() + " v " + f.v().str() + " w " + f.w().str());
  for (int i = 1; i <= 9; ++i) {
    const ProjPoint& p = cfg.p(i);
    check("p" + std::to_string(i), cubic.contains(p), affine(p));
  }
  check("char-number", char_number(cubic, f) == -1, char_number(cubic, f).str());

  const HexConfig hex = HexConfig(cfg.hexagon_points()).with_representatives(f.u(), f.v(), f.w());
  const auto q = phi_hexagon(hex);
  const auto r = Rational(5, 2);
  const std::array<ProjPoint, 3> q_expected{ProjPoint(-1, r, 1), ProjPoint(1, r, 1), ProjPoint(-6, 1, 1)};
  for (int i = 0; i < 3; ++i) check("q" + std::to_string(i + 1), q[i] == q_expected[i], affine(q[i]));

  const PascalCubicResult res = pascal_type_cubic(cfg);
  const auto s = Rational(5, 3);
  const std::array<ProjPoint, 3> chi_expected{ProjPoint(-1, s, 1), ProjPoint(1, s, 1), ProjPoint(6, 1, 1)};
  for (int i = 0; i < 3; ++i) {
    check("chi" + std::to_string(i + 1), res.points[i] == chi_expected[i], affine(res.points[i]));
  }
  const bool conic_ok = res.conic && res.conic->equivalent(reference::conic());
  check("conic", conic_ok, res.conic ? res.conic->canonical().str() : "none");
  std::string coeffs;
  if (res.conic) {
    const HomCurve canon = res.conic->canonical();
    for (const auto& c : canon.coefficients()) coeffs += (coeffs.empty() ? "" : " ") + c.str();
  }
  check("conic-coefficients", conic_ok, "[" + coeffs + "] (x^2 xy xz y^2 yz z^2)");
  bool through = res.conic.has_value();
  for (const auto& p : res.points) through = through && res.conic->contains(p);
  check("conic-through-six", through, "six output points on the conic");

  if (opt.format == "json") {
    out << json{{"command", "verify-example"}, {"checks", checks}, {"verified", all}}.dump(2) << "\n";
  } else {
    out << text.str() << "verified=" << yes(all) << "\n";
  }
  return all ? kTrue : kFalse;
}

// ---- render ----------------------------------------------------------------

inline io::Scene example_scene() {
  const NinePointConfig cfg = reference::config();
  const PascalCubicResult res = pascal_type_cubic(cfg);
  io::Scene s;
  s.window = {-5, 5, -4, 4};
  const TriFrame& f = cfg.frame();
  s.lines = {{f.a(), "a"}, {f.b(), "b"}, {f.c(), "c"}};
  s.curves = {{reference::cubic(), "cubic"}, {*res.conic, "conic"}};
  for (int i = 1; i <= 9; ++i) s.points.push_back({cfg.p(i), "p" + std::to_string(i)});
  for (int i = 0; i < 3; ++i) s.points.push_back({res.points[i], "chi" + std::to_string(i + 1)});
  s.points.push_back({f.u(), "u"});
  return s;
}

inline int render_cmd(const Options& opt, const std::string& config, bool example, const std::string& output,
                      int density, std::ostream& out) {
  if (config.empty() == !example) throw std::invalid_argument("render needs exactly one of --config or --example");
  const io::Scene scene = example ? example_scene() : load(config, [](const json& j) { return io::scene_from_json(j); });
  const std::string svg = io::render_svg(scene, {density, 640});
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    write_file(output, svg);
    if (opt.format == "json") {
      out << json{{"command", "render"}, {"output", output}, {"bytes", svg.size()}}.dump(2) << "\n";
    } else {
      out << "wrote " << output << "\n";
    }
  }
  return kTrue;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 verified/true, 1 falsified/false, 2 input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-number, Pascal-mapping and spline-dimension checks", "charnum"};
  app.require_subcommand(1);
  detail::Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for random configurations");
  app.add_option("--trials", opt.trials, "Number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--emit-config", opt.emit_config, "Write the configuration in use to this file");

  std::function<int()> action;

  detail::CharNumberArgs cn;
  auto* c_char = app.add_subcommand("char-number", "Characteristic number of a curve on three lines");
  c_char->add_option("--curve", cn.curve, "Curve file");
  c_char->add_option("--lines", cn.lines, "Lines file");
  c_char->add_option("--config", cn.config, "Combined curve and lines file");
  c_char->add_option("--degree", cn.degree, "Degree of random curves");
  c_char->callback([&] { action = [&] { return detail::char_number_cmd(opt, cn, out); }; });

  std::string hex_config;
  auto* c_check = app.add_subcommand("pascal-check", "Collinearity of the Pascal mapping of a hexagon");
  c_check->add_option("--config", hex_config, "Hexagon file (random inscribed hexagons when omitted)");
  c_check->callback([&] { action = [&] { return detail::pascal_check_cmd(opt, hex_config, out); }; });

  auto* c_map = app.add_subcommand("pascal-map", "Vertices, opposite-side points and Pascal mapping of a hexagon");
  c_map->add_option("--config", hex_config, "Hexagon file (a random inscribed hexagon when omitted)");
  c_map->callback([&] { action = [&] { return detail::pascal_map_cmd(opt, hex_config, out); }; });

  std::string framed_config;
  int framed_degree = 0;
  auto* c_cubic = app.add_subcommand("pascal-cubic", "Pascal-type theorem for points on three lines");
  c_cubic->add_option("--config", framed_config, "Frame and points file");
  c_cubic->add_option("--degree", framed_degree, "Points per line for random trials");
  c_cubic->callback([&] { action = [&] { return detail::pascal_cubic_cmd(opt, framed_config, framed_degree, out); }; });

  std::string fit_config;
  int fit_degree = 0;
  auto* c_fit = app.add_subcommand("fit-curve", "Basis of the curves of a degree through given points");
  c_fit->add_option("--config", fit_config, "Points file")->required();
  c_fit->add_option("--degree", fit_degree, "Degree (overrides the file)")->check(CLI::Range(1, 64));
  c_fit->callback([&] { action = [&] { return detail::fit_curve_cmd(opt, fit_config, fit_degree, out); }; });

  std::string six_config;
  auto* c_conic = app.add_subcommand("conic-through", "Whether six points lie on a conic");
  c_conic->add_option("--config", six_config, "Six-point file")->required();
  c_conic->callback([&] { action = [&] { return detail::conic_through_cmd(opt, six_config, out); }; });

  std::string ms_config;
  int mu = 0;
  auto* c_spline = app.add_subcommand("spline-dim", "Dimension of the Morgan-Scott type spline space");
  c_spline->add_option("--config", ms_config, "Configuration file (random trials when omitted)");
  c_spline->add_option("--mu", mu, "Smoothness")->check(CLI::Range(1, 32));
  c_spline->callback([&] { action = [&] { return detail::spline_dim_cmd(opt, ms_config, mu, out); }; });

  auto* c_example = app.add_subcommand("verify-example", "Reproduce the reference cubic example");
  c_example->callback([&] { action = [&] { return detail::verify_example_cmd(opt, out); }; });

  std::string scene_config, output;
  bool example = false;
  int density = 512;
  auto* c_render = app.add_subcommand("render", "Render a figure as SVG");
  c_render->add_option("--config", scene_config, "Scene file");
  c_render->add_flag("--example", example, "Render the reference cubic example");
  c_render->add_option("--output,-o", output, "Output file (stdout when omitted)");
  c_render->add_option("--density", density, "Curve tracing grid size")->check(CLI::Range(8, 4096));
  c_render->callback([&] {
    action = [&] { return detail::render_cmd(opt, scene_config, example, output, density, out); };
  });

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> argv_store{"charnum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return action();
  } catch (const NotOnCubicError& e) {
    err << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const std::logic_error& e) {
    // Includes GeometryError and std::invalid_argument: bad input.
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr && dynamic_cast<const std::domain_error*>(&e) == nullptr) {
      err << "internal error: " << e.what() << "\n";
      return kFalse;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace charnum::cli

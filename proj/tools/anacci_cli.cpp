#include "anacci/csv.hpp"
#include "anacci/error.hpp"
#include "anacci/figures.hpp"
#include "anacci/geometry.hpp"
#include "anacci/lattice.hpp"
#include "anacci/montecarlo.hpp"
#include "anacci/qkernel.hpp"
#include "anacci/rational.hpp"
#include "anacci/recurrence.hpp"
#include "anacci/solver.hpp"
#include "anacci/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace anacci;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
  std::uint64_t samples = 0;
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw Error(ErrorCode::InvalidArgument, "malformed number '" + text + "'");
  return x;
}

// A flat JSON object becomes a one-row CSV; nested values are serialized inline.
Table object_to_table(const ordered_json& j) {
  Table t{"result", {}, {}};
  std::vector<Cell> row;
  for (const auto& [key, value] : j.items()) {
    t.columns.push_back(key);
    if (value.is_number_integer()) row.emplace_back(value.get<long long>());
    else if (value.is_number()) row.emplace_back(value.get<double>());
    else if (value.is_string()) row.emplace_back(value.get<std::string>());
    else row.emplace_back(value.dump());
  }
  t.add_row(std::move(row));
  return t;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

void emit(const ordered_json& j, const Common& c) {
  if (c.format == "csv") {
    write_text(c.output, object_to_table(j).to_csv());
  } else {
    write_text(c.output, j.dump(2) + "\n");
  }
}

ordered_json constant_json(const AnacciConstant& a) {
  ordered_json j;
  j["p"] = a.p;
  j["q"] = a.q;
  j["value"] = a.value;
  j["bracket_lo"] = a.bracket_lo;
  j["bracket_hi"] = a.bracket_hi;
  j["residual"] = a.residual;
  j["iterations"] = a.iterations;
  j["regime"] = std::string(to_string(a.region));
  j["gap"] = a.gap;
  return j;
}

ordered_json table_json(const Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json row;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::visit([&](const auto& v) { row[t.columns[i]] = v; }, r[i]);
    }
    rows.push_back(std::move(row));
  }
  return {{"name", t.name}, {"rows", rows}};
}

void add_common(CLI::App* app, Common& c, bool with_mc) {
  app->add_option("--tol", c.tol, "Solver tolerance")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--output", c.output, "Output path (stdout when omitted)");
  if (with_mc) {
    app->add_option("--seed", c.seed, "Random seed");
    app->add_option("--samples", c.samples, "Monte Carlo samples (0 disables)");
    app->add_option("--threads", c.threads, "Worker threads (0 = hardware count)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized n-anacci constants: roots, recurrences, bounds and dilation geometry"};
  app.require_subcommand(1);
  Common common;

  // solve
  double p = 0.0, q = 0.0;
  auto* solve = app.add_subcommand("solve", "Solve Q(lambda, p, q) = 0 for lambda(p, q)");
  solve->add_option("--p", p, "Weight p")->required();
  solve->add_option("--q", q, "Order q")->required();
  add_common(solve, common, false);

  // inverse
  std::string lambda_text;
  double inv_q = 0.0;
  bool exact_inverse = false;
  auto* inverse = app.add_subcommand("inverse", "Inverse map p(lambda, q)");
  inverse->add_option("--lambda", lambda_text, "lambda (a rational such as 3/2 with --exact)")->required();
  inverse->add_option("--q", inv_q, "Order q (a positive integer with --exact)")->required();
  inverse->add_flag("--exact", exact_inverse, "Exact rational arithmetic, integer q");
  add_common(inverse, common, false);

  // recurrence
  std::string rec_p = "1";
  int rec_n = 2, rec_count = 10, rec_max_terms = 500;
  std::string rec_init;
  bool rec_exact = false;
  double rec_tol = 1e-12;
  auto* recurrence = app.add_subcommand("recurrence", "Weighted n-step recurrence and its ratio limit");
  recurrence->add_option("--p", rec_p, "Weight p")->required();
  recurrence->add_option("--n", rec_n, "Order n")->required()->check(CLI::PositiveNumber);
  recurrence->add_option("--init", rec_init, "Comma separated a_0..a_{n-1} (default 0,...,0,1)");
  recurrence->add_option("--count", rec_count, "Number of terms")->check(CLI::PositiveNumber);
  recurrence->add_option("--max-terms", rec_max_terms, "Budget for the ratio estimate")->check(CLI::PositiveNumber);
  recurrence->add_option("--ratio-tol", rec_tol, "Ratio convergence tolerance")->check(CLI::NonNegativeNumber);
  recurrence->add_flag("--exact", rec_exact, "Rational arithmetic for the terms");
  add_common(recurrence, common, false);

  // anacci
  int an_m = 1, an_n = 2;
  auto* anacci_cmd = app.add_subcommand("anacci", "The (m,n)-anacci constant and its bounds");
  anacci_cmd->add_option("--m", an_m, "m")->required()->check(CLI::PositiveNumber);
  anacci_cmd->add_option("--n", an_n, "n")->required()->check(CLI::PositiveNumber);
  add_common(anacci_cmd, common, false);

  // scene
  std::string body_kind = "ball";
  int sc_n = 2;
  double sc_size = 1.0, sc_base = 1.0, sc_offset = 1.0, sc_O = 0.0;
  std::optional<double> sc_lambda, sc_target;
  auto* scene = app.add_subcommand("scene", "Dilation scene: centers, ordering, Monte Carlo check");
  scene->add_option("--body", body_kind, "ball, cube, cone or pyramid")
      ->check(CLI::IsMember({"ball", "cube", "cone", "pyramid"}));
  scene->add_option("--n", sc_n, "Dimension")->check(CLI::PositiveNumber);
  scene->add_option("--size", sc_size, "Radius, side or height");
  scene->add_option("--base", sc_base, "Cone base radius or pyramid base side");
  scene->add_option("--offset", sc_offset, "Ball center, cube near face or apex on e1");
  scene->add_option("--O", sc_O, "Homothetic center on e1");
  auto* lam_opt = scene->add_option("--lambda", sc_lambda, "Dilation factor");
  auto* target_opt = scene->add_option("--target", sc_target, "Place the shell centroid here instead");
  lam_opt->excludes(target_opt);
  add_common(scene, common, true);

  // fig
  std::string fig_name;
  GridSpec grid;
  auto* fig = app.add_subcommand("fig", "Emit plot data for a figure");
  fig->add_option("figure", fig_name, "fig1, fig2, fig3, fig5, fig6 or fig7")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig5", "fig6", "fig7"}));
  std::optional<double> p_min, p_max, q_min, q_max;
  std::optional<int> p_steps, q_steps;
  fig->add_option("--p-min", p_min, "First axis minimum");
  fig->add_option("--p-max", p_max, "First axis maximum");
  fig->add_option("--p-steps", p_steps, "First axis samples");
  fig->add_option("--q-min", q_min, "q minimum");
  fig->add_option("--q-max", q_max, "q maximum");
  fig->add_option("--q-steps", q_steps, "q samples");
  std::string fig_format = "csv";
  fig->add_option("--format", fig_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  fig->add_option("--output", common.output, "Directory for <table>.csv files (stdout when omitted)");
  fig->add_option("--threads", common.threads, "Worker threads (0 = hardware count)");

  // verify
  std::string suite_name = "all";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", suite_name, "bounds, monotone, geometry, appendices or all")
      ->check(CLI::IsMember({"bounds", "monotone", "geometry", "appendices", "all"}));
  verify->add_option("--m-max", vopt.m_max, "Largest m")->check(CLI::Range(2, 1000));
  verify->add_option("--n-max", vopt.n_max, "Largest n")->check(CLI::Range(1, 1000));
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--samples", vopt.mc_samples, "Monte Carlo samples per scene")
      ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1000000000}));
  verify->add_option("--points", vopt.random_points, "Random parameter points")->check(CLI::PositiveNumber);
  verify->add_option("--threads", vopt.threads, "Worker threads (0 = hardware count)");
  verify->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  common.format = "text";
  verify->add_option("--output", common.output, "Report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      emit(constant_json(solve_lambda(p, q, common.tol)), common);
    } else if (*inverse) {
      ordered_json j;
      if (exact_inverse) {
        if (inv_q < 1 || inv_q != static_cast<int>(inv_q)) {
          throw Error(ErrorCode::InvalidArgument, "--exact needs a positive integer q");
        }
        const Rational lambda = parse_rational(lambda_text);
        if (lambda <= 0) throw Error(ErrorCode::NonPositiveInput, "lambda must be positive");
        const Rational pr = inverse_p_integer(lambda, static_cast<int>(inv_q));
        j["lambda"] = to_string(lambda);
        j["q"] = static_cast<int>(inv_q);
        j["p"] = to_string(pr);
        j["p_decimal"] = to_double(pr);
      } else {
        const double lambda = parse_real(lambda_text);
        if (!(lambda > 0.0) || !(inv_q > 0.0)) throw Error(ErrorCode::NonPositiveInput, "lambda and q must be positive");
        j["lambda"] = lambda;
        j["q"] = inv_q;
        j["p"] = inverse_p(lambda, inv_q);
      }
      emit(j, common);
    } else if (*recurrence) {
      ordered_json j;
      j["p"] = rec_p;
      j["n"] = rec_n;
      RealRecurrence real{to_double(parse_rational(rec_p)), rec_n, {}};
      if (rec_init.empty()) {
        real.init = canonical_init(rec_n);
      } else {
        for (const auto& s : split_list(rec_init)) real.init.push_back(to_double(parse_rational(s)));
      }
      if (static_cast<int>(real.init.size()) != rec_n) {
        throw Error(ErrorCode::InvalidSpec, "--init needs exactly n entries");
      }
      ordered_json terms = ordered_json::array();
      if (rec_exact) {
        ExactRecurrence exact{parse_rational(rec_p), rec_n, {}};
        if (rec_init.empty()) {
          exact.init = canonical_init_exact(rec_n);
        } else {
          for (const auto& s : split_list(rec_init)) exact.init.push_back(parse_rational(s));
        }
        for (const auto& t : generate(exact, rec_count)) terms.push_back(to_string(t));
      } else {
        for (double t : generate(real, rec_count)) terms.push_back(t);
      }
      j["terms"] = terms;
      try {
        const RatioEstimate r = ratio_limit(real, rec_tol, std::max(rec_max_terms, 2 * rec_n));
        j["ratio"] = {{"value", r.value}, {"k_used", r.k_used}, {"k0", r.k0}, {"converged", r.converged}};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoConvergence) throw;
        j["ratio"] = {{"converged", false}, {"error", e.what()}};
      }
      emit(j, common);
    } else if (*anacci_cmd) {
      const AnacciConstant c = anacci::anacci({an_m, an_n});
      ordered_json j;
      j["m"] = an_m;
      j["n"] = an_n;
      j["value"] = c.value;
      j["gap"] = c.gap;
      j["regime"] = std::string(to_string(c.region));
      if (an_n > 1) {
        const BoundPair b = bounds_eq37({an_m, an_n});
        j["lower_bound"] = b.lower;
        j["upper_bound"] = b.upper;
      }
      j["scaled_A"] = (an_m + 1.0) / an_m * c.value;
      j["scaled_B"] = c.value / an_m;
      emit(j, common);
    } else if (*scene) {
      const BodyKind kind = body_kind_from_string(body_kind);
      ConvexBody body;
      switch (kind) {
        case BodyKind::Ball: body = ConvexBody::ball(sc_n, sc_size, sc_offset); break;
        case BodyKind::Cube: body = ConvexBody::cube(sc_n, sc_size, sc_offset); break;
        case BodyKind::Cone: body = ConvexBody::cone(sc_n, sc_size, sc_base, sc_offset); break;
        case BodyKind::Pyramid: body = ConvexBody::pyramid(sc_n, sc_size, sc_base, sc_offset); break;
      }
      DilationScene s;
      if (sc_target) {
        s = solve_scene_for_target(body, sc_O, *sc_target);
      } else {
        if (!sc_lambda) throw Error(ErrorCode::InvalidArgument, "scene needs --lambda or --target");
        s = make_scene(body, sc_O, *sc_lambda);
      }
      const SceneCenters c = scene_centers(s);
      const CenterOrdering ord = center_ordering(s);
      ordered_json j;
      j["body"] = body_kind;
      j["n"] = sc_n;
      j["volume"] = volume(body);
      j["lambda"] = s.lambda;
      j["O"] = c.O;
      j["A"] = c.A;
      j["image_A"] = c.image_A;
      j["B"] = c.B;
      j["B1"] = c.B1;
      j["ordering"] = std::string(to_string(ord));
      j["ordering_holds"] = ordering_chain_holds(c, ord);
      if (common.samples > 0 && s.lambda != 1.0) {
        const McEstimate e = mc_centroid(s, common.seed, common.samples, common.threads);
        j["mc_estimate"] = e.estimate;
        j["mc_stderr"] = e.stderr_;
        j["mc_accepted"] = e.accepted;
      }
      emit(j, common);
    } else if (*fig) {
      const FigureId id = figure_from_string(fig_name);
      grid = default_grid(id);
      if (p_min) grid.p_min = *p_min;
      if (p_max) grid.p_max = *p_max;
      if (p_steps) grid.p_steps = *p_steps;
      if (q_min) grid.q_min = *q_min;
      if (q_max) grid.q_max = *q_max;
      if (q_steps) grid.q_steps = *q_steps;
      const auto tables = figure_tables(id, grid, common.threads);
      if (fig_format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& t : tables) j.push_back(table_json(t));
        std::string path;
        if (!common.output.empty()) {
          std::filesystem::create_directories(common.output);
          path = (std::filesystem::path(common.output) / (fig_name + ".json")).string();
        }
        write_text(path, j.dump(2) + "\n");
      } else if (common.output.empty()) {
        for (std::size_t i = 0; i < tables.size(); ++i) {
          if (i) std::cout << '\n';
          std::cout << "# " << tables[i].name << '\n' << tables[i].to_csv();
        }
      } else {
        std::error_code ec;
        std::filesystem::create_directories(common.output, ec);
        if (ec) throw IoError("cannot create directory '" + common.output + "': " + ec.message());
        for (const auto& t : tables) {
          write_text((std::filesystem::path(common.output) / (t.name + ".csv")).string(), t.to_csv());
        }
      }
    } else if (*verify) {
      const VerifyReport r = run_suite(suite_from_string(suite_name), vopt);
      if (common.format == "json") {
        ordered_json fams = ordered_json::array();
        for (const auto& f : r.families) {
          ordered_json jf{{"name", f.name}, {"checks", f.checks}, {"violations", f.violations},
                          {"passed", f.passed()}};
          jf["worst_margin"] = f.has_margin ? ordered_json(f.worst_margin) : ordered_json(nullptr);
          fams.push_back(std::move(jf));
        }
        write_text(common.output, ordered_json{{"suite", r.suite}, {"passed", r.passed()}, {"families", fams}}.dump(2) + "\n");
      } else {
        write_text(common.output, r.to_text());
      }
      return r.passed() ? kOk : kVerifyFailed;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

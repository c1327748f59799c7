#include "anacci/figures.hpp"

#include "anacci/error.hpp"
#include "anacci/geometry.hpp"
#include "anacci/lattice.hpp"
#include "anacci/qkernel.hpp"
#include "anacci/solver.hpp"
#include "parallel.hpp"

#include <cmath>
#include <string>

namespace anacci {
namespace {

double lerp(double lo, double hi, int i, int steps) {
  // Endpoints are hit exactly.
  return (lo * (steps - 1 - i) + hi * i) / (steps - 1);
}

Cell num(double x) { return Cell{x}; }
Cell num(int x) { return Cell{static_cast<long long>(x)}; }
Cell text(std::string s) { return Cell{std::move(s)}; }

std::vector<Table> fig1(const GridSpec& g, unsigned threads) {
  Table surface{"fig1_surface", {"lambda", "q", "Q"}, {}};
  const auto cells = detail::parallel_map(
      static_cast<std::size_t>(g.p_steps) * g.q_steps, threads, [&](std::size_t k) {
        const double lambda = g.p_at(static_cast<int>(k / g.q_steps));
        const double q = g.q_at(static_cast<int>(k % g.q_steps));
        return std::vector<Cell>{num(lambda), num(q), num(eval_Q({lambda, 1.0, q}))};
      });
  for (const auto& row : cells) surface.add_row(row);

  Table zero{"fig1_zero_curve", {"q", "lambda1", "region"}, {}};
  const auto trace = detail::parallel_map(static_cast<std::size_t>(g.q_steps), threads, [&](std::size_t j) {
    const double q = g.q_at(static_cast<int>(j));
    const AnacciConstant c = solve_lambda(1.0, q);
    return std::vector<Cell>{num(q), num(c.value), text(std::string(to_string(c.region)))};
  });
  for (const auto& row : trace) zero.add_row(row);

  Table marks{"fig1_marks", {"n", "lambda", "Q"}, {}};
  for (int n = 1; n <= 4; ++n) {
    const double value = anacci({1, n}).value;
    marks.add_row({num(n), num(value), num(eval_Q({value, 1.0, static_cast<double>(n)}))});
  }
  return {surface, zero, marks};
}

std::vector<Table> fig2(const GridSpec& g, unsigned threads) {
  Table curves{"fig2_curves", {"a", "q", "lambda"}, {}};
  const auto cells = detail::parallel_map(
      static_cast<std::size_t>(g.p_steps) * g.q_steps, threads, [&](std::size_t k) {
        const double a = g.p_at(static_cast<int>(k / g.q_steps));
        const double q = g.q_at(static_cast<int>(k % g.q_steps));
        return std::vector<Cell>{num(a), num(q), num(solve_lambda(a, q).value)};
      });
  for (const auto& row : cells) curves.add_row(row);

  // q = (p+1)^2 - 1 traced over the q window.
  Table crossover{"fig2_crossover", {"q", "p"}, {}};
  for (int j = 0; j < g.q_steps; ++j) {
    const double q = g.q_at(j);
    const double p = std::sqrt(q + 1.0) - 1.0;
    crossover.add_row({num(q), num(p)});
  }

  Table marks{"fig2_marks", {"m", "n", "value"}, {}};
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 4; ++n) marks.add_row({num(m), num(n), num(anacci({m, n}).value)});
  }
  return {curves, crossover, marks};
}

std::vector<Table> fig3(const GridSpec& g, unsigned threads) {
  Table surface{"fig3_surface", {"p", "q", "lambda", "plane"}, {}};
  const auto cells = detail::parallel_map(
      static_cast<std::size_t>(g.p_steps) * g.q_steps, threads, [&](std::size_t k) {
        const double p = g.p_at(static_cast<int>(k / g.q_steps));
        const double q = g.q_at(static_cast<int>(k % g.q_steps));
        return std::vector<Cell>{num(p), num(q), num(solve_lambda_closed(p, q)), num(p + 1.0)};
      });
  for (const auto& row : cells) surface.add_row(row);

  // Level curve lambda(p, q) = c is p = p(c, q); kept where it lies in the p window.
  Table levels{"fig3_levels", {"c", "q", "p"}, {}};
  for (int k = 1; k <= 8; ++k) {
    const double c = 0.5 * k;
    for (int j = 0; j < g.q_steps; ++j) {
      const double q = g.q_at(j);
      if (!(q > 0.0)) continue;
      const double p = inverse_p(c, q);
      if (p >= g.p_min && p <= g.p_max) levels.add_row({num(c), num(q), num(p)});
    }
  }

  Table restrictions{"fig3_restrictions", {"a", "q", "lambda"}, {}};
  const auto rcells = detail::parallel_map(static_cast<std::size_t>(9) * g.q_steps, threads, [&](std::size_t k) {
    const double a = static_cast<double>(k / g.q_steps + 1) / 3.0;
    const double q = g.q_at(static_cast<int>(k % g.q_steps));
    return std::vector<Cell>{num(a), num(q), num(solve_lambda_closed(a, q))};
  });
  for (const auto& row : rcells) restrictions.add_row(row);

  Table marks{"fig3_marks", {"m", "n", "value"}, {}};
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) marks.add_row({num(m), num(n), num(anacci({m, n}).value)});
  }
  return {surface, levels, restrictions, marks};
}

std::vector<Table> fig5() {
  Table circles{"fig5_circles",
                {"m", "n", "unit_center", "unit_radius", "dilated_center", "dilated_radius",
                 "intersection", "interval_lo", "interval_hi", "shell_centroid"},
                {}};
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const BallRepresentation rep = ball_representation(m, n);
      circles.add_row({num(m), num(n), num(rep.scene.body.axis_offset), num(rep.scene.body.size),
                       num(rep.dilated_center), num(rep.dilated_radius), num(rep.intersection),
                       num(2.0 * m), num(2.0 * (m + 1)), num(rep.shell_centroid)});
    }
  }
  return {circles};
}

// Triangle outline of a 2-cone: apex, then the two base corners.
void add_outline(Table& t, const std::string& label, const ConvexBody& cone) {
  const double apex = cone.axis_offset;
  const double base = cone.axis_offset + cone.size;
  const double r = cone.base_radius_or_side;
  t.add_row({text(label), num(0), num(apex), num(0.0)});
  t.add_row({text(label), num(1), num(base), num(r)});
  t.add_row({text(label), num(2), num(base), num(-r)});
}

Table centers_table(const std::string& name, const DilationScene& scene) {
  const SceneCenters c = scene_centers(scene);
  Table t{name, {"point", "x"}, {}};
  t.add_row({text("O"), num(c.O)});
  t.add_row({text("A"), num(c.A)});
  t.add_row({text("image_A"), num(c.image_A)});
  t.add_row({text("B"), num(c.B)});
  t.add_row({text("B1"), num(c.B1)});
  return t;
}

std::vector<Table> fig6() {
  const ConeRepresentation rep = cone_representation(1, 2);
  Table centers = centers_table("fig6_centers", rep.scene);
  centers.add_row({text("height_lo"), num(rep.height_lo)});
  centers.add_row({text("height_hi"), num(rep.height_hi)});
  Table outline{"fig6_outline", {"body", "vertex", "x", "y"}, {}};
  add_outline(outline, "unit", rep.scene.body);
  add_outline(outline, "dilated", dilate(rep.scene.body, rep.scene.O, rep.lambda));
  return {centers, outline};
}

std::vector<Table> fig7() {
  const ConvexBody cone = ConvexBody::cone(2, 1.0, 1.0, 0.0);
  const DilationScene scene = make_scene(cone, cone.axis_offset, 1.2);
  Table centers = centers_table("fig7_centers", scene);
  Table outline{"fig7_outline", {"body", "vertex", "x", "y"}, {}};
  add_outline(outline, "unit", cone);
  add_outline(outline, "dilated", dilate(cone, scene.O, scene.lambda));
  return {centers, outline};
}

}  // namespace

void GridSpec::validate() const {
  auto axis_ok = [](double lo, double hi, int steps) {
    return std::isfinite(lo) && std::isfinite(hi) && lo < hi && steps >= 2;
  };
  if (!axis_ok(p_min, p_max, p_steps) || !axis_ok(q_min, q_max, q_steps)) {
    throw Error(ErrorCode::InvalidSpec, "grid needs min < max and steps >= 2 on both axes");
  }
}

double GridSpec::p_at(int i) const { return lerp(p_min, p_max, i, p_steps); }
double GridSpec::q_at(int j) const { return lerp(q_min, q_max, j, q_steps); }

std::string_view to_string(FigureId id) noexcept {
  switch (id) {
    case FigureId::Fig1: return "fig1";
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig5: return "fig5";
    case FigureId::Fig6: return "fig6";
    case FigureId::Fig7: return "fig7";
  }
  return "unknown";
}

FigureId figure_from_string(std::string_view name) {
  for (FigureId id : {FigureId::Fig1, FigureId::Fig2, FigureId::Fig3, FigureId::Fig5, FigureId::Fig6,
                      FigureId::Fig7}) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown figure '" + std::string(name) + "'");
}

GridSpec default_grid(FigureId id) {
  switch (id) {
    case FigureId::Fig1: return {0.04, 2.0, 50, 0.08, 4.0, 50};
    case FigureId::Fig2: return {2.0 / 3.0, 8.0 / 3.0, 7, 1.0, 4.0, 61};
    case FigureId::Fig3: return {0.0, 3.0, 31, 0.0, 4.1, 42};
    default: return {0.0, 1.0, 2, 0.0, 1.0, 2};
  }
}

std::vector<Table> figure_tables(FigureId id, const GridSpec& grid, unsigned threads) {
  grid.validate();
  switch (id) {
    case FigureId::Fig1:
      if (grid.p_min <= 0.0 || grid.q_min <= 0.0) {
        throw Error(ErrorCode::InvalidSpec, "fig1 needs lambda > 0 and q > 0");
      }
      return fig1(grid, threads);
    case FigureId::Fig2:
      if (grid.p_min <= 0.0 || grid.q_min <= 0.0) {
        throw Error(ErrorCode::InvalidSpec, "fig2 needs a > 0 and q > 0");
      }
      return fig2(grid, threads);
    case FigureId::Fig3:
      if (grid.p_min < 0.0 || grid.q_min < 0.0) {
        throw Error(ErrorCode::InvalidSpec, "fig3 needs p >= 0 and q >= 0");
      }
      return fig3(grid, threads);
    case FigureId::Fig5: return fig5();
    case FigureId::Fig6: return fig6();
    case FigureId::Fig7: return fig7();
  }
  return {};
}

std::vector<Table> figure_tables(FigureId id, unsigned threads) {
  return figure_tables(id, default_grid(id), threads);
}

}  // namespace anacci

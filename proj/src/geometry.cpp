#include "anacci/geometry.hpp"

#include "anacci/error.hpp"
#include "anacci/lattice.hpp"
#include "anacci/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace anacci {
namespace {

void require_dimension(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 1");
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::NonPositiveInput, std::string(what) + " must be positive and finite");
  }
}

// Scale used to decide when two axis positions coincide.
double scale_of(const ConvexBody& body) {
  return std::max({1.0, std::fabs(body.axis_min()), std::fabs(body.axis_max())});
}

void require_inside(const ConvexBody& body, double O) {
  if (!body.contains_axis_point(O, 1e-12 * scale_of(body))) {
    throw Error(ErrorCode::OOutsideBody, "homothetic center " + std::to_string(O) +
                                             " is not inside the " + std::string(to_string(body.kind)));
  }
}

void require_off_centroid(const ConvexBody& body, double O) {
  if (std::fabs(centroid(body) - O) <= 1e-12 * scale_of(body)) {
    throw Error(ErrorCode::OEqualsA, "homothetic center coincides with the centroid");
  }
}

}  // namespace

std::string_view to_string(BodyKind kind) noexcept {
  switch (kind) {
    case BodyKind::Ball: return "ball";
    case BodyKind::Cube: return "cube";
    case BodyKind::Cone: return "cone";
    case BodyKind::Pyramid: return "pyramid";
  }
  return "unknown";
}

BodyKind body_kind_from_string(std::string_view name) {
  if (name == "ball") return BodyKind::Ball;
  if (name == "cube") return BodyKind::Cube;
  if (name == "cone") return BodyKind::Cone;
  if (name == "pyramid") return BodyKind::Pyramid;
  throw Error(ErrorCode::InvalidArgument, "unknown body kind '" + std::string(name) + "'");
}

ConvexBody ConvexBody::ball(int n, double radius, double center) {
  require_dimension(n);
  require_positive(radius, "radius");
  return {BodyKind::Ball, n, radius, 1.0, center};
}

ConvexBody ConvexBody::cube(int n, double side, double near_face) {
  require_dimension(n);
  require_positive(side, "side");
  return {BodyKind::Cube, n, side, 1.0, near_face};
}

ConvexBody ConvexBody::cone(int n, double height, double base_radius, double apex) {
  require_dimension(n);
  require_positive(height, "height");
  require_positive(base_radius, "base radius");
  return {BodyKind::Cone, n, height, base_radius, apex};
}

ConvexBody ConvexBody::pyramid(int n, double height, double base_side, double apex) {
  require_dimension(n);
  require_positive(height, "height");
  require_positive(base_side, "base side");
  return {BodyKind::Pyramid, n, height, base_side, apex};
}

double ConvexBody::axis_min() const {
  return kind == BodyKind::Ball ? axis_offset - size : axis_offset;
}

double ConvexBody::axis_max() const { return axis_offset + size; }

double ConvexBody::transverse_half_width() const {
  switch (kind) {
    case BodyKind::Ball: return size;
    case BodyKind::Cube: return 0.5 * size;
    case BodyKind::Cone: return base_radius_or_side;
    case BodyKind::Pyramid: return 0.5 * base_radius_or_side;
  }
  return 0.0;
}

bool ConvexBody::contains(std::span<const double> x, double slack) const {
  const double x1 = x[0];
  const auto transverse = x.subspan(1);
  switch (kind) {
    case BodyKind::Ball: {
      double r2 = (x1 - axis_offset) * (x1 - axis_offset);
      for (double v : transverse) r2 += v * v;
      return r2 <= (size + slack) * (size + slack);
    }
    case BodyKind::Cube: {
      if (x1 < axis_offset - slack || x1 > axis_offset + size + slack) return false;
      const double half = 0.5 * size + slack;
      return std::all_of(transverse.begin(), transverse.end(),
                         [half](double v) { return std::fabs(v) <= half; });
    }
    case BodyKind::Cone: {
      if (x1 < axis_offset - slack || x1 > axis_offset + size + slack) return false;
      double r2 = 0.0;
      for (double v : transverse) r2 += v * v;
      const double radius = base_radius_or_side * std::max(0.0, x1 - axis_offset) / size + slack;
      return r2 <= radius * radius;
    }
    case BodyKind::Pyramid: {
      if (x1 < axis_offset - slack || x1 > axis_offset + size + slack) return false;
      const double half = 0.5 * base_radius_or_side * std::max(0.0, x1 - axis_offset) / size + slack;
      return std::all_of(transverse.begin(), transverse.end(),
                         [half](double v) { return std::fabs(v) <= half; });
    }
  }
  return false;
}

bool ConvexBody::contains_axis_point(double x, double slack) const {
  return x >= axis_min() - slack && x <= axis_max() + slack;
}

double centroid(const ConvexBody& body) {
  switch (body.kind) {
    case BodyKind::Ball: return body.axis_offset;
    case BodyKind::Cube: return body.axis_offset + 0.5 * body.size;
    case BodyKind::Cone:
    case BodyKind::Pyramid:
      // n : 1 split of the apex-to-base segment
      return body.axis_offset + body.size * body.n / (body.n + 1.0);
  }
  return 0.0;
}

double ball_volume(int n, double radius) {
  if (n == 0) return 1.0;
  return std::pow(std::numbers::pi, 0.5 * n) * std::pow(radius, n) / std::tgamma(0.5 * n + 1.0);
}

double volume(const ConvexBody& body) {
  switch (body.kind) {
    case BodyKind::Ball: return ball_volume(body.n, body.size);
    case BodyKind::Cube: return std::pow(body.size, body.n);
    case BodyKind::Cone: return ball_volume(body.n - 1, body.base_radius_or_side) * body.size / body.n;
    case BodyKind::Pyramid:
      return std::pow(body.base_radius_or_side, body.n - 1) * body.size / body.n;
  }
  return 0.0;
}

ConvexBody dilate(const ConvexBody& body, double O, double lambda) {
  require_positive(lambda, "dilation factor");
  require_inside(body, O);
  ConvexBody image = body;
  image.size = lambda * body.size;
  if (body.kind == BodyKind::Cone || body.kind == BodyKind::Pyramid) {
    image.base_radius_or_side = lambda * body.base_radius_or_side;
  }
  image.axis_offset = O + lambda * (body.axis_offset - O);
  return image;
}

DilationScene make_scene(const ConvexBody& body, double O, double lambda) {
  require_positive(lambda, "dilation factor");
  require_inside(body, O);
  require_off_centroid(body, O);
  return {body, O, lambda};
}

double shell_centroid(const DilationScene& scene) {
  if (scene.lambda == 1.0) {
    throw Error(ErrorCode::LambdaOne, "the shell is empty at lambda = 1; use b_one");
  }
  require_positive(scene.lambda, "dilation factor");
  const long double A = centroid(scene.body);
  const long double O = scene.O;
  const long double lambda = scene.lambda;
  const long double offset = A - O;
  const long double image_A = O + lambda * offset;
  // Forces proportional to the volumes V and lambda^n V act at A and Lambda(A);
  // the fulcrum sits at Lambda(A) + (Lambda(A) - A) / (lambda^n - 1).
  const long double denom = std::expm1(static_cast<long double>(scene.body.n) * std::log(lambda));
  return static_cast<double>(image_A + (lambda - 1.0L) * offset / denom);
}

double b_one(const ConvexBody& body, double O) {
  require_off_centroid(body, O);
  const double A = centroid(body);
  return A + (A - O) / body.n;
}

double lambda_from_p(int n, double p) {
  require_dimension(n);
  require_positive(p, "p");
  const RegionClass region = classify(p, static_cast<double>(n));
  if (region == RegionClass::Critical) return 1.0;
  if (region == RegionClass::Sub) {
    throw Error(ErrorCode::PTooSmall, "p = " + std::to_string(p) + " is below 1/n = " + std::to_string(1.0 / n));
  }
  return solve_lambda(p, n).value;
}

DilationScene solve_scene_for_target(const ConvexBody& body, double O, double targetB) {
  require_inside(body, O);
  require_off_centroid(body, O);
  const double A = centroid(body);
  const double direction = A > O ? 1.0 : -1.0;
  const double beyond = (targetB - A) * direction;
  if (!(beyond > 0.0)) {
    throw Error(ErrorCode::TargetUnreachable, "target must lie beyond the centroid as seen from O");
  }
  const double p = beyond / ((A - O) * direction);
  const RegionClass region = classify(p, static_cast<double>(body.n));
  if (region == RegionClass::Sub) {
    throw Error(ErrorCode::TargetUnreachable,
                "d(A,B)/d(O,A) = " + std::to_string(p) + " is below 1/n; no dilation puts B there");
  }
  return {body, O, lambda_from_p(body.n, p)};
}

SceneCenters scene_centers(const DilationScene& scene) {
  SceneCenters c{};
  c.O = scene.O;
  c.A = centroid(scene.body);
  c.image_A = scene.O + scene.lambda * (c.A - scene.O);
  c.B1 = b_one(scene.body, scene.O);
  c.B = scene.lambda == 1.0 ? c.B1 : shell_centroid(scene);
  return c;
}

std::string_view to_string(CenterOrdering ordering) noexcept {
  switch (ordering) {
    case CenterOrdering::FarAbove: return "i";
    case CenterOrdering::Threshold: return "ii";
    case CenterOrdering::NearAbove: return "iii";
    case CenterOrdering::Identity: return "iv";
    case CenterOrdering::Contraction: return "v";
  }
  return "?";
}

CenterOrdering center_ordering(const DilationScene& scene, double tol) {
  const double lambda = scene.lambda;
  const double threshold = 1.0 + 1.0 / scene.body.n;
  if (std::fabs(lambda - 1.0) <= tol) return CenterOrdering::Identity;
  if (lambda < 1.0) return CenterOrdering::Contraction;
  if (std::fabs(lambda - threshold) <= tol * threshold) return CenterOrdering::Threshold;
  return lambda > threshold ? CenterOrdering::FarAbove : CenterOrdering::NearAbove;
}

bool ordering_chain_holds(const SceneCenters& c, CenterOrdering ordering, double tol) {
  const double direction = c.A > c.O ? 1.0 : -1.0;
  auto at = [&](double x) { return (x - c.O) * direction; };
  const double scale = std::max({1.0, std::fabs(at(c.B)), std::fabs(at(c.B1))});
  const double eps = tol * scale;
  auto lt = [eps](double a, double b) { return b - a > eps; };
  auto eq = [eps](double a, double b) { return std::fabs(a - b) <= eps; };
  const double o = 0.0;
  const double a = at(c.A);
  const double la = at(c.image_A);
  const double b = at(c.B);
  const double b1 = at(c.B1);
  switch (ordering) {
    case CenterOrdering::FarAbove: return lt(o, a) && lt(a, b1) && lt(b1, la) && lt(la, b);
    case CenterOrdering::Threshold: return lt(o, a) && lt(a, b1) && eq(b1, la) && lt(la, b);
    case CenterOrdering::NearAbove: return lt(o, a) && lt(a, la) && lt(la, b1) && lt(b1, b);
    case CenterOrdering::Identity: return lt(o, a) && eq(a, la) && lt(la, b1) && eq(b1, b);
    case CenterOrdering::Contraction: return lt(o, la) && lt(la, a) && lt(a, b) && lt(b, b1);
  }
  return false;
}

BallRepresentation ball_representation(int m, int n) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  require_dimension(n);
  const AnacciConstant phi = anacci({m, n});
  const ConvexBody unit = ConvexBody::ball(n, 1.0, 1.0);
  BallRepresentation rep{};
  rep.m = m;
  rep.n = n;
  rep.scene = make_scene(unit, 0.0, phi.value);
  rep.lambda = phi.value;
  rep.dilated_center = phi.value;
  rep.dilated_radius = phi.value;
  rep.intersection = 2.0 * phi.value;
  rep.intersection_margin = 2.0 * phi.gap;
  rep.shell_centroid = phi.value == 1.0 ? b_one(unit, 0.0) : shell_centroid(rep.scene);
  return rep;
}

ConeRepresentation cone_representation(int m, int n) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  require_dimension(n);
  const AnacciConstant phi = anacci({m, n});
  const ConvexBody cone = ConvexBody::cone(n, 1.0, 1.0, 0.0);
  const double denom = static_cast<double>(m) * (n + 1);
  const double O = (static_cast<double>(m) * n - 1.0) / denom;
  ConeRepresentation rep{};
  rep.m = m;
  rep.n = n;
  rep.scene = make_scene(cone, O, phi.value);
  rep.lambda = phi.value;
  rep.image_centroid = (phi.value + static_cast<double>(m) * n - 1.0) / denom;
  // 1 - (Phi + mn - 1)/(m(n+1)) = (m + 1 - Phi)/(m(n+1))
  rep.image_centroid_margin = phi.gap / denom;
  rep.height_lo = (1.0 - phi.value) * O;
  rep.height_hi = rep.height_lo + phi.value;
  rep.shell_centroid = phi.value == 1.0 ? b_one(cone, O) : shell_centroid(rep.scene);
  return rep;
}

NestingReport height_interval_nesting(int n, int m_max) {
  if (m_max < 2) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 2");
  NestingReport report;
  report.n = n;
  for (int m = 1; m <= m_max; ++m) {
    const auto rep = cone_representation(m, n);
    report.left_ends.push_back(rep.height_lo);
    report.right_ends.push_back(rep.height_hi);
  }
  report.nested = true;
  for (std::size_t i = 0; i + 1 < report.left_ends.size(); ++i) {
    report.left_margins.push_back(report.left_ends[i] - report.left_ends[i + 1]);
    report.right_margins.push_back(report.right_ends[i + 1] - report.right_ends[i]);
    report.nested = report.nested && report.left_margins.back() > 0.0 && report.right_margins.back() > 0.0;
  }
  return report;
}

CentroidRatioReport centroid_ratio_theorem(BodyKind kind, int n, double h) {
  if (kind != BodyKind::Cone && kind != BodyKind::Pyramid) {
    throw Error(ErrorCode::InvalidArgument, "the apex construction needs a cone or a pyramid");
  }
  const ConvexBody body = kind == BodyKind::Cone ? ConvexBody::cone(n, 1.0, 1.0, 0.0)
                                                 : ConvexBody::pyramid(n, 1.0, 1.0, 0.0);
  const double O = body.axis_offset;
  CentroidRatioReport report{};
  report.A = centroid(body);
  const double below = shell_centroid(make_scene(body, O, 1.0 - h));
  const double above = shell_centroid(make_scene(body, O, 1.0 + h));
  report.B1_limit = 0.5 * (below + above);
  report.base_centroid = body.axis_offset + body.size;
  report.ratio = (report.A - O) / (report.B1_limit - report.A);
  report.holds = std::fabs(below - report.base_centroid) <= 1e-4 &&
                 std::fabs(above - report.base_centroid) <= 1e-4 &&
                 std::fabs(report.B1_limit - report.base_centroid) <= 1e-6 &&
                 std::fabs(report.ratio - n) <= 1e-6 * n;
  return report;
}

bool centroid_ratio_theorem_check(BodyKind kind, int n) { return centroid_ratio_theorem(kind, n).holds; }

}  // namespace anacci

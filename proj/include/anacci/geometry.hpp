#pragma once

#include <span>
#include <string_view>
#include <vector>

// Axis-aligned n-dimensional convex bodies and their dilations about a
// homothetic center on the first coordinate axis. Every center of mass used
// here lies on that axis, so positions are scalars along e1 while volumes and
// membership keep the full dimension n.
namespace anacci {

enum class BodyKind { Ball, Cube, Cone, Pyramid };

std::string_view to_string(BodyKind kind) noexcept;
BodyKind body_kind_from_string(std::string_view name);

struct ConvexBody {
  BodyKind kind = BodyKind::Ball;
  int n = 1;
  double size = 1.0;                 // ball radius, cube side, cone/pyramid height
  double base_radius_or_side = 1.0;  // cone base radius, pyramid base side; unused otherwise
  double axis_offset = 0.0;          // ball center, cube near-face center, cone/pyramid apex

  static ConvexBody ball(int n, double radius, double center);
  static ConvexBody cube(int n, double side, double near_face);
  /// Apex at `apex`, base (an (n-1)-ball) centered at apex + height.
  static ConvexBody cone(int n, double height, double base_radius, double apex);
  /// Apex at `apex`, base (an (n-1)-cube) centered at apex + height.
  static ConvexBody pyramid(int n, double height, double base_side, double apex);

  /// Extent along e1.
  double axis_min() const;
  double axis_max() const;
  /// Half-width of the bounding box in the transverse coordinates.
  double transverse_half_width() const;

  bool contains(std::span<const double> x, double slack = 0.0) const;
  /// Membership of the axis point x * e1.
  bool contains_axis_point(double x, double slack = 1e-12) const;
};

double centroid(const ConvexBody& body);
double volume(const ConvexBody& body);
/// Volume of the n-ball of the given radius; the 0-ball has volume 1.
double ball_volume(int n, double radius);

/// Image under x -> O + lambda (x - O). Throws Error(OOutsideBody).
ConvexBody dilate(const ConvexBody& body, double O, double lambda);

struct DilationScene {
  ConvexBody body;
  double O = 0.0;
  double lambda = 1.0;
};

/// Validates O inside the body and O != A. Throws Error(OOutsideBody), Error(OEqualsA),
/// Error(NonPositiveInput).
DilationScene make_scene(const ConvexBody& body, double O, double lambda);

/// Centroid of the shell difference between the body and its image, from the
/// lever balance of the two volumes. Throws Error(LambdaOne) for lambda = 1.
double shell_centroid(const DilationScene& scene);

/// lim_{lambda -> 1} of the shell centroid: A + (A - O)/n. Throws Error(OEqualsA).
double b_one(const ConvexBody& body, double O);

/// lambda^(n)(p) for p > 1/n, 1 at p = 1/n. Throws Error(PTooSmall) below 1/n.
double lambda_from_p(int n, double p);

/// Scene whose shell centroid sits at `targetB`: lambda = lambda^(n)(p) with
/// p = d(A, targetB) / d(O, A), or the lambda = 1 scene when p = 1/n.
/// Throws Error(TargetUnreachable), Error(OEqualsA).
DilationScene solve_scene_for_target(const ConvexBody& body, double O, double targetB);

struct SceneCenters {
  double O;
  double A;
  double image_A;   // Lambda(A)
  double B;         // shell centroid; equals B1 when lambda = 1
  double B1;
};

SceneCenters scene_centers(const DilationScene& scene);

enum class CenterOrdering {
  FarAbove,     // lambda > 1 + 1/n:       O < A < B(1) < Lambda(A) < B
  Threshold,    // lambda = 1 + 1/n:       O < A < B(1) = Lambda(A) < B
  NearAbove,    // 1 < lambda < 1 + 1/n:   O < A < Lambda(A) < B(1) < B
  Identity,     // lambda = 1:             O < A = Lambda(A) < B(1) = B
  Contraction,  // 0 < lambda < 1:         O < Lambda(A) < A < B < B(1)
};

std::string_view to_string(CenterOrdering ordering) noexcept;

/// Case selected by lambda against 1 and 1 + 1/n; boundaries match within `tol`.
CenterOrdering center_ordering(const DilationScene& scene, double tol = 1e-12);

/// True when the computed centers satisfy the chain of `ordering`, using
/// distances from O along O -> A: equalities within `tol`, strict steps > tol.
bool ordering_chain_holds(const SceneCenters& centers, CenterOrdering ordering, double tol = 1e-12);

struct BallRepresentation {
  int m;
  int n;
  DilationScene scene;
  double lambda;            // Phi^(n)(m)
  double dilated_center;    // = lambda
  double dilated_radius;    // = lambda
  double intersection;      // 2 Phi^(n)(m), where the dilated sphere meets e1
  double intersection_margin;  // 2(m+1) - intersection, from the gap
  double shell_centroid;    // m + 1
};

/// Unit n-ball centered at e1, O = 0, shell centroid at (m+1) e1.
BallRepresentation ball_representation(int m, int n);

struct ConeRepresentation {
  int m;
  int n;
  DilationScene scene;
  double lambda;               // Phi^(n)(m)
  double image_centroid;       // (Phi + mn - 1) / (m (n+1))
  double image_centroid_margin;  // 1 - image_centroid, from the gap
  double height_lo;
  double height_hi;
  double shell_centroid;       // 1, the base center
};

/// Unit-height n-cone with apex 0, O = (mn-1)/(m(n+1)), shell centroid at the base center.
ConeRepresentation cone_representation(int m, int n);

struct NestingReport {
  int n;
  std::vector<double> left_ends;
  std::vector<double> right_ends;
  std::vector<double> left_margins;   // left[m] - left[m+1] > 0
  std::vector<double> right_margins;  // right[m+1] - right[m] > 0
  bool nested = false;
};

/// Checks the cone height intervals for m = 1..m_max at fixed n. m_max >= 2.
NestingReport height_interval_nesting(int n, int m_max);

struct CentroidRatioReport {
  double A;
  double B1_limit;        // symmetric average of B(1 - h) and B(1 + h)
  double base_centroid;   // apex + height
  double ratio;           // d(O, A) / d(A, B(1))
  bool holds = false;
};

/// Dilates a unit-height cone or pyramid about its apex and checks that the
/// shell centroid limit lands on the base centroid with d(O,A)/d(A,B(1)) = n.
CentroidRatioReport centroid_ratio_theorem(BodyKind kind, int n, double h = 1e-5);
bool centroid_ratio_theorem_check(BodyKind kind, int n);

}  // namespace anacci

#include "anacci/verify.hpp"

#include "anacci/error.hpp"
#include "anacci/lattice.hpp"
#include "anacci/montecarlo.hpp"
#include "anacci/qkernel.hpp"
#include "anacci/rational.hpp"
#include "anacci/solver.hpp"
#include "parallel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace anacci {
namespace {

void merge_margin(CheckFamily& f, double margin, bool ok) {
  ++f.checks;
  if (!ok) ++f.violations;
  if (!f.has_margin || margin < f.worst_margin || std::isnan(margin)) f.worst_margin = margin;
  f.has_margin = true;
}

struct RandomPoint {
  double p;
  double q;
};

std::vector<RandomPoint> random_points(const VerifyOptions& opt, double p_lo, double p_hi, double q_lo,
                                       double q_hi) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> up(p_lo, p_hi);
  std::uniform_real_distribution<double> uq(q_lo, q_hi);
  std::vector<RandomPoint> pts(static_cast<std::size_t>(opt.random_points));
  for (auto& pt : pts) {
    pt.p = up(rng);
    pt.q = uq(rng);
  }
  return pts;
}

void add_if_used(std::vector<CheckFamily>& out, CheckFamily f) {
  if (f.checks > 0) out.push_back(std::move(f));
}

// P(k) = k^n - m (k^(n-1) + ... + 1) in exact integers.
BigInt exact_P(long long k, int m, int n) {
  BigInt power = 1;
  BigInt tail = 0;
  for (int i = 0; i < n; ++i) {
    tail += power;
    power *= k;
  }
  return power - BigInt(m) * tail;
}

// ---------------------------------------------------------------- bounds

std::vector<CheckFamily> bounds_suite(const VerifyOptions& opt) {
  CheckFamily basic{"basic lower bound (p+1)q/(q+1) < lambda"};
  CheckFamily upper{"upper bound lambda < p+1"};
  CheckFamily sub{"sub regime 0 < lambda < (p+1)q/(q+1) < 1"};
  CheckFamily refined{"refined lower bound p+1-1/(p+1) < lambda"};
  CheckFamily eq37{"lattice sandwich m+1-1/(m+1) < Phi < m+1"};
  CheckFamily crossover{"basic <= refined iff q <= (p+1)^2-1 (exact)"};

  auto check_super = [&](const AnacciConstant& c) {
    basic.strict((c.p + 1.0) / (c.q + 1.0) - c.gap);
    upper.strict(c.gap);
    if (refined_bound_applies(c.p, c.q)) refined.strict(1.0 / (c.p + 1.0) - c.gap);
  };

  for (int m = 1; m <= opt.m_max; ++m) {
    for (int n = 1; n <= opt.n_max; ++n) {
      const AnacciConstant c = anacci({m, n});
      if (c.region == RegionClass::Super) check_super(c);
      if (n > 1) {
        // lower: upper - 1/(m+1) < upper - gap; upper: gap > 0
        const BoundPair b = bounds_eq37({m, n});
        eq37.strict(std::min((b.upper - b.lower) - c.gap, c.gap));
      }
    }
  }

  const auto pts = random_points(opt, 0.05, 5.0, 0.05, 40.0);
  const auto solved = detail::parallel_map(pts.size(), opt.threads,
                                           [&](std::size_t i) { return solve_lambda(pts[i].p, pts[i].q); });
  for (const auto& c : solved) {
    if (c.region == RegionClass::Super) {
      check_super(c);
    } else if (c.region == RegionClass::Sub) {
      const double lmin = lambda_min(c.p, c.q);
      sub.strict(std::min({c.value, lmin - c.value, 1.0 - lmin}));
    }
  }

  for (int i = 1; i <= 24; ++i) {
    for (int j = 1; j <= 160; ++j) {
      const Rational p(i, 4);
      const Rational q(j, 4);
      const bool basic_weaker = lower_bound_basic(p, q) <= lower_bound_refined(p);
      crossover.logical(basic_weaker == (q <= bound_crossover(p)));
    }
  }
  return {basic, upper, sub, refined, eq37, crossover};
}

// ---------------------------------------------------------------- monotone

void increasing(CheckFamily& f, const std::vector<AnacciConstant>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) f.strict(value_difference(seq[i + 1], seq[i]));
}

std::vector<CheckFamily> monotone_suite(const VerifyOptions& opt) {
  CheckFamily fixed_m{"Phi^(n)(m) increasing in n"};
  CheckFamily fixed_n{"Phi^(n)(m) increasing in m"};
  CheckFamily diag_kn{"Phi^(n)(kn) increasing in n"};
  CheckFamily diag_km{"Phi^(km)(m) increasing in m"};
  CheckFamily scaled_a{"(m+1)/m Phi^(n)(m) increasing in m"};
  CheckFamily scaled_b{"Phi^(n)(m)/m decreasing in m"};
  CheckFamily scaled_b_box{"1 < Phi^(n)(m)/m < 1+1/m"};
  CheckFamily scaled_b_final{"final Phi^(n)(m_max)/m_max in (1, 1+1/m_max+1e-9)"};
  CheckFamily lines{"lambda increasing along lines of angle in [0, pi/2]"};
  CheckFamily concave{"midpoint concavity along axis lines in pq >= 1"};
  CheckFamily asymptote{"p+1-lambda(p,q) decreasing in q, below 0.05 at q=500"};
  CheckFamily p_le{"p <= lambda(p,q) for q >= 1"};
  CheckFamily limits{"lambda -> 0 as q -> 0 or p -> 0"};
  CheckFamily integer{"Phi^(n)(m) is an integer iff n = 1 (exact)"};

  for (int m = 1; m <= opt.m_max; ++m) increasing(fixed_m, seq_fixed_m(m, opt.n_max));
  for (int n = 1; n <= opt.n_max; ++n) increasing(fixed_n, seq_fixed_n(n, opt.m_max));
  for (int k = 1; k <= 3; ++k) {
    increasing(diag_kn, seq_diagonal(k, opt.n_max, Diagonal::KN));
    increasing(diag_km, seq_diagonal(k, opt.m_max, Diagonal::KM));
  }

  for (int n = 1; n <= opt.n_max; ++n) {
    const auto seq = seq_fixed_n(n, opt.m_max);
    for (int m = 1; m < opt.m_max; ++m) {
      const double g0 = seq[static_cast<std::size_t>(m - 1)].gap;
      const double g1 = seq[static_cast<std::size_t>(m)].gap;
      const double md = m;
      // (m+2)^2/(m+1) - (m+1)^2/m = (m^2+m-1)/(m(m+1))
      scaled_a.strict((md * md + md - 1.0) / (md * (md + 1.0)) - ((md + 2.0) / (md + 1.0) * g1 - (md + 1.0) / md * g0));
      if (n > 1) scaled_b.strict(1.0 / (md * (md + 1.0)) - g0 / md + g1 / (md + 1.0));
    }
    if (n > 1) {
      for (int m = 1; m <= opt.m_max; ++m) {
        const double g = seq[static_cast<std::size_t>(m - 1)].gap;
        scaled_b_box.strict(std::min((1.0 - g) / m, g / m));
      }
      const double last = scaled_seq_B(n, opt.m_max).back();
      const double hi = 1.0 + 1.0 / opt.m_max + 1e-9;
      scaled_b_final.strict(std::min(last - 1.0, hi - last));
    }
  }

  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> up(0.1, 5.0);
  std::uniform_real_distribution<double> uq(0.25, 40.0);
  std::uniform_real_distribution<double> ua(0.0, std::numbers::pi / 2);
  std::uniform_real_distribution<double> ut(0.01, 1.0);
  const int line_count = std::max(1, opt.random_points / 10);
  for (int i = 0; i < line_count; ++i) {
    const double p = up(rng);
    const double q = uq(rng);
    const double a = ua(rng);
    const double t = ut(rng);
    const AnacciConstant c1 = solve_lambda(p, q);
    const AnacciConstant c2 = solve_lambda(p + t * std::cos(a), q + t * std::sin(a));
    lines.strict(value_difference(c2, c1));
  }

  auto midpoint = [&](double p1, double q1, double p2, double q2) {
    const AnacciConstant a = solve_lambda(p1, q1);
    const AnacciConstant b = solve_lambda(p2, q2);
    const AnacciConstant c = solve_lambda(0.5 * (p1 + p2), 0.5 * (q1 + q2));
    const double chord = 0.5 * (value_difference(a, c) + value_difference(b, c));
    concave.non_strict(1e-12 - chord);
  };
  for (int i = 0; i < line_count; ++i) {
    const double p = up(rng);
    const double q1 = std::max(1.0 / p, uq(rng));
    const double q2 = std::max(1.0 / p, uq(rng));
    midpoint(p, q1, p, q2);
    const double q = std::max(1.0, uq(rng));
    const double p1 = std::max(1.0 / q, up(rng));
    const double p2 = std::max(1.0 / q, up(rng));
    midpoint(p1, q, p2, q);
  }

  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double q : {10.0, 50.0, 100.0, 500.0}) {
      const double g = solve_lambda(p, q).gap;
      asymptote.strict(prev - g);
      prev = g;
    }
    asymptote.strict(0.05 - prev);
  }

  for (int i = 0; i < line_count; ++i) {
    const double p = up(rng);
    const double q = std::max(1.0, uq(rng));
    const AnacciConstant c = solve_lambda(p, q);
    p_le.non_strict(c.region == RegionClass::Super ? 1.0 - c.gap + 1e-12 : c.value - p + 1e-12);
  }

  for (double p : {0.5, 1.0, 2.0, 3.0}) limits.strict(0.02 - solve_lambda(p, 1e-4).value);
  for (double q : {0.5, 1.0, 2.0}) limits.strict(0.02 - solve_lambda(1e-4, q).value);

  const int imax = std::min(12, std::max(opt.m_max, opt.n_max));
  for (int m = 1; m <= imax; ++m) {
    for (int n = 1; n <= imax; ++n) {
      const double value = anacci({m, n}).value;
      if (n == 1) {
        integer.logical(value == m);
      } else {
        // One sign change between m and m+1 puts the unique root > 1 strictly inside.
        integer.logical(exact_P(m, m, n) < 0 && exact_P(m + 1, m, n) > 0 && value > m && value < m + 1);
      }
    }
  }

  return {fixed_m, fixed_n, diag_kn, diag_km, scaled_a, scaled_b, scaled_b_box, scaled_b_final,
          lines, concave, asymptote, p_le, limits, integer};
}

// ---------------------------------------------------------------- appendices

std::vector<CheckFamily> appendices_suite(const VerifyOptions& opt) {
  CheckFamily a_upper{"(m+1)/m Phi(m) < (m+1)^2/m"};
  CheckFamily a_lower{"(m+2)/(m+1) (m+2-1/(m+2)) < (m+2)/(m+1) Phi(m+1)"};
  CheckFamily b_lower{"(m+2)/(m+1) - 1/((m+2)(m+1)) < Phi(m+1)/(m+1)"};
  CheckFamily b_upper{"Phi(m+1)/(m+1) < (m+2)/(m+1)"};
  CheckFamily c_left{"cone height intervals: left ends decrease in m"};
  CheckFamily c_right{"cone height intervals: right ends increase in m"};

  for (int n = 2; n <= opt.n_max; ++n) {
    const auto seq = seq_fixed_n(n, opt.m_max + 1);
    for (int m = 1; m <= opt.m_max; ++m) {
      const double md = m;
      const double g0 = seq[static_cast<std::size_t>(m - 1)].gap;
      const double g1 = seq[static_cast<std::size_t>(m)].gap;
      a_upper.strict((md + 1.0) / md * g0);
      a_lower.strict((md + 2.0) / (md + 1.0) * (1.0 / (md + 2.0) - g1));
      b_lower.strict((1.0 / (md + 2.0) - g1) / (md + 1.0));
      b_upper.strict(g1 / (md + 1.0));
    }
  }
  for (int n = 1; n <= opt.n_max; ++n) {
    const NestingReport r = height_interval_nesting(n, std::max(2, opt.m_max));
    for (double d : r.left_margins) c_left.strict(d);
    for (double d : r.right_margins) c_right.strict(d);
  }
  return {a_upper, a_lower, b_lower, b_upper, c_left, c_right};
}

// ---------------------------------------------------------------- geometry

ConvexBody standard_body(BodyKind kind, int n) {
  switch (kind) {
    case BodyKind::Ball: return ConvexBody::ball(n, 1.0, 1.0);
    case BodyKind::Cube: return ConvexBody::cube(n, 1.0, 0.0);
    case BodyKind::Cone: return ConvexBody::cone(n, 1.0, 1.0, 0.0);
    case BodyKind::Pyramid: return ConvexBody::pyramid(n, 1.0, 1.0, 0.0);
  }
  return ConvexBody::ball(n, 1.0, 1.0);
}

// An interior center a quarter of the way from the near end to the centroid.
double standard_center(const ConvexBody& body) {
  return body.axis_min() + 0.25 * (centroid(body) - body.axis_min());
}

constexpr BodyKind kAllKinds[] = {BodyKind::Ball, BodyKind::Cube, BodyKind::Cone, BodyKind::Pyramid};

std::vector<CheckFamily> geometry_suite(const VerifyOptions& opt) {
  CheckFamily lever{"lever identity lambda^n d(Lambda(A),B) = d(A,B) to 1e-12"};
  CheckFamily ordering{"center ordering chains (five cases)"};
  CheckFamily round_trip{"p -> lambda -> d(A,B)/d(O,A) recovers p to 1e-10"};
  CheckFamily round_trip_sub{"contraction: d(Lambda(A),B)/d(O,Lambda(A)) recovers p to 1e-10"};
  CheckFamily limit{"B(1 -+ 1e-5) within 1e-4 of B(1)"};
  CheckFamily ratio{"apex dilation: B(1) at the base centroid, d(O,A)/d(A,B(1)) = n"};
  CheckFamily mc{"shell centroid within 4 stderr of Monte Carlo"};
  CheckFamily ball_rep{"ball representation 2 Phi^(n)(m) in [2m, 2m+2), increasing in n"};
  CheckFamily cone_rep{"cone representation image centroid in [1/2, 1)"};

  const int n_geo = std::min(opt.n_max, 8);
  for (BodyKind kind : kAllKinds) {
    for (int n = 1; n <= n_geo; ++n) {
      const ConvexBody body = standard_body(kind, n);
      for (double O : {body.axis_min(), standard_center(body)}) {
        for (double lambda : {0.3, 0.8, 1.2, 2.0, 3.0}) {
          const SceneCenters c = scene_centers(make_scene(body, O, lambda));
          // Distances formed in long double so the check adds no cancellation.
          const long double image = O + static_cast<long double>(lambda) * (c.A - static_cast<long double>(O));
          const long double d_ab = std::fabs(static_cast<long double>(c.B) - c.A);
          const long double err = std::fabs(std::pow(static_cast<long double>(lambda), n) * std::fabs(c.B - image) - d_ab);
          lever.non_strict(static_cast<double>(1e-12L * std::max(1.0L, d_ab) - err));
        }
        const double nd = n;
        const std::pair<double, CenterOrdering> cases[] = {
            {1.0 + 2.0 / nd, CenterOrdering::FarAbove},  {1.0 + 1.0 / nd, CenterOrdering::Threshold},
            {1.0 + 0.5 / nd, CenterOrdering::NearAbove}, {1.0, CenterOrdering::Identity},
            {0.5, CenterOrdering::Contraction},
        };
        for (const auto& [lambda, expected] : cases) {
          const DilationScene s = make_scene(body, O, lambda);
          ordering.logical(center_ordering(s) == expected && ordering_chain_holds(scene_centers(s), expected));
        }
        const double b1 = b_one(body, O);
        for (double lambda : {1.0 - 1e-5, 1.0 + 1e-5}) {
          limit.non_strict(1e-4 - std::fabs(shell_centroid(make_scene(body, O, lambda)) - b1));
        }
      }
      const ConvexBody ball = ConvexBody::ball(n, 1.0, 1.0);
      for (double p : {1.0 / n + 0.05, 0.75, 1.0, 2.0, 3.5}) {
        if (p <= 1.0 / n) continue;
        const double lambda = lambda_from_p(n, p);
        const SceneCenters c = scene_centers(make_scene(ball, 0.0, lambda));
        round_trip.non_strict(1e-10 - std::fabs((c.B - c.A) / (c.A - c.O) - p));
        const SceneCenters s = scene_centers(make_scene(ball, 2.0, 1.0 / lambda));
        round_trip_sub.non_strict(1e-10 - std::fabs((s.B - s.image_A) / (s.image_A - s.O) - p));
      }
    }
  }
  for (BodyKind kind : {BodyKind::Cone, BodyKind::Pyramid}) {
    for (int n = 1; n <= n_geo; ++n) ratio.logical(centroid_ratio_theorem_check(kind, n));
  }

  const auto scenes = canonical_mc_scenes();
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const McEstimate e = mc_centroid(scenes[i], opt.seed, opt.mc_samples, opt.threads);
    mc.non_strict(4.0 * e.stderr_ - std::fabs(e.estimate - shell_centroid(scenes[i])));
  }

  for (int m = 1; m <= 3; ++m) {
    double prev_margin = 0.0;
    for (int n = 1; n <= std::max(5, std::min(opt.n_max, 10)); ++n) {
      const BallRepresentation r = ball_representation(m, n);
      ball_rep.non_strict(r.intersection - 2.0 * m);
      ball_rep.strict(r.intersection_margin);
      if (n > 1) ball_rep.strict(prev_margin - r.intersection_margin);
      prev_margin = r.intersection_margin;
    }
  }
  for (int m = 1; m <= opt.m_max; ++m) {
    for (int n = 1; n <= opt.n_max; ++n) {
      const ConeRepresentation r = cone_representation(m, n);
      cone_rep.non_strict(r.image_centroid - 0.5);
      cone_rep.strict(r.image_centroid_margin);
    }
  }
  return {lever, ordering, round_trip, round_trip_sub, limit, ratio, mc, ball_rep, cone_rep};
}

}  // namespace

void CheckFamily::strict(double margin) { merge_margin(*this, margin, margin > 0.0); }
void CheckFamily::non_strict(double margin) { merge_margin(*this, margin, margin >= 0.0); }
void CheckFamily::logical(bool ok) {
  ++checks;
  if (!ok) ++violations;
}

bool VerifyReport::passed() const {
  for (const auto& f : families) {
    if (!f.passed()) return false;
  }
  return !families.empty();
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& f : families) {
    char margin[32] = "-";
    if (f.has_margin) std::snprintf(margin, sizeof margin, "%.6g", f.worst_margin);
    out << (f.passed() ? "PASS" : "FAIL") << "  " << f.name << "  checks=" << f.checks
        << " violations=" << f.violations << " worst_margin=" << margin << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << "  suite " << suite << '\n';
  return out.str();
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Bounds: return "bounds";
    case Suite::Monotone: return "monotone";
    case Suite::Geometry: return "geometry";
    case Suite::Appendices: return "appendices";
    case Suite::All: return "all";
  }
  return "unknown";
}

Suite suite_from_string(std::string_view name) {
  for (Suite s : {Suite::Bounds, Suite::Monotone, Suite::Geometry, Suite::Appendices, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<DilationScene> canonical_mc_scenes() {
  const double phi = kGoldenRatio;
  return {
      make_scene(ConvexBody::ball(2, 1.0, 1.0), 0.0, 2.0),
      make_scene(ConvexBody::cube(3, 1.0, 0.0), 0.0, 1.5),
      make_scene(ConvexBody::ball(2, 1.0, 1.0), 0.0, 0.5),
      make_scene(ConvexBody::ball(1, 1.0, 1.0), 0.0, 1.5),
      make_scene(ConvexBody::ball(3, 1.0, 1.0), 0.5, 1.3),
      make_scene(ConvexBody::cube(2, 1.0, 0.0), 0.25, 0.7),
      make_scene(ConvexBody::cone(2, 1.0, 1.0, 0.0), 0.0, 1.2),
      make_scene(ConvexBody::cone(2, 1.0, 1.0, 0.0), 1.0 / 3.0, phi),
      make_scene(ConvexBody::pyramid(3, 1.0, 1.0, 0.0), 0.0, 1.4),
      make_scene(ConvexBody::pyramid(4, 1.0, 1.0, 0.0), 0.3, 0.8),
      make_scene(ConvexBody::cone(5, 1.0, 1.0, 0.0), 0.5, 2.0),
      make_scene(ConvexBody::ball(4, 1.0, 1.0), 0.2, 3.0),
  };
}

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
  if (options.m_max < 2 || options.n_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "verify needs m_max >= 2 and n_max >= 1");
  }
  VerifyReport report;
  report.suite = std::string(to_string(suite));
  auto append = [&](std::vector<CheckFamily> families) {
    for (auto& f : families) add_if_used(report.families, std::move(f));
  };
  if (suite == Suite::Bounds || suite == Suite::All) append(bounds_suite(options));
  if (suite == Suite::Monotone || suite == Suite::All) append(monotone_suite(options));
  if (suite == Suite::Appendices || suite == Suite::All) append(appendices_suite(options));
  if (suite == Suite::Geometry || suite == Suite::All) append(geometry_suite(options));
  return report;
}

}  // namespace anacci

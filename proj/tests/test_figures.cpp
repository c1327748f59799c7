#include "anacci/csv.hpp"
#include "anacci/error.hpp"
#include "anacci/figures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace anacci;

namespace {

const Table& find(const std::vector<Table>& tables, const std::string& name) {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw std::runtime_error("missing table " + name);
}

double at(const std::vector<Cell>& row, std::size_t i) {
  if (const auto* d = std::get_if<double>(&row[i])) return *d;
  return static_cast<double>(std::get<long long>(row[i]));
}

}  // namespace

TEST(Csv, Formatting) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(INFINITY), "inf");
  Table t{"t", {"a", "b,c"}, {}};
  t.add_row({Cell{1.5}, Cell{std::string("x\"y")}});
  t.add_row({Cell{7LL}, Cell{std::string("plain")}});
  EXPECT_EQ(t.to_csv(), "a,\"b,c\"\n1.5,\"x\"\"y\"\n7,plain\n");
  EXPECT_THROW(t.add_row({Cell{1.0}}), Error);
}

TEST(Csv, SeventeenDigitsRoundTrip) {
  for (double x : {1.6180339887498949, 1.0 / 3.0, 1e-300, 123456789.123456789}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(Grid, Validation) {
  EXPECT_THROW((GridSpec{1.0, 1.0, 5, 0.0, 1.0, 5}.validate()), Error);
  EXPECT_THROW((GridSpec{0.0, 1.0, 1, 0.0, 1.0, 5}.validate()), Error);
  EXPECT_NO_THROW((GridSpec{0.0, 1.0, 2, 0.0, 1.0, 2}.validate()));
  const GridSpec g = default_grid(FigureId::Fig3);
  EXPECT_EQ(g.p_at(0), 0.0);
  EXPECT_EQ(g.p_at(g.p_steps - 1), 3.0);
  EXPECT_EQ(g.q_at(g.q_steps - 1), 4.1);
  EXPECT_THROW(figure_tables(FigureId::Fig1, GridSpec{0.0, 2.0, 5, 0.1, 4.0, 5}), Error);
  EXPECT_THROW(figure_from_string("fig4"), Error);
}

TEST(Fig1, ZeroCurveAndMarks) {
  const auto tables = figure_tables(FigureId::Fig1);
  const Table& surface = find(tables, "fig1_surface");
  EXPECT_EQ(surface.rows.size(), 2500u);
  const Table& marks = find(tables, "fig1_marks");
  ASSERT_EQ(marks.rows.size(), 4u);
  EXPECT_EQ(at(marks.rows[0], 1), 1.0);
  EXPECT_NEAR(at(marks.rows[1], 1), 1.6180339887498949, 1e-15);
  for (const auto& row : marks.rows) EXPECT_NEAR(at(row, 2), 0.0, 1e-13);
  const Table& zero = find(tables, "fig1_zero_curve");
  EXPECT_EQ(zero.rows.size(), 50u);
}

TEST(Fig2, CurveAOneStartsAtOneAndStaysBelowTwo) {
  const auto tables = figure_tables(FigureId::Fig2);
  const Table& curves = find(tables, "fig2_curves");
  std::map<int, int> per_curve;
  bool first = true;
  for (const auto& row : curves.rows) {
    const double a = at(row, 0);
    per_curve[static_cast<int>(std::lround(3 * a))]++;
    if (std::fabs(a - 1.0) > 1e-12) continue;
    if (first) {
      EXPECT_EQ(at(row, 1), 1.0);
      EXPECT_EQ(at(row, 2), 1.0);
      first = false;
    }
    EXPECT_LT(at(row, 2), 2.0);
  }
  EXPECT_FALSE(first);
  EXPECT_EQ(per_curve.size(), 7u);
  // Last a = 1 sample is lambda(1, 4).
  for (const auto& row : curves.rows) {
    if (std::fabs(at(row, 0) - 1.0) < 1e-12 && at(row, 1) == 4.0) {
      EXPECT_NEAR(at(row, 2), 1.9275619754829253, 1e-14);
    }
  }
  // Each curve starts at lambda(a, 1) = a.
  for (const auto& row : curves.rows) {
    if (at(row, 1) == 1.0) {
      EXPECT_NEAR(at(row, 2), at(row, 0), 1e-14);
    }
  }
  const Table& cross = find(tables, "fig2_crossover");
  for (const auto& row : cross.rows) {
    const double q = at(row, 0), p = at(row, 1);
    EXPECT_NEAR((p + 1) * (p + 1) - 1, q, 1e-12);
  }
}

TEST(Fig3, LevelCurveOneIsTheHyperbola) {
  const auto tables = figure_tables(FigureId::Fig3);
  const Table& levels = find(tables, "fig3_levels");
  int hits = 0;
  for (const auto& row : levels.rows) {
    if (at(row, 0) != 1.0) continue;
    ++hits;
    EXPECT_NEAR(at(row, 1) * at(row, 2), 1.0, 1e-10);
  }
  EXPECT_GT(hits, 10);
  const Table& surface = find(tables, "fig3_surface");
  for (const auto& row : surface.rows) {
    EXPECT_LE(at(row, 2), at(row, 3));
    if (at(row, 0) == 0.0 || at(row, 1) == 0.0) {
      EXPECT_EQ(at(row, 2), 0.0);
    }
  }
}

TEST(Fig5, IntersectionPoints) {
  const auto tables = figure_tables(FigureId::Fig5);
  const Table& t = tables[0];
  EXPECT_EQ(t.rows.size(), 15u);
  for (const auto& row : t.rows) {
    const double m = at(row, 0);
    EXPECT_GE(at(row, 6), 2 * m);
    EXPECT_LT(at(row, 6), 2 * m + 2);
    if (at(row, 0) == 1 && at(row, 1) == 2) {
      EXPECT_NEAR(at(row, 6), 3.2360679774997898, 1e-14);
    }
  }
}

TEST(Fig6And7, Scenes) {
  const auto fig6 = figure_tables(FigureId::Fig6);
  const Table& c6 = find(fig6, "fig6_centers");
  EXPECT_NEAR(at(c6.rows[0], 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(at(c6.rows[2], 1), 0.872677996249965, 1e-14);
  EXPECT_NEAR(at(c6.rows[3], 1), 1.0, 1e-14);
  const auto fig7 = figure_tables(FigureId::Fig7);
  const Table& c7 = find(fig7, "fig7_centers");
  EXPECT_EQ(at(c7.rows[0], 1), 0.0);
  EXPECT_NEAR(at(c7.rows[1], 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(at(c7.rows[2], 1), 0.8, 1e-15);
  EXPECT_NEAR(at(c7.rows[4], 1), 1.0, 1e-15);
  EXPECT_GT(at(c7.rows[3], 1), 1.0);
  EXPECT_LT(at(c7.rows[3], 1), 1.2);
}

TEST(Figures, ByteStableAcrossRunsAndThreads) {
  for (FigureId id : {FigureId::Fig1, FigureId::Fig2, FigureId::Fig3, FigureId::Fig5, FigureId::Fig6, FigureId::Fig7}) {
    const auto a = figure_tables(id, 1);
    const auto b = figure_tables(id, 4);
    const auto c = figure_tables(id, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].to_csv(), b[i].to_csv());
      EXPECT_EQ(b[i].to_csv(), c[i].to_csv());
    }
  }
}

#pragma once

#include "anacci/csv.hpp"

#include <string_view>
#include <vector>

namespace anacci {

/// Sampling window for the grid figures. The first axis is p, except for fig1
/// where it is lambda.
struct GridSpec {
  double p_min = 0.0;
  double p_max = 1.0;
  int p_steps = 2;
  double q_min = 0.0;
  double q_max = 1.0;
  int q_steps = 2;

  /// Throws Error(InvalidSpec) unless min < max and steps >= 2 on both axes.
  void validate() const;
  double p_at(int i) const;
  double q_at(int j) const;
};

enum class FigureId { Fig1, Fig2, Fig3, Fig5, Fig6, Fig7 };

std::string_view to_string(FigureId id) noexcept;
FigureId figure_from_string(std::string_view name);

/// Window used when the caller gives none:
///   fig1  lambda in [0.04, 2] x q in [0.08, 4]
///   fig2  a in [2/3, 8/3] (7 curves) x q in [1, 4]
///   fig3  p in [0, 3] x q in [0, 4.1]
/// fig5..fig7 are fixed scenes and ignore the grid.
GridSpec default_grid(FigureId id);

/// Plot-ready tables for a figure, in a fixed order with fixed row order.
/// Grid cells run on `threads` workers (0 = hardware count); the output does
/// not depend on the thread count.
std::vector<Table> figure_tables(FigureId id, const GridSpec& grid, unsigned threads = 0);
std::vector<Table> figure_tables(FigureId id, unsigned threads = 0);

}  // namespace anacci

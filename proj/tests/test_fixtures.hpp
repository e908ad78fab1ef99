#pragma once

#include "tabrw/diagrams.hpp"

// Worked diagrams used across several suites.
namespace fixtures {

using tabrw::Column;
using tabrw::StringOfColumns;

// Skew tableau with reading 3121312.
inline StringOfColumns intro_skew() {
  return StringOfColumns({Column{1, 3}, Column{1, 2}, Column{1, 3}, Column{2}}, {1, 1, 1});
}

// Young tableau with rows 1112 / 23 / 3, reading 3213112.
inline StringOfColumns intro_young() {
  return StringOfColumns({Column{1, 2, 3}, Column{1, 3}, Column{1}, Column{2}}, {2, 1, 1});
}

// Quasi-ribbon with reading 1165687689.
inline StringOfColumns intro_quasi_ribbon() {
  return StringOfColumns(
      {Column{1}, Column{1}, Column{5, 6}, Column{6}, Column{6, 7, 8}, Column{8}, Column{9}},
      {1, 2, 2, 3, 3, 1});
}

// Young tableau rectified in section 5's running example.
inline StringOfColumns rbt_source_young() {
  return StringOfColumns({Column{1, 2, 3, 5}, Column{2, 3, 4}, Column{3, 4}, Column{4}},
                         {3, 2, 1});
}

// Its quasi-ribbon normal form, reading 2132343454.
inline StringOfColumns rbt_target_qr() {
  return StringOfColumns(
      {Column{1, 2}, Column{2, 3}, Column{3}, Column{3, 4}, Column{4}, Column{4, 5}},
      {3, 2, 2, 2, 2});
}

// Crystal example diagram over [4].
inline StringOfColumns crystal_example() {
  return StringOfColumns(
      {Column{1, 2, 4}, Column{1, 3}, Column{1, 4}, Column{2, 4}, Column{2}, Column{3}},
      {1, 1, 2, 2, 1});
}

}  // namespace fixtures

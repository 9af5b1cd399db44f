#pragma once

#include "sudoku/coloring.hpp"
#include "sudoku/deadline.hpp"
#include "sudoku/error.hpp"
#include "sudoku/extension.hpp"
#include "sudoku/graph.hpp"
#include "sudoku/sn_solver.hpp"
#include "sudoku/witness.hpp"

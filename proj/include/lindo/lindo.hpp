#ifndef LINDO_LINDO_HPP
#define LINDO_LINDO_HPP

#include "lindo/annotated.hpp"
#include "lindo/bitset.hpp"
#include "lindo/cnf.hpp"
#include "lindo/domino.hpp"
#include "lindo/error.hpp"
#include "lindo/generate.hpp"
#include "lindo/graph.hpp"
#include "lindo/kernelize.hpp"
#include "lindo/obstruction.hpp"
#include "lindo/reduction.hpp"
#include "lindo/solver.hpp"

#endif

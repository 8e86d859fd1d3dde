#pragma once

#include "error.hpp"
#include "universe.hpp"
#include "describable_set.hpp"
#include "text.hpp"
#include "matrix_spec.hpp"
#include "words.hpp"
#include "graph.hpp"
#include "spectrum.hpp"
#include "sampling.hpp"
#include "graph_analysis.hpp"
#include "dynamics.hpp"
#include "diagonal_algebra.hpp"
#include "representation.hpp"
#include "analyzer.hpp"

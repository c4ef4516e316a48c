#pragma once

#include "tfp/bracket.hpp"
#include "tfp/error.hpp"
#include "tfp/exact_solver.hpp"
#include "tfp/generator.hpp"
#include "tfp/io.hpp"
#include "tfp/matching.hpp"
#include "tfp/player_set.hpp"
#include "tfp/reductions.hpp"
#include "tfp/structure.hpp"
#include "tfp/tournament.hpp"
#include "tfp/width_params.hpp"

#ifndef GLAB_GLAB_HPP
#define GLAB_GLAB_HPP

#include "glab/davie_reeds.hpp"
#include "glab/discretized.hpp"
#include "glab/game_eval.hpp"
#include "glab/report.hpp"
#include "glab/rng.hpp"
#include "glab/search.hpp"
#include "glab/special_functions.hpp"
#include "glab/strip_games.hpp"

#endif  // GLAB_GLAB_HPP

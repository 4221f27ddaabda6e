#pragma once

#include "infbraid/artin_action.hpp"
#include "infbraid/braid_word.hpp"
#include "infbraid/dagger.hpp"
#include "infbraid/equivalence.hpp"
#include "infbraid/free_word.hpp"
#include "infbraid/garside.hpp"
#include "infbraid/generalized_braid.hpp"
#include "infbraid/geometry.hpp"
#include "infbraid/handle_reduction.hpp"
#include "infbraid/omega_tower.hpp"
#include "infbraid/permutation.hpp"
#include "infbraid/pl_braid.hpp"
#include "infbraid/pl_io.hpp"
#include "infbraid/render.hpp"
#include "infbraid/tower_io.hpp"

#pragma once

#include "strongcolor/bitset.hpp"
#include "strongcolor/certificates.hpp"
#include "strongcolor/clique.hpp"
#include "strongcolor/coloring.hpp"
#include "strongcolor/conflict.hpp"
#include "strongcolor/deadline.hpp"
#include "strongcolor/fractional.hpp"
#include "strongcolor/generators.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/lemma1_instance.hpp"
#include "strongcolor/lp/revised_simplex.hpp"
#include "strongcolor/weighted_independent_set.hpp"
#include "strongcolor/sweep.hpp"

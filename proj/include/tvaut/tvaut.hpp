#pragma once

#include "automaton.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "element.hpp"
#include "engine.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "permutation.hpp"

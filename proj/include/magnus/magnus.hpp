#pragma once

// Umbrella header for the whole library.

#include "magnus/corpus.hpp"
#include "magnus/cylinders.hpp"
#include "magnus/errors.hpp"
#include "magnus/exponent.hpp"
#include "magnus/fox.hpp"
#include "magnus/gcd.hpp"
#include "magnus/homology.hpp"
#include "magnus/invariants.hpp"
#include "magnus/laurent.hpp"
#include "magnus/matrix.hpp"
#include "magnus/presentation.hpp"
#include "magnus/rational.hpp"
#include "magnus/rational_function.hpp"
#include "magnus/serialize.hpp"
#include "magnus/word.hpp"

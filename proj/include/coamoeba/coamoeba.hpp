#pragma once

#include "rational.hpp"
#include "laurent.hpp"
#include "free_complex.hpp"
#include "exponent_sets.hpp"
#include "linear_algebra.hpp"
#include "lp.hpp"
#include "geometry.hpp"
#include "torus_complex.hpp"
#include "recovery.hpp"
#include "mirror_complex.hpp"
#include "dimer.hpp"
#include "document.hpp"
#include "export.hpp"

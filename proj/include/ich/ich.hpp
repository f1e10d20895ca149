#pragma once

// Umbrella header: the whole library.

#include "ich/category.hpp"
#include "ich/codec.hpp"
#include "ich/geometry.hpp"
#include "ich/instance.hpp"
#include "ich/json_io.hpp"
#include "ich/rational.hpp"
#include "ich/sigraph.hpp"
#include "ich/simbench.hpp"
#include "ich/simplex.hpp"
#include "ich/util.hpp"
#include "ich/vectorcolor.hpp"
#include "ich/xorcolor.hpp"

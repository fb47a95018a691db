#pragma once

#include "value.hpp"
#include "formula.hpp"
#include "laws.hpp"
#include "derivations.hpp"
#include "characters.hpp"
#include "f2.hpp"
#include "cohomology.hpp"
#include "two_slit.hpp"
#include "serialize.hpp"

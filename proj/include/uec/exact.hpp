#pragma once

#include "uec/exact/character.hpp"
#include "uec/exact/concentrate.hpp"
#include "uec/exact/measure.hpp"
#include "uec/exact/permutation.hpp"
#include "uec/exact/schur_transform.hpp"
#include "uec/exact/state.hpp"

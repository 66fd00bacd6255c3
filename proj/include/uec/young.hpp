#pragma once

#include "uec/young/dimension.hpp"
#include "uec/young/distribution.hpp"
#include "uec/young/partition.hpp"
#include "uec/young/rsk.hpp"
#include "uec/young/schur.hpp"
#include "uec/young/spectrum.hpp"

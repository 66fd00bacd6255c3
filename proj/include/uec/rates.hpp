#pragma once

#include "uec/rates/curve.hpp"
#include "uec/rates/entropy.hpp"
#include "uec/rates/exponent.hpp"
#include "uec/rates/lemma3.hpp"
#include "uec/rates/primal.hpp"
#include "uec/rates/tail.hpp"

#pragma once

#include "uec/proto/dense.hpp"
#include "uec/proto/teleport.hpp"
#include "uec/proto/weyl.hpp"
#include "uec/proto/yield.hpp"

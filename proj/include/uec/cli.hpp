#pragma once

#include "uec/cli/app.hpp"

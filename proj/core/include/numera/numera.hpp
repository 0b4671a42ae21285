#pragma once

// Umbrella header; users normally include only this.

#include "numera/analysis.hpp"
#include "numera/arithmetic.hpp"
#include "numera/codec.hpp"
#include "numera/errors.hpp"
#include "numera/integer.hpp"
#include "numera/system.hpp"
#include "numera/system_io.hpp"
#include "numera/unicode.hpp"

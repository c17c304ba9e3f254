#pragma once

#include "arith.hpp"
#include "cobordism.hpp"
#include "contfrac.hpp"
#include "errors.hpp"
#include "lens.hpp"
#include "plumbing.hpp"
#include "rational.hpp"
#include "surgery.hpp"
#include "twobridge.hpp"

#pragma once

#include "mingen/error.hpp"
#include "mingen/validation.hpp"
#include "mingen/group.hpp"
#include "mingen/group_io.hpp"
#include "mingen/cayley.hpp"
#include "mingen/components.hpp"
#include "mingen/genset.hpp"
#include "mingen/oracle.hpp"
#include "mingen/trace_io.hpp"

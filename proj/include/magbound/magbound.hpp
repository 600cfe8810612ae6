#pragma once

#include "magbound/errors.hpp"
#include "magbound/units.hpp"
#include "magbound/special.hpp"
#include "magbound/landau.hpp"
#include "magbound/bound_state.hpp"
#include "magbound/current.hpp"
#include "magbound/zero_field.hpp"
#include "magbound/field_io.hpp"
#include "magbound/verify.hpp"

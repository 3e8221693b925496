#pragma once

#include "volterra/calculus.hpp"
#include "volterra/causality.hpp"
#include "volterra/deform.hpp"
#include "volterra/errors.hpp"
#include "volterra/fit.hpp"
#include "volterra/gaussian.hpp"
#include "volterra/heat_expansion.hpp"
#include "volterra/kernel.hpp"
#include "volterra/operator_spec.hpp"
#include "volterra/parallel.hpp"
#include "volterra/quadratic_form.hpp"
#include "volterra/semigroup.hpp"
#include "volterra/symbol.hpp"
#include "volterra/trig_polynomial.hpp"

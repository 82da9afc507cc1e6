#pragma once

#include "biped/closedform.hpp"
#include "biped/continuation.hpp"
#include "biped/dynamics.hpp"
#include "biped/errors.hpp"
#include "biped/integrate.hpp"
#include "biped/melnikov.hpp"
#include "biped/poincare.hpp"
#include "biped/types.hpp"

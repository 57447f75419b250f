#pragma once

#include "hcu/boundary.hpp"
#include "hcu/cases.hpp"
#include "hcu/config.hpp"
#include "hcu/cu_flux.hpp"
#include "hcu/errors.hpp"
#include "hcu/euler.hpp"
#include "hcu/field.hpp"
#include "hcu/grid.hpp"
#include "hcu/lcd_flux.hpp"
#include "hcu/parallel.hpp"
#include "hcu/physics.hpp"
#include "hcu/postprocess.hpp"
#include "hcu/reconstruct.hpp"
#include "hcu/snapshot.hpp"
#include "hcu/source.hpp"
#include "hcu/stepper.hpp"
#include "hcu/study.hpp"
#include "hcu/vec.hpp"

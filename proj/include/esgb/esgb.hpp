#pragma once

#include "esgb/errors.hpp"
#include "esgb/field_equations.hpp"
#include "esgb/initial_data.hpp"
#include "esgb/dormand_prince.hpp"
#include "esgb/integrator.hpp"
#include "esgb/envelopes.hpp"
#include "esgb/oracles.hpp"
#include "esgb/monitor.hpp"
#include "esgb/trajectory_csv.hpp"
#include "esgb/svg_plot.hpp"
#include "esgb/commands.hpp"

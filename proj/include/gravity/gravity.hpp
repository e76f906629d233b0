#pragma once

// Umbrella header.
#include "gravity/errors.hpp"
#include "gravity/random.hpp"
#include "gravity/panel.hpp"
#include "gravity/model.hpp"
#include "gravity/distributions.hpp"
#include "gravity/ols.hpp"
#include "gravity/results.hpp"
#include "gravity/estimators.hpp"
#include "gravity/diagnostics.hpp"
#include "gravity/unitroot.hpp"
#include "gravity/csv.hpp"
#include "gravity/ingest.hpp"
#include "gravity/worldbank.hpp"
#include "gravity/synth.hpp"
#include "gravity/report.hpp"
#include "gravity/config.hpp"
#include "gravity/pipeline.hpp"

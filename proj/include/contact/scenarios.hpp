#pragma once

#include "contact/scenarios/catalog.hpp"
#include "contact/scenarios/checks.hpp"
#include "contact/scenarios/run.hpp"
#include "contact/scenarios/scenario.hpp"

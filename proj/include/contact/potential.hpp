#pragma once

#include "contact/potential/average.hpp"
#include "contact/potential/checks.hpp"
#include "contact/potential/frame.hpp"
#include "contact/potential/partition.hpp"
#include "contact/potential/sweep.hpp"

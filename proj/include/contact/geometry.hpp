#pragma once

#include "contact/geometry/chart.hpp"
#include "contact/geometry/forms.hpp"

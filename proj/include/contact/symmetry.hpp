#pragma once

#include "contact/symmetry/action.hpp"
#include "contact/symmetry/group.hpp"
#include "contact/symmetry/invariance.hpp"
#include "contact/symmetry/isotropy.hpp"

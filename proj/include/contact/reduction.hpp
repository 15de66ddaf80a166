#pragma once

#include "contact/reduction/contact.hpp"
#include "contact/reduction/kahler.hpp"
#include "contact/reduction/kappa.hpp"
#include "contact/reduction/quotient.hpp"
#include "contact/reduction/strata.hpp"
#include "contact/reduction/symplectify.hpp"
